#include "varbound/matrix_radii.hpp"

#include "varbound/convex2d.hpp"
#include "varbound/random.hpp"
#include "varbound/scalar_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace varbound {

namespace {

void require_square(const ComplexMatrix& x, const char* what) {
    if (!x.is_square()) throw std::invalid_argument(std::string(what) + " requires a square matrix");
}

void require_dims(const ComplexMatrix& x, const DensityMatrix& rho) {
    require_square(x, "quantum variance");
    if (x.rows() != rho.dim()) throw std::invalid_argument("matrix and density matrix dimensions differ");
}

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) s += (a(i, k) * b(k, i)).real();
    return s;
}

bool is_scalar_matrix(const ComplexMatrix& x, cplx& scalar) {
    scalar = x.trace() / static_cast<double>(x.rows());
    return shifted(x, scalar).max_abs() <= 1e-14 * (1.0 + std::abs(scalar));
}

// Re(e^{i theta} X)
HermitianMatrix rotated_real_part(const ComplexMatrix& x, double theta) {
    ComplexMatrix m = std::polar(1.0, theta) * x;
    m += m.adjoint();
    m *= 0.5;
    return HermitianMatrix(m);
}

//
// Pure-state variance f(psi) = <psi,H psi> - |<psi,X psi>|^2 and its ascent.
//
class VarianceAscent {
public:
    VarianceAscent(const ComplexMatrix& x, ModulusKind kind)
        : x_(x), xa_(x.adjoint()), h_(modulus_squared(x, kind).matrix()) {
        scale_ = 1.0 + h_.frobenius_norm();
    }

    double value(std::span<const cplx> psi) const {
        const double hh = inner(psi, h_ * psi).real();
        return hh - std::norm(inner(psi, x_ * psi));
    }

    // returns the local maximum reached from psi
    std::pair<double, std::vector<cplx>> climb(std::vector<cplx> psi) const {
        normalize(psi);
        double f = value(psi);
        double step = 0.25 / scale_;
        const std::size_t d = psi.size();
        std::vector<cplx> trial(d);
        for (int it = 0; it < 4000; ++it) {
            const auto hp = h_ * std::span<const cplx>(psi);
            const auto xp = x_ * std::span<const cplx>(psi);
            const auto xap = xa_ * std::span<const cplx>(psi);
            const cplx m = inner(psi, xp);
            std::vector<cplx> g(d);
            for (std::size_t i = 0; i < d; ++i) g[i] = 2.0 * (hp[i] - std::conj(m) * xp[i] - m * xap[i]);
            const double radial = inner(psi, g).real();
            for (std::size_t i = 0; i < d; ++i) g[i] -= radial * psi[i];
            const double gnorm = norm2(g);
            if (gnorm <= 1e-14 * scale_) break;

            bool moved = false;
            while (step * gnorm > 1e-17) {
                for (std::size_t i = 0; i < d; ++i) trial[i] = psi[i] + step * g[i];
                normalize(trial);
                const double ft = value(trial);
                if (ft >= f) {
                    moved = ft > f;
                    psi.swap(trial);
                    f = ft;
                    step *= 1.6;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        return {f, std::move(psi)};
    }

    const ComplexMatrix& x() const { return x_; }

private:
    static void normalize(std::vector<cplx>& v) {
        const double n = norm2(v);
        for (auto& z : v) z /= n;
    }

    ComplexMatrix x_;
    ComplexMatrix xa_;
    ComplexMatrix h_;
    double scale_;
};

// w(X - z 1) with the support function of X tabulated on a grid
class SupportFunction {
public:
    static constexpr int kGrid = 360;

    explicit SupportFunction(const ComplexMatrix& x) : x_(x), h_(kGrid) {
        for (int k = 0; k < kGrid; ++k) h_[k] = lambda_max(rotated_real_part(x, -angle(k)));
    }

    struct Eval {
        double value;
        double theta;
    };

    // max_theta [h(theta) - Re(e^{-i theta} z)], refining the `arcs` best grid cells
    Eval evaluate(cplx z, int arcs) const {
        std::vector<std::pair<double, int>> grid(kGrid);
        for (int k = 0; k < kGrid; ++k) grid[k] = {h_[k] - shift_term(angle(k), z), k};
        std::partial_sort(grid.begin(), grid.begin() + arcs, grid.end(), std::greater<>());
        Eval best{grid[0].first, angle(grid[0].second)};
        const double half = 2.0 * M_PI / kGrid;
        for (int a = 0; a < arcs; ++a) {
            const double mid = angle(grid[a].second);
            auto phi = [&](double t) { return lambda_max(rotated_real_part(x_, -t)) - shift_term(t, z); };
            const auto r = golden_max(phi, mid - half, mid + half);
            if (r.value > best.value) best = r;
        }
        return best;
    }

private:
    static double angle(int k) { return 2.0 * M_PI * k / kGrid; }
    static double shift_term(double t, cplx z) { return std::cos(t) * z.real() + std::sin(t) * z.imag(); }

    template <class F>
    static Eval golden_max(F&& phi, double lo, double hi) {
        const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = lo, b = hi;
        double c = b - ratio * (b - a), d = a + ratio * (b - a);
        double fc = phi(c), fd = phi(d);
        for (int it = 0; it < 44; ++it) {
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - ratio * (b - a);
                fc = phi(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + ratio * (b - a);
                fd = phi(d);
            }
        }
        return fc >= fd ? Eval{fc, c} : Eval{fd, d};
    }

    const ComplexMatrix& x_;
    std::vector<double> h_;
};

}  // namespace

double quantum_variance(const ComplexMatrix& x, const DensityMatrix& rho, ModulusKind kind) {
    require_dims(x, rho);
    const cplx m = expectation(x, rho);
    const auto h = modulus_squared(shifted(x, m), kind);
    return std::max(trace_product(rho.matrix(), h.matrix()), 0.0);
}

double quantum_variance_expanded(const ComplexMatrix& x, const DensityMatrix& rho, ModulusKind kind) {
    require_dims(x, rho);
    const auto h = modulus_squared(x, kind);
    return trace_product(rho.matrix(), h.matrix()) - std::norm(expectation(x, rho));
}

double pure_state_variance(const ComplexMatrix& x, std::span<const cplx> psi, ModulusKind kind) {
    require_square(x, "pure-state variance");
    UnitVector u(std::vector<cplx>(psi.begin(), psi.end()));
    const auto h = modulus_squared(x, kind);
    return inner(u.values(), h.matrix() * u.values()).real() - std::norm(expectation(x, u.values()));
}

double dual_objective(const ComplexMatrix& x, cplx y, ModulusKind kind) {
    require_square(x, "dual objective");
    return lambda_max(modulus_squared(shifted(x, y), kind));
}

MaxVarianceResult max_variance(const ComplexMatrix& x, ModulusKind kind, const MaxVarianceOptions& options) {
    require_square(x, "max_variance");
    if (options.restarts < 1) throw std::invalid_argument("max_variance needs restarts >= 1");
    const std::size_t d = x.rows();
    const VarianceAscent ascent(x, kind);

    std::vector<std::vector<cplx>> starts;
    starts.push_back(top_eigenpair(modulus_squared(x, kind)).vector);
    if (options.dual_shift) {
        // near-top eigenspace of |X - y* 1|^2 carries the optimal states
        const auto eig = hermitian_eig(modulus_squared(shifted(x, *options.dual_shift), kind));
        const double top = eig.values.front();
        std::size_t k = 0;
        while (k < d && eig.values[k] >= top - 1e-6 * (1.0 + std::abs(top))) ++k;
        for (std::size_t j = 0; j < k; ++j) starts.push_back(eig.vectors.column(j));
        if (k > 1) {
            Rng rng(derive_seed(options.seed, 0xe16e));
            for (int mix = 0; mix < 4 * static_cast<int>(k); ++mix) {
                std::vector<cplx> v(d, 0.0);
                for (std::size_t j = 0; j < k; ++j) {
                    const cplx c = rng.complex_normal();
                    for (std::size_t i = 0; i < d; ++i) v[i] += c * eig.vectors(i, j);
                }
                starts.push_back(std::move(v));
            }
        }
    }
    for (int r = 0; r < options.restarts; ++r) {
        Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
        const auto u = random_unit_vector(rng, d);
        starts.emplace_back(u.values().begin(), u.values().end());
    }

    double best = -std::numeric_limits<double>::infinity();
    std::vector<cplx> witness;
    for (auto& s : starts) {
        auto [f, psi] = ascent.climb(std::move(s));
        if (f > best) {
            best = f;
            witness = std::move(psi);
        }
    }
    return {std::max(best, 0.0), UnitVector(std::move(witness))};
}

RadiusResult radius(const ComplexMatrix& x, ModulusKind kind, const MaxVarianceOptions& options) {
    require_square(x, "radius");
    const std::size_t d = x.rows();
    cplx c;
    if (is_scalar_matrix(x, c)) {
        std::vector<cplx> e1(d, 0.0);
        e1[0] = 1.0;
        return {kind, c, 0.0, 0.0, UnitVector(std::move(e1)), 0.0, 0};
    }

    auto sample = [&](cplx y) {
        const auto top = top_eigenpair(modulus_squared(shifted(x, y), kind));
        const cplx m = expectation(x, top.vector);
        return ConvexSample{top.value, 2.0 * (y - m)};
    };
    // the minimizer lies in W(X), within ||X - c||_inf of c = Tr X / d
    const double reach = shifted(x, c).frobenius_norm();
    const auto dual = minimize_convex_2d(sample, c, 1.01 * reach, {0.0, 1e-14, 4000});
    if (!dual.converged) {
        throw ConvergenceError("radius: dual minimization stopped at y = (" + std::to_string(dual.point.real()) + ", " +
                               std::to_string(dual.point.imag()) + ") with gap " +
                               std::to_string(dual.value - dual.lower_bound));
    }

    MaxVarianceOptions primal_options = options;
    primal_options.dual_shift = dual.point;
    auto primal = max_variance(x, kind, primal_options);

    return {kind,
            dual.point,
            std::sqrt(std::max(dual.value, 0.0)),
            primal.value,
            std::move(primal.witness),
            dual.lower_bound,
            dual.iterations};
}

NumericalRangeSample numerical_range(const ComplexMatrix& x, int samples) {
    require_square(x, "numerical_range");
    if (samples < 8) throw std::invalid_argument("numerical_range needs at least 8 angles");
    NumericalRangeSample out;
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * M_PI * k / samples;
        const auto top = top_eigenpair(rotated_real_part(x, theta));
        out.angles.push_back(theta);
        out.support_values.push_back(top.value);
        out.boundary_points.push_back(expectation(x, top.vector));
    }
    return out;
}

double numerical_radius(const ComplexMatrix& x) {
    require_square(x, "numerical_radius");
    return SupportFunction(x).evaluate(0.0, 3).value;
}

CentralNumericalRadius central_numerical_radius(const ComplexMatrix& x) {
    require_square(x, "central_numerical_radius");
    cplx c;
    if (is_scalar_matrix(x, c)) return {c, 0.0};

    const auto range = numerical_range(x, SupportFunction::kGrid);
    const auto circle = enclosing_circle(PointSet(range.boundary_points));
    const SupportFunction support(x);
    auto sample = [&](cplx z) {
        const auto e = support.evaluate(z, 1);
        return ConvexSample{e.value, -std::polar(1.0, e.theta)};
    };
    const double reach = 1.5 * circle.radius + 1e-12 * (1.0 + std::abs(circle.center));
    const auto found = minimize_convex_2d(sample, circle.center, reach, {0.0, 1e-13, 3000});
    return {found.point, support.evaluate(found.point, 3).value};
}

RangeMembership membership_in_range(const ComplexMatrix& x, cplx z, int angles) {
    require_square(x, "membership_in_range");
    if (angles < 16) throw std::invalid_argument("membership test needs at least 16 angles");
    double margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < angles; ++k) {
        const double phi = 2.0 * M_PI * k / angles;
        const double support = lambda_max(rotated_real_part(x, phi));
        margin = std::min(margin, support - (std::polar(1.0, phi) * z).real());
    }
    return {margin >= -1e-8, margin};
}

}  // namespace varbound
