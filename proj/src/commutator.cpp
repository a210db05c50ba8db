#include "varbound/commutator.hpp"

#include "varbound/linalg.hpp"
#include "varbound/matrix_radii.hpp"
#include "varbound/norms.hpp"
#include "varbound/random.hpp"
#include "varbound/scalar_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace varbound {

namespace {

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

BoundEntry make_entry(std::string name, double value, double lhs) {
    const double slack = value - lhs;
    return {std::move(name), value, slack >= -1e-9 * (1.0 + std::abs(value)), slack};
}

ComplexMatrix unit_frobenius(ComplexMatrix m) {
    const double n = m.frobenius_norm();
    if (n > 0.0) m *= 1.0 / n;
    return m;
}

}  // namespace

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
        throw std::invalid_argument("commutator needs square matrices of equal dimension (" + describe(x) + ", " +
                                    describe(y) + ")");
    }
    return x * y - y * x;
}

double proof_identity_residual(const ComplexMatrix& x, const ComplexMatrix& y) {
    const ComplexMatrix c = commutator(x, y);
    const ComplexMatrix xa = x.adjoint(), ya = y.adjoint();
    const ComplexMatrix anti = xa * y + y * xa;
    const double lhs = std::pow(c.frobenius_norm(), 2) + std::pow(anti.frobenius_norm(), 2);
    const ComplexMatrix prod = (xa * x + x * xa) * (ya * y + y * ya);
    return std::abs(lhs - prod.trace().real());
}

DensityMatrix rho_from_x(const ComplexMatrix& x) {
    if (!x.is_square()) throw std::invalid_argument("rho_from_x needs a square matrix");
    const double fro = x.frobenius_norm();
    if (fro <= 1e-14) throw std::invalid_argument("rho_from_x needs a non-zero matrix");
    const ComplexMatrix xa = x.adjoint();
    ComplexMatrix rho = xa * x + x * xa;
    rho *= 1.0 / (2.0 * fro * fro);
    return DensityMatrix(rho);
}

void check_exponents(const Exponents& e) {
    if (!(e.p >= 1.0)) throw std::invalid_argument("exponent p must be >= 1");
    if (!(e.q >= 1.0)) throw std::invalid_argument("exponent q must be >= 1");
    if (!(e.r >= 1.0)) throw std::invalid_argument("exponent r must be >= 1");
    if (inv(e.p) > inv(e.q) + inv(e.r) + 1e-15) {
        throw std::invalid_argument("exponents violate 1/p <= 1/q + 1/r (got 1/p = " + std::to_string(inv(e.p)) +
                                    " > " + std::to_string(inv(e.q) + inv(e.r)) +
                                    "); no dimension-free constant exists, tensoring with identities makes the "
                                    "ratio grow without bound");
    }
}

std::optional<double> conjectured_constant(const Exponents& e) {
    if (e.p != e.q) return std::nullopt;
    return std::pow(2.0, std::max({inv(e.p), 1.0 - inv(e.p), 1.0 - inv(e.r)}));
}

std::optional<double> commutator_ratio(const ComplexMatrix& x, const ComplexMatrix& y, const Exponents& e) {
    const double denom = schatten_norm(x, e.q) * schatten_norm(y, e.r);
    if (denom < 1e-14) return std::nullopt;
    return schatten_norm(commutator(x, y), e.p) / denom;
}

BoundReport evaluate_bounds(const ComplexMatrix& x, const ComplexMatrix& y, const Exponents& e) {
    check_exponents(e);
    const ComplexMatrix c = commutator(x, y);
    BoundReport report{schatten_norm(c, e.p), {}, 0.0};
    const double xq = schatten_norm(x, e.q);
    const double yr = schatten_norm(y, e.r);
    report.ratio = xq * yr > 0.0 ? report.lhs / (xq * yr) : 0.0;

    const double x2 = schatten_norm(x, 2.0);
    const double y2 = schatten_norm(y, 2.0);
    if (e.p == 2.0 && e.q == 2.0 && e.r == 2.0) {
        report.bounds.push_back(make_entry("bw", std::sqrt(2.0) * x2 * y2, report.lhs));
    }
    if (std::abs(inv(e.p) - inv(e.q) - inv(e.r)) <= 1e-12) {
        report.bounds.push_back(make_entry("holder", 2.0 * xq * yr, report.lhs));
    }
    if (e.p == 2.0 && x2 > 1e-14) {
        const double var_c = quantum_variance(y, rho_from_x(x), ModulusKind::C);
        const double r_c = radius(y, ModulusKind::C).value;
        const double y22 = kyfan_pk_norm(y, 2.0, std::min<std::size_t>(2, y.rows()));
        const double last = std::pow(2.0, std::max(0.5, 1.0 - inv(e.r))) * x2 * yr;
        report.bounds.push_back(make_entry("chain.variance", 2.0 * x2 * std::sqrt(var_c), report.lhs));
        report.bounds.push_back(make_entry("chain.cartesian_radius", 2.0 * x2 * r_c, report.lhs));
        report.bounds.push_back(make_entry("chain.kyfan22", std::sqrt(2.0) * x2 * y22, report.lhs));
        report.bounds.push_back(make_entry("chain.schatten_r", last, report.lhs));

        if (is_normal(y)) {
            const double r_y = enclosing_circle(PointSet(normal_eigenvalues(y))).radius;
            const double y_kf2 = kyfan_norm(y, std::min<std::size_t>(2, y.rows()));
            report.bounds.push_back(make_entry("normal.radius", 2.0 * x2 * r_y, report.lhs));
            report.bounds.push_back(make_entry("normal.kyfan2", x2 * y_kf2, report.lhs));
            report.bounds.push_back(make_entry("normal.schatten_r", std::pow(2.0, 1.0 - inv(e.r)) * x2 * yr, report.lhs));
        }
    }
    return report;
}

ComplexMatrix rank1_x() {
    const double s = std::sqrt(2.0);
    ComplexMatrix m(2, 2, {s, -2.0 - s, 2.0 - s, -s});
    m *= 0.25;
    return m;
}

ComplexMatrix unitary_y() {
    ComplexMatrix m(2, 2, {1.0, 1.0, 1.0, -1.0});
    m *= 1.0 / std::sqrt(2.0);
    return m;
}

std::vector<WitnessFamily> witness_families(const Exponents& e) {
    if (!(e.p >= 1.0 && e.q >= 1.0 && e.r >= 1.0)) throw std::invalid_argument("exponents must be >= 1");
    const double ip = inv(e.p), iq = inv(e.q), ir = inv(e.r);
    std::vector<WitnessFamily> out;
    auto add = [&](std::string name, ComplexMatrix x, ComplexMatrix y, double exact) {
        const double ratio = *commutator_ratio(x, y, e);
        out.push_back({std::move(name), std::move(x), std::move(y), ratio, exact});
    };
    add("pauli", pauli_x(), pauli_z(), std::pow(2.0, 1.0 + ip - iq - ir));
    add("e12_e21", basis_matrix(1, 2, 2), basis_matrix(2, 1, 2), std::pow(2.0, ip));
    add("rank1_unitary", rank1_x(), unitary_y(), std::pow(2.0, 1.0 - ir));
    add("unitary_rank1", unitary_y(), rank1_x(), std::pow(2.0, 1.0 - iq));
    return out;
}

SearchResult search_constant(const Exponents& e, const std::vector<int>& dims, int trials, std::uint64_t seed) {
    check_exponents(e);
    if (trials < 1) throw std::invalid_argument("search needs trials >= 1");
    if (dims.empty()) throw std::invalid_argument("search needs at least one dimension");
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("search dimensions must be positive");

    SearchResult result;
    result.trials = trials;
    result.dims_tried = dims;
    result.seed = seed;
    result.conjectured = conjectured_constant(e);

    auto consider = [&](double ratio, const ComplexMatrix& x, const ComplexMatrix& y, const std::string& source) {
        if (ratio > result.best_ratio) {
            result.best_ratio = ratio;
            result.witness_x = x;
            result.witness_y = y;
            result.witness_source = source;
        }
    };
    for (auto& w : witness_families(e)) consider(w.ratio, w.x, w.y, "family:" + w.name);

    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const auto d = static_cast<std::size_t>(dims[rng.index(dims.size())]);
        const double u = rng.uniform();
        ComplexMatrix x, y;
        std::string source;
        if (u < 0.7) {
            x = random_ginibre(rng, d);
            y = random_ginibre(rng, d);
            source = "ginibre";
        } else if (u < 0.9) {
            x = random_normal(rng, d).matrix;
            y = random_normal(rng, d).matrix;
            source = "normal";
        } else {
            const std::size_t bd = result.witness_x.rows();
            auto perturb = [&](const ComplexMatrix& m) {
                ComplexMatrix g = random_ginibre(rng, bd);
                g *= 0.05 * m.frobenius_norm() / std::sqrt(static_cast<double>(bd * bd));
                return unit_frobenius(m + g);
            };
            x = perturb(result.witness_x);
            y = perturb(result.witness_y);
            source = "perturbation";
        }
        const auto ratio = commutator_ratio(x, y, e);
        if (!ratio) {
            ++result.skipped;
            continue;
        }
        consider(*ratio, x, y, source + ":trial" + std::to_string(t));
    }
    if (result.conjectured && result.best_ratio > *result.conjectured + 1e-6) result.exceeds_conjecture = true;
    return result;
}

}  // namespace varbound
