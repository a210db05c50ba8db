#include "varbound/commutator.hpp"
#include "varbound/linalg.hpp"
#include "varbound/matrix_radii.hpp"
#include "varbound/norms.hpp"
#include "varbound/scalar_geometry.hpp"
#include "varbound/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace varbound;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
    if (a.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
    const auto r = static_cast<std::size_t>(a.shape(0)), c = static_cast<std::size_t>(a.shape(1));
    std::vector<cplx> data(a.data(), a.data() + r * c);
    for (const cplx& z : data)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument("matrix has non-finite entries");
    return ComplexMatrix(r, c, std::move(data));
}

CArray to_array(const ComplexMatrix& m) {
    CArray out({m.rows(), m.cols()});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

py::dict bounds_dict(const BoundReport& r) {
    py::list bounds;
    for (const auto& b : r.bounds) {
        py::dict d;
        d["name"] = b.name;
        d["value"] = b.value;
        d["holds"] = b.holds;
        d["slack"] = b.slack;
        bounds.append(d);
    }
    py::dict d;
    d["lhs"] = r.lhs;
    d["ratio"] = r.ratio;
    d["bounds"] = bounds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_varbound, m) {
    m.doc() = "Variance, radius and commutator bounds for complex matrices";

    m.def("norm", [](const CArray& x, const std::string& spec) { return norm(to_matrix(x), NormSpec::parse(spec)); },
          py::arg("x"), py::arg("spec") = "schatten:2");

    m.def("radius", [](const CArray& x, const std::string& kind, std::uint64_t seed) {
        MaxVarianceOptions o;
        o.seed = seed;
        const auto r = radius(to_matrix(x), parse_modulus_kind(kind), o);
        py::dict d;
        d["value"] = r.value;
        d["center"] = r.y_star;
        d["primal_value"] = r.primal_value;
        d["gap"] = r.gap();
        d["witness"] = std::vector<cplx>(r.witness.values().begin(), r.witness.values().end());
        return d;
    }, py::arg("x"), py::arg("kind") = "C", py::arg("seed") = 0);

    m.def("max_variance", [](const CArray& x, const std::string& kind, std::uint64_t seed) {
        MaxVarianceOptions o;
        o.seed = seed;
        return max_variance(to_matrix(x), parse_modulus_kind(kind), o).value;
    }, py::arg("x"), py::arg("kind") = "C", py::arg("seed") = 0);

    m.def("variance", [](const CArray& x, const CArray& rho, const std::string& kind) {
        return quantum_variance(to_matrix(x), DensityMatrix(to_matrix(rho)), parse_modulus_kind(kind));
    }, py::arg("x"), py::arg("rho"), py::arg("kind") = "C");

    m.def("numerical_radius", [](const CArray& x) { return numerical_radius(to_matrix(x)); });

    m.def("central_numerical_radius", [](const CArray& x) {
        const auto r = central_numerical_radius(to_matrix(x));
        return py::make_tuple(r.value, r.z_star);
    });

    m.def("enclosing_circle", [](const std::vector<cplx>& pts) {
        const auto c = enclosing_circle(PointSet(pts));
        return py::make_tuple(c.center, c.radius);
    });

    m.def("commutator", [](const CArray& x, const CArray& y) { return to_array(commutator(to_matrix(x), to_matrix(y))); });

    m.def("commutator_bounds", [](const CArray& x, const CArray& y, double p, double q, double r) {
        return bounds_dict(evaluate_bounds(to_matrix(x), to_matrix(y), {p, q, r}));
    }, py::arg("x"), py::arg("y"), py::arg("p") = 2.0, py::arg("q") = 2.0, py::arg("r") = 2.0);

    m.def("search", [](double p, double q, double r, std::vector<int> dims, int trials, std::uint64_t seed) {
        const auto s = search_constant({p, q, r}, dims, trials, seed);
        py::dict d;
        d["best_ratio"] = s.best_ratio;
        d["witness_source"] = s.witness_source;
        d["witness_x"] = to_array(s.witness_x);
        d["witness_y"] = to_array(s.witness_y);
        d["skipped"] = s.skipped;
        d["conjectured"] = s.conjectured ? py::cast(*s.conjectured) : py::none();
        d["exceeds_conjecture"] = s.exceeds_conjecture;
        return d;
    }, py::arg("p") = 2.0, py::arg("q") = 2.0, py::arg("r") = 2.0, py::arg("dims") = std::vector<int>{2, 3, 4},
       py::arg("trials") = 100, py::arg("seed") = 0);

    m.def("verify_json", [](const std::string& suite, int trials, int dim_max, std::uint64_t seed, double tol) {
        VerifyOptions o{suite, trials, dim_max, seed, tol};
        return run_verify(o).to_json().dump();
    }, py::arg("suite") = "all", py::arg("trials") = 20, py::arg("dim_max") = 6, py::arg("seed") = 0,
       py::arg("tol") = 1e-9);
}
