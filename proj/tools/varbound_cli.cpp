#include "varbound/commutator.hpp"
#include "varbound/io.hpp"
#include "varbound/linalg.hpp"
#include "varbound/matrix_radii.hpp"
#include "varbound/norms.hpp"
#include "varbound/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

using namespace varbound;
using nlohmann::json;

namespace {

// error tagged with the offending flag
struct FlagError : std::invalid_argument {
    FlagError(const std::string& flag, const std::string& what) : std::invalid_argument(flag + ": " + what) {}
};

template <class F>
auto with_flag(const std::string& flag, F&& f) {
    try {
        return f();
    } catch (const FlagError&) {
        throw;
    } catch (const std::exception& e) {
        throw FlagError(flag, e.what());
    }
}

ComplexMatrix load(const std::string& flag, const std::string& path) {
    if (path.empty()) throw FlagError(flag, "a matrix file is required");
    return with_flag(flag, [&] { return read_matrix_file(path); });
}

ComplexMatrix load_square(const std::string& flag, const std::string& path) {
    ComplexMatrix m = load(flag, path);
    if (!m.is_square()) throw FlagError(flag, "matrix must be square, got " + describe(m));
    return m;
}

void print_scalar(double v) { std::printf("%.17g\n", v); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json number_or_inf(double v) { return std::isfinite(v) ? json(v) : json(format_exponent(v)); }

struct ComputeArgs {
    std::string input, x, y, rho, kind = "C", spec = "schatten:2", p = "2", q = "2", r = "2";
    double tol = 1e-9;
    int samples = 72;
    int restarts = 20;
    std::uint64_t seed = 0;
    bool as_json = false;
};

int compute_norm(const ComputeArgs& a) {
    const ComplexMatrix x = load("--input", a.input);
    const NormSpec spec = with_flag("--spec", [&] { return NormSpec::parse(a.spec); });
    const double v = with_flag("--spec", [&] { return norm(x, spec); });
    if (!a.as_json) {
        print_scalar(v);
        return 0;
    }
    json out{{"quantity", "norm"}, {"spec", spec.to_string()}, {"value", v},
             {"singular_values", singular_values(x).values()}};
    if (x.is_square() && x.rows() >= 2) {
        const auto b = f_ratio_bounds(x, spec);
        out["f_ratio"] = {{"lower", b.lower}, {"ratio", b.ratio}, {"upper", b.upper}};
    }
    emit(out);
    return 0;
}

int compute_radius(const ComputeArgs& a) {
    const ComplexMatrix x = load_square("--input", a.input);
    const ModulusKind kind = with_flag("--kind", [&] { return parse_modulus_kind(a.kind); });
    MaxVarianceOptions mv;
    mv.restarts = a.restarts;
    mv.seed = a.seed;
    const RadiusResult r = radius(x, kind, mv);
    if (!a.as_json) {
        print_scalar(r.value);
        return 0;
    }
    const auto memb = membership_in_range(x, r.y_star);
    emit({{"quantity", "radius"},
          {"kind", std::string(to_string(kind))},
          {"value", r.value},
          {"y_star", complex_to_json(r.y_star)},
          {"primal_value", r.primal_value},
          {"dual_lower_bound", r.dual_lower_bound},
          {"gap", r.gap()},
          {"gap_within_tol", std::abs(r.gap()) <= a.tol * (1.0 + r.value * r.value)},
          {"iterations", r.iterations},
          {"witness", vector_to_json(r.witness.values())},
          {"y_star_membership_margin", memb.margin}});
    return 0;
}

int compute_variance(const ComputeArgs& a) {
    const ComplexMatrix x = load_square("--input", a.input);
    const ModulusKind kind = with_flag("--kind", [&] { return parse_modulus_kind(a.kind); });
    if (!a.rho.empty()) {
        const ComplexMatrix m = load_square("--rho", a.rho);
        const DensityMatrix rho = with_flag("--rho", [&] { return DensityMatrix(m); });
        if (rho.dim() != x.rows()) throw FlagError("--rho", "dimension differs from --input");
        const double v = quantum_variance(x, rho, kind);
        if (!a.as_json) {
            print_scalar(v);
            return 0;
        }
        emit({{"quantity", "variance"},
              {"kind", std::string(to_string(kind))},
              {"value", v},
              {"expanded_form", quantum_variance_expanded(x, rho, kind)},
              {"mean", complex_to_json(expectation(x, rho))}});
        return 0;
    }
    MaxVarianceOptions mv;
    mv.restarts = a.restarts;
    mv.seed = a.seed;
    const auto m = max_variance(x, kind, mv);
    if (!a.as_json) {
        print_scalar(m.value);
        return 0;
    }
    emit({{"quantity", "max_variance"},
          {"kind", std::string(to_string(kind))},
          {"value", m.value},
          {"witness", vector_to_json(m.witness.values())},
          {"mean", complex_to_json(expectation(x, m.witness.values()))}});
    return 0;
}

int compute_numrange(const ComputeArgs& a) {
    const ComplexMatrix x = load_square("--input", a.input);
    if (a.samples < 8) throw FlagError("--samples", "must be >= 8");
    const auto s = numerical_range(x, a.samples);
    if (!a.as_json) {
        for (std::size_t k = 0; k < s.angles.size(); ++k)
            std::printf("%.17g %.17g %.17g %.17g\n", s.angles[k], s.support_values[k], s.boundary_points[k].real(),
                        s.boundary_points[k].imag());
        return 0;
    }
    emit({{"quantity", "numrange"},
          {"angles", s.angles},
          {"support_values", s.support_values},
          {"boundary_points", vector_to_json(s.boundary_points)}});
    return 0;
}

int compute_wradius(const ComputeArgs& a) {
    const ComplexMatrix x = load_square("--input", a.input);
    const double w = numerical_radius(x);
    const auto c = central_numerical_radius(x);
    if (!a.as_json) {
        std::printf("w %.17g\nr_W %.17g\n", w, c.value);
        return 0;
    }
    emit({{"quantity", "wradius"},
          {"numerical_radius", w},
          {"central_numerical_radius", c.value},
          {"z_star", complex_to_json(c.z_star)},
          {"cartesian_modulus_norm", lambda_max(modulus(x, ModulusKind::C))}});
    return 0;
}

int compute_commutator_bounds(const ComputeArgs& a) {
    const ComplexMatrix x = load_square("--x", a.x);
    const ComplexMatrix y = load_square("--y", a.y);
    if (x.rows() != y.rows()) throw FlagError("--y", "dimension differs from --x");
    const Exponents e{with_flag("--p", [&] { return parse_exponent(a.p); }),
                      with_flag("--q", [&] { return parse_exponent(a.q); }),
                      with_flag("--r", [&] { return parse_exponent(a.r); })};
    BoundReport rep = with_flag("--p/--q/--r", [&] { return evaluate_bounds(x, y, e); });
    for (auto& b : rep.bounds) b.holds = b.slack >= -a.tol * (1.0 + std::abs(b.value));
    bool all = true;
    for (const auto& b : rep.bounds) all = all && b.holds;
    if (!a.as_json) {
        std::printf("lhs %.17g\n", rep.lhs);
        for (const auto& b : rep.bounds)
            std::printf("%s %.17g %s slack %.3g\n", b.name.c_str(), b.value, b.holds ? "holds" : "VIOLATED", b.slack);
        std::printf("ratio %.17g\n", rep.ratio);
        return all ? 0 : 1;
    }
    json bounds = json::array();
    for (const auto& b : rep.bounds)
        bounds.push_back({{"name", b.name}, {"value", b.value}, {"holds", b.holds}, {"slack", b.slack}});
    json out{{"quantity", "commutator-bounds"},
             {"p", number_or_inf(e.p)},
             {"q", number_or_inf(e.q)},
             {"r", number_or_inf(e.r)},
             {"lhs", rep.lhs},
             {"bounds", bounds},
             {"ratio", rep.ratio}};
    if (auto c = conjectured_constant(e)) out["conjectured"] = *c;
    emit(out);
    return all ? 0 : 1;
}

struct VerifyArgs {
    VerifyOptions opt;
    std::string report;
};

int run_verify_cmd(const VerifyArgs& a) {
    const VerifyReport rep = run_verify(a.opt);
    const json j = rep.to_json();
    if (!a.report.empty()) {
        std::ofstream out(a.report);
        if (!out) throw FlagError("--report", "cannot write '" + a.report + "'");
        out << j.dump(2) << '\n';
    }
    for (const auto& c : rep.checks)
        std::printf("%-40s pass %5d fail %5d worst_slack %.3g\n", c.id.c_str(), c.pass, c.fail, c.worst_slack);
    for (const auto& w : rep.warnings) std::printf("%s\n", w.c_str());
    std::printf("%s: %d failure(s)\n", rep.suite.c_str(), rep.failures());
    return rep.ok() ? 0 : 1;
}

struct SearchArgs {
    std::string p = "2", q = "2", r = "2", dims = "2,3,4", save;
    int trials = 1000;
    std::uint64_t seed = 0;
};

int run_search_cmd(const SearchArgs& a) {
    const Exponents e{with_flag("--p", [&] { return parse_exponent(a.p); }),
                      with_flag("--q", [&] { return parse_exponent(a.q); }),
                      with_flag("--r", [&] { return parse_exponent(a.r); })};
    const auto dims = with_flag("--dims", [&] { return parse_int_list(a.dims); });
    const SearchResult s = with_flag("--p/--q/--r", [&] { return search_constant(e, dims, a.trials, a.seed); });
    json out{{"p", number_or_inf(e.p)},
             {"q", number_or_inf(e.q)},
             {"r", number_or_inf(e.r)},
             {"best_ratio", s.best_ratio},
             {"witness_source", s.witness_source},
             {"witness_x", matrix_to_json(s.witness_x)},
             {"witness_y", matrix_to_json(s.witness_y)},
             {"trials", s.trials},
             {"skipped", s.skipped},
             {"dims_tried", s.dims_tried},
             {"seed", s.seed},
             {"conjectured", s.conjectured ? json(*s.conjectured) : json()},
             {"gap", s.conjectured ? json(*s.conjectured - s.best_ratio) : json()},
             {"exceeds_conjecture", s.exceeds_conjecture}};
    if (!a.save.empty()) {
        write_matrix_file(a.save + "_x.json", s.witness_x);
        write_matrix_file(a.save + "_y.json", s.witness_y);
    }
    emit(out);
    if (s.exceeds_conjecture)
        std::fprintf(stderr, "FALSIFICATION CANDIDATE: best ratio %.17g exceeds the conjectured constant %.17g\n",
                     s.best_ratio, *s.conjectured);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variance, radius and commutator-norm bounds for complex matrices"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Compute a single quantity");
    compute->require_subcommand(1);
    auto add_common = [&](CLI::App* c) {
        c->add_option("--tol", ca.tol, "Tolerance for reported holds/gap flags")->capture_default_str();
        c->add_flag("--json", ca.as_json, "Machine-readable output");
    };
    auto add_kind = [&](CLI::App* c) {
        c->add_option("--kind", ca.kind, "Modulus kind: L, R or C")->capture_default_str();
        c->add_option("--restarts", ca.restarts, "Primal ascent restarts")->capture_default_str();
        c->add_option("--seed", ca.seed, "Seed for primal restarts")->capture_default_str();
    };

    auto* c_norm = compute->add_subcommand("norm", "Unitarily invariant norm");
    c_norm->add_option("--input", ca.input, "Matrix JSON file")->required();
    c_norm->add_option("--spec", ca.spec, "schatten:P | kyfan:K | kyfanpk:P:K | gauge:a1,a2,...")->capture_default_str();
    add_common(c_norm);

    auto* c_radius = compute->add_subcommand("radius", "Matrix radius r_*(X) with optimal shift");
    c_radius->add_option("--input", ca.input, "Matrix JSON file")->required();
    add_kind(c_radius);
    add_common(c_radius);

    auto* c_var = compute->add_subcommand("variance", "Quantum variance for --rho, else the maximal pure-state variance");
    c_var->add_option("--input", ca.input, "Matrix JSON file")->required();
    c_var->add_option("--rho", ca.rho, "Density matrix JSON file");
    add_kind(c_var);
    add_common(c_var);

    auto* c_nr = compute->add_subcommand("numrange", "Support function samples of the numerical range");
    c_nr->add_option("--input", ca.input, "Matrix JSON file")->required();
    c_nr->add_option("--samples", ca.samples, "Number of angles (>= 8)")->capture_default_str();
    add_common(c_nr);

    auto* c_w = compute->add_subcommand("wradius", "Numerical radius and central numerical radius");
    c_w->add_option("--input", ca.input, "Matrix JSON file")->required();
    add_common(c_w);

    auto* c_cb = compute->add_subcommand("commutator-bounds", "Upper bounds on ||[X,Y]||_p");
    c_cb->add_option("--x", ca.x, "X matrix JSON file")->required();
    c_cb->add_option("--y", ca.y, "Y matrix JSON file")->required();
    c_cb->add_option("--p", ca.p, "Exponent of the commutator norm (number or inf)")->capture_default_str();
    c_cb->add_option("--q", ca.q, "Exponent for X (number or inf)")->capture_default_str();
    c_cb->add_option("--r", ca.r, "Exponent for Y (number or inf)")->capture_default_str();
    add_common(c_cb);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run randomized property suites");
    verify->add_option("--suite", va.opt.suite, "scalar | norms | radii | commutator | all")
        ->check(CLI::IsMember(verify_suites()))
        ->capture_default_str();
    verify->add_option("--trials", va.opt.trials, "Trials per suite")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--dim-max", va.opt.dim_max, "Largest dimension sampled")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--seed", va.opt.seed, "Master seed")->capture_default_str();
    verify->add_option("--tol", va.opt.tol, "Slack for plain inequality checks")->capture_default_str();
    verify->add_option("--report", va.report, "Write the JSON report here");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Randomized lower bounds on the commutator constant");
    search->add_option("--p", sa.p, "Exponent of the commutator norm (number or inf)")->capture_default_str();
    search->add_option("--q", sa.q, "Exponent for X (number or inf)")->capture_default_str();
    search->add_option("--r", sa.r, "Exponent for Y (number or inf)")->capture_default_str();
    search->add_option("--dims", sa.dims, "Comma-separated dimensions")->capture_default_str();
    search->add_option("--trials", sa.trials, "Random trials")->check(CLI::PositiveNumber)->capture_default_str();
    search->add_option("--seed", sa.seed, "Master seed")->capture_default_str();
    search->add_option("--save-witness", sa.save, "Write PREFIX_x.json and PREFIX_y.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*compute) {
            if (*c_norm) return compute_norm(ca);
            if (*c_radius) return compute_radius(ca);
            if (*c_var) return compute_variance(ca);
            if (*c_nr) return compute_numrange(ca);
            if (*c_w) return compute_wradius(ca);
            if (*c_cb) return compute_commutator_bounds(ca);
        }
        if (*verify) return run_verify_cmd(va);
        if (*search) return run_search_cmd(sa);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
