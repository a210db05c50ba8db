#include "varbound/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace varbound {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_p(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("norm exponent p must be >= 1");
}

void check_k(std::size_t k) {
    if (k < 1) throw std::invalid_argument("Ky Fan index k must be >= 1");
}

// (sum_{i<n} s_i^p)^(1/p), scaled by s_0 to avoid overflow; s is sorted non-increasing
double lp_head(const std::vector<double>& s, std::size_t n, double p) {
    if (n == 0 || s[0] == 0.0) return 0.0;
    if (std::isinf(p)) return s[0];
    if (p == 1.0) {
        double t = 0.0;
        for (std::size_t i = 0; i < n; ++i) t += s[i];
        return t;
    }
    const double top = s[0];
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) t += std::pow(s[i] / top, p);
    return top * std::pow(t, 1.0 / p);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return v;
}

std::size_t parse_index(std::string_view text) {
    std::size_t v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("not a positive integer: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

NormSpec NormSpec::schatten(double p) {
    check_p(p);
    return NormSpec(Schatten{p});
}

NormSpec NormSpec::kyfan(std::size_t k) {
    check_k(k);
    return NormSpec(KyFan{k});
}

NormSpec NormSpec::kyfan_pk(double p, std::size_t k) {
    check_p(p);
    check_k(k);
    return NormSpec(KyFanPK{p, k});
}

NormSpec NormSpec::weighted_gauge(std::vector<double> alpha) {
    if (alpha.empty()) throw std::invalid_argument("weighted gauge needs at least one weight");
    bool any_positive = false;
    for (double a : alpha) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw std::invalid_argument("weighted gauge weights must be finite and non-negative");
        }
        any_positive = any_positive || a > 0.0;
    }
    if (!any_positive) throw std::invalid_argument("weighted gauge weights must not all be zero");
    std::sort(alpha.begin(), alpha.end(), std::greater<>());
    return NormSpec(WeightedGauge{std::move(alpha)});
}

NormSpec NormSpec::parse(std::string_view text) {
    const auto parts = split(text, ':');
    const auto name = parts[0];
    if (name == "schatten" && parts.size() == 2) return schatten(parse_exponent(parts[1]));
    if (name == "kyfan" && parts.size() == 2) return kyfan(parse_index(parts[1]));
    if (name == "kyfanpk" && parts.size() == 3) return kyfan_pk(parse_exponent(parts[1]), parse_index(parts[2]));
    if (name == "gauge" && parts.size() == 2) {
        std::vector<double> alpha;
        for (auto w : split(parts[1], ',')) alpha.push_back(parse_double(w));
        return weighted_gauge(std::move(alpha));
    }
    throw std::invalid_argument("bad norm spec '" + std::string(text) +
                                "' (expected schatten:<p>, kyfan:<k>, kyfanpk:<p>:<k> or gauge:<a1,...>)");
}

std::string NormSpec::to_string() const {
    return std::visit(overloaded{
                          [](const Schatten& s) { return "schatten:" + format_exponent(s.p); },
                          [](const KyFan& s) { return "kyfan:" + std::to_string(s.k); },
                          [](const KyFanPK& s) {
                              return "kyfanpk:" + format_exponent(s.p) + ":" + std::to_string(s.k);
                          },
                          [](const WeightedGauge& s) {
                              std::ostringstream os;
                              os << "gauge:";
                              for (std::size_t i = 0; i < s.alpha.size(); ++i) os << (i ? "," : "") << s.alpha[i];
                              return os.str();
                          },
                      },
                      v_);
}

double parse_exponent(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return kInf;
    const double p = parse_double(text);
    check_p(p);
    return p;
}

std::string format_exponent(double p) {
    if (std::isinf(p)) return "inf";
    std::ostringstream os;
    os << p;
    return os.str();
}

double norm_of_spectrum(const SingularSpectrum& sv, const NormSpec& spec) {
    const auto& s = sv.values();
    const std::size_t n = s.size();
    auto require_k = [n](std::size_t k) {
        if (k > n) {
            throw std::invalid_argument("Ky Fan index k=" + std::to_string(k) + " exceeds min(rows, cols)=" +
                                        std::to_string(n));
        }
    };
    return std::visit(overloaded{
                          [&](const Schatten& x) { return lp_head(s, n, x.p); },
                          [&](const KyFan& x) {
                              require_k(x.k);
                              return lp_head(s, x.k, 1.0);
                          },
                          [&](const KyFanPK& x) {
                              require_k(x.k);
                              return lp_head(s, x.k, x.p);
                          },
                          [&](const WeightedGauge& x) {
                              if (x.alpha.size() < n) {
                                  throw std::invalid_argument("weighted gauge has " + std::to_string(x.alpha.size()) +
                                                              " weights, needs at least " + std::to_string(n));
                              }
                              double t = 0.0;
                              for (std::size_t i = 0; i < n; ++i) t += x.alpha[i] * s[i];
                              return t;
                          },
                      },
                      spec.variant());
}

double norm(const ComplexMatrix& x, const NormSpec& spec) { return norm_of_spectrum(singular_values(x), spec); }

double vector_norm(std::span<const cplx> x, const NormSpec& spec) {
    if (x.empty()) throw std::invalid_argument("vector norm of an empty vector");
    std::vector<double> mags(x.size());
    std::transform(x.begin(), x.end(), mags.begin(), [](cplx z) { return std::abs(z); });
    std::sort(mags.begin(), mags.end(), std::greater<>());
    return norm_of_spectrum(SingularSpectrum(std::move(mags)), spec);
}

double schatten_norm(const ComplexMatrix& x, double p) { return norm(x, NormSpec::schatten(p)); }
double kyfan_norm(const ComplexMatrix& x, std::size_t k) { return norm(x, NormSpec::kyfan(k)); }
double kyfan_pk_norm(const ComplexMatrix& x, double p, std::size_t k) { return norm(x, NormSpec::kyfan_pk(p, k)); }

FRatioBounds f_ratio_bounds(const ComplexMatrix& x, const NormSpec& spec) {
    if (!x.is_square()) throw std::invalid_argument("F-ratio bounds need a square matrix");
    if (x.rows() < 2) throw std::invalid_argument("F-ratio bounds need d >= 2");
    const auto sv = singular_values(x);
    const auto& s = sv.values();
    const double f_norm = norm(f_matrix(x.rows()), spec);
    double trace_norm = 0.0;
    for (double v : s) trace_norm += v;
    return {
        0.5 * (s[0] + s[1]),
        norm_of_spectrum(sv, spec) / f_norm,
        std::max(s[0], 0.5 * trace_norm),
    };
}

}  // namespace varbound
