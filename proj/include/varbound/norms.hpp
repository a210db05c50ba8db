#ifndef VARBOUND_NORMS_HPP
#define VARBOUND_NORMS_HPP

#include "varbound/linalg.hpp"

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace varbound {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Schatten {
    double p;  // p >= 1, kInf for the operator norm
};

struct KyFan {
    std::size_t k;
};

struct KyFanPK {
    double p;
    std::size_t k;
};

/// sum_i alpha_i^(desc) sigma_i(X). Weights are kept sorted non-increasing.
struct WeightedGauge {
    std::vector<double> alpha;
};

//
// A unitarily invariant norm, selected by tag. Construction validates the
// parameters; the dimension-dependent checks (k <= N, enough weights) happen
// at evaluation time.
//
class NormSpec {
public:
    using Variant = std::variant<Schatten, KyFan, KyFanPK, WeightedGauge>;

    static NormSpec schatten(double p);
    static NormSpec kyfan(std::size_t k);
    static NormSpec kyfan_pk(double p, std::size_t k);
    static NormSpec weighted_gauge(std::vector<double> alpha);

    /// Grammar `name[:param[:param]]`: schatten:2, schatten:inf, kyfan:2,
    /// kyfanpk:<p>:<k>, gauge:<a1>,<a2>,...
    static NormSpec parse(std::string_view text);

    const Variant& variant() const noexcept { return v_; }
    std::string to_string() const;

private:
    explicit NormSpec(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// Accepts "inf", "infinity" or a number >= 1.
double parse_exponent(std::string_view text);
std::string format_exponent(double p);

double norm_of_spectrum(const SingularSpectrum& sv, const NormSpec& spec);
double norm(const ComplexMatrix& x, const NormSpec& spec);

/// Permutation invariant vector norm, equal to norm(Diag(x), spec).
double vector_norm(std::span<const cplx> x, const NormSpec& spec);

double schatten_norm(const ComplexMatrix& x, double p);
double kyfan_norm(const ComplexMatrix& x, std::size_t k);
double kyfan_pk_norm(const ComplexMatrix& x, double p, std::size_t k);
inline double operator_norm(const ComplexMatrix& x) { return schatten_norm(x, kInf); }

struct FRatioBounds {
    double lower;  // ||X||_(2) / 2
    double ratio;  // |||X||| / |||F|||
    double upper;  // max(||X||_inf, ||X||_1 / 2)
};

FRatioBounds f_ratio_bounds(const ComplexMatrix& x, const NormSpec& spec);

}  // namespace varbound

#endif
