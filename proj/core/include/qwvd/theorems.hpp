#ifndef QWVD_THEOREMS_HPP
#define QWVD_THEOREMS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qwvd/generators.hpp"
#include "qwvd/wvd.hpp"

namespace qwvd {

/// Outcome of one numerical inequality evaluation. satisfied holds exactly
/// when gap >= -1e-9 * max(|lhs|, |rhs|); context records the parameters the
/// check ran under (serialized into verification reports).
struct InequalityReport {
    double lhs{0.0};
    double rhs{0.0};
    double gap{0.0};
    bool satisfied{false};
    std::vector<std::pair<std::string, std::string>> context;
};

InequalityReport make_inequality_report(double lhs, double rhs);

/// Lattice sums run over (k1, k2) in [-K, K]^2.
struct LatticeTruncation {
    int K{6};
};

/// Spread product bound for the offset transform:
///   lhs = |s_k f|^2_{2,Q} * || (xi_k / (2 pi b_k)) O{f}(xi) ||^2_{2,Q}
///   rhs = |f|^4_{2,Q} / (16 pi^2)
/// The frequency moment uses the component-wise module norm (four transforms)
/// on the b-scaled dual grid. k selects the axis (1 or 2). Requires smooth,
/// decaying f (the shipped generators) and b1*b2 != 0.
InequalityReport heisenberg_qolct(const SampledSignal& f, const OffsetParams& p1,
                                  const OffsetParams& p2, const AxisPair& axes, int axis_k);

/// Same bound for the time-frequency distribution:
///   lhs = (Int |s_k h_{f,g}|^2 ds dt) * (Int ||(xi_k/(2 pi b_k)) W(t, xi)||^2 dxi dt)
///   rhs = |f|^4_{2,Q} |g|^4_{2,Q} / (16 pi^2)
InequalityReport heisenberg_wvd(const SampledSignal& f, const SampledSignal& g,
                                const OffsetParams& p1, const OffsetParams& p2,
                                const AxisPair& axes, int axis_k);

/// Both sides of the lattice summation identity for the cyclic-convention
/// transform (axes i, j):
///   first  = Sum_k f(s + k)
///   second = Sum_k e^{2 pi i k1 s1} hat f(k) e^{2 pi j k2 s2}
/// over the truncated lattice, with hat f analytic for the Gaussian
/// generator.
std::pair<Quaternion, Quaternion> poisson_qft_check(const AnalyticGaussianPi& f,
                                                    std::array<double, 2> s,
                                                    LatticeTruncation trunc);

/// Both sides of the lattice summation identity for the distribution
/// (axes i, j; b1*b2 != 0): the left side sums the chirp-premultiplied
/// correlation product at lags s + k, the right side sums phase-corrected
/// distribution values at the lattice frequencies (2 pi b1 k1, 2 pi b2 k2),
/// each value computed by direct quadrature over a fine lag grid.
std::pair<Quaternion, Quaternion> poisson_wvd_check(const AnalyticGaussianPi& f,
                                                    const AnalyticGaussianPi& g,
                                                    std::array<double, 2> t,
                                                    std::array<double, 2> s,
                                                    const OffsetParams& p1,
                                                    const OffsetParams& p2,
                                                    LatticeTruncation trunc);

/// L^p -> L^q bound report for the tau = eta = 0 transform:
///   lhs = |L{f}|_{q,Q} (plain quaternion modulus; q = p/(p-1), sup-norm at p = 1)
///   rhs = (|b1 b2|^{-1/2 + 1/q} / (2 pi)) |f|_{p,Q}
/// Report only: at p = 2 the ratio lhs/rhs sits near 2 pi, documenting the
/// constant mismatch with unitarity. Never asserted.
InequalityReport lieb_qlct_ratio(const SampledSignal& f, const OffsetParams& p1,
                                 const OffsetParams& p2, double p_exp);

/// Concentration functional for the distribution (axes i, j; p >= 2):
///   lhs = Int Int |W_{f,g}(t,u)|^p_Q du dt
///   rhs = (|b1 b2|^{-p/2 + 1} / (2 pi)^p) |f|^p_{2,Q} |g|^p_{2,Q}
/// The implied constant lhs/rhs is recorded in the context as C_emp; only its
/// finiteness and scale invariance are assertable.
InequalityReport lieb_wvd_functional(const SampledSignal& f, const SampledSignal& g,
                                     const OffsetParams& p1, const OffsetParams& p2,
                                     double p_exp);

}  // namespace qwvd

#endif
