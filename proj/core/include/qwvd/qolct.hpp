#ifndef QWVD_QOLCT_HPP
#define QWVD_QOLCT_HPP

#include <array>
#include <utility>

#include "qwvd/qft.hpp"

namespace qwvd {

/// Per-axis parameter block of the offset linear canonical transform: a
/// unimodular 2x2 matrix (a, b; c, d) plus a time shift tau and a frequency
/// modulation eta. b == 0 (exact floating-point zero) selects the degenerate
/// closed-form branch.
struct OffsetParams {
    double a{0.0};
    double b{1.0};
    double c{-1.0};
    double d{0.0};
    double tau{0.0};
    double eta{0.0};

    bool degenerate() const { return b == 0.0; }
    void validate() const;  // |a*d - b*c - 1| <= 1e-12

    /// (0, 1, -1, 0 | 0, 0): the transform reduces to the two-sided QFT up to
    /// constant unit factors.
    static OffsetParams qft_case() { return {}; }

    bool operator==(const OffsetParams&) const = default;
};

/// 1/sqrt(axis * c) with the fixed branch 1/sqrt(axis) = e^{-axis*pi/4}:
/// c > 0 gives e^{-axis*pi/4}/sqrt(c); c < 0 absorbs the sign into the axis.
Quaternion inv_sqrt_axis_scaled(const PureUnitAxis& axis, double c);

/// sqrt(axis * c), the reciprocal branch of inv_sqrt_axis_scaled.
Quaternion sqrt_axis_scaled(const PureUnitAxis& axis, double c);

/// Left kernel (axis-1 factor), defined for p.b != 0:
///   K(t,u) = (1/sqrt(axis*2*pi*b)) e^{axis*(a t^2 - 2t(u-tau) - 2u(d*tau - b*eta)
///                                         + d(u^2 + tau^2)) / (2b)}.
/// |K| = 1/sqrt(2*pi*|b|). Throws on the degenerate branch.
Quaternion kernel_left(const OffsetParams& p, const PureUnitAxis& axis, double t1, double u1);

/// Right kernel (axis-2 factor); same formula on the second axis parameters.
Quaternion kernel_right(const OffsetParams& p, const PureUnitAxis& axis, double t2, double u2);

/// Frequency grid on which the discrete transform is exactly invertible:
/// the natural dual grid scaled by b per axis (ascending regardless of the
/// sign of b).
GridGeometry qolct_dual_grid(const GridGeometry& time, const OffsetParams& p1,
                             const OffsetParams& p2);

/// Direct-summation transform over all four (b1, b2) branches. For b != 0 the
/// kernel integral; for b == 0 the closed form with point evaluation realized
/// as nearest-grid-sample lookup (out-of-grid reads as zero).
Spectrum qolct_forward(const SampledSignal& f, const OffsetParams& p1, const OffsetParams& p2,
                       const AxisPair& axes, const GridGeometry& freq);

/// Chirp-multiplication fast path (axes (i, j), b1*b2 != 0): the kernel
/// exponent splits into t-only chirps folded into an FFT and u-only phase
/// factors applied per output frequency. The frequency grid must be
/// commensurate with the b-scaled dual grid. Agrees with qolct_forward to
/// ~1e-13; throws on degenerate branches.
Spectrum qolct_fast(const SampledSignal& f, const OffsetParams& p1, const OffsetParams& p2,
                    const GridGeometry& freq);

/// Direct-summation inverse: f(t) = Sum_u conj(K1(t1,u1)) F(u) conj(K2(t2,u2)) du.
/// Requires b1*b2 != 0 (the kernels of the degenerate branches are not defined).
SampledSignal qolct_inverse(const Spectrum& F, const OffsetParams& p1, const OffsetParams& p2,
                            const AxisPair& axes, const GridGeometry& time);

/// FFT-factored inverse, same restrictions as qolct_fast.
SampledSignal qolct_fast_inverse(const Spectrum& F, const OffsetParams& p1,
                                 const OffsetParams& p2, const GridGeometry& time);

/// Component transforms O{f_m} for the transform-domain module norm.
ModuleSpectrum qolct_module_spectrum(const SampledSignal& f, const OffsetParams& p1,
                                     const OffsetParams& p2, const AxisPair& axes,
                                     const GridGeometry& freq);

/// Returns (||O{f}||_{2,Q} via the four component transforms on the b-scaled
/// dual grid, |f|_{2,Q}). The caller asserts closeness. Requires b1*b2 != 0.
std::pair<double, double> qolct_plancherel_check(const SampledSignal& f, const OffsetParams& p1,
                                                 const OffsetParams& p2, const AxisPair& axes);

/// Pointwise comparison of the offset transform against phase factors times
/// the tau = eta = 0 transform. The factorization is evaluated literally:
/// its left/right phases contain a free time variable (`phase_time` supplies
/// it), so away from tau = eta = 0 it cannot hold pointwise in u alone.
/// Report only: the zero-offset reduction is exact, the rest is quantified,
/// never asserted, and deliberately not "repaired".
struct RelationReport {
    double max_abs_deviation{0.0};
    double max_rel_deviation{0.0};
    std::array<double, 2> phase_time{0.0, 0.0};
};
RelationReport qolct_from_qlct_relation(const SampledSignal& f, const OffsetParams& p1,
                                        const OffsetParams& p2,
                                        std::array<double, 2> phase_time = {0.0, 0.0});

}  // namespace qwvd

#endif
