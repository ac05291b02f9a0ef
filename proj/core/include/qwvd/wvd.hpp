#ifndef QWVD_WVD_HPP
#define QWVD_WVD_HPP

#include <functional>
#include <utility>

#include "qwvd/qolct.hpp"

namespace qwvd {

/// Time-frequency distribution W(t, u): a quaternion value per (time-slice,
/// frequency) pair. `time` holds the slice coordinates (the signal grid, or
/// its half-step refinement for inversion use), `freq` the per-slice
/// transform grid. Storage is slice-major.
struct WvdGrid {
    GridGeometry time;
    GridGeometry freq;
    std::vector<Quaternion> values;

    WvdGrid() = default;
    WvdGrid(const GridGeometry& t, const GridGeometry& u)
        : time(t), freq(u), values(t.size() * u.size()) {}

    std::size_t slice_stride() const { return freq.size(); }
    Quaternion* slice(int i1, int i2) {
        return values.data() + (static_cast<std::size_t>(i1) * time.n2 + i2) * slice_stride();
    }
    const Quaternion* slice(int i1, int i2) const {
        return values.data() + (static_cast<std::size_t>(i1) * time.n2 + i2) * slice_stride();
    }
    Quaternion& at(int i1, int i2, int k1, int k2) {
        return slice(i1, i2)[static_cast<std::size_t>(k1) * freq.n2 + k2];
    }
    const Quaternion& at(int i1, int i2, int k1, int k2) const {
        return slice(i1, i2)[static_cast<std::size_t>(k1) * freq.n2 + k2];
    }
};

/// 2n-1 slice positions with spacing delta/2: every half-sum (v + e)/2 of two
/// time-grid points lands on this lattice.
GridGeometry half_step_refined(const GridGeometry& time);

/// Default per-slice frequency grid: the b-scaled dual of the lag lattice
/// (the discrete lag transform is exactly invertible on it).
GridGeometry wvd_dual_grid(const GridGeometry& time, const OffsetParams& p1,
                           const OffsetParams& p2);

/// Streaming evaluation: computes each slice W(t, .) = transform in the lag
/// variable of f(t + s/2) conj(g(t - s/2)) and hands it to `fn` together with
/// the slice indices. Slices may be computed concurrently; `fn` must only
/// write state owned by its slice (index into preallocated storage).
/// `half_step` selects the refined slice lattice; `use_fft` the
/// chirp-multiplication path (requires axes (i, j), b1*b2 != 0, commensurate
/// frequency grid).
void wvd_for_each_slice(
    const SampledSignal& f, const SampledSignal& g, const OffsetParams& p1,
    const OffsetParams& p2, const AxisPair& axes, const GridGeometry& freq, bool half_step,
    bool use_fft,
    const std::function<void(int c1, int c2, const std::vector<Quaternion>& slice)>& fn);

/// Materialized distribution with slices on the signal grid (direct kernel
/// sums per slice; all four (b1, b2) branches).
WvdGrid wvd_qolct(const SampledSignal& f, const SampledSignal& g, const OffsetParams& p1,
                  const OffsetParams& p2, const AxisPair& axes, const GridGeometry& freq);

/// Same distribution on the half-step-refined slice lattice (what inversion
/// consumes).
WvdGrid wvd_qolct_half_step(const SampledSignal& f, const SampledSignal& g,
                            const OffsetParams& p1, const OffsetParams& p2, const AxisPair& axes,
                            const GridGeometry& freq);

/// FFT-factored evaluation through the per-slice chirp decomposition; axes
/// (i, j), b1*b2 != 0. Agrees with wvd_qolct to ~1e-13.
WvdGrid wvd_via_qft(const SampledSignal& f, const SampledSignal& g, const OffsetParams& p1,
                    const OffsetParams& p2, const GridGeometry& freq);
WvdGrid wvd_via_qft_half_step(const SampledSignal& f, const SampledSignal& g,
                              const OffsetParams& p1, const OffsetParams& p2,
                              const GridGeometry& freq);

/// Inversion: recovers f from W and the window g,
///   f(v) = (1/|g|^2) Sum_e Sum_u conj(K1(v1-e1, u1)) W((v+e)/2, u)
///                          conj(K2(v2-e2, u2)) g(e) du de.
/// W must live on the half-step refinement of g's grid; |g| must be nonzero;
/// b1*b2 != 0. The kernels are evaluated at the lag v-e (the change of
/// variables t = (v+e)/2, s = v-e applied consistently on both arguments).
SampledSignal wvd_inverse(const WvdGrid& W, const SampledSignal& g, const OffsetParams& p1,
                          const OffsetParams& p2, const AxisPair& axes);

/// FFT-factored inversion (axes (i, j)); same contract as wvd_inverse.
SampledSignal wvd_inverse_fast(const WvdGrid& W, const SampledSignal& g, const OffsetParams& p1,
                               const OffsetParams& p2);

/// Returns (||W_{f,g}||_{2,Q} via the per-slice component module norms with
/// du*dt quadrature, |f|_{2,Q} * |g|_{2,Q}). The energy identity asserts
/// lhs^2 = rhs^2; the unsquared variant fails the scaling dimension check and
/// is only ever reported. Requires b1*b2 != 0.
std::pair<double, double> wvd_plancherel_check(const SampledSignal& f, const SampledSignal& g,
                                               const OffsetParams& p1, const OffsetParams& p2,
                                               const AxisPair& axes);

}  // namespace qwvd

#endif
