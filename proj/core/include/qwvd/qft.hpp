#ifndef QWVD_QFT_HPP
#define QWVD_QFT_HPP

#include <array>

#include "qwvd/grid.hpp"
#include "qwvd/quaternion.hpp"

namespace qwvd {

/// The two exponential axes of a two-sided transform: the left axis acts on
/// the first coordinate, the right axis on the second.
struct AxisPair {
    PureUnitAxis left = PureUnitAxis::i();
    PureUnitAxis right = PureUnitAxis::j();

    static AxisPair ij() { return {}; }
    bool is_ij() const { return left.is_i() && right.is_j(); }
    bool operator==(const AxisPair&) const = default;
};

/// Natural discrete frequency grid for a time grid: u_k = 2*pi*k/(n*delta)
/// with k = -n/2 .. n/2-1 per axis. The forward/inverse pair is exactly
/// unitary on this grid.
GridGeometry qft_dual_grid(const GridGeometry& time);

/// Two-sided transform, direct summation (the normative definition):
///   F(u) = Sum_t e^{-left*u1*t1} f(t) e^{-right*u2*t2} dt.
/// Works for any pure-unit axes and any frequency grid.
Spectrum qft_forward(const SampledSignal& f, const AxisPair& axes, const GridGeometry& freq);

/// Direct-summation inverse:
///   f(t) = (1/(2*pi)^2) Sum_u e^{left*u1*t1} F(u) e^{right*u2*t2} du.
SampledSignal qft_inverse(const Spectrum& F, const AxisPair& axes, const GridGeometry& time);

/// The four component transforms F{f_m} of f = f0 + i f1 + j f2 + k f3.
/// The transform-domain module norm ||F{f}(u)||_Q = sqrt(Sum_m |F{f_m}(u)|^2)
/// is defined through these, never through the single spectrum of f.
struct ModuleSpectrum {
    std::array<Spectrum, 4> parts;

    const GridGeometry& geometry() const { return parts[0].geometry; }
    double module_norm_sq(int k1, int k2) const {
        double s = 0.0;
        for (const auto& p : parts) s += norm_sq(p.at(k1, k2));
        return s;
    }
    /// sqrt( Sum_u ||.||_Q^2 du )
    double l2_norm() const;
};

ModuleSpectrum qft_module_spectrum(const SampledSignal& f, const AxisPair& axes,
                                   const GridGeometry& freq);

/// FFT-factored forward path, axes fixed to (i, j). The frequency grid must be
/// DFT-commensurate with the time grid (the natural dual grid, up to an origin
/// shift); otherwise this throws with a hint to use qft_forward. Agrees with
/// qft_forward to ~1e-13; the direct sum remains the normative definition.
Spectrum qft_fast(const SampledSignal& f, const GridGeometry& freq);

/// FFT-factored inverse, same restrictions as qft_fast.
SampledSignal qft_fast_inverse(const Spectrum& F, const GridGeometry& time);

}  // namespace qwvd

#endif
