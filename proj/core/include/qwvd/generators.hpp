#ifndef QWVD_GENERATORS_HPP
#define QWVD_GENERATORS_HPP

#include <cstdint>

#include "qwvd/qolct.hpp"

namespace qwvd {

/// Deterministic test-signal factory. All signals decay well inside the
/// standard [-6, 6]^2 grids so the moment and spectral integrals in the
/// verification suite are grid-converged.

/// amplitude * e^{-|t - c|^2 / (2 sigma^2)}
SampledSignal make_gaussian(const GridGeometry& g, double sigma, double center1 = 0.0,
                            double center2 = 0.0, double amplitude = 1.0);

/// Gaussian envelope with unit quadratic phases on each axis:
///   e^{i rate1 t1^2/2} e^{-|t|^2/(2 sigma^2)} e^{j rate2 t2^2/2}.
/// |f(t)| equals the envelope pointwise.
SampledSignal make_chirp(const GridGeometry& g, double sigma, double rate1, double rate2);

/// Single cell of weight 1/dt at the sample nearest (pos1, pos2).
SampledSignal make_delta(const GridGeometry& g, double pos1 = 0.0, double pos2 = 0.0);

/// Uniform random components in [-1, 1]^4 per sample.
SampledSignal random_signal(std::uint64_t seed, const GridGeometry& g);

/// Sum of a few Gaussian bumps with random quaternion coefficients, moderate
/// widths and centers: smooth, decaying, quaternion-valued.
SampledSignal random_smooth_signal(std::uint64_t seed, const GridGeometry& g);

/// Random unimodular parameter block with |b| in [0.5, 2] (sign random when
/// allow_negative_b), |a| in [0.5, 2], c in [-1, 1], d solved from the
/// unimodularity constraint, offsets in [-1, 1].
OffsetParams random_offset_params(std::uint64_t seed, bool allow_negative_b = false);

/// The lattice-check generator f(x) = amplitude * e^{-pi |x|^2}: closed under
/// the cyclic-convention transform (hat f = amplitude * e^{-pi |k|^2}), so
/// both sides of the summation identities evaluate analytically.
struct AnalyticGaussianPi {
    double amplitude{1.0};

    double value(double x1, double x2) const;
    double qft_hat(double k1, double k2) const;

    SampledSignal sample(const GridGeometry& g) const;
};

}  // namespace qwvd

#endif
