#ifndef QWVD_ORACLE_HPP
#define QWVD_ORACLE_HPP

#include "qwvd/wvd.hpp"

namespace qwvd {

/// Brute-force evaluators: literal nested sums written independently of the
/// separable and FFT paths. They are the normative discrete semantics; any
/// disagreement beyond stated tolerances is a defect in the fast path.
/// Size guards keep accidental O(n^4)/O(n^6) runs out of CI; raise them
/// explicitly for deep local checks.

Spectrum oracle_qft(const SampledSignal& f, const AxisPair& axes, const GridGeometry& freq,
                    int size_guard = 32);

Spectrum oracle_qolct(const SampledSignal& f, const OffsetParams& p1, const OffsetParams& p2,
                      const AxisPair& axes, const GridGeometry& freq, int size_guard = 32);

WvdGrid oracle_wvd(const SampledSignal& f, const SampledSignal& g, const OffsetParams& p1,
                   const OffsetParams& p2, const AxisPair& axes, const GridGeometry& freq,
                   int size_guard = 8);

}  // namespace qwvd

#endif
