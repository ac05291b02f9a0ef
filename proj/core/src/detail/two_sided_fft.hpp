#ifndef QWVD_DETAIL_TWO_SIDED_FFT_HPP
#define QWVD_DETAIL_TWO_SIDED_FFT_HPP

#include <complex>
#include <vector>

#include "qwvd/grid.hpp"
#include "qwvd/quaternion.hpp"

namespace qwvd::detail {

// One axis of a two-sided transform evaluated by FFT. The kernel angle is
//   phi(t_m, u_k) = sign * u_k * t_m + extra(t_m)
// with t_m = in_origin + m*in_step and u_k = out_origin + k*out_step, and the
// axis unit is i on the left factor and j on the right factor. out_step may
// be negative; |out_step| * in_step * n must equal 2*pi (DFT-commensurate).
// `extra` (optional, size n) carries LCT-type chirp/modulation angles.
// `weight` is the quadrature weight folded into the pass.
struct FftAxis {
    int n{0};
    double in_origin{0.0};
    double in_step{1.0};
    double out_origin{0.0};
    double out_step{1.0};
    double sign{-1.0};
    const std::vector<double>* extra{nullptr};
    double weight{1.0};

    bool commensurate(double rel_tol = 1e-9) const;
};

// Transform of a quaternion array:
//   out(u) = Sum_t e^{i*phi1(t1,u1)} x(t) e^{j*phi2(t2,u2)} * weight1*weight2
// Input and output are n1 x n2 row-major; axes are fixed to (i, j).
std::vector<Quaternion> two_sided_fft(const std::vector<Quaternion>& x,
                                      const FftAxis& axis1, const FftAxis& axis2);

// Same transform for a real-valued array (single component; no unit passing).
std::vector<Quaternion> two_sided_fft_real(const std::vector<double>& x,
                                           const FftAxis& axis1, const FftAxis& axis2);

// Releases cached FFT plans (used by tests for leak hygiene; optional).
void clear_fft_plan_cache();

}  // namespace qwvd::detail

#endif
