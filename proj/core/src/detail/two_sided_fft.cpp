#include "detail/two_sided_fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qwvd::detail {

namespace {

using cplx = std::complex<double>;

// FFTW plan creation is not thread-safe; execution on distinct buffers is.
// Plans are cached per (axis, shape, sign) and created with FFTW_UNALIGNED so
// they can run on any caller buffer.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    ~PlanCache() { clear(); }

    fftw_plan get(int axis, int n1, int n2, int fftw_sign) {
        const Key key{axis, n1, n2, fftw_sign};
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(key);
        if (it != plans_.end())
            return it->second;

        std::vector<cplx> scratch(static_cast<std::size_t>(n1) * n2);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        int len = axis == 0 ? n1 : n2;
        int howmany = axis == 0 ? n2 : n1;
        int stride = axis == 0 ? n2 : 1;
        int dist = axis == 0 ? 1 : n2;
        fftw_plan plan = fftw_plan_many_dft(1, &len, howmany, buf, nullptr, stride, dist,
                                            buf, nullptr, stride, dist, fftw_sign,
                                            FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan)
            throw std::runtime_error("two_sided_fft: FFTW planning failed");
        plans_.emplace(key, plan);
        return plan;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mutex_);
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
        plans_.clear();
    }

  private:
    using Key = std::tuple<int, int, int, int>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

// In-place batched 1D DFT along the given axis of a row-major n1 x n2 array.
void batched_dft(cplx* data, int n1, int n2, int axis, int fftw_sign) {
    fftw_plan plan = PlanCache::instance().get(axis, n1, n2, fftw_sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, buf, buf);
}

void check_axis(const FftAxis& a) {
    if (a.n < 2)
        throw std::invalid_argument("two_sided_fft: axis needs n >= 2");
    if (!a.commensurate())
        throw std::invalid_argument(
            "two_sided_fft: frequency axis not DFT-commensurate with the sample axis; "
            "use the direct-sum transform");
    if (a.extra && static_cast<int>(a.extra->size()) != a.n)
        throw std::invalid_argument("two_sided_fft: extra phase table size mismatch");
}

// phi(t_m, u_k) = sign*u_k*t_m + extra_m splits as
//   [sign*out_origin*t_m + extra_m]  (pre-phase, per input sample)
// + [sign*k*out_step*in_origin]      (post-phase, per output sample)
// + [sign*out_step*in_step * k*m]    (the DFT itself, e^{±2pi i km/n})
void axis_pass(std::vector<cplx>& data, int n1, int n2, int axis, const FftAxis& a,
               double conj_kernel) {
    const double sgn = a.sign * conj_kernel;
    const int n = axis == 0 ? n1 : n2;
    std::vector<cplx> pre(n), post(n);
    for (int m = 0; m < n; ++m) {
        const double t = a.in_origin + m * a.in_step;
        double angle = sgn * a.out_origin * t;
        if (a.extra) angle += conj_kernel * (*a.extra)[m];
        pre[m] = std::polar(a.weight, angle);
    }
    for (int k = 0; k < n; ++k)
        post[k] = std::polar(1.0, sgn * k * a.out_step * a.in_origin);

    const int fftw_sign = (sgn * a.out_step > 0.0) ? FFTW_BACKWARD : FFTW_FORWARD;

    if (axis == 0) {
        for (int m1 = 0; m1 < n1; ++m1)
            for (int m2 = 0; m2 < n2; ++m2) data[static_cast<std::size_t>(m1) * n2 + m2] *= pre[m1];
        batched_dft(data.data(), n1, n2, 0, fftw_sign);
        for (int k1 = 0; k1 < n1; ++k1)
            for (int m2 = 0; m2 < n2; ++m2) data[static_cast<std::size_t>(k1) * n2 + m2] *= post[k1];
    } else {
        for (int m1 = 0; m1 < n1; ++m1)
            for (int m2 = 0; m2 < n2; ++m2) data[static_cast<std::size_t>(m1) * n2 + m2] *= pre[m2];
        batched_dft(data.data(), n1, n2, 1, fftw_sign);
        for (int m1 = 0; m1 < n1; ++m1)
            for (int k2 = 0; k2 < n2; ++k2) data[static_cast<std::size_t>(m1) * n2 + k2] *= post[k2];
    }
}

// Four trig tensor sums of one real component:
//   CC = Sum x cos(phi1) cos(phi2), SC = Sum x sin(phi1) cos(phi2),
//   CS = Sum x cos(phi1) sin(phi2), SS = Sum x sin(phi1) sin(phi2),
// computed with one axis-0 complex pass and two axis-1 passes.
// conj1 = -1 flips the sign of phi1 (used when a left unit is passed through).
struct TrigSums {
    std::vector<double> cc, sc, cs, ss;
};

TrigSums trig_sums(const std::vector<double>& x, int n1, int n2, const FftAxis& a1,
                   const FftAxis& a2, double conj1) {
    const std::size_t total = static_cast<std::size_t>(n1) * n2;
    std::vector<cplx> p(total);
    for (std::size_t idx = 0; idx < total; ++idx) p[idx] = x[idx];
    axis_pass(p, n1, n2, 0, a1, conj1);

    std::vector<cplx> qc(total), qs(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        qc[idx] = p[idx].real();
        qs[idx] = p[idx].imag();
    }
    axis_pass(qc, n1, n2, 1, a2, 1.0);
    axis_pass(qs, n1, n2, 1, a2, 1.0);

    TrigSums out;
    out.cc.resize(total);
    out.sc.resize(total);
    out.cs.resize(total);
    out.ss.resize(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        out.cc[idx] = qc[idx].real();
        out.cs[idx] = qc[idx].imag();
        out.sc[idx] = qs[idx].real();
        out.ss[idx] = qs[idx].imag();
    }
    return out;
}

}  // namespace

bool FftAxis::commensurate(double rel_tol) const {
    const double prod = std::abs(out_step) * in_step * n;
    return std::abs(prod - 2.0 * M_PI) <= rel_tol * 2.0 * M_PI;
}

std::vector<Quaternion> two_sided_fft_real(const std::vector<double>& x, const FftAxis& axis1,
                                           const FftAxis& axis2) {
    check_axis(axis1);
    check_axis(axis2);
    const int n1 = axis1.n, n2 = axis2.n;
    if (x.size() != static_cast<std::size_t>(n1) * n2)
        throw std::invalid_argument("two_sided_fft_real: array size mismatch");
    TrigSums t = trig_sums(x, n1, n2, axis1, axis2, 1.0);
    std::vector<Quaternion> out(x.size());
    for (std::size_t idx = 0; idx < out.size(); ++idx)
        out[idx] = Quaternion{t.cc[idx], t.sc[idx], t.cs[idx], t.ss[idx]};
    return out;
}

std::vector<Quaternion> two_sided_fft(const std::vector<Quaternion>& x, const FftAxis& axis1,
                                      const FftAxis& axis2) {
    check_axis(axis1);
    check_axis(axis2);
    const int n1 = axis1.n, n2 = axis2.n;
    const std::size_t total = static_cast<std::size_t>(n1) * n2;
    if (x.size() != total)
        throw std::invalid_argument("two_sided_fft: array size mismatch");

    std::vector<double> comp(total);
    std::vector<Quaternion> out(total);

    // Left units j, k anticommute with the i-axis kernel, so components 2 and 3
    // see the conjugated left kernel. Per component m, with T_m the trig sums,
    //   out = T_0 + i*T_1' + j*T_2' + k*T_3'
    // expands to the sign table below.
    for (int m = 0; m < 4; ++m) {
        for (std::size_t idx = 0; idx < total; ++idx) {
            const Quaternion& q = x[idx];
            comp[idx] = m == 0 ? q.w : m == 1 ? q.x : m == 2 ? q.y : q.z;
        }
        const double conj1 = (m < 2) ? 1.0 : -1.0;
        TrigSums t = trig_sums(comp, n1, n2, axis1, axis2, conj1);
        for (std::size_t idx = 0; idx < total; ++idx) {
            const double cc = t.cc[idx], sc = t.sc[idx], cs = t.cs[idx], ss = t.ss[idx];
            Quaternion& o = out[idx];
            switch (m) {
                case 0:
                    o += Quaternion{cc, sc, cs, ss};
                    break;
                case 1:  // i * (cc + i sc + j cs + k ss)
                    o += Quaternion{-sc, cc, -ss, cs};
                    break;
                case 2:  // j * (cc + i sc + j cs + k ss)
                    o += Quaternion{-cs, ss, cc, -sc};
                    break;
                case 3:  // k * (cc + i sc + j cs + k ss)
                    o += Quaternion{-ss, -cs, sc, cc};
                    break;
            }
        }
    }
    return out;
}

void clear_fft_plan_cache() { PlanCache::instance().clear(); }

}  // namespace qwvd::detail
