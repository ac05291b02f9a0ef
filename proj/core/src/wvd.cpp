#include "qwvd/wvd.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/separable.hpp"
#include "qwvd/parallel.hpp"

namespace qwvd {

namespace {

int nearest_index(double x, double origin, double delta, int n) {
    const long long k = std::llround((x - origin) / delta);
    return (k < 0 || k >= n) ? -1 : static_cast<int>(k);
}

double sqrt_positive(double d, const char* who) {
    if (!(d > 0.0))
        throw std::domain_error(std::string(who) + ": degenerate branch requires d > 0");
    return std::sqrt(d);
}

Quaternion degenerate_prefactor(const OffsetParams& p, const PureUnitAxis& axis, double u,
                                const char* who) {
    const double s = sqrt_positive(p.d, who);
    const double w = u - p.tau;
    return s * axis_exp(axis, 0.5 * p.c * p.d * w * w + u * p.tau);
}

int lag_multiple(int idx, int n, int parity) {
    const int q = (parity + n) % 2;
    return 2 * idx - n + q;
}

// Definition-style closed forms for slices when b1 and/or b2 vanish: the lag
// on a degenerate axis is pinned to d*(u - tau) and the signal factors are
// read at the nearest samples of t +- lag/2 (zero outside the grid).
std::vector<Quaternion> wvd_slice_degenerate(const SampledSignal& f, const SampledSignal& g,
                                             int c1, int c2, const OffsetParams& p1,
                                             const OffsetParams& p2, const AxisPair& axes,
                                             const GridGeometry& freq) {
    const GridGeometry& tg = f.geometry;
    const double t1 = tg.origin1 + c1 * tg.delta1 / 2.0;
    const double t2 = tg.origin2 + c2 * tg.delta2 / 2.0;
    std::vector<Quaternion> out(freq.size());

    if (p1.degenerate() && !p2.degenerate()) {
        for (int k1 = 0; k1 < freq.n1; ++k1) {
            const double u1 = freq.coord1(k1);
            const double lag1 = p1.d * (u1 - p1.tau);
            const Quaternion pre = degenerate_prefactor(p1, axes.left, u1, "wvd_qolct");
            const int a1p = nearest_index(t1 + lag1 / 2.0, tg.origin1, tg.delta1, tg.n1);
            const int a1m = nearest_index(t1 - lag1 / 2.0, tg.origin1, tg.delta1, tg.n1);
            if (a1p < 0 || a1m < 0) continue;
            for (int k2 = 0; k2 < freq.n2; ++k2) {
                const double u2 = freq.coord2(k2);
                Quaternion acc{};
                for (int i2 = 0; i2 < tg.n2; ++i2) {
                    const int m2 = lag_multiple(i2, tg.n2, c2 & 1);
                    const int a2 = (c2 + m2) / 2, b2 = (c2 - m2) / 2;
                    if (!f.in_range(a1p, a2) || !g.in_range(a1m, b2)) continue;
                    acc += f.at(a1p, a2) * conj(g.at(a1m, b2)) *
                           kernel_right(p2, axes.right, m2 * tg.delta2, u2);
                }
                out[static_cast<std::size_t>(k1) * freq.n2 + k2] =
                    pre * acc * (2.0 * tg.delta2);
            }
        }
        return out;
    }

    if (!p1.degenerate() && p2.degenerate()) {
        for (int k2 = 0; k2 < freq.n2; ++k2) {
            const double u2 = freq.coord2(k2);
            const double lag2 = p2.d * (u2 - p2.tau);
            const Quaternion post = degenerate_prefactor(p2, axes.right, u2, "wvd_qolct");
            const int a2p = nearest_index(t2 + lag2 / 2.0, tg.origin2, tg.delta2, tg.n2);
            const int a2m = nearest_index(t2 - lag2 / 2.0, tg.origin2, tg.delta2, tg.n2);
            if (a2p < 0 || a2m < 0) continue;
            for (int k1 = 0; k1 < freq.n1; ++k1) {
                const double u1 = freq.coord1(k1);
                Quaternion acc{};
                for (int i1 = 0; i1 < tg.n1; ++i1) {
                    const int m1 = lag_multiple(i1, tg.n1, c1 & 1);
                    const int a1 = (c1 + m1) / 2, b1 = (c1 - m1) / 2;
                    if (!f.in_range(a1, a2p) || !g.in_range(b1, a2m)) continue;
                    acc += kernel_left(p1, axes.left, m1 * tg.delta1, u1) *
                           (f.at(a1, a2p) * conj(g.at(b1, a2m)));
                }
                out[static_cast<std::size_t>(k1) * freq.n2 + k2] =
                    acc * post * (2.0 * tg.delta1);
            }
        }
        return out;
    }

    for (int k1 = 0; k1 < freq.n1; ++k1) {
        const double u1 = freq.coord1(k1);
        const double lag1 = p1.d * (u1 - p1.tau);
        const Quaternion pre = degenerate_prefactor(p1, axes.left, u1, "wvd_qolct");
        const int a1p = nearest_index(t1 + lag1 / 2.0, tg.origin1, tg.delta1, tg.n1);
        const int a1m = nearest_index(t1 - lag1 / 2.0, tg.origin1, tg.delta1, tg.n1);
        for (int k2 = 0; k2 < freq.n2; ++k2) {
            const double u2 = freq.coord2(k2);
            const double lag2 = p2.d * (u2 - p2.tau);
            const Quaternion post = degenerate_prefactor(p2, axes.right, u2, "wvd_qolct");
            const int a2p = nearest_index(t2 + lag2 / 2.0, tg.origin2, tg.delta2, tg.n2);
            const int a2m = nearest_index(t2 - lag2 / 2.0, tg.origin2, tg.delta2, tg.n2);
            if (a1p < 0 || a1m < 0 || a2p < 0 || a2m < 0) continue;
            out[static_cast<std::size_t>(k1) * freq.n2 + k2] =
                pre * (f.at(a1p, a2p) * conj(g.at(a1m, a2m))) * post;
        }
    }
    return out;
}

}  // namespace

GridGeometry half_step_refined(const GridGeometry& time) {
    time.validate();
    GridGeometry g = time;
    g.n1 = 2 * time.n1 - 1;
    g.n2 = 2 * time.n2 - 1;
    g.delta1 = time.delta1 / 2.0;
    g.delta2 = time.delta2 / 2.0;
    return g;
}

GridGeometry wvd_dual_grid(const GridGeometry& time, const OffsetParams& p1,
                           const OffsetParams& p2) {
    return qolct_dual_grid(lag_geometry(time, 0, 0), p1, p2);
}

void wvd_for_each_slice(
    const SampledSignal& f, const SampledSignal& g, const OffsetParams& p1,
    const OffsetParams& p2, const AxisPair& axes, const GridGeometry& freq, bool half_step,
    bool use_fft,
    const std::function<void(int c1, int c2, const std::vector<Quaternion>& slice)>& fn) {
    if (!(f.geometry == g.geometry))
        throw std::invalid_argument("wvd: signals must share geometry");
    p1.validate();
    p2.validate();
    const bool degenerate = p1.degenerate() || p2.degenerate();
    if (use_fft && degenerate)
        throw std::domain_error("wvd_via_qft: degenerate branch (b == 0); use wvd_qolct");
    if (use_fft && !axes.is_ij())
        throw std::invalid_argument("wvd_via_qft: FFT path supports axes (i, j) only");

    const GridGeometry& tg = f.geometry;
    const int step = half_step ? 1 : 2;
    const int count1 = half_step ? 2 * tg.n1 - 1 : tg.n1;
    const int count2 = half_step ? 2 * tg.n2 - 1 : tg.n2;

    parallel_for(count1 * count2, [&](int idx) {
        const int c1 = (idx / count2) * step;
        const int c2 = (idx % count2) * step;
        std::vector<Quaternion> slice;
        if (degenerate) {
            slice = wvd_slice_degenerate(f, g, c1, c2, p1, p2, axes, freq);
        } else {
            const SampledSignal h = correlation_product_half_step(f, g, c1, c2);
            slice = use_fft ? qolct_fast(h, p1, p2, freq).values
                            : qolct_forward(h, p1, p2, axes, freq).values;
        }
        fn(c1, c2, slice);
    });
}

namespace {

WvdGrid materialize(const SampledSignal& f, const SampledSignal& g, const OffsetParams& p1,
                    const OffsetParams& p2, const AxisPair& axes, const GridGeometry& freq,
                    bool half_step, bool use_fft) {
    WvdGrid W(half_step ? half_step_refined(f.geometry) : f.geometry, freq);
    const int step = half_step ? 1 : 2;
    wvd_for_each_slice(f, g, p1, p2, axes, freq, half_step, use_fft,
                       [&](int c1, int c2, const std::vector<Quaternion>& slice) {
                           Quaternion* dst = W.slice(c1 / step, c2 / step);
                           std::copy(slice.begin(), slice.end(), dst);
                       });
    return W;
}

}  // namespace

WvdGrid wvd_qolct(const SampledSignal& f, const SampledSignal& g, const OffsetParams& p1,
                  const OffsetParams& p2, const AxisPair& axes, const GridGeometry& freq) {
    return materialize(f, g, p1, p2, axes, freq, false, false);
}

WvdGrid wvd_qolct_half_step(const SampledSignal& f, const SampledSignal& g,
                            const OffsetParams& p1, const OffsetParams& p2, const AxisPair& axes,
                            const GridGeometry& freq) {
    return materialize(f, g, p1, p2, axes, freq, true, false);
}

WvdGrid wvd_via_qft(const SampledSignal& f, const SampledSignal& g, const OffsetParams& p1,
                    const OffsetParams& p2, const GridGeometry& freq) {
    return materialize(f, g, p1, p2, AxisPair::ij(), freq, false, true);
}

WvdGrid wvd_via_qft_half_step(const SampledSignal& f, const SampledSignal& g,
                              const OffsetParams& p1, const OffsetParams& p2,
                              const GridGeometry& freq) {
    return materialize(f, g, p1, p2, AxisPair::ij(), freq, true, true);
}

namespace {

void check_inversion_inputs(const WvdGrid& W, const SampledSignal& g, const OffsetParams& p1,
                            const OffsetParams& p2, const char* who) {
    p1.validate();
    p2.validate();
    if (p1.degenerate() || p2.degenerate())
        throw std::domain_error(std::string(who) + ": degenerate branch has no kernel");
    if (!(W.time == half_step_refined(g.geometry)))
        throw std::invalid_argument(std::string(who) +
                                    ": W must be sampled on the half-step refinement of the "
                                    "window grid");
}

double window_energy(const SampledSignal& g, const char* who) {
    const double n2 = lp_norm(g, 2.0);
    if (!(n2 > 0.0))
        throw std::domain_error(std::string(who) + ": zero window");
    return n2 * n2;
}

}  // namespace

SampledSignal wvd_inverse(const WvdGrid& W, const SampledSignal& g, const OffsetParams& p1,
                          const OffsetParams& p2, const AxisPair& axes) {
    check_inversion_inputs(W, g, p1, p2, "wvd_inverse");
    const double energy = window_energy(g, "wvd_inverse");
    const GridGeometry& tg = g.geometry;
    const GridGeometry& ug = W.freq;

    // conj-kernel tables over every reachable lag value m*delta, |m| <= n-1
    std::vector<Quaternion> ck1(static_cast<std::size_t>(2 * tg.n1 - 1) * ug.n1);
    for (int m = -(tg.n1 - 1); m <= tg.n1 - 1; ++m)
        for (int k = 0; k < ug.n1; ++k)
            ck1[static_cast<std::size_t>(m + tg.n1 - 1) * ug.n1 + k] =
                conj(kernel_left(p1, axes.left, m * tg.delta1, ug.coord1(k)));
    std::vector<Quaternion> ck2(static_cast<std::size_t>(ug.n2) * (2 * tg.n2 - 1));
    for (int k = 0; k < ug.n2; ++k)
        for (int m = -(tg.n2 - 1); m <= tg.n2 - 1; ++m)
            ck2[static_cast<std::size_t>(k) * (2 * tg.n2 - 1) + (m + tg.n2 - 1)] =
                conj(kernel_right(p2, axes.right, m * tg.delta2, ug.coord2(k)));

    SampledSignal out(tg);
    const double de = tg.cell_area();
    const double du = ug.cell_area();
    std::vector<Quaternion> slice(W.slice_stride());

    for (int c1 = 0; c1 <= 2 * (tg.n1 - 1); ++c1) {
        const int b1lo = std::max(0, c1 - (tg.n1 - 1));
        const int b1hi = std::min(tg.n1 - 1, c1);
        const int rows = b1hi - b1lo + 1;
        std::vector<Quaternion> left(static_cast<std::size_t>(rows) * ug.n1);
        for (int r = 0; r < rows; ++r) {
            const int m1 = c1 - 2 * (b1lo + r);
            std::copy_n(&ck1[static_cast<std::size_t>(m1 + tg.n1 - 1) * ug.n1], ug.n1,
                        &left[static_cast<std::size_t>(r) * ug.n1]);
        }
        for (int c2 = 0; c2 <= 2 * (tg.n2 - 1); ++c2) {
            const int b2lo = std::max(0, c2 - (tg.n2 - 1));
            const int b2hi = std::min(tg.n2 - 1, c2);
            const int cols = b2hi - b2lo + 1;
            std::vector<Quaternion> right(static_cast<std::size_t>(ug.n2) * cols);
            for (int k = 0; k < ug.n2; ++k)
                for (int r = 0; r < cols; ++r) {
                    const int m2 = c2 - 2 * (b2lo + r);
                    right[static_cast<std::size_t>(k) * cols + r] =
                        ck2[static_cast<std::size_t>(k) * (2 * tg.n2 - 1) + (m2 + tg.n2 - 1)];
                }

            const Quaternion* w = W.slice(c1, c2);
            slice.assign(w, w + W.slice_stride());
            const auto rec = detail::separable_apply(slice, ug.n1, ug.n2, rows, cols, left,
                                                     right, du);
            for (int r1 = 0; r1 < rows; ++r1) {
                const int b1 = b1lo + r1, a1 = c1 - b1;
                for (int r2 = 0; r2 < cols; ++r2) {
                    const int b2 = b2lo + r2, a2 = c2 - b2;
                    out.at(a1, a2) +=
                        rec[static_cast<std::size_t>(r1) * cols + r2] * g.at(b1, b2) * de;
                }
            }
        }
    }
    for (auto& q : out.values) q *= 1.0 / energy;
    return out;
}

SampledSignal wvd_inverse_fast(const WvdGrid& W, const SampledSignal& g, const OffsetParams& p1,
                               const OffsetParams& p2) {
    check_inversion_inputs(W, g, p1, p2, "wvd_inverse_fast");
    const double energy = window_energy(g, "wvd_inverse_fast");
    const GridGeometry& tg = g.geometry;

    SampledSignal out(tg);
    const double de = tg.cell_area();
    Spectrum fs;
    fs.geometry = W.freq;

    for (int c1 = 0; c1 <= 2 * (tg.n1 - 1); ++c1) {
        const int q1 = ((c1 & 1) + tg.n1) % 2;
        for (int c2 = 0; c2 <= 2 * (tg.n2 - 1); ++c2) {
            const int q2 = ((c2 & 1) + tg.n2) % 2;
            const Quaternion* w = W.slice(c1, c2);
            fs.values.assign(w, w + W.slice_stride());
            const SampledSignal h =
                qolct_fast_inverse(fs, p1, p2, lag_geometry(tg, c1 & 1, c2 & 1));

            const int b1lo = std::max(0, c1 - (tg.n1 - 1));
            const int b1hi = std::min(tg.n1 - 1, c1);
            const int b2lo = std::max(0, c2 - (tg.n2 - 1));
            const int b2hi = std::min(tg.n2 - 1, c2);
            for (int b1 = b1lo; b1 <= b1hi; ++b1) {
                const int m1 = c1 - 2 * b1;
                const int i1 = (m1 + tg.n1 - q1) / 2;
                for (int b2 = b2lo; b2 <= b2hi; ++b2) {
                    const int m2 = c2 - 2 * b2;
                    const int i2 = (m2 + tg.n2 - q2) / 2;
                    out.at(c1 - b1, c2 - b2) += h.at(i1, i2) * g.at(b1, b2) * de;
                }
            }
        }
    }
    for (auto& q : out.values) q *= 1.0 / energy;
    return out;
}

std::pair<double, double> wvd_plancherel_check(const SampledSignal& f, const SampledSignal& g,
                                               const OffsetParams& p1, const OffsetParams& p2,
                                               const AxisPair& axes) {
    if (p1.degenerate() || p2.degenerate())
        throw std::domain_error("wvd_plancherel_check: requires b1*b2 != 0");
    const GridGeometry& tg = f.geometry;
    const GridGeometry freq = wvd_dual_grid(tg, p1, p2);
    const double du = freq.cell_area();

    std::vector<double> partial(tg.size(), 0.0);
    parallel_for(static_cast<int>(tg.size()), [&](int idx) {
        const int i1 = idx / tg.n2, i2 = idx % tg.n2;
        const SampledSignal h = correlation_product(f, g, i1, i2);
        const ModuleSpectrum ms = qolct_module_spectrum(h, p1, p2, axes, freq);
        double acc = 0.0;
        for (int k1 = 0; k1 < freq.n1; ++k1)
            for (int k2 = 0; k2 < freq.n2; ++k2) acc += ms.module_norm_sq(k1, k2);
        partial[idx] = acc * du;
    });
    double total = 0.0;
    for (double v : partial) total += v;  // index order, deterministic
    return {std::sqrt(total * tg.cell_area()), lp_norm(f, 2.0) * lp_norm(g, 2.0)};
}

}  // namespace qwvd
