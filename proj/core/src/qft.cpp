#include "qwvd/qft.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/separable.hpp"
#include "detail/two_sided_fft.hpp"

namespace qwvd {

namespace {

std::vector<Quaternion> exp_table(const PureUnitAxis& axis, int n_out, int n_in,
                                  const GridGeometry& out_g, const GridGeometry& in_g,
                                  int out_axis, int in_axis, double sign) {
    std::vector<Quaternion> t(static_cast<std::size_t>(n_out) * n_in);
    for (int o = 0; o < n_out; ++o) {
        const double u = out_axis == 1 ? out_g.coord1(o) : out_g.coord2(o);
        for (int m = 0; m < n_in; ++m) {
            const double tc = in_axis == 1 ? in_g.coord1(m) : in_g.coord2(m);
            t[static_cast<std::size_t>(o) * n_in + m] = axis_exp(axis, sign * u * tc);
        }
    }
    return t;
}

detail::FftAxis dual_axis(int n, double delta, double origin, double f_origin, double f_step,
                          double sign) {
    detail::FftAxis a;
    a.n = n;
    a.in_origin = origin;
    a.in_step = delta;
    a.out_origin = f_origin;
    a.out_step = f_step;
    a.sign = sign;
    a.weight = delta;
    return a;
}

void require_commensurate(const detail::FftAxis& a1, const detail::FftAxis& a2,
                          const char* fallback) {
    if (!a1.commensurate() || !a2.commensurate())
        throw std::invalid_argument(std::string("frequency grid is not DFT-commensurate "
                                                "with the sample grid; use ") +
                                    fallback);
}

}  // namespace

GridGeometry qft_dual_grid(const GridGeometry& time) {
    time.validate();
    GridGeometry g;
    g.n1 = time.n1;
    g.n2 = time.n2;
    g.delta1 = 2.0 * M_PI / (time.n1 * time.delta1);
    g.delta2 = 2.0 * M_PI / (time.n2 * time.delta2);
    g.origin1 = -(time.n1 / 2) * g.delta1;
    g.origin2 = -(time.n2 / 2) * g.delta2;
    return g;
}

Spectrum qft_forward(const SampledSignal& f, const AxisPair& axes, const GridGeometry& freq) {
    freq.validate();
    const GridGeometry& tg = f.geometry;
    auto left = exp_table(axes.left, freq.n1, tg.n1, freq, tg, 1, 1, -1.0);
    auto right_t = exp_table(axes.right, freq.n2, tg.n2, freq, tg, 2, 2, -1.0);
    // right table needs layout (in2 x out2)
    std::vector<Quaternion> right(static_cast<std::size_t>(tg.n2) * freq.n2);
    for (int o = 0; o < freq.n2; ++o)
        for (int m = 0; m < tg.n2; ++m)
            right[static_cast<std::size_t>(m) * freq.n2 + o] =
                right_t[static_cast<std::size_t>(o) * tg.n2 + m];

    Spectrum out(freq);
    out.values = detail::separable_apply(f.values, tg.n1, tg.n2, freq.n1, freq.n2, left, right,
                                         tg.cell_area());
    return out;
}

SampledSignal qft_inverse(const Spectrum& F, const AxisPair& axes, const GridGeometry& time) {
    time.validate();
    const GridGeometry& ug = F.geometry;
    auto left = exp_table(axes.left, time.n1, ug.n1, time, ug, 1, 1, +1.0);
    auto right_t = exp_table(axes.right, time.n2, ug.n2, time, ug, 2, 2, +1.0);
    std::vector<Quaternion> right(static_cast<std::size_t>(ug.n2) * time.n2);
    for (int o = 0; o < time.n2; ++o)
        for (int m = 0; m < ug.n2; ++m)
            right[static_cast<std::size_t>(m) * time.n2 + o] =
                right_t[static_cast<std::size_t>(o) * ug.n2 + m];

    const double w = ug.cell_area() / (4.0 * M_PI * M_PI);
    SampledSignal out(time);
    out.values =
        detail::separable_apply(F.values, ug.n1, ug.n2, time.n1, time.n2, left, right, w);
    return out;
}

double ModuleSpectrum::l2_norm() const {
    const GridGeometry& g = geometry();
    double acc = 0.0;
    for (int k1 = 0; k1 < g.n1; ++k1)
        for (int k2 = 0; k2 < g.n2; ++k2) acc += module_norm_sq(k1, k2);
    return std::sqrt(acc * g.cell_area());
}

ModuleSpectrum qft_module_spectrum(const SampledSignal& f, const AxisPair& axes,
                                   const GridGeometry& freq) {
    ModuleSpectrum ms;
    const auto parts = component_split(f);

    detail::FftAxis a1 = dual_axis(f.geometry.n1, f.geometry.delta1, f.geometry.origin1,
                                   freq.origin1, freq.delta1, -1.0);
    detail::FftAxis a2 = dual_axis(f.geometry.n2, f.geometry.delta2, f.geometry.origin2,
                                   freq.origin2, freq.delta2, -1.0);
    const bool fast = axes.is_ij() && freq.n1 == f.geometry.n1 && freq.n2 == f.geometry.n2 &&
                      a1.commensurate() && a2.commensurate();

    for (int m = 0; m < 4; ++m) {
        if (fast) {
            ms.parts[m] = Spectrum(freq);
            ms.parts[m].values = detail::two_sided_fft_real(parts[m].values, a1, a2);
        } else {
            SampledSignal comp(f.geometry);
            for (std::size_t idx = 0; idx < comp.values.size(); ++idx)
                comp.values[idx] = Quaternion::real(parts[m].values[idx]);
            ms.parts[m] = qft_forward(comp, axes, freq);
        }
    }
    return ms;
}

Spectrum qft_fast(const SampledSignal& f, const GridGeometry& freq) {
    freq.validate();
    const GridGeometry& tg = f.geometry;
    if (freq.n1 != tg.n1 || freq.n2 != tg.n2)
        throw std::invalid_argument("qft_fast: frequency grid must match the sample counts; "
                                    "use qft_forward");
    detail::FftAxis a1 = dual_axis(tg.n1, tg.delta1, tg.origin1, freq.origin1, freq.delta1, -1.0);
    detail::FftAxis a2 = dual_axis(tg.n2, tg.delta2, tg.origin2, freq.origin2, freq.delta2, -1.0);
    require_commensurate(a1, a2, "qft_forward");

    Spectrum out(freq);
    out.values = detail::two_sided_fft(f.values, a1, a2);
    return out;
}

SampledSignal qft_fast_inverse(const Spectrum& F, const GridGeometry& time) {
    time.validate();
    const GridGeometry& ug = F.geometry;
    if (time.n1 != ug.n1 || time.n2 != ug.n2)
        throw std::invalid_argument("qft_fast_inverse: grid sample counts must match; "
                                    "use qft_inverse");
    detail::FftAxis a1 = dual_axis(ug.n1, ug.delta1, ug.origin1, time.origin1, time.delta1, +1.0);
    detail::FftAxis a2 = dual_axis(ug.n2, ug.delta2, ug.origin2, time.origin2, time.delta2, +1.0);
    require_commensurate(a1, a2, "qft_inverse");

    SampledSignal out(time);
    out.values = detail::two_sided_fft(F.values, a1, a2);
    const double c = 1.0 / (4.0 * M_PI * M_PI);
    for (auto& q : out.values) q *= c;
    return out;
}

}  // namespace qwvd
