#include "qwvd/qolct.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/separable.hpp"
#include "detail/two_sided_fft.hpp"

namespace qwvd {

namespace {

// Kernel exponent split: K(t,u) = W * e^{axis*(x(t) - t*u/b + y(u))} with
//   x(t) = a t^2/(2b) + t*tau/b
//   y(u) = -u(d*tau - b*eta)/b + d(u^2 + tau^2)/(2b)
// The t-only part feeds the FFT pre-phase, the u-only part the post-factor.
double chirp_angle(const OffsetParams& p, double t) {
    return p.a * t * t / (2.0 * p.b) + t * p.tau / p.b;
}

double post_angle(const OffsetParams& p, double u) {
    return -u * (p.d * p.tau - p.b * p.eta) / p.b + p.d * (u * u + p.tau * p.tau) / (2.0 * p.b);
}

void require_invertible_branch(const OffsetParams& p1, const OffsetParams& p2, const char* who) {
    if (p1.degenerate() || p2.degenerate())
        throw std::domain_error(std::string(who) + ": degenerate branch (b == 0) has no kernel");
}

int nearest_index(double x, double origin, double delta, int n) {
    const double pos = (x - origin) / delta;
    const long long k = std::llround(pos);
    if (k < 0 || k >= n) return -1;
    return static_cast<int>(k);
}

double degenerate_scale(double d, const char* who) {
    if (!(d > 0.0))
        throw std::domain_error(std::string(who) +
                                ": degenerate branch requires d > 0 (sqrt(d) in the closed form)");
    return std::sqrt(d);
}

// sqrt(d) * e^{axis*(c*d/2*(u-tau)^2 + u*tau)}, the b == 0 prefactor.
Quaternion degenerate_prefactor(const OffsetParams& p, const PureUnitAxis& axis, double u,
                                const char* who) {
    const double s = degenerate_scale(p.d, who);
    const double w = u - p.tau;
    return s * axis_exp(axis, 0.5 * p.c * p.d * w * w + u * p.tau);
}

std::vector<Quaternion> left_kernel_table(const OffsetParams& p, const PureUnitAxis& axis,
                                          const GridGeometry& tg, const GridGeometry& fg) {
    std::vector<Quaternion> t(static_cast<std::size_t>(fg.n1) * tg.n1);
    for (int k = 0; k < fg.n1; ++k)
        for (int m = 0; m < tg.n1; ++m)
            t[static_cast<std::size_t>(k) * tg.n1 + m] =
                kernel_left(p, axis, tg.coord1(m), fg.coord1(k));
    return t;
}

std::vector<Quaternion> right_kernel_table(const OffsetParams& p, const PureUnitAxis& axis,
                                           const GridGeometry& tg, const GridGeometry& fg) {
    // layout (in2 x out2) as separable_apply expects
    std::vector<Quaternion> t(static_cast<std::size_t>(tg.n2) * fg.n2);
    for (int m = 0; m < tg.n2; ++m)
        for (int k = 0; k < fg.n2; ++k)
            t[static_cast<std::size_t>(m) * fg.n2 + k] =
                kernel_right(p, axis, tg.coord2(m), fg.coord2(k));
    return t;
}

}  // namespace

void OffsetParams::validate() const {
    if (std::abs(a * d - b * c - 1.0) > 1e-12)
        throw std::invalid_argument("OffsetParams: matrix must be unimodular (a*d - b*c = 1)");
}

Quaternion inv_sqrt_axis_scaled(const PureUnitAxis& axis, double c) {
    if (c == 0.0)
        throw std::domain_error("inv_sqrt_axis_scaled: zero scale");
    if (c > 0.0)
        return axis_exp(axis, -0.25 * M_PI) * (1.0 / std::sqrt(c));
    return axis_exp(axis, 0.25 * M_PI) * (1.0 / std::sqrt(-c));
}

Quaternion sqrt_axis_scaled(const PureUnitAxis& axis, double c) {
    if (c == 0.0) return Quaternion{};
    if (c > 0.0)
        return std::sqrt(c) * axis_exp(axis, 0.25 * M_PI);
    return std::sqrt(-c) * axis_exp(axis, -0.25 * M_PI);
}

Quaternion kernel_left(const OffsetParams& p, const PureUnitAxis& axis, double t1, double u1) {
    if (p.degenerate())
        throw std::domain_error("kernel_left: b == 0 (degenerate branch has no kernel)");
    const double e = (p.a * t1 * t1 - 2.0 * t1 * (u1 - p.tau) -
                      2.0 * u1 * (p.d * p.tau - p.b * p.eta) +
                      p.d * (u1 * u1 + p.tau * p.tau)) /
                     (2.0 * p.b);
    return inv_sqrt_axis_scaled(axis, 2.0 * M_PI * p.b) * axis_exp(axis, e);
}

Quaternion kernel_right(const OffsetParams& p, const PureUnitAxis& axis, double t2, double u2) {
    if (p.degenerate())
        throw std::domain_error("kernel_right: b == 0 (degenerate branch has no kernel)");
    const double e = (p.a * t2 * t2 - 2.0 * t2 * (u2 - p.tau) -
                      2.0 * u2 * (p.d * p.tau - p.b * p.eta) +
                      p.d * (u2 * u2 + p.tau * p.tau)) /
                     (2.0 * p.b);
    return inv_sqrt_axis_scaled(axis, 2.0 * M_PI * p.b) * axis_exp(axis, e);
}

GridGeometry qolct_dual_grid(const GridGeometry& time, const OffsetParams& p1,
                             const OffsetParams& p2) {
    require_invertible_branch(p1, p2, "qolct_dual_grid");
    const GridGeometry dual = qft_dual_grid(time);
    GridGeometry g;
    g.n1 = dual.n1;
    g.n2 = dual.n2;
    g.delta1 = std::abs(p1.b) * dual.delta1;
    g.delta2 = std::abs(p2.b) * dual.delta2;
    g.origin1 = p1.b > 0 ? p1.b * dual.origin1
                         : p1.b * (dual.origin1 + (dual.n1 - 1) * dual.delta1);
    g.origin2 = p2.b > 0 ? p2.b * dual.origin2
                         : p2.b * (dual.origin2 + (dual.n2 - 1) * dual.delta2);
    return g;
}

Spectrum qolct_forward(const SampledSignal& f, const OffsetParams& p1, const OffsetParams& p2,
                       const AxisPair& axes, const GridGeometry& freq) {
    freq.validate();
    p1.validate();
    p2.validate();
    const GridGeometry& tg = f.geometry;
    Spectrum out(freq);

    if (!p1.degenerate() && !p2.degenerate()) {
        auto left = left_kernel_table(p1, axes.left, tg, freq);
        auto right = right_kernel_table(p2, axes.right, tg, freq);
        out.values = detail::separable_apply(f.values, tg.n1, tg.n2, freq.n1, freq.n2, left,
                                             right, tg.cell_area());
        return out;
    }

    if (p1.degenerate() && !p2.degenerate()) {
        for (int k1 = 0; k1 < freq.n1; ++k1) {
            const double u1 = freq.coord1(k1);
            const int a1 =
                nearest_index(p1.d * (u1 - p1.tau), tg.origin1, tg.delta1, tg.n1);
            const Quaternion pre = degenerate_prefactor(p1, axes.left, u1, "qolct_forward");
            if (a1 < 0) continue;
            for (int k2 = 0; k2 < freq.n2; ++k2) {
                const double u2 = freq.coord2(k2);
                Quaternion acc{};
                for (int m2 = 0; m2 < tg.n2; ++m2)
                    acc += f.at(a1, m2) * kernel_right(p2, axes.right, tg.coord2(m2), u2);
                out.at(k1, k2) = pre * acc * tg.delta2;
            }
        }
        return out;
    }

    if (!p1.degenerate() && p2.degenerate()) {
        for (int k2 = 0; k2 < freq.n2; ++k2) {
            const double u2 = freq.coord2(k2);
            const int a2 =
                nearest_index(p2.d * (u2 - p2.tau), tg.origin2, tg.delta2, tg.n2);
            const Quaternion post = degenerate_prefactor(p2, axes.right, u2, "qolct_forward");
            if (a2 < 0) continue;
            for (int k1 = 0; k1 < freq.n1; ++k1) {
                const double u1 = freq.coord1(k1);
                Quaternion acc{};
                for (int m1 = 0; m1 < tg.n1; ++m1)
                    acc += kernel_left(p1, axes.left, tg.coord1(m1), u1) * f.at(m1, a2);
                out.at(k1, k2) = acc * post * tg.delta1;
            }
        }
        return out;
    }

    for (int k1 = 0; k1 < freq.n1; ++k1) {
        const double u1 = freq.coord1(k1);
        const int a1 = nearest_index(p1.d * (u1 - p1.tau), tg.origin1, tg.delta1, tg.n1);
        const Quaternion pre = degenerate_prefactor(p1, axes.left, u1, "qolct_forward");
        for (int k2 = 0; k2 < freq.n2; ++k2) {
            const double u2 = freq.coord2(k2);
            const int a2 = nearest_index(p2.d * (u2 - p2.tau), tg.origin2, tg.delta2, tg.n2);
            const Quaternion post = degenerate_prefactor(p2, axes.right, u2, "qolct_forward");
            if (a1 < 0 || a2 < 0) continue;
            out.at(k1, k2) = pre * f.at(a1, a2) * post;
        }
    }
    return out;
}

namespace {

detail::FftAxis forward_axis(const OffsetParams& p, int n, double delta, double origin,
                             double f_origin, double f_delta, std::vector<double>& chirp_store) {
    detail::FftAxis a;
    a.n = n;
    a.in_origin = origin;
    a.in_step = delta;
    a.out_origin = f_origin / p.b;
    a.out_step = f_delta / p.b;
    a.sign = -1.0;
    a.weight = delta;
    chirp_store.resize(n);
    for (int m = 0; m < n; ++m) chirp_store[m] = chirp_angle(p, origin + m * delta);
    a.extra = &chirp_store;
    return a;
}

}  // namespace

Spectrum qolct_fast(const SampledSignal& f, const OffsetParams& p1, const OffsetParams& p2,
                    const GridGeometry& freq) {
    freq.validate();
    p1.validate();
    p2.validate();
    require_invertible_branch(p1, p2, "qolct_fast");
    const GridGeometry& tg = f.geometry;
    if (freq.n1 != tg.n1 || freq.n2 != tg.n2)
        throw std::invalid_argument("qolct_fast: frequency grid must match sample counts; "
                                    "use qolct_forward");

    std::vector<double> chirp1, chirp2;
    detail::FftAxis a1 =
        forward_axis(p1, tg.n1, tg.delta1, tg.origin1, freq.origin1, freq.delta1, chirp1);
    detail::FftAxis a2 =
        forward_axis(p2, tg.n2, tg.delta2, tg.origin2, freq.origin2, freq.delta2, chirp2);
    if (!a1.commensurate() || !a2.commensurate())
        throw std::invalid_argument("qolct_fast: frequency grid not commensurate with the "
                                    "b-scaled dual grid; use qolct_forward");

    Spectrum out(freq);
    out.values = detail::two_sided_fft(f.values, a1, a2);

    const Quaternion w1 = inv_sqrt_axis_scaled(PureUnitAxis::i(), 2.0 * M_PI * p1.b);
    const Quaternion w2 = inv_sqrt_axis_scaled(PureUnitAxis::j(), 2.0 * M_PI * p2.b);
    std::vector<Quaternion> post1(freq.n1), post2(freq.n2);
    for (int k = 0; k < freq.n1; ++k)
        post1[k] = w1 * axis_exp(PureUnitAxis::i(), post_angle(p1, freq.coord1(k)));
    for (int k = 0; k < freq.n2; ++k)
        post2[k] = axis_exp(PureUnitAxis::j(), post_angle(p2, freq.coord2(k))) * w2;
    for (int k1 = 0; k1 < freq.n1; ++k1)
        for (int k2 = 0; k2 < freq.n2; ++k2) {
            Quaternion& q = out.at(k1, k2);
            q = post1[k1] * q * post2[k2];
        }
    return out;
}

SampledSignal qolct_inverse(const Spectrum& F, const OffsetParams& p1, const OffsetParams& p2,
                            const AxisPair& axes, const GridGeometry& time) {
    time.validate();
    p1.validate();
    p2.validate();
    require_invertible_branch(p1, p2, "qolct_inverse");
    const GridGeometry& ug = F.geometry;

    std::vector<Quaternion> left(static_cast<std::size_t>(time.n1) * ug.n1);
    for (int o = 0; o < time.n1; ++o)
        for (int m = 0; m < ug.n1; ++m)
            left[static_cast<std::size_t>(o) * ug.n1 + m] =
                conj(kernel_left(p1, axes.left, time.coord1(o), ug.coord1(m)));
    std::vector<Quaternion> right(static_cast<std::size_t>(ug.n2) * time.n2);
    for (int m = 0; m < ug.n2; ++m)
        for (int o = 0; o < time.n2; ++o)
            right[static_cast<std::size_t>(m) * time.n2 + o] =
                conj(kernel_right(p2, axes.right, time.coord2(o), ug.coord2(m)));

    SampledSignal out(time);
    out.values =
        detail::separable_apply(F.values, ug.n1, ug.n2, time.n1, time.n2, left, right,
                                ug.cell_area());
    return out;
}

SampledSignal qolct_fast_inverse(const Spectrum& F, const OffsetParams& p1,
                                 const OffsetParams& p2, const GridGeometry& time) {
    time.validate();
    p1.validate();
    p2.validate();
    require_invertible_branch(p1, p2, "qolct_fast_inverse");
    const GridGeometry& ug = F.geometry;
    if (time.n1 != ug.n1 || time.n2 != ug.n2)
        throw std::invalid_argument("qolct_fast_inverse: grid sample counts must match; "
                                    "use qolct_inverse");

    // f(t) = conj(W1) e^{-i*x1(t1)} [Sum_u e^{i(t1 u1/b1 - y1(u1))} F(u)
    //         e^{j(t2 u2/b2 - y2(u2))} du] e^{-j*x2(t2)} conj(W2)
    std::vector<double> phase1(ug.n1), phase2(ug.n2);
    for (int m = 0; m < ug.n1; ++m) phase1[m] = -post_angle(p1, ug.coord1(m));
    for (int m = 0; m < ug.n2; ++m) phase2[m] = -post_angle(p2, ug.coord2(m));

    detail::FftAxis a1;
    a1.n = ug.n1;
    a1.in_origin = ug.origin1;
    a1.in_step = ug.delta1;
    a1.out_origin = time.origin1 / p1.b;
    a1.out_step = time.delta1 / p1.b;
    a1.sign = +1.0;
    a1.weight = ug.delta1;
    a1.extra = &phase1;
    detail::FftAxis a2;
    a2.n = ug.n2;
    a2.in_origin = ug.origin2;
    a2.in_step = ug.delta2;
    a2.out_origin = time.origin2 / p2.b;
    a2.out_step = time.delta2 / p2.b;
    a2.sign = +1.0;
    a2.weight = ug.delta2;
    a2.extra = &phase2;
    if (!a1.commensurate() || !a2.commensurate())
        throw std::invalid_argument("qolct_fast_inverse: grids not commensurate; "
                                    "use qolct_inverse");

    SampledSignal out(time);
    out.values = detail::two_sided_fft(F.values, a1, a2);

    const Quaternion w1 = conj(inv_sqrt_axis_scaled(PureUnitAxis::i(), 2.0 * M_PI * p1.b));
    const Quaternion w2 = conj(inv_sqrt_axis_scaled(PureUnitAxis::j(), 2.0 * M_PI * p2.b));
    std::vector<Quaternion> post1(time.n1), post2(time.n2);
    for (int o = 0; o < time.n1; ++o)
        post1[o] = w1 * axis_exp(PureUnitAxis::i(), -chirp_angle(p1, time.coord1(o)));
    for (int o = 0; o < time.n2; ++o)
        post2[o] = axis_exp(PureUnitAxis::j(), -chirp_angle(p2, time.coord2(o))) * w2;
    for (int o1 = 0; o1 < time.n1; ++o1)
        for (int o2 = 0; o2 < time.n2; ++o2) {
            Quaternion& q = out.at(o1, o2);
            q = post1[o1] * q * post2[o2];
        }
    return out;
}

ModuleSpectrum qolct_module_spectrum(const SampledSignal& f, const OffsetParams& p1,
                                     const OffsetParams& p2, const AxisPair& axes,
                                     const GridGeometry& freq) {
    ModuleSpectrum ms;
    const auto parts = component_split(f);

    bool fast = axes.is_ij() && !p1.degenerate() && !p2.degenerate() &&
                freq.n1 == f.geometry.n1 && freq.n2 == f.geometry.n2;
    std::vector<double> chirp1, chirp2;
    detail::FftAxis a1, a2;
    if (fast) {
        const GridGeometry& tg = f.geometry;
        a1 = forward_axis(p1, tg.n1, tg.delta1, tg.origin1, freq.origin1, freq.delta1, chirp1);
        a2 = forward_axis(p2, tg.n2, tg.delta2, tg.origin2, freq.origin2, freq.delta2, chirp2);
        fast = a1.commensurate() && a2.commensurate();
    }

    if (fast) {
        const Quaternion w1 = inv_sqrt_axis_scaled(PureUnitAxis::i(), 2.0 * M_PI * p1.b);
        const Quaternion w2 = inv_sqrt_axis_scaled(PureUnitAxis::j(), 2.0 * M_PI * p2.b);
        std::vector<Quaternion> post1(freq.n1), post2(freq.n2);
        for (int k = 0; k < freq.n1; ++k)
            post1[k] = w1 * axis_exp(PureUnitAxis::i(), post_angle(p1, freq.coord1(k)));
        for (int k = 0; k < freq.n2; ++k)
            post2[k] = axis_exp(PureUnitAxis::j(), post_angle(p2, freq.coord2(k))) * w2;
        for (int m = 0; m < 4; ++m) {
            ms.parts[m] = Spectrum(freq);
            ms.parts[m].values = detail::two_sided_fft_real(parts[m].values, a1, a2);
            for (int k1 = 0; k1 < freq.n1; ++k1)
                for (int k2 = 0; k2 < freq.n2; ++k2) {
                    Quaternion& q = ms.parts[m].at(k1, k2);
                    q = post1[k1] * q * post2[k2];
                }
        }
        return ms;
    }

    for (int m = 0; m < 4; ++m) {
        SampledSignal comp(f.geometry);
        for (std::size_t idx = 0; idx < comp.values.size(); ++idx)
            comp.values[idx] = Quaternion::real(parts[m].values[idx]);
        ms.parts[m] = qolct_forward(comp, p1, p2, axes, freq);
    }
    return ms;
}

std::pair<double, double> qolct_plancherel_check(const SampledSignal& f, const OffsetParams& p1,
                                                 const OffsetParams& p2, const AxisPair& axes) {
    require_invertible_branch(p1, p2, "qolct_plancherel_check");
    const GridGeometry freq = qolct_dual_grid(f.geometry, p1, p2);
    ModuleSpectrum ms = qolct_module_spectrum(f, p1, p2, axes, freq);
    return {ms.l2_norm(), lp_norm(f, 2.0)};
}

RelationReport qolct_from_qlct_relation(const SampledSignal& f, const OffsetParams& p1,
                                        const OffsetParams& p2,
                                        std::array<double, 2> phase_time) {
    require_invertible_branch(p1, p2, "qolct_from_qlct_relation");
    p1.validate();
    p2.validate();
    const AxisPair axes = AxisPair::ij();
    const GridGeometry freq = qolct_dual_grid(f.geometry, p1, p2);

    const Spectrum lhs = qolct_forward(f, p1, p2, axes, freq);

    OffsetParams q1 = p1, q2 = p2;
    q1.tau = q1.eta = 0.0;
    q2.tau = q2.eta = 0.0;
    const Spectrum qlct = qolct_forward(f, q1, q2, axes, freq);

    // Literal phase layout: the left factor carries the free time value and
    // both inner tau^2 factors sit on the right-hand axis.
    const double t1 = phase_time[0], t2 = phase_time[1];
    const Quaternion mid1 =
        axis_exp(axes.right, p1.d * p1.tau * p1.tau / (2.0 * p1.b));
    const Quaternion mid2 =
        axis_exp(axes.right, p2.d * p2.tau * p2.tau / (2.0 * p2.b));

    RelationReport rep;
    rep.phase_time = phase_time;
    double max_abs = 0.0, max_mag = 0.0;
    for (int k1 = 0; k1 < freq.n1; ++k1) {
        const double u1 = freq.coord1(k1);
        const Quaternion lphase = axis_exp(
            axes.left, 2.0 * t1 * p1.tau - 2.0 * u1 * (p1.d * p1.tau - p1.b * p1.eta));
        for (int k2 = 0; k2 < freq.n2; ++k2) {
            const double u2 = freq.coord2(k2);
            const Quaternion rphase = axis_exp(
                axes.right, 2.0 * t2 * p2.tau - 2.0 * u2 * (p2.d * p2.tau - p2.b * p2.eta));
            const Quaternion rhs = lphase * mid1 * qlct.at(k1, k2) * mid2 * rphase;
            max_abs = std::max(max_abs, modulus(lhs.at(k1, k2) - rhs));
            max_mag = std::max(max_mag, modulus(lhs.at(k1, k2)));
        }
    }
    rep.max_abs_deviation = max_abs;
    rep.max_rel_deviation = max_mag > 0.0 ? max_abs / max_mag : 0.0;
    return rep;
}

}  // namespace qwvd
