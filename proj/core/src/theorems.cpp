#include "qwvd/theorems.hpp"

#include <cmath>
#include <stdexcept>

#include "qwvd/parallel.hpp"

namespace qwvd {

namespace {

void require_nondegenerate(const OffsetParams& p1, const OffsetParams& p2, const char* who) {
    if (p1.degenerate() || p2.degenerate())
        throw std::domain_error(std::string(who) + ": requires b1*b2 != 0");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void add_params_context(InequalityReport& rep, const OffsetParams& p1, const OffsetParams& p2) {
    rep.context.emplace_back("a1 b1 c1 d1 tau1 eta1",
                             fmt(p1.a) + " " + fmt(p1.b) + " " + fmt(p1.c) + " " + fmt(p1.d) +
                                 " " + fmt(p1.tau) + " " + fmt(p1.eta));
    rep.context.emplace_back("a2 b2 c2 d2 tau2 eta2",
                             fmt(p2.a) + " " + fmt(p2.b) + " " + fmt(p2.c) + " " + fmt(p2.d) +
                                 " " + fmt(p2.tau) + " " + fmt(p2.eta));
}

// Sum_t t_k^2 |f(t)|^2 dt
double position_moment_sq(const SampledSignal& f, int axis_k) {
    const GridGeometry& g = f.geometry;
    double acc = 0.0;
    for (int k1 = 0; k1 < g.n1; ++k1)
        for (int k2 = 0; k2 < g.n2; ++k2) {
            const double c = axis_k == 1 ? g.coord1(k1) : g.coord2(k2);
            acc += c * c * norm_sq(f.at(k1, k2));
        }
    return acc * g.cell_area();
}

// Sum_u (u_k / (2 pi b_k))^2 ||O{f}(u)||_Q^2 du on the given grid
double frequency_moment_sq(const ModuleSpectrum& ms, double b_k, int axis_k) {
    const GridGeometry& g = ms.geometry();
    const double scale = 1.0 / (2.0 * M_PI * b_k);
    double acc = 0.0;
    for (int k1 = 0; k1 < g.n1; ++k1)
        for (int k2 = 0; k2 < g.n2; ++k2) {
            const double c = (axis_k == 1 ? g.coord1(k1) : g.coord2(k2)) * scale;
            acc += c * c * ms.module_norm_sq(k1, k2);
        }
    return acc * g.cell_area();
}

}  // namespace

InequalityReport make_inequality_report(double lhs, double rhs) {
    InequalityReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.gap = lhs - rhs;
    rep.satisfied = rep.gap >= -1e-9 * std::max(std::abs(lhs), std::abs(rhs));
    return rep;
}

InequalityReport heisenberg_qolct(const SampledSignal& f, const OffsetParams& p1,
                                  const OffsetParams& p2, const AxisPair& axes, int axis_k) {
    require_nondegenerate(p1, p2, "heisenberg_qolct");
    if (axis_k != 1 && axis_k != 2)
        throw std::invalid_argument("heisenberg_qolct: axis_k must be 1 or 2");

    const GridGeometry freq = qolct_dual_grid(f.geometry, p1, p2);
    const ModuleSpectrum ms = qolct_module_spectrum(f, p1, p2, axes, freq);
    const double spread = position_moment_sq(f, axis_k);
    const double fmom = frequency_moment_sq(ms, axis_k == 1 ? p1.b : p2.b, axis_k);
    const double n2 = lp_norm(f, 2.0);

    InequalityReport rep =
        make_inequality_report(spread * fmom, std::pow(n2, 4) / (16.0 * M_PI * M_PI));
    rep.context.emplace_back("check", "heisenberg_qolct");
    rep.context.emplace_back("axis_k", std::to_string(axis_k));
    rep.context.emplace_back("position_moment_sq", fmt(spread));
    rep.context.emplace_back("frequency_moment_sq", fmt(fmom));
    add_params_context(rep, p1, p2);
    return rep;
}

InequalityReport heisenberg_wvd(const SampledSignal& f, const SampledSignal& g,
                                const OffsetParams& p1, const OffsetParams& p2,
                                const AxisPair& axes, int axis_k) {
    require_nondegenerate(p1, p2, "heisenberg_wvd");
    if (axis_k != 1 && axis_k != 2)
        throw std::invalid_argument("heisenberg_wvd: axis_k must be 1 or 2");
    if (!(f.geometry == g.geometry))
        throw std::invalid_argument("heisenberg_wvd: geometry mismatch");

    const GridGeometry& tg = f.geometry;
    const GridGeometry freq = wvd_dual_grid(tg, p1, p2);
    const double b_k = axis_k == 1 ? p1.b : p2.b;

    std::vector<double> lag_part(tg.size(), 0.0), freq_part(tg.size(), 0.0);
    parallel_for(static_cast<int>(tg.size()), [&](int idx) {
        const int i1 = idx / tg.n2, i2 = idx % tg.n2;
        const SampledSignal h = correlation_product(f, g, i1, i2);
        lag_part[idx] = position_moment_sq(h, axis_k);
        const ModuleSpectrum ms = qolct_module_spectrum(h, p1, p2, axes, freq);
        freq_part[idx] = frequency_moment_sq(ms, b_k, axis_k);
    });
    double lag_moment = 0.0, freq_moment = 0.0;
    for (std::size_t i = 0; i < lag_part.size(); ++i) {
        lag_moment += lag_part[i];
        freq_moment += freq_part[i];
    }
    const double dt = tg.cell_area();
    lag_moment *= dt;
    freq_moment *= dt;

    const double nf = lp_norm(f, 2.0), ng = lp_norm(g, 2.0);
    InequalityReport rep = make_inequality_report(
        lag_moment * freq_moment, std::pow(nf, 4) * std::pow(ng, 4) / (16.0 * M_PI * M_PI));
    rep.context.emplace_back("check", "heisenberg_wvd");
    rep.context.emplace_back("axis_k", std::to_string(axis_k));
    rep.context.emplace_back("lag_moment_sq", fmt(lag_moment));
    rep.context.emplace_back("frequency_moment_sq", fmt(freq_moment));
    add_params_context(rep, p1, p2);
    return rep;
}

std::pair<Quaternion, Quaternion> poisson_qft_check(const AnalyticGaussianPi& f,
                                                    std::array<double, 2> s,
                                                    LatticeTruncation trunc) {
    const PureUnitAxis i = PureUnitAxis::i(), j = PureUnitAxis::j();
    Quaternion lhs{}, rhs{};
    for (int k1 = -trunc.K; k1 <= trunc.K; ++k1)
        for (int k2 = -trunc.K; k2 <= trunc.K; ++k2) {
            lhs += Quaternion::real(f.value(s[0] + k1, s[1] + k2));
            rhs += axis_exp(i, 2.0 * M_PI * k1 * s[0]) *
                   Quaternion::real(f.qft_hat(k1, k2)) * axis_exp(j, 2.0 * M_PI * k2 * s[1]);
        }
    return {lhs, rhs};
}

namespace {

// W_{f,g}(t, u) at arbitrary frequencies by direct quadrature of the kernel
// integral over a fine lag grid (generator-backed signals, no sampling grid).
std::vector<Quaternion> wvd_point_quadrature(const AnalyticGaussianPi& f,
                                             const AnalyticGaussianPi& g,
                                             std::array<double, 2> t,
                                             const std::vector<double>& u1s,
                                             const std::vector<double>& u2s,
                                             const OffsetParams& p1, const OffsetParams& p2) {
    const double S = 6.0;
    const double step = 0.02;
    const int n = static_cast<int>(std::llround(2.0 * S / step)) + 1;
    const PureUnitAxis iax = PureUnitAxis::i(), jax = PureUnitAxis::j();

    std::vector<double> lag(n);
    for (int m = 0; m < n; ++m) lag[m] = -S + m * step;

    // h(s) = f(t + s/2) g(t - s/2), real and separable for the Gaussian
    // generators; kept as a full table for clarity.
    std::vector<double> h(static_cast<std::size_t>(n) * n);
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2)
            h[static_cast<std::size_t>(m1) * n + m2] =
                f.value(t[0] + lag[m1] / 2.0, t[1] + lag[m2] / 2.0) *
                g.value(t[0] - lag[m1] / 2.0, t[1] - lag[m2] / 2.0);

    const int nu1 = static_cast<int>(u1s.size()), nu2 = static_cast<int>(u2s.size());
    std::vector<Quaternion> right(static_cast<std::size_t>(n) * nu2);
    for (int m2 = 0; m2 < n; ++m2)
        for (int k2 = 0; k2 < nu2; ++k2)
            right[static_cast<std::size_t>(m2) * nu2 + k2] =
                kernel_right(p2, jax, lag[m2], u2s[k2]);

    std::vector<Quaternion> mid(static_cast<std::size_t>(n) * nu2);
    for (int m1 = 0; m1 < n; ++m1) {
        const double* hrow = &h[static_cast<std::size_t>(m1) * n];
        Quaternion* mrow = &mid[static_cast<std::size_t>(m1) * nu2];
        for (int m2 = 0; m2 < n; ++m2) {
            const double hv = hrow[m2];
            if (hv == 0.0) continue;
            const Quaternion* rrow = &right[static_cast<std::size_t>(m2) * nu2];
            for (int k2 = 0; k2 < nu2; ++k2) mrow[k2] += hv * rrow[k2];
        }
    }

    std::vector<Quaternion> out(static_cast<std::size_t>(nu1) * nu2);
    for (int k1 = 0; k1 < nu1; ++k1) {
        Quaternion* orow = &out[static_cast<std::size_t>(k1) * nu2];
        for (int m1 = 0; m1 < n; ++m1) {
            const Quaternion l = kernel_left(p1, iax, lag[m1], u1s[k1]);
            const Quaternion* mrow = &mid[static_cast<std::size_t>(m1) * nu2];
            for (int k2 = 0; k2 < nu2; ++k2) orow[k2] += l * mrow[k2];
        }
    }
    const double w = step * step;
    for (auto& q : out) q *= w;
    return out;
}

}  // namespace

std::pair<Quaternion, Quaternion> poisson_wvd_check(const AnalyticGaussianPi& f,
                                                    const AnalyticGaussianPi& g,
                                                    std::array<double, 2> t,
                                                    std::array<double, 2> s,
                                                    const OffsetParams& p1,
                                                    const OffsetParams& p2,
                                                    LatticeTruncation trunc) {
    require_nondegenerate(p1, p2, "poisson_wvd_check");
    p1.validate();
    p2.validate();
    const PureUnitAxis iax = PureUnitAxis::i(), jax = PureUnitAxis::j();
    const int K = trunc.K;

    // Left: Sum_k omega(t, s + k), the chirp-premultiplied correlation product
    // evaluated at the shifted lag.
    Quaternion lhs{};
    for (int k1 = -K; k1 <= K; ++k1)
        for (int k2 = -K; k2 <= K; ++k2) {
            const double s1 = s[0] + k1, s2 = s[1] + k2;
            const double hv = f.value(t[0] + s1 / 2.0, t[1] + s2 / 2.0) *
                              g.value(t[0] - s1 / 2.0, t[1] - s2 / 2.0);
            lhs += axis_exp(iax, s1 * p1.tau / p1.b + 0.5 * p1.a * s1 * s1 / p1.b) * hv *
                   axis_exp(jax, s2 * p2.tau / p2.b + 0.5 * p2.a * s2 * s2 / p2.b);
        }

    // Right: phase-corrected distribution values at the lattice frequencies.
    std::vector<double> u1s(2 * K + 1), u2s(2 * K + 1);
    for (int k = -K; k <= K; ++k) {
        u1s[k + K] = 2.0 * M_PI * p1.b * k;
        u2s[k + K] = 2.0 * M_PI * p2.b * k;
    }
    const std::vector<Quaternion> W = wvd_point_quadrature(f, g, t, u1s, u2s, p1, p2);

    Quaternion inner{};
    for (int k1 = -K; k1 <= K; ++k1) {
        const double a1 = 2.0 * M_PI * k1 * s[0] + 2.0 * M_PI * k1 * (p1.d * p1.tau - p1.b * p1.eta) -
                          (p1.d / (2.0 * p1.b)) *
                              (4.0 * M_PI * M_PI * p1.b * p1.b * k1 * k1 + p1.tau * p1.tau);
        const Quaternion lph = axis_exp(iax, a1);
        for (int k2 = -K; k2 <= K; ++k2) {
            const double a2 = 2.0 * M_PI * k2 * s[1] +
                              2.0 * M_PI * k2 * (p2.d * p2.tau - p2.b * p2.eta) -
                              (p2.d / (2.0 * p2.b)) *
                                  (4.0 * M_PI * M_PI * p2.b * p2.b * k2 * k2 + p2.tau * p2.tau);
            inner += lph * W[static_cast<std::size_t>(k1 + K) * (2 * K + 1) + (k2 + K)] *
                     axis_exp(jax, a2);
        }
    }
    const Quaternion rhs = sqrt_axis_scaled(iax, 2.0 * M_PI * p1.b) * inner *
                           sqrt_axis_scaled(jax, 2.0 * M_PI * p2.b);
    return {lhs, rhs};
}

InequalityReport lieb_qlct_ratio(const SampledSignal& f, const OffsetParams& p1,
                                 const OffsetParams& p2, double p_exp) {
    require_nondegenerate(p1, p2, "lieb_qlct_ratio");
    if (p1.tau != 0.0 || p1.eta != 0.0 || p2.tau != 0.0 || p2.eta != 0.0)
        throw std::invalid_argument("lieb_qlct_ratio: requires tau = eta = 0");
    if (!(p_exp >= 1.0 && p_exp <= 2.0))
        throw std::invalid_argument("lieb_qlct_ratio: p must lie in [1, 2]");

    const GridGeometry freq = qolct_dual_grid(f.geometry, p1, p2);
    const AxisPair axes = AxisPair::ij();
    Spectrum L;
    try {
        L = qolct_fast(f, p1, p2, freq);
    } catch (const std::invalid_argument&) {
        L = qolct_forward(f, p1, p2, axes, freq);
    }

    double lhs;
    double inv_q;
    if (p_exp == 1.0) {
        double m = 0.0;
        for (const auto& q : L.values) m = std::max(m, norm_sq(q));
        lhs = std::sqrt(m);
        inv_q = 0.0;
    } else {
        const double q_exp = p_exp / (p_exp - 1.0);
        double acc = 0.0;
        for (const auto& q : L.values) acc += std::pow(norm_sq(q), 0.5 * q_exp);
        lhs = std::pow(acc * freq.cell_area(), 1.0 / q_exp);
        inv_q = 1.0 / q_exp;
    }
    const double rhs = std::pow(std::abs(p1.b * p2.b), -0.5 + inv_q) / (2.0 * M_PI) *
                       lp_norm(f, p_exp);

    InequalityReport rep = make_inequality_report(lhs, rhs);
    rep.context.emplace_back("check", "lieb_qlct_ratio");
    rep.context.emplace_back("p", fmt(p_exp));
    rep.context.emplace_back("ratio", fmt(rhs != 0.0 ? lhs / rhs : 0.0));
    add_params_context(rep, p1, p2);
    return rep;
}

InequalityReport lieb_wvd_functional(const SampledSignal& f, const SampledSignal& g,
                                     const OffsetParams& p1, const OffsetParams& p2,
                                     double p_exp) {
    require_nondegenerate(p1, p2, "lieb_wvd_functional");
    if (!(p_exp >= 2.0))
        throw std::invalid_argument("lieb_wvd_functional: p must be >= 2");

    const GridGeometry& tg = f.geometry;
    const GridGeometry freq = wvd_dual_grid(tg, p1, p2);
    const double du = freq.cell_area();

    std::vector<double> partial(tg.size(), 0.0);
    wvd_for_each_slice(f, g, p1, p2, AxisPair::ij(), freq, false, true,
                       [&](int c1, int c2, const std::vector<Quaternion>& slice) {
                           double acc = 0.0;
                           for (const auto& q : slice) acc += std::pow(norm_sq(q), 0.5 * p_exp);
                           partial[static_cast<std::size_t>(c1 / 2) * tg.n2 + c2 / 2] = acc * du;
                       });
    double lhs = 0.0;
    for (double v : partial) lhs += v;
    lhs *= tg.cell_area();

    const double nf = lp_norm(f, 2.0), ng = lp_norm(g, 2.0);
    const double rhs = std::pow(std::abs(p1.b * p2.b), -0.5 * p_exp + 1.0) /
                       std::pow(2.0 * M_PI, p_exp) * std::pow(nf, p_exp) * std::pow(ng, p_exp);

    InequalityReport rep = make_inequality_report(lhs, rhs);
    rep.context.emplace_back("check", "lieb_wvd_functional");
    rep.context.emplace_back("p", fmt(p_exp));
    rep.context.emplace_back("C_emp", fmt(rhs != 0.0 ? lhs / rhs : 0.0));
    add_params_context(rep, p1, p2);
    return rep;
}

}  // namespace qwvd
