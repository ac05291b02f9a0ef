#include "qwvd/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qwvd {

namespace {

void guard(const GridGeometry& g, int limit, const char* who) {
    if (g.n1 > limit || g.n2 > limit)
        throw std::invalid_argument(std::string(who) +
                                    ": size guard exceeded (pass a larger size_guard to "
                                    "override)");
}

// Kernel written straight from the definition; deliberately not shared with
// the transform implementations.
Quaternion literal_kernel(const OffsetParams& p, const PureUnitAxis& axis, double t, double u) {
    const double num = p.a * t * t - 2.0 * t * (u - p.tau) -
                       2.0 * u * (p.d * p.tau - p.b * p.eta) +
                       p.d * (u * u + p.tau * p.tau);
    const double e = num / (2.0 * p.b);
    Quaternion pre;
    if (p.b > 0.0)
        pre = axis_exp(axis, -0.25 * M_PI) * (1.0 / std::sqrt(2.0 * M_PI * p.b));
    else
        pre = axis_exp(axis, 0.25 * M_PI) * (1.0 / std::sqrt(-2.0 * M_PI * p.b));
    return pre * axis_exp(axis, e);
}

Quaternion literal_degenerate_prefactor(const OffsetParams& p, const PureUnitAxis& axis,
                                        double u) {
    if (!(p.d > 0.0))
        throw std::domain_error("oracle: degenerate branch requires d > 0");
    const double w = u - p.tau;
    return std::sqrt(p.d) * axis_exp(axis, 0.5 * p.c * p.d * w * w + u * p.tau);
}

int nearest(double x, double origin, double delta, int n) {
    const long long k = std::llround((x - origin) / delta);
    return (k < 0 || k >= n) ? -1 : static_cast<int>(k);
}

}  // namespace

Spectrum oracle_qft(const SampledSignal& f, const AxisPair& axes, const GridGeometry& freq,
                    int size_guard) {
    guard(f.geometry, size_guard, "oracle_qft");
    const GridGeometry& tg = f.geometry;
    const double dt = tg.cell_area();
    Spectrum out(freq);
    for (int k1 = 0; k1 < freq.n1; ++k1)
        for (int k2 = 0; k2 < freq.n2; ++k2) {
            const double u1 = freq.coord1(k1);
            const double u2 = freq.coord2(k2);
            Quaternion acc{};
            for (int m1 = 0; m1 < tg.n1; ++m1)
                for (int m2 = 0; m2 < tg.n2; ++m2) {
                    const Quaternion l = axis_exp(axes.left, -u1 * tg.coord1(m1));
                    const Quaternion r = axis_exp(axes.right, -u2 * tg.coord2(m2));
                    acc += l * f.at(m1, m2) * r;
                }
            out.at(k1, k2) = acc * dt;
        }
    return out;
}

Spectrum oracle_qolct(const SampledSignal& f, const OffsetParams& p1, const OffsetParams& p2,
                      const AxisPair& axes, const GridGeometry& freq, int size_guard) {
    guard(f.geometry, size_guard, "oracle_qolct");
    const GridGeometry& tg = f.geometry;
    const double dt = tg.cell_area();
    Spectrum out(freq);

    for (int k1 = 0; k1 < freq.n1; ++k1)
        for (int k2 = 0; k2 < freq.n2; ++k2) {
            const double u1 = freq.coord1(k1);
            const double u2 = freq.coord2(k2);
            Quaternion value{};
            if (p1.b != 0.0 && p2.b != 0.0) {
                for (int m1 = 0; m1 < tg.n1; ++m1)
                    for (int m2 = 0; m2 < tg.n2; ++m2)
                        value += literal_kernel(p1, axes.left, tg.coord1(m1), u1) *
                                 f.at(m1, m2) *
                                 literal_kernel(p2, axes.right, tg.coord2(m2), u2);
                value *= dt;
            } else if (p1.b == 0.0 && p2.b != 0.0) {
                const int a1 = nearest(p1.d * (u1 - p1.tau), tg.origin1, tg.delta1, tg.n1);
                if (a1 >= 0) {
                    Quaternion acc{};
                    for (int m2 = 0; m2 < tg.n2; ++m2)
                        acc += f.at(a1, m2) *
                               literal_kernel(p2, axes.right, tg.coord2(m2), u2);
                    value = literal_degenerate_prefactor(p1, axes.left, u1) * acc * tg.delta2;
                }
            } else if (p1.b != 0.0 && p2.b == 0.0) {
                const int a2 = nearest(p2.d * (u2 - p2.tau), tg.origin2, tg.delta2, tg.n2);
                if (a2 >= 0) {
                    Quaternion acc{};
                    for (int m1 = 0; m1 < tg.n1; ++m1)
                        acc += literal_kernel(p1, axes.left, tg.coord1(m1), u1) * f.at(m1, a2);
                    value = acc * literal_degenerate_prefactor(p2, axes.right, u2) * tg.delta1;
                }
            } else {
                const int a1 = nearest(p1.d * (u1 - p1.tau), tg.origin1, tg.delta1, tg.n1);
                const int a2 = nearest(p2.d * (u2 - p2.tau), tg.origin2, tg.delta2, tg.n2);
                if (a1 >= 0 && a2 >= 0)
                    value = literal_degenerate_prefactor(p1, axes.left, u1) * f.at(a1, a2) *
                            literal_degenerate_prefactor(p2, axes.right, u2);
            }
            out.at(k1, k2) = value;
        }
    return out;
}

WvdGrid oracle_wvd(const SampledSignal& f, const SampledSignal& g, const OffsetParams& p1,
                   const OffsetParams& p2, const AxisPair& axes, const GridGeometry& freq,
                   int size_guard) {
    guard(f.geometry, size_guard, "oracle_wvd");
    if (!(f.geometry == g.geometry))
        throw std::invalid_argument("oracle_wvd: geometry mismatch");
    const GridGeometry& tg = f.geometry;
    WvdGrid W(tg, freq);

    if (p1.b != 0.0 && p2.b != 0.0) {
        for (int i1 = 0; i1 < tg.n1; ++i1)
            for (int i2 = 0; i2 < tg.n2; ++i2) {
                const SampledSignal h = correlation_product(f, g, i1, i2);
                const Spectrum s = oracle_qolct(h, p1, p2, axes, freq, size_guard);
                std::copy(s.values.begin(), s.values.end(), W.slice(i1, i2));
            }
        return W;
    }

    // Degenerate branches written from the definition: the lag on a b == 0
    // axis is pinned to d*(u - tau) and the factors are read at the nearest
    // samples of t +- lag/2; the other axis keeps its lag-grid sum.
    for (int i1 = 0; i1 < tg.n1; ++i1)
        for (int i2 = 0; i2 < tg.n2; ++i2) {
            const double t1 = tg.coord1(i1), t2 = tg.coord2(i2);
            const GridGeometry lag = lag_geometry(tg, 0, 0);
            for (int k1 = 0; k1 < freq.n1; ++k1)
                for (int k2 = 0; k2 < freq.n2; ++k2) {
                    const double u1 = freq.coord1(k1), u2 = freq.coord2(k2);
                    Quaternion value{};
                    if (p1.b == 0.0 && p2.b != 0.0) {
                        const double l1 = p1.d * (u1 - p1.tau);
                        const int ap = nearest(t1 + l1 / 2.0, tg.origin1, tg.delta1, tg.n1);
                        const int am = nearest(t1 - l1 / 2.0, tg.origin1, tg.delta1, tg.n1);
                        if (ap >= 0 && am >= 0) {
                            Quaternion acc{};
                            for (int m = 0; m < lag.n2; ++m) {
                                const double s2 = lag.coord2(m);
                                const int bp = nearest(t2 + s2 / 2.0, tg.origin2, tg.delta2,
                                                       tg.n2);
                                const int bm = nearest(t2 - s2 / 2.0, tg.origin2, tg.delta2,
                                                       tg.n2);
                                const double chk1 = t2 + s2 / 2.0;
                                const double chk2 = t2 - s2 / 2.0;
                                if (bp < 0 || bm < 0) continue;
                                if (std::abs(tg.coord2(bp) - chk1) > 1e-9 ||
                                    std::abs(tg.coord2(bm) - chk2) > 1e-9)
                                    continue;  // half-lag off the grid
                                acc += f.at(ap, bp) * conj(g.at(am, bm)) *
                                       literal_kernel(p2, axes.right, s2, u2);
                            }
                            value = literal_degenerate_prefactor(p1, axes.left, u1) * acc *
                                    lag.delta2;
                        }
                    } else if (p1.b != 0.0 && p2.b == 0.0) {
                        const double l2 = p2.d * (u2 - p2.tau);
                        const int bp = nearest(t2 + l2 / 2.0, tg.origin2, tg.delta2, tg.n2);
                        const int bm = nearest(t2 - l2 / 2.0, tg.origin2, tg.delta2, tg.n2);
                        if (bp >= 0 && bm >= 0) {
                            Quaternion acc{};
                            for (int m = 0; m < lag.n1; ++m) {
                                const double s1 = lag.coord1(m);
                                const int ap = nearest(t1 + s1 / 2.0, tg.origin1, tg.delta1,
                                                       tg.n1);
                                const int am = nearest(t1 - s1 / 2.0, tg.origin1, tg.delta1,
                                                       tg.n1);
                                if (ap < 0 || am < 0) continue;
                                if (std::abs(tg.coord1(ap) - (t1 + s1 / 2.0)) > 1e-9 ||
                                    std::abs(tg.coord1(am) - (t1 - s1 / 2.0)) > 1e-9)
                                    continue;
                                acc += literal_kernel(p1, axes.left, s1, u1) *
                                       (f.at(ap, bp) * conj(g.at(am, bm)));
                            }
                            value = acc * literal_degenerate_prefactor(p2, axes.right, u2) *
                                    lag.delta1;
                        }
                    } else {
                        const double l1 = p1.d * (u1 - p1.tau);
                        const double l2 = p2.d * (u2 - p2.tau);
                        const int ap = nearest(t1 + l1 / 2.0, tg.origin1, tg.delta1, tg.n1);
                        const int am = nearest(t1 - l1 / 2.0, tg.origin1, tg.delta1, tg.n1);
                        const int bp = nearest(t2 + l2 / 2.0, tg.origin2, tg.delta2, tg.n2);
                        const int bm = nearest(t2 - l2 / 2.0, tg.origin2, tg.delta2, tg.n2);
                        if (ap >= 0 && am >= 0 && bp >= 0 && bm >= 0)
                            value = literal_degenerate_prefactor(p1, axes.left, u1) *
                                    (f.at(ap, bp) * conj(g.at(am, bm))) *
                                    literal_degenerate_prefactor(p2, axes.right, u2);
                    }
                    W.at(i1, i2, k1, k2) = value;
                }
        }
    return W;
}

}  // namespace qwvd
