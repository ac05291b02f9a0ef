#include "qwvd/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace qwvd {

GridGeometry GridGeometry::centered(int n1, int n2, double half_extent1, double half_extent2) {
    GridGeometry g;
    g.n1 = n1;
    g.n2 = n2;
    g.delta1 = 2.0 * half_extent1 / n1;
    g.delta2 = 2.0 * half_extent2 / n2;
    g.origin1 = -(n1 / 2) * g.delta1;
    g.origin2 = -(n2 / 2) * g.delta2;
    g.validate();
    return g;
}

void GridGeometry::validate() const {
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("GridGeometry: need at least 2 samples per axis");
    if (!(delta1 > 0.0) || !(delta2 > 0.0))
        throw std::invalid_argument("GridGeometry: sample spacing must be positive");
}

double lp_norm(const SampledSignal& f, double p) {
    if (f.values.empty())
        throw std::domain_error("lp_norm: empty signal");
    if (!(p >= 1.0) || std::isinf(p))
        throw std::invalid_argument("lp_norm: p must be finite and >= 1");
    const double dt = f.geometry.cell_area();
    double acc = 0.0;
    if (p == 2.0) {
        for (const auto& q : f.values) acc += norm_sq(q);
    } else {
        for (const auto& q : f.values) acc += std::pow(norm_sq(q), 0.5 * p);
    }
    return std::pow(acc * dt, 1.0 / p);
}

double linf_norm(const SampledSignal& f) {
    if (f.values.empty())
        throw std::domain_error("linf_norm: empty signal");
    double m = 0.0;
    for (const auto& q : f.values) m = std::max(m, norm_sq(q));
    return std::sqrt(m);
}

Quaternion inner_product(const SampledSignal& f, const SampledSignal& g) {
    if (!(f.geometry == g.geometry))
        throw std::invalid_argument("inner_product: geometry mismatch");
    Quaternion acc{};
    const std::size_t n = f.values.size();
    for (std::size_t idx = 0; idx < n; ++idx)
        acc += f.values[idx] * conj(g.values[idx]);
    return acc * f.geometry.cell_area();
}

namespace {

// Lag index -> signed lag multiple m of the time spacing. The n lags per axis
// are m = 2*idx - n + q' with q' = (parity + n) mod 2, which keeps m == parity
// (mod 2) and covers every |m| <= n-1 of that parity.
inline int lag_multiple(int idx, int n, int parity) {
    const int q = (parity + n) % 2;
    return 2 * idx - n + q;
}

}  // namespace

GridGeometry lag_geometry(const GridGeometry& time, int parity1, int parity2) {
    time.validate();
    if ((parity1 & ~1) || (parity2 & ~1))
        throw std::invalid_argument("lag_geometry: parity must be 0 or 1");
    GridGeometry g;
    g.n1 = time.n1;
    g.n2 = time.n2;
    g.delta1 = 2.0 * time.delta1;
    g.delta2 = 2.0 * time.delta2;
    g.origin1 = lag_multiple(0, time.n1, parity1) * time.delta1;
    g.origin2 = lag_multiple(0, time.n2, parity2) * time.delta2;
    return g;
}

SampledSignal correlation_product_half_step(const SampledSignal& f, const SampledSignal& g,
                                            int c1, int c2) {
    if (!(f.geometry == g.geometry))
        throw std::invalid_argument("correlation_product: geometry mismatch");
    const GridGeometry& tg = f.geometry;
    if (c1 < 0 || c1 > 2 * (tg.n1 - 1) || c2 < 0 || c2 > 2 * (tg.n2 - 1))
        throw std::invalid_argument("correlation_product: slice index out of range");

    SampledSignal h(lag_geometry(tg, c1 & 1, c2 & 1));
    for (int i1 = 0; i1 < tg.n1; ++i1) {
        const int m1 = lag_multiple(i1, tg.n1, c1 & 1);
        const int a1 = (c1 + m1) / 2;
        const int b1 = (c1 - m1) / 2;
        for (int i2 = 0; i2 < tg.n2; ++i2) {
            const int m2 = lag_multiple(i2, tg.n2, c2 & 1);
            const int a2 = (c2 + m2) / 2;
            const int b2 = (c2 - m2) / 2;
            if (f.in_range(a1, a2) && g.in_range(b1, b2))
                h.at(i1, i2) = f.at(a1, a2) * conj(g.at(b1, b2));
        }
    }
    return h;
}

SampledSignal correlation_product(const SampledSignal& f, const SampledSignal& g,
                                  int t1_index, int t2_index) {
    return correlation_product_half_step(f, g, 2 * t1_index, 2 * t2_index);
}

std::array<RealGrid, 4> component_split(const SampledSignal& f) {
    std::array<RealGrid, 4> parts{RealGrid(f.geometry), RealGrid(f.geometry),
                                  RealGrid(f.geometry), RealGrid(f.geometry)};
    const std::size_t n = f.values.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
        parts[0].values[idx] = f.values[idx].w;
        parts[1].values[idx] = f.values[idx].x;
        parts[2].values[idx] = f.values[idx].y;
        parts[3].values[idx] = f.values[idx].z;
    }
    return parts;
}

SampledSignal component_recombine(const std::array<RealGrid, 4>& parts) {
    for (int m = 1; m < 4; ++m)
        if (!(parts[m].geometry == parts[0].geometry))
            throw std::invalid_argument("component_recombine: geometry mismatch");
    SampledSignal f(parts[0].geometry);
    const std::size_t n = f.values.size();
    for (std::size_t idx = 0; idx < n; ++idx)
        f.values[idx] = Quaternion{parts[0].values[idx], parts[1].values[idx],
                                   parts[2].values[idx], parts[3].values[idx]};
    return f;
}

}  // namespace qwvd
