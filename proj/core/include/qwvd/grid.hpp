#ifndef QWVD_GRID_HPP
#define QWVD_GRID_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "qwvd/quaternion.hpp"

namespace qwvd {

/// Uniform 2D sampling lattice. Sample (k1, k2) sits at
/// (origin1 + k1*delta1, origin2 + k2*delta2); the quadrature weight for
/// sums approximating integrals is delta1*delta2.
struct GridGeometry {
    int n1{0};
    int n2{0};
    double delta1{1.0};
    double delta2{1.0};
    double origin1{0.0};
    double origin2{0.0};

    double coord1(int k1) const { return origin1 + k1 * delta1; }
    double coord2(int k2) const { return origin2 + k2 * delta2; }
    double cell_area() const { return delta1 * delta2; }
    std::size_t size() const { return static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2); }

    /// Grid of n x n samples centered on the origin, spanning [-half, half).
    static GridGeometry centered(int n1, int n2, double half_extent1, double half_extent2);

    void validate() const;  // n >= 2, delta > 0

    bool operator==(const GridGeometry&) const = default;
};

/// Uniformly sampled quaternion-valued 2D signal. Values are stored row-major:
/// index (k1, k2) -> k1*n2 + k2.
struct SampledSignal {
    GridGeometry geometry;
    std::vector<Quaternion> values;

    SampledSignal() = default;
    explicit SampledSignal(const GridGeometry& g)
        : geometry(g), values(g.size()) {
        g.validate();
    }

    Quaternion& at(int k1, int k2) {
        return values[static_cast<std::size_t>(k1) * geometry.n2 + k2];
    }
    const Quaternion& at(int k1, int k2) const {
        return values[static_cast<std::size_t>(k1) * geometry.n2 + k2];
    }
    bool in_range(int k1, int k2) const {
        return k1 >= 0 && k1 < geometry.n1 && k2 >= 0 && k2 < geometry.n2;
    }
    /// Compact-support extension: reads outside the grid return zero.
    Quaternion value_or_zero(int k1, int k2) const {
        return in_range(k1, k2) ? at(k1, k2) : Quaternion{};
    }
};

/// Transform-domain grid; same layout as SampledSignal but indexed by
/// frequency samples. Kept as a distinct type so signal- and spectrum-valued
/// interfaces do not mix silently.
struct Spectrum {
    GridGeometry geometry;
    std::vector<Quaternion> values;

    Spectrum() = default;
    explicit Spectrum(const GridGeometry& g) : geometry(g), values(g.size()) { g.validate(); }

    Quaternion& at(int k1, int k2) {
        return values[static_cast<std::size_t>(k1) * geometry.n2 + k2];
    }
    const Quaternion& at(int k1, int k2) const {
        return values[static_cast<std::size_t>(k1) * geometry.n2 + k2];
    }
};

/// One real component of a signal on a shared geometry.
struct RealGrid {
    GridGeometry geometry;
    std::vector<double> values;

    RealGrid() = default;
    explicit RealGrid(const GridGeometry& g) : geometry(g), values(g.size()) {}

    double& at(int k1, int k2) {
        return values[static_cast<std::size_t>(k1) * geometry.n2 + k2];
    }
    double at(int k1, int k2) const {
        return values[static_cast<std::size_t>(k1) * geometry.n2 + k2];
    }
};

/// (Sum_t |f(t)|^p dt)^{1/p}; p >= 1 and finite. Throws on an empty signal.
double lp_norm(const SampledSignal& f, double p);

/// Sup over samples of |f(t)|_Q (the p = infinity norm; no quadrature weight).
double linf_norm(const SampledSignal& f);

/// <f, g> = Sum_t f(t) * conj(g(t)) * dt. Geometries must match exactly.
Quaternion inner_product(const SampledSignal& f, const SampledSignal& g);

/// Lag lattice for the symmetric correlation product: same sample count as
/// the time grid, spacing twice the time spacing. `parity` (0 or 1, per axis)
/// selects the sub-lattice of lags s = m*delta reachable from a time-grid
/// slice at an integer (parity 0) or half-integer (parity 1) position; the
/// returned origins make every lag land back on the time grid.
GridGeometry lag_geometry(const GridGeometry& time, int parity1 = 0, int parity2 = 0);

/// h(s) = f(t + s/2) * conj(g(t - s/2)) over the lag lattice, with t the
/// time-grid sample (t1_index, t2_index). Out-of-grid factors read as zero.
SampledSignal correlation_product(const SampledSignal& f, const SampledSignal& g,
                                  int t1_index, int t2_index);

/// Same product with t on the half-step-refined lattice: c ranges over
/// 0 .. 2n-2 per axis and addresses t = origin + c*delta/2.
SampledSignal correlation_product_half_step(const SampledSignal& f, const SampledSignal& g,
                                            int c1, int c2);

/// f = f0 + i f1 + j f2 + k f3 split into four real grids.
std::array<RealGrid, 4> component_split(const SampledSignal& f);

/// Exact inverse of component_split.
SampledSignal component_recombine(const std::array<RealGrid, 4>& parts);

}  // namespace qwvd

#endif
