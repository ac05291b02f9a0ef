#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qwvd/generators.hpp"
#include "qwvd/oracle.hpp"
#include "qwvd/qolct.hpp"

using namespace qwvd;

namespace {

double max_dev(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    REQUIRE(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, modulus(a[i] - b[i]));
    return m;
}

double rel_l2(const std::vector<Quaternion>& got, const std::vector<Quaternion>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += norm_sq(got[i] - want[i]);
        den += norm_sq(want[i]);
    }
    return std::sqrt(num / den);
}

GridGeometry small_grid(int n = 8) {
    GridGeometry g;
    g.n1 = g.n2 = n;
    g.delta1 = g.delta2 = 4.0 / n;
    g.origin1 = g.origin2 = -2.0;
    return g;
}

bool close(const Quaternion& a, const Quaternion& b, double tol) {
    return modulus(a - b) <= tol;
}

}  // namespace

TEST_CASE("offset parameter validation") {
    OffsetParams ok{1.0, 0.5, -2.0, 0.0, 0.3, 0.1};
    CHECK_NOTHROW(ok.validate());
    OffsetParams bad{1.0, 0.5, -2.0, 0.5, 0.0, 0.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK(OffsetParams::qft_case().degenerate() == false);
    OffsetParams deg{1.0, 0.0, 0.0, 1.0, 0.0, 0.0};
    CHECK(deg.degenerate());
}

TEST_CASE("kernel values against hand-evaluated cases") {
    const PureUnitAxis i = PureUnitAxis::i();
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);

    // matrix (0, 1; -1, 0), no offsets, t = u = 0: e^{-i pi/4}/sqrt(2 pi)
    const OffsetParams pq = OffsetParams::qft_case();
    CHECK(close(kernel_left(pq, i, 0.0, 0.0), sqrt_axis_phase(i) * inv_sqrt_2pi, 1e-15));

    // matrix (1, 1; 0, 1), t = 1, u = 0: e^{-i pi/4}/sqrt(2 pi) * e^{i/2}
    const OffsetParams sh{1.0, 1.0, 0.0, 1.0, 0.0, 0.0};
    CHECK(close(kernel_left(sh, i, 1.0, 0.0),
                sqrt_axis_phase(i) * inv_sqrt_2pi * axis_exp(i, 0.5), 1e-15));

    // right kernel mirrors on the second axis
    const PureUnitAxis j = PureUnitAxis::j();
    CHECK(close(kernel_right(pq, j, 0.0, 0.0), sqrt_axis_phase(j) * inv_sqrt_2pi, 1e-15));
    CHECK(close(kernel_right(sh, j, 1.0, 0.0),
                sqrt_axis_phase(j) * inv_sqrt_2pi * axis_exp(j, 0.5), 1e-15));

    // |K| = 1/sqrt(2 pi |b|) for random arguments
    const OffsetParams p{1.0, -0.7, 1.0, 0.3, 0.4, -0.2};
    p.validate();
    for (double t : {-1.3, 0.2, 2.4})
        for (double u : {-2.0, 0.5, 1.9}) {
            CHECK(std::abs(modulus(kernel_left(p, i, t, u)) -
                           1.0 / std::sqrt(2.0 * M_PI * std::abs(p.b))) <= 1e-12);
        }

    CHECK_THROWS_AS((void)kernel_left(OffsetParams{1, 0, 0, 1, 0, 0}, i, 0.0, 0.0),
                    std::domain_error);
}

TEST_CASE("reduction to the two-sided transform at the rotation matrix") {
    const GridGeometry g = small_grid();
    const SampledSignal f = random_signal(31, g);
    const GridGeometry dual = qft_dual_grid(g);
    const OffsetParams pq = OffsetParams::qft_case();

    const Spectrum O = qolct_forward(f, pq, pq, AxisPair::ij(), dual);
    Spectrum F = oracle_qft(f, AxisPair::ij(), dual);
    const Quaternion cl = sqrt_axis_phase(PureUnitAxis::i()) * (1.0 / (2.0 * M_PI));
    const Quaternion cr = sqrt_axis_phase(PureUnitAxis::j());
    for (auto& q : F.values) q = cl * q * cr;
    CHECK(max_dev(O.values, F.values) < 1e-10);
}

TEST_CASE("offsets zero reduces to the literal canonical-transform sum") {
    // kernels with tau = eta = 0 against an independently coded
    // (a t^2 - 2 t u + d u^2)/(2b) sum
    const GridGeometry g = small_grid();
    const SampledSignal f = random_signal(32, g);
    const OffsetParams p1{2.0, 1.0, 1.0, 1.0, 0.0, 0.0};
    const OffsetParams p2{1.0, 0.5, -2.0, 0.0, 0.0, 0.0};
    const GridGeometry freq = qolct_dual_grid(g, p1, p2);
    const Spectrum O = qolct_forward(f, p1, p2, AxisPair::ij(), freq);

    auto qlct_kernel = [](const OffsetParams& p, const PureUnitAxis& axis, double t, double u) {
        const double e = (p.a * t * t - 2.0 * t * u + p.d * u * u) / (2.0 * p.b);
        return inv_sqrt_axis_scaled(axis, 2.0 * M_PI * p.b) * axis_exp(axis, e);
    };
    Spectrum lit(freq);
    for (int k1 = 0; k1 < freq.n1; ++k1)
        for (int k2 = 0; k2 < freq.n2; ++k2) {
            Quaternion acc{};
            for (int m1 = 0; m1 < g.n1; ++m1)
                for (int m2 = 0; m2 < g.n2; ++m2)
                    acc += qlct_kernel(p1, PureUnitAxis::i(), g.coord1(m1), freq.coord1(k1)) *
                           f.at(m1, m2) *
                           qlct_kernel(p2, PureUnitAxis::j(), g.coord2(m2), freq.coord2(k2));
            lit.at(k1, k2) = acc * g.cell_area();
        }
    CHECK(max_dev(O.values, lit.values) < 1e-12);
}

TEST_CASE("degenerate branch with identity parameters returns the input") {
    // b1 = b2 = 0, d = 1, c = 0, tau = eta = 0: output samples equal input samples
    const GridGeometry g = small_grid(16);
    const SampledSignal f = make_gaussian(g, 1.0);
    const OffsetParams deg{1.0, 0.0, 0.0, 1.0, 0.0, 0.0};
    const Spectrum O = qolct_forward(f, deg, deg, AxisPair::ij(), g);
    CHECK(max_dev(O.values, f.values) < 1e-14);
}

TEST_CASE("degenerate branch preserves energy on the image grid") {
    const GridGeometry g = small_grid(16);
    const SampledSignal f = make_gaussian(g, 1.0);
    const OffsetParams deg{0.5, 0.0, 0.7, 2.0, 0.0, 0.0};  // a*d = 1, c free
    deg.validate();
    GridGeometry image = g;  // u = t/d
    image.delta1 = g.delta1 / deg.d;
    image.delta2 = g.delta2 / deg.d;
    image.origin1 = g.origin1 / deg.d;
    image.origin2 = g.origin2 / deg.d;
    const Spectrum O = qolct_forward(f, deg, deg, AxisPair::ij(), image);
    double energy = 0.0;
    for (const auto& q : O.values) energy += norm_sq(q);
    energy *= image.cell_area();
    const double n2 = lp_norm(f, 2.0);
    CHECK(energy == doctest::Approx(n2 * n2).epsilon(1e-12));

    // delta input: one nonzero output cell, modulus scaled by sqrt(d1 d2)
    const SampledSignal d = make_delta(g);
    const Spectrum Od = qolct_forward(d, deg, deg, AxisPair::ij(), image);
    int nonzero = 0;
    for (const auto& q : Od.values)
        if (modulus(q) > 0.0) ++nonzero;
    CHECK(nonzero == 1);

    CHECK_THROWS_AS(
        (void)qolct_forward(f, OffsetParams{-0.5, 0.0, 0.7, -2.0, 0.0, 0.0},
                            deg, AxisPair::ij(), image),
        std::domain_error);
}

TEST_CASE("mixed degenerate branch agrees with the oracle") {
    const GridGeometry g = small_grid();
    const SampledSignal f = random_signal(33, g);
    const OffsetParams deg{0.5, 0.0, 0.3, 2.0, 0.25, 0.5};
    deg.validate();
    const OffsetParams reg{1.0, 1.0, 0.0, 1.0, 0.5, 0.25};
    GridGeometry freq = qft_dual_grid(g);
    const Spectrum a = qolct_forward(f, deg, reg, AxisPair::ij(), freq);
    const Spectrum b = oracle_qolct(f, deg, reg, AxisPair::ij(), freq);
    CHECK(max_dev(a.values, b.values) < 1e-12);

    const Spectrum c = qolct_forward(f, reg, deg, AxisPair::ij(), freq);
    const Spectrum d = oracle_qolct(f, reg, deg, AxisPair::ij(), freq);
    CHECK(max_dev(c.values, d.values) < 1e-12);
}

TEST_CASE("fft path agrees with the oracle") {
    const GridGeometry g = small_grid();
    const AxisPair axes = AxisPair::ij();

    // the worked example parameters
    const OffsetParams ex{1.0, 1.0, 0.0, 1.0, 0.5, 0.25};
    const GridGeometry fex = qolct_dual_grid(g, ex, ex);
    const SampledSignal f = random_signal(34, g);
    CHECK(max_dev(qolct_fast(f, ex, ex, fex).values,
                  oracle_qolct(f, ex, ex, axes, fex).values) < 1e-9);

    // random parameter blocks, including negative b; the fft path agrees
    // with both the oracle and the separable direct sum
    for (int seed = 0; seed < 6; ++seed) {
        const SampledSignal x = random_signal(700 + seed, g);
        const OffsetParams p1 = random_offset_params(800 + seed, seed % 2 == 1);
        const OffsetParams p2 = random_offset_params(900 + seed, seed % 2 == 1);
        const GridGeometry freq = qolct_dual_grid(g, p1, p2);
        const Spectrum fast = qolct_fast(x, p1, p2, freq);
        CHECK(max_dev(fast.values, oracle_qolct(x, p1, p2, axes, freq).values) < 1e-9);
        CHECK(max_dev(fast.values, qolct_forward(x, p1, p2, axes, freq).values) < 1e-9);
    }

    // reduction case: matches the two-sided transform up to constant factors
    const OffsetParams pq = OffsetParams::qft_case();
    const GridGeometry dual = qft_dual_grid(g);
    Spectrum F = oracle_qft(f, axes, dual);
    const Quaternion cl = sqrt_axis_phase(PureUnitAxis::i()) * (1.0 / (2.0 * M_PI));
    const Quaternion cr = sqrt_axis_phase(PureUnitAxis::j());
    for (auto& q : F.values) q = cl * q * cr;
    CHECK(max_dev(qolct_fast(f, pq, pq, dual).values, F.values) < 1e-10);

    // chirp-free Fresnel-type parameters on a gaussian
    const OffsetParams fresnel{1.0, 1.0, 0.0, 1.0, 0.0, 0.0};
    const SampledSignal gs = make_gaussian(g, 0.8);
    const GridGeometry ff = qolct_dual_grid(g, fresnel, fresnel);
    CHECK(max_dev(qolct_fast(gs, fresnel, fresnel, ff).values,
                  oracle_qolct(gs, fresnel, fresnel, axes, ff).values) < 1e-9);

    CHECK_THROWS_AS((void)qolct_fast(f, OffsetParams{1, 0, 0, 1, 0, 0}, ex, fex),
                    std::domain_error);
    GridGeometry badgrid = fex;
    badgrid.delta1 *= 1.5;
    CHECK_THROWS_AS((void)qolct_fast(f, ex, ex, badgrid), std::invalid_argument);
}

TEST_CASE("additivity in the signal argument") {
    const GridGeometry g = small_grid();
    const SampledSignal f = random_signal(41, g);
    const SampledSignal h = random_signal(42, g);
    SampledSignal sum(g);
    for (std::size_t i = 0; i < sum.values.size(); ++i)
        sum.values[i] = f.values[i] + h.values[i];
    const OffsetParams p = random_offset_params(43);
    const GridGeometry freq = qolct_dual_grid(g, p, p);
    const Spectrum a = qolct_forward(sum, p, p, AxisPair::ij(), freq);
    const Spectrum b = qolct_forward(f, p, p, AxisPair::ij(), freq);
    const Spectrum c = qolct_forward(h, p, p, AxisPair::ij(), freq);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        worst = std::max(worst, modulus(a.values[i] - b.values[i] - c.values[i]));
    CHECK(worst < 1e-12);
}

TEST_CASE("inverse transform") {
    const GridGeometry g = GridGeometry::centered(16, 16, 5.0, 5.0);
    const SampledSignal f = make_gaussian(g, 1.0, 0.4, -0.3);
    const OffsetParams p1{1.0, 1.0, 0.0, 1.0, 0.5, 0.25};
    const OffsetParams p2{1.0, 0.5, -2.0, 0.0, 0.3, 0.1};
    const GridGeometry freq = qolct_dual_grid(g, p1, p2);

    const Spectrum F = qolct_forward(f, p1, p2, AxisPair::ij(), freq);
    const SampledSignal back = qolct_inverse(F, p1, p2, AxisPair::ij(), g);
    CHECK(rel_l2(back.values, f.values) < 1e-3);

    const SampledSignal fast_back = qolct_fast_inverse(F, p1, p2, g);
    CHECK(max_dev(back.values, fast_back.values) < 1e-10);

    Spectrum zero(freq);
    const SampledSignal z = qolct_inverse(zero, p1, p2, AxisPair::ij(), g);
    for (const auto& q : z.values) CHECK(q == Quaternion{});

    // matches the plain inverse at the reduction parameters up to constants
    const OffsetParams pq = OffsetParams::qft_case();
    const GridGeometry dual = qft_dual_grid(g);
    const Spectrum Fq = qolct_forward(f, pq, pq, AxisPair::ij(), dual);
    const SampledSignal bq = qolct_inverse(Fq, pq, pq, AxisPair::ij(), g);
    CHECK(rel_l2(bq.values, f.values) < 1e-10);

    CHECK_THROWS_AS(
        (void)qolct_inverse(F, OffsetParams{1, 0, 0, 1, 0, 0}, p2, AxisPair::ij(), g),
        std::domain_error);
}

TEST_CASE("plancherel check") {
    const GridGeometry g = GridGeometry::centered(24, 24, 6.0, 6.0);
    const SampledSignal f = make_gaussian(g, 1.0);
    const OffsetParams pq = OffsetParams::qft_case();
    {
        const auto [lhs, rhs] = qolct_plancherel_check(f, pq, pq, AxisPair::ij());
        CHECK(lhs / rhs == doctest::Approx(1.0).epsilon(1e-3));
    }
    {
        SampledSignal zero(g);
        const auto [lhs, rhs] = qolct_plancherel_check(zero, pq, pq, AxisPair::ij());
        CHECK(lhs == 0.0);
        CHECK(rhs == 0.0);
    }
    {
        const OffsetParams p{1.0, 0.5, -2.0, 0.0, 0.3, 0.1};
        const SampledSignal s = random_smooth_signal(51, g);
        const auto [lhs, rhs] = qolct_plancherel_check(s, p, p, AxisPair::ij());
        CHECK(lhs / rhs == doctest::Approx(1.0).epsilon(1e-2));
    }
}

TEST_CASE("literal relation to the offset-free transform") {
    const GridGeometry g = small_grid(8);
    const SampledSignal f = make_gaussian(g, 0.8);

    OffsetParams z{1.0, 1.0, 0.0, 1.0, 0.0, 0.0};
    const RelationReport at_zero = qolct_from_qlct_relation(f, z, z);
    CHECK(at_zero.max_abs_deviation < 1e-12);

    OffsetParams off = z;
    off.tau = 0.5;
    const RelationReport rep = qolct_from_qlct_relation(f, off, z);
    CHECK(std::isfinite(rep.max_abs_deviation));  // report produced, nothing asserted

    const OffsetParams r1 = random_offset_params(61);
    const OffsetParams r2 = random_offset_params(62);
    const RelationReport rep2 = qolct_from_qlct_relation(f, r1, r2, {0.3, -0.2});
    CHECK(std::isfinite(rep2.max_abs_deviation));
    CHECK(rep2.phase_time[0] == 0.3);
}
