#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qwvd/generators.hpp"
#include "qwvd/oracle.hpp"
#include "qwvd/qft.hpp"

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

GridGeometry small_grid() {
    GridGeometry g;
    g.n1 = g.n2 = 8;
    g.delta1 = g.delta2 = 0.5;
    g.origin1 = g.origin2 = -2.0;
    return g;
}

}  // namespace

TEST_CASE("delta transforms to a flat spectrum") {
    const GridGeometry g = GridGeometry::centered(16, 16, 4.0, 4.0);
    const SampledSignal d = make_delta(g);  // weight 1/dt at t = 0
    const Spectrum F = qft_forward(d, AxisPair::ij(), qft_dual_grid(g));
    for (const auto& q : F.values) CHECK(modulus(q - Quaternion::real(1.0)) <= 1e-12);
}

TEST_CASE("direct sum matches the literal oracle") {
    const GridGeometry g = small_grid();
    const SampledSignal f = random_signal(21, g);
    const GridGeometry dual = qft_dual_grid(g);
    const Spectrum a = qft_forward(f, AxisPair::ij(), dual);
    const Spectrum b = oracle_qft(f, AxisPair::ij(), dual);
    CHECK(max_dev(a.values, b.values) < 1e-12);
}

TEST_CASE("frequency reflection of a real signal conjugates the i-plane") {
    // F(-u1, u2) has components (q0, -q1, q2, -q3) of F(u1, u2) for real input
    const GridGeometry g = small_grid();
    SampledSignal f = random_signal(22, g);
    for (auto& q : f.values) q = Quaternion::real(q.w);

    GridGeometry dual = qft_dual_grid(g);
    GridGeometry mirrored = dual;
    mirrored.origin1 = -(dual.origin1 + (dual.n1 - 1) * dual.delta1);  // descending set, reversed
    const Spectrum F = oracle_qft(f, AxisPair::ij(), dual);
    const Spectrum R = oracle_qft(f, AxisPair::ij(), mirrored);
    for (int k1 = 0; k1 < dual.n1; ++k1)
        for (int k2 = 0; k2 < dual.n2; ++k2) {
            const Quaternion a = F.at(k1, k2);
            const Quaternion b = R.at(dual.n1 - 1 - k1, k2);  // same |u1| with flipped sign
            CHECK(modulus(b - Quaternion{a.w, -a.x, a.y, -a.z}) <= 1e-12);
        }
}

TEST_CASE("gaussian transform matches the closed form") {
    const GridGeometry g = GridGeometry::centered(64, 64, 6.0, 6.0);
    const SampledSignal f = make_gaussian(g, 1.0);
    const GridGeometry dual = qft_dual_grid(g);
    const Spectrum F = qft_forward(f, AxisPair::ij(), dual);
    double worst = 0.0;
    for (int k1 = 0; k1 < dual.n1; ++k1)
        for (int k2 = 0; k2 < dual.n2; ++k2) {
            const double u1 = dual.coord1(k1), u2 = dual.coord2(k2);
            const double want = 2.0 * M_PI * std::exp(-0.5 * (u1 * u1 + u2 * u2));
            worst = std::max(worst, modulus(F.at(k1, k2) - Quaternion::real(want)));
        }
    CHECK(worst < 1e-6);
}

TEST_CASE("inverse recovers the signal on the dual grid") {
    const GridGeometry g = GridGeometry::centered(32, 32, 6.0, 6.0);
    const SampledSignal f = make_gaussian(g, 1.0);
    const Spectrum F = qft_forward(f, AxisPair::ij(), qft_dual_grid(g));
    const SampledSignal back = qft_inverse(F, AxisPair::ij(), g);
    CHECK(rel_l2(back.values, f.values) < 1e-8);

    Spectrum zero(qft_dual_grid(g));
    const SampledSignal z = qft_inverse(zero, AxisPair::ij(), g);
    for (const auto& q : z.values) CHECK(q == Quaternion{});
}

TEST_CASE("roundtrip holds for arbitrary pure-unit axes") {
    const GridGeometry g = small_grid();
    const SampledSignal f = random_signal(23, g);
    const AxisPair axes{PureUnitAxis::from_vector(1.0, 1.0, 0.0),
                        PureUnitAxis::from_vector(0.0, 1.0, -2.0)};
    const Spectrum F = qft_forward(f, axes, qft_dual_grid(g));
    const SampledSignal back = qft_inverse(F, axes, g);
    CHECK(rel_l2(back.values, f.values) < 1e-12);
}

TEST_CASE("flat spectrum concentrates at the origin") {
    const GridGeometry g = GridGeometry::centered(32, 32, 4.0, 4.0);
    Spectrum F(qft_dual_grid(g));
    for (auto& q : F.values) q = Quaternion::real(1.0);
    const SampledSignal f = qft_inverse(F, AxisPair::ij(), g);

    double total = 0.0, center = 0.0;
    const int c1 = g.n1 / 2, c2 = g.n2 / 2;  // the t = 0 cell
    for (int k1 = 0; k1 < g.n1; ++k1)
        for (int k2 = 0; k2 < g.n2; ++k2) {
            const double e = norm_sq(f.at(k1, k2));
            total += e;
            if (std::abs(k1 - c1) <= 1 && std::abs(k2 - c2) <= 1) center += e;
        }
    CHECK(center >= 0.99 * total);
}

TEST_CASE("linearity over real scalars") {
    const GridGeometry g = small_grid();
    const SampledSignal f = random_signal(24, g);
    const SampledSignal h = random_signal(25, g);
    const GridGeometry dual = qft_dual_grid(g);
    SampledSignal combo(g);
    for (std::size_t i = 0; i < combo.values.size(); ++i)
        combo.values[i] = f.values[i] * 2.5 + h.values[i] * (-0.75);
    const Spectrum Fc = qft_forward(combo, AxisPair::ij(), dual);
    const Spectrum Ff = qft_forward(f, AxisPair::ij(), dual);
    const Spectrum Fh = qft_forward(h, AxisPair::ij(), dual);
    double worst = 0.0;
    for (std::size_t i = 0; i < Fc.values.size(); ++i)
        worst = std::max(worst,
                         modulus(Fc.values[i] - (Ff.values[i] * 2.5 + Fh.values[i] * (-0.75))));
    CHECK(worst < 1e-12);
}

TEST_CASE("module spectrum of a real signal") {
    const GridGeometry g = GridGeometry::centered(16, 16, 4.0, 4.0);
    const SampledSignal f = make_gaussian(g, 1.0);
    const GridGeometry dual = qft_dual_grid(g);
    const ModuleSpectrum ms = qft_module_spectrum(f, AxisPair::ij(), dual);
    const Spectrum F = qft_forward(f, AxisPair::ij(), dual);
    for (int k1 = 0; k1 < dual.n1; ++k1)
        for (int k2 = 0; k2 < dual.n2; ++k2) {
            for (int m = 1; m < 4; ++m) CHECK(modulus(ms.parts[m].at(k1, k2)) <= 1e-13);
            // for real input the module norm equals the plain modulus pointwise
            CHECK(std::sqrt(ms.module_norm_sq(k1, k2)) ==
                  doctest::Approx(modulus(F.at(k1, k2))).epsilon(1e-10));
        }

    SampledSignal ig = f;
    for (auto& q : ig.values) q = Quaternion::unit_i() * q;
    const ModuleSpectrum msi = qft_module_spectrum(ig, AxisPair::ij(), dual);
    for (int k1 = 0; k1 < dual.n1; ++k1)
        for (int k2 = 0; k2 < dual.n2; ++k2) {
            CHECK(modulus(msi.parts[0].at(k1, k2)) <= 1e-13);
            CHECK(modulus(msi.parts[2].at(k1, k2)) <= 1e-13);
            CHECK(modulus(msi.parts[3].at(k1, k2)) <= 1e-13);
        }
}

TEST_CASE("module plancherel carries the 4 pi^2 constant") {
    const GridGeometry g = GridGeometry::centered(16, 16, 4.0, 4.0);
    for (int seed = 0; seed < 5; ++seed) {
        const SampledSignal f = random_signal(400 + seed, g);
        const ModuleSpectrum ms = qft_module_spectrum(f, AxisPair::ij(), qft_dual_grid(g));
        const double lhs = ms.l2_norm();
        const double n2 = lp_norm(f, 2.0);
        CHECK(lhs * lhs == doctest::Approx(4.0 * M_PI * M_PI * n2 * n2).epsilon(1e-12));
    }
    // random axes: the identity is axis-independent
    const SampledSignal f = random_signal(999, g);
    const AxisPair axes{PureUnitAxis::from_vector(0.5, -1.0, 0.25),
                        PureUnitAxis::from_vector(1.0, 0.1, 0.1)};
    const ModuleSpectrum ms = qft_module_spectrum(f, axes, qft_dual_grid(g));
    const double lhs = ms.l2_norm();
    const double n2 = lp_norm(f, 2.0);
    CHECK(lhs * lhs == doctest::Approx(4.0 * M_PI * M_PI * n2 * n2).epsilon(1e-12));
}

TEST_CASE("fft path agrees with the oracle") {
    const GridGeometry g = small_grid();
    const GridGeometry dual = qft_dual_grid(g);
    for (int seed = 0; seed < 8; ++seed) {
        const SampledSignal f = random_signal(600 + seed, g);
        CHECK(max_dev(qft_fast(f, dual).values,
                      oracle_qft(f, AxisPair::ij(), dual).values) < 1e-10);
    }

    // even-symmetric real input
    const GridGeometry ge = GridGeometry::centered(8, 8, 2.0, 2.0);
    const SampledSignal fe = make_gaussian(ge, 0.8);
    CHECK(max_dev(qft_fast(fe, qft_dual_grid(ge)).values,
                  oracle_qft(fe, AxisPair::ij(), qft_dual_grid(ge)).values) < 1e-10);

    const SampledSignal d = make_delta(g);
    const Spectrum Fd = qft_fast(d, dual);
    for (const auto& q : Fd.values) CHECK(modulus(q - Quaternion::real(1.0)) <= 1e-12);
}

TEST_CASE("fft path rejects incommensurate grids") {
    const GridGeometry g = small_grid();
    GridGeometry bad = qft_dual_grid(g);
    bad.delta1 *= 1.01;
    CHECK_THROWS_AS((void)qft_fast(random_signal(1, g), bad), std::invalid_argument);
    GridGeometry wrong_count = qft_dual_grid(g);
    wrong_count.n1 = 4;
    CHECK_THROWS_AS((void)qft_fast(random_signal(1, g), wrong_count), std::invalid_argument);
}

TEST_CASE("fft inverse matches the direct inverse") {
    const GridGeometry g = small_grid();
    const GridGeometry dual = qft_dual_grid(g);
    const SampledSignal f = random_signal(77, g);
    const Spectrum F = qft_fast(f, dual);
    const SampledSignal a = qft_inverse(F, AxisPair::ij(), g);
    const SampledSignal b = qft_fast_inverse(F, g);
    CHECK(max_dev(a.values, b.values) < 1e-12);
    CHECK(rel_l2(b.values, f.values) < 1e-12);
}

TEST_CASE("odd and non-square grids") {
    GridGeometry g;
    g.n1 = 7;
    g.n2 = 10;
    g.delta1 = 0.5;
    g.delta2 = 0.4;
    g.origin1 = -1.5;
    g.origin2 = -2.0;
    const SampledSignal f = random_signal(321, g);
    const GridGeometry dual = qft_dual_grid(g);
    CHECK(max_dev(qft_fast(f, dual).values, oracle_qft(f, AxisPair::ij(), dual).values) <
          1e-10);
    const SampledSignal back = qft_fast_inverse(qft_fast(f, dual), g);
    CHECK(rel_l2(back.values, f.values) < 1e-12);
}

TEST_CASE("oracle size guard") {
    const GridGeometry g = GridGeometry::centered(64, 64, 4.0, 4.0);
    const SampledSignal f = make_gaussian(g, 1.0);
    CHECK_THROWS_AS((void)oracle_qft(f, AxisPair::ij(), qft_dual_grid(g)),
                    std::invalid_argument);
    // explicit override allows it
    CHECK_NOTHROW((void)oracle_qft(make_gaussian(GridGeometry::centered(8, 8, 2.0, 2.0), 1.0),
                                   AxisPair::ij(),
                                   qft_dual_grid(GridGeometry::centered(8, 8, 2.0, 2.0)), 8));
}
