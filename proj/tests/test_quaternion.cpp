#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qwvd/quaternion.hpp"

using namespace qwvd;

namespace {

Quaternion random_quat(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return {u(rng), u(rng), u(rng), u(rng)};
}

bool close(const Quaternion& a, const Quaternion& b, double tol) {
    return modulus(a - b) <= tol;
}

}  // namespace

TEST_CASE("hamilton multiplication table") {
    const Quaternion one = Quaternion::real(1.0);
    const Quaternion i = Quaternion::unit_i();
    const Quaternion j = Quaternion::unit_j();
    const Quaternion k = Quaternion::unit_k();

    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
}

TEST_CASE("product examples") {
    const Quaternion q{0.3, -1.2, 0.7, 2.0};
    CHECK(q * Quaternion::real(1.0) == q);
    // (1+i)(1+j) expanded by hand through the multiplication table
    const Quaternion a{1.0, 1.0, 0.0, 0.0};
    const Quaternion b{1.0, 0.0, 1.0, 0.0};
    CHECK(a * b == Quaternion{1.0, 1.0, 1.0, 1.0});
}

TEST_CASE("conjugation is an anti-involution") {
    CHECK(conj(Quaternion{1, 1, 1, 1}) == Quaternion{1, -1, -1, -1});
    CHECK(conj(Quaternion::real(3.5)) == Quaternion::real(3.5));

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const Quaternion p = random_quat(rng), q = random_quat(rng);
        CHECK(close(conj(p * q), conj(q) * conj(p), 1e-13));
        CHECK(conj(conj(p)) == p);
        CHECK(close(conj(p + q), conj(p) + conj(q), 0.0));
    }
}

TEST_CASE("modulus") {
    CHECK(modulus(Quaternion{1, 1, 1, 1}) == doctest::Approx(2.0));
    CHECK(modulus(Quaternion{}) == 0.0);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Quaternion p = random_quat(rng), q = random_quat(rng);
        CHECK(modulus(p * q) ==
              doctest::Approx(modulus(p) * modulus(q)).epsilon(1e-13));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(Quaternion::unit_i()) == -Quaternion::unit_i());
    CHECK(inverse(Quaternion::real(2.0)) == Quaternion::real(0.5));
    CHECK(inverse(Quaternion{1, 1, 0, 0}) == Quaternion{0.5, -0.5, 0.0, 0.0});
    CHECK_THROWS_AS((void)inverse(Quaternion{}), std::domain_error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Quaternion q = random_quat(rng);
        if (modulus(q) < 1e-3) continue;
        CHECK(close(q * inverse(q), Quaternion::real(1.0), 1e-14));
        CHECK(close(inverse(q) * q, Quaternion::real(1.0), 1e-14));
    }
}

TEST_CASE("associativity and distributivity") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Quaternion p = random_quat(rng), q = random_quat(rng), r = random_quat(rng);
        const Quaternion lhs = (p * q) * r;
        const Quaternion rhs = p * (q * r);
        CHECK(modulus(lhs - rhs) <= 1e-13 * std::max(1.0, modulus(lhs)));
        CHECK(close(p * (q + r), p * q + p * r, 1e-13));
    }
}

TEST_CASE("scalar and vector parts recombine exactly") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Quaternion q = random_quat(rng);
        CHECK(Quaternion::real(sc(q)) + vec(q) == q);
        CHECK(Quaternion::real(sc(q)) == (q + conj(q)) * 0.5);
        CHECK(vec(q) == (q - conj(q)) * 0.5);
    }
}

TEST_CASE("pure unit axis invariants") {
    const PureUnitAxis axis = PureUnitAxis::from_vector(1.0, -2.0, 0.5);
    CHECK(sc(axis.direction()) == 0.0);
    CHECK(std::abs(modulus(axis.direction()) - 1.0) <= 1e-14);
    CHECK(close(axis.direction() * axis.direction(), Quaternion::real(-1.0), 1e-14));
    CHECK_THROWS_AS(PureUnitAxis::from_vector(0.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("axis exponential") {
    CHECK(close(axis_exp(PureUnitAxis::i(), M_PI_2), Quaternion::unit_i(), 1e-15));
    CHECK(axis_exp(PureUnitAxis::j(), 0.0) == Quaternion::real(1.0));

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    const PureUnitAxis axis = PureUnitAxis::from_vector(0.3, 0.4, -1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = u(rng), b = u(rng);
        CHECK(std::abs(modulus(axis_exp(axis, a)) - 1.0) <= 1e-15);
        CHECK(close(axis_exp(axis, a) * axis_exp(axis, -a), Quaternion::real(1.0), 1e-13));
        CHECK(close(axis_exp(axis, a) * axis_exp(axis, b), axis_exp(axis, a + b), 1e-13));
    }

    // distinct axes do not commute: e^{i pi/2} e^{j pi/2} = k, reversed = -k
    const Quaternion lhs =
        axis_exp(PureUnitAxis::i(), M_PI_2) * axis_exp(PureUnitAxis::j(), M_PI_2);
    const Quaternion rhs =
        axis_exp(PureUnitAxis::j(), M_PI_2) * axis_exp(PureUnitAxis::i(), M_PI_2);
    CHECK(close(lhs, Quaternion::unit_k(), 1e-15));
    CHECK(close(rhs, -Quaternion::unit_k(), 1e-15));
}

TEST_CASE("square-root phase branch") {
    const Quaternion r = sqrt_axis_phase(PureUnitAxis::i());
    CHECK(close(r, Quaternion{std::sqrt(0.5), -std::sqrt(0.5), 0.0, 0.0}, 1e-15));
    CHECK(std::abs(modulus(r) - 1.0) <= 1e-15);
    // fourth power of e^{-axis pi/4} is e^{-axis pi} = -1
    const PureUnitAxis axis = PureUnitAxis::from_vector(2.0, 1.0, -1.0);
    const Quaternion s = sqrt_axis_phase(axis);
    CHECK(close(s * s * s * s, Quaternion::real(-1.0), 1e-14));
}
