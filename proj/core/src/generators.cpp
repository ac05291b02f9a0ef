#include "qwvd/generators.hpp"

#include <cmath>
#include <random>

namespace qwvd {

SampledSignal make_gaussian(const GridGeometry& g, double sigma, double center1, double center2,
                            double amplitude) {
    SampledSignal f(g);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    for (int k1 = 0; k1 < g.n1; ++k1) {
        const double d1 = g.coord1(k1) - center1;
        for (int k2 = 0; k2 < g.n2; ++k2) {
            const double d2 = g.coord2(k2) - center2;
            f.at(k1, k2) = Quaternion::real(amplitude * std::exp(-(d1 * d1 + d2 * d2) * inv));
        }
    }
    return f;
}

SampledSignal make_chirp(const GridGeometry& g, double sigma, double rate1, double rate2) {
    SampledSignal f(g);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    const PureUnitAxis i = PureUnitAxis::i(), j = PureUnitAxis::j();
    for (int k1 = 0; k1 < g.n1; ++k1) {
        const double t1 = g.coord1(k1);
        const Quaternion left = axis_exp(i, 0.5 * rate1 * t1 * t1);
        for (int k2 = 0; k2 < g.n2; ++k2) {
            const double t2 = g.coord2(k2);
            const double env = std::exp(-(t1 * t1 + t2 * t2) * inv);
            f.at(k1, k2) = left * env * axis_exp(j, 0.5 * rate2 * t2 * t2);
        }
    }
    return f;
}

SampledSignal make_delta(const GridGeometry& g, double pos1, double pos2) {
    SampledSignal f(g);
    int k1 = static_cast<int>(std::llround((pos1 - g.origin1) / g.delta1));
    int k2 = static_cast<int>(std::llround((pos2 - g.origin2) / g.delta2));
    k1 = std::min(std::max(k1, 0), g.n1 - 1);
    k2 = std::min(std::max(k2, 0), g.n2 - 1);
    f.at(k1, k2) = Quaternion::real(1.0 / g.cell_area());
    return f;
}

SampledSignal random_signal(std::uint64_t seed, const GridGeometry& g) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SampledSignal f(g);
    for (auto& q : f.values) q = Quaternion{u(rng), u(rng), u(rng), u(rng)};
    return f;
}

SampledSignal random_smooth_signal(std::uint64_t seed, const GridGeometry& g) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SampledSignal f(g);
    const int bumps = 3;
    for (int r = 0; r < bumps; ++r) {
        const Quaternion coeff{u(rng), u(rng), u(rng), u(rng)};
        const double c1 = u(rng);
        const double c2 = u(rng);
        const double sigma = 0.8 + 0.2 * (u(rng) + 1.0);  // [0.8, 1.2]
        const double inv = 1.0 / (2.0 * sigma * sigma);
        for (int k1 = 0; k1 < g.n1; ++k1) {
            const double d1 = g.coord1(k1) - c1;
            for (int k2 = 0; k2 < g.n2; ++k2) {
                const double d2 = g.coord2(k2) - c2;
                f.at(k1, k2) += coeff * std::exp(-(d1 * d1 + d2 * d2) * inv);
            }
        }
    }
    return f;
}

OffsetParams random_offset_params(std::uint64_t seed, bool allow_negative_b) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    OffsetParams p;
    p.a = mag(rng) * (u(rng) < 0.0 ? -1.0 : 1.0);
    p.b = mag(rng);
    if (allow_negative_b && u(rng) < 0.0) p.b = -p.b;
    p.c = u(rng);
    p.d = (1.0 + p.b * p.c) / p.a;
    p.tau = u(rng);
    p.eta = u(rng);
    p.validate();
    return p;
}

double AnalyticGaussianPi::value(double x1, double x2) const {
    return amplitude * std::exp(-M_PI * (x1 * x1 + x2 * x2));
}

double AnalyticGaussianPi::qft_hat(double k1, double k2) const {
    return amplitude * std::exp(-M_PI * (k1 * k1 + k2 * k2));
}

SampledSignal AnalyticGaussianPi::sample(const GridGeometry& g) const {
    SampledSignal f(g);
    for (int k1 = 0; k1 < g.n1; ++k1)
        for (int k2 = 0; k2 < g.n2; ++k2)
            f.at(k1, k2) = Quaternion::real(value(g.coord1(k1), g.coord2(k2)));
    return f;
}

}  // namespace qwvd
