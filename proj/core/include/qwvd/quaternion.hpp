#ifndef QWVD_QUATERNION_HPP
#define QWVD_QUATERNION_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwvd {

/// Element of the Hamilton algebra H: q = w + i*x + j*y + k*z with
/// ij = -ji = k, jk = -kj = i, ki = -ik = j, i^2 = j^2 = k^2 = -1.
/// All components are doubles; values are immutable in spirit (every
/// operation returns a new value) and safe to share across threads.
struct Quaternion {
    double w{0.0};
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& q) {
        w += q.w; x += q.x; y += q.y; z += q.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& q) {
        w -= q.w; x -= q.x; y -= q.y; z -= q.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) { return q *= (1.0 / s); }

/// Hamilton product. Non-commutative; the component formulas follow the
/// multiplication table of the basis units.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

/// Conjugate: negates the vector part. Anti-involution, conj(p*q) = conj(q)*conj(p).
constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

/// Modulus |q|_Q = sqrt(q conj(q)). Multiplicative: |pq| = |p||q|.
inline double modulus(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr double sc(const Quaternion& q) { return q.w; }
constexpr Quaternion vec(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

/// Two-sided inverse q^{-1} = conj(q) / |q|^2. Throws on the zero divisor.
inline Quaternion inverse(const Quaternion& q) {
    const double n = norm_sq(q);
    if (n == 0.0)
        throw std::domain_error("Quaternion inverse of zero");
    return conj(q) * (1.0 / n);
}

/// A pure unit quaternion: zero scalar part, unit modulus, squares to -1.
/// Serves as a generalized imaginary axis for the transform kernels.
class PureUnitAxis {
  public:
    /// Normalizes (vx, vy, vz); throws if the vector is too small to normalize.
    static PureUnitAxis from_vector(double vx, double vy, double vz) {
        const double n = std::sqrt(vx * vx + vy * vy + vz * vz);
        if (!(n > 1e-300))
            throw std::domain_error("PureUnitAxis requires a nonzero direction");
        return PureUnitAxis(vx / n, vy / n, vz / n);
    }

    static PureUnitAxis i() { return PureUnitAxis(1.0, 0.0, 0.0); }
    static PureUnitAxis j() { return PureUnitAxis(0.0, 1.0, 0.0); }
    static PureUnitAxis k() { return PureUnitAxis(0.0, 0.0, 1.0); }

    const Quaternion& direction() const { return dir_; }

    bool is_i() const { return dir_.x == 1.0 && dir_.y == 0.0 && dir_.z == 0.0; }
    bool is_j() const { return dir_.x == 0.0 && dir_.y == 1.0 && dir_.z == 0.0; }

    bool operator==(const PureUnitAxis&) const = default;

  private:
    PureUnitAxis(double vx, double vy, double vz) : dir_{0.0, vx, vy, vz} {}
    Quaternion dir_;
};

/// Euler form on a fixed axis: cos(theta) + axis * sin(theta). Unit modulus.
inline Quaternion axis_exp(const PureUnitAxis& axis, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Quaternion& d = axis.direction();
    return {c, s * d.x, s * d.y, s * d.z};
}

/// The branch e^{-axis*pi/4} used for 1/sqrt(axis) in the transform kernels.
inline Quaternion sqrt_axis_phase(const PureUnitAxis& axis) {
    return axis_exp(axis, -0.25 * M_PI);
}

inline std::string to_string(const Quaternion& q) {
    return "(" + std::to_string(q.w) + " + " + std::to_string(q.x) + "i + " +
           std::to_string(q.y) + "j + " + std::to_string(q.z) + "k)";
}

}  // namespace qwvd

#endif
