#pragma once

#include <cmath>
#include <concepts>

namespace vndf {

/// Three-component vector. Used both for points and for directions on S².
template <std::floating_point T>
struct Vec3 {
    T x{}, y{}, z{};

    constexpr Vec3() = default;
    constexpr Vec3(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

    template <std::floating_point U>
    constexpr explicit Vec3(const Vec3<U>& v)
        : x(static_cast<T>(v.x)), y(static_cast<T>(v.y)), z(static_cast<T>(v.z)) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(T s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(T s) const { return {x / s, y / s, z / s}; }
    constexpr bool operator==(const Vec3&) const = default;
};

template <std::floating_point T>
constexpr Vec3<T> operator*(T s, const Vec3<T>& v) {
    return v * s;
}

/// A unit vector on the sphere. The type does not enforce the norm; the
/// operations that require one document it as a precondition.
template <std::floating_point T>
using Direction3 = Vec3<T>;

using Vec3f = Vec3<float>;
using Vec3d = Vec3<double>;

template <std::floating_point T>
constexpr T dot(const Vec3<T>& a, const Vec3<T>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <std::floating_point T>
constexpr Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <std::floating_point T>
inline T length(const Vec3<T>& v) {
    return std::sqrt(dot(v, v));
}

template <std::floating_point T>
inline Vec3<T> normalize(const Vec3<T>& v) {
    return v * (T(1) / length(v));
}

/// Direction from spherical angles (radians), z is the polar axis.
template <std::floating_point T>
inline Vec3<T> spherical_direction(T theta, T phi) {
    const T s = std::sin(theta);
    return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

}  // namespace vndf
