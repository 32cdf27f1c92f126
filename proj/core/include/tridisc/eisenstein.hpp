#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>

namespace tridisc {

/// Exact point a + b*w of the triangular lattice, w = exp(i*pi/3).
///
/// w satisfies w^2 = w - 1, so the lattice is closed under products and
/// multiplication by w is a rotation by 60 degrees. The squared Euclidean
/// length of a + b*w is a^2 + ab + b^2.
struct EisensteinPoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr EisensteinPoint() = default;
  constexpr EisensteinPoint(std::int64_t re, std::int64_t w) : a(re), b(w) {}

  static constexpr EisensteinPoint omega() { return {0, 1}; }

  /// w^k for any integer k (taken mod 6).
  static constexpr EisensteinPoint omega_pow(int k) {
    constexpr EisensteinPoint table[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    return table[((k % 6) + 6) % 6];
  }

  constexpr EisensteinPoint operator+(EisensteinPoint o) const { return {a + o.a, b + o.b}; }
  constexpr EisensteinPoint operator-(EisensteinPoint o) const { return {a - o.a, b - o.b}; }
  constexpr EisensteinPoint operator-() const { return {-a, -b}; }
  constexpr EisensteinPoint operator*(EisensteinPoint o) const {
    return {a * o.a - b * o.b, a * o.b + b * o.a + b * o.b};
  }
  constexpr EisensteinPoint& operator+=(EisensteinPoint o) { return *this = *this + o; }
  constexpr EisensteinPoint& operator-=(EisensteinPoint o) { return *this = *this - o; }
  constexpr EisensteinPoint& operator*=(EisensteinPoint o) { return *this = *this * o; }

  /// Rotation by +60 degrees.
  constexpr EisensteinPoint rotated() const { return {-b, a + b}; }
  constexpr EisensteinPoint rotated(int steps) const { return *this * omega_pow(steps); }

  /// Complex conjugate: conj(w) = 1 - w.
  constexpr EisensteinPoint conj() const { return {a + b, -b}; }

  constexpr std::int64_t norm() const { return a * a + a * b + b * b; }

  /// Signed area of the triangle (0, this, o) counted in unit lattice
  /// triangles, so cross(1, w) == 1.
  constexpr std::int64_t cross(EisensteinPoint o) const { return a * o.b - b * o.a; }

  /// Exact quotient when it exists in the lattice.
  constexpr std::optional<EisensteinPoint> divided_by(EisensteinPoint d) const {
    const std::int64_t n = d.norm();
    if (n == 0) return std::nullopt;
    const EisensteinPoint num = *this * d.conj();
    if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
    return EisensteinPoint{num.a / n, num.b / n};
  }

  double x() const { return static_cast<double>(a) + 0.5 * static_cast<double>(b); }
  double y() const { return 0.8660254037844386 * static_cast<double>(b); }

  constexpr auto operator<=>(const EisensteinPoint&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, EisensteinPoint p) {
  return os << '(' << p.a << ", " << p.b << ')';
}

}  // namespace tridisc

template <>
struct std::hash<tridisc::EisensteinPoint> {
  std::size_t operator()(const tridisc::EisensteinPoint& p) const noexcept {
    return std::hash<std::int64_t>{}(p.a * 0x9E3779B97F4A7C15LL ^ p.b);
  }
};
