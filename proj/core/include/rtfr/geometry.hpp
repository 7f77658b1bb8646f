#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace rtfr {

/// 2-D vector in layout units.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(Vec2 o) noexcept {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) noexcept {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) noexcept { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) noexcept { return {a.x * s, a.y * s}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) noexcept { return {a.x * s, a.y * s}; }
  friend constexpr bool operator==(Vec2, Vec2) noexcept = default;
};

constexpr double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double length_squared(Vec2 a) noexcept { return dot(a, a); }
inline double length(Vec2 a) noexcept { return std::sqrt(length_squared(a)); }

inline bool is_finite(Vec2 a) noexcept { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Closed axis-aligned box. A default-constructed box is empty.
struct Aabb {
  Vec2 min{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 max{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

  [[nodiscard]] bool empty() const noexcept { return min.x > max.x || min.y > max.y; }
  [[nodiscard]] double width() const noexcept { return max.x - min.x; }
  [[nodiscard]] double height() const noexcept { return max.y - min.y; }

  void expand(Vec2 p) noexcept {
    min.x = std::min(min.x, p.x);
    min.y = std::min(min.y, p.y);
    max.x = std::max(max.x, p.x);
    max.y = std::max(max.y, p.y);
  }
  void expand(const Aabb& b) noexcept {
    min.x = std::min(min.x, b.min.x);
    min.y = std::min(min.y, b.min.y);
    max.x = std::max(max.x, b.max.x);
    max.y = std::max(max.y, b.max.y);
  }

  [[nodiscard]] bool contains(Vec2 p) const noexcept {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  [[nodiscard]] bool contains(const Aabb& b) const noexcept {
    return b.min.x >= min.x && b.max.x <= max.x && b.min.y >= min.y && b.max.y <= max.y;
  }
  [[nodiscard]] bool overlaps(const Aabb& b) const noexcept {
    return min.x <= b.max.x && b.min.x <= max.x && min.y <= b.max.y && b.min.y <= max.y;
  }

  friend bool operator==(const Aabb&, const Aabb&) noexcept = default;
};

inline Aabb bounds_of(std::span<const Vec2> points) noexcept {
  Aabb box;
  for (Vec2 p : points) box.expand(p);
  return box;
}

/// Square [c - r, c + r]^2 with endpoints rounded outward, so that any point
/// whose squared distance to c computes below r*r is contained.
inline Aabb square_around(Vec2 c, double r) noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return Aabb{{std::nextafter(c.x - r, -inf), std::nextafter(c.y - r, -inf)},
              {std::nextafter(c.x + r, inf), std::nextafter(c.y + r, inf)}};
}

}  // namespace rtfr
