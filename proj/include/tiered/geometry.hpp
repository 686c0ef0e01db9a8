#pragma once

#include <cmath>
#include <stdexcept>

namespace tiered {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

inline double dist2(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double dist(Vec2 a, Vec2 b) { return std::sqrt(dist2(a, b)); }

/// Target region: a 1D interval [s,t] (points carry y = 0) or an
/// axis-aligned rectangle [x0,x1] x [y0,y1]. Must have positive measure.
class Region {
 public:
  enum class Kind { Interval, Rect };

  static Region interval(double s, double t) {
    if (!(t > s)) throw std::invalid_argument("interval needs t > s");
    return Region(Kind::Interval, s, t, 0.0, 0.0);
  }

  static Region rect(double x0, double x1, double y0, double y1) {
    if (!(x1 > x0 && y1 > y0))
      throw std::invalid_argument("rect needs x1 > x0 and y1 > y0");
    return Region(Kind::Rect, x0, x1, y0, y1);
  }

  Kind kind() const { return kind_; }
  int dimension() const { return kind_ == Kind::Interval ? 1 : 2; }

  double x0() const { return x0_; }
  double x1() const { return x1_; }
  double y0() const { return y0_; }
  double y1() const { return y1_; }

  // Length for intervals, area for rectangles.
  double measure() const {
    return kind_ == Kind::Interval ? x1_ - x0_ : (x1_ - x0_) * (y1_ - y0_);
  }

  bool contains(Vec2 p) const {
    if (kind_ == Kind::Interval) return p.x >= x0_ && p.x <= x1_;
    return p.x >= x0_ && p.x <= x1_ && p.y >= y0_ && p.y <= y1_;
  }

 private:
  Region(Kind kind, double x0, double x1, double y0, double y1)
      : kind_(kind), x0_(x0), x1_(x1), y0_(y0), y1_(y1) {}

  Kind kind_;
  double x0_, x1_, y0_, y1_;
};

}  // namespace tiered
