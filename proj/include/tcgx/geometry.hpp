#pragma once

// Arclength-parametrized carrier lines (segment or circular arc).
// All computation is in double precision; storage rounding lives in the codec.

#include <tcgx/errors.hpp>

#include <cmath>
#include <variant>

namespace tcgx {

struct Point
{
    double x = 0;
    double y = 0;

    friend bool operator==(const Point&, const Point&) = default;

    Point operator+(const Point& o) const noexcept { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const noexcept { return {x - o.x, y - o.y}; }
    Point operator*(double k) const noexcept { return {x * k, y * k}; }

    double norm() const noexcept { return std::hypot(x, y); }
};

inline double distance(const Point& a, const Point& b) noexcept { return (a - b).norm(); }

struct Segment
{
    Point p1;
    Point p2;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Counterclockwise for positive sweep. Angles in radians.
struct Arc
{
    Point center;
    double radius = 0;
    double start_angle = 0;
    double sweep = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

using CarrierLine = std::variant<Segment, Arc>;

/// Local frame at a point of a carrier; normal is the tangent turned +90 degrees.
struct Frame
{
    Point origin;
    Point tangent;
    Point normal;

    /// Map local (along, across) coordinates to the drawing plane.
    Point at(double along, double across) const noexcept
    {
        return origin + tangent * along + normal * across;
    }
};

/// Empty string when the carrier is well formed, else a description of the defect.
const char* carrier_defect(const CarrierLine& c) noexcept;

/// Throws DomainError when the carrier violates its invariants.
void check_carrier(const CarrierLine& c);

double length(const CarrierLine& c);
Point start_point(const CarrierLine& c);
Point end_point(const CarrierLine& c);

/// Frame at arclength s in [0, length(c)]; throws DomainError outside that range.
Frame frame_at(const CarrierLine& c, double s);

/// The part of the carrier between arclengths s0 < s1.
CarrierLine sub_carrier(const CarrierLine& c, double s0, double s1);

/// Parallel curve at signed distance d along the normal. For arcs this moves
/// toward the center when d > 0 and the sweep is counterclockwise.
CarrierLine offset(const CarrierLine& c, double d);

} // namespace tcgx
