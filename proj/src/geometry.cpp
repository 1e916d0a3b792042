#include <tcgx/geometry.hpp>

#include <numbers>
#include <string>

namespace tcgx {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite(const Point& p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }

// A full turn stored as a 32-bit float rounds up to 6.2831855.
constexpr double max_sweep = two_pi + 1e-6;

// Tolerance for arclength parameters slightly past an end, from rounding upstream.
double slack(double len) noexcept { return 1e-9 * std::max(1.0, len); }

} // namespace

const char* carrier_defect(const CarrierLine& c) noexcept
{
    return std::visit(overloaded{
                          [](const Segment& s) -> const char* {
                              if (!finite(s.p1) || !finite(s.p2))
                                  return "segment has non-finite coordinates";
                              if (s.p1 == s.p2)
                                  return "segment endpoints coincide";
                              if (!std::isfinite(distance(s.p1, s.p2)))
                                  return "segment length overflows";
                              return "";
                          },
                          [](const Arc& a) -> const char* {
                              if (!finite(a.center) || !std::isfinite(a.radius) || !std::isfinite(a.start_angle) ||
                                  !std::isfinite(a.sweep))
                                  return "arc has non-finite parameters";
                              if (!(a.radius > 0))
                                  return "arc radius must be positive";
                              if (a.sweep == 0 || std::abs(a.sweep) > max_sweep)
                                  return "arc sweep must satisfy 0 < |sweep| <= 2 pi";
                              if (!std::isfinite(a.radius * std::abs(a.sweep)))
                                  return "arc length overflows";
                              return "";
                          },
                      },
                      c);
}

void check_carrier(const CarrierLine& c)
{
    const char* defect = carrier_defect(c);
    if (*defect)
        throw DomainError("carrier", defect);
}

double length(const CarrierLine& c)
{
    check_carrier(c);
    return std::visit(overloaded{
                          [](const Segment& s) { return distance(s.p1, s.p2); },
                          [](const Arc& a) { return a.radius * std::abs(a.sweep); },
                      },
                      c);
}

Point start_point(const CarrierLine& c)
{
    return frame_at(c, 0).origin;
}

Point end_point(const CarrierLine& c)
{
    return frame_at(c, length(c)).origin;
}

Frame frame_at(const CarrierLine& c, double s)
{
    const double len = length(c);
    if (!(s >= -slack(len) && s <= len + slack(len)))
        throw DomainError("s", "arclength " + std::to_string(s) + " outside [0, " + std::to_string(len) + "]");
    s = std::clamp(s, 0.0, len);

    return std::visit(overloaded{
                          [&](const Segment& seg) {
                              const Point d = seg.p2 - seg.p1;
                              const Point t = d * (1.0 / len);
                              // Hit the far endpoint exactly rather than through p1 + t*len.
                              const Point o = s == len ? seg.p2 : seg.p1 + t * s;
                              return Frame{o, t, Point{-t.y, t.x}};
                          },
                          [&](const Arc& a) {
                              const double dir = a.sweep > 0 ? 1.0 : -1.0;
                              const double theta = a.start_angle + dir * s / a.radius;
                              const double ct = std::cos(theta);
                              const double st = std::sin(theta);
                              const Point o{a.center.x + a.radius * ct, a.center.y + a.radius * st};
                              const Point t{-st * dir, ct * dir};
                              return Frame{o, t, Point{-t.y, t.x}};
                          },
                      },
                      c);
}

CarrierLine sub_carrier(const CarrierLine& c, double s0, double s1)
{
    const double len = length(c);
    if (!(s0 >= -slack(len) && s1 <= len + slack(len) && s0 < s1))
        throw DomainError("interval", "[" + std::to_string(s0) + ", " + std::to_string(s1) + "] is not inside the carrier");
    s0 = std::max(0.0, s0);
    s1 = std::min(len, s1);
    return std::visit(overloaded{
                          [&](const Segment&) -> CarrierLine {
                              return Segment{frame_at(c, s0).origin, frame_at(c, s1).origin};
                          },
                          [&](const Arc& a) -> CarrierLine {
                              const double dir = a.sweep > 0 ? 1.0 : -1.0;
                              return Arc{a.center, a.radius, a.start_angle + dir * s0 / a.radius,
                                         dir * (s1 - s0) / a.radius};
                          },
                      },
                      c);
}

CarrierLine offset(const CarrierLine& c, double d)
{
    check_carrier(c);
    if (!std::isfinite(d))
        throw DomainError("offset", "distance is not finite");
    return std::visit(overloaded{
                          [&](const Segment& s) -> CarrierLine {
                              const Point t = (s.p2 - s.p1) * (1.0 / distance(s.p1, s.p2));
                              const Point n{-t.y, t.x};
                              return Segment{s.p1 + n * d, s.p2 + n * d};
                          },
                          [&](const Arc& a) -> CarrierLine {
                              const double r = a.sweep > 0 ? a.radius - d : a.radius + d;
                              if (!(r > 0))
                                  throw DomainError("offset", "offset by " + std::to_string(d) +
                                                                  " collapses arc of radius " +
                                                                  std::to_string(a.radius));
                              return Arc{a.center, r, a.start_angle, a.sweep};
                          },
                      },
                      c);
}

} // namespace tcgx
