#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sas {

using Rational = mpq_class;

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; the denominator is always written, even when it is 1.
std::string format_rational(const Rational& value);

struct ExactPoint {
    Rational x;
    Rational y;

    ExactPoint() = default;
    ExactPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {
        x.canonicalize();
        y.canonicalize();
    }
    ExactPoint(long px, long py) : x(px), y(py) {}

    friend bool operator==(const ExactPoint& a, const ExactPoint& b) { return a.x == b.x && a.y == b.y; }
    friend std::strong_ordering operator<=>(const ExactPoint& a, const ExactPoint& b) {
        if (int c = cmp(a.x, b.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (int c = cmp(a.y, b.y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

ExactPoint operator+(const ExactPoint& a, const ExactPoint& b);
ExactPoint operator-(const ExactPoint& a, const ExactPoint& b);
ExactPoint operator*(const Rational& s, const ExactPoint& p);

/// Point a + t (b - a).
ExactPoint lerp(const ExactPoint& a, const ExactPoint& b, const Rational& t);

Rational cross(const ExactPoint& a, const ExactPoint& b);

/// Sign of the turn a -> b -> c: +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

using Polyline = std::vector<ExactPoint>;

struct Segment {
    ExactPoint a;
    ExactPoint b;
};

enum class ContactKind { None, Point, Overlap };

struct SegmentContact {
    ContactKind kind = ContactKind::None;
    ExactPoint point;  // valid for ContactKind::Point
};

/// Closed-segment intersection. Collinear segments sharing more than one point report Overlap.
SegmentContact intersect(const Segment& s, const Segment& t);

/// True when p lies on the closed segment.
bool on_segment(const ExactPoint& p, const Segment& s);

/// True when the polyline has no repeated point and no two non-adjacent segments touch.
bool is_simple(const Polyline& line);

enum class Containment { Outside, Boundary, Inside };

/// Exact point-in-polygon test for a simple closed polygon given by its corners.
Containment locate(const ExactPoint& p, const Polyline& polygon);

}  // namespace sas
