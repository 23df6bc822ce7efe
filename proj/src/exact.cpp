#include "sas/exact.hpp"

#include <stdexcept>

namespace sas {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

ExactPoint operator+(const ExactPoint& a, const ExactPoint& b) { return {a.x + b.x, a.y + b.y}; }
ExactPoint operator-(const ExactPoint& a, const ExactPoint& b) { return {a.x - b.x, a.y - b.y}; }
ExactPoint operator*(const Rational& s, const ExactPoint& p) { return {s * p.x, s * p.y}; }

ExactPoint lerp(const ExactPoint& a, const ExactPoint& b, const Rational& t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Rational cross(const ExactPoint& a, const ExactPoint& b) { return a.x * b.y - a.y * b.x; }

int orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    Rational d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(d);
}

bool on_segment(const ExactPoint& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != 0) return false;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
           p.y <= std::max(s.a.y, s.b.y);
}

namespace {

bool boxes_overlap(const Segment& s, const Segment& t) {
    const auto& [sa, sb] = s;
    const auto& [ta, tb] = t;
    if (std::max(sa.x, sb.x) < std::min(ta.x, tb.x)) return false;
    if (std::max(ta.x, tb.x) < std::min(sa.x, sb.x)) return false;
    if (std::max(sa.y, sb.y) < std::min(ta.y, tb.y)) return false;
    if (std::max(ta.y, tb.y) < std::min(sa.y, sb.y)) return false;
    return true;
}

}  // namespace

SegmentContact intersect(const Segment& s, const Segment& t) {
    if (!boxes_overlap(s, t)) return {};
    int o1 = orientation(s.a, s.b, t.a);
    int o2 = orientation(s.a, s.b, t.b);
    int o3 = orientation(t.a, t.b, s.a);
    int o4 = orientation(t.a, t.b, s.b);

    if (o1 == 0 && o2 == 0) {
        // Collinear: the overlap is an interval along the common line.
        auto key = [&](const ExactPoint& p) { return s.a.x != s.b.x ? p.x : p.y; };
        Rational s0 = key(s.a), s1 = key(s.b), t0 = key(t.a), t1 = key(t.b);
        if (s0 > s1) std::swap(s0, s1);
        if (t0 > t1) std::swap(t0, t1);
        Rational lo = std::max(s0, t0), hi = std::min(s1, t1);
        if (lo > hi) return {};
        if (lo < hi) return {ContactKind::Overlap, {}};
        for (const auto* p : {&s.a, &s.b})
            if (key(*p) == lo) return {ContactKind::Point, *p};
        return {};
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return {};
    if (o1 == 0) return {ContactKind::Point, t.a};
    if (o2 == 0) return {ContactKind::Point, t.b};
    if (o3 == 0) return {ContactKind::Point, s.a};
    if (o4 == 0) return {ContactKind::Point, s.b};
    ExactPoint r = s.b - s.a;
    ExactPoint q = t.b - t.a;
    Rational u = cross(t.a - s.a, q) / cross(r, q);
    return {ContactKind::Point, lerp(s.a, s.b, u)};
}

bool is_simple(const Polyline& line) {
    if (line.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
        if (line[i] == line[i + 1]) return false;
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        Segment si{line[i], line[i + 1]};
        for (std::size_t j = i + 1; j + 1 < line.size(); ++j) {
            SegmentContact c = intersect(si, {line[j], line[j + 1]});
            if (c.kind == ContactKind::None) continue;
            if (c.kind == ContactKind::Overlap) return false;
            // Adjacent segments may only share their joint.
            if (j == i + 1 && c.point == line[j]) continue;
            return false;
        }
    }
    return true;
}

Containment locate(const ExactPoint& p, const Polyline& polygon) {
    const std::size_t k = polygon.size();
    bool inside = false;
    for (std::size_t i = 0; i < k; ++i) {
        const ExactPoint& a = polygon[i];
        const ExactPoint& b = polygon[(i + 1) % k];
        if (on_segment(p, {a, b})) return Containment::Boundary;
        // Half-open crossing rule on the horizontal ray towards +x.
        if ((a.y > p.y) != (b.y > p.y)) {
            int o = orientation(a, b, p);
            if ((b.y > a.y && o > 0) || (b.y < a.y && o < 0)) inside = !inside;
        }
    }
    return inside ? Containment::Inside : Containment::Outside;
}

}  // namespace sas
