#pragma once

#include "balcurve/rational.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace bc {

struct RatPoint {
    Rational x, y;
};

inline bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const RatPoint& a, const RatPoint& b) { return !(a == b); }
inline bool operator<(const RatPoint& a, const RatPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct ArcLocator {
    std::size_t edge = 0;
    Rational t;  // in [0,1)
};

struct HostInfo {
    int curve_id = 0;
    ArcLocator from, to;
};

// Simple closed PL curve, positively oriented, vertices strictly inside the unit square.
struct PolyCurve {
    std::vector<RatPoint> v;
};

// Simple PL arc; `host` is set when the arc was cut out of a curve.
struct PolyArc {
    std::vector<RatPoint> v;
    std::optional<HostInfo> host;
};

// Non-owning view of either kind of piece.
struct ChainRef {
    const std::vector<RatPoint>& v;
    bool closed;
    ChainRef(const PolyCurve& c) : v(c.v), closed(true) {}
    ChainRef(const PolyArc& a) : v(a.v), closed(false) {}
    ChainRef(const std::vector<RatPoint>& pts, bool is_closed) : v(pts), closed(is_closed) {}
    std::size_t segments() const { return closed ? v.size() : v.size() - 1; }
    const RatPoint& seg_start(std::size_t i) const { return v[i]; }
    const RatPoint& seg_end(std::size_t i) const { return v[(i + 1) % v.size()]; }
};

// Sign of the cross product (b-a) x (c-a).
int orient(const RatPoint& a, const RatPoint& b, const RatPoint& c);
Rational cross(const RatPoint& o, const RatPoint& a, const RatPoint& b);
bool on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b);
RatPoint lerp(const RatPoint& a, const RatPoint& b, const Rational& t);

Rational signed_area(const std::vector<RatPoint>& poly);

// Winding number of a closed polygon around p; p must not lie on the polygon.
int winding_number(const RatPoint& p, const std::vector<RatPoint>& poly);

PolyCurve validate_curve(std::vector<RatPoint> points);
PolyArc make_arc(std::vector<RatPoint> points);
Rational enclosed_area(const PolyCurve& c);
PolyCurve reversed(const PolyCurve& c);

struct Crossing {
    std::size_t seg_a = 0, seg_b = 0;
    Rational t_a, t_b;
    RatPoint p;
};

struct PairStatus {
    enum Kind { Disjoint, Transverse, NonGeneric } kind = Disjoint;
    std::vector<RatPoint> points;     // sorted lexicographically
    std::vector<Crossing> crossings;  // ordered along a
    std::string witness;              // set for NonGeneric
};

PairStatus pair_status(ChainRef a, ChainRef b);
const char* kind_name(PairStatus::Kind k);

RatPoint point_at(const PolyCurve& c, const ArcLocator& loc);
PolyArc subarc(const PolyCurve& c, const ArcLocator& from, const ArcLocator& to, int curve_id = 0);

// Is the arc's vertex sequence a contiguous traversal of c (in c's direction)?
bool is_subarc_of(const PolyArc& arc, const PolyCurve& c);

// Random star-shaped simple polygon with rational vertices, validated.
PolyCurve random_curve(std::mt19937_64& rng, int n, double cx, double cy, double rmin, double rmax);

}  // namespace bc
