#include "balcurve/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bc {

int orient(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    return sgn(cross(a, b, c));
}

Rational cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

RatPoint lerp(const RatPoint& a, const RatPoint& b, const Rational& t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Rational signed_area(const std::vector<RatPoint>& poly) {
    Rational s = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return s / 2;
}

int winding_number(const RatPoint& p, const std::vector<RatPoint>& poly) {
    int wn = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) ++wn;
        } else if (b.y <= p.y && orient(a, b, p) < 0) {
            --wn;
        }
    }
    return wn;
}

namespace {

bool strictly_inside_square(const RatPoint& p) {
    return p.x > 0 && p.x < 1 && p.y > 0 && p.y < 1;
}

std::string pt_str(const RatPoint& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

struct Box {
    double x0, x1, y0, y1;
};

std::vector<Box> boxes(ChainRef c) {
    std::vector<Box> out;
    out.reserve(c.segments());
    constexpr double pad = 1e-12;
    for (std::size_t i = 0; i < c.segments(); ++i) {
        double ax = c.seg_start(i).x.get_d(), ay = c.seg_start(i).y.get_d();
        double bx = c.seg_end(i).x.get_d(), by = c.seg_end(i).y.get_d();
        out.push_back({std::min(ax, bx) - pad, std::max(ax, bx) + pad,
                       std::min(ay, by) - pad, std::max(ay, by) + pad});
    }
    return out;
}

bool overlap(const Box& a, const Box& b) {
    return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

enum class SegRel { None, Proper, Touch };

// Relation between closed segments p1p2 and q1q2. For Proper, fills parameters.
SegRel seg_relation(const RatPoint& p1, const RatPoint& p2, const RatPoint& q1, const RatPoint& q2,
                    Rational* ta, Rational* tb) {
    int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
    int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        if (ta) {
            Rational dx = p2.x - p1.x, dy = p2.y - p1.y;
            Rational ex = q2.x - q1.x, ey = q2.y - q1.y;
            Rational den = dx * ey - dy * ex;
            *ta = ((q1.x - p1.x) * ey - (q1.y - p1.y) * ex) / den;
            *tb = ((q1.x - p1.x) * dy - (q1.y - p1.y) * dx) / den;
        }
        return SegRel::Proper;
    }
    if ((o1 == 0 && on_segment(q1, p1, p2)) || (o2 == 0 && on_segment(q2, p1, p2)) ||
        (o3 == 0 && on_segment(p1, q1, q2)) || (o4 == 0 && on_segment(p2, q1, q2)))
        return SegRel::Touch;
    return SegRel::None;
}

}  // namespace

PolyCurve validate_curve(std::vector<RatPoint> pts) {
    const std::size_t n = pts.size();
    if (n < 3) throw Error("DegenerateVertex", "a curve needs at least 3 vertices");
    for (const auto& p : pts)
        if (!strictly_inside_square(p)) throw Error("OutOfDomain", "vertex " + pt_str(p) + " is not interior");
    {
        std::vector<RatPoint> sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < n; ++i)
            if (sorted[i] == sorted[i - 1]) throw Error("DegenerateVertex", "repeated vertex " + pt_str(sorted[i]));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) == 0)
            throw Error("DegenerateVertex", "collinear triple at vertex " + std::to_string((i + 1) % n));
    ChainRef ref(pts, true);
    auto bx = boxes(ref);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (!overlap(bx[i], bx[j])) continue;
            if (seg_relation(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n], nullptr, nullptr) != SegRel::None)
                throw Error("NotSimple", "segments " + std::to_string(i) + " and " + std::to_string(j) + " meet");
        }
    }
    if (signed_area(pts) < 0) std::reverse(pts.begin(), pts.end());
    return PolyCurve{std::move(pts)};
}

PolyArc make_arc(std::vector<RatPoint> pts) {
    const std::size_t n = pts.size();
    if (n < 2) throw Error("DegenerateVertex", "an arc needs at least 2 vertices");
    for (const auto& p : pts)
        if (!strictly_inside_square(p)) throw Error("OutOfDomain", "vertex " + pt_str(p) + " is not interior");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (pts[i] == pts[i + 1]) throw Error("DegenerateVertex", "repeated vertex " + pt_str(pts[i]));
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const auto &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
        // folding back onto the previous segment
        if (orient(a, b, c) == 0 && (on_segment(a, b, c) || on_segment(c, a, b)))
            throw Error("NotSimple", "arc folds back at vertex " + std::to_string(i + 1));
    }
    ChainRef ref(pts, false);
    auto bx = boxes(ref);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 2; j + 1 < n; ++j) {
            if (!overlap(bx[i], bx[j])) continue;
            if (seg_relation(pts[i], pts[i + 1], pts[j], pts[j + 1], nullptr, nullptr) != SegRel::None)
                throw Error("NotSimple", "segments " + std::to_string(i) + " and " + std::to_string(j) + " meet");
        }
    return PolyArc{std::move(pts), std::nullopt};
}

Rational enclosed_area(const PolyCurve& c) { return signed_area(c.v); }

PolyCurve reversed(const PolyCurve& c) {
    PolyCurve r = c;
    std::reverse(r.v.begin(), r.v.end());
    return r;
}

const char* kind_name(PairStatus::Kind k) {
    switch (k) {
        case PairStatus::Disjoint: return "Disjoint";
        case PairStatus::Transverse: return "Transverse";
        case PairStatus::NonGeneric: return "NonGeneric";
    }
    return "?";
}

PairStatus pair_status(ChainRef a, ChainRef b) {
    PairStatus st;
    auto ba = boxes(a);
    auto bb = boxes(b);
    // sort b's boxes by x0 for a cheap sweep
    std::vector<std::size_t> order(bb.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return bb[i].x0 < bb[j].x0; });
    std::vector<double> starts;
    starts.reserve(order.size());
    for (auto i : order) starts.push_back(bb[i].x0);

    for (std::size_t i = 0; i < ba.size(); ++i) {
        auto end = std::upper_bound(starts.begin(), starts.end(), ba[i].x1) - starts.begin();
        for (std::ptrdiff_t k = 0; k < end; ++k) {
            std::size_t j = order[k];
            if (!overlap(ba[i], bb[j])) continue;
            Crossing cr;
            auto rel = seg_relation(a.seg_start(i), a.seg_end(i), b.seg_start(j), b.seg_end(j), &cr.t_a, &cr.t_b);
            if (rel == SegRel::Touch) {
                st.kind = PairStatus::NonGeneric;
                st.points.clear();
                st.crossings.clear();
                st.witness = "segment " + std::to_string(i) + " touches segment " + std::to_string(j);
                return st;
            }
            if (rel == SegRel::Proper) {
                cr.seg_a = i;
                cr.seg_b = j;
                cr.p = lerp(a.seg_start(i), a.seg_end(i), cr.t_a);
                st.crossings.push_back(std::move(cr));
            }
        }
    }
    std::sort(st.crossings.begin(), st.crossings.end(), [](const Crossing& x, const Crossing& y) {
        return x.seg_a < y.seg_a || (x.seg_a == y.seg_a && x.t_a < y.t_a);
    });
    for (const auto& c : st.crossings) st.points.push_back(c.p);
    std::sort(st.points.begin(), st.points.end());
    st.kind = st.crossings.empty() ? PairStatus::Disjoint : PairStatus::Transverse;
    return st;
}

RatPoint point_at(const PolyCurve& c, const ArcLocator& loc) {
    const auto& a = c.v[loc.edge];
    const auto& b = c.v[(loc.edge + 1) % c.v.size()];
    return lerp(a, b, loc.t);
}

PolyArc subarc(const PolyCurve& c, const ArcLocator& from, const ArcLocator& to, int curve_id) {
    const std::size_t n = c.v.size();
    auto check = [&](const ArcLocator& l) {
        if (l.edge >= n || l.t < 0 || l.t >= 1) throw Error("InvalidLocator", "locator out of range");
    };
    check(from);
    check(to);
    if (from.edge == to.edge && from.t == to.t) throw Error("InvalidLocator", "locators coincide");
    PolyArc arc;
    arc.v.push_back(point_at(c, from));
    if (!(from.edge == to.edge && from.t < to.t)) {
        std::size_t e = from.edge;
        do {
            e = (e + 1) % n;
            arc.v.push_back(c.v[e]);
        } while (e != to.edge);
    }
    RatPoint end = point_at(c, to);
    if (arc.v.back() != end) arc.v.push_back(end);
    arc.host = HostInfo{curve_id, from, to};
    return arc;
}

bool is_subarc_of(const PolyArc& arc, const PolyCurve& c) {
    const std::size_t n = c.v.size(), m = arc.v.size();
    if (m < 2) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& nxt = c.v[(i + 1) % n];
        if (!on_segment(arc.v[0], c.v[i], nxt) || arc.v[0] == nxt) continue;
        std::size_t e = i;
        RatPoint prev = arc.v[0];
        bool ok = true;
        std::size_t steps = 0;
        for (std::size_t k = 1; k < m && ok; ++k) {
            const auto& head = c.v[(e + 1) % n];
            if (k == m - 1) {
                ok = on_segment(arc.v[k], prev, head) && arc.v[k] != prev;
            } else if (arc.v[k] == head && ++steps <= n) {
                prev = head;
                e = (e + 1) % n;
            } else {
                ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

PolyCurve random_curve(std::mt19937_64& rng, int n, double cx, double cy, double rmin, double rmax) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> ang(n);
        for (auto& a : ang) a = U(rng) * 2 * std::numbers::pi;
        std::sort(ang.begin(), ang.end());
        std::vector<RatPoint> pts;
        for (int i = 0; i < n; ++i) {
            double r = rmin + (rmax - rmin) * U(rng);
            double x = cx + r * std::cos(ang[i]), y = cy + r * std::sin(ang[i]);
            pts.push_back({Rational(static_cast<long>(std::lround(x * 65536)), 65536),
                           Rational(static_cast<long>(std::lround(y * 65536)), 65536)});
            pts.back().x.canonicalize();
            pts.back().y.canonicalize();
        }
        try {
            return validate_curve(std::move(pts));
        } catch (const Error&) {
        }
    }
    throw Error("ConstructionFailed", "could not sample a simple curve");
}

}  // namespace bc
