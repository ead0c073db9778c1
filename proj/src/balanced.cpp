#include "balcurve/balanced.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace bc {

namespace {

const Rational kHalf(1, 2);
const Rational kSMax(19, 20);
// Grown regions stop once this much area is collected; the realized curve
// then needs scale s with s^2 * area close to 1/2, comfortably below s_max.
const Rational kStopArea(5, 8);

int crossing_count(ChainRef a, ChainRef b) {
    PairStatus st = pair_status(a, b);
    if (st.kind == PairStatus::NonGeneric) throw Error("NonGenericInput", st.witness);
    return static_cast<int>(st.crossings.size());
}

std::string point_text(const RatPoint& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

// Largest piece of every zone, zones ordered by total area (largest first).
std::vector<int> zone_roots(const Decomposition& d, const std::function<bool(int)>& allowed) {
    std::vector<int> zone = d.zones();
    std::map<int, Rational> area;
    std::map<int, int> best;
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        if (!allowed(static_cast<int>(i))) continue;
        int z = zone[i];
        area[z] += d.pieces[i].area;
        auto it = best.find(z);
        if (it == best.end() || d.pieces[it->second].area < d.pieces[i].area) best[z] = static_cast<int>(i);
    }
    std::vector<int> zs;
    for (auto& [z, a] : area) zs.push_back(z);
    std::stable_sort(zs.begin(), zs.end(), [&](int x, int y) { return area[x] > area[y]; });
    std::vector<int> roots;
    for (int z : zs) roots.push_back(best[z]);
    return roots;
}

// Grows a region from each candidate root under each option set and returns
// the first realized equator that `accept` likes.
std::optional<PolyCurve> grow_equator(const Decomposition& d, const std::vector<int>& roots,
                                      const std::vector<GrowOptions>& variants,
                                      const std::function<bool(const PolyCurve&)>& accept) {
    for (const auto& base : variants)
        for (int root : roots) {
            GrowOptions opt = base;
            opt.stop_area = kStopArea;
            RegionTree t = grow_region(d, root, opt);
            if (region_capacity(t, kSMax) <= kHalf) continue;
            RealizeOptions ro;
            ro.target = kHalf;
            ro.s_max = kSMax;
            if (auto c = realize_region(d, t, ro, accept)) return c;
        }
    return std::nullopt;
}

bool point_on_chain(const RatPoint& p, ChainRef c) {
    for (std::size_t s = 0; s < c.segments(); ++s)
        if (on_segment(p, c.seg_start(s), c.seg_end(s))) return true;
    return false;
}

// alpha_next is alpha with one terminal crossing (with b) removed.
bool is_one_crossing_shrink(const PolyArc& alpha_next, const PolyArc& alpha, const PolyCurve& a,
                            const PolyCurve& b) {
    if (!is_subarc_of(alpha_next, a) || !is_subarc_of(alpha, a)) return false;
    for (const auto& p : alpha_next.v)
        if (!point_on_chain(p, alpha)) return false;
    return crossing_count(alpha_next, b) + 1 == crossing_count(alpha, b);
}

}  // namespace

void check_epsilon(const Rational& eps) {
    if (!(eps > 0 && eps <= kHalf)) throw Error("InvalidEpsilon", "need 0 < eps <= 1/2, got " + to_string(eps));
}

bool is_balanced(const PolyCurve& c, const Rational& eps) {
    check_epsilon(eps);
    Rational a = enclosed_area(c);
    Rational rest = 1 - a;
    return std::min(a, rest) >= eps;
}

bool is_equator(const PolyCurve& c) { return enclosed_area(c) == kHalf; }

const char* adjacency_name(AdjacencyResult::Kind k) {
    switch (k) {
        case AdjacencyResult::Disjoint: return "Disjoint";
        case AdjacencyResult::TwoTransverse: return "TwoTransverse";
        case AdjacencyResult::NotAdjacent: return "NotAdjacent";
        case AdjacencyResult::NonGeneric: return "NonGeneric";
    }
    return "?";
}

AdjacencyResult crossing_adjacency(const PolyCurve& a, const PolyCurve& b) {
    PairStatus st = pair_status(a, b);
    AdjacencyResult r;
    r.points = st.points;
    if (st.kind == PairStatus::NonGeneric) {
        r.kind = AdjacencyResult::NonGeneric;
        r.reason = st.witness;
    } else if (st.kind == PairStatus::Disjoint) {
        r.kind = AdjacencyResult::Disjoint;
    } else if (st.points.size() == 2) {
        r.kind = AdjacencyResult::TwoTransverse;
    } else {
        r.kind = AdjacencyResult::NotAdjacent;
        r.reason = std::to_string(st.points.size()) + " transverse crossings";
    }
    return r;
}

AdjacencyResult adjacent(const PolyCurve& a, const PolyCurve& b, const Rational& eps) {
    if (!is_balanced(a, eps)) throw Error("NotBalancedInput", "first curve has area " + to_string(enclosed_area(a)));
    if (!is_balanced(b, eps)) throw Error("NotBalancedInput", "second curve has area " + to_string(enclosed_area(b)));
    return crossing_adjacency(a, b);
}

AdmissibleResult admissible(ChainRef alpha_p, ChainRef beta_p, const Rational& eps) {
    check_epsilon(eps);
    PairStatus st = pair_status(alpha_p, beta_p);
    if (st.kind == PairStatus::NonGeneric) throw Error("NonGenericInput", st.witness);
    Arrangement arr = build_arrangement(alpha_p, beta_p);
    AdmissibleResult r;
    Rational limit = 1 - eps;
    for (const auto& f : arr.faces)
        if (f.area > limit && (r.ok || f.area > r.area)) {
            r.ok = false;
            r.face = f.id;
            r.area = f.area;
        }
    return r;
}

MembershipResult projection_membership(const PolyCurve& g, ChainRef alpha_p, ChainRef beta_p) {
    PairStatus ab = pair_status(alpha_p, beta_p);
    if (ab.kind == PairStatus::NonGeneric) throw Error("NonGenericInput", ab.witness);
    MembershipResult r;
    Rational area = enclosed_area(g);
    if (area != kHalf) {
        r.ok = false;
        r.condition = "equator";
        r.witness = "area " + to_string(area);
        return r;
    }
    PairStatus s1 = pair_status(g, alpha_p);
    if (s1.kind != PairStatus::Disjoint) {
        r.ok = false;
        r.condition = "1";
        r.witness = s1.kind == PairStatus::NonGeneric ? s1.witness : "meets alpha at " + point_text(s1.points[0]);
        return r;
    }
    PairStatus s2 = pair_status(g, beta_p);
    if (s2.kind == PairStatus::NonGeneric) {
        r.ok = false;
        r.condition = "2";
        r.witness = s2.witness;
        return r;
    }
    std::vector<ChainPos> cuts;
    for (const auto& c : ab.crossings) cuts.push_back({c.seg_b, c.t_b});
    std::sort(cuts.begin(), cuts.end());
    std::map<int, int> count;
    for (const auto& c : s2.crossings) {
        int k = component_index({c.seg_b, c.t_b}, cuts, beta_p.closed);
        if (++count[k] > 2) {
            r.ok = false;
            r.condition = "3";
            int total = 0;
            for (const auto& c2 : s2.crossings)
                if (component_index({c2.seg_b, c2.t_b}, cuts, beta_p.closed) == k) ++total;
            r.witness = "component " + std::to_string(k) + " of beta minus alpha is crossed " +
                        std::to_string(total) + " times";
            return r;
        }
    }
    return r;
}

PolyCurve construct_projection_equator(ChainRef alpha_p, ChainRef beta_p, const Rational& eps) {
    AdmissibleResult adm = admissible(alpha_p, beta_p, eps);
    if (!adm.ok)
        throw Error("Inadmissible", "face " + std::to_string(adm.face) + " has area " + to_string(adm.area));
    std::vector<ChainPos> cuts = crossing_positions(beta_p, alpha_p);
    const bool beta_closed = beta_p.closed;
    WallChain wa{alpha_p.v, alpha_p.closed, {}, {}};
    WallChain wb{beta_p.v, beta_p.closed, {}, [&](const SubSegment& s, Wall& w) {
                     w.forbidden = false;
                     w.groups = {component_index(s.mid(), cuts, beta_closed)};
                 }};
    Decomposition d = decompose(make_walls({wa, wb}));

    std::function<bool(int)> allowed = [](int) { return true; };
    if (alpha_p.closed) {
        Rational inside = signed_area(alpha_p.v);
        if (inside < 0) inside = -inside;
        bool use_inside = inside > kHalf;
        if (!use_inside && !(1 - inside > kHalf))
            throw Error("ConstructionFailed", "neither side of the closed alpha has room for an equator");
        allowed = [&, use_inside](int p) {
            return (winding_number(d.pieces[p].center, alpha_p.v) != 0) == use_inside;
        };
    }
    std::string last = "no region reached area 1/2";
    auto accept = [&](const PolyCurve& g) {
        MembershipResult m = projection_membership(g, alpha_p, beta_p);
        if (!m.ok) last = "condition " + m.condition + ": " + m.witness;
        return m.ok;
    };
    if (auto c = grow_equator(d, zone_roots(d, allowed), {GrowOptions{}}, accept)) return *c;
    throw Error("ConstructionFailed", last);
}

PolyCurve balance_area(const PolyCurve& c, const Rational& target, const std::vector<Piece>& keep_clear) {
    Rational current = enclosed_area(c);
    if (target == current) return c;
    if (!(target > 0 && target < 1)) throw Error("InvalidArgument", "target area must lie in (0,1)");
    std::vector<WallChain> chains{{c.v, true, {}, {}}};
    for (const auto& k : keep_clear) chains.push_back({k.v, k.closed, {}, {}});
    Decomposition d = decompose(make_walls(chains));
    const bool outward = target > current;
    Rational delta = outward ? Rational(target - current) : Rational(current - target);

    std::vector<PairStatus> before;
    for (const auto& k : keep_clear) before.push_back(pair_status(c, k.ref()));

    std::vector<int> zone = d.zones();
    std::map<int, Rational> zone_area;
    for (std::size_t i = 0; i < d.pieces.size(); ++i) zone_area[zone[i]] += d.pieces[i].area;
    // per zone: the window on c whose deficit-side piece is largest
    std::map<int, std::pair<int, int>> best;  // zone -> (window, piece)
    for (std::size_t w = 0; w < d.windows.size(); ++w) {
        const auto& win = d.windows[w];
        if (win.wall < 0 || d.walls[win.wall].source != 0) continue;
        for (int p : {win.p, win.q}) {
            bool inside = winding_number(d.pieces[p].center, c.v) != 0;
            if (inside == outward) continue;
            auto it = best.find(zone[p]);
            if (it == best.end() || d.pieces[it->second.second].area < d.pieces[p].area)
                best[zone[p]] = {static_cast<int>(w), p};
        }
    }
    std::vector<int> zs;
    for (auto& [z, wp] : best) zs.push_back(z);
    std::stable_sort(zs.begin(), zs.end(), [&](int x, int y) { return zone_area[x] > zone_area[y]; });

    auto accept = [&](const PolyCurve& g) {
        for (std::size_t i = 0; i < keep_clear.size(); ++i) {
            PairStatus st = pair_status(g, keep_clear[i].ref());
            if (st.kind != before[i].kind || st.points != before[i].points) return false;
        }
        return true;
    };
    // Small deficits: a triangular bump on one window of c, apex inside the
    // adjacent (convex) piece, so nothing else is crossed. Area is linear in the apex.
    for (std::size_t w = 0; w < d.windows.size(); ++w) {
        const auto& win = d.windows[w];
        if (win.wall < 0 || d.walls[win.wall].source != 0) continue;
        for (int p : {win.p, win.q}) {
            if ((winding_number(d.pieces[p].center, c.v) != 0) == outward) continue;
            std::size_t seg = d.walls[win.wall].seg;
            const RatPoint& s0 = c.v[seg];
            const RatPoint& s1 = c.v[(seg + 1) % c.v.size()];
            auto along = [&](const RatPoint& x) -> Rational {
                return (x.x - s0.x) * (s1.x - s0.x) + (x.y - s0.y) * (s1.y - s0.y);
            };
            RatPoint lo = along(win.a) < along(win.b) ? win.a : win.b;
            RatPoint hi = along(win.a) < along(win.b) ? win.b : win.a;
            RatPoint m = lerp(lo, hi, Rational(1, 2));
            auto bumped = [&](const Rational& lam) {
                std::vector<RatPoint> v(c.v.begin(), c.v.begin() + seg + 1);
                v.push_back(lerp(lo, hi, Rational(1, 8)));
                v.push_back(lerp(m, d.pieces[p].center, lam));
                v.push_back(lerp(lo, hi, Rational(7, 8)));
                v.insert(v.end(), c.v.begin() + seg + 1, c.v.end());
                return v;
            };
            Rational a0 = signed_area(bumped(0)), a1 = signed_area(bumped(1));
            if (a0 < 0) {
                a0 = -a0;
                a1 = -a1;
            }
            if (a1 == a0) continue;
            Rational lam = (target - a0) / (a1 - a0);
            if (!(lam > 0 && lam <= 1)) continue;
            try {
                PolyCurve g = validate_curve(bumped(lam));
                if (enclosed_area(g) == target && accept(g)) return g;
            } catch (const Error&) {
            }
        }
    }
    for (int z : zs) {
        if (zone_area[z] * kSMax * kSMax <= delta) continue;
        auto [w, root] = best[z];
        GrowOptions opt;
        opt.stop_area = delta * 3 / 2;
        RegionTree t = grow_region(d, root, opt);
        if (region_capacity(t, kSMax) <= delta) continue;
        SpliceBase base{&c, w};
        RealizeOptions ro;
        ro.target = target;
        ro.s_max = kSMax;
        // a small deficit against a large face needs a small scale
        ro.s_min = Rational(1, 4096);
        if (auto out = realize_region(d, t, ro, accept, &base)) return *out;
    }
    throw Error("NoSlack", "no face next to the curve can absorb area " + to_string(delta));
}


// ---------------------------------------------------------------- middle curves

std::optional<PolyCurve> find_middle_equator(const PolyCurve& a, const PolyCurve& b) {
    WallChain wa{a.v, true, {}, [](const SubSegment&, Wall& w) {
                     w.forbidden = false;
                     w.groups = {0};
                 }};
    WallChain wb{b.v, true, {}, [](const SubSegment&, Wall& w) {
                     w.forbidden = false;
                     w.groups = {1};
                 }};
    Decomposition d = decompose(make_walls({wa, wb}));
    auto accept = [&](const PolyCurve& g) {
        return crossing_adjacency(g, a).adjacent() && crossing_adjacency(g, b).adjacent();
    };
    std::vector<GrowOptions> variants(4);
    variants[1].banned_groups = {0};
    variants[2].banned_groups = {1};
    variants[3].banned_groups = {0, 1};
    return grow_equator(d, zone_roots(d, [](int) { return true; }), variants, accept);
}

namespace {

// Unit-ish right normal of direction (dx, dy) with a rational length estimate.
RatPoint right_normal(const RatPoint& from, const RatPoint& to) {
    Rational dx = to.x - from.x, dy = to.y - from.y;
    double len = std::hypot(dx.get_d(), dy.get_d());
    Rational inv = dyadic_floor(1.0 / len, 40);
    return {dy * inv, -dx * inv};
}

// Closed walk around the union of the given faces, passing through the pinch
// vertices where two of them touch.
std::vector<RatPoint> union_walk(const Arrangement& arr, const std::set<int>& faces) {
    const auto& he = arr.half_edges;
    std::vector<int> prev(he.size(), -1);
    for (std::size_t h = 0; h < he.size(); ++h) prev[he[h].next] = static_cast<int>(h);
    int start = -1;
    for (std::size_t h = 0; h < he.size() && start < 0; ++h)
        if (faces.count(he[h].face) && !faces.count(he[he[h].twin].face)) start = static_cast<int>(h);
    if (start < 0) return {};
    std::vector<RatPoint> walk;
    int h = start;
    for (std::size_t guard = 0; guard <= he.size(); ++guard) {
        walk.push_back(arr.nodes[he[h].origin]);
        int swing = he[prev[he[h].twin]].twin;
        int nxt = faces.count(he[swing].face) ? swing : he[h].next;
        h = nxt;
        if (h == start) return walk;
    }
    return {};
}

std::optional<PolyCurve> offset_walk(const std::vector<RatPoint>& walk, const PolyCurve& a, const PolyCurve& b) {
    const std::size_t n = walk.size();
    std::vector<RatPoint> dirs(n);
    for (Rational delta(1, 256); delta > Rational(1, 1L << 40); delta /= 2) {
        std::vector<RatPoint> pts;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& p = walk[(i + n - 1) % n];
            const auto& v = walk[i];
            const auto& q = walk[(i + 1) % n];
            RatPoint n1 = right_normal(p, v), n2 = right_normal(v, q);
            pts.push_back({v.x + delta * (n1.x + n2.x), v.y + delta * (n1.y + n2.y)});
        }
        try {
            PolyCurve c = validate_curve(pts);
            if (crossing_count(c, a) == 2 && crossing_count(c, b) == 2) return c;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

// Nested-disk construction for I >= 4: a chain of consecutive bigons along
// alpha, starting from a smallest one, surrounded by a thin curve crossing
// each input curve twice near the chain ends, then balanced to area 1/2.
std::optional<PolyCurve> bigon_sweep(const PolyCurve& a, const PolyCurve& b, const Arrangement& arr) {
    const int I = static_cast<int>(arr.crossings.size());
    std::vector<int> bigon_of(arr.alpha_carriers, -1);
    std::set<int> bigon_ids;
    for (const auto& f : bigon_faces(arr)) bigon_ids.insert(f.id);
    for (const auto& h : arr.half_edges) {
        if (h.label != Label::Alpha) continue;
        if (bigon_ids.count(h.face)) {
            if (bigon_of[h.carrier] >= 0 && bigon_of[h.carrier] != h.face) return std::nullopt;
            bigon_of[h.carrier] = h.face;
        }
    }
    const int K = arr.alpha_carriers;
    for (int k = 0; k < K; ++k)
        if (bigon_of[k] < 0) return std::nullopt;
    int start = 0;
    for (int k = 1; k < K; ++k)
        if (arr.faces[bigon_of[k]].area < arr.faces[bigon_of[start]].area) start = k;
    int jmax = 0;
    Rational sum = 0;
    for (int j = 0; j < std::min(K, I - 1); ++j) {
        sum += arr.faces[bigon_of[(start + j) % K]].area;
        if (sum > kHalf && j > 0) break;
        jmax = j + 1;
    }
    std::vector<Piece> keep{{a.v, true}, {b.v, true}};
    for (int j = jmax; j >= 1; --j) {
        std::set<int> chosen;
        for (int i = 0; i < j; ++i) chosen.insert(bigon_of[(start + i) % K]);
        if (static_cast<int>(chosen.size()) != j) continue;
        auto walk = union_walk(arr, chosen);
        if (walk.size() < 3) continue;
        auto g0 = offset_walk(walk, a, b);
        if (!g0) continue;
        try {
            PolyCurve g = balance_area(*g0, kHalf, keep);
            if (crossing_adjacency(g, a).adjacent() && crossing_adjacency(g, b).adjacent()) return g;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

Certificate base_cert(const PolyCurve& a, const PolyCurve& b, const Rational& eps) {
    Certificate c;
    c.kind = Certificate::Upper;
    c.eps = eps;
    c.a = a;
    c.b = b;
    return c;
}

CertStep edge_step(const std::string& from, const std::string& to, const std::string& claim) {
    CertStep s;
    s.tag = tags::Edge;
    s.weight = 1;
    s.from = from;
    s.to = to;
    s.claim = claim;
    return s;
}

void require_balanced(const PolyCurve& a, const PolyCurve& b, const Rational& eps) {
    if (!is_balanced(a, eps)) throw Error("NotBalancedInput", "first curve has area " + to_string(enclosed_area(a)));
    if (!is_balanced(b, eps)) throw Error("NotBalancedInput", "second curve has area " + to_string(enclosed_area(b)));
}

}  // namespace

MiddleResult two_nonbigon_certificate(const PolyCurve& a, const PolyCurve& b, const Rational& eps) {
    require_balanced(a, b, eps);
    PairStatus st = pair_status(a, b);
    if (st.kind == PairStatus::NonGeneric) throw Error("NonGenericInput", st.witness);
    Arrangement arr = build_arrangement(a, b);
    int nb = non_bigon_count(arr);
    if (nb > 2) throw Error("TooManyNonBigons", std::to_string(nb) + " faces are not bigons");
    std::optional<PolyCurve> mid;
    if (arr.crossings.size() >= 4) mid = bigon_sweep(a, b, arr);
    if (!mid) mid = find_middle_equator(a, b);
    if (!mid) throw Error("ConstructionFailed", "no equator adjacent to both curves was found");
    MiddleResult r{*mid, base_cert(a, b, eps)};
    r.cert.value = 2;
    r.cert.vertices["eta0"] = *mid;
    r.cert.steps.push_back(edge_step("a", "eta0", "equator adjacent to the first curve"));
    r.cert.steps.push_back(edge_step("eta0", "b", "equator adjacent to the second curve"));
    return r;
}

// ---------------------------------------------------------------- arcs along chains

PolyArc chain_subarc(ChainRef c, const ChainPos& from, const ChainPos& to) {
    const std::size_t n = c.v.size();
    std::vector<RatPoint> pts;
    pts.push_back(lerp(c.seg_start(from.seg), c.seg_end(from.seg), from.t));
    if (from.seg == to.seg && from.t < to.t) {
        pts.push_back(lerp(c.seg_start(to.seg), c.seg_end(to.seg), to.t));
    } else {
        std::size_t s = from.seg;
        for (std::size_t guard = 0; guard <= n; ++guard) {
            s = c.closed ? (s + 1) % n : s + 1;
            if (s >= n) throw Error("InvalidLocator", "positions out of order on an open chain");
            pts.push_back(c.v[s]);
            if (s == to.seg) break;
        }
        if (to.t > 0) pts.push_back(lerp(c.seg_start(to.seg), c.seg_end(to.seg), to.t));
    }
    PolyArc arc = make_arc(pts);
    if (c.closed) arc.host = HostInfo{0, {from.seg, from.t}, {to.seg, to.t}};
    return arc;
}

ChainPos push_forward(ChainRef, const ChainPos& x, const std::vector<ChainPos>& features) {
    Rational f = 1;
    for (const auto& p : features)
        if (p.seg == x.seg && p.t > x.t && p.t < f) f = p.t;
    return {x.seg, (x.t + f) / 2};
}

ChainPos push_backward(ChainRef, const ChainPos& x, const std::vector<ChainPos>& features) {
    Rational f = 0;
    for (const auto& p : features)
        if (p.seg == x.seg && p.t < x.t && p.t > f) f = p.t;
    return {x.seg, (x.t + f) / 2};
}

// ---------------------------------------------------------------- shrinking

ShrinkChain shrink_chain_full(const PolyCurve& a, const PolyCurve& b, const Rational& eps) {
    check_epsilon(eps);
    std::vector<ChainPos> X = crossing_positions(a, b);
    const int I = static_cast<int>(X.size());
    if (I == 0) throw Error("InvalidArgument", "the curves are disjoint");
    ChainRef ca(a);

    ShrinkChain out;
    auto record = [&](const PolyArc& arc) {
        out.arcs.push_back(arc);
        out.crossings.push_back(crossing_count(arc, b));
        out.admissible.push_back(admissible(arc, b, eps).ok);
        if (!out.admissible.back() && out.lost_at < 0) out.lost_at = static_cast<int>(out.arcs.size()) - 1;
    };

    // alpha_0: every crossing, the gap chosen to keep admissibility if possible
    int gap = 0;
    PolyArc first;
    for (int g = 0; g < I; ++g) {
        ChainPos from = push_backward(ca, X[g], X);
        ChainPos to = push_forward(ca, X[(g + I - 1) % I], X);
        PolyArc arc = chain_subarc(ca, from, to);
        if (g == 0) first = arc;
        if (admissible(arc, b, eps).ok) {
            gap = g;
            first = arc;
            break;
        }
    }
    record(first);

    int lo = gap, count = I;
    ChainPos from = push_backward(ca, X[gap], X);
    ChainPos to = push_forward(ca, X[(gap + I - 1) % I], X);
    while (count > 0) {
        int hi = (lo + count - 1) % I;
        if (count == 1) {
            // the crossing-free tail of the current arc beyond its last crossing
            ChainPos f2 = push_forward(ca, X[lo], X);
            if (to.seg == X[lo].seg && X[lo].t < to.t) f2 = {to.seg, (X[lo].t + to.t) / 2};
            record(chain_subarc(ca, f2, to));
            break;
        }
        ChainPos fa = push_forward(ca, X[lo], X);
        PolyArc drop_first = chain_subarc(ca, fa, to);
        ChainPos tb = push_backward(ca, X[hi], X);
        PolyArc drop_last = chain_subarc(ca, from, tb);
        bool first_ok = admissible(drop_first, b, eps).ok;
        bool last_ok = !first_ok && admissible(drop_last, b, eps).ok;
        if (last_ok) {
            to = tb;
            record(drop_last);
        } else {
            from = fa;
            lo = (lo + 1) % I;
            record(drop_first);
        }
        --count;
    }
    return out;
}

std::vector<PolyArc> shrink_chain(const PolyCurve& a, const PolyCurve& b, const Rational& eps) {
    ShrinkChain ch = shrink_chain_full(a, b, eps);
    if (ch.lost_at >= 0) throw Error("AdmissibilityLost", std::to_string(ch.lost_at));
    return ch.arcs;
}

// ---------------------------------------------------------------- projection members

namespace {

const int kGapGroup = 1 << 20;

// Equator in pi_{alpha}(b) that crosses the rest of a at most twice.
std::optional<PolyCurve> largest_subarc_member(const PolyCurve& a, const PolyArc& alpha, const PolyCurve& b) {
    std::vector<ChainPos> bcuts = crossing_positions(b, alpha);
    std::vector<ChainPos> inner;
    // alpha runs from host.from to host.to along a
    const auto& h = *alpha.host;
    ChainPos s{h.from.edge, h.from.t}, e{h.to.edge, h.to.t};
    auto inside_alpha = [&](const ChainPos& p) {
        if (s < e) return s < p && p < e;
        return s < p || p < e;
    };
    WallChain wa{a.v, true, {s, e}, [&](const SubSegment& sub, Wall& w) {
                     if (inside_alpha(sub.mid())) return;
                     w.forbidden = false;
                     w.groups = {kGapGroup};
                 }};
    WallChain wb{b.v, true, {}, [&](const SubSegment& sub, Wall& w) {
                     w.forbidden = false;
                     w.groups = {component_index(sub.mid(), bcuts, true)};
                 }};
    Decomposition d = decompose(make_walls({wa, wb}));
    auto accept = [&](const PolyCurve& g) {
        return projection_membership(g, alpha, b).ok && crossing_adjacency(g, a).adjacent();
    };
    return grow_equator(d, zone_roots(d, [](int) { return true; }), {GrowOptions{}}, accept);
}

// Equator in both pi_{outer}(b) and pi_{inner}(b), inner a shrink of outer.
std::optional<PolyCurve> joint_member(const PolyArc& outer, const PolyArc& inner, const PolyCurve& b) {
    std::vector<ChainPos> c1 = crossing_positions(b, outer);
    std::vector<ChainPos> c2 = crossing_positions(b, inner);
    WallChain wa{outer.v, false, {}, {}};
    WallChain wb{b.v, true, {}, [&](const SubSegment& sub, Wall& w) {
                     w.forbidden = false;
                     w.groups = {component_index(sub.mid(), c1, true), 1000 + component_index(sub.mid(), c2, true)};
                 }};
    Decomposition d = decompose(make_walls({wa, wb}));
    auto accept = [&](const PolyCurve& g) {
        return projection_membership(g, outer, b).ok && projection_membership(g, inner, b).ok;
    };
    return grow_equator(d, zone_roots(d, [](int) { return true; }), {GrowOptions{}}, accept);
}

}  // namespace

Certificate chain_certificate(const PolyCurve& a, const PolyCurve& b, const Rational& eps) {
    require_balanced(a, b, eps);
    ShrinkChain ch = shrink_chain_full(a, b, eps);
    Certificate cert = base_cert(a, b, eps);
    const auto& arcs = ch.arcs;

    if (!ch.admissible[0]) {
        // a face of alpha_0 and b is too big; an equator inside it is adjacent to both
        auto mid = find_middle_equator(a, b);
        if (!mid) throw Error("ConstructionFailed", "largest subarc is inadmissible and no middle equator was found");
        cert.vertices["eta0"] = *mid;
        cert.steps.push_back(edge_step("a", "eta0", "equator inside the oversized face"));
        cert.steps.push_back(edge_step("eta0", "b", "equator inside the oversized face"));
        cert.value = 2;
        return cert;
    }

    auto name = [](std::size_t i) { return "eta" + std::to_string(i); };
    std::optional<PolyCurve> eta0 = largest_subarc_member(a, arcs[0], b);
    if (eta0) {
        cert.vertices[name(0)] = *eta0;
        cert.steps.push_back(edge_step("a", name(0), "member of the largest subarc projection adjacent to a"));
    } else {
        PolyCurve e = construct_projection_equator(arcs[0], b, eps);
        cert.vertices[name(0)] = e;
        CertStep s;
        s.tag = "largest-subarc";
        s.weight = 9;
        s.from = "a";
        s.to = name(0);
        s.claim = "some member of the largest subarc projection is adjacent to a; the set has diameter at most 8";
        s.data["alpha"] = Piece{arcs[0].v, false};
        cert.steps.push_back(s);
    }

    std::size_t last = 0;
    const std::size_t stop = ch.lost_at >= 0 ? static_cast<std::size_t>(ch.lost_at) : arcs.size();
    for (std::size_t i = 0; i + 1 < stop; ++i) {
        const PolyCurve& prev = cert.vertices[name(i)];
        CertStep s;
        s.from = name(i);
        s.to = name(i + 1);
        if (auto e = joint_member(arcs[i], arcs[i + 1], b)) {
            cert.vertices[name(i + 1)] = *e;
            if (crossing_adjacency(prev, *e).adjacent()) {
                s = edge_step(name(i), name(i + 1), "consecutive members are adjacent");
            } else {
                s.tag = tags::Hop;
                s.weight = 8;
                s.claim = "both lie in one admissible projection set";
                s.data["alpha"] = Piece{arcs[i].v, false};
            }
        } else {
            cert.vertices[name(i + 1)] = construct_projection_equator(arcs[i + 1], b, eps);
            s.tag = "shrink-intersection";
            s.weight = 16;
            s.claim = "projection sets of an arc and its one-crossing shrink intersect";
            s.data["alpha"] = Piece{arcs[i].v, false};
            s.data["alpha_next"] = Piece{arcs[i + 1].v, false};
        }
        cert.steps.push_back(s);
        last = i + 1;
    }

    const PolyCurve& end = cert.vertices[name(last)];
    if (crossing_adjacency(end, b).adjacent()) {
        cert.steps.push_back(edge_step(name(last), "b", "final member is adjacent to b"));
    } else {
        // admissibility lost right after arc `last`
        CertStep hop;
        hop.tag = tags::Hop;
        hop.weight = 8;
        hop.from = name(last);
        hop.to = "zeta";
        hop.claim = "the asserted vertex lies in the same projection set";
        hop.data["alpha"] = Piece{arcs[last].v, false};
        cert.steps.push_back(hop);
        CertStep fb;
        fb.tag = tags::Fallback;
        fb.weight = 3;
        fb.from = "zeta";
        fb.to = "b";
        fb.claim = "shrinking further breaks admissibility, so some member is within 3 of b";
        fb.data["alpha"] = Piece{arcs[last].v, false};
        fb.data["alpha_next"] = Piece{arcs[last + 1].v, false};
        cert.steps.push_back(fb);
    }
    long total = 0;
    for (const auto& s : cert.steps) total += s.weight;
    cert.value = total;
    return cert;
}

Certificate upper_bound_distance(const PolyCurve& a, const PolyCurve& b, const Rational& eps) {
    require_balanced(a, b, eps);
    Certificate cert = base_cert(a, b, eps);
    if (a.v == b.v) {
        cert.value = 0;
        return cert;
    }
    AdjacencyResult adj = crossing_adjacency(a, b);
    if (adj.kind == AdjacencyResult::NonGeneric) throw Error("NonGenericInput", adj.reason);
    if (adj.adjacent()) {
        cert.value = 1;
        return cert;
    }
    Arrangement arr = build_arrangement(a, b);
    if (non_bigon_count(arr) <= 2) {
        try {
            return two_nonbigon_certificate(a, b, eps).cert;
        } catch (const Error& e) {
            if (e.name() != "ConstructionFailed") throw;
        }
    } else if (auto mid = find_middle_equator(a, b)) {
        cert.value = 2;
        cert.vertices["eta0"] = *mid;
        cert.steps.push_back(edge_step("a", "eta0", "equator adjacent to the first curve"));
        cert.steps.push_back(edge_step("eta0", "b", "equator adjacent to the second curve"));
        return cert;
    }
    return chain_certificate(a, b, eps);
}

// ---------------------------------------------------------------- minimal pairs

namespace {

struct ArcWindow {
    ChainPos from, to;
    int lo = 0, hi = -1;  // crossing indices inside
};

// Tries to drop one terminal crossing; returns the admissible shrink if any.
bool shrink_once(ChainRef host, const std::vector<ChainPos>& X, ArcWindow& w,
                 const std::function<bool(const PolyArc&)>& ok) {
    if (w.hi - w.lo < 1) return false;
    ChainPos f = push_forward(host, X[w.lo], X);
    if (ok(chain_subarc(host, f, w.to))) {
        w.from = f;
        ++w.lo;
        return true;
    }
    ChainPos t = push_backward(host, X[w.hi], X);
    if (ok(chain_subarc(host, w.from, t))) {
        w.to = t;
        --w.hi;
        return true;
    }
    return false;
}

ArcWindow whole(const PolyArc& arc, const std::vector<ChainPos>& X) {
    ArcWindow w;
    w.from = {0, 0};
    w.to = {arc.v.size() - 2, 1};
    w.lo = 0;
    w.hi = static_cast<int>(X.size()) - 1;
    return w;
}

}  // namespace

bool is_minimal_pair(const PolyArc& alpha, const PolyArc& beta, const Rational& eps) {
    for (int side = 0; side < 2; ++side) {
        const PolyArc& mine = side == 0 ? alpha : beta;
        const PolyArc& other = side == 0 ? beta : alpha;
        std::vector<ChainPos> X = crossing_positions(mine, other);
        if (X.size() < 2) continue;
        ArcWindow w = whole(mine, X);
        ChainPos f = push_forward(mine, X.front(), X);
        ChainPos t = push_backward(mine, X.back(), X);
        for (const PolyArc& s : {chain_subarc(mine, f, w.to), chain_subarc(mine, w.from, t)}) {
            bool adm = side == 0 ? admissible(s, other, eps).ok : admissible(other, s, eps).ok;
            if (adm) return false;
        }
    }
    return true;
}

MinimalPair minimal_pair(const PolyArc& alpha_p, const PolyArc& beta_p, const Rational& eps) {
    AdmissibleResult adm = admissible(alpha_p, beta_p, eps);
    if (!adm.ok)
        throw Error("Inadmissible", "face " + std::to_string(adm.face) + " has area " + to_string(adm.area));
    PolyArc alpha = alpha_p, beta = beta_p;
    bool changed = true;
    while (changed) {
        changed = false;
        {
            std::vector<ChainPos> X = crossing_positions(beta, alpha);
            ArcWindow w = whole(beta, X);
            bool any = false;
            while (shrink_once(beta, X, w, [&](const PolyArc& s) { return admissible(alpha, s, eps).ok; }))
                any = true;
            if (any) {
                beta = chain_subarc(beta, w.from, w.to);
                changed = true;
            }
        }
        {
            std::vector<ChainPos> X = crossing_positions(alpha, beta);
            ArcWindow w = whole(alpha, X);
            bool any = false;
            while (shrink_once(alpha, X, w, [&](const PolyArc& s) { return admissible(s, beta, eps).ok; }))
                any = true;
            if (any) {
                alpha = chain_subarc(alpha, w.from, w.to);
                changed = true;
            }
        }
    }

    // eta in pi_{alpha'}(beta') and pi_{alpha''}(beta''); walls of beta' split at beta'' ends
    std::vector<ChainPos> ends;
    for (const RatPoint& p : {beta.v.front(), beta.v.back()})
        for (std::size_t s = 0; s + 1 < beta_p.v.size(); ++s)
            if (on_segment(p, beta_p.v[s], beta_p.v[s + 1])) {
                const auto& u = beta_p.v[s];
                const auto& v = beta_p.v[s + 1];
                Rational t = v.x != u.x ? Rational((p.x - u.x) / (v.x - u.x)) : Rational((p.y - u.y) / (v.y - u.y));
                if (t < 1) {
                    ends.push_back({s, t});
                    break;
                }
            }
    if (ends.size() != 2) throw Error("ConstructionFailed", "shrunk arc lost track of its host");
    std::vector<ChainPos> c1 = crossing_positions(beta_p, alpha_p);
    std::vector<ChainPos> c2 = crossing_positions(beta_p, alpha);
    ChainPos lo = std::min(ends[0], ends[1]), hi = std::max(ends[0], ends[1]);
    WallChain wa{alpha_p.v, false, {}, {}};
    WallChain wb{beta_p.v, false, ends, [&](const SubSegment& sub, Wall& w) {
                     w.forbidden = false;
                     ChainPos m = sub.mid();
                     w.groups = {component_index(m, c1, false)};
                     if (lo < m && m < hi) w.groups.push_back(1000 + component_index(m, c2, false));
                 }};
    Decomposition d = decompose(make_walls({wa, wb}));
    auto accept = [&](const PolyCurve& g) {
        return projection_membership(g, alpha_p, beta_p).ok && projection_membership(g, alpha, beta).ok;
    };
    auto eta = grow_equator(d, zone_roots(d, [](int) { return true; }), {GrowOptions{}}, accept);
    if (!eta) throw Error("ConstructionFailed", "no equator lies in both projection sets");
    return {alpha, beta, *eta};
}

// ---------------------------------------------------------------- verification

VerifyReport verify_certificate_report(const Certificate& cert, const PolyCurve& a, const PolyCurve& b,
                                       const Rational& eps) {
    auto fail = [](std::string why) { return VerifyReport{false, std::move(why)}; };
    try {
        if (cert.a.v != a.v || cert.b.v != b.v) return fail("certificate is about different curves");
        if (cert.eps != eps) return fail("certificate epsilon differs");
        check_epsilon(eps);
        if (cert.kind == Certificate::Lower) return verify_lower_certificate(cert, a, b, eps);
        if (!is_balanced(a, eps) || !is_balanced(b, eps)) return fail("input curve is not balanced");

        std::map<std::string, PolyCurve> verts = cert.vertices;
        for (const auto& [k, v] : verts) {
            if (k == "a" || k == "b" || k == "zeta") return fail("reserved vertex name " + k);
            PolyCurve re = validate_curve(v.v);
            if (re.v != v.v) return fail("vertex " + k + " is not a normalized curve");
            auto claim = cert.facts.find("vertex:" + k);
            bool balanced_only = claim != cert.facts.end() && claim->second == "balanced";
            if (balanced_only ? !is_balanced(v, eps) : !is_equator(v))
                return fail("vertex " + k + (balanced_only ? " is not balanced" : " is not an equator"));
        }
        verts["a"] = a;
        verts["b"] = b;

        if (cert.steps.empty()) {
            if (cert.value == 0) return a.v == b.v ? VerifyReport{} : fail("value 0 for distinct curves");
            if (cert.value == 1)
                return crossing_adjacency(a, b).adjacent() ? VerifyReport{} : fail("curves are not adjacent");
            return fail("empty chain with value " + std::to_string(cert.value));
        }
        if (cert.steps.front().from != "a") return fail("chain does not start at a");
        if (cert.steps.back().to != "b") return fail("chain does not end at b");
        long total = 0;
        for (std::size_t i = 0; i < cert.steps.size(); ++i) {
            const auto& s = cert.steps[i];
            total += s.weight;
            if (i + 1 < cert.steps.size() && s.to != cert.steps[i + 1].from)
                return fail("chain breaks after step " + std::to_string(i));
            auto concrete = [&](const std::string& n) { return verts.count(n) > 0; };
            auto arc = [&](const char* key) -> std::optional<PolyArc> {
                auto it = s.data.find(key);
                if (it == s.data.end() || it->second.closed) return std::nullopt;
                return make_arc(it->second.v);
            };
            const std::string where = "step " + std::to_string(i) + " (" + s.tag + ")";
            if (s.tag == tags::Edge) {
                if (s.weight != 1) return fail(where + ": edge weight must be 1");
                if (!concrete(s.from) || !concrete(s.to)) return fail(where + ": unknown vertex");
                if (!crossing_adjacency(verts[s.from], verts[s.to]).adjacent()) return fail(where + ": not adjacent");
            } else if (s.tag == "largest-subarc") {
                auto al = arc("alpha");
                if (s.weight != 9 || s.from != "a" || !al || !concrete(s.to)) return fail(where + ": malformed");
                if (!is_subarc_of(*al, a)) return fail(where + ": alpha is not a subarc of a");
                if (crossing_count(*al, b) != crossing_count(a, b)) return fail(where + ": alpha misses crossings");
                if (!admissible(*al, b, eps).ok) return fail(where + ": inadmissible");
                if (!projection_membership(verts[s.to], *al, b).ok) return fail(where + ": not a member");
            } else if (s.tag == tags::Hop) {
                auto al = arc("alpha");
                if (s.weight != 8 || !al || !concrete(s.from)) return fail(where + ": malformed");
                if (!is_subarc_of(*al, a)) return fail(where + ": alpha is not a subarc of a");
                if (!admissible(*al, b, eps).ok) return fail(where + ": inadmissible");
                if (!projection_membership(verts[s.from], *al, b).ok) return fail(where + ": source not a member");
                if (s.to == "zeta") {
                    if (i + 1 >= cert.steps.size() || cert.steps[i + 1].tag != tags::Fallback)
                        return fail(where + ": asserted vertex without its fallback");
                } else {
                    if (!concrete(s.to)) return fail(where + ": unknown vertex");
                    if (!projection_membership(verts[s.to], *al, b).ok) return fail(where + ": target not a member");
                }
            } else if (s.tag == tags::Fallback) {
                auto al = arc("alpha");
                auto an = arc("alpha_next");
                if (s.weight != 3 || s.from != "zeta" || s.to != "b" || !al || !an || i == 0)
                    return fail(where + ": malformed");
                const auto& prev = cert.steps[i - 1];
                auto pa = prev.data.find("alpha");
                if (prev.tag != tags::Hop || pa == prev.data.end() || pa->second.v != al->v)
                    return fail(where + ": not preceded by a hop in the same projection set");
                if (!admissible(*al, b, eps).ok) return fail(where + ": alpha inadmissible");
                if (!is_one_crossing_shrink(*an, *al, a, b)) return fail(where + ": not a one-crossing shrink");
                if (admissible(*an, b, eps).ok) return fail(where + ": shrink is still admissible");
            } else if (s.tag == "shrink-intersection") {
                auto al = arc("alpha");
                auto an = arc("alpha_next");
                if (s.weight != 16 || !al || !an || !concrete(s.from) || !concrete(s.to))
                    return fail(where + ": malformed");
                if (!admissible(*al, b, eps).ok || !admissible(*an, b, eps).ok) return fail(where + ": inadmissible");
                if (!is_one_crossing_shrink(*an, *al, a, b)) return fail(where + ": not a one-crossing shrink");
                if (!projection_membership(verts[s.from], *al, b).ok) return fail(where + ": source not a member");
                if (!projection_membership(verts[s.to], *an, b).ok) return fail(where + ": target not a member");
            } else {
                return fail(where + ": unknown step tag");
            }
        }
        if (total != cert.value) return fail("weights sum to " + std::to_string(total) + ", not the stated value");
        return {};
    } catch (const Error& e) {
        return fail(e.what());
    }
}

bool verify_certificate(const Certificate& cert, const PolyCurve& a, const PolyCurve& b, const Rational& eps) {
    return verify_certificate_report(cert, a, b, eps).ok;
}

}  // namespace bc
