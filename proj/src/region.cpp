#include "balcurve/region.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace bc {

// ---------------------------------------------------------------- walls

std::vector<ChainPos> crossing_positions(ChainRef chain, ChainRef other) {
    PairStatus st = pair_status(chain, other);
    if (st.kind == PairStatus::NonGeneric) throw Error("NonGenericInput", st.witness);
    std::vector<ChainPos> out;
    for (const auto& c : st.crossings) out.push_back({c.seg_a, c.t_a});
    std::sort(out.begin(), out.end());
    return out;
}

int component_index(const ChainPos& p, const std::vector<ChainPos>& cuts, bool closed) {
    int k = static_cast<int>(std::lower_bound(cuts.begin(), cuts.end(), p) - cuts.begin());
    if (closed && !cuts.empty()) k %= static_cast<int>(cuts.size());
    return k;
}

std::vector<Wall> make_walls(const std::vector<WallChain>& chains) {
    const std::size_t n = chains.size();
    std::vector<std::vector<ChainPos>> cuts(n);
    for (std::size_t i = 0; i < n; ++i) cuts[i] = chains[i].extra_cuts;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            PairStatus st = pair_status(ChainRef(chains[i].pts, chains[i].closed),
                                        ChainRef(chains[j].pts, chains[j].closed));
            if (st.kind == PairStatus::NonGeneric) throw Error("NonGenericInput", st.witness);
            for (const auto& c : st.crossings) {
                cuts[i].push_back({c.seg_a, c.t_a});
                cuts[j].push_back({c.seg_b, c.t_b});
            }
        }
    std::vector<Wall> walls;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ch = chains[i];
        ChainRef ref(ch.pts, ch.closed);
        std::vector<std::vector<Rational>> params(ref.segments());
        for (const auto& c : cuts[i]) params[c.seg].push_back(c.t);
        for (std::size_t s = 0; s < ref.segments(); ++s) {
            auto& ts = params[s];
            ts.push_back(0);
            ts.push_back(1);
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
            for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
                SubSegment sub{lerp(ref.seg_start(s), ref.seg_end(s), ts[k]),
                               lerp(ref.seg_start(s), ref.seg_end(s), ts[k + 1]), s, ts[k], ts[k + 1]};
                Wall w;
                w.a = sub.a;
                w.b = sub.b;
                w.source = static_cast<int>(i);
                w.seg = s;
                if (ch.label) ch.label(sub, w);
                walls.push_back(std::move(w));
            }
        }
    }
    return walls;
}

// ---------------------------------------------------------------- decomposition

namespace {

Rational y_on(const Wall& w, const Rational& x) {
    return w.a.y + (x - w.a.x) * (w.b.y - w.a.y) / (w.b.x - w.a.x);
}

Rational bound_y(const std::vector<Wall>& walls, int id, const Rational& x) {
    if (id == -1) return 0;
    if (id == -2) return 1;
    return y_on(walls[id], x);
}

RatPoint vertex_average(const std::vector<RatPoint>& poly) {
    RatPoint c{0, 0};
    for (const auto& p : poly) {
        c.x += p.x;
        c.y += p.y;
    }
    c.x /= static_cast<long>(poly.size());
    c.y /= static_cast<long>(poly.size());
    return c;
}

}  // namespace

int Decomposition::locate(const RatPoint& p) const {
    auto it = std::upper_bound(xs.begin(), xs.end(), p.x);
    if (it == xs.begin() || it == xs.end()) return -1;
    std::size_t slab = (it - xs.begin()) - 1;
    if (xs[slab] == p.x) return -1;
    for (int id : slab_pieces[slab]) {
        const auto& pc = pieces[id];
        if (bound_y(walls, pc.lower, p.x) < p.y && p.y < bound_y(walls, pc.upper, p.x)) return id;
    }
    return -1;
}

std::vector<int> Decomposition::zones() const {
    std::vector<int> parent(pieces.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& w : windows)
        if (w.wall < 0) parent[find(w.p)] = find(w.q);
    std::vector<int> zone(pieces.size());
    std::map<int, int> ids;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        zone[i] = ids.emplace(find(static_cast<int>(i)), static_cast<int>(ids.size())).first->second;
    return zone;
}

Decomposition decompose(const std::vector<Wall>& walls) {
    Decomposition d;
    d.walls = walls;
    d.xs = {Rational(0), Rational(1)};
    for (const auto& w : walls) {
        d.xs.push_back(w.a.x);
        d.xs.push_back(w.b.x);
    }
    std::sort(d.xs.begin(), d.xs.end());
    d.xs.erase(std::unique(d.xs.begin(), d.xs.end()), d.xs.end());
    const std::size_t S = d.xs.size() - 1;
    auto xi = [&](const Rational& x) {
        return static_cast<std::size_t>(std::lower_bound(d.xs.begin(), d.xs.end(), x) - d.xs.begin());
    };

    std::vector<std::vector<int>> slab_walls(S);
    std::vector<std::vector<int>> vertical(S + 1);
    for (std::size_t i = 0; i < walls.size(); ++i) {
        const auto& w = walls[i];
        std::size_t ia = xi(w.a.x), ib = xi(w.b.x);
        if (ia == ib) {
            vertical[ia].push_back(static_cast<int>(i));
            continue;
        }
        for (std::size_t s = std::min(ia, ib); s < std::max(ia, ib); ++s) slab_walls[s].push_back(static_cast<int>(i));
    }

    auto add_window = [&](Decomposition::Window win) {
        int id = static_cast<int>(d.windows.size());
        if (win.wall >= 0) {
            win.forbidden = walls[win.wall].forbidden;
            win.groups = walls[win.wall].groups;
        }
        d.pieces[win.p].windows.push_back(id);
        d.pieces[win.q].windows.push_back(id);
        d.windows.push_back(std::move(win));
    };

    d.slab_pieces.resize(S);
    for (std::size_t s = 0; s < S; ++s) {
        const Rational &x0 = d.xs[s], &x1 = d.xs[s + 1];
        Rational xm = (x0 + x1) / 2;
        auto& list = slab_walls[s];
        std::vector<std::pair<Rational, int>> keyed;
        keyed.reserve(list.size());
        for (int w : list) keyed.push_back({y_on(walls[w], xm), w});
        std::sort(keyed.begin(), keyed.end(), [](auto& a, auto& b) { return a.first < b.first; });
        std::vector<int> bounds{-1};
        for (auto& k : keyed) bounds.push_back(k.second);
        bounds.push_back(-2);
        for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
            Decomposition::Piece pc;
            pc.slab = static_cast<int>(s);
            pc.lower = bounds[k];
            pc.upper = bounds[k + 1];
            RatPoint bl{x0, bound_y(walls, pc.lower, x0)}, br{x1, bound_y(walls, pc.lower, x1)};
            RatPoint tr{x1, bound_y(walls, pc.upper, x1)}, tl{x0, bound_y(walls, pc.upper, x0)};
            pc.poly.push_back(bl);
            pc.poly.push_back(br);
            if (tr != br) pc.poly.push_back(tr);
            if (tl != bl) pc.poly.push_back(tl);
            pc.area = signed_area(pc.poly);
            pc.center = vertex_average(pc.poly);
            d.slab_pieces[s].push_back(static_cast<int>(d.pieces.size()));
            d.pieces.push_back(std::move(pc));
        }
        const auto& sp = d.slab_pieces[s];
        for (std::size_t k = 0; k + 1 < sp.size(); ++k) {
            int w = d.pieces[sp[k]].upper;
            Decomposition::Window win;
            win.p = sp[k];
            win.q = sp[k + 1];
            win.a = {x0, y_on(walls[w], x0)};
            win.b = {x1, y_on(walls[w], x1)};
            win.wall = w;
            add_window(std::move(win));
        }
    }

    // windows across interior slab lines
    for (std::size_t line = 1; line < S; ++line) {
        const Rational& x = d.xs[line];
        std::vector<std::pair<Rational, Rational>> vint;
        std::vector<int> vid;
        for (int w : vertical[line]) {
            const auto& wl = walls[w];
            vint.push_back({std::min(wl.a.y, wl.b.y), std::max(wl.a.y, wl.b.y)});
            vid.push_back(w);
        }
        const auto& L = d.slab_pieces[line - 1];
        const auto& R = d.slab_pieces[line];
        std::size_t a = 0, b = 0;
        while (a < L.size() && b < R.size()) {
            const auto& pl = d.pieces[L[a]];
            const auto& pr = d.pieces[R[b]];
            Rational llo = bound_y(walls, pl.lower, x), lhi = bound_y(walls, pl.upper, x);
            Rational rlo = bound_y(walls, pr.lower, x), rhi = bound_y(walls, pr.upper, x);
            Rational lo = std::max(llo, rlo), hi = std::min(lhi, rhi);
            if (lo < hi) {
                std::vector<Rational> br{lo, hi};
                for (auto& [y0, y1] : vint) {
                    if (lo < y0 && y0 < hi) br.push_back(y0);
                    if (lo < y1 && y1 < hi) br.push_back(y1);
                }
                std::sort(br.begin(), br.end());
                br.erase(std::unique(br.begin(), br.end()), br.end());
                for (std::size_t k = 0; k + 1 < br.size(); ++k) {
                    Rational mid = (br[k] + br[k + 1]) / 2;
                    Decomposition::Window win;
                    win.p = L[a];
                    win.q = R[b];
                    win.a = {x, br[k]};
                    win.b = {x, br[k + 1]};
                    for (std::size_t v = 0; v < vint.size(); ++v)
                        if (vint[v].first < mid && mid < vint[v].second) win.wall = vid[v];
                    add_window(std::move(win));
                }
            }
            if (lhi < rhi)
                ++a;
            else if (rhi < lhi)
                ++b;
            else {
                ++a;
                ++b;
            }
        }
    }
    return d;
}

// ---------------------------------------------------------------- growing

RegionTree grow_region(const Decomposition& d, int root, const GrowOptions& opt) {
    RegionTree t;
    t.root = root;
    t.via.assign(d.pieces.size(), -2);
    std::map<int, int> remaining = opt.budgets;
    std::set<int> banned(opt.banned_groups.begin(), opt.banned_groups.end());
    auto budget = [&](int g) -> int& {
        auto it = remaining.find(g);
        if (it == remaining.end()) it = remaining.emplace(g, 1).first;
        return it->second;
    };
    std::deque<std::pair<int, int>> dq;
    dq.push_back({root, -1});
    while (!dq.empty()) {
        auto [piece, w] = dq.front();
        dq.pop_front();
        if (t.via[piece] != -2) continue;
        if (w >= 0 && d.windows[w].wall >= 0) {
            bool ok = true;
            for (int g : d.windows[w].groups)
                if (budget(g) <= 0) ok = false;
            if (!ok) continue;
            for (int g : d.windows[w].groups) --budget(g);
        }
        t.via[piece] = w;
        t.order.push_back(piece);
        t.area += d.pieces[piece].area;
        if (opt.stop_area > 0 && t.area >= opt.stop_area) break;
        for (int ww : d.pieces[piece].windows) {
            const auto& win = d.windows[ww];
            if (win.forbidden) continue;
            int q = d.other(ww, piece);
            if (t.via[q] != -2) continue;
            bool skip = false;
            for (int g : win.groups)
                if (banned.count(g)) skip = true;
            if (skip) continue;
            if (win.wall < 0 || win.groups.empty())
                dq.push_front({q, ww});
            else
                dq.push_back({q, ww});
        }
    }
    return t;
}

Rational region_capacity(const RegionTree& tree, const Rational& s_max) { return tree.area * s_max * s_max; }

// ---------------------------------------------------------------- realization

namespace {

// Point c + s*d, optionally plus mu*f for the finger.
struct Item {
    Rational cx, cy, dx = 0, dy = 0, fx = 0, fy = 0;
};

Item constant(const RatPoint& p) { return {p.x, p.y}; }
Item scaled(const RatPoint& c, const RatPoint& p) { return {c.x, c.y, p.x - c.x, p.y - c.y}; }

RatPoint eval(const Item& it, const Rational& s, const Rational& mu) {
    return {it.cx + s * it.dx + mu * it.fx, it.cy + s * it.dy + mu * it.fy};
}

// Area of the polygon as a quadratic in s (mu = 0): returns {a2, a1, a0}.
std::array<Rational, 3> area_poly(const std::vector<Item>& items) {
    Rational a2 = 0, a1 = 0, a0 = 0;
    const std::size_t n = items.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Item& p = items[i];
        const Item& q = items[(i + 1) % n];
        a0 += p.cx * q.cy - p.cy * q.cx;
        a1 += p.cx * q.dy + p.dx * q.cy - p.cy * q.dx - p.dy * q.cx;
        a2 += p.dx * q.dy - p.dy * q.dx;
    }
    return {a2 / 2, a1 / 2, a0 / 2};
}

double dist(const RatPoint& a, const RatPoint& b) {
    return std::hypot(a.x.get_d() - b.x.get_d(), a.y.get_d() - b.y.get_d());
}

std::vector<RatPoint> cleanup(std::vector<RatPoint> pts) {
    bool changed = true;
    while (changed && pts.size() > 3) {
        changed = false;
        std::vector<RatPoint> out;
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& prev = out.empty() ? pts[(i + n - 1) % n] : out.back();
            const auto& cur = pts[i];
            const auto& next = pts[(i + 1) % n];
            if (cur == prev || orient(prev, cur, next) == 0) {
                // drop duplicates and straight-through vertices; keep spikes for validation to reject
                if (cur == prev || (on_segment(cur, prev, next))) {
                    changed = true;
                    continue;
                }
            }
            out.push_back(cur);
        }
        pts = std::move(out);
    }
    return pts;
}

struct Builder {
    const Decomposition& d;
    const RegionTree& tree;
    std::vector<std::vector<int>> children;  // per piece: child windows
    std::map<int, Rational> kappa;           // per window
    int finger_piece = -1;
    std::size_t finger_edge = 0;
    std::vector<Item> out;

    struct Ev {
        std::size_t e;
        Rational lam;
        int kind;  // 0 vertex, 1 attachment point
        int window;
        Rational u;
    };

    RatPoint W(int w, const Rational& u) const { return lerp(d.windows[w].a, d.windows[w].b, u); }

    static std::size_t edge_of(const std::vector<RatPoint>& poly, const RatPoint& a, const RatPoint& b) {
        for (std::size_t e = 0; e < poly.size(); ++e) {
            const auto& p = poly[e];
            const auto& q = poly[(e + 1) % poly.size()];
            if (on_segment(a, p, q) && on_segment(b, p, q)) return e;
        }
        throw Error("ConstructionFailed", "window not on its piece boundary");
    }

    std::vector<Ev> events(int t, int parent_window) const {
        const auto& poly = d.pieces[t].poly;
        std::vector<Ev> ev;
        for (std::size_t e = 0; e < poly.size(); ++e) ev.push_back({e, 0, 0, -1, 0});
        std::vector<int> att = children[t];
        if (parent_window >= 0) att.push_back(parent_window);
        for (int w : att) {
            std::size_t e = edge_of(poly, d.windows[w].a, d.windows[w].b);
            const auto& p = poly[e];
            const auto& q = poly[(e + 1) % poly.size()];
            Rational len2 = (q.x - p.x) * (q.x - p.x) + (q.y - p.y) * (q.y - p.y);
            for (Rational u : {Rational(1, 3), Rational(2, 3)}) {
                RatPoint x = W(w, u);
                Rational lam = ((x.x - p.x) * (q.x - p.x) + (x.y - p.y) * (q.y - p.y)) / len2;
                ev.push_back({e, lam, 1, w, u});
            }
        }
        std::sort(ev.begin(), ev.end(), [](const Ev& a, const Ev& b) {
            if (a.e != b.e) return a.e < b.e;
            if (a.lam != b.lam) return a.lam < b.lam;
            return a.kind < b.kind;
        });
        return ev;
    }

    RatPoint g(int t, int w, const Rational& u) const {
        RatPoint x = W(w, u);
        const auto& c = d.pieces[t].center;
        const Rational& k = kappa.at(w);
        return {x.x + k * (c.x - x.x), x.y + k * (c.y - x.y)};
    }

    void emit(int t, int parent_window) {
        const auto& pc = d.pieces[t];
        auto ev = events(t, parent_window);
        const std::size_t n = ev.size();
        std::size_t begin = 0, stop = n;  // iterate indices begin..begin+count
        std::size_t count = n;
        if (parent_window >= 0) {
            std::size_t i_first = n, i_second = n;
            for (std::size_t i = 0; i < n; ++i)
                if (ev[i].window == parent_window) (i_first == n ? i_first : i_second) = i;
            out.push_back(scaled(pc.center, W(parent_window, ev[i_second].u)));
            begin = i_second + 1;
            count = (i_first + n - begin) % n;
            stop = i_first;
        }
        (void)stop;
        for (std::size_t k = 0; k < count; ++k) {
            const Ev& e = ev[(begin + k) % n];
            if (e.kind == 0) {
                out.push_back(scaled(pc.center, pc.poly[e.e]));
                if (t == finger_piece && e.e == finger_edge) push_finger(t);
                continue;
            }
            // child attachment: the first point in our order
            const Ev& e2 = ev[(begin + k + 1) % n];
            int w = e.window;
            int s = d.other(w, t);
            out.push_back(scaled(pc.center, W(w, e.u)));
            out.push_back(constant(g(t, w, e.u)));
            out.push_back(constant(g(s, w, e.u)));
            emit(s, w);
            out.push_back(constant(g(s, w, e2.u)));
            out.push_back(constant(g(t, w, e2.u)));
            out.push_back(scaled(pc.center, W(w, e2.u)));
            ++k;
        }
        if (parent_window >= 0) {
            std::size_t i_first = n;
            for (std::size_t i = 0; i < n; ++i)
                if (ev[i].window == parent_window) {
                    i_first = i;
                    break;
                }
            out.push_back(scaled(pc.center, W(parent_window, ev[i_first].u)));
        }
    }

    void push_finger(int t) {
        const auto& pc = d.pieces[t];
        const auto& p = pc.poly[finger_edge];
        const auto& q = pc.poly[(finger_edge + 1) % pc.poly.size()];
        RatPoint m = lerp(p, q, Rational(1, 2));
        RatPoint dir{m.x - pc.center.x, m.y - pc.center.y};
        Item a = scaled(pc.center, lerp(p, q, Rational(1, 4)));
        Item b = scaled(pc.center, lerp(p, q, Rational(3, 4)));
        Item a2 = a, b2 = b;
        a2.fx = b2.fx = dir.x;
        a2.fy = b2.fy = dir.y;
        out.push_back(a);
        out.push_back(a2);
        out.push_back(b2);
        out.push_back(b);
    }
};

}  // namespace

std::optional<PolyCurve> realize_region(const Decomposition& d, const RegionTree& tree, const RealizeOptions& opt,
                                        const std::function<bool(const PolyCurve&)>& accept,
                                        const SpliceBase* base) {
    Builder B{d, tree, {}, {}, -1, 0, {}};
    B.children.assign(d.pieces.size(), {});
    for (int t : tree.order) {
        int w = tree.via[t];
        if (w >= 0) B.children[d.other(w, t)].push_back(w);
    }
    const double s_max = opt.s_max.get_d();
    std::map<int, double> kappa0;
    for (int t : tree.order) {
        int w = tree.via[t];
        if (w < 0) continue;
        int s = d.other(w, t);
        const auto& win = d.windows[w];
        double len = dist(win.a, win.b);
        double far = 0;
        for (int pc : {t, s})
            for (Rational u : {Rational(1, 3), Rational(2, 3)})
                far = std::max(far, dist(d.pieces[pc].center, lerp(win.a, win.b, u)));
        kappa0[w] = std::min((1 - s_max) / 4, len / (7 * far));
    }
    int root_parent = base ? base->window : -1;

    // finger edge: an edge of a tree piece free of attachments, with the most leverage
    {
        double best = -1;
        for (int t : tree.order) {
            const auto& pc = d.pieces[t];
            std::set<std::size_t> used;
            std::vector<int> att = B.children[t];
            if (tree.via[t] >= 0) att.push_back(tree.via[t]);
            if (t == tree.root && root_parent >= 0) att.push_back(root_parent);
            for (int w : att) used.insert(Builder::edge_of(pc.poly, d.windows[w].a, d.windows[w].b));
            for (std::size_t e = 0; e < pc.poly.size(); ++e) {
                if (used.count(e)) continue;
                const auto& p = pc.poly[e];
                const auto& q = pc.poly[(e + 1) % pc.poly.size()];
                RatPoint m = lerp(p, q, Rational(1, 2));
                double lever = std::abs(cross(pc.center, m, q).get_d()) + 0 * dist(p, q);
                if (lever > best) {
                    best = lever;
                    B.finger_piece = t;
                    B.finger_edge = e;
                }
            }
        }
        if (B.finger_piece < 0) return std::nullopt;
    }

    // splice geometry
    std::size_t base_seg = 0;
    bool reverse_tour = false;
    if (base) {
        const auto& c = base->curve->v;
        const auto& win = d.windows[base->window];
        bool found = false;
        for (std::size_t k = 0; k < c.size() && !found; ++k)
            if (on_segment(win.a, c[k], c[(k + 1) % c.size()]) && on_segment(win.b, c[k], c[(k + 1) % c.size()])) {
                base_seg = k;
                found = true;
            }
        if (!found) throw Error("ConstructionFailed", "base window is not on the curve");
    }

    for (int attempt = 0; attempt < opt.retries; ++attempt) {
        B.kappa.clear();
        for (auto& [w, k] : kappa0) {
            Rational kq = dyadic_floor(k, 48 + attempt);
            if (kq == 0) kq = Rational(1, 1) / (mpz_class(1) << (60 + attempt));
            B.kappa[w] = kq / (mpz_class(1) << attempt);
        }
        B.out.clear();
        B.emit(tree.root, root_parent);
        std::vector<Item> items;
        if (base) {
            const auto& c = base->curve->v;
            const auto& win = d.windows[base->window];
            const auto& p = c[base_seg];
            const auto& q = c[(base_seg + 1) % c.size()];
            RatPoint w1 = lerp(win.a, win.b, Rational(1, 3)), w2 = lerp(win.a, win.b, Rational(2, 3));
            auto along = [&](const RatPoint& x) -> Rational { return (x.x - p.x) * (q.x - p.x) + (x.y - p.y) * (q.y - p.y); };
            RatPoint cfirst = along(w1) < along(w2) ? w1 : w2;
            RatPoint csecond = along(w1) < along(w2) ? w2 : w1;
            // the tour starts next to the root's second attachment point
            const auto& root_c = d.pieces[tree.root].center;
            Item start_expected = scaled(root_c, cfirst);
            reverse_tour = !(B.out.front().dx == start_expected.dx && B.out.front().dy == start_expected.dy);
            std::vector<Item> tour = B.out;
            if (reverse_tour) std::reverse(tour.begin(), tour.end());
            for (std::size_t k = 0; k <= base_seg; ++k) items.push_back(constant(c[k]));
            items.push_back(constant(cfirst));
            items.insert(items.end(), tour.begin(), tour.end());
            items.push_back(constant(csecond));
            for (std::size_t k = base_seg + 1; k < c.size(); ++k) items.push_back(constant(c[k]));
        } else {
            items = B.out;
        }

        auto [a2, a1, a0] = area_poly(items);
        double A2 = a2.get_d(), A1 = a1.get_d(), A0 = Rational(a0 - opt.target).get_d();
        std::vector<double> roots;
        if (std::abs(A2) < 1e-300) {
            if (A1 != 0) roots.push_back(-A0 / A1);
        } else {
            double disc = A1 * A1 - 4 * A2 * A0;
            if (disc >= 0) {
                double sq = std::sqrt(disc);
                roots.push_back((-A1 + sq) / (2 * A2));
                roots.push_back((-A1 - sq) / (2 * A2));
            }
        }
        const double s_min = opt.s_min.get_d();
        double chosen = -1;
        for (double r : roots)
            if (r >= s_min && r <= s_max) chosen = std::max(chosen, r);
        if (chosen < 0) return std::nullopt;
        Rational s = dyadic_floor(chosen, 30);

        auto polygon = [&](const Rational& mu) {
            std::vector<RatPoint> pts;
            pts.reserve(items.size());
            for (const auto& it : items) pts.push_back(eval(it, s, mu));
            return pts;
        };
        Rational area0 = signed_area(polygon(0));
        Rational area1 = signed_area(polygon(1));
        Rational slope = area1 - area0;
        if (slope == 0) continue;
        Rational mu = (opt.target - area0) / slope;
        if (!(mu > -s / 2 && mu < (1 - s) / 2)) continue;
        try {
            PolyCurve c = validate_curve(cleanup(polygon(mu)));
            if (enclosed_area(c) != opt.target) continue;
            if (accept(c)) return c;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

}  // namespace bc
