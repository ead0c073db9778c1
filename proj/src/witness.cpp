#include "balcurve/witness.hpp"

#include "balcurve/balanced.hpp"
#include "balcurve/curve_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bc {

namespace {

Rational sum(const std::vector<Rational>& xs) {
    Rational s = 0;
    for (const auto& x : xs) s += x;
    return s;
}

PolyCurve rect(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
    return validate_curve({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

// Centroid of an ear: a convex corner whose triangle holds no other vertex.
RatPoint interior_point(const std::vector<RatPoint>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RatPoint& a = poly[(i + n - 1) % n];
        const RatPoint& b = poly[i];
        const RatPoint& c = poly[(i + 1) % n];
        if (orient(a, b, c) <= 0) continue;
        bool empty = true;
        for (std::size_t j = 0; j < n && empty; ++j) {
            if (j == i || j == (i + 1) % n || j == (i + n - 1) % n) continue;
            const RatPoint& p = poly[j];
            if (orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0) empty = false;
        }
        if (empty) return {(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
    }
    throw Error("InternalError", "polygon without an ear");
}

ChainPos locate_on(const PolyCurve& poly, const RatPoint& p) {
    const std::size_t n = poly.v.size();
    for (std::size_t s = 0; s < n; ++s) {
        const RatPoint& a = poly.v[s];
        const RatPoint& b = poly.v[(s + 1) % n];
        if (!on_segment(p, a, b) || p == b) continue;
        Rational t = a.x != b.x ? Rational((p.x - a.x) / (b.x - a.x)) : Rational((p.y - a.y) / (b.y - a.y));
        return {s, t};
    }
    throw Error("InvalidArgument", "cut endpoint is not on its hole boundary");
}

RatPoint direction(const RatPoint& a, const RatPoint& b) { return {b.x - a.x, b.y - a.y}; }

int cross_sign(const RatPoint& t, const RatPoint& d) {
    Rational c = t.x * d.y - t.y * d.x;
    return sgn(c);
}

// Cyclic key of z relative to x on a closed chain: strictly after x first.
std::pair<int, ChainPos> cyc_key(const ChainPos& x, const ChainPos& z) {
    return {(x < z) ? 0 : 1, z};
}

struct Endpoint {
    ChainPos pos;
    int letter;  // signed letter met when walking counter-clockwise past it
};

// Cut endpoints on each hole with the letter picked up by a walk that runs
// counter-clockwise just outside the hole.
std::vector<std::vector<Endpoint>> hole_endpoints(const Witness& w) {
    std::vector<std::vector<Endpoint>> out(w.holes.size());
    for (std::size_t k = 0; k < w.cuts.size(); ++k) {
        const auto& cv = w.cuts[k].v;
        for (int end = 0; end < 2; ++end) {
            std::size_t h = end == 0 ? k : k + 1;
            const RatPoint& p = end == 0 ? cv.front() : cv.back();
            RatPoint t = end == 0 ? direction(cv[0], cv[1]) : direction(cv[cv.size() - 2], cv.back());
            ChainPos pos = locate_on(w.holes[h], p);
            const auto& hv = w.holes[h].v;
            RatPoint d = direction(hv[pos.seg], hv[(pos.seg + 1) % hv.size()]);
            int sign = cross_sign(t, d);
            out[h].push_back({pos, sign * static_cast<int>(k + 1)});
        }
    }
    for (auto& e : out) std::sort(e.begin(), e.end(), [](const Endpoint& a, const Endpoint& b) { return a.pos < b.pos; });
    return out;
}

// Letters met walking counter-clockwise around hole h from x to y; x == y is a full turn.
Word ccw_letters(const std::vector<Endpoint>& eps, const ChainPos& x, const ChainPos& y) {
    std::vector<std::pair<std::pair<int, ChainPos>, int>> picked;
    bool full = x == y;
    auto ky = cyc_key(x, y);
    for (const auto& e : eps) {
        auto ke = cyc_key(x, e.pos);
        if (full || ke < ky) picked.push_back({ke, e.letter});
    }
    std::sort(picked.begin(), picked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Word out;
    for (const auto& p : picked) out.push_back(p.second);
    return out;
}

// Boundary points of a hole walking counter-clockwise from x to y (both included).
std::vector<RatPoint> ccw_path(const PolyCurve& hole, const ChainPos& x, const ChainPos& y) {
    ChainRef ref(hole);
    return chain_subarc(ref, x, y).v;
}

Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

struct Event {
    ChainPos pos;
    bool hole = false;
    int index = 0;
    ChainPos other;  // position on the hole boundary
    int letter = 0;
};

struct SurgeryCandidate {
    Word word;
    std::vector<int> side;
};

struct Analysis {
    CutClassification cls;
    std::vector<SurgeryCandidate> surgered;
};

std::vector<int> normalized_side(std::vector<int> side) {
    if (!side.empty() && side[0] == 1)
        for (auto& s : side) s = 1 - s;
    return side;
}

Analysis analyze(const PolyCurve& c, const Witness& w) {
    const int n = w.n();
    Analysis an;
    std::vector<RatPoint> reps;
    for (const auto& h : w.holes) reps.push_back(interior_point(h.v));

    std::vector<Event> events;
    for (int i = 0; i < n; ++i) {
        PairStatus st = pair_status(c, w.holes[i]);
        if (st.kind == PairStatus::NonGeneric) throw Error("NonGenericInput", "hole " + std::to_string(i + 1) + ": " + st.witness);
        for (const auto& cr : st.crossings) events.push_back({{cr.seg_a, cr.t_a}, true, i, {cr.seg_b, cr.t_b}, 0});
    }
    for (std::size_t k = 0; k < w.cuts.size(); ++k) {
        const auto& cut = w.cuts[k];
        PairStatus st = pair_status(c, cut);
        if (st.kind == PairStatus::NonGeneric) throw Error("NonGenericInput", "cut " + std::to_string(k + 1) + ": " + st.witness);
        for (const auto& cr : st.crossings) {
            RatPoint t = direction(cut.v[cr.seg_b], cut.v[cr.seg_b + 1]);
            RatPoint d = direction(c.v[cr.seg_a], c.v[(cr.seg_a + 1) % c.v.size()]);
            events.push_back({{cr.seg_a, cr.t_a}, false, static_cast<int>(k), {}, cross_sign(t, d) * static_cast<int>(k + 1)});
        }
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.pos < b.pos; });

    std::vector<int> hole_ev;
    for (std::size_t e = 0; e < events.size(); ++e)
        if (events[e].hole) hole_ev.push_back(static_cast<int>(e));

    if (hole_ev.empty()) {
        for (int i = 0; i < n; ++i)
            if (winding_number(c.v[0], w.holes[i].v) != 0) return an;  // inside a hole
        ClosedComponent cc;
        cc.curve = c;
        int inside = 0;
        for (int i = 0; i < n; ++i) {
            int s = winding_number(reps[i], c.v) != 0 ? 1 : 0;
            cc.side.push_back(s);
            inside += s;
        }
        int m = std::min(inside, n - inside);
        cc.kind = m == 0 ? ClosedComponent::Inessential : m == 1 ? ClosedComponent::Peripheral : ClosedComponent::Essential;
        for (const auto& e : events) cc.word.push_back(e.letter);
        an.cls.closed.push_back(cc);
        an.cls.cuts = cc.kind == ClosedComponent::Essential;
        if (an.cls.cuts) an.surgered.push_back({cc.word, cc.side});
        return an;
    }

    auto endpoints = hole_endpoints(w);
    const std::size_t m = hole_ev.size();
    for (std::size_t s = 0; s < m; ++s) {
        const Event& e0 = events[hole_ev[s]];
        const Event& e1 = events[hole_ev[(s + 1) % m]];
        PolyArc piece = chain_subarc(ChainRef(c), e0.pos, e1.pos);
        RatPoint probe = lerp(piece.v[0], piece.v[1], Rational(1, 2));
        bool in_hole = false;
        for (int i = 0; i < n && !in_hole; ++i) in_hole = winding_number(probe, w.holes[i].v) != 0;
        if (in_hole) continue;

        ArcComponent arc;
        arc.arc = piece;
        arc.from_hole = e0.index;
        arc.to_hole = e1.index;
        // cut crossings strictly between the two hole crossings, cyclically
        std::size_t a = hole_ev[s], b = hole_ev[(s + 1) % m];
        for (std::size_t e = (a + 1) % events.size(); e != b; e = (e + 1) % events.size())
            arc.word.push_back(events[e].letter);

        const ChainPos P = e0.other, Q = e1.other;
        if (arc.from_hole != arc.to_hole) {
            arc.essential = true;
            int i = arc.from_hole, j = arc.to_hole;
            std::vector<int> side(n, 0);
            side[i] = side[j] = 1;
            Word word = concat({arc.word, ccw_letters(endpoints[j], Q, Q), inverse(arc.word), ccw_letters(endpoints[i], P, P)});
            an.surgered.push_back({word, side});
        } else {
            const int i = arc.from_hole;
            const PolyCurve& hole = w.holes[i];
            auto qp = ccw_path(hole, Q, P);
            auto pq = ccw_path(hole, P, Q);
            // loop 1: the arc closed up along Q -> P; loop 2: along P -> Q reversed
            std::vector<RatPoint> loop1 = piece.v, loop2 = piece.v;
            loop1.insert(loop1.end(), qp.begin() + 1, qp.end() - 1);
            for (std::size_t k = pq.size() - 2; k >= 1; --k) loop2.push_back(pq[k]);
            RatPoint on_pq = lerp(pq[0], pq[1], Rational(1, 2));
            RatPoint on_qp = lerp(qp[0], qp[1], Rational(1, 2));
            struct Loop {
                const std::vector<RatPoint>* poly;
                RatPoint hole_probe;
                Word word;
            } loops[2] = {{&loop1, on_pq, concat({arc.word, ccw_letters(endpoints[i], Q, P)})},
                          {&loop2, on_qp, concat({arc.word, inverse(ccw_letters(endpoints[i], P, Q))})}};
            int far_count[2] = {0, 0};
            std::vector<SurgeryCandidate> kept;
            for (int l = 0; l < 2; ++l) {
                bool hole_inside = winding_number(loops[l].hole_probe, *loops[l].poly) != 0;
                std::vector<int> side(n, 0);
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    bool inside = winding_number(reps[j], *loops[l].poly) != 0;
                    if (inside != hole_inside) {
                        side[j] = 1;
                        ++far_count[l];
                    }
                }
                // peripheral or inessential surgery results are discarded
                if (far_count[l] >= 2 && far_count[l] <= n - 2) kept.push_back({loops[l].word, side});
            }
            arc.essential = far_count[0] >= 1 && far_count[0] <= n - 2;
            if (arc.essential) an.surgered.insert(an.surgered.end(), kept.begin(), kept.end());
        }
        an.cls.arcs.push_back(arc);
    }
    for (const auto& arc : an.cls.arcs) an.cls.cuts = an.cls.cuts || arc.essential;
    return an;
}

// Booth's least rotation.
std::size_t least_rotation(const Word& s) {
    const std::size_t n = s.size();
    if (n == 0) return 0;
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    auto at = [&](std::size_t i) { return s[i % n]; };
    for (std::size_t j = 1; j < 2 * n; ++j) {
        int sj = at(j);
        long i = f[j - k - 1];
        while (i != -1 && sj != at(k + i + 1)) {
            if (sj < at(k + i + 1)) k = j - i - 1;
            i = f[i];
        }
        if (i == -1 && sj != at(k + i + 1)) {
            if (sj < at(k + i + 1)) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

Word rotate(const Word& w, std::size_t k) {
    Word out(w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
}

// Isometries v -> s v + t of the plane generated by point reflections at the
// corners of the unit square; t is kept doubled-free as integers.
struct Affine {
    int s = 1;
    std::int64_t tx = 0, ty = 0;
};
Affine compose(const Affine& f, const Affine& g) { return {f.s * g.s, f.s * g.tx + f.tx, f.s * g.ty + f.ty}; }
Affine inverse_affine(const Affine& f) { return {f.s, -f.s * f.tx, -f.s * f.ty}; }

Word substitute(const Word& w, const std::map<int, Word>& images) {
    Word out;
    for (int l : w) {
        auto it = images.find(std::abs(l));
        if (it == images.end()) {
            out.push_back(l);
        } else if (l > 0) {
            out.insert(out.end(), it->second.begin(), it->second.end());
        } else {
            Word inv = inverse(it->second);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(out);
}

}  // namespace

// ------------------------------------------------------------ construction

Witness layout_witness(const std::vector<Rational>& areas) {
    const int n = static_cast<int>(areas.size());
    Rational total = sum(areas);
    Rational aw = 1 - total;
    if (aw <= 0) throw Error("InfeasibleParameters", "hole areas sum to " + to_string(total) + " >= 1");
    for (const auto& a : areas)
        if (a <= 0) throw Error("InfeasibleParameters", "hole areas must be positive");
    Rational H = 1 - aw / 2;
    std::vector<Rational> widths;
    for (const auto& a : areas) widths.push_back(a / H);
    Rational g = (1 - sum(widths)) / (n + 1);
    Rational y0 = (1 - H) / 2, y1 = (1 + H) / 2, mid(1, 2);
    Witness w;
    Rational x = g;
    std::vector<Rational> left, right;
    for (int i = 0; i < n; ++i) {
        left.push_back(x);
        right.push_back(x + widths[i]);
        w.holes.push_back(rect(x, y0, x + widths[i], y1));
        x += widths[i] + g;
    }
    for (int k = 0; k + 1 < n; ++k) w.cuts.push_back(make_arc({{right[k], mid}, {left[k + 1], mid}}));
    return w;
}

Witness make_witness(const Rational& eps, int n, Profile profile, const Rational& eps1) {
    check_epsilon(eps);
    if (n < 4) throw Error("InvalidArgument", "a witness needs n >= 4 holes");
    std::vector<Rational> areas;
    if (profile == Profile::Uniform) {
        Rational lhs = Rational(2) / (n + 1);
        if (!(lhs < eps)) throw Error("InfeasibleParameters", "2/(n+1) = " + to_string(lhs) + " >= eps = " + to_string(eps));
        areas.assign(n, Rational(1, n + 1));
    } else {
        if (!(eps1 > 0) || !(eps1 < eps))
            throw Error("InfeasibleParameters", "need 0 < eps1 < eps, got eps1 = " + to_string(eps1));
        Rational small = (1 - eps1) / n;
        if (!(eps1 + small < eps))
            throw Error("InfeasibleParameters", "eps1 + (1-eps1)/n = " + to_string(Rational(eps1 + small)) + " >= eps");
        if (!(2 * small < eps))
            throw Error("InfeasibleParameters", "2(1-eps1)/n = " + to_string(Rational(2 * small)) + " >= eps");
        areas.push_back(eps1);
        for (int i = 1; i < n; ++i) areas.push_back(small);
    }
    Witness w = layout_witness(areas);
    w.profile = profile == Profile::Uniform ? "uniform" : "skewed";
    if (profile == Profile::Skewed) w.eps1 = eps1;
    return w;
}

Rational witness_area(const Witness& w) {
    Rational s = 1;
    for (const auto& h : w.holes) s -= enclosed_area(h);
    return s;
}

WitnessCheck witness_check(const Witness& w, const Rational& eps) {
    Rational aw = witness_area(w);
    for (int i = 0; i < w.n(); ++i)
        if (!(enclosed_area(w.holes[i]) + aw < eps)) return {false, i};
    return {};
}

std::string serialize_witness(const Witness& w) {
    std::string s = "@witness profile=" + w.profile;
    if (w.profile == "skewed") s += " eps1=" + to_pq(w.eps1);
    s += "\n\n";
    for (const auto& h : w.holes) s += "@hole\n" + serialize_points(h.v) + "\n";
    for (std::size_t k = 0; k < w.cuts.size(); ++k) {
        s += "@cut\n" + serialize_points(w.cuts[k].v);
        if (k + 1 < w.cuts.size()) s += "\n";
    }
    return s;
}

Witness parse_witness(const std::string& text) {
    Witness w;
    bool header = false;
    for (auto& b : parse_blocks(text)) {
        bool hole = false, cut = false;
        for (const auto& d : b.directives) {
            std::istringstream ds(d);
            std::string word;
            ds >> word;
            if (word == "hole") {
                hole = true;
            } else if (word == "cut") {
                cut = true;
            } else if (word == "witness") {
                header = true;
                std::string kv;
                while (ds >> kv) {
                    auto eq = kv.find('=');
                    if (eq == std::string::npos) throw Error("ParseError", "bad witness header field " + kv);
                    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                    if (key == "profile") w.profile = val;
                    else if (key == "eps1") w.eps1 = parse_rational(val);
                    else throw Error("ParseError", "unknown witness header field " + key);
                }
            } else {
                throw Error("ParseError", "unknown directive @" + word + " in witness file");
            }
        }
        if (hole) w.holes.push_back(validate_curve(b.pts));
        else if (cut) w.cuts.push_back(make_arc(b.pts));
        else if (!b.pts.empty()) throw Error("ParseError", "witness block without @hole or @cut");
    }
    if (!header) throw Error("ParseError", "missing @witness header");
    if (w.n() < 4) throw Error("ParseError", "a witness needs at least 4 holes");
    if (static_cast<int>(w.cuts.size()) != w.n() - 1) throw Error("ParseError", "a witness needs n-1 cut arcs");
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j) {
            if (pair_status(w.holes[i], w.holes[j]).kind != PairStatus::Disjoint ||
                winding_number(w.holes[i].v[0], w.holes[j].v) != 0 || winding_number(w.holes[j].v[0], w.holes[i].v) != 0)
                throw Error("ParseError", "holes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
        }
    for (std::size_t k = 0; k < w.cuts.size(); ++k) {
        locate_on(w.holes[k], w.cuts[k].v.front());
        locate_on(w.holes[k + 1], w.cuts[k].v.back());
    }
    return w;
}

// ------------------------------------------------------------------ words

Word free_reduce(const Word& w) {
    Word out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return Word(r.begin() + i, r.begin() + j);
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l = -l;
    return out;
}

Word canonical_class(const Word& w) {
    Word r = cyclic_reduce(w);
    Word a = rotate(r, least_rotation(r));
    Word ri = inverse(r);
    Word b = rotate(ri, least_rotation(ri));
    return std::min(a, b);
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (int l : w) {
        if (!s.empty()) s += " ";
        s += (l > 0 ? "x" : "X") + std::to_string(std::abs(l));
    }
    return s.empty() ? "1" : s;
}

const char* closed_kind_name(ClosedComponent::Kind k) {
    switch (k) {
        case ClosedComponent::Inessential: return "inessential";
        case ClosedComponent::Peripheral: return "peripheral";
        default: return "essential";
    }
}

std::string CurveClass::partition() const {
    std::string a, b;
    for (std::size_t i = 0; i < side.size(); ++i) {
        std::string& t = side[i] == 0 ? a : b;
        if (!t.empty()) t += ",";
        t += std::to_string(i + 1);
    }
    return "{" + a + "|" + b + "}";
}

// ------------------------------------------------------- classification

CutClassification cuts_witness(const PolyCurve& c, const Witness& w) { return analyze(c, w).cls; }

std::vector<CurveClass> project_to_witness(const PolyCurve& c, const Witness& w) {
    Analysis an = analyze(c, w);
    if (!an.cls.cuts) throw Error("DoesNotCut", "curve does not cut the witness");
    std::vector<CurveClass> out;
    for (const auto& cand : an.surgered) {
        CurveClass cls{canonical_class(cand.word), normalized_side(cand.side)};
        if (std::find(out.begin(), out.end(), cls) == out.end()) out.push_back(cls);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool disjoint_realizable(const CurveClass& a, const CurveClass& b, int n) {
    if (a.word == b.word) return true;
    if (n <= 4) return false;  // distinct curves of a four-holed sphere always meet
    // nested partitions: some side of a inside some side of b
    for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb) {
            bool nested = true;
            for (std::size_t i = 0; i < a.side.size() && nested; ++i)
                if (a.side[i] == sa && b.side[i] != sb) nested = false;
            if (nested) return true;
        }
    return false;
}

// ------------------------------------------------------------------ slopes

Slope slope_of(const Word& word, int n) {
    if (n != 4) throw Error("NotFourHoled", "slopes need a four-holed witness, got n = " + std::to_string(n));
    // Generators map to reflections in the pillowcase corners (0,0) and (0,1)
    // and to the translation by (-2,0).
    const Affine gen[4] = {{}, {-1, 0, 0}, {1, -2, 0}, {-1, 0, 2}};
    Affine f;
    for (int l : word) {
        int k = std::abs(l);
        if (k < 1 || k > 3) throw Error("InvalidArgument", "letter out of range in " + word_to_string(word));
        f = compose(f, l > 0 ? gen[k] : inverse_affine(gen[k]));
    }
    if (f.s != 1 || (f.tx == 0 && f.ty == 0))
        throw Error("InvalidArgument", "word is not an essential non-peripheral class: " + word_to_string(word));
    return make_slope(f.ty, f.tx);
}

Slope slope_of(const CurveClass& c, int n) { return slope_of(c.word, n); }

Word apply_half_twist(const Word& w, int g) {
    std::map<int, Word> images;
    switch (g) {
        case 1: images[1] = {2, -1}; break;
        case -1: images[1] = {-1, 2}; break;
        case 2: images[2] = {3, -2, 1}; break;
        case -2: images[2] = {1, -2, 3}; break;
        case 3: images[3] = {-3, 2}; break;
        case -3: images[3] = {2, -3}; break;
        default: throw Error("InvalidArgument", "half twist index must be in +-{1,2,3}");
    }
    return substitute(w, images);
}

Mat2 half_twist_matrix(int g) {
    switch (g) {
        case 1: case 3: return {1, 0, 1, 1};
        case -1: case -3: return {1, 0, -1, 1};
        case 2: return {1, -1, 0, 1};
        case -2: return {1, 1, 0, 1};
        default: throw Error("InvalidArgument", "half twist index must be in +-{1,2,3}");
    }
}

// ------------------------------------------------------------ lower bounds

long lower_bound_value(int d) {
    long slack = std::max(0, d - 2);
    return (slack + 3) / 4;
}

Certificate lower_bound_distance(const PolyCurve& a, const PolyCurve& b, const Witness& w, const Rational& eps) {
    check_epsilon(eps);
    WitnessCheck chk = witness_check(w, eps);
    if (!chk.ok) throw Error("WitnessFails", "hole " + std::to_string(chk.hole + 1) + " has area(A)+area(W) >= eps");
    auto pa = project_to_witness(a, w);
    auto pb = project_to_witness(b, w);
    Certificate cert;
    cert.kind = Certificate::Lower;
    cert.eps = eps;
    cert.a = a;
    cert.b = b;
    cert.witness = serialize_witness(w);
    cert.facts["n"] = std::to_string(w.n());
    cert.facts["classes_a"] = std::to_string(pa.size());
    cert.facts["classes_b"] = std::to_string(pb.size());
    cert.facts["word_a"] = word_to_string(pa.front().word);
    cert.facts["word_b"] = word_to_string(pb.front().word);
    CertStep step;
    step.tag = tags::Witness;
    step.from = "a";
    step.to = "b";
    if (w.n() == 4) {
        Slope sa = slope_of(pa.front(), 4), sb = slope_of(pb.front(), 4);
        int d = farey_distance(sa, sb);
        cert.value = lower_bound_value(d);
        cert.facts["slope_a"] = to_string(sa);
        cert.facts["slope_b"] = to_string(sb);
        cert.facts["farey_distance"] = std::to_string(d);
        step.claim = "projection slopes at Farey distance " + std::to_string(d) + ", bound ceil(max(0,d-2)/4)";
    } else {
        cert.coarse = true;
        bool shared = false;
        for (const auto& x : pa)
            for (const auto& y : pb) shared = shared || x == y;
        cert.value = shared ? 0 : 1;
        cert.facts["shared_class"] = shared ? "yes" : "no";
        step.claim = shared ? "projections share a class" : "projections share no class, so the curves differ";
    }
    step.weight = cert.value;
    cert.steps.push_back(step);
    return cert;
}

VerifyReport verify_lower_certificate(const Certificate& cert, const PolyCurve& a, const PolyCurve& b,
                                      const Rational& eps) {
    try {
        Witness w = parse_witness(cert.witness);
        Certificate fresh = lower_bound_distance(a, b, w, eps);
        if (fresh.value != cert.value) return {false, "value " + std::to_string(cert.value) + " but recomputed " + std::to_string(fresh.value)};
        if (fresh.coarse != cert.coarse) return {false, "coarse flag mismatch"};
        if (fresh.facts != cert.facts) return {false, "recorded projection facts do not match the witness"};
        if (cert.steps.size() != 1 || cert.steps[0].tag != tags::Witness || cert.steps[0].weight != cert.value ||
            cert.steps[0].from != "a" || cert.steps[0].to != "b")
            return {false, "lower-bound chain must be a single witness step"};
        return {};
    } catch (const Error& e) {
        return {false, e.what()};
    }
}

// -------------------------------------------------------------- two scales

TwoScaleResult two_scale_experiment(int n_max, const Rational& eps1, const Rational& eps2) {
    TwoScaleResult r;
    r.eps1 = eps1;
    r.eps2 = eps2;
    r.witness = make_witness(eps2, 4, Profile::Skewed, eps1);
    const auto& H = r.witness.holes;
    r.eta = H[0];

    // rectangle around holes 1 and 2, then balanced to an equator off every hole
    Rational gap = H[1].v[0].x - H[0].v[1].x;
    Rational margin = H[0].v[0].y / 2;
    PolyCurve box = rect(H[0].v[0].x - gap / 2, H[0].v[0].y - margin, H[1].v[1].x + gap / 2, H[0].v[2].y + margin);
    std::vector<Piece> clear;
    for (const auto& h : H) clear.push_back(Piece{h.v, true});
    r.alpha = balance_area(box, Rational(1, 2), clear);

    r.eta_balanced_eps1 = is_balanced(r.eta, eps1);
    r.eta_disjoint_alpha = crossing_adjacency(r.alpha, r.eta).kind == AdjacencyResult::Disjoint;
    r.eta_not_balanced_eps2 = !is_balanced(r.eta, eps2);
    bool upper_ok = r.eta_balanced_eps1 && r.eta_disjoint_alpha && is_balanced(r.alpha, eps1);

    // f = (twist 3, then inverse twist 2) fixes hole 1 and acts by [[2,1],[1,1]]
    r.matrix = half_twist_matrix(-2) * half_twist_matrix(3);
    auto classes = project_to_witness(r.alpha, r.witness);
    Word word = classes.front().word;
    r.alpha_slope = slope_of(word, 4);
    Slope by_matrix = r.alpha_slope;
    for (int n = 1; n <= n_max; ++n) {
        word = cyclic_reduce(apply_half_twist(apply_half_twist(word, 3), -2));
        Slope s = slope_of(word, 4);
        by_matrix = mcg_action(r.matrix, by_matrix);
        if (!(s == by_matrix)) r.words_match_matrix = false;
        TwoScaleRow row;
        row.n = n;
        row.slope = s;
        row.farey_distance = farey_distance(s, r.alpha_slope);
        row.lower_bound = lower_bound_value(row.farey_distance);
        row.upper_bound_eps1 = upper_ok ? 2 : -1;
        r.rows.push_back(row);
    }
    return r;
}

std::string two_scale_csv(const TwoScaleResult& r) {
    std::string s = "n,farey_distance,lower_bound,upper_bound_eps1\n";
    for (const auto& row : r.rows)
        s += std::to_string(row.n) + "," + std::to_string(row.farey_distance) + "," + std::to_string(row.lower_bound) +
             "," + std::to_string(row.upper_bound_eps1) + "\n";
    return s;
}

}  // namespace bc
