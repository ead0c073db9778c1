#include "balcurve/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace bc {

namespace {

// Upper half-plane first, then counter-clockwise by angle.
bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    auto half = [](const Rational& x, const Rational& y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; };
    int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
}

struct PieceSeq {
    std::vector<int> nodes;
    std::vector<bool> is_crossing;
};

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int Arrangement::unbounded_face() const {
    for (const auto& f : faces)
        if (f.contains_infinity) return f.id;
    return -1;
}

std::vector<RatPoint> Arrangement::cycle_polygon(int cycle) const {
    std::vector<RatPoint> poly;
    for (int h : cycles[cycle]) poly.push_back(nodes[half_edges[h].origin]);
    return poly;
}

int Arrangement::locate(const RatPoint& p) const {
    for (const auto& f : faces) {
        if (f.contains_infinity) continue;
        int wn = 0;
        for (int c : f.cycles) wn += winding_number(p, cycle_polygon(c));
        if (wn == 1) return f.id;
    }
    return unbounded_face();
}

Arrangement build_arrangement(ChainRef alpha, ChainRef beta) {
    PairStatus st = pair_status(alpha, beta);
    if (st.kind == PairStatus::NonGeneric) throw Error("NonGenericInput", st.witness);

    Arrangement arr;
    arr.alpha_closed = alpha.closed;
    arr.beta_closed = beta.closed;
    arr.crossings = st.crossings;
    arr.alpha_pts = alpha.v;
    arr.beta_pts = beta.v;

    std::vector<int> cross_node(st.crossings.size());
    for (std::size_t k = 0; k < st.crossings.size(); ++k) {
        cross_node[k] = static_cast<int>(arr.nodes.size());
        arr.nodes.push_back(st.crossings[k].p);
    }

    auto sequence = [&](ChainRef piece, bool is_alpha) {
        // crossings per segment, ordered by parameter
        std::vector<std::vector<std::pair<Rational, int>>> on_seg(piece.segments());
        for (std::size_t k = 0; k < st.crossings.size(); ++k) {
            const auto& c = st.crossings[k];
            if (is_alpha)
                on_seg[c.seg_a].push_back({c.t_a, cross_node[k]});
            else
                on_seg[c.seg_b].push_back({c.t_b, cross_node[k]});
        }
        PieceSeq seq;
        for (std::size_t i = 0; i < piece.segments(); ++i) {
            seq.nodes.push_back(static_cast<int>(arr.nodes.size()));
            seq.is_crossing.push_back(false);
            arr.nodes.push_back(piece.v[i]);
            auto& list = on_seg[i];
            std::sort(list.begin(), list.end(), [](auto& a, auto& b) { return a.first < b.first; });
            for (auto& [t, node] : list) {
                seq.nodes.push_back(node);
                seq.is_crossing.push_back(true);
            }
        }
        if (!piece.closed) {
            seq.nodes.push_back(static_cast<int>(arr.nodes.size()));
            seq.is_crossing.push_back(false);
            arr.nodes.push_back(piece.v.back());
        } else {
            auto first = std::find(seq.is_crossing.begin(), seq.is_crossing.end(), true);
            if (first != seq.is_crossing.end()) {
                auto shift = first - seq.is_crossing.begin();
                std::rotate(seq.nodes.begin(), seq.nodes.begin() + shift, seq.nodes.end());
                std::rotate(seq.is_crossing.begin(), seq.is_crossing.begin() + shift, seq.is_crossing.end());
            }
        }
        return seq;
    };

    auto add_edges = [&](const PieceSeq& seq, bool closed, Label label) {
        int carrier = 0;
        std::size_t m = seq.nodes.size();
        std::size_t edges = closed ? m : m - 1;
        for (std::size_t i = 0; i < edges; ++i) {
            std::size_t j = (i + 1) % m;
            int h = static_cast<int>(arr.half_edges.size());
            HalfEdge fwd, bwd;
            fwd.origin = seq.nodes[i];
            bwd.origin = seq.nodes[j];
            fwd.twin = h + 1;
            bwd.twin = h;
            fwd.label = bwd.label = label;
            fwd.carrier = bwd.carrier = carrier;
            fwd.forward = true;
            bwd.forward = false;
            arr.half_edges.push_back(fwd);
            arr.half_edges.push_back(bwd);
            if (seq.is_crossing[j] && (closed || j + 1 < m)) ++carrier;
        }
        int count = carrier;
        if (closed && std::find(seq.is_crossing.begin(), seq.is_crossing.end(), true) == seq.is_crossing.end())
            count = 1;
        else if (!closed)
            count = carrier + 1;
        return count;
    };

    PieceSeq sa = sequence(alpha, true);
    PieceSeq sb = sequence(beta, false);
    arr.alpha_carriers = add_edges(sa, alpha.closed, Label::Alpha);
    arr.beta_carriers = add_edges(sb, beta.closed, Label::Beta);

    // rotation system
    const int V = static_cast<int>(arr.nodes.size());
    std::vector<std::vector<int>> out(V);
    for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) out[arr.half_edges[h].origin].push_back(h);
    auto dest = [&](int h) { return arr.half_edges[arr.half_edges[h].twin].origin; };
    std::vector<int> pos_in_out(arr.half_edges.size());
    for (int v = 0; v < V; ++v) {
        const auto& o = arr.nodes[v];
        std::sort(out[v].begin(), out[v].end(), [&](int a, int b) {
            const auto& pa = arr.nodes[dest(a)];
            const auto& pb = arr.nodes[dest(b)];
            return angle_less(pa.x - o.x, pa.y - o.y, pb.x - o.x, pb.y - o.y);
        });
        for (std::size_t k = 0; k < out[v].size(); ++k) pos_in_out[out[v][k]] = static_cast<int>(k);
    }
    for (auto& he : arr.half_edges) {
        int t = he.twin;
        int v = arr.half_edges[t].origin;
        int deg = static_cast<int>(out[v].size());
        he.next = out[v][(pos_in_out[t] - 1 + deg) % deg];
    }

    // boundary cycles
    for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) {
        if (arr.half_edges[h].cycle >= 0) continue;
        int c = static_cast<int>(arr.cycles.size());
        arr.cycles.emplace_back();
        int cur = h;
        do {
            arr.half_edges[cur].cycle = c;
            arr.cycles[c].push_back(cur);
            cur = arr.half_edges[cur].next;
        } while (cur != h);
        arr.cycle_area.push_back(signed_area(arr.cycle_polygon(c)));
    }

    // connected components and their outer cycles
    UnionFind uf(V);
    for (const auto& he : arr.half_edges) uf.unite(he.origin, arr.half_edges[he.twin].origin);
    std::map<int, int> comp_id;
    for (int v = 0; v < V; ++v) comp_id.emplace(uf.find(v), static_cast<int>(comp_id.size()));
    arr.components = static_cast<int>(comp_id.size());
    const int C = static_cast<int>(arr.cycles.size());
    std::vector<int> cycle_comp(C);
    std::vector<int> outer(arr.components, -1);
    for (int c = 0; c < C; ++c) {
        int comp = comp_id[uf.find(arr.half_edges[arr.cycles[c][0]].origin)];
        cycle_comp[c] = comp;
        if (outer[comp] < 0 || arr.cycle_area[c] < arr.cycle_area[outer[comp]]) outer[comp] = c;
    }

    // bounded faces: the non-outer cycles
    std::vector<int> face_of_cycle(C, -1);
    for (int c = 0; c < C; ++c) {
        if (outer[cycle_comp[c]] == c) continue;
        Face f;
        f.id = static_cast<int>(arr.faces.size());
        f.cycles.push_back(c);
        f.area = arr.cycle_area[c];
        face_of_cycle[c] = f.id;
        arr.faces.push_back(std::move(f));
    }
    Face inf;
    inf.id = static_cast<int>(arr.faces.size());
    inf.contains_infinity = true;
    inf.area = 1;
    arr.faces.push_back(inf);

    for (int comp = 0; comp < arr.components; ++comp) {
        int oc = outer[comp];
        const RatPoint& probe = arr.nodes[arr.half_edges[arr.cycles[oc][0]].origin];
        int host = -1;
        for (int c = 0; c < C; ++c) {
            if (cycle_comp[c] == comp || outer[cycle_comp[c]] == c) continue;
            if (winding_number(probe, arr.cycle_polygon(c)) == 0) continue;
            if (host < 0 || arr.cycle_area[c] < arr.cycle_area[host]) host = c;
        }
        int fid = host < 0 ? inf.id : face_of_cycle[host];
        face_of_cycle[oc] = fid;
        arr.faces[fid].cycles.push_back(oc);
        arr.faces[fid].area += arr.cycle_area[oc];
    }

    for (int c = 0; c < C; ++c)
        for (int h : arr.cycles[c]) arr.half_edges[h].face = face_of_cycle[c];

    // boundary runs
    for (auto& f : arr.faces) {
        for (int c : f.cycles) {
            std::vector<Run> seq;
            for (int h : arr.cycles[c]) seq.push_back({arr.half_edges[h].label, arr.half_edges[h].carrier});
            std::size_t m = seq.size();
            std::size_t start = m;
            for (std::size_t i = 0; i < m; ++i)
                if (!(seq[i] == seq[(i + m - 1) % m])) {
                    start = i;
                    break;
                }
            if (start == m) {
                f.runs.push_back(seq[0]);
                continue;
            }
            for (std::size_t k = 0; k < m; ++k) {
                const Run& r = seq[(start + k) % m];
                if (k == 0 || !(r == f.runs.back())) f.runs.push_back(r);
            }
        }
    }
    return arr;
}

std::vector<Face> bigon_faces(const Arrangement& arr) {
    std::vector<Face> out;
    for (const auto& f : arr.faces) {
        if (f.cycles.size() != 1 || f.runs.size() != 2) continue;
        if (f.runs[0].label != f.runs[1].label) out.push_back(f);
    }
    return out;
}

int non_bigon_count(const Arrangement& arr) {
    return static_cast<int>(arr.faces.size() - bigon_faces(arr).size());
}

bool face_on_side(const Arrangement& arr, int face, SideSelector side) {
    if (!arr.alpha_closed) throw Error("InvalidArgument", "side selection needs a closed alpha");
    const Face& f = arr.faces[face];
    bool inside = false, decided = false;
    for (int c : f.cycles) {
        for (int h : arr.cycles[c]) {
            const auto& he = arr.half_edges[h];
            if (he.label == Label::Alpha) {
                inside = he.forward;
                decided = true;
                break;
            }
        }
        if (decided) break;
    }
    if (!decided) {
        const RatPoint& p = arr.nodes[arr.half_edges[arr.cycles[f.cycles[0]][0]].origin];
        inside = winding_number(p, arr.alpha_pts) != 0;
    }
    return inside == (side == SideSelector::Inside);
}

DualTree dual_tree(const Arrangement& arr, std::optional<SideSelector> side) {
    if (arr.alpha_closed && !side) throw Error("InvalidArgument", "closed alpha requires a side selector");
    DualTree t;
    auto wanted = [&](int face) { return !side || face_on_side(arr, face, *side); };
    for (const auto& f : arr.faces)
        if (wanted(f.id)) t.vertices.push_back(f.id);
    std::vector<bool> seen(arr.beta_carriers, false);
    for (const auto& he : arr.half_edges) {
        if (he.label != Label::Beta || !he.forward || seen[he.carrier]) continue;
        seen[he.carrier] = true;
        int l = he.face, r = arr.half_edges[he.twin].face;
        if (l == r || !wanted(l)) continue;
        t.edges.push_back({l, r, he.carrier, false, false});
    }
    if (t.vertices.size() != t.edges.size() + 1)
        throw Error("NotATree", std::to_string(t.vertices.size()) + " vertices, " + std::to_string(t.edges.size()) + " edges");
    UnionFind uf(static_cast<int>(arr.faces.size()));
    for (const auto& e : t.edges) uf.unite(e.a, e.b);
    for (int v : t.vertices)
        if (uf.find(v) != uf.find(t.vertices[0])) throw Error("NotATree", "dual graph is disconnected");
    return t;
}

DualTree direct_and_center(const DualTree& t, const Arrangement& arr) {
    DualTree d = t;
    std::map<int, std::vector<int>> adj;  // face -> incident edge indices
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        adj[d.edges[i].a].push_back(static_cast<int>(i));
        adj[d.edges[i].b].push_back(static_cast<int>(i));
    }
    Rational total = 0;
    for (int v : d.vertices) total += arr.faces[v].area;

    // subtree sums from an arbitrary root
    std::map<int, int> parent_edge;
    std::vector<int> order;
    int root = d.vertices[0];
    parent_edge[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int ei : adj[v]) {
            if (ei == parent_edge[v]) continue;
            int w = d.edges[ei].a == v ? d.edges[ei].b : d.edges[ei].a;
            parent_edge[w] = ei;
            stack.push_back(w);
        }
    }
    std::map<int, Rational> sub;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        sub[v] += arr.faces[v].area;
        int pe = parent_edge[v];
        if (pe >= 0) {
            int p = d.edges[pe].a == v ? d.edges[pe].b : d.edges[pe].a;
            sub[p] += sub[v];
        }
    }
    for (int v : order) {
        int pe = parent_edge[v];
        if (pe < 0) continue;
        auto& e = d.edges[pe];
        int p = e.a == v ? e.b : e.a;
        Rational side_child = sub[v], side_parent = total - sub[v];
        int from, to;
        if (side_child < side_parent) {
            from = v, to = p;
        } else if (side_parent < side_child) {
            from = p, to = v;
        } else {
            e.tie = true;
            to = std::min(v, p);
            from = std::max(v, p);
        }
        e.a = from;
        e.b = to;
        e.directed = true;
    }
    std::vector<int> sinks;
    for (int v : d.vertices) {
        bool out = false;
        for (int ei : adj[v])
            if (d.edges[ei].a == v) out = true;
        if (!out) sinks.push_back(v);
    }
    if (sinks.size() != 1)
        throw Error("CentralityViolation", std::to_string(sinks.size()) + " sinks in the directed dual tree");
    d.central = sinks[0];
    return d;
}

std::string dual_tree_dot(const DualTree& t, const Arrangement& arr) {
    std::ostringstream os;
    os << "digraph dual_tree {\n  node [shape=circle, fontname=\"Helvetica\"];\n";
    for (int v : t.vertices) {
        os << "  f" << v << " [label=\"f" << v << "\\n" << to_string(arr.faces[v].area) << "\"";
        if (t.central && *t.central == v) os << ", shape=doublecircle, style=filled, fillcolor=\"#ffe08a\"";
        os << "];\n";
    }
    for (const auto& e : t.edges) {
        os << "  f" << e.a << " -> f" << e.b << " [label=\"b" << e.carrier << "\"";
        if (!e.directed) os << ", dir=none";
        if (e.tie) os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace bc
