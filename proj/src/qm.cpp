#include "balcurve/qm.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace bc {

namespace {

using i64 = std::int64_t;

GroupWord reduce(const GroupWord& w) {
    GroupWord out;
    for (int s : w) {
        if (!out.empty() && out.back() == -s)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

class LabelledAction : public GraphAction {
public:
    bool labelled() const override { return true; }
    // Right multiplication by one generator letter: the edge labelled s at v.
    virtual Vertex step(const Vertex& v, int s) const = 0;
    virtual bool is_tree() const { return false; }
};

class FreeGroupAction : public LabelledAction {
public:
    FreeGroupAction(int rank, bool line) : rank_(rank), line_(line) {}
    std::string name() const override { return line_ ? "line" : "free:" + std::to_string(rank_); }
    int generators() const override { return rank_; }
    Vertex basepoint() const override { return {}; }
    bool is_tree() const override { return true; }
    Vertex act(const GroupWord& g, const Vertex& v) const override {
        GroupWord w = g;
        w.insert(w.end(), v.begin(), v.end());
        GroupWord r = reduce(w);
        return Vertex(r.begin(), r.end());
    }
    Vertex step(const Vertex& v, int s) const override {
        Vertex out = v;
        if (!out.empty() && out.back() == -s)
            out.pop_back();
        else
            out.push_back(s);
        return out;
    }
    int distance(const Vertex& a, const Vertex& b) const override { return static_cast<int>(geodesic(a, b).size()); }
    // Labels of the geodesic from a to b.
    GroupWord geodesic(const Vertex& a, const Vertex& b) const {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        GroupWord out;
        for (std::size_t i = a.size(); i > k; --i) out.push_back(static_cast<int>(-a[i - 1]));
        for (std::size_t i = k; i < b.size(); ++i) out.push_back(static_cast<int>(b[i]));
        return out;
    }
    std::vector<Vertex> neighbors(const Vertex& v) const override {
        std::vector<Vertex> out;
        for (int s = 1; s <= rank_; ++s)
            for (int sg : {s, -s}) out.push_back(step(v, sg));
        return out;
    }
    std::string format(const Vertex& v) const override {
        if (line_) {
            i64 k = 0;
            for (i64 s : v) k += s;
            return std::to_string(k);
        }
        return group_word_to_string(GroupWord(v.begin(), v.end()));
    }
    Vertex parse_vertex(const std::string& text) const override {
        if (line_) {
            Rational q = parse_rational(text);
            if (q.get_den() != 1) throw Error("ParseError", "line vertex must be an integer: " + text);
            long k = q.get_num().get_si();
            return Vertex(static_cast<std::size_t>(std::labs(k)), k < 0 ? -1 : 1);
        }
        GroupWord g = reduce(parse_group_word(text));
        for (int s : g)
            if (std::abs(s) > rank_) throw Error("ParseError", "letter out of range in " + text);
        return Vertex(g.begin(), g.end());
    }

private:
    int rank_;
    bool line_;
};

class CycleAction : public LabelledAction {
public:
    explicit CycleAction(int n) : n_(n) {}
    std::string name() const override { return "cycle:" + std::to_string(n_); }
    int generators() const override { return 1; }
    Vertex basepoint() const override { return {0}; }
    Vertex act(const GroupWord& g, const Vertex& v) const override {
        i64 k = v.at(0);
        for (int s : g) k += s > 0 ? 1 : -1;
        return {((k % n_) + n_) % n_};
    }
    Vertex step(const Vertex& v, int s) const override { return act({s}, v); }
    int distance(const Vertex& a, const Vertex& b) const override {
        i64 k = ((b.at(0) - a.at(0)) % n_ + n_) % n_;
        return static_cast<int>(std::min<i64>(k, n_ - k));
    }
    std::vector<Vertex> neighbors(const Vertex& v) const override { return {step(v, 1), step(v, -1)}; }
    std::string format(const Vertex& v) const override { return std::to_string(v.at(0)); }
    Vertex parse_vertex(const std::string& text) const override {
        Rational q = parse_rational(text);
        if (q.get_den() != 1) throw Error("ParseError", "cycle vertex must be an integer: " + text);
        return act({}, {q.get_num().get_si()});
    }

private:
    int n_;
};

const Mat2 kT{1, 1, 0, 1};
const Mat2 kS{0, -1, 1, 0};

class FareyAction : public GraphAction {
public:
    explicit FareyAction(int h) : h_(h) {}
    std::string name() const override { return "farey:" + std::to_string(h_); }
    int generators() const override { return 2; }
    Vertex basepoint() const override { return {1, 0}; }
    bool labelled() const override { return false; }
    int truncation() const override { return h_; }
    static Slope slope(const Vertex& v) { return make_slope(v.at(0), v.at(1)); }
    static Vertex vertex(const Slope& s) { return {s.p, s.q}; }
    Vertex act(const GroupWord& g, const Vertex& v) const override {
        Slope s = slope(v);
        for (auto it = g.rbegin(); it != g.rend(); ++it) {
            int a = std::abs(*it);
            if (a != 1 && a != 2) throw Error("InvalidArgument", "the Farey backend has generators a and b");
            Mat2 m = a == 1 ? kT : kS;
            if (*it < 0) m = mat_inverse(m);
            s = mcg_action(m, s);
        }
        return vertex(s);
    }
    int distance(const Vertex& a, const Vertex& b) const override { return farey_distance(slope(a), slope(b)); }
    std::vector<Vertex> neighbors(const Vertex& v) const override {
        std::vector<Vertex> out;
        for (const auto& s : farey_neighbors(slope(v), h_)) out.push_back(vertex(s));
        return out;
    }
    std::string format(const Vertex& v) const override { return to_string(slope(v)); }
    Vertex parse_vertex(const std::string& text) const override { return vertex(parse_slope(text)); }

private:
    int h_;
};

// Turn at v on the path u -> v -> x, as seen after moving (u, v) to (1/0, 0/1):
// x goes to 1/k and the label is k, with 0 for backtracking.
i64 turn_label(const Slope& u, const Slope& v, const Slope& x) {
    i64 dt = u.p * v.q - u.q * v.p;
    if (dt != 1 && dt != -1) throw Error("InvalidPath", to_string(u) + " and " + to_string(v) + " are not adjacent");
    Mat2 a{u.p, v.p * dt, u.q, v.q * dt};  // det 1, sends 1/0 to u and 0/1 to v
    Slope y = mcg_action(mat_inverse(a), x);
    if (y.q == 0) return 0;
    if (y.p != 1 && y.p != -1) throw Error("InvalidPath", to_string(v) + " and " + to_string(x) + " are not adjacent");
    return y.q * y.p;
}

// Greedy copy automaton. State j = number of edges of the current partial copy.
// Labelled paths match letters; Farey paths match turn labels, the first edge
// of a copy being free.
struct Automaton {
    int m = 0;
    bool turns = false;
    std::vector<i64> pat;
    std::vector<int> fail;

    Automaton(const PathWord& w, bool labelled) : m(w.length()), turns(!labelled) {
        if (labelled) {
            pat.assign(w.letters.begin(), w.letters.end());
        } else {
            for (std::size_t i = 1; i + 1 < w.vertices.size(); ++i)
                pat.push_back(turn_label(FareyAction::slope(w.vertices[i - 1]), FareyAction::slope(w.vertices[i]),
                                         FareyAction::slope(w.vertices[i + 1])));
        }
        fail.assign(pat.size(), 0);
        for (std::size_t i = 1, k = 0; i < pat.size(); ++i) {
            while (k > 0 && pat[i] != pat[k]) k = fail[k - 1];
            if (pat[i] == pat[k]) ++k;
            fail[i] = static_cast<int>(k);
        }
    }

    int kmp(int q, i64 s) const {
        while (q > 0 && pat[q] != s) q = fail[q - 1];
        if (pat[q] == s) ++q;
        return q;
    }

    // Returns the next state; `done` reports a completed copy (state is then 0).
    int next(int j, i64 symbol, bool& done) const {
        int nj;
        if (!turns)
            nj = kmp(j, symbol);
        else if (j == 0)
            nj = 1;
        else
            nj = kmp(j - 1, symbol) + 1;
        done = nj == m;
        return done ? 0 : nj;
    }
};

void check_path(const GraphAction& backend, const PathWord& w) {
    if (backend.labelled()) {
        for (int s : w.letters)
            if (s == 0 || std::abs(s) > backend.generators())
                throw Error("InvalidPath", "letter out of range for " + backend.name());
        return;
    }
    if (w.vertices.empty()) throw Error("InvalidPath", "empty vertex path");
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        if (backend.distance(w.vertices[i], w.vertices[i + 1]) != 1)
            throw Error("InvalidPath", backend.format(w.vertices[i]) + " and " + backend.format(w.vertices[i + 1]) +
                                           " are not adjacent");
}

// ---------------------------------------------------------------- min-plus tables

constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;

struct Table {
    int n = 0;
    std::vector<i64> a;
    explicit Table(int n_ = 0, i64 fill = kInf) : n(n_), a(static_cast<std::size_t>(n_) * n_, fill) {}
    i64& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    i64 at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    bool operator==(const Table& o) const { return a == o.a; }
};

i64 add(i64 x, i64 y) { return (x >= kInf || y >= kInf) ? kInf : x + y; }

Table mul(const Table& x, const Table& y) {
    Table r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (x.at(i, k) >= kInf) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) = std::min(r.at(i, j), add(x.at(i, k), y.at(k, j)));
        }
    return r;
}

Table plus(const Table& x, const Table& y) {
    Table r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = std::min(x.a[i], y.a[i]);
    return r;
}

// Closure: cheapest sequence of zero or more steps.
Table star(Table x) {
    for (int i = 0; i < x.n; ++i) x.at(i, i) = std::min<i64>(x.at(i, i), 0);
    for (int k = 0; k < x.n; ++k)
        for (int i = 0; i < x.n; ++i)
            for (int j = 0; j < x.n; ++j) x.at(i, j) = std::min(x.at(i, j), add(x.at(i, k), x.at(k, j)));
    for (int i = 0; i < x.n; ++i)
        if (x.at(i, i) < 0) throw Error("InternalError", "negative cycle in the copy automaton");
    return x;
}

// Cost of walks in the free group tree: every edge costs 1, every completed copy refunds R.
i64 tree_infimum(const FreeGroupAction& fg, const GroupWord& geo, const Automaton& au, int R) {
    const int q = au.m;
    const int r = fg.generators();
    auto idx = [r](int s) { return s > 0 ? s - 1 : r - s - 1; };
    std::vector<Table> T(2 * r, Table(q));
    for (int s = -r; s <= r; ++s) {
        if (s == 0) continue;
        for (int j = 0; j < q; ++j) {
            bool done = false;
            int nj = au.next(j, s, done);
            T[idx(s)].at(j, nj) = done ? 1 - R : 1;
        }
    }
    // X[s]: leave along s, wander without recrossing that edge, come back.
    std::vector<Table> X(2 * r, Table(q));
    for (int iter = 0;; ++iter) {
        if (iter > 10000) throw Error("InternalError", "excursion tables did not stabilize");
        std::vector<Table> Y(2 * r, Table(q));
        for (int s = -r; s <= r; ++s) {
            if (s == 0) continue;
            Table inner(q);
            for (int t = -r; t <= r; ++t)
                if (t != 0 && t != -s) inner = plus(inner, X[idx(t)]);
            Y[idx(s)] = mul(mul(T[idx(s)], star(inner)), T[idx(-s)]);
        }
        if (Y == X) break;
        X = std::move(Y);
    }
    Table all(q);
    for (const auto& x : X) all = plus(all, x);
    Table K = star(all);
    std::vector<i64> v(q, kInf);
    v[0] = 0;
    auto apply = [&](const Table& t) {
        std::vector<i64> out(q, kInf);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) out[j] = std::min(out[j], add(v[i], t.at(i, j)));
        v = std::move(out);
    };
    apply(K);
    for (int s : geo) {
        apply(T[idx(s)]);
        apply(K);
    }
    return *std::min_element(v.begin(), v.end());
}

// Dijkstra over (previous vertex, vertex, automaton state) with potential R*j,
// which makes every reduced edge cost positive. Costs are scaled by m.
// Returns the scaled infimum, or kInf when y is unreachable.
i64 search_infimum(const GraphAction& backend, const Vertex& x, const Vertex& y, const Automaton& au, int R,
                   const std::vector<Vertex>& universe) {
    const i64 m = au.m;
    std::map<Vertex, int> index;
    for (const auto& v : universe) index.emplace(v, static_cast<int>(index.size()));
    const int n = static_cast<int>(universe.size());
    auto ix = index.find(x), iy = index.find(y);
    if (ix == index.end() || iy == index.end()) return kInf;
    const auto* lab = dynamic_cast<const LabelledAction*>(&backend);

    // edges: (target, letter) per vertex
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < n; ++i) {
        if (lab) {
            for (int s = 1; s <= backend.generators(); ++s)
                for (int sg : {s, -s}) {
                    auto it = index.find(lab->step(universe[i], sg));
                    if (it != index.end()) adj[i].push_back({it->second, sg});
                }
        } else {
            for (const auto& v : backend.neighbors(universe[i])) {
                auto it = index.find(v);
                if (it != index.end()) adj[i].push_back({it->second, 0});
            }
        }
    }
    // state key: ((prev + 1) * n + cur) * m + j; prev is only tracked for turn labels
    auto key = [&](int prev, int cur, int j) -> i64 { return ((i64(prev) + 1) * n + cur) * m + j; };
    std::unordered_map<i64, i64> dist;
    using Item = std::pair<i64, i64>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    i64 start = key(-1, ix->second, 0);
    dist[start] = 0;
    pq.push({0, start});
    i64 best = kInf;
    while (!pq.empty()) {
        auto [dk, k] = pq.top();
        pq.pop();
        if (dk >= best) break;
        if (dist[k] != dk) continue;
        int j = static_cast<int>(k % m);
        int cur = static_cast<int>((k / m) % n);
        int prev = static_cast<int>((k / m) / n) - 1;
        if (cur == iy->second) best = std::min(best, dk + R * j);
        for (auto [nb, letter] : adj[cur]) {
            i64 symbol = letter;
            if (au.turns && j > 0)
                symbol = turn_label(FareyAction::slope(universe[prev]), FareyAction::slope(universe[cur]),
                                    FareyAction::slope(universe[nb]));
            bool done = false;
            int nj = au.next(j, symbol, done);
            i64 true_cost = done ? m - R * m : m;
            i64 reduced = true_cost - R * (i64(nj) - j);
            i64 nk = key(au.turns ? cur : -1, nb, nj);
            i64 nd = dk + reduced;
            auto it = dist.find(nk);
            if (it == dist.end() || nd < it->second) {
                dist[nk] = nd;
                pq.push({nd, nk});
            }
        }
    }
    return best;
}

}  // namespace

std::string GraphAction::format(const Vertex& v) const {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

Vertex GraphAction::parse_vertex(const std::string& text) const {
    throw Error("ParseError", "cannot parse vertex " + text + " for " + name());
}

std::unique_ptr<GraphAction> free_group_backend(int rank) {
    if (rank < 1 || rank > 26) throw Error("InvalidArgument", "free group rank must be in 1..26");
    return std::make_unique<FreeGroupAction>(rank, false);
}

std::unique_ptr<GraphAction> integer_line_backend() { return std::make_unique<FreeGroupAction>(1, true); }

std::unique_ptr<GraphAction> cycle_backend(int n) {
    if (n < 3) throw Error("InvalidArgument", "cycle needs at least 3 vertices");
    return std::make_unique<CycleAction>(n);
}

std::unique_ptr<GraphAction> farey_backend(int max_height) {
    if (max_height < 1) throw Error("InvalidArgument", "truncation height must be positive");
    return std::make_unique<FareyAction>(max_height);
}

std::unique_ptr<GraphAction> make_backend(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    int arg = 0;
    if (colon != std::string::npos) {
        try {
            arg = std::stoi(spec.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw Error("InvalidArgument", "bad backend parameter in " + spec);
        }
    }
    if (kind == "free") return free_group_backend(colon == std::string::npos ? 2 : arg);
    if (kind == "line") return integer_line_backend();
    if (kind == "cycle") return cycle_backend(colon == std::string::npos ? 6 : arg);
    if (kind == "farey") return farey_backend(colon == std::string::npos ? 20 : arg);
    throw Error("InvalidArgument", "unknown backend " + spec);
}

GroupWord parse_group_word(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t == "e" || t == "1") return {};
    GroupWord out;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') continue;
        if (ch >= 'a' && ch <= 'z')
            out.push_back(ch - 'a' + 1);
        else if (ch >= 'A' && ch <= 'Z')
            out.push_back(-(ch - 'A' + 1));
        else
            throw Error("ParseError", std::string("bad letter '") + ch + "' in " + text);
    }
    return out;
}

std::string group_word_to_string(const GroupWord& g) {
    if (g.empty()) return "e";
    std::string out;
    for (int s : g) out += s > 0 ? char('a' + s - 1) : char('A' - s - 1);
    return out;
}

GroupWord group_inverse(const GroupWord& g) {
    GroupWord out(g.rbegin(), g.rend());
    for (int& s : out) s = -s;
    return out;
}

GroupWord group_power(const GroupWord& g, int n) {
    GroupWord base = n < 0 ? group_inverse(g) : g;
    GroupWord out;
    for (int i = 0; i < std::abs(n); ++i) out.insert(out.end(), base.begin(), base.end());
    return reduce(out);
}

int PathWord::length() const {
    if (!vertices.empty()) return static_cast<int>(vertices.size()) - 1;
    return static_cast<int>(letters.size());
}

PathWord PathWord::reversed() const {
    PathWord out;
    out.letters = group_inverse(letters);
    out.vertices.assign(vertices.rbegin(), vertices.rend());
    return out;
}

PathWord parse_path(const GraphAction& backend, const std::string& text) {
    PathWord w;
    if (backend.labelled()) {
        w.letters = parse_group_word(text);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) w.vertices.push_back(backend.parse_vertex(item));
    }
    check_path(backend, w);
    return w;
}

std::string path_to_string(const GraphAction& backend, const PathWord& w) {
    if (backend.labelled()) return group_word_to_string(w.letters);
    std::string out;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) out += (i ? "," : "") + backend.format(w.vertices[i]);
    return out;
}

PathWord path_of(const GraphAction& backend, const GroupWord& g, const Vertex&) {
    if (!backend.labelled()) throw Error("InvalidArgument", backend.name() + " paths are vertex sequences");
    PathWord w;
    w.letters = g;
    return w;
}

int count_copies(const PathWord& path, const PathWord& w, const GraphAction& backend) {
    check_path(backend, path);
    check_path(backend, w);
    if (w.length() < 1) throw Error("InvalidPath", "w must have at least one edge");
    Automaton au(w, backend.labelled());
    int j = 0, copies = 0;
    bool done = false;
    if (backend.labelled()) {
        for (int s : path.letters) {
            j = au.next(j, s, done);
            copies += done;
        }
        return copies;
    }
    const auto& v = path.vertices;
    for (std::size_t i = 1; i < v.size(); ++i) {
        i64 t = 0;
        if (j > 0)
            t = turn_label(FareyAction::slope(v[i - 2]), FareyAction::slope(v[i - 1]), FareyAction::slope(v[i]));
        j = au.next(j, t, done);
        copies += done;
    }
    return copies;
}

std::string to_string(const Interval& v) {
    if (v.exact()) return to_string(v.lo);
    return "[" + to_string(v.lo) + ", " + to_string(v.hi) + "]";
}

Interval c_wR(const Vertex& x, const Vertex& y, const PathWord& w, int R, const GraphAction& backend) {
    check_path(backend, w);
    const int m = w.length();
    if (!(R > 0 && R < m)) throw Error("InvalidR", "need 0 < R < |w| = " + std::to_string(m));
    Automaton au(w, backend.labelled());
    const int d = backend.distance(x, y);
    if (const auto* fg = dynamic_cast<const FreeGroupAction*>(&backend)) {
        i64 inf = tree_infimum(*fg, fg->geodesic(x, y), au, R);
        Rational c(d - inf);
        return {c, c};
    }
    if (backend.truncation() == 0) {
        // finite graph: search everything reachable from x
        std::vector<Vertex> universe{x};
        std::set<Vertex> seen{x};
        for (std::size_t i = 0; i < universe.size(); ++i)
            for (const auto& v : backend.neighbors(universe[i]))
                if (seen.insert(v).second) universe.push_back(v);
        i64 inf = search_infimum(backend, x, y, au, R, universe);
        if (inf >= kInf) throw Error("InternalError", "target unreachable");
        Rational c = Rational(d) - Rational(inf) / m;
        return {c, c};
    }
    const int h = backend.truncation();
    for (const auto* v : {&x, &y})
        if (height(FareyAction::slope(*v)) > h)
            throw Error("TruncationTooSmall", backend.format(*v) + " lies outside the height-" + std::to_string(h) +
                                                  " ball");
    std::vector<Vertex> universe;
    for (const auto& s : slopes_up_to(h)) universe.push_back(FareyAction::vertex(s));
    i64 inf = search_infimum(backend, x, y, au, R, universe);
    if (inf >= kInf) throw Error("TruncationTooSmall", "no path inside the height-" + std::to_string(h) + " ball");
    // Paths leaving the ball can only lower the infimum; every path costs at least d(1 - R/m).
    Rational lo = Rational(d) - Rational(inf) / m;
    if (lo < 0) lo = 0;
    Rational hi = Rational(d * R) / m;
    return {lo, hi};
}

QmReport h_w(const GroupWord& g, const PathWord& w, int R, const Vertex& basepoint, const GraphAction& backend) {
    Vertex gx = backend.act(g, basepoint);
    Interval a = c_wR(basepoint, gx, w, R, backend);
    Interval b = c_wR(basepoint, gx, w.reversed(), R, backend);
    QmReport r;
    r.h = {a.lo - b.hi, a.hi - b.lo};
    r.R = R;
    r.basepoint = basepoint;
    r.truncation = backend.truncation();
    return r;
}

std::string format_report(const GraphAction& backend, const QmReport& r) {
    std::string out = "h = " + to_string(r.h) + "\nR = " + std::to_string(r.R) +
                      "\nbasepoint = " + backend.format(r.basepoint) + "\n";
    if (r.truncation > 0) out += "truncation = " + std::to_string(r.truncation) + "\n";
    return out;
}

Homogenized homogenize(const GroupWord& g, const PathWord& w, int R, const Vertex& basepoint,
                       const GraphAction& backend, int n_max, const Rational& defect_bound) {
    if (backend.truncation() > 0) throw Error("NotExact", backend.name() + " only yields intervals");
    if (n_max < 1) throw Error("InvalidArgument", "n_max must be positive");
    Homogenized out;
    for (int n = 1; n <= n_max; ++n) out.terms.push_back(h_w(group_power(g, n), w, R, basepoint, backend).h.lo);
    const int window = std::min(4, n_max - 1);
    if (window >= 2) {
        Rational diff = out.terms[n_max - 1] - out.terms[n_max - 2];
        bool same = true;
        for (int i = n_max - window; i < n_max; ++i) same = same && (out.terms[i] - out.terms[i - 1] == diff);
        if (same) {
            out.estimate = diff;
            out.error = 0;
            out.arithmetic = true;
            return out;
        }
    }
    out.estimate = out.terms.back() / n_max;
    out.error = 2 * defect_bound / n_max;
    return out;
}

Rational defect_estimate(const PathWord& w, int R, const GraphAction& backend,
                         const std::vector<std::pair<GroupWord, GroupWord>>& sample) {
    if (backend.truncation() > 0) throw Error("NotExact", backend.name() + " only yields intervals");
    Rational worst = 0;
    const Vertex x0 = backend.basepoint();
    for (const auto& [g, h] : sample) {
        GroupWord gh = g;
        gh.insert(gh.end(), h.begin(), h.end());
        Rational dv = h_w(gh, w, R, x0, backend).h.lo - h_w(g, w, R, x0, backend).h.lo -
                      h_w(h, w, R, x0, backend).h.lo;
        worst = std::max(worst, Rational(abs(dv)));
    }
    return worst;
}

Rational basepoint_drift(const PathWord& w, int R, const Vertex& x0, const Vertex& y0, const GraphAction& backend,
                         const std::vector<GroupWord>& sample) {
    if (backend.truncation() > 0) throw Error("NotExact", backend.name() + " only yields intervals");
    Rational worst = 0;
    if (x0 == y0) return worst;
    for (const auto& g : sample) {
        Rational dv = h_w(g, w, R, x0, backend).h.lo - h_w(g, w, R, y0, backend).h.lo;
        worst = std::max(worst, Rational(abs(dv)));
    }
    return worst;
}

std::vector<GroupWord> random_group_words(int generators, int count, int max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, std::max(1, max_len));
    std::uniform_int_distribution<int> letter(1, generators);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<GroupWord> out;
    for (int i = 0; i < count; ++i) {
        GroupWord g;
        int L = len(rng);
        while (static_cast<int>(g.size()) < L) {
            int s = letter(rng) * (sign(rng) ? 1 : -1);
            if (!g.empty() && g.back() == -s) continue;
            g.push_back(s);
        }
        out.push_back(g);
    }
    return out;
}

int rational_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

RankTest rank_test(int size, int R, int n_max) {
    auto fg = free_group_backend(2);
    RankTest out;
    for (int k = 1; k <= size; ++k) {
        PathWord w;
        w.letters = {1};
        w.letters.insert(w.letters.end(), k, 2);
        std::vector<Rational> row;
        for (int j = 1; j <= size; ++j) {
            GroupWord g{1};
            g.insert(g.end(), j, 2);
            Homogenized hz = homogenize(g, w, R, fg->basepoint(), *fg, n_max);
            out.all_exact = out.all_exact && hz.arithmetic;
            row.push_back(hz.estimate);
        }
        out.matrix.push_back(row);
    }
    out.rank = rational_rank(out.matrix);
    return out;
}

}  // namespace bc
