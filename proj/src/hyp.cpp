#include "balcurve/hyp.hpp"

#include "balcurve/farey.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

namespace bc {

void Graph::add_edge(int a, int b) {
    if (a == b) return;
    if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) return;
    adj[a].push_back(b);
    adj[b].push_back(a);
}

namespace {

std::string label(const Graph& g, int v) {
    return v < static_cast<int>(g.labels.size()) ? g.labels[v] : std::to_string(v);
}

Graph blank(int n) {
    Graph g;
    g.adj.assign(n, {});
    for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
    return g;
}

std::vector<int> bfs(const Graph& g, int src, std::vector<int>* parent = nullptr) {
    std::vector<int> dist(g.size(), -1);
    if (parent) parent->assign(g.size(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        std::vector<int> nb = g.adj[u];
        std::sort(nb.begin(), nb.end());
        for (int v : nb)
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                if (parent) (*parent)[v] = u;
                q.push_back(v);
            }
    }
    return dist;
}

// Geodesic from x to y read off the BFS tree rooted at x.
std::vector<int> geodesic(const std::vector<int>& parent_from_x, int y) {
    std::vector<int> path;
    for (int v = y; v >= 0; v = parent_from_x[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

bool connected_subset(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) return false;
    std::vector<char> in(g.size(), 0), seen(g.size(), 0);
    for (int v : s) in[v] = 1;
    std::deque<int> q{s[0]};
    seen[s[0]] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : g.adj[u])
            if (in[v] && !seen[v]) {
                seen[v] = 1;
                ++count;
                q.push_back(v);
            }
    }
    std::vector<int> uniq = s;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    return count == static_cast<int>(uniq.size());
}

}  // namespace

Graph cycle_graph(int n) {
    Graph g = blank(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g = blank(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph tree_graph(int branching, int depth) {
    Graph g = blank(1);
    std::vector<int> level{0};
    for (int d = 0; d < depth; ++d) {
        std::vector<int> next;
        for (int p : level)
            for (int c = 0; c < branching; ++c) {
                int v = g.size();
                g.adj.emplace_back();
                g.labels.push_back(std::to_string(v));
                g.add_edge(p, v);
                next.push_back(v);
            }
        level = std::move(next);
    }
    return g;
}

Graph farey_ball(int max_den) {
    std::vector<Slope> vs{make_slope(1, 0)};
    for (std::int64_t q = 1; q <= max_den; ++q)
        for (std::int64_t p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1) vs.push_back({p, q});
    std::sort(vs.begin(), vs.end());
    Graph g = blank(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) {
        g.labels[i] = to_string(vs[i]);
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (farey_adjacent(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int n = 0, declared = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            if (!(ls >> declared) || declared < 0) throw Error("ParseError", "bad vertex count line: " + line);
            continue;
        }
        int a = 0, b = 0;
        try {
            a = std::stoi(first);
        } catch (const std::logic_error&) {
            throw Error("ParseError", "bad edge line: " + line);
        }
        if (!(ls >> b) || a < 0 || b < 0) throw Error("ParseError", "bad edge line: " + line);
        edges.push_back({a, b});
        n = std::max({n, a + 1, b + 1});
    }
    if (declared >= 0) {
        if (n > declared) throw Error("ParseError", "edge endpoint " + std::to_string(n - 1) + " exceeds n " + std::to_string(declared));
        n = declared;
    }
    Graph g = blank(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

std::vector<std::vector<int>> all_distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    for (int v = 0; v < g.size(); ++v) {
        d.push_back(bfs(g, v));
        for (int x : d.back())
            if (x < 0) {
                throw Error("Disconnected", "vertex " + label(g, v) + " does not reach every vertex");
            }
    }
    return d;
}

Rational four_point_delta(const Graph& g) {
    auto d = all_distances(g);
    const int n = g.size();
    int twice = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                for (int w = z + 1; w < n; ++w) {
                    int s[3] = {d[x][y] + d[z][w], d[x][z] + d[y][w], d[x][w] + d[y][z]};
                    std::sort(s, s + 3);
                    twice = std::max(twice, s[2] - s[1]);
                }
    return Rational(twice) / 2;
}

Rational slim_delta_sampled(const Graph& g, int samples, std::uint64_t seed) {
    auto d = all_distances(g);
    const int n = g.size();
    std::vector<std::vector<int>> parent(n);
    for (int v = 0; v < n; ++v) bfs(g, v, &parent[v]);
    auto side = [&](int a, int b) { return geodesic(parent[a], b); };
    auto triangle = [&](int x, int y, int z) {
        std::vector<int> sides[3] = {side(x, y), side(y, z), side(z, x)};
        int worst = 0;
        for (int i = 0; i < 3; ++i)
            for (int p : sides[i]) {
                int near = n;
                for (int j = 0; j < 3; ++j)
                    if (j != i)
                        for (int q : sides[j]) near = std::min(near, d[p][q]);
                worst = std::max(worst, near);
            }
        return worst;
    };
    int worst = 0;
    const double total = double(n) * n * n;
    if (samples <= 0 || total <= samples) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) worst = std::max(worst, triangle(x, y, z));
        return Rational(worst);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < samples; ++i) {
        int x = pick(rng), y = pick(rng), z = pick(rng);
        worst = std::max(worst, triangle(x, y, z));
    }
    return Rational(worst);
}

GuessFamily geodesic_family(const Graph& g) {
    auto parents = std::make_shared<std::vector<std::vector<int>>>(g.size());
    for (int v = 0; v < g.size(); ++v) bfs(g, v, &(*parents)[v]);
    return [parents](int x, int y) { return geodesic((*parents)[x], y); };
}

GGCheck gg_verify(const Graph& g, const GuessFamily& L, const Rational& lambda) {
    auto d = all_distances(g);
    const int n = g.size();
    std::vector<std::vector<std::vector<int>>> sets(n, std::vector<std::vector<int>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            sets[x][y] = L(x, y);
            const auto& s = sets[x][y];
            if (std::find(s.begin(), s.end(), x) == s.end() || std::find(s.begin(), s.end(), y) == s.end())
                throw Error("LMissingEndpoints", "L(" + label(g, x) + "," + label(g, y) + ")");
            if (!connected_subset(g, s))
                throw Error("LNotConnected", "L(" + label(g, x) + "," + label(g, y) + ")");
        }
    GGCheck out;
    for (int x = 0; x < n && out.ok; ++x)
        for (int y = 0; y < n && out.ok; ++y) {
            if (d[x][y] > 1) continue;
            for (int a : sets[x][y])
                for (int b : sets[x][y])
                    if (Rational(d[a][b]) > lambda && out.ok) {
                        out.ok = false;
                        out.failure = "diam L(" + label(g, x) + "," + label(g, y) + ") exceeds lambda";
                    }
        }
    for (int x = 0; x < n && out.ok; ++x)
        for (int y = 0; y < n && out.ok; ++y)
            for (int z = 0; z < n && out.ok; ++z)
                for (int p : sets[x][y]) {
                    int near = n;
                    for (int q : sets[x][z]) near = std::min(near, d[p][q]);
                    for (int q : sets[z][y]) near = std::min(near, d[p][q]);
                    if (Rational(near) > lambda) {
                        out.ok = false;
                        out.failure = "L(" + label(g, x) + "," + label(g, y) + ") is not within lambda of L(" +
                                      label(g, x) + "," + label(g, z) + ") and L(" + label(g, z) + "," +
                                      label(g, y) + ")";
                        break;
                    }
                }
    return out;
}

GGParams gg_delta_bound(const Rational& lambda) {
    if (lambda < 0) throw Error("InvalidArgument", "lambda must be nonnegative");
    GGParams out;
    out.lambda = lambda;
    // With lambda = a/b, the inequality reads (m + 2)^(2a) <= 2^(m b - 12 a).
    const mpz_class a = lambda.get_num(), b = lambda.get_den();
    if (a > 1000) throw Error("InvalidArgument", "lambda numerator too large for the exact search");
    const unsigned long ea = 2 * a.get_ui();
    for (unsigned long m = 0;; ++m) {
        bool ok;
        if (a == 0) {
            ok = true;
        } else {
            mpz_class expo = b * m - 12 * a;
            if (expo < 0) {
                ok = false;
            } else {
                mpz_class lhs, rhs;
                mpz_ui_pow_ui(lhs.get_mpz_t(), m + 2, ea);
                mpz_ui_pow_ui(rhs.get_mpz_t(), 2, expo.get_ui());
                ok = lhs <= rhs;
            }
        }
        if (ok) {
            out.m = Rational(static_cast<long>(m));
            Rational db = (3 * out.m - 10 * lambda) / 2;
            out.delta_bound = db < 0 ? Rational(0) : db;
            return out;
        }
    }
}

Rational frag_lower_bound(const Rational& phi_f, const Rational& defect) {
    if (defect <= 0) throw Error("ZeroDefect", "the defect must be positive");
    return (phi_f - defect) / defect;
}

}  // namespace bc
