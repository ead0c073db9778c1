#pragma once

#include "balcurve/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bc {

struct Graph {
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels;
    int size() const { return static_cast<int>(adj.size()); }
    void add_edge(int a, int b);
};

Graph cycle_graph(int n);
Graph path_graph(int n);
// Balanced tree: `depth` levels below the root, each vertex with `branching` children.
Graph tree_graph(int branching, int depth);
// Slopes p/q in [0, 1] with q <= max_den, plus 1/0, joined when |ps - qr| = 1.
Graph farey_ball(int max_den);
// Edge list text: optional "n <count>" line, then "a b" pairs.
Graph parse_graph(const std::string& text);

// All-pairs BFS distances. Throws Disconnected.
std::vector<std::vector<int>> all_distances(const Graph& g);

// Max over 4-tuples of half the gap between the two largest pair sums.
Rational four_point_delta(const Graph& g);

// One BFS geodesic per ordered pair (first discovered parent, lowest index
// first). Samples `samples` random triangles, or all of them when that is fewer.
Rational slim_delta_sampled(const Graph& g, int samples, std::uint64_t seed);

// Candidate family: vertex set of L(x, y).
using GuessFamily = std::function<std::vector<int>(int x, int y)>;
GuessFamily geodesic_family(const Graph& g);

struct GGCheck {
    bool ok = true;
    std::string failure;  // first violated condition
};
// Checks L(x,y) within lambda of L(x,z) and L(z,y) for all triples, and
// diam L(x,y) <= lambda when d(x,y) <= 1. Throws LNotConnected, LMissingEndpoints.
GGCheck gg_verify(const Graph& g, const GuessFamily& L, const Rational& lambda);

struct GGParams {
    Rational lambda, m, delta_bound;
};
// Least integer m with 2 lambda (6 + log2(m + 2)) <= m, decided exactly, and
// delta_bound = max(0, (3m - 10 lambda) / 2).
GGParams gg_delta_bound(const Rational& lambda);

// (phi_f - D) / D. Throws ZeroDefect when D <= 0.
Rational frag_lower_bound(const Rational& phi_f, const Rational& defect);

}  // namespace bc
