#pragma once

// Bestvina-Fujiwara style quasimorphisms over graph actions.
//
// Backends are Cayley graphs with generator-labelled edges, plus the Farey
// graph under PSL(2,Z) truncated to a height ball. Labelled backends give
// exact values; the Farey backend gives intervals.

#include "balcurve/farey.hpp"
#include "balcurve/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace bc {

// Free group: reduced word. Cycle: {k}. Farey: {p, q}.
using Vertex = std::vector<std::int64_t>;
// Letters +-1 .. +-generators(); negative letters are inverses.
using GroupWord = std::vector<int>;

class GraphAction {
public:
    virtual ~GraphAction() = default;
    virtual std::string name() const = 0;
    virtual int generators() const = 0;
    virtual Vertex basepoint() const = 0;
    virtual Vertex act(const GroupWord& g, const Vertex& v) const = 0;
    virtual int distance(const Vertex& a, const Vertex& b) const = 0;
    virtual std::vector<Vertex> neighbors(const Vertex& v) const = 0;
    // Cayley graphs: edges carry generator letters and copies are label matches.
    virtual bool labelled() const = 0;
    // Height of the ball the path search is confined to; 0 for exact backends.
    virtual int truncation() const { return 0; }
    virtual std::string format(const Vertex& v) const;
    virtual Vertex parse_vertex(const std::string& text) const;
};

std::unique_ptr<GraphAction> free_group_backend(int rank);
std::unique_ptr<GraphAction> integer_line_backend();
std::unique_ptr<GraphAction> cycle_backend(int n);
// Generators: letter 1 is T = [[1,1],[0,1]], letter 2 is S = [[0,-1],[1,0]].
std::unique_ptr<GraphAction> farey_backend(int max_height);
// "free:2", "line", "cycle:6", "farey:20". Throws InvalidArgument.
std::unique_ptr<GraphAction> make_backend(const std::string& spec);

// "a b A" or "abA": a = 1, b = 2, ..., capitals are inverses; "e" or "" is the identity.
GroupWord parse_group_word(const std::string& text);
std::string group_word_to_string(const GroupWord& g);
GroupWord group_inverse(const GroupWord& g);
GroupWord group_power(const GroupWord& g, int n);

// A finite oriented path: letters on labelled backends, vertices otherwise.
struct PathWord {
    std::vector<int> letters;
    std::vector<Vertex> vertices;
    int length() const;
    PathWord reversed() const;
};
// Labelled: a group word. Farey: "1/0,0/1,1/1".
PathWord parse_path(const GraphAction& backend, const std::string& text);
std::string path_to_string(const GraphAction& backend, const PathWord& w);
// The path read off a group word starting at v.
PathWord path_of(const GraphAction& backend, const GroupWord& g, const Vertex& v);

// Maximal number of non-overlapping copies (greedy, left to right).
int count_copies(const PathWord& path, const PathWord& w, const GraphAction& backend);

struct Interval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
};
std::string to_string(const Interval& v);

// d(x,y) - inf over paths a of (|a| - R |a|_w). Throws InvalidR or TruncationTooSmall.
Interval c_wR(const Vertex& x, const Vertex& y, const PathWord& w, int R, const GraphAction& backend);

struct QmReport {
    Interval h;
    int R = 1;
    Vertex basepoint;
    int truncation = 0;
};
QmReport h_w(const GroupWord& g, const PathWord& w, int R, const Vertex& basepoint,
             const GraphAction& backend);
std::string format_report(const GraphAction& backend, const QmReport& r);

struct Homogenized {
    Rational estimate, error;
    bool arithmetic = false;  // h(g^n) eventually arithmetic: estimate is the exact limit
    std::vector<Rational> terms;
};
// Throws NotExact on truncated backends.
Homogenized homogenize(const GroupWord& g, const PathWord& w, int R, const Vertex& basepoint,
                       const GraphAction& backend, int n_max, const Rational& defect_bound = 0);

// Lower bound on the defect: max of |h(gh) - h(g) - h(h)| over the sample.
Rational defect_estimate(const PathWord& w, int R, const GraphAction& backend,
                         const std::vector<std::pair<GroupWord, GroupWord>>& sample);

// Max over the sample of |h_w(g) at x0 - h_w(g) at y0|.
Rational basepoint_drift(const PathWord& w, int R, const Vertex& x0, const Vertex& y0,
                         const GraphAction& backend, const std::vector<GroupWord>& sample);

std::vector<GroupWord> random_group_words(int generators, int count, int max_len, std::uint64_t seed);

struct RankTest {
    std::vector<std::vector<Rational>> matrix;  // rows: words w_k, columns: test elements
    int rank = 0;
    bool all_exact = true;
};
// Family w_k = a b^k against test elements a b^j, k, j = 1..size, on the free group of rank 2.
RankTest rank_test(int size, int R, int n_max);
int rational_rank(std::vector<std::vector<Rational>> m);

}  // namespace bc
