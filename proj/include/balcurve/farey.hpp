#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bc {

// Vertex of the Farey graph: p/q in lowest terms, identified with -p/-q.
// Normal form has q > 0, or (p, q) = (1, 0) for the slope at infinity.
struct Slope {
    std::int64_t p = 0, q = 1;
    bool operator==(const Slope&) const = default;
    bool operator<(const Slope& o) const { return p < o.p || (p == o.p && q < o.q); }
};

Slope make_slope(std::int64_t p, std::int64_t q);  // throws InvalidArgument for 0/0
Slope parse_slope(const std::string& text);         // "p/q", "p", "1/0"
std::string to_string(const Slope& s);
std::int64_t height(const Slope& s);
bool farey_adjacent(const Slope& a, const Slope& b);

struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    bool operator==(const Mat2&) const = default;
};
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 mat_pow(const Mat2& m, int n);
Mat2 mat_inverse(const Mat2& m);  // unimodular only
std::int64_t det(const Mat2& m);
Mat2 parse_matrix(const std::string& text);  // "a,b;c,d"
std::string to_string(const Mat2& m);

// Projective action on column (p, q). Throws NotUnimodular.
Slope mcg_action(const Mat2& m, const Slope& s);
bool is_pseudo_anosov(const Mat2& m);

// Graph distance via the continued-fraction ladder of b relative to a.
int farey_distance(const Slope& a, const Slope& b);

// Plain BFS over slopes of height at most max(height(a), height(b)).
// Throws CapExceeded when the distance is larger than cap.
int farey_bfs(const Slope& a, const Slope& b, int cap);

// All slopes of height <= h, and BFS distances from `source` inside that set.
std::vector<Slope> slopes_up_to(std::int64_t h);
std::vector<Slope> farey_neighbors(const Slope& s, std::int64_t max_height);

struct OrbitRow {
    int n = 0;
    Slope image;
    int distance = 0;
};
std::vector<OrbitRow> orbit_growth(const Mat2& m, const Slope& s0, int n_max);
// Least-squares slope of distance against n.
double fitted_slope(const std::vector<OrbitRow>& rows);

}  // namespace bc
