#pragma once

#include "balcurve/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bc {

enum class Label { Alpha = 0, Beta = 1 };

struct Run {
    Label label;
    int carrier;
    bool operator==(const Run&) const = default;
};

struct HalfEdge {
    int origin = -1, twin = -1, next = -1, face = -1, cycle = -1;
    Label label = Label::Alpha;
    int carrier = 0;
    bool forward = true;  // agrees with the direction of its piece
};

struct Face {
    int id = 0;
    Rational area;
    std::vector<int> cycles;  // first entry is the outer cycle unless unbounded
    std::vector<Run> runs;    // maximal runs over all boundary cycles
    bool contains_infinity = false;
    std::size_t sides() const { return runs.size(); }
};

struct Arrangement {
    std::vector<RatPoint> nodes;
    std::vector<HalfEdge> half_edges;
    std::vector<std::vector<int>> cycles;  // half-edge ids per boundary cycle
    std::vector<Rational> cycle_area;      // signed
    std::vector<Face> faces;
    int components = 0;                    // connected components of alpha ∪ beta
    int alpha_carriers = 0, beta_carriers = 0;
    bool alpha_closed = true, beta_closed = true;
    std::vector<Crossing> crossings;
    std::vector<RatPoint> alpha_pts, beta_pts;

    int unbounded_face() const;
    int locate(const RatPoint& p) const;  // p must avoid both pieces
    std::vector<RatPoint> cycle_polygon(int cycle) const;
    int vertex_count() const { return static_cast<int>(nodes.size()); }
    int edge_count() const { return static_cast<int>(half_edges.size() / 2); }
};

Arrangement build_arrangement(ChainRef alpha, ChainRef beta);

// Faces with exactly one alpha run and one beta run.
std::vector<Face> bigon_faces(const Arrangement& arr);
int non_bigon_count(const Arrangement& arr);

enum class SideSelector { Inside, Outside };

struct TreeEdge {
    int a = -1, b = -1;  // face ids; after direction, the arrow points a -> b
    int carrier = -1;
    bool directed = false;
    bool tie = false;
};

struct DualTree {
    std::vector<int> vertices;  // face ids
    std::vector<TreeEdge> edges;
    std::optional<int> central;
};

DualTree dual_tree(const Arrangement& arr, std::optional<SideSelector> side = std::nullopt);
DualTree direct_and_center(const DualTree& t, const Arrangement& arr);

// Is the face on the given side of the closed alpha curve?
bool face_on_side(const Arrangement& arr, int face, SideSelector side);

std::string dual_tree_dot(const DualTree& t, const Arrangement& arr);

}  // namespace bc
