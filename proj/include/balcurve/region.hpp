#pragma once

// Vertical trapezoid decomposition of a wall set, region growing over it with
// per-group crossing budgets, and exact-area realization of the grown region
// as a simple rational polygon.

#include "balcurve/geometry.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace bc {

struct Wall {
    RatPoint a, b;
    bool forbidden = true;
    std::vector<int> groups;  // crossable walls: each group allows one tree crossing
    int source = -1;
    std::size_t seg = 0;
};

struct ChainPos {
    std::size_t seg = 0;
    Rational t;
    bool operator==(const ChainPos& o) const { return seg == o.seg && t == o.t; }
    bool operator<(const ChainPos& o) const { return seg < o.seg || (seg == o.seg && t < o.t); }
};

struct SubSegment {
    RatPoint a, b;
    std::size_t seg = 0;
    Rational t0, t1;
    ChainPos mid() const { return {seg, (t0 + t1) / 2}; }
};

struct WallChain {
    std::vector<RatPoint> pts;
    bool closed = true;
    std::vector<ChainPos> extra_cuts;
    std::function<void(const SubSegment&, Wall&)> label;  // unset: forbidden
};

// Splits every chain at all mutual crossings (and its extra cuts) into walls.
std::vector<Wall> make_walls(const std::vector<WallChain>& chains);

// Number of cut points strictly before `p`, wrapped for closed chains.
int component_index(const ChainPos& p, const std::vector<ChainPos>& sorted_cuts, bool closed);

std::vector<ChainPos> crossing_positions(ChainRef chain, ChainRef other);

struct Decomposition {
    struct Piece {
        std::vector<RatPoint> poly;  // counter-clockwise, 3 or 4 vertices
        Rational area;
        RatPoint center;
        int slab = 0;
        int lower = -1, upper = -2;  // wall ids; -1 bottom edge, -2 top edge of the square
        std::vector<int> windows;
    };
    struct Window {
        int p = -1, q = -1;
        RatPoint a, b;
        int wall = -1;  // -1: free
        bool forbidden = false;
        std::vector<int> groups;
    };
    std::vector<Rational> xs;
    std::vector<Piece> pieces;
    std::vector<Window> windows;
    std::vector<Wall> walls;
    std::vector<std::vector<int>> slab_pieces;  // bottom to top

    int other(int window, int piece) const {
        return windows[window].p == piece ? windows[window].q : windows[window].p;
    }
    // Piece containing p in its interior, or -1.
    int locate(const RatPoint& p) const;
    // Connected components through free windows.
    std::vector<int> zones() const;
};

Decomposition decompose(const std::vector<Wall>& walls);

struct GrowOptions {
    std::map<int, int> budgets;  // missing groups default to 1
    Rational stop_area = 0;      // 0 disables the early stop
    std::vector<int> banned_groups;
};

struct RegionTree {
    int root = -1;
    std::vector<int> via;    // per piece: -2 outside, -1 root, else window id
    std::vector<int> order;  // discovery order
    Rational area = 0;
};

RegionTree grow_region(const Decomposition& d, int root, const GrowOptions& opt);

// Curve being edited by a region attached through one of its edges.
struct SpliceBase {
    const PolyCurve* curve = nullptr;
    int window = -1;  // window of the decomposition lying on the curve
};

struct RealizeOptions {
    Rational target;                   // exact enclosed area wanted
    Rational s_max = Rational(19, 20);
    Rational s_min = Rational(1, 16);  // smallest usable scale of the grown region
    int retries = 32;
};

// Realizes the tree as a simple curve of exact area; `accept` may reject a
// candidate (then the corridor offsets are halved and the build retried).
std::optional<PolyCurve> realize_region(const Decomposition& d, const RegionTree& tree,
                                        const RealizeOptions& opt,
                                        const std::function<bool(const PolyCurve&)>& accept,
                                        const SpliceBase* base = nullptr);

// Upper estimate of the area reachable from the tree at scale s_max.
Rational region_capacity(const RegionTree& tree, const Rational& s_max);

}  // namespace bc
