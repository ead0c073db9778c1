#pragma once

#include "balcurve/geometry.hpp"

#include <string>
#include <variant>
#include <vector>

namespace bc {

// A block of the curve file: vertex lines plus any `@directive` lines it carried.
struct Block {
    std::vector<std::string> directives;
    std::vector<RatPoint> pts;
};

std::vector<Block> parse_blocks(const std::string& text);
std::string serialize_points(const std::vector<RatPoint>& pts);

// Either a closed curve or an arc (blocks tagged `@arc`).
struct Piece {
    std::vector<RatPoint> v;
    bool closed = true;
    ChainRef ref() const { return ChainRef(v, closed); }
    PolyCurve curve() const;
    PolyArc arc() const;
};

std::vector<Piece> parse_pieces(const std::string& text);
std::string serialize_piece(const Piece& p);
std::string serialize_curve(const PolyCurve& c);
std::string serialize_arc(const PolyArc& a);
PolyCurve parse_single_curve(const std::string& text);
PolyArc parse_single_arc(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace bc
