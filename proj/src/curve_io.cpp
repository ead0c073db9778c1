#include "balcurve/curve_io.hpp"

#include <fstream>
#include <sstream>

namespace bc {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<Block> parse_blocks(const std::string& text) {
    std::vector<Block> out;
    Block cur;
    bool open = false;
    auto flush = [&] {
        if (open) out.push_back(std::move(cur));
        cur = Block{};
        open = false;
    };
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        bool had_comment = hash != std::string::npos;
        if (had_comment) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            // comment-only lines do not separate blocks
            if (!had_comment) flush();
            continue;
        }
        open = true;
        if (line[0] == '@') {
            cur.directives.push_back(line.substr(1));
            continue;
        }
        std::istringstream ls(line);
        std::string xs, ys, extra;
        if (!(ls >> xs >> ys) || (ls >> extra))
            throw Error("ParseError", "line " + std::to_string(lineno) + ": expected two rationals");
        cur.pts.push_back({parse_rational(xs), parse_rational(ys)});
    }
    flush();
    return out;
}

std::string serialize_points(const std::vector<RatPoint>& pts) {
    std::string s;
    for (const auto& p : pts) s += to_pq(p.x) + " " + to_pq(p.y) + "\n";
    return s;
}

PolyCurve Piece::curve() const {
    if (!closed) throw Error("ParseError", "expected a closed curve, found an arc");
    return validate_curve(v);
}

PolyArc Piece::arc() const {
    if (closed) throw Error("ParseError", "expected an arc, found a closed curve");
    return make_arc(v);
}

std::vector<Piece> parse_pieces(const std::string& text) {
    std::vector<Piece> out;
    for (auto& b : parse_blocks(text)) {
        Piece p;
        for (const auto& d : b.directives)
            if (d == "arc") p.closed = false;
        if (p.closed) {
            p.v = validate_curve(std::move(b.pts)).v;
        } else {
            p.v = make_arc(std::move(b.pts)).v;
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::string serialize_piece(const Piece& p) {
    return (p.closed ? std::string() : std::string("@arc\n")) + serialize_points(p.v);
}

std::string serialize_curve(const PolyCurve& c) { return serialize_points(c.v); }
std::string serialize_arc(const PolyArc& a) { return "@arc\n" + serialize_points(a.v); }

PolyCurve parse_single_curve(const std::string& text) {
    auto ps = parse_pieces(text);
    if (ps.size() != 1) throw Error("ParseError", "expected exactly one curve");
    return ps[0].curve();
}

PolyArc parse_single_arc(const std::string& text) {
    auto ps = parse_pieces(text);
    if (ps.size() != 1) throw Error("ParseError", "expected exactly one arc");
    return ps[0].arc();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("IoError", "cannot write " + path);
    out << data;
}

}  // namespace bc
