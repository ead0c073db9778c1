#pragma once

#include "balcurve/curve_io.hpp"

#include <map>
#include <string>
#include <vector>

namespace bc {

// One link of a justification chain. `from`/`to` name vertices: "a", "b",
// an entry of Certificate::vertices, or "zeta" (a vertex whose existence is
// asserted by the step rule rather than constructed).
struct CertStep {
    std::string tag;
    long weight = 0;
    std::string claim;
    std::string from, to;
    std::map<std::string, Piece> data;
    std::map<std::string, std::string> facts;
};

struct Certificate {
    enum Kind { Upper, Lower } kind = Upper;
    long value = 0;
    Rational eps;
    PolyCurve a, b;
    std::map<std::string, PolyCurve> vertices;
    std::vector<CertStep> steps;
    bool coarse = false;
    std::map<std::string, std::string> facts;  // lower bounds: slopes, distances
    std::string witness;                       // lower bounds: serialized witness
};

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

// Step tags and the weight each one justifies.
namespace tags {
inline constexpr const char* Edge = "edge";                   // adjacency in the curve graph
inline constexpr const char* Hop = "shared-projection";       // common admissible projection set, diam <= 8
inline constexpr const char* Fallback = "shrink-fallback";    // asserted vertex within 3 of beta
inline constexpr const char* Witness = "witness-projection";  // lower bound from a witness
}  // namespace tags

}  // namespace bc
