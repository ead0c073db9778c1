#pragma once

#include "balcurve/arrangement.hpp"
#include "balcurve/certificate.hpp"
#include "balcurve/curve_io.hpp"
#include "balcurve/region.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bc {

// Throws InvalidEpsilon unless 0 < eps <= 1/2.
void check_epsilon(const Rational& eps);

bool is_balanced(const PolyCurve& c, const Rational& eps);
bool is_equator(const PolyCurve& c);

struct AdjacencyResult {
    enum Kind { Disjoint, TwoTransverse, NotAdjacent, NonGeneric } kind = Disjoint;
    std::vector<RatPoint> points;
    std::string reason;
    bool adjacent() const { return kind == Disjoint || kind == TwoTransverse; }
};
const char* adjacency_name(AdjacencyResult::Kind k);

// Throws NotBalancedInput when either curve fails the eps test.
AdjacencyResult adjacent(const PolyCurve& a, const PolyCurve& b, const Rational& eps);
// Same crossing test without the balance precondition.
AdjacencyResult crossing_adjacency(const PolyCurve& a, const PolyCurve& b);

struct AdmissibleResult {
    bool ok = true;
    int face = -1;  // offending face when !ok
    Rational area;
};
AdmissibleResult admissible(ChainRef alpha_p, ChainRef beta_p, const Rational& eps);

struct MembershipResult {
    bool ok = true;
    std::string condition;  // "equator", "1", "2" or "3"
    std::string witness;
};
MembershipResult projection_membership(const PolyCurve& g, ChainRef alpha_p, ChainRef beta_p);

PolyCurve construct_projection_equator(ChainRef alpha_p, ChainRef beta_p, const Rational& eps);

PolyCurve balance_area(const PolyCurve& c, const Rational& target, const std::vector<Piece>& keep_clear);

struct MiddleResult {
    PolyCurve middle;
    Certificate cert;
};
MiddleResult two_nonbigon_certificate(const PolyCurve& a, const PolyCurve& b, const Rational& eps);

// Equator adjacent to both curves found by region growing, if any.
std::optional<PolyCurve> find_middle_equator(const PolyCurve& a, const PolyCurve& b);

struct ShrinkChain {
    std::vector<PolyArc> arcs;        // alpha_0, alpha_1, ...
    std::vector<int> crossings;       // |alpha_i cap beta|
    std::vector<bool> admissible;     // per arc
    int lost_at = -1;                 // first inadmissible index, or -1
};
// Full chain down to a crossing-free arc, admissibility recorded per arc.
ShrinkChain shrink_chain_full(const PolyCurve& a, const PolyCurve& b, const Rational& eps);
// The chain as a list of arcs; throws AdmissibilityLost naming the index.
std::vector<PolyArc> shrink_chain(const PolyCurve& a, const PolyCurve& b, const Rational& eps);

Certificate upper_bound_distance(const PolyCurve& a, const PolyCurve& b, const Rational& eps);
// Chain certificate only, skipping the direct adjacency and middle searches.
Certificate chain_certificate(const PolyCurve& a, const PolyCurve& b, const Rational& eps);

struct MinimalPair {
    PolyArc alpha, beta;
    PolyCurve eta;
};
MinimalPair minimal_pair(const PolyArc& alpha_p, const PolyArc& beta_p, const Rational& eps);
// Does dropping one terminal crossing from either arc break admissibility?
bool is_minimal_pair(const PolyArc& alpha, const PolyArc& beta, const Rational& eps);

struct VerifyReport {
    bool ok = true;
    std::string failure;
};
VerifyReport verify_certificate_report(const Certificate& cert, const PolyCurve& a, const PolyCurve& b,
                                       const Rational& eps);
bool verify_certificate(const Certificate& cert, const PolyCurve& a, const PolyCurve& b, const Rational& eps);
// Lower-bound certificates are re-derived from their witness (see witness.hpp).
VerifyReport verify_lower_certificate(const Certificate& cert, const PolyCurve& a, const PolyCurve& b,
                                      const Rational& eps);

// Sub-chain of an open or closed chain between two positions (forward).
PolyArc chain_subarc(ChainRef c, const ChainPos& from, const ChainPos& to);
// Positions just past a crossing: halfway to the next feature along the chain.
ChainPos push_forward(ChainRef c, const ChainPos& x, const std::vector<ChainPos>& features);
ChainPos push_backward(ChainRef c, const ChainPos& x, const std::vector<ChainPos>& features);

}  // namespace bc
