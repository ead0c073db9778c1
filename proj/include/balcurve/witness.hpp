#pragma once

// Witness subsurfaces W = sphere minus n rectangular holes laid out in a row,
// with the chain of cut arcs tau_k joining hole k to hole k+1. Curves in W are
// recorded as free-group words: letter +k (resp. -k) is a crossing of tau_k
// from its right side to its left side (resp. the reverse).

#include "balcurve/certificate.hpp"
#include "balcurve/farey.hpp"
#include "balcurve/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bc {

struct Witness {
    std::vector<PolyCurve> holes;
    std::vector<PolyArc> cuts;  // cuts[k] joins holes[k] to holes[k+1]
    std::string profile = "custom";
    Rational eps1;  // skewed profile: area of the first hole
    int n() const { return static_cast<int>(holes.size()); }
};

enum class Profile { Uniform, Skewed };

// Throws InfeasibleParameters naming the violated inequality.
Witness make_witness(const Rational& eps, int n, Profile profile, const Rational& eps1 = 0);
// Row layout for arbitrary hole areas (their sum must be < 1).
Witness layout_witness(const std::vector<Rational>& hole_areas);
Rational witness_area(const Witness& w);

struct WitnessCheck {
    bool ok = true;
    int hole = -1;  // first hole with area(A_i) + area(W) >= eps
};
WitnessCheck witness_check(const Witness& w, const Rational& eps);

std::string serialize_witness(const Witness& w);
Witness parse_witness(const std::string& text);

using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
// Least rotation of the reduced word or of its inverse: unoriented free homotopy class.
Word canonical_class(const Word& w);
std::string word_to_string(const Word& w);  // "x1 X2 x3", capital = inverse

struct ClosedComponent {
    PolyCurve curve;
    enum Kind { Inessential, Peripheral, Essential } kind = Essential;
    Word word;
    std::vector<int> side;  // per hole: 1 if inside the curve
};
const char* closed_kind_name(ClosedComponent::Kind k);

struct ArcComponent {
    PolyArc arc;
    int from_hole = -1, to_hole = -1;
    bool essential = false;
    Word word;  // cut crossings along the arc
};

struct CutClassification {
    std::vector<ClosedComponent> closed;
    std::vector<ArcComponent> arcs;
    bool cuts = false;
};

// Throws NonGenericInput when c touches a hole boundary or cut arc non-transversally.
CutClassification cuts_witness(const PolyCurve& c, const Witness& w);

struct CurveClass {
    Word word;              // canonical
    std::vector<int> side;  // per hole, normalized so hole 1 has side 0
    std::string partition() const;  // "{1,2|3,4}"
    bool operator==(const CurveClass& o) const { return word == o.word; }
    bool operator<(const CurveClass& o) const { return word < o.word; }
};

// Throws DoesNotCut when c does not cut w.
std::vector<CurveClass> project_to_witness(const PolyCurve& c, const Witness& w);

// Word-level disjointness: equal classes, or (for n > 4) nested hole partitions.
bool disjoint_realizable(const CurveClass& a, const CurveClass& b, int n);

// Farey coordinate of a class in a four-holed witness. Throws NotFourHoled.
Slope slope_of(const Word& word, int n);
Slope slope_of(const CurveClass& c, int n);

// Half twists on the free group of a four-holed witness: generator g in
// {1, 2, 3} swaps holes g and g+1; -g is the inverse twist.
Word apply_half_twist(const Word& w, int g);
// Matrix acting on slopes for the same twist.
Mat2 half_twist_matrix(int g);

// Lower bound value from the Farey distance of projection slopes.
long lower_bound_value(int farey_dist);

// Throws WitnessFails or DoesNotCut.
Certificate lower_bound_distance(const PolyCurve& a, const PolyCurve& b, const Witness& w,
                                 const Rational& eps);

struct TwoScaleRow {
    int n = 0;
    int farey_distance = 0;
    long lower_bound = 0;
    long upper_bound_eps1 = 0;
    Slope slope;
};

struct TwoScaleResult {
    Rational eps1, eps2;
    Witness witness;
    PolyCurve alpha, eta;
    Mat2 matrix;
    Slope alpha_slope;
    bool eta_balanced_eps1 = false, eta_disjoint_alpha = false, eta_not_balanced_eps2 = false;
    bool words_match_matrix = true;  // word-level twists agree with the matrix action
    std::vector<TwoScaleRow> rows;
};

// Witness at scale eps2 whose first hole bounds an eps1-balanced disk, an
// equator alpha around holes 1 and 2, and the pseudo-Anosov class given by
// the twist word (3, -2) acting with matrix [[2,1],[1,1]].
TwoScaleResult two_scale_experiment(int n_max, const Rational& eps1 = Rational(1, 4),
                                    const Rational& eps2 = Rational(1, 2));
std::string two_scale_csv(const TwoScaleResult& r);

}  // namespace bc
