#include <doctest.h>

#include "balcurve/balanced.hpp"
#include "balcurve/certificate.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace bc;

namespace {
Rational q(long a, long b) { return Rational(a) / b; }

const PolyCurve kEquator = fx::rect(q(1, 10), q(1, 10), q(9, 10), q(29, 40));
const PolyCurve kCrossing = fx::rect(q(1, 5), q(1, 30), q(4, 5), q(43, 48));
}  // namespace

TEST_CASE("balance is closed at eps") {
    CHECK(is_equator(kEquator));
    CHECK(is_balanced(kEquator, q(1, 2)));
    PolyCurve quarter = fx::rect(q(1, 4), q(1, 4), q(3, 4), q(3, 4));
    CHECK(is_balanced(quarter, q(1, 4)));
    CHECK_FALSE(is_balanced(quarter, q(1, 4) + q(1, 1000)));
    CHECK_THROWS_NAMED(is_balanced(quarter, 0), "InvalidEpsilon");
    CHECK_THROWS_NAMED(is_balanced(quarter, q(3, 5)), "InvalidEpsilon");
}

TEST_CASE("adjacency kinds") {
    const Rational eps(1, 5);
    CHECK(adjacent(kEquator, kCrossing, eps).kind == AdjacencyResult::NotAdjacent);
    PolyCurve inner = fx::rect(q(1, 5), q(1, 5), q(4, 5), q(3, 5));
    CHECK(adjacent(kEquator, inner, eps).kind == AdjacencyResult::Disjoint);
    // below the threshold the graph has no such vertex
    CHECK_THROWS_NAMED(adjacent(kEquator, inner, q(1, 4)), "NotBalancedInput");
    // a rectangle poking out through one side crosses twice
    PolyCurve poke = fx::rect(q(1, 5), q(1, 5), q(4, 5), q(19, 20));
    auto r = adjacent(kEquator, poke, eps);
    CHECK(r.kind == AdjacencyResult::TwoTransverse);
    CHECK(r.points.size() == 2);
    CHECK(adjacent(kEquator, fx::rect(q(1, 10), q(1, 5), q(7, 10), q(3, 4)), eps).kind == AdjacencyResult::NonGeneric);
    // a square and a translate of it, nudged off the shared horizontals
    PolyCurve sq = fx::rect(q(1, 10), q(1, 5), q(11, 20), q(13, 20));
    PolyCurve moved = fx::rect(q(1, 4), q(9, 40), q(7, 10), q(27, 40));
    CHECK(adjacent(sq, moved, eps).kind == AdjacencyResult::TwoTransverse);
}

TEST_CASE("projection equators on random admissible pairs") {
    const Rational eps(1, 5);
    std::mt19937_64 rng(31);
    int built = 0;
    while (built < 8) {
        auto pr = fx::crossing_pair(rng, eps);
        if (!pr) continue;
        auto X = crossing_positions(pr->first, pr->second);
        PolyArc ap = fx::arc_over_crossings(pr->first, pr->second, 0, X.size() / 2);
        if (!admissible(ap, pr->second, eps).ok) continue;
        PolyCurve g = construct_projection_equator(ap, pr->second, eps);
        // independent facts: exact half area, and no contact with alpha'
        CHECK(oracle::fan_area(g.v) == q(1, 2));
        CHECK(pair_status(g, ap).kind == PairStatus::Disjoint);
        CHECK(projection_membership(g, ap, pr->second).ok);
        ++built;
    }
}

TEST_CASE("membership reports the failed condition") {
    PolyArc ap = fx::arc_over_crossings(kEquator, kCrossing, 0, 1);
    PolyCurve small = fx::rect(q(2, 5), q(2, 5), q(3, 5), q(3, 5));
    auto m = projection_membership(small, ap, kCrossing);
    CHECK_FALSE(m.ok);
    CHECK(m.condition == "equator");
    auto hit = projection_membership(kEquator, ap, kCrossing);
    CHECK_FALSE(hit.ok);
    CHECK(hit.condition == "1");
}

TEST_CASE("inadmissible input is refused") {
    // a tiny arc leaves one face of area close to 1
    PolyCurve blob = fx::rect(q(1, 10), q(1, 10), q(1, 5), q(1, 5));
    PolyCurve thin = fx::rect(q(3, 20), q(1, 20), q(7, 40), q(9, 10));
    PolyArc ap = fx::arc_over_crossings(blob, thin, 0, 1);
    CHECK_FALSE(admissible(ap, thin, q(1, 5)).ok);
    CHECK_THROWS_NAMED(construct_projection_equator(ap, thin, q(1, 5)), "Inadmissible");
}

TEST_CASE("balance_area hits the target exactly") {
    PolyCurve quarter = fx::rect(q(1, 4), q(1, 4), q(3, 4), q(3, 4));
    for (Rational target : std::vector<Rational>{q(1, 2), q(1, 3), q(1, 4) + q(1, 100000), q(1, 8)}) {
        PolyCurve c = balance_area(quarter, target, {});
        CHECK(enclosed_area(c) == target);
        CHECK(oracle::fan_area(c.v) == target);
    }
}

TEST_CASE("two non-bigons: the middle equator is adjacent to both") {
    PolyCurve round = fx::polar(20, 0.3, 0.3, 0.0);
    PolyCurve star = fx::polar(10, 0.38, 0.22, 0.5);
    REQUIRE(build_arrangement(round, star).crossings.size() == 10);
    auto m = two_nonbigon_certificate(round, star, q(1, 5));
    CHECK(is_equator(m.middle));
    CHECK(crossing_adjacency(m.middle, round).adjacent());
    CHECK(crossing_adjacency(m.middle, star).adjacent());
    CHECK(m.cert.value == 2);
    CHECK(verify_certificate(m.cert, round, star, q(1, 5)));
}

TEST_CASE("upper bound certificates") {
    const Rational eps(1, 5);
    SUBCASE("same curve") {
        auto c = upper_bound_distance(kEquator, kEquator, eps);
        CHECK(c.value == 0);
        CHECK(verify_certificate(c, kEquator, kEquator, eps));
    }
    SUBCASE("disjoint curves") {
        PolyCurve inner = fx::rect(q(1, 5), q(1, 5), q(4, 5), q(3, 5));
        auto c = upper_bound_distance(kEquator, inner, eps);
        CHECK(c.value == 1);
        CHECK(verify_certificate(c, kEquator, inner, eps));
    }
    SUBCASE("four crossings") {
        auto c = upper_bound_distance(kEquator, kCrossing, eps);
        CHECK(c.value == 2);
        CHECK(verify_certificate(c, kEquator, kCrossing, eps));
        std::string json = certificate_to_json(c);
        CHECK(certificate_to_json(certificate_from_json(json)) == json);
        // a certificate does not transfer to other curves or another eps
        CHECK_FALSE(verify_certificate(c, kCrossing, kEquator, eps));
        CHECK_FALSE(verify_certificate(c, kEquator, kCrossing, q(1, 4)));
        Certificate wrong = c;
        wrong.value = 1;
        CHECK_FALSE(verify_certificate(wrong, kEquator, kCrossing, eps));
    }
}

TEST_CASE("minimal pairs stay admissible and cannot shrink") {
    const Rational eps(1, 5);
    std::mt19937_64 rng(41);
    int done = 0;
    for (int attempt = 0; attempt < 200 && done < 3; ++attempt) {
        auto pr = fx::crossing_pair(rng, eps);
        if (!pr) continue;
        auto X = crossing_positions(pr->first, pr->second);
        auto Y = crossing_positions(pr->second, pr->first);
        PolyArc ap = fx::arc_over_crossings(pr->first, pr->second, 0, X.size() - 1);
        PolyArc bp = chain_subarc(pr->second, push_backward(pr->second, Y[0], Y),
                                  push_forward(pr->second, Y[Y.size() - 1], Y));
        if (!admissible(ap, bp, eps).ok) continue;
        MinimalPair mp = minimal_pair(ap, bp, eps);
        CHECK(admissible(mp.alpha, mp.beta, eps).ok);
        CHECK(is_minimal_pair(mp.alpha, mp.beta, eps));
        CHECK(is_balanced(mp.eta, eps));
        ++done;
    }
    CHECK(done == 3);
}
