#include <doctest.h>

#include "balcurve/curve_io.hpp"
#include "balcurve/geometry.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace bc;

namespace {
Rational q(long a, long b) { return Rational(a) / b; }
}

TEST_CASE("rationals print in lowest terms") {
    CHECK(to_pq(Rational(2) / 4) == "1/2");
    CHECK(to_pq(Rational(3)) == "3/1");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(parse_rational("6/8") == q(3, 4));
    CHECK(parse_rational("-2") == -2);
    CHECK_THROWS_NAMED(parse_rational("1/0"), "ParseError");
    CHECK_THROWS_NAMED(parse_rational("abc"), "ParseError");
}

TEST_CASE("orientation and segment predicates") {
    RatPoint o{0, 0}, a{1, 0}, b{0, 1};
    CHECK(orient(o, a, b) == 1);
    CHECK(orient(o, b, a) == -1);
    CHECK(orient(o, a, {2, 0}) == 0);
    CHECK(on_segment({q(1, 2), 0}, o, a));
    CHECK_FALSE(on_segment({q(3, 2), 0}, o, a));
}

TEST_CASE("enclosed area matches the fan triangulation") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        PolyCurve c = random_curve(rng, 3 + static_cast<int>(rng() % 10), 0.5, 0.5, 0.05, 0.45);
        CHECK(enclosed_area(c) == oracle::fan_area(c.v));
        CHECK(enclosed_area(validate_curve(reversed(c).v)) == enclosed_area(c));
    }
    CHECK(enclosed_area(fx::rect(q(1, 4), q(1, 4), q(3, 4), q(3, 4))) == q(1, 4));
}

TEST_CASE("validation rejects bad curves") {
    // a bow tie crosses itself
    CHECK_THROWS_NAMED(validate_curve({{q(1, 4), q(1, 4)}, {q(3, 4), q(3, 4)}, {q(3, 4), q(1, 4)}, {q(1, 4), q(3, 4)}}),
                       "NotSimple");
    CHECK_THROWS_NAMED(validate_curve({{0, q(1, 4)}, {q(1, 2), q(1, 4)}, {q(1, 2), q(1, 2)}}), "OutOfDomain");
    CHECK_THROWS_NAMED(validate_curve({{q(1, 4), q(1, 4)}, {q(1, 2), q(1, 4)}, {q(3, 4), q(1, 4)}, {q(1, 2), q(3, 4)}}),
                       "DegenerateVertex");
}

TEST_CASE("curve files round-trip bit for bit") {
    const std::string text = "1/10 1/10\n9/10 1/10\n9/10 29/40\n1/10 29/40\n";
    PolyCurve c = parse_single_curve(text);
    CHECK(serialize_curve(c) == text);
    CHECK(serialize_curve(parse_single_curve(serialize_curve(c))) == serialize_curve(c));

    auto pieces = parse_pieces(text + "\n@arc\n1/5 1/2\n4/5 1/2\n");
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].closed);
    CHECK_FALSE(pieces[1].closed);
    CHECK(serialize_piece(pieces[1]) == serialize_piece(parse_pieces(serialize_piece(pieces[1]))[0]));
    CHECK_THROWS_NAMED(parse_pieces("1/2 x\n"), "ParseError");
}

TEST_CASE("pair status counts transverse crossings") {
    PolyCurve a = fx::rect(q(1, 10), q(1, 10), q(9, 10), q(29, 40));
    PolyCurve b = fx::rect(q(1, 5), q(1, 30), q(4, 5), q(43, 48));
    auto st = pair_status(a, b);
    CHECK(st.kind == PairStatus::Transverse);
    CHECK(st.points.size() == 4);
    CHECK(pair_status(a, fx::rect(q(1, 5), q(1, 5), q(2, 5), q(2, 5))).kind == PairStatus::Disjoint);
    // shared edge
    CHECK(pair_status(a, fx::rect(q(1, 10), q(1, 5), q(1, 2), q(1, 2))).kind == PairStatus::NonGeneric);
}
