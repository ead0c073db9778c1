#include <doctest.h>

#include "balcurve/farey.hpp"
#include "balcurve/witness.hpp"

#include "fixtures.hpp"

#include <deque>
#include <map>
#include <random>

using namespace bc;

namespace {

Rational q(long a, long b) { return Rational(a) / b; }

// Plain BFS over the induced Farey graph on slopes of height <= h.
std::map<Slope, int> bfs_from(const Slope& s, std::int64_t h) {
    auto all = slopes_up_to(h);
    std::map<Slope, int> d{{s, 0}};
    std::deque<Slope> queue{s};
    while (!queue.empty()) {
        Slope u = queue.front();
        queue.pop_front();
        for (const auto& v : all)
            if (farey_adjacent(u, v) && !d.count(v)) {
                d[v] = d[u] + 1;
                queue.push_back(v);
            }
    }
    return d;
}

// The rectangle around holes i..j of a row witness, halfway into the gaps.
PolyCurve around(const Witness& w, int i, int j) {
    const auto& A = w.holes[i].v;
    const auto& B = w.holes[j].v;
    Rational gap = w.holes[1].v[0].x - w.holes[0].v[1].x, margin = A[0].y / 2;
    return fx::rect(A[0].x - gap / 2, A[0].y - margin, B[1].x + gap / 2, A[2].y + margin);
}

}  // namespace

TEST_CASE("Farey distance agrees with breadth-first search") {
    for (auto src : {make_slope(0, 1), make_slope(1, 0), make_slope(2, 5), make_slope(-3, 7)}) {
        auto d = bfs_from(src, 9);
        for (const auto& [t, dist] : d) CHECK(farey_distance(src, t) == dist);
    }
    CHECK(farey_distance(parse_slope("0/1"), parse_slope("2/5")) == 2);
    CHECK(farey_distance(parse_slope("1/0"), parse_slope("7")) == 1);
    CHECK(farey_bfs(parse_slope("0/1"), parse_slope("3/8"), 10) == farey_distance(parse_slope("0/1"), parse_slope("3/8")));
    CHECK_THROWS_NAMED(farey_bfs(parse_slope("0/1"), parse_slope("8/13"), 1), "CapExceeded");
    CHECK_THROWS_NAMED(make_slope(0, 0), "InvalidArgument");
    CHECK(parse_slope("-2/-4") == make_slope(1, 2));
}

TEST_CASE("mapping classes act on slopes") {
    Mat2 m{2, 1, 1, 1};
    CHECK(is_pseudo_anosov(m));
    CHECK_FALSE(is_pseudo_anosov(Mat2{1, 1, 0, 1}));
    CHECK(mcg_action(m, make_slope(0, 1)) == make_slope(1, 1));
    CHECK(mat_pow(m, 3) == m * m * m);
    CHECK(mat_inverse(m) * m == Mat2{});
    CHECK_THROWS_NAMED(mcg_action(Mat2{2, 0, 0, 1}, make_slope(0, 1)), "NotUnimodular");
    auto rows = orbit_growth(m, make_slope(0, 1), 8);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].image == mcg_action(mat_pow(m, rows[i].n), make_slope(0, 1)));
        CHECK(rows[i].distance == farey_distance(rows[i].image, make_slope(0, 1)));
    }
}

TEST_CASE("lower bound value is the ceiling formula") {
    for (int d = 0; d < 40; ++d) {
        long expected = 0;
        while (4 * expected < d - 2) ++expected;  // smallest k with 4k >= d - 2
        CHECK(lower_bound_value(d) == expected);
    }
}

TEST_CASE("witness predicate is strict at 2/(n+1)") {
    for (int n = 4; n <= 8; ++n) {
        Rational t = Rational(2) / (n + 1);
        Witness w = layout_witness(std::vector<Rational>(n, Rational(1) / (n + 1)));
        CHECK(witness_area(w) == Rational(1) / (n + 1));
        CHECK_FALSE(witness_check(w, t).ok);
        if (t + q(1, 100) <= q(1, 2)) CHECK(witness_check(w, t + q(1, 100)).ok);
        CHECK_THROWS_NAMED(make_witness(t, n, Profile::Uniform), "InfeasibleParameters");
    }
    CHECK_THROWS_NAMED(make_witness(q(1, 2), 4, Profile::Skewed, q(1, 2)), "InfeasibleParameters");
}

TEST_CASE("witness files round-trip") {
    for (Witness w : {make_witness(q(1, 2), 4, Profile::Uniform), make_witness(q(1, 2), 4, Profile::Skewed, q(1, 4)),
                      make_witness(q(1, 4), 8, Profile::Uniform)}) {
        std::string text = serialize_witness(w);
        CHECK(serialize_witness(parse_witness(text)) == text);
    }
}

TEST_CASE("words and twists") {
    CHECK(free_reduce({1, -1, 2}) == Word{2});
    CHECK(cyclic_reduce({-1, 2, 1}) == Word{2});
    CHECK(canonical_class({2, 1}) == canonical_class({1, 2}));
    CHECK(canonical_class({1, 2}) == canonical_class(inverse({1, 2})));
    // word-level half twists agree with their matrices on random products
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        Word w{2};
        Mat2 m;
        int len = 1 + static_cast<int>(rng() % 8);
        for (int k = 0; k < len; ++k) {
            int g = static_cast<int>(rng() % 3) + 1;
            if (rng() % 2) g = -g;
            w = cyclic_reduce(apply_half_twist(w, g));
            m = half_twist_matrix(g) * m;
        }
        CHECK(slope_of(w, 4) == mcg_action(m, make_slope(0, 1)));
    }
    CHECK_THROWS_NAMED(slope_of(Word{1}, 5), "NotFourHoled");
}

TEST_CASE("curves around holes cut the witness and project to slopes") {
    Witness w = make_witness(q(1, 2), 4, Profile::Uniform);
    auto c12 = project_to_witness(around(w, 0, 1), w);
    REQUIRE(c12.size() == 1);
    CHECK(c12[0].partition() == "{1,2|3,4}");
    CHECK(slope_of(c12[0], 4) == make_slope(0, 1));
    auto c23 = project_to_witness(around(w, 1, 2), w);
    REQUIRE(c23.size() == 1);
    CHECK(c23[0].partition() == "{1,4|2,3}");
    CHECK(farey_distance(slope_of(c12[0], 4), slope_of(c23[0], 4)) == 1);
    // around a single hole: peripheral, so no cut
    CHECK_FALSE(cuts_witness(around(w, 0, 0), w).cuts);
    CHECK_THROWS_NAMED(project_to_witness(around(w, 0, 0), w), "DoesNotCut");
}

TEST_CASE("every balanced curve cuts a passing witness") {
    const Rational eps(1, 4);
    Witness w = make_witness(eps, 8, Profile::Uniform);
    REQUIRE(witness_check(w, eps).ok);
    std::mt19937_64 rng(61);
    int tested = 0;
    while (tested < 100) {
        PolyCurve c = random_curve(rng, 10, 0.5, 0.5, 0.2, 0.45);
        if (!is_balanced(c, eps)) continue;
        CHECK(cuts_witness(c, w).cuts);
        ++tested;
    }
}

TEST_CASE("two-scale experiment") {
    auto r = two_scale_experiment(12);
    CHECK(r.eta_balanced_eps1);
    CHECK(r.eta_disjoint_alpha);
    CHECK(r.eta_not_balanced_eps2);
    CHECK(r.words_match_matrix);
    REQUIRE(r.rows.size() == 12);
    for (const auto& row : r.rows) {
        CHECK(row.upper_bound_eps1 <= 2);
        CHECK(row.lower_bound == lower_bound_value(row.farey_distance));
        CHECK(row.farey_distance == farey_distance(row.slope, r.alpha_slope));
    }
    CHECK(r.rows.back().lower_bound >= 2);
    CHECK(two_scale_csv(r).rfind("n,", 0) == 0);
}
