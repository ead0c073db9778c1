#include <doctest.h>

#include "balcurve/hyp.hpp"
#include "balcurve/qm.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace bc;

TEST_CASE("group words parse and print") {
    CHECK(parse_group_word("abA") == GroupWord{1, 2, -1});
    CHECK(parse_group_word("a b A") == GroupWord{1, 2, -1});
    CHECK(parse_group_word("e").empty());
    CHECK(group_word_to_string({1, -2}) == "aB");
    CHECK(group_inverse({1, -2}) == GroupWord{2, -1});
    CHECK(group_power({1, 2}, 3) == GroupWord{1, 2, 1, 2, 1, 2});
    CHECK_THROWS_NAMED(parse_group_word("a?"), "ParseError");
}

TEST_CASE("greedy copy counting equals the prefix optimum") {
    auto fg = free_group_backend(2);
    std::mt19937_64 rng(71);
    for (int i = 0; i < 300; ++i) {
        GroupWord path = random_group_words(2, 1, 12, rng())[0];
        GroupWord w = random_group_words(2, 1, 3, rng())[0];
        if (w.empty()) continue;
        PathWord p;
        p.letters = path;
        PathWord pw;
        pw.letters = w;
        CHECK(count_copies(p, pw, *fg) == oracle::max_copies(path, w));
    }
}

TEST_CASE("c_wR on the free group agrees with walk enumeration") {
    auto fg = free_group_backend(2);
    std::mt19937_64 rng(73);
    for (int i = 0; i < 40; ++i) {
        auto ys = random_group_words(2, 1, 4, rng());
        int m = 2 + static_cast<int>(rng() % 2);
        GroupWord w = random_group_words(2, 1, m, rng())[0];
        while (static_cast<int>(w.size()) < m) w.push_back(w.empty() ? 1 : w.back());
        Vertex y = fg->act(ys[0], {});
        PathWord pw;
        pw.letters = w;
        Interval c = c_wR({}, y, pw, 1, *fg);
        CHECK(c.exact());
        CHECK(c.lo == oracle::free_group_c(*fg, {}, y, w, 1));
        CHECK(c.lo >= 0);
    }
}

TEST_CASE("R outside (0, |w|) is rejected") {
    auto fg = free_group_backend(2);
    PathWord w = parse_path(*fg, "ab");
    CHECK_THROWS_NAMED(c_wR({}, {1}, w, 0, *fg), "InvalidR");
    CHECK_THROWS_NAMED(c_wR({}, {1}, w, 2, *fg), "InvalidR");
}

TEST_CASE("h_w on powers of ab") {
    auto fg = free_group_backend(2);
    PathWord ab = parse_path(*fg, "ab");
    for (int k = 1; k <= 6; ++k) {
        auto r = h_w(group_power({1, 2}, k), ab, 1, {}, *fg);
        CHECK(r.h.exact());
        CHECK(r.h.lo == k);
        auto inv = h_w(group_power({-2, -1}, k), ab, 1, {}, *fg);
        CHECK(inv.h.lo == -k);
    }
    auto hz = homogenize({1, 2}, ab, 1, {}, *fg, 8);
    CHECK(hz.arithmetic);
    CHECK(hz.estimate == 1);
    CHECK(hz.error == 0);
}

TEST_CASE("other exact backends") {
    auto line = integer_line_backend();
    // a^4 walks two disjoint copies of aa and none of AA
    CHECK(h_w({1, 1, 1, 1}, parse_path(*line, "aa"), 1, line->basepoint(), *line).h.lo == 2);
    auto cyc = cycle_backend(7);
    auto r = h_w({1, 1, 1}, parse_path(*cyc, "aa"), 1, {0}, *cyc);
    CHECK(r.h.exact());
    CHECK(make_backend("cycle:6")->name() == cycle_backend(6)->name());
    CHECK_THROWS_NAMED(make_backend("torus:3"), "InvalidArgument");
}

TEST_CASE("Farey backend returns sound intervals") {
    auto fa = farey_backend(20);
    PathWord w = parse_path(*fa, "1/0,0/1,1/1,1/2");
    CHECK(w.length() == 3);
    auto r = h_w({1, 2, 1, 1, 2}, w, 1, fa->parse_vertex("0/1"), *fa);
    CHECK(r.h.lo <= r.h.hi);
    // T fixes 1/0: the value on the stabiliser is exactly zero
    for (int k = 1; k <= 5; ++k) {
        auto s = h_w(GroupWord(k, 1), w, 1, fa->basepoint(), *fa);
        CHECK(s.h.lo == 0);
        CHECK(s.h.hi == 0);
    }
    CHECK_THROWS_NAMED(homogenize({1, 2}, w, 1, fa->basepoint(), *fa, 4), "NotExact");
    CHECK_THROWS_NAMED(h_w(GroupWord(30, 1), w, 1, fa->parse_vertex("0/1"), *fa), "TruncationTooSmall");
}

TEST_CASE("rank test gives a triangular matrix of full rank") {
    auto rt = rank_test(5, 1, 10);
    CHECK(rt.all_exact);
    CHECK(rt.rank == 5);
    CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rational_rank({{1, 0}, {0, 1}}) == 2);
}

TEST_CASE("defect and drift estimates") {
    auto fg = free_group_backend(2);
    PathWord w = parse_path(*fg, "ab");
    std::vector<std::pair<GroupWord, GroupWord>> sample;
    auto words = random_group_words(2, 40, 5, 77);
    for (std::size_t i = 0; i + 1 < words.size(); i += 2) sample.push_back({words[i], words[i + 1]});
    Rational d = defect_estimate(w, 1, *fg, sample);
    CHECK(d >= 0);
    // additivity on commuting powers
    CHECK(defect_estimate(w, 1, *fg, {{{1, 2}, {1, 2}}}) == 0);
    Rational drift = basepoint_drift(w, 1, {}, fg->act({1}, {}), *fg, words);
    CHECK(drift <= 8);
    CHECK(random_group_words(2, 5, 6, 9) == random_group_words(2, 5, 6, 9));
}

// ---- hyperbolicity

TEST_CASE("four-point delta on small graphs") {
    CHECK(four_point_delta(tree_graph(2, 4)) == 0);
    CHECK(four_point_delta(path_graph(7)) == 0);
    CHECK(four_point_delta(cycle_graph(6)) == 1);
    CHECK(four_point_delta(cycle_graph(4)) == 1);
    CHECK(slim_delta_sampled(tree_graph(3, 3), 0, 1) == 0);
    CHECK(slim_delta_sampled(farey_ball(13), 5000, 2) <= 1);
    Graph disconnected;
    disconnected.adj.resize(2);
    CHECK_THROWS_NAMED(all_distances(disconnected), "Disconnected");
}

TEST_CASE("guessing geodesics") {
    auto t = tree_graph(2, 3);
    CHECK(gg_verify(t, geodesic_family(t), 1).ok);
    auto c = cycle_graph(12);
    CHECK_FALSE(gg_verify(c, geodesic_family(c), 1).ok);
    auto p = gg_delta_bound(1);
    CHECK(p.m == 22);
    CHECK(p.delta_bound == 28);
    // the defining inequality holds at m and fails just below
    auto holds = [](double lambda, double m) { return 2 * lambda * (6 + std::log2(m + 2)) <= m; };
    CHECK(holds(1, 22));
    CHECK_FALSE(holds(1, 21));
}

TEST_CASE("fragmentation bound") {
    CHECK(frag_lower_bound(24, 3) == 7);
    CHECK(frag_lower_bound(Rational(7) / 2, Rational(1) / 2) == 6);
    CHECK_THROWS_NAMED(frag_lower_bound(1, 0), "ZeroDefect");
}

TEST_CASE("graph files") {
    Graph g = parse_graph("# square\nn 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(g.size() == 4);
    CHECK(four_point_delta(g) == 1);
    CHECK_THROWS_NAMED(parse_graph("n 2\n0 5\n"), "ParseError");
}
