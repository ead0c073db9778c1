// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "balcurve/arrangement.hpp"
#include "balcurve/balanced.hpp"
#include "balcurve/certificate.hpp"
#include "balcurve/farey.hpp"
#include "balcurve/hyp.hpp"
#include "balcurve/qm.hpp"
#include "balcurve/witness.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace bc;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("threw ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.pass) ++failures;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (r.pass ? "PASS" : "FAIL") << " " << (id < 10 ? " " : "") << id << " " << title << ": "
         << r.detail << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
}

std::string frac(long a, long b) { return std::to_string(a) + "/" + std::to_string(b); }

// 1 ------------------------------------------------------------------------
Outcome exactness() {
    std::mt19937_64 rng(101);
    int area_ok = 0;
    for (int i = 0; i < 1000; ++i) {
        int n = 3 + static_cast<int>(rng() % 14);
        PolyCurve c = random_curve(rng, n, 0.5, 0.5, 0.05, 0.48);
        area_ok += enclosed_area(c) == oracle::fan_area(c.v);
    }
    int pairs = 0, sums_ok = 0, skipped = 0;
    std::uniform_real_distribution<double> C(0.3, 0.7);
    while (pairs < 200) {
        PolyCurve a = random_curve(rng, 8, C(rng), C(rng), 0.1, 0.29);
        PolyCurve b = random_curve(rng, 8, C(rng), C(rng), 0.1, 0.29);
        if (pair_status(a, b).kind == PairStatus::NonGeneric) {
            ++skipped;
            continue;
        }
        Arrangement arr = build_arrangement(a, b);
        Rational total = 0;
        for (const auto& f : arr.faces) total += f.area;
        ++pairs;
        sums_ok += total == 1;
    }
    return {area_ok == 1000 && sums_ok == 200, "areas " + frac(area_ok, 1000) + ", face sums " + frac(sums_ok, 200) +
                                                    " (" + std::to_string(skipped) + " non-generic draws redrawn)"};
}

// 2 ------------------------------------------------------------------------
Outcome central_vertex() {
    std::mt19937_64 rng(202);
    int cases = 0, unique = 0, violations = 0;
    while (cases < 200) {
        PolyCurve a = random_curve(rng, 9, 0.5, 0.5, 0.15, 0.42);
        PolyCurve b = random_curve(rng, 9, 0.5, 0.5, 0.15, 0.42);
        if (pair_status(a, b).kind != PairStatus::Transverse) continue;
        auto X = crossing_positions(a, b);
        std::size_t last = rng() % X.size();
        PolyArc ap = fx::arc_over_crossings(a, b, 0, last);
        // alternate between a closed beta and a subarc of it
        Arrangement arr = [&] {
            if (cases % 2 == 0) return build_arrangement(ap, b);
            auto Y = crossing_positions(b, ap);
            if (Y.empty()) return build_arrangement(ap, b);
            std::size_t i = rng() % Y.size(), j = i + rng() % (Y.size() - i);
            PolyArc bp = chain_subarc(b, push_backward(b, Y[i], Y), push_forward(b, Y[j], Y));
            return build_arrangement(ap, bp);
        }();
        ++cases;
        try {
            DualTree t = direct_and_center(dual_tree(arr), arr);
            if (!t.central) continue;
            int sinks = 0;
            for (int v : t.vertices) {
                bool out = false;
                for (const auto& e : t.edges) out = out || e.a == v;
                sinks += !out;
            }
            unique += sinks == 1;
        } catch (const Error& e) {
            if (std::string(e.name()) == "CentralityViolation") ++violations;
            else throw;
        }
    }
    return {unique == 200 && violations == 0,
            "unique sink " + frac(unique, 200) + ", CentralityViolation " + std::to_string(violations)};
}

// Admissible (alpha', beta) pairs drawn from random crossing pairs.
struct AdmissibleCase {
    PolyCurve a, b;
    PolyArc ap;
};

std::vector<AdmissibleCase> admissible_cases(std::uint64_t seed, int count, const Rational& eps) {
    std::mt19937_64 rng(seed);
    std::vector<AdmissibleCase> out;
    while (static_cast<int>(out.size()) < count) {
        auto pr = fx::crossing_pair(rng, eps);
        if (!pr) continue;
        auto X = crossing_positions(pr->first, pr->second);
        PolyArc ap = fx::arc_over_crossings(pr->first, pr->second, 0, X.size() / 2 + rng() % (X.size() / 2));
        if (!admissible(ap, pr->second, eps).ok) continue;
        out.push_back({pr->first, pr->second, ap});
    }
    return out;
}

// 3 ------------------------------------------------------------------------
Outcome projection_nonempty() {
    const Rational eps(1, 5);
    int ok = 0;
    std::string first_failure;
    for (const auto& c : admissible_cases(303, 50, eps)) {
        try {
            PolyCurve g = construct_projection_equator(c.ap, c.b, eps);
            auto m = projection_membership(g, c.ap, c.b);
            if (m.ok) ++ok;
            else if (first_failure.empty()) first_failure = " first failure: condition " + m.condition;
        } catch (const Error& e) {
            if (first_failure.empty()) first_failure = std::string(" first failure: ") + e.what();
        }
    }
    return {ok == 50, "constructed members " + frac(ok, 50) + first_failure};
}

// 4 ------------------------------------------------------------------------
Outcome two_nonbigon() {
    const Rational eps(1, 5);
    struct Config {
        int n;
        double r0, r1, rc;
    };
    std::vector<Config> configs;
    // the ten-crossing configuration: a round curve against a five-pointed star
    configs.push_back({10, 0.38, 0.22, 0.3});
    for (int n : {6, 8, 10, 12, 14})
        for (auto [r0, r1, rc] : {std::tuple{0.40, 0.22, 0.30}, std::tuple{0.36, 0.24, 0.31},
                                  std::tuple{0.42, 0.25, 0.33}, std::tuple{0.39, 0.27, 0.32},
                                  std::tuple{0.44, 0.21, 0.29}})
            configs.push_back({n, r0, r1, rc});
    configs.resize(25);
    int ok = 0, with_ten = 0;
    std::string first_failure;
    for (const auto& c : configs) {
        // the ten-crossing pair is drawn exactly as in the figure; the others use an
        // odd vertex count so dyadic rounding never lines up three vertices
        PolyCurve round = &c == &configs[0] ? fx::polar(20, c.rc, c.rc, 0.0) : fx::polar(4 * c.n + 1, c.rc, c.rc, 0.13);
        PolyCurve star = fx::polar(c.n, c.r0, c.r1, 0.5);
        auto fail = [&](const std::string& why) {
            if (first_failure.empty()) first_failure = " first failure n=" + std::to_string(c.n) + ": " + why;
        };
        try {
            Arrangement arr = build_arrangement(round, star);
            if (non_bigon_count(arr) != 2) {
                fail(std::to_string(non_bigon_count(arr)) + " non-bigons");
                continue;
            }
            if (arr.crossings.size() == 10) ++with_ten;
            auto m = two_nonbigon_certificate(round, star, eps);
            bool good = is_equator(m.middle) && crossing_adjacency(m.middle, round).adjacent() &&
                        crossing_adjacency(m.middle, star).adjacent() && verify_certificate(m.cert, round, star, eps);
            if (good) ++ok;
            else fail("middle equator rejected");
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    return {ok == 25 && with_ten > 0,
            "middle equator verified " + frac(ok, 25) + " (" + std::to_string(with_ten) + " with I=10)" + first_failure};
}

// 5 ------------------------------------------------------------------------
Outcome monotone() {
    const Rational eps(1, 5);
    std::mt19937_64 rng(505);
    int ok = 0, total = 0;
    for (const auto& c : admissible_cases(505, 30, eps)) {
        PolyCurve g = construct_projection_equator(c.ap, c.b, eps);
        if (!projection_membership(g, c.ap, c.b).ok) continue;
        auto Y = crossing_positions(c.b, c.ap);
        std::size_t i = rng() % Y.size(), j = i + rng() % (Y.size() - i);
        PolyArc bpp = chain_subarc(c.b, push_backward(c.b, Y[i], Y), push_forward(c.b, Y[j], Y));
        ++total;
        ok += projection_membership(g, c.ap, bpp).ok;
    }
    return {ok == 30 && total == 30, "members kept under shrinking beta " + frac(ok, 30)};
}

// 6 ------------------------------------------------------------------------
Outcome witness_predicate() {
    int agree = 0, checks = 0;
    for (int n = 3; n <= 9; ++n) {
        Witness w = layout_witness(std::vector<Rational>(n, Rational(1) / (n + 1)));
        Rational threshold = Rational(2) / (n + 1);
        std::vector<Rational> trial{threshold - Rational(1, 1000), threshold, threshold + Rational(1, 1000),
                                    Rational(1, 2)};
        for (const Rational& eps : trial) {
            if (eps <= 0 || eps > Rational(1, 2)) continue;
            ++checks;
            agree += witness_check(w, eps).ok == (threshold < eps);
        }
    }
    const Rational eps(1, 4);
    Witness w = make_witness(eps, 8, Profile::Uniform);
    bool passing = witness_check(w, eps).ok;
    std::mt19937_64 rng(606);
    int curves = 0, cut = 0, redrawn = 0;
    while (curves < 500) {
        PolyCurve c = random_curve(rng, 10, 0.5, 0.5, 0.2, 0.45);
        if (!is_balanced(c, eps)) continue;
        try {
            cut += cuts_witness(c, w).cuts;
            ++curves;
        } catch (const Error&) {
            ++redrawn;
        }
    }
    return {agree == checks && passing && cut == 500,
            "threshold agreement " + frac(agree, checks) + ", random curves cutting " + frac(cut, 500) + " (" +
                std::to_string(redrawn) + " non-generic draws redrawn)"};
}

// 7 ------------------------------------------------------------------------
Outcome farey_exhaustive() {
    auto t0 = std::chrono::steady_clock::now();
    auto S = slopes_up_to(34);
    std::map<Slope, int> idx;
    for (std::size_t i = 0; i < S.size(); ++i) idx[S[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(S.size());
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (farey_adjacent(S[i], S[j])) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
    long pairs = 0, bad = 0;
    for (std::size_t s = 0; s < S.size(); ++s) {
        std::vector<int> d(S.size(), -1);
        d[s] = 0;
        std::deque<int> q{static_cast<int>(s)};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : adj[u])
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    q.push_back(v);
                }
        }
        for (std::size_t t = 0; t < S.size(); ++t) {
            ++pairs;
            bad += farey_distance(S[s], S[t]) != d[t];
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << S.size() << " slopes, " << pairs << " pairs, " << bad << " mismatches, " << secs << "s";
    return {bad == 0 && secs < 60, os.str()};
}

// 8 ------------------------------------------------------------------------
Outcome orbit_and_two_scale() {
    auto rows = orbit_growth(Mat2{2, 1, 1, 1}, make_slope(0, 1), 12);
    bool increasing = rows.size() == 12;
    for (std::size_t i = 1; i < rows.size(); ++i) increasing = increasing && rows[i].distance > rows[i - 1].distance;
    // least squares over n = 1..12
    double sn = 0, sd = 0, snn = 0, snd = 0, k = static_cast<double>(rows.size());
    for (const auto& r : rows) {
        sn += r.n;
        sd += r.distance;
        snn += static_cast<double>(r.n) * r.n;
        snd += static_cast<double>(r.n) * r.distance;
    }
    double slope = (k * snd - sn * sd) / (k * snn - sn * sn);

    auto ts = two_scale_experiment(12);
    bool upper = ts.eta_balanced_eps1 && ts.eta_disjoint_alpha && ts.eta_not_balanced_eps2;
    long max_upper = 0, final_lower = 0;
    int reached = -1;
    for (const auto& r : ts.rows) {
        max_upper = std::max(max_upper, r.upper_bound_eps1);
        if (r.lower_bound >= 2 && reached < 0) reached = r.n;
        final_lower = r.lower_bound;
        if (r.lower_bound != lower_bound_value(r.farey_distance)) upper = false;
    }
    std::ostringstream os;
    os.precision(3);
    os << "distances " << (increasing ? "strictly increasing" : "not increasing") << ", fitted slope " << slope
       << ", upper bound at eps1 <= " << max_upper << ", lower bound " << final_lower << " at n=12 (>= 2 from n="
       << reached << ")";
    return {increasing && slope >= 0.5 && upper && max_upper <= 2 && reached > 0 && reached <= 12 &&
                ts.words_match_matrix,
            os.str()};
}

// 9 ------------------------------------------------------------------------
Outcome bf_exactness() {
    auto fg = free_group_backend(2);
    std::mt19937_64 rng(909);
    int agree = 0;
    for (int i = 0; i < 100; ++i) {
        auto xs = random_group_words(2, 1, 3, rng());
        auto ys = random_group_words(2, 1, 4, rng());
        int m = 2 + static_cast<int>(rng() % 3);
        int R = 1 + static_cast<int>(rng() % (m - 1));
        GroupWord w;
        const GroupWord& geo = ys[0];
        if (i % 2 == 0 && static_cast<int>(geo.size()) >= m) {
            std::size_t st = rng() % (geo.size() - m + 1);
            w.assign(geo.begin() + static_cast<long>(st), geo.begin() + static_cast<long>(st) + m);
        } else {
            w = random_group_words(2, 1, m, rng())[0];
            while (static_cast<int>(w.size()) < m) w.push_back(w.back());
        }
        Vertex x = fg->act(xs[0], {});
        Vertex y = fg->act(xs[0], fg->act(ys[0], {}));
        PathWord pw;
        pw.letters = w;
        Interval c = c_wR(x, y, pw, R, *fg);
        agree += c.exact() && c.lo == oracle::free_group_c(*fg, x, y, w, R);
    }
    PathWord ab = parse_path(*fg, "ab");
    int powers = 0;
    for (int k = 1; k <= 6; ++k) {
        auto r = h_w(group_power({1, 2}, k), ab, 1, {}, *fg);
        powers += r.h.exact() && r.h.lo == k;
    }
    auto hz = homogenize({1, 2}, ab, 1, {}, *fg, 8);
    bool hom = hz.estimate == 1 && hz.error == 0 && hz.arithmetic;
    return {agree == 100 && powers == 6 && hom, "automaton vs enumeration " + frac(agree, 100) +
                                                    ", h((ab)^k) = k for " + frac(powers, 6) +
                                                    ", homogenized " + to_string(hz.estimate) + " +- " +
                                                    to_string(hz.error)};
}

// 10 -----------------------------------------------------------------------
Outcome qm_properties() {
    // stabiliser of 1/0 under PSL(2,Z) on the Farey graph
    auto fa = farey_backend(24);
    PathWord fw = parse_path(*fa, "1/0,0/1,1/1,1/2");
    Vertex x0 = fa->basepoint();
    std::set<GroupWord> fixers;
    std::mt19937_64 rng(1010);
    for (int k = 1; fixers.size() < 20 && k < 100000; ++k) {
        GroupWord g = random_group_words(2, 1, 2 + static_cast<int>(rng() % 6), rng())[0];
        if (!g.empty() && fa->act(g, x0) == x0) fixers.insert(g);
    }
    int vanish = 0;
    for (const auto& g : fixers) {
        bool all = true;
        for (int n = 1; n <= 10 && all; ++n) {
            auto r = h_w(group_power(g, n), fw, 1, x0, *fa);
            all = r.h.lo == 0 && r.h.hi == 0;
        }
        vanish += all;
    }

    auto fg = free_group_backend(2);
    PathWord w = parse_path(*fg, "abA");
    auto sample = random_group_words(2, 20, 5, 1011);
    int anti = 0;
    for (const auto& g : sample) {
        auto p = homogenize(g, w, 1, {}, *fg, 10);
        auto q = homogenize(group_inverse(g), w, 1, {}, *fg, 10);
        Rational gap = p.estimate + q.estimate;
        if (gap < 0) gap = -gap;
        anti += gap <= p.error + q.error;
    }

    // nested samples: the running max of the drift must settle under 8 d(x0, y0)
    Vertex y0 = fg->act(parse_group_word("ab"), {});
    auto words = random_group_words(2, 100, 8, 1012);
    std::vector<Rational> running;
    for (int k = 10; k <= 100; k += 10)
        running.push_back(basepoint_drift(w, 1, {}, y0, *fg, std::vector<GroupWord>(words.begin(), words.begin() + k)));
    bool monotone = true;
    for (std::size_t i = 1; i < running.size(); ++i) monotone = monotone && running[i] >= running[i - 1];
    Rational bound = 8 * fg->distance({}, y0);
    bool settled = running.back() == running[running.size() / 2] && running.back() <= bound;

    auto rt = rank_test(5, 1, 10);
    return {fixers.size() == 20 && vanish == 20 && anti == 20 && monotone && settled && rt.rank == 5,
            "stabiliser vanishing " + frac(vanish, static_cast<long>(fixers.size())) + ", antisymmetry " +
                frac(anti, 20) + ", drift max " + to_string(running.back()) + " <= " + to_string(bound) +
                (settled ? " (settled)" : " (still growing)") + ", rank " + std::to_string(rt.rank) + "/5"};
}

// 11 -----------------------------------------------------------------------
int brute_four_point(const Graph& g) {
    const int n = static_cast<int>(g.size());
    std::vector<std::vector<int>> d(n, std::vector<int>(n, 1 << 20));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j : g.adj[i]) d[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    int best = 0;  // twice delta
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    int s[3] = {d[x][y] + d[z][w], d[x][z] + d[y][w], d[x][w] + d[y][z]};
                    std::sort(s, s + 3);
                    best = std::max(best, s[2] - s[1]);
                }
    return best;
}

Outcome hyperbolicity() {
    Graph tree = tree_graph(2, 4);
    bool tree_ok = four_point_delta(tree) == 0 && slim_delta_sampled(tree, 0, 1) == 0;
    Graph c6 = cycle_graph(6);
    Rational c6_delta = four_point_delta(c6);
    bool c6_ok = c6_delta == Rational(brute_four_point(c6)) / 2;
    Graph farey = farey_ball(13);
    Rational slim = slim_delta_sampled(farey, 20000, 1111);
    auto gg = gg_delta_bound(1);
    bool gg_ok = gg.m == 22 && gg.delta_bound == 28;
    return {tree_ok && c6_ok && slim <= 1 && gg_ok,
            std::string("tree delta 0 ") + (tree_ok ? "both methods" : "MISMATCH") + ", C6 four-point " +
                to_string(c6_delta) + (c6_ok ? " = exhaustive" : " != exhaustive") + ", Farey ball (" +
                std::to_string(farey.size()) + " vertices) slim " + to_string(slim) + ", gg bound m=" +
                to_string(gg.m) + " delta=" + to_string(gg.delta_bound)};
}

// 12 -----------------------------------------------------------------------
Outcome fragmentation() {
    std::mt19937_64 rng(1212);
    int ok = 0;
    for (int i = 0; i < 20; ++i) {
        Rational K = Rational(static_cast<long>(rng() % 2000) - 1000) / static_cast<long>(1 + rng() % 97);
        Rational D = Rational(static_cast<long>(1 + rng() % 5000)) / static_cast<long>(1 + rng() % 89);
        ok += frag_lower_bound((K + 1) * D, D) == K;
    }
    return {ok == 20, "exact recoveries " + frac(ok, 20)};
}

// 13 -----------------------------------------------------------------------
std::string shift_first_x(const std::string& curve_text) {
    std::istringstream in(curve_text);
    std::string x, rest;
    in >> x;
    std::getline(in, rest, '\0');
    return to_string(parse_rational(x) + Rational(1, 4096)) + rest;
}

Outcome certificate_integrity() {
    const Rational eps(1, 5);
    std::mt19937_64 rng(1313);
    int made = 0, verified = 0, rejected = 0;
    std::map<std::string, int> tamper_counts;
    while (made < 50) {
        auto pr = fx::crossing_pair(rng, eps, 8);
        if (!pr) continue;
        Certificate cert = upper_bound_distance(pr->first, pr->second, eps);
        ++made;
        verified += verify_certificate(certificate_from_json(certificate_to_json(cert)), pr->first, pr->second, eps);

        auto j = nlohmann::json::parse(certificate_to_json(cert));
        std::string kind;
        switch (made % 7) {
            case 0: kind = "value"; j["value"] = j["value"].get<long>() + 1; break;
            case 1: kind = "eps"; j["eps"] = "1/6"; break;
            case 2: kind = "weight"; j["steps"][0]["weight"] = j["steps"][0]["weight"].get<long>() + 1; break;
            case 3: kind = "tag"; j["steps"][0]["tag"] = j["steps"][0]["tag"] == "edge" ? "hop" : "edge"; break;
            case 4: kind = "endpoint"; j["steps"].back()["to"] = "a"; break;
            case 5:
                if (!j["vertices"].empty()) {
                    kind = "vertex";
                    auto it = j["vertices"].begin();
                    *it = shift_first_x(it->get<std::string>());
                    break;
                }
                [[fallthrough]];
            default: kind = "curve"; j["b"] = shift_first_x(j["b"].get<std::string>()); break;
        }
        ++tamper_counts[kind];
        bool still_ok = false;
        try {
            still_ok = verify_certificate(certificate_from_json(j.dump()), pr->first, pr->second, eps);
        } catch (const Error&) {
        }
        rejected += !still_ok;
    }
    std::string kinds;
    for (const auto& [k, n] : tamper_counts) kinds += (kinds.empty() ? "" : " ") + k + "=" + std::to_string(n);
    return {verified == 50 && rejected == 50,
            "genuine verified " + frac(verified, 50) + ", tampered rejected " + frac(rejected, 50) + " (" + kinds + ")"};
}

}  // namespace

int main() {
    criterion(1, "exactness", exactness);
    criterion(2, "central vertex", central_vertex);
    criterion(3, "projection nonempty", projection_nonempty);
    criterion(4, "two non-bigons", two_nonbigon);
    criterion(5, "monotone membership", monotone);
    criterion(6, "witness predicate", witness_predicate);
    criterion(7, "Farey distance", farey_exhaustive);
    criterion(8, "orbit growth and two scales", orbit_and_two_scale);
    criterion(9, "BF engine exactness", bf_exactness);
    criterion(10, "quasimorphism properties", qm_properties);
    criterion(11, "hyperbolicity checkers", hyperbolicity);
    criterion(12, "fragmentation", fragmentation);
    criterion(13, "certificate integrity", certificate_integrity);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
