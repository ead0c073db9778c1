#pragma once

// Curve generators shared by the unit tests and the acceptance run.

#include "balcurve/balanced.hpp"
#include "balcurve/region.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

namespace fx {

using bc::PolyArc;
using bc::PolyCurve;
using bc::Rational;
using bc::RatPoint;

inline RatPoint dyadic(double x, double y) { return {bc::dyadic_floor(x, 16), bc::dyadic_floor(y, 16)}; }

inline PolyCurve rect(Rational x0, Rational y0, Rational x1, Rational y1) {
    return bc::validate_curve({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

// n vertices around (1/2, 1/2), alternating between radii r0 and r1.
inline PolyCurve polar(int n, double r0, double r1, double phase) {
    std::vector<RatPoint> v;
    for (int k = 0; k < n; ++k) {
        double a = 2 * std::numbers::pi * (k + phase) / n;
        double r = (k % 2 == 0) ? r0 : r1;
        v.push_back(dyadic(0.5 + r * std::cos(a), 0.5 + r * std::sin(a)));
    }
    return bc::validate_curve(v);
}

// Two eps-balanced curves crossing transversally, or nothing if the draw was unlucky.
inline std::optional<std::pair<PolyCurve, PolyCurve>> crossing_pair(std::mt19937_64& rng, const Rational& eps,
                                                                    int n = 10) {
    PolyCurve a = bc::random_curve(rng, n, 0.5, 0.5, 0.2, 0.4);
    PolyCurve b = bc::random_curve(rng, n, 0.5, 0.5, 0.2, 0.4);
    if (bc::pair_status(a, b).kind != bc::PairStatus::Transverse) return std::nullopt;
    if (!bc::is_balanced(a, eps) || !bc::is_balanced(b, eps)) return std::nullopt;
    return std::make_pair(a, b);
}

// Subarc of a running from just before crossing `first` to just after crossing `last`.
inline PolyArc arc_over_crossings(const PolyCurve& a, const PolyCurve& b, std::size_t first, std::size_t last) {
    auto X = bc::crossing_positions(a, b);
    return bc::chain_subarc(a, bc::push_backward(a, X[first], X), bc::push_forward(a, X[last], X));
}

}  // namespace fx

// Runs expr and checks that it throws bc::Error with the given name.
#define CHECK_THROWS_NAMED(expr, expected)                   \
    do {                                                     \
        std::string caught_;                                 \
        try {                                                \
            (void)(expr);                                    \
        } catch (const bc::Error& e) {                       \
            caught_ = e.name();                              \
        }                                                    \
        CHECK(caught_ == std::string(expected));             \
    } while (0)
