#pragma once

// Independent reference implementations used by the unit and acceptance tests.

#include "balcurve/geometry.hpp"
#include "balcurve/qm.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

// Enclosed area by fan triangulation from the first vertex, summed with exact
// rationals and taking the smaller-winding side (the side away from infinity).
inline bc::Rational fan_area(const std::vector<bc::RatPoint>& v) {
    bc::Rational twice = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const auto& a = v[0];
        const auto& b = v[i];
        const auto& c = v[i + 1];
        twice += (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    }
    if (twice < 0) twice = -twice;
    return twice / 2;
}

// Maximum number of non-overlapping occurrences of w in a letter sequence, by
// dynamic programming over prefixes (no greedy argument involved).
inline int max_copies(const std::vector<int>& labels, const std::vector<int>& w) {
    const std::size_t n = labels.size(), m = w.size();
    std::vector<int> best(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        best[i] = best[i - 1];
        if (i >= m && std::equal(w.begin(), w.end(), labels.begin() + static_cast<long>(i - m)))
            best[i] = std::max(best[i], best[i - m] + 1);
    }
    return best[n];
}

// c_{w,R}(x, y) on the free group by enumerating every walk from x to y whose
// length is at most d * m / (m - R); longer walks cannot beat the geodesic.
inline bc::Rational free_group_c(const bc::GraphAction& fg, const bc::Vertex& x, const bc::Vertex& y,
                                 const std::vector<int>& w, int R) {
    const int d = fg.distance(x, y);
    const int m = static_cast<int>(w.size());
    const int L = d * m / (m - R);
    const int r = fg.generators();
    long best = d;
    std::vector<int> labels;
    bc::Vertex v = x;
    auto dist_to_y = [&]() {
        std::size_t k = 0;
        while (k < v.size() && k < y.size() && v[k] == y[k]) ++k;
        return static_cast<int>(v.size() + y.size() - 2 * k);
    };
    std::function<void()> walk = [&]() {
        const int len = static_cast<int>(labels.size());
        if (v == y) best = std::min<long>(best, len - static_cast<long>(R) * max_copies(labels, w));
        if (len == L) return;
        for (int s = -r; s <= r; ++s) {
            if (s == 0) continue;
            bool back = !v.empty() && v.back() == -s;
            if (back)
                v.pop_back();
            else
                v.push_back(s);
            if (dist_to_y() <= L - len - 1) {
                labels.push_back(s);
                walk();
                labels.pop_back();
            }
            if (back)
                v.push_back(-s);
            else
                v.pop_back();
        }
    };
    walk();
    return bc::Rational(d - best);
}

}  // namespace oracle
