#include "balcurve/farey.hpp"

#include "balcurve/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>

namespace bc {

namespace {

using i64 = std::int64_t;

// Returns (x, y) with a*x + b*y = gcd(a, b) >= 0.
void ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        i64 q = a / b;
        i64 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
}

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

// (r, s) with p*s - q*r = 1.
void unimodular_partner(const Slope& x, i64& r, i64& s) {
    i64 u, v;
    ext_gcd(x.p, x.q, u, v);  // p*u + q*v = 1
    s = u;
    r = -v;
}

}  // namespace

Slope make_slope(i64 p, i64 q) {
    if (p == 0 && q == 0) throw Error("InvalidArgument", "0/0 is not a slope");
    i64 g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

Slope parse_slope(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            i64 p = std::stoll(text, &used);
            if (used != text.size()) throw Error("ParseError", "bad slope " + text);
            return make_slope(p, 1);
        }
        std::string ps = text.substr(0, slash), qs = text.substr(slash + 1);
        i64 p = std::stoll(ps, &used);
        if (used != ps.size()) throw Error("ParseError", "bad slope " + text);
        i64 q = std::stoll(qs, &used);
        if (used != qs.size()) throw Error("ParseError", "bad slope " + text);
        return make_slope(p, q);
    } catch (const std::logic_error&) {
        throw Error("ParseError", "bad slope " + text);
    }
}

std::string to_string(const Slope& s) { return std::to_string(s.p) + "/" + std::to_string(s.q); }

i64 height(const Slope& s) { return std::max(std::llabs(s.p), std::llabs(s.q)); }

bool farey_adjacent(const Slope& a, const Slope& b) { return std::llabs(a.p * b.q - a.q * b.p) == 1; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat_pow(const Mat2& m, int n) {
    if (n < 0) return mat_pow(mat_inverse(m), -n);
    Mat2 r;
    for (int i = 0; i < n; ++i) r = r * m;
    return r;
}

i64 det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 mat_inverse(const Mat2& m) {
    i64 dt = det(m);
    if (dt != 1 && dt != -1) throw Error("NotUnimodular", "det = " + std::to_string(dt));
    return {m.d * dt, -m.b * dt, -m.c * dt, m.a * dt};
}

Mat2 parse_matrix(const std::string& text) {
    std::vector<i64> vals;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ';' || ch == ' ') {
            if (!cur.empty()) {
                try {
                    std::size_t used = 0;
                    vals.push_back(std::stoll(cur, &used));
                    if (used != cur.size()) throw Error("ParseError", "bad matrix entry " + cur);
                } catch (const std::logic_error&) {
                    throw Error("ParseError", "bad matrix entry " + cur);
                }
                cur.clear();
            }
        } else if (ch != '[' && ch != ']') {
            cur += ch;
        }
    }
    if (vals.size() != 4) throw Error("ParseError", "matrix needs 4 entries: " + text);
    return {vals[0], vals[1], vals[2], vals[3]};
}

std::string to_string(const Mat2& m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
           std::to_string(m.d) + "]]";
}

Slope mcg_action(const Mat2& m, const Slope& s) {
    i64 dt = det(m);
    if (dt != 1 && dt != -1) throw Error("NotUnimodular", "det = " + std::to_string(dt));
    return make_slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q);
}

bool is_pseudo_anosov(const Mat2& m) {
    i64 dt = det(m);
    if (dt != 1 && dt != -1) throw Error("NotUnimodular", "det = " + std::to_string(dt));
    return std::llabs(m.a + m.d) > 2;
}

int farey_distance(const Slope& a, const Slope& b) {
    if (a == b) return 0;
    if (farey_adjacent(a, b)) return 1;
    // Send b to 1/0; the image of a is x = p/q with q >= 2.
    i64 r, s;
    unimodular_partner(b, r, s);
    Mat2 ginv{s, -r, -b.q, b.p};
    Slope x = mcg_action(ginv, a);

    // Continued fraction of x and its ladder (convergents plus the fan
    // vertices next to each end of every fan).
    std::vector<i64> cf;
    i64 num = x.p, den = x.q;
    while (den != 0) {
        i64 q = floor_div(num, den);
        cf.push_back(q);
        i64 t = num - q * den;
        num = den;
        den = t;
    }
    std::vector<Slope> nodes{make_slope(1, 0), make_slope(0, 1)};
    i64 pm2 = 0, qm2 = 1, pm1 = 1, qm1 = 0;
    for (std::size_t k = 0; k < cf.size(); ++k) {
        i64 ak = cf[k];
        if (k == 0) {
            // first fan: the integers around a0, all adjacent to 1/0
            for (i64 j : {ak - 1, ak, ak + 1}) nodes.push_back(make_slope(j, 1));
        } else {
            for (i64 j : {i64(1), ak - 1, ak}) {
                if (j < 1 || j > ak) continue;
                nodes.push_back(make_slope(pm2 + j * pm1, qm2 + j * qm1));
            }
        }
        i64 pk = ak * pm1 + pm2, qk = ak * qm1 + qm2;
        pm2 = pm1;
        qm2 = qm1;
        pm1 = pk;
        qm1 = qk;
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto index = [&](const Slope& v) {
        return static_cast<int>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
    };
    int src = index(make_slope(1, 0)), dst = index(x);
    std::vector<int> dist(nodes.size(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == dst) return dist[u];
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            if (dist[v] < 0 && farey_adjacent(nodes[u], nodes[v])) {
                dist[v] = dist[u] + 1;
                queue.push_back(static_cast<int>(v));
            }
        }
    }
    throw Error("InternalError", "ladder disconnected for " + to_string(x));
}

std::vector<Slope> farey_neighbors(const Slope& x, i64 h) {
    std::vector<Slope> out;
    i64 r0, s0;
    unimodular_partner(x, r0, s0);
    // Solutions of p*s - q*r = 1 are (r0 + t p, s0 + t q).
    i64 lo = INT64_MIN / 4, hi = INT64_MAX / 4;
    auto clamp = [&](i64 base, i64 step) {
        if (step == 0) {
            if (std::llabs(base) > h) lo = 1, hi = 0;
            return;
        }
        i64 a = step > 0 ? ceil_div(-h - base, step) : ceil_div(h - base, step);
        i64 b = step > 0 ? floor_div(h - base, step) : floor_div(-h - base, step);
        lo = std::max(lo, a);
        hi = std::min(hi, b);
    };
    clamp(r0, x.p);
    clamp(s0, x.q);
    for (i64 t = lo; t <= hi; ++t) out.push_back(make_slope(r0 + t * x.p, s0 + t * x.q));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Slope> slopes_up_to(i64 h) {
    std::vector<Slope> out{make_slope(1, 0)};
    for (i64 q = 1; q <= h; ++q)
        for (i64 p = -h; p <= h; ++p)
            if (std::gcd(p < 0 ? -p : p, q) == 1) out.push_back({p, q});
    std::sort(out.begin(), out.end());
    return out;
}

int farey_bfs(const Slope& a, const Slope& b, int cap) {
    if (a == b) return 0;
    i64 h = std::max(height(a), height(b));
    std::map<Slope, int> dist{{a, 0}};
    std::deque<Slope> queue{a};
    while (!queue.empty()) {
        Slope u = queue.front();
        queue.pop_front();
        int du = dist[u];
        if (du >= cap) continue;
        for (const auto& v : farey_neighbors(u, h)) {
            if (dist.count(v)) continue;
            if (v == b) return du + 1;
            dist[v] = du + 1;
            queue.push_back(v);
        }
    }
    throw Error("CapExceeded", "distance from " + to_string(a) + " to " + to_string(b) + " exceeds " +
                                   std::to_string(cap));
}

std::vector<OrbitRow> orbit_growth(const Mat2& m, const Slope& s0, int n_max) {
    std::vector<OrbitRow> rows;
    Slope cur = s0;
    for (int n = 1; n <= n_max; ++n) {
        cur = mcg_action(m, cur);
        rows.push_back({n, cur, farey_distance(cur, s0)});
    }
    return rows;
}

double fitted_slope(const std::vector<OrbitRow>& rows) {
    if (rows.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, k = static_cast<double>(rows.size());
    for (const auto& r : rows) {
        sx += r.n;
        sy += r.distance;
        sxx += double(r.n) * r.n;
        sxy += double(r.n) * r.distance;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace bc
