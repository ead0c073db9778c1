#include "balcurve/render.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace bc {

namespace {

constexpr double kSize = 600;
constexpr double kPad = 20;

const char* kAlphaColor = "#1f5fbf";
const char* kBetaColor = "#c0392b";
const char* kPalette[] = {"#1f5fbf", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#2c3e50"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

double sx(const RatPoint& p) { return kPad + p.x.get_d() * kSize; }
double sy(const RatPoint& p) { return kPad + (1 - p.y.get_d()) * kSize; }

std::string xy(const RatPoint& p) { return num(sx(p)) + "," + num(sy(p)); }

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else if (c == '&')
            out += "&amp;";
        else
            out += c;
    }
    return out;
}

std::string header(double extra_height = 0) {
    double w = kSize + 2 * kPad, h = kSize + 2 * kPad + extra_height;
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\" font-family=\"monospace\" font-size=\"12\">\n";
}

std::string square(const std::string& fill = "none") {
    return "<rect x=\"" + num(kPad) + "\" y=\"" + num(kPad) + "\" width=\"" + num(kSize) + "\" height=\"" +
           num(kSize) + "\" fill=\"" + fill + "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
}

std::string ring_path(const std::vector<RatPoint>& pts) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) d += (i ? " L" : "M") + xy(pts[i]);
    return d + " Z";
}

std::string polyline(const std::vector<RatPoint>& pts, bool closed, const std::string& color, double width,
                     const std::string& extra = "") {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) d += (i ? " L" : "M") + xy(pts[i]);
    if (closed) d += " Z";
    return "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(width) + "\"" +
           extra + "/>\n";
}

std::string text(const RatPoint& p, const std::string& s, const std::string& anchor = "middle") {
    return "<text x=\"" + num(sx(p)) + "\" y=\"" + num(sy(p)) + "\" text-anchor=\"" + anchor + "\">" + escape(s) +
           "</text>\n";
}

RatPoint centroid3(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    return {(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
}

// Even-odd fill of a face; the face at infinity also gets the square's outline.
std::string face_path(const Arrangement& arr, const Face& f, const std::string& fill) {
    std::string d;
    if (f.contains_infinity)
        d += ring_path({{0, 0}, {1, 0}, {1, 1}, {0, 1}}) + " ";
    for (int c : f.cycles) d += ring_path(arr.cycle_polygon(c)) + " ";
    return "<path d=\"" + d + "\" fill=\"" + fill + "\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
}

}  // namespace

RatPoint face_label_point(const Arrangement& arr, int face) {
    const Face& f = arr.faces.at(face);
    std::vector<RatPoint> cand;
    for (int c : f.cycles) {
        auto poly = arr.cycle_polygon(c);
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = poly[(i + n - 1) % n];
            const auto& b = poly[i];
            const auto& e = poly[(i + 1) % n];
            cand.push_back(centroid3(a, b, e));
            // a point close to the corner b, for thin faces
            cand.push_back({(a.x + 8 * b.x + e.x) / 10, (a.y + 8 * b.y + e.y) / 10});
        }
    }
    if (f.contains_infinity)
        for (const auto& p : std::vector<RatPoint>{{Rational(1, 50), Rational(1, 50)},
                                                   {Rational(49, 50), Rational(49, 50)},
                                                   {Rational(1, 50), Rational(49, 50)},
                                                   {Rational(49, 50), Rational(1, 50)}})
            cand.push_back(p);
    for (const auto& p : cand) {
        bool on_edge = false;
        for (const auto& other : arr.faces)
            for (int c : other.cycles) {
                auto poly = arr.cycle_polygon(c);
                for (std::size_t i = 0; i < poly.size() && !on_edge; ++i)
                    on_edge = on_segment(p, poly[i], poly[(i + 1) % poly.size()]);
            }
        if (on_edge) continue;
        if (!(p.x > 0 && p.x < 1 && p.y > 0 && p.y < 1)) continue;
        if (arr.locate(p) == face) return p;
    }
    throw Error("InternalError", "no label point for face " + std::to_string(face));
}

std::string render_arrangement_svg(const Arrangement& arr) {
    std::set<int> bigons;
    for (const auto& f : bigon_faces(arr)) bigons.insert(f.id);
    std::string out = header();
    for (const auto& f : arr.faces) {
        bool bigon = bigons.count(f.id) > 0;
        std::string fill = bigon ? "#f5c542" : (f.contains_infinity ? "#f4f4f4" : "#e8eef7");
        out += "<g class=\"face" + std::string(bigon ? " bigon" : "") + "\" id=\"face-" + std::to_string(f.id) +
               "\">\n" + face_path(arr, f, fill);
        out += text(face_label_point(arr, f.id), to_pq(f.area));
        out += "</g>\n";
    }
    out += square();
    out += polyline(arr.alpha_pts, arr.alpha_closed, kAlphaColor, 2);
    out += polyline(arr.beta_pts, arr.beta_closed, kBetaColor, 2);
    for (const auto& c : arr.crossings)
        out += "<circle cx=\"" + num(sx(c.p)) + "\" cy=\"" + num(sy(c.p)) + "\" r=\"3\" fill=\"black\"/>\n";
    return out + "</svg>\n";
}

std::string render_pieces_svg(const std::vector<Piece>& pieces) {
    if (pieces.empty() || pieces.size() > 2) throw Error("InvalidArgument", "expected one or two curves");
    if (pieces.size() == 2) return render_arrangement_svg(build_arrangement(pieces[0].ref(), pieces[1].ref()));
    const Piece& p = pieces[0];
    std::string out = header();
    out += square("#f4f4f4");
    if (p.closed) {
        PolyCurve c = p.curve();
        Rational inside = enclosed_area(c);
        out += "<path d=\"" + ring_path(c.v) + "\" fill=\"#e8eef7\" stroke=\"none\"/>\n";
        RatPoint in = c.v[0];
        const std::size_t n = c.v.size();
        for (std::size_t i = 0; i < n; ++i) {
            RatPoint q = centroid3(c.v[(i + n - 1) % n], c.v[i], c.v[(i + 1) % n]);
            bool on = false;
            for (std::size_t k = 0; k < n && !on; ++k) on = on_segment(q, c.v[k], c.v[(k + 1) % n]);
            if (!on && winding_number(q, c.v) != 0) {
                in = q;
                break;
            }
        }
        out += text(in, to_pq(inside));
        out += text({Rational(1, 50), Rational(1, 50)}, to_pq(1 - inside), "start");
    }
    out += polyline(p.v, p.closed, kAlphaColor, 2);
    return out + "</svg>\n";
}

std::string render_dual_tree_svg(const DualTree& t, const Arrangement& arr) {
    std::string out = header();
    out += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"18\" refY=\"5\" markerWidth=\"8\" "
           "markerHeight=\"8\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n";
    out += square();
    out += polyline(arr.alpha_pts, arr.alpha_closed, kAlphaColor, 1, " stroke-opacity=\"0.4\"");
    out += polyline(arr.beta_pts, arr.beta_closed, kBetaColor, 1, " stroke-opacity=\"0.4\"");
    std::map<int, RatPoint> at;
    for (int v : t.vertices) at.emplace(v, face_label_point(arr, v));
    for (const auto& e : t.edges) {
        const auto& a = at.at(e.a);
        const auto& b = at.at(e.b);
        out += "<line x1=\"" + num(sx(a)) + "\" y1=\"" + num(sy(a)) + "\" x2=\"" + num(sx(b)) + "\" y2=\"" +
               num(sy(b)) + "\" stroke=\"#333\" stroke-width=\"1.5\"" +
               (e.directed && !e.tie ? " marker-end=\"url(#arrow)\"" : "") +
               (e.tie ? " stroke-dasharray=\"5 3\"" : "") + "/>\n";
    }
    for (int v : t.vertices) {
        const auto& p = at.at(v);
        bool central = t.central && *t.central == v;
        out += "<circle cx=\"" + num(sx(p)) + "\" cy=\"" + num(sy(p)) + "\" r=\"9\" fill=\"white\" stroke=\"#333\"/>\n";
        if (central)
            out += "<circle class=\"central\" cx=\"" + num(sx(p)) + "\" cy=\"" + num(sy(p)) +
                   "\" r=\"13\" fill=\"none\" stroke=\"#333\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + num(sx(p)) + "\" y=\"" + num(sy(p) + 4) + "\" text-anchor=\"middle\">f" +
               std::to_string(v) + "</text>\n";
        out += "<text x=\"" + num(sx(p)) + "\" y=\"" + num(sy(p) + 24) + "\" text-anchor=\"middle\">" +
               to_pq(arr.faces[v].area) + "</text>\n";
    }
    return out + "</svg>\n";
}

std::string render_witness_svg(const Witness& w, const std::vector<PolyCurve>& curves) {
    std::string out = header();
    out += square("#fbfbfb");
    for (std::size_t i = 0; i < w.holes.size(); ++i) {
        const auto& h = w.holes[i];
        out += "<path d=\"" + ring_path(h.v) + "\" fill=\"#bbbbbb\" stroke=\"#555\"/>\n";
        RatPoint c{0, 0};
        for (const auto& p : h.v) {
            c.x += p.x;
            c.y += p.y;
        }
        c.x /= static_cast<long>(h.v.size());
        c.y /= static_cast<long>(h.v.size());
        out += text(c, "A" + std::to_string(i + 1));
        out += text({c.x, c.y - Rational(1, 30)}, to_pq(enclosed_area(h)));
    }
    for (const auto& cut : w.cuts) out += polyline(cut.v, false, "#555", 1.5, " stroke-dasharray=\"4 3\"");
    for (std::size_t i = 0; i < curves.size(); ++i) out += polyline(curves[i].v, true, kPalette[i % 7], 2);
    out += text({Rational(1, 50), Rational(1, 50)}, "area(W) = " + to_pq(witness_area(w)), "start");
    return out + "</svg>\n";
}

std::string render_certificate_svg(const Certificate& c) {
    const double line = 16;
    double extra = line * (c.steps.size() + 2);
    std::string out = header(extra);
    out += square();
    std::vector<std::pair<std::string, const PolyCurve*>> shown{{"a", &c.a}};
    for (const auto& [name, curve] : c.vertices) shown.push_back({name, &curve});
    shown.push_back({"b", &c.b});
    for (std::size_t i = 0; i < shown.size(); ++i) {
        const auto& [name, curve] = shown[i];
        out += "<g class=\"vertex\" id=\"v-" + escape(name) + "\">\n" +
               polyline(curve->v, true, kPalette[i % 7], i == 0 || i + 1 == shown.size() ? 2.5 : 1.5) +
               text(curve->v[0], name, "start") + "</g>\n";
    }
    double y = kSize + 2 * kPad + line;
    std::string title = std::string(c.kind == Certificate::Upper ? "upper" : "lower") + " bound " +
                        std::to_string(c.value) + " at eps " + to_pq(c.eps);
    out += "<text x=\"" + num(kPad) + "\" y=\"" + num(y) + "\">" + escape(title) + "</text>\n";
    for (const auto& s : c.steps) {
        y += line;
        std::string row = s.from + " -> " + s.to + "  [" + s.tag + ", " + std::to_string(s.weight) + "]  " + s.claim;
        out += "<text x=\"" + num(kPad) + "\" y=\"" + num(y) + "\">" + escape(row) + "</text>\n";
    }
    return out + "</svg>\n";
}

}  // namespace bc
