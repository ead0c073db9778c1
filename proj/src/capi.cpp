#include "balcurve_c.h"

#include "balcurve/balanced.hpp"
#include "balcurve/hyp.hpp"
#include "balcurve/qm.hpp"
#include "balcurve/render.hpp"
#include "balcurve/witness.hpp"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <sstream>

struct bc_pieces {
    std::vector<bc::Piece> items;
};
struct bc_witness {
    bc::Witness w;
};
struct bc_cert {
    bc::Certificate c;
};
struct bc_backend {
    std::unique_ptr<bc::GraphAction> g;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_name;

// Errors named here are usage problems (exit code 2); the rest are domain errors.
bool is_usage(const std::string& name) {
    return name == "ParseError" || name == "InvalidArgument" || name == "IndexOutOfRange" || name == "IoError" ||
           name == "InvalidEpsilon" || name == "InvalidR" || name == "InvalidPath";
}

bc_status guard(const std::function<void()>& body) {
    g_error.clear();
    g_error_name.clear();
    try {
        body();
        return BC_OK;
    } catch (const bc::Error& e) {
        g_error = e.what();
        g_error_name = e.name();
        return is_usage(e.name()) ? BC_ERR_USAGE : BC_ERR_DOMAIN;
    } catch (const std::bad_alloc&) {
        g_error = g_error_name = "OutOfMemory";
        return BC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_error_name = "InternalError";
        g_error = std::string("InternalError: ") + e.what();
        return BC_ERR_INTERNAL;
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what) {
    if (!p) throw bc::Error("InvalidArgument", std::string(what) + " is null");
}

const bc::Piece& piece(const bc_pieces* p, size_t i) {
    need(p, "pieces");
    if (i >= p->items.size())
        throw bc::Error("IndexOutOfRange", "curve " + std::to_string(i) + " of " + std::to_string(p->items.size()));
    return p->items[i];
}

bc::PolyCurve curve(const bc_pieces* p, size_t i) {
    const auto& pc = piece(p, i);
    if (!pc.closed) throw bc::Error("InvalidArgument", "piece " + std::to_string(i) + " is an arc, not a curve");
    return pc.curve();
}

bc::Rational rat(const char* s, const char* what) {
    need(s, what);
    return bc::parse_rational(s);
}

bc::Rational eps_of(const char* s) {
    bc::Rational e = rat(s, "eps");
    bc::check_epsilon(e);
    return e;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

bc::Graph graph_of(const std::string& spec) {
    auto parts = [&](char sep) {
        std::vector<std::string> out;
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, sep)) out.push_back(item);
        return out;
    };
    if (spec.rfind("file:", 0) == 0) return bc::parse_graph(bc::read_file(spec.substr(5)));
    auto p = parts(':');
    auto num = [&](std::size_t k) {
        if (k >= p.size()) throw bc::Error("InvalidArgument", "graph spec " + spec + " is missing a parameter");
        try {
            return std::stoi(p[k]);
        } catch (const std::logic_error&) {
            throw bc::Error("InvalidArgument", "bad number in graph spec " + spec);
        }
    };
    if (p.empty()) throw bc::Error("InvalidArgument", "empty graph spec");
    if (p[0] == "tree") return bc::tree_graph(num(1), num(2));
    if (p[0] == "cycle") return bc::cycle_graph(num(1));
    if (p[0] == "path") return bc::path_graph(num(1));
    if (p[0] == "farey") return bc::farey_ball(num(1));
    throw bc::Error("InvalidArgument", "unknown graph spec " + spec);
}

bc::Vertex vertex_or_default(const bc_backend* b, const char* text) {
    if (!text || !*text) return b->g->basepoint();
    return b->g->parse_vertex(text);
}

}  // namespace

extern "C" {

const char* bc_last_error(void) { return g_error.c_str(); }
const char* bc_last_error_name(void) { return g_error_name.c_str(); }
void bc_string_free(char* s) { std::free(s); }
const char* bc_version(void) { return "0.1.0"; }

// ---------------------------------------------------------------- curve files

static bc::Piece normalized(bc::Piece pc) {
    if (pc.closed) pc.v = bc::validate_curve(pc.v).v;
    return pc;
}

bc_status bc_pieces_parse(const char* text, bc_pieces** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        auto p = std::make_unique<bc_pieces>();
        for (const auto& pc : bc::parse_pieces(text)) p->items.push_back(normalized(pc));
        *out = p.release();
    });
}

bc_status bc_pieces_load(const char* path, bc_pieces** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        auto p = std::make_unique<bc_pieces>();
        for (const auto& pc : bc::parse_pieces(bc::read_file(path))) p->items.push_back(normalized(pc));
        *out = p.release();
    });
}

void bc_pieces_free(bc_pieces* p) { delete p; }

size_t bc_pieces_count(const bc_pieces* p) { return p ? p->items.size() : 0; }

int bc_pieces_is_closed(const bc_pieces* p, size_t i) {
    return p && i < p->items.size() && p->items[i].closed ? 1 : 0;
}

bc_status bc_pieces_serialize(const bc_pieces* p, char** out) {
    return guard([&] {
        need(p, "pieces");
        std::string s;
        for (std::size_t i = 0; i < p->items.size(); ++i) s += (i ? "\n" : "") + bc::serialize_piece(p->items[i]);
        *out = dup(s);
    });
}

bc_status bc_curve_validate(const bc_pieces* p, size_t i, char** report) {
    return guard([&] {
        const auto& pc = piece(p, i);
        std::string s = "valid\nkind = " + std::string(pc.closed ? "curve" : "arc") +
                        "\nvertices = " + std::to_string(pc.v.size()) + "\n";
        if (pc.closed) s += "area = " + bc::to_pq(bc::enclosed_area(pc.curve())) + "\n";
        else bc::make_arc(pc.v);
        *report = dup(s);
    });
}

bc_status bc_curve_area(const bc_pieces* p, size_t i, char** area) {
    return guard([&] { *area = dup(bc::to_pq(bc::enclosed_area(curve(p, i)))); });
}

// ---------------------------------------------------------------- balanced graph

bc_status bc_is_balanced(const bc_pieces* p, size_t i, const char* eps, int* result) {
    return guard([&] { *result = bc::is_balanced(curve(p, i), eps_of(eps)) ? 1 : 0; });
}

bc_status bc_adjacent(const bc_pieces* p, size_t i, size_t j, const char* eps, char** report) {
    return guard([&] {
        auto r = bc::adjacent(curve(p, i), curve(p, j), eps_of(eps));
        std::string s = bool_text(r.adjacent()) + "\nkind = " + bc::adjacency_name(r.kind) + "\n";
        for (const auto& q : r.points) s += "point = " + bc::to_pq(q.x) + " " + bc::to_pq(q.y) + "\n";
        if (!r.reason.empty()) s += "reason = " + r.reason + "\n";
        *report = dup(s);
    });
}

bc_status bc_admissible(const bc_pieces* p, size_t i, size_t j, const char* eps, int* ok, char** report) {
    return guard([&] {
        auto r = bc::admissible(piece(p, i).ref(), piece(p, j).ref(), eps_of(eps));
        *ok = r.ok ? 1 : 0;
        std::string s = bool_text(r.ok) + "\n";
        if (!r.ok) s += "face = " + std::to_string(r.face) + "\narea = " + bc::to_pq(r.area) + "\n";
        *report = dup(s);
    });
}

bc_status bc_project(const bc_pieces* p, size_t i, size_t j, const char* eps, bc_pieces** out) {
    return guard([&] {
        auto g = bc::construct_projection_equator(piece(p, i).ref(), piece(p, j).ref(), eps_of(eps));
        auto r = std::make_unique<bc_pieces>();
        r->items.push_back({g.v, true});
        *out = r.release();
    });
}

bc_status bc_minimal_pair(const bc_pieces* p, size_t i, size_t j, const char* eps, bc_pieces** out) {
    return guard([&] {
        const auto& a = piece(p, i);
        const auto& b = piece(p, j);
        if (a.closed || b.closed) throw bc::Error("InvalidArgument", "minimal-pair expects two arcs");
        auto mp = bc::minimal_pair(a.arc(), b.arc(), eps_of(eps));
        auto r = std::make_unique<bc_pieces>();
        r->items.push_back({mp.alpha.v, false});
        r->items.push_back({mp.beta.v, false});
        r->items.push_back({mp.eta.v, true});
        *out = r.release();
    });
}

bc_status bc_upper_bound(const bc_pieces* p, size_t i, size_t j, const char* eps, bc_cert** out) {
    return guard([&] {
        auto c = std::make_unique<bc_cert>();
        c->c = bc::upper_bound_distance(curve(p, i), curve(p, j), eps_of(eps));
        *out = c.release();
    });
}

// ---------------------------------------------------------------- certificates

bc_status bc_cert_parse(const char* json, bc_cert** out) {
    return guard([&] {
        need(json, "json");
        auto c = std::make_unique<bc_cert>();
        c->c = bc::certificate_from_json(json);
        *out = c.release();
    });
}

void bc_cert_free(bc_cert* c) { delete c; }

bc_status bc_cert_to_json(const bc_cert* c, char** out) {
    return guard([&] {
        need(c, "certificate");
        *out = dup(bc::certificate_to_json(c->c));
    });
}

long bc_cert_value(const bc_cert* c) { return c ? c->c.value : -1; }
int bc_cert_is_upper(const bc_cert* c) { return c && c->c.kind == bc::Certificate::Upper ? 1 : 0; }

bc_status bc_cert_verify(const bc_cert* c, int* ok, char** failure) {
    return guard([&] {
        need(c, "certificate");
        const auto& k = c->c;
        bc::VerifyReport r = k.kind == bc::Certificate::Upper ? bc::verify_certificate_report(k, k.a, k.b, k.eps)
                                                              : bc::verify_lower_certificate(k, k.a, k.b, k.eps);
        *ok = r.ok ? 1 : 0;
        if (failure) *failure = dup(r.failure);
    });
}

bc_status bc_cert_render_svg(const bc_cert* c, char** svg) {
    return guard([&] {
        need(c, "certificate");
        *svg = dup(bc::render_certificate_svg(c->c));
    });
}

// ---------------------------------------------------------------- arrangements

bc_status bc_arr_faces(const bc_pieces* p, size_t i, size_t j, char** report) {
    return guard([&] {
        auto arr = bc::build_arrangement(piece(p, i).ref(), piece(p, j).ref());
        std::string s = "faces = " + std::to_string(arr.faces.size()) + "\n";
        bc::Rational total = 0;
        for (const auto& f : arr.faces) {
            total += f.area;
            s += "face " + std::to_string(f.id) + " area " + bc::to_pq(f.area) + " sides " +
                 std::to_string(f.sides()) + (f.contains_infinity ? " infinity" : "") + "\n";
        }
        s += "total = " + bc::to_pq(total) + "\n";
        *report = dup(s);
    });
}

bc_status bc_arr_bigons(const bc_pieces* p, size_t i, size_t j, char** report) {
    return guard([&] {
        auto arr = bc::build_arrangement(piece(p, i).ref(), piece(p, j).ref());
        auto bigons = bc::bigon_faces(arr);
        std::string s = "bigons = " + std::to_string(bigons.size()) + "\nnon_bigons = " +
                        std::to_string(bc::non_bigon_count(arr)) + "\n";
        for (const auto& f : bigons) s += "face " + std::to_string(f.id) + " area " + bc::to_pq(f.area) + "\n";
        *report = dup(s);
    });
}

static std::optional<bc::SideSelector> side_of(const char* side) {
    if (!side) return std::nullopt;
    std::string s = side;
    if (s == "inside") return bc::SideSelector::Inside;
    if (s == "outside") return bc::SideSelector::Outside;
    throw bc::Error("InvalidArgument", "side must be inside or outside");
}

bc_status bc_arr_dual_tree(const bc_pieces* p, size_t i, size_t j, const char* side, int directed, char** dot) {
    return guard([&] {
        auto arr = bc::build_arrangement(piece(p, i).ref(), piece(p, j).ref());
        auto t = bc::dual_tree(arr, side_of(side));
        if (directed) t = bc::direct_and_center(t, arr);
        *dot = dup(bc::dual_tree_dot(t, arr));
    });
}

bc_status bc_arr_render_svg(const bc_pieces* p, char** svg) {
    return guard([&] {
        need(p, "pieces");
        *svg = dup(bc::render_pieces_svg(p->items));
    });
}

bc_status bc_dual_tree_render_svg(const bc_pieces* p, size_t i, size_t j, const char* side, char** svg) {
    return guard([&] {
        auto arr = bc::build_arrangement(piece(p, i).ref(), piece(p, j).ref());
        auto t = bc::direct_and_center(bc::dual_tree(arr, side_of(side)), arr);
        *svg = dup(bc::render_dual_tree_svg(t, arr));
    });
}

// ---------------------------------------------------------------- witnesses

bc_status bc_witness_make(const char* eps, int n, const char* profile, const char* eps1, bc_witness** out) {
    return guard([&] {
        need(profile, "profile");
        std::string pr = profile;
        bc::Profile kind;
        if (pr == "uniform")
            kind = bc::Profile::Uniform;
        else if (pr == "skewed")
            kind = bc::Profile::Skewed;
        else
            throw bc::Error("InvalidArgument", "profile must be uniform or skewed");
        bc::Rational e1 = 0;
        if (kind == bc::Profile::Skewed) e1 = rat(eps1, "eps1");
        auto w = std::make_unique<bc_witness>();
        w->w = bc::make_witness(eps_of(eps), n, kind, e1);
        *out = w.release();
    });
}

bc_status bc_witness_parse(const char* text, bc_witness** out) {
    return guard([&] {
        need(text, "text");
        auto w = std::make_unique<bc_witness>();
        w->w = bc::parse_witness(text);
        *out = w.release();
    });
}

bc_status bc_witness_load(const char* path, bc_witness** out) {
    return guard([&] {
        need(path, "path");
        auto w = std::make_unique<bc_witness>();
        w->w = bc::parse_witness(bc::read_file(path));
        *out = w.release();
    });
}

void bc_witness_free(bc_witness* w) { delete w; }

bc_status bc_witness_serialize(const bc_witness* w, char** out) {
    return guard([&] {
        need(w, "witness");
        *out = dup(bc::serialize_witness(w->w));
    });
}

bc_status bc_witness_check(const bc_witness* w, const char* eps, int* ok, int* hole) {
    return guard([&] {
        need(w, "witness");
        auto r = bc::witness_check(w->w, eps_of(eps));
        *ok = r.ok ? 1 : 0;
        if (hole) *hole = r.hole;
    });
}

bc_status bc_witness_cuts(const bc_witness* w, const bc_pieces* p, size_t i, char** report) {
    return guard([&] {
        need(w, "witness");
        auto r = bc::cuts_witness(curve(p, i), w->w);
        std::string s = bool_text(r.cuts) + "\n";
        for (const auto& c : r.closed)
            s += std::string("closed ") + bc::closed_kind_name(c.kind) + " " + bc::word_to_string(c.word) + "\n";
        for (const auto& a : r.arcs)
            s += "arc " + std::to_string(a.from_hole + 1) + "->" + std::to_string(a.to_hole + 1) + " " +
                 (a.essential ? "essential " : "inessential ") + bc::word_to_string(a.word) + "\n";
        *report = dup(s);
    });
}

bc_status bc_witness_project(const bc_witness* w, const bc_pieces* p, size_t i, char** report) {
    return guard([&] {
        need(w, "witness");
        auto classes = bc::project_to_witness(curve(p, i), w->w);
        std::string s;
        for (const auto& c : classes) {
            s += bc::word_to_string(c.word) + " " + c.partition();
            if (w->w.n() == 4) s += " slope " + bc::to_string(bc::slope_of(c, 4));
            s += "\n";
        }
        *report = dup(s);
    });
}

bc_status bc_lower_bound(const bc_pieces* p, size_t i, size_t j, const bc_witness* w, const char* eps,
                         bc_cert** out) {
    return guard([&] {
        need(w, "witness");
        auto c = std::make_unique<bc_cert>();
        c->c = bc::lower_bound_distance(curve(p, i), curve(p, j), w->w, eps_of(eps));
        *out = c.release();
    });
}

bc_status bc_witness_render_svg(const bc_witness* w, const bc_pieces* curves, char** svg) {
    return guard([&] {
        need(w, "witness");
        std::vector<bc::PolyCurve> cs;
        if (curves)
            for (const auto& pc : curves->items)
                if (pc.closed) cs.push_back(pc.curve());
        *svg = dup(bc::render_witness_svg(w->w, cs));
    });
}

// ---------------------------------------------------------------- Farey

bc_status bc_farey_dist(const char* a, const char* b, long* out) {
    return guard([&] {
        need(a, "a");
        need(b, "b");
        *out = bc::farey_distance(bc::parse_slope(a), bc::parse_slope(b));
    });
}

bc_status bc_farey_bfs(const char* a, const char* b, long cap, long* out) {
    return guard([&] {
        need(a, "a");
        need(b, "b");
        *out = bc::farey_bfs(bc::parse_slope(a), bc::parse_slope(b), static_cast<int>(cap));
    });
}

bc_status bc_farey_orbit_growth(const char* matrix, const char* s0, int n_max, char** csv) {
    return guard([&] {
        need(matrix, "matrix");
        bc::Mat2 m = bc::parse_matrix(matrix);
        bc::Slope start = s0 ? bc::parse_slope(s0) : bc::make_slope(0, 1);
        if (!bc::is_pseudo_anosov(m)) throw bc::Error("NotPseudoAnosov", "|trace| must exceed 2");
        auto rows = bc::orbit_growth(m, start, n_max);
        std::string s = "n,image,farey_distance\n";
        for (const auto& r : rows)
            s += std::to_string(r.n) + "," + bc::to_string(r.image) + "," + std::to_string(r.distance) + "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "# fitted_slope=%.6f\n", bc::fitted_slope(rows));
        *csv = dup(s + buf);
    });
}

// ---------------------------------------------------------------- quasimorphisms

bc_status bc_backend_make(const char* spec, bc_backend** out) {
    return guard([&] {
        need(spec, "spec");
        auto b = std::make_unique<bc_backend>();
        b->g = bc::make_backend(spec);
        *out = b.release();
    });
}

void bc_backend_free(bc_backend* b) { delete b; }

bc_status bc_qm_eval(const bc_backend* b, const char* g, const char* w, int R, const char* basepoint, char** report) {
    return guard([&] {
        need(b, "backend");
        need(g, "g");
        need(w, "w");
        auto r = bc::h_w(bc::parse_group_word(g), bc::parse_path(*b->g, w), R, vertex_or_default(b, basepoint), *b->g);
        *report = dup(bc::format_report(*b->g, r));
    });
}

bc_status bc_qm_copies(const bc_backend* b, const char* path, const char* w, long* out) {
    return guard([&] {
        need(b, "backend");
        need(path, "path");
        need(w, "w");
        *out = bc::count_copies(bc::parse_path(*b->g, path), bc::parse_path(*b->g, w), *b->g);
    });
}

bc_status bc_qm_homogenize(const bc_backend* b, const char* g, const char* w, int R, const char* basepoint, int n_max,
                           const char* defect_bound, char** report) {
    return guard([&] {
        need(b, "backend");
        need(g, "g");
        need(w, "w");
        bc::Rational D = defect_bound ? bc::parse_rational(defect_bound) : bc::Rational(0);
        auto hz = bc::homogenize(bc::parse_group_word(g), bc::parse_path(*b->g, w), R, vertex_or_default(b, basepoint),
                                 *b->g, n_max, D);
        std::string s = "estimate = " + bc::to_string(hz.estimate) + "\nerror = " + bc::to_string(hz.error) +
                        "\narithmetic = " + bool_text(hz.arithmetic) + "\nterms =";
        for (const auto& t : hz.terms) s += " " + bc::to_string(t);
        *report = dup(s + "\n");
    });
}

bc_status bc_qm_defect(const bc_backend* b, const char* w, int R, int samples, int max_len, unsigned long long seed,
                       char** value) {
    return guard([&] {
        need(b, "backend");
        need(w, "w");
        auto words = bc::random_group_words(b->g->generators(), 2 * samples, max_len, seed);
        std::vector<std::pair<bc::GroupWord, bc::GroupWord>> pairs;
        for (int k = 0; k < samples; ++k) pairs.push_back({words[2 * k], words[2 * k + 1]});
        *value = dup(bc::to_string(bc::defect_estimate(bc::parse_path(*b->g, w), R, *b->g, pairs)));
    });
}

bc_status bc_qm_drift(const bc_backend* b, const char* w, int R, const char* x0, const char* y0, int samples,
                      int max_len, unsigned long long seed, char** value) {
    return guard([&] {
        need(b, "backend");
        need(w, "w");
        auto words = bc::random_group_words(b->g->generators(), samples, max_len, seed);
        *value = dup(bc::to_string(bc::basepoint_drift(bc::parse_path(*b->g, w), R, vertex_or_default(b, x0),
                                                       vertex_or_default(b, y0), *b->g, words)));
    });
}

bc_status bc_qm_rank_test(int size, int R, int n_max, char** report) {
    return guard([&] {
        auto rt = bc::rank_test(size, R, n_max);
        std::string s;
        for (const auto& row : rt.matrix) {
            for (std::size_t k = 0; k < row.size(); ++k) s += (k ? " " : "") + bc::to_string(row[k]);
            s += "\n";
        }
        s += "rank = " + std::to_string(rt.rank) + "\nexact = " + bool_text(rt.all_exact) + "\n";
        *report = dup(s);
    });
}

// ---------------------------------------------------------------- hyperbolicity

bc_status bc_hyp_delta(const char* graph, const char* method, int samples, unsigned long long seed, char** value) {
    return guard([&] {
        need(graph, "graph");
        need(method, "method");
        bc::Graph g = graph_of(graph);
        std::string m = method;
        if (m == "four-point")
            *value = dup(bc::to_string(bc::four_point_delta(g)));
        else if (m == "slim")
            *value = dup(bc::to_string(bc::slim_delta_sampled(g, samples, seed)));
        else
            throw bc::Error("InvalidArgument", "method must be four-point or slim");
    });
}

bc_status bc_gg_verify(const char* graph, const char* lambda, int* ok, char** failure) {
    return guard([&] {
        need(graph, "graph");
        bc::Graph g = graph_of(graph);
        auto r = bc::gg_verify(g, bc::geodesic_family(g), rat(lambda, "lambda"));
        *ok = r.ok ? 1 : 0;
        if (failure) *failure = dup(r.failure);
    });
}

bc_status bc_gg_delta_bound(const char* lambda, char** report) {
    return guard([&] {
        auto p = bc::gg_delta_bound(rat(lambda, "lambda"));
        *report = dup("m=" + bc::to_string(p.m) + " delta=" + bc::to_string(p.delta_bound));
    });
}

bc_status bc_frag_bound(const char* phi, const char* defect, char** value) {
    return guard([&] { *value = dup(bc::to_string(bc::frag_lower_bound(rat(phi, "phi"), rat(defect, "defect")))); });
}

// ---------------------------------------------------------------- experiments

bc_status bc_two_scale(int n_max, const char* eps1, const char* eps2, char** csv, char** summary) {
    return guard([&] {
        bc::Rational e1 = eps1 ? bc::parse_rational(eps1) : bc::Rational(1, 4);
        bc::Rational e2 = eps2 ? bc::parse_rational(eps2) : bc::Rational(1, 2);
        auto r = bc::two_scale_experiment(n_max, e1, e2);
        *csv = dup(bc::two_scale_csv(r));
        if (summary) {
            long reach = -1;
            for (const auto& row : r.rows)
                if (row.lower_bound >= 2) {
                    reach = row.n;
                    break;
                }
            std::string s = "eps1 = " + bc::to_pq(r.eps1) + "\neps2 = " + bc::to_pq(r.eps2) +
                            "\nmatrix = " + bc::to_string(r.matrix) + "\nalpha_slope = " +
                            bc::to_string(r.alpha_slope) + "\neta_balanced_eps1 = " + bool_text(r.eta_balanced_eps1) +
                            "\neta_disjoint_alpha = " + bool_text(r.eta_disjoint_alpha) +
                            "\neta_not_balanced_eps2 = " + bool_text(r.eta_not_balanced_eps2) +
                            "\nwords_match_matrix = " + bool_text(r.words_match_matrix) +
                            "\nlower_bound_reaches_2_at = " + std::to_string(reach) + "\n";
            *summary = dup(s);
        }
    });
}

}  // extern "C"
