// balcurve command-line front end. Everything goes through the C API.

#include "balcurve_c.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Owning wrappers so early returns release handles.
template <class T, void (*F)(T*)>
struct Deleter {
    void operator()(T* p) const { F(p); }
};
using Pieces = std::unique_ptr<bc_pieces, Deleter<bc_pieces, bc_pieces_free>>;
using Witness = std::unique_ptr<bc_witness, Deleter<bc_witness, bc_witness_free>>;
using Cert = std::unique_ptr<bc_cert, Deleter<bc_cert, bc_cert_free>>;
using Backend = std::unique_ptr<bc_backend, Deleter<bc_backend, bc_backend_free>>;

struct Text {
    char* s = nullptr;
    ~Text() { bc_string_free(s); }
    char** out() { return &s; }
    std::string str() const { return s ? s : ""; }
};

struct Failure {
    int code;
};

void check(bc_status st) {
    if (st == BC_OK) return;
    std::cerr << bc_last_error() << "\n";
    throw Failure{st == BC_ERR_USAGE ? 2 : 1};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "IoError: cannot read " << path << "\n";
        throw Failure{2};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "IoError: cannot write " << out_path << "\n";
        throw Failure{2};
    }
    out << text;
}

// All curve files concatenated into one piece list.
Pieces load_pieces(const std::vector<std::string>& files) {
    std::string joined;
    for (const auto& f : files) joined += slurp(f) + "\n\n";
    bc_pieces* p = nullptr;
    check(bc_pieces_parse(joined.c_str(), &p));
    return Pieces(p);
}

Witness load_witness(const std::string& path) {
    std::string text = slurp(path);
    bc_witness* w = nullptr;
    check(bc_witness_parse(text.c_str(), &w));
    return Witness(w);
}

Backend make_backend(const std::string& spec) {
    bc_backend* b = nullptr;
    check(bc_backend_make(spec.c_str(), &b));
    return Backend(b);
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for balanced curves on the measured sphere"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bc_version()));

    int rc = 0;
    std::vector<std::string> files;
    std::string eps, out, svg;
    std::size_t ia = 0, ib = 1;

    auto add_eps = [&](CLI::App* s) { s->add_option("--eps", eps, "balance parameter in (0, 1/2]")->required(); };
    auto add_files = [&](CLI::App* s, int min) {
        s->add_option("files", files, "curve files (concatenated)")->required()->expected(min, -1)->check(
            CLI::ExistingFile);
    };
    auto add_pair = [&](CLI::App* s) {
        s->add_option("--a", ia, "index of the first piece")->capture_default_str();
        s->add_option("--b", ib, "index of the second piece")->capture_default_str();
    };
    auto run = [&](CLI::App* s, std::function<void()> body) {
        s->callback([&rc, body] {
            try {
                body();
            } catch (const Failure& f) {
                rc = f.code;
            }
        });
    };

    // ---- curve
    auto* curve = app.add_subcommand("curve", "curve files");
    curve->require_subcommand(1);
    auto* c_validate = curve->add_subcommand("validate", "validate every piece of a curve file");
    add_files(c_validate, 1);
    run(c_validate, [&] {
        Pieces p = load_pieces(files);
        for (std::size_t i = 0; i < bc_pieces_count(p.get()); ++i) {
            Text t;
            check(bc_curve_validate(p.get(), i, t.out()));
            std::cout << "# piece " << i << "\n" << t.str();
        }
    });
    auto* c_area = curve->add_subcommand("area", "enclosed area of each closed curve");
    add_files(c_area, 1);
    run(c_area, [&] {
        Pieces p = load_pieces(files);
        for (std::size_t i = 0; i < bc_pieces_count(p.get()); ++i) {
            if (!bc_pieces_is_closed(p.get(), i)) continue;
            Text t;
            check(bc_curve_area(p.get(), i, t.out()));
            std::cout << t.str() << "\n";
        }
    });

    // ---- balanced
    auto* bal = app.add_subcommand("balanced", "the balanced curve graph");
    bal->require_subcommand(1);
    auto* b_check = bal->add_subcommand("check", "is the curve eps-balanced");
    add_eps(b_check);
    add_files(b_check, 1);
    b_check->add_option("--index", ia, "piece index")->capture_default_str();
    run(b_check, [&] {
        Pieces p = load_pieces(files);
        int ok = 0;
        check(bc_is_balanced(p.get(), ia, eps.c_str(), &ok));
        std::cout << (ok ? "true" : "false") << "\n";
    });
    auto* b_adj = bal->add_subcommand("adjacent", "adjacency in the balanced curve graph");
    add_eps(b_adj);
    add_files(b_adj, 1);
    add_pair(b_adj);
    run(b_adj, [&] {
        Pieces p = load_pieces(files);
        Text t;
        check(bc_adjacent(p.get(), ia, ib, eps.c_str(), t.out()));
        std::cout << t.str();
    });
    auto* b_adm = bal->add_subcommand("admissible", "admissibility of a pair of pieces");
    add_eps(b_adm);
    add_files(b_adm, 1);
    add_pair(b_adm);
    run(b_adm, [&] {
        Pieces p = load_pieces(files);
        Text t;
        int ok = 0;
        check(bc_admissible(p.get(), ia, ib, eps.c_str(), &ok, t.out()));
        std::cout << t.str();
    });
    auto* b_proj = bal->add_subcommand("project", "construct an equator in the projection set");
    add_eps(b_proj);
    add_files(b_proj, 1);
    add_pair(b_proj);
    b_proj->add_option("--out", out, "output curve file");
    run(b_proj, [&] {
        Pieces p = load_pieces(files);
        bc_pieces* g = nullptr;
        check(bc_project(p.get(), ia, ib, eps.c_str(), &g));
        Pieces gp(g);
        Text t;
        check(bc_pieces_serialize(gp.get(), t.out()));
        emit(t.str(), out);
    });
    auto* b_upper = bal->add_subcommand("upper-bound", "distance upper bound with certificate");
    add_eps(b_upper);
    add_files(b_upper, 1);
    add_pair(b_upper);
    b_upper->add_option("--out", out, "certificate JSON path");
    b_upper->add_option("--svg", svg, "render the certificate chain");
    run(b_upper, [&] {
        Pieces p = load_pieces(files);
        bc_cert* c = nullptr;
        check(bc_upper_bound(p.get(), ia, ib, eps.c_str(), &c));
        Cert cert(c);
        Text json;
        check(bc_cert_to_json(cert.get(), json.out()));
        if (!out.empty()) emit(json.str(), out);
        std::cout << "upper_bound = " << bc_cert_value(cert.get()) << "\n";
        if (!svg.empty()) {
            Text s;
            check(bc_cert_render_svg(cert.get(), s.out()));
            emit(s.str(), svg);
        }
    });
    auto* b_min = bal->add_subcommand("minimal-pair", "shrink two arcs to a minimal pair and build eta");
    add_eps(b_min);
    add_files(b_min, 1);
    add_pair(b_min);
    b_min->add_option("--out", out, "output file for alpha, beta, eta");
    run(b_min, [&] {
        Pieces p = load_pieces(files);
        bc_pieces* r = nullptr;
        check(bc_minimal_pair(p.get(), ia, ib, eps.c_str(), &r));
        Pieces rp(r);
        Text t;
        check(bc_pieces_serialize(rp.get(), t.out()));
        emit(t.str(), out);
    });
    std::string cert_path;
    auto* b_verify = bal->add_subcommand("verify-cert", "re-check a serialized certificate");
    b_verify->add_option("certificate", cert_path, "certificate JSON")->required()->check(CLI::ExistingFile);
    run(b_verify, [&] {
        std::string json = slurp(cert_path);
        bc_cert* c = nullptr;
        check(bc_cert_parse(json.c_str(), &c));
        Cert cert(c);
        int ok = 0;
        Text why;
        check(bc_cert_verify(cert.get(), &ok, why.out()));
        std::cout << (ok ? "true" : "false") << "\n";
        if (!ok) {
            std::cerr << "VerificationFailed: " << why.str() << "\n";
            rc = 1;
        }
    });

    // ---- arr
    auto* arr = app.add_subcommand("arr", "arrangement of two pieces");
    arr->require_subcommand(1);
    auto* a_faces = arr->add_subcommand("faces", "faces with exact areas");
    add_files(a_faces, 1);
    add_pair(a_faces);
    a_faces->add_option("--svg", svg, "render the arrangement");
    run(a_faces, [&] {
        Pieces p = load_pieces(files);
        Text t;
        check(bc_arr_faces(p.get(), ia, ib, t.out()));
        std::cout << t.str();
        if (!svg.empty()) {
            Text s;
            check(bc_arr_render_svg(p.get(), s.out()));
            emit(s.str(), svg);
        }
    });
    auto* a_bigons = arr->add_subcommand("bigons", "bigon faces");
    add_files(a_bigons, 1);
    add_pair(a_bigons);
    run(a_bigons, [&] {
        Pieces p = load_pieces(files);
        Text t;
        check(bc_arr_bigons(p.get(), ia, ib, t.out()));
        std::cout << t.str();
    });
    bool directed = false;
    std::string side;
    auto* a_tree = arr->add_subcommand("dual-tree", "dual tree as DOT");
    add_files(a_tree, 1);
    add_pair(a_tree);
    a_tree->add_flag("--directed", directed, "direct edges toward the larger side and mark the central vertex");
    a_tree->add_option("--side", side, "side of a closed first curve")->check(CLI::IsMember({"inside", "outside"}));
    a_tree->add_option("--svg", svg, "render the directed tree");
    run(a_tree, [&] {
        Pieces p = load_pieces(files);
        Text t;
        check(bc_arr_dual_tree(p.get(), ia, ib, opt(side), directed ? 1 : 0, t.out()));
        std::cout << t.str();
        if (!svg.empty()) {
            Text s;
            check(bc_dual_tree_render_svg(p.get(), ia, ib, opt(side), s.out()));
            emit(s.str(), svg);
        }
    });

    // ---- witness
    auto* wit = app.add_subcommand("witness", "witness subsurfaces");
    wit->require_subcommand(1);
    int n = 4;
    std::string profile = "uniform", eps1;
    auto* w_make = wit->add_subcommand("make", "row-of-holes witness");
    add_eps(w_make);
    w_make->add_option("--n", n, "number of holes")->capture_default_str();
    w_make->add_option("--profile", profile, "uniform or skewed")->check(CLI::IsMember({"uniform", "skewed"}));
    w_make->add_option("--eps1", eps1, "area of the first hole (skewed)");
    w_make->add_option("--out", out, "witness file");
    w_make->add_option("--svg", svg, "render the witness");
    run(w_make, [&] {
        bc_witness* w = nullptr;
        check(bc_witness_make(eps.c_str(), n, profile.c_str(), opt(eps1), &w));
        Witness wp(w);
        Text t;
        check(bc_witness_serialize(wp.get(), t.out()));
        emit(t.str(), out);
        if (!svg.empty()) {
            Text s;
            check(bc_witness_render_svg(wp.get(), nullptr, s.out()));
            emit(s.str(), svg);
        }
    });
    std::string witness_path;
    auto* w_check = wit->add_subcommand("check", "sufficient condition for being a witness");
    add_eps(w_check);
    w_check->add_option("witness", witness_path, "witness file")->required()->check(CLI::ExistingFile);
    run(w_check, [&] {
        Witness w = load_witness(witness_path);
        int ok = 0, hole = -1;
        check(bc_witness_check(w.get(), eps.c_str(), &ok, &hole));
        std::cout << (ok ? "true" : "false") << "\n";
        if (!ok) std::cout << "hole = " << hole + 1 << "\n";
    });
    auto witness_and_curves = [&](CLI::App* s) {
        s->add_option("witness", witness_path, "witness file")->required()->check(CLI::ExistingFile);
        add_files(s, 1);
        s->add_option("--index", ia, "curve index")->capture_default_str();
    };
    auto* w_cuts = wit->add_subcommand("cuts", "does the curve cut the witness");
    witness_and_curves(w_cuts);
    run(w_cuts, [&] {
        Witness w = load_witness(witness_path);
        Pieces p = load_pieces(files);
        Text t;
        check(bc_witness_cuts(w.get(), p.get(), ia, t.out()));
        std::cout << t.str();
    });
    auto* w_proj = wit->add_subcommand("project", "subsurface projection classes");
    witness_and_curves(w_proj);
    run(w_proj, [&] {
        Witness w = load_witness(witness_path);
        Pieces p = load_pieces(files);
        Text t;
        check(bc_witness_project(w.get(), p.get(), ia, t.out()));
        std::cout << t.str();
    });
    auto* w_lower = wit->add_subcommand("lower-bound", "distance lower bound from a witness");
    add_eps(w_lower);
    w_lower->add_option("witness", witness_path, "witness file")->required()->check(CLI::ExistingFile);
    add_files(w_lower, 1);
    add_pair(w_lower);
    w_lower->add_option("--out", out, "certificate JSON path");
    run(w_lower, [&] {
        Witness w = load_witness(witness_path);
        Pieces p = load_pieces(files);
        bc_cert* c = nullptr;
        check(bc_lower_bound(p.get(), ia, ib, w.get(), eps.c_str(), &c));
        Cert cert(c);
        if (!out.empty()) {
            Text json;
            check(bc_cert_to_json(cert.get(), json.out()));
            emit(json.str(), out);
        }
        std::cout << "lower_bound = " << bc_cert_value(cert.get()) << "\n";
    });

    // ---- farey
    auto* far = app.add_subcommand("farey", "the Farey graph");
    far->require_subcommand(1);
    std::string sa, sb;
    long cap = 64;
    auto* f_dist = far->add_subcommand("dist", "distance via continued fractions");
    f_dist->add_option("a", sa)->required();
    f_dist->add_option("b", sb)->required();
    run(f_dist, [&] {
        long d = 0;
        check(bc_farey_dist(sa.c_str(), sb.c_str(), &d));
        std::cout << d << "\n";
    });
    auto* f_bfs = far->add_subcommand("bfs", "distance by bounded-height search");
    f_bfs->add_option("a", sa)->required();
    f_bfs->add_option("b", sb)->required();
    f_bfs->add_option("--cap", cap, "give up beyond this distance")->capture_default_str();
    run(f_bfs, [&] {
        long d = 0;
        check(bc_farey_bfs(sa.c_str(), sb.c_str(), cap, &d));
        std::cout << d << "\n";
    });
    std::string matrix = "2,1;1,1", start = "0/1";
    int n_max = 12;
    auto* f_orbit = far->add_subcommand("orbit-growth", "d(m^n s, s) for n = 1..n-max");
    f_orbit->add_option("--matrix", matrix, "\"a,b;c,d\"")->capture_default_str();
    f_orbit->add_option("--start", start, "starting slope")->capture_default_str();
    f_orbit->add_option("--n-max", n_max)->capture_default_str();
    f_orbit->add_option("--out", out, "CSV path");
    run(f_orbit, [&] {
        Text t;
        check(bc_farey_orbit_growth(matrix.c_str(), start.c_str(), n_max, t.out()));
        emit(t.str(), out);
    });

    // ---- qm
    auto* qm = app.add_subcommand("qm", "Bestvina-Fujiwara quasimorphisms");
    qm->require_subcommand(1);
    std::string backend = "free:2", g, w = "ab", basepoint, x0, y0, defect;
    int R = 1, samples = 100, max_len = 6, size = 5;
    unsigned long long seed = 1;
    auto add_backend = [&](CLI::App* s) {
        s->add_option("--backend", backend, "free:N, line, cycle:N, farey:H")->capture_default_str();
        s->add_option("--w", w, "path word (letters, or slopes for farey)")->capture_default_str();
        s->add_option("--R", R, "0 < R < |w|")->capture_default_str();
    };
    auto* q_eval = qm->add_subcommand("eval", "h_w(g)");
    add_backend(q_eval);
    q_eval->add_option("--g", g, "group element as a word")->required();
    q_eval->add_option("--basepoint", basepoint);
    run(q_eval, [&] {
        Backend b = make_backend(backend);
        Text t;
        check(bc_qm_eval(b.get(), g.c_str(), w.c_str(), R, opt(basepoint), t.out()));
        std::cout << t.str();
    });
    std::string path_text;
    auto* q_copies = qm->add_subcommand("copies", "non-overlapping copies of w in a path");
    add_backend(q_copies);
    q_copies->add_option("--path", path_text)->required();
    run(q_copies, [&] {
        Backend b = make_backend(backend);
        long k = 0;
        check(bc_qm_copies(b.get(), path_text.c_str(), w.c_str(), &k));
        std::cout << k << "\n";
    });
    auto* q_hom = qm->add_subcommand("homogenize", "limit of h_w(g^n)/n");
    add_backend(q_hom);
    q_hom->add_option("--g", g)->required();
    q_hom->add_option("--basepoint", basepoint);
    q_hom->add_option("--n-max", n_max)->capture_default_str();
    q_hom->add_option("--defect", defect, "defect bound used for the error term");
    run(q_hom, [&] {
        Backend b = make_backend(backend);
        Text t;
        check(bc_qm_homogenize(b.get(), g.c_str(), w.c_str(), R, opt(basepoint), n_max, opt(defect), t.out()));
        std::cout << t.str();
    });
    auto add_sample = [&](CLI::App* s) {
        s->add_option("--samples", samples)->capture_default_str();
        s->add_option("--max-len", max_len)->capture_default_str();
        s->add_option("--seed", seed)->capture_default_str();
    };
    auto* q_defect = qm->add_subcommand("defect", "sampled lower bound on the defect");
    add_backend(q_defect);
    add_sample(q_defect);
    run(q_defect, [&] {
        Backend b = make_backend(backend);
        Text t;
        check(bc_qm_defect(b.get(), w.c_str(), R, samples, max_len, seed, t.out()));
        std::cout << t.str() << "\n";
    });
    auto* q_drift = qm->add_subcommand("drift", "sampled basepoint drift");
    add_backend(q_drift);
    add_sample(q_drift);
    q_drift->add_option("--x0", x0);
    q_drift->add_option("--y0", y0)->required();
    run(q_drift, [&] {
        Backend b = make_backend(backend);
        Text t;
        check(bc_qm_drift(b.get(), w.c_str(), R, opt(x0), y0.c_str(), samples, max_len, seed, t.out()));
        std::cout << t.str() << "\n";
    });
    auto* q_rank = qm->add_subcommand("rank-test", "homogenized values of w_k = a b^k on a b^j");
    q_rank->add_option("--size", size)->capture_default_str();
    q_rank->add_option("--R", R)->capture_default_str();
    q_rank->add_option("--n-max", n_max)->capture_default_str();
    run(q_rank, [&] {
        Text t;
        check(bc_qm_rank_test(size, R, n_max, t.out()));
        std::cout << t.str();
    });

    // ---- hyp and gg
    auto* hyp = app.add_subcommand("hyp", "hyperbolicity checks on finite graphs");
    hyp->require_subcommand(1);
    std::string graph = "farey:13", method = "slim", lambda = "1";
    auto* h_delta = hyp->add_subcommand("delta", "four-point or slim-triangle delta");
    h_delta->add_option("--graph", graph, "tree:B:D, cycle:N, path:N, farey:D, file:PATH")->capture_default_str();
    h_delta->add_option("--method", method)->check(CLI::IsMember({"slim", "four-point"}))->capture_default_str();
    h_delta->add_option("--samples", samples, "0 means every triangle")->capture_default_str();
    h_delta->add_option("--seed", seed)->capture_default_str();
    run(h_delta, [&] {
        Text t;
        check(bc_hyp_delta(graph.c_str(), method.c_str(), samples, seed, t.out()));
        std::cout << t.str() << "\n";
    });
    auto* h_gg = hyp->add_subcommand("gg-verify", "guessing geodesics with L = BFS geodesics");
    h_gg->add_option("--graph", graph)->capture_default_str();
    h_gg->add_option("--lambda", lambda)->capture_default_str();
    run(h_gg, [&] {
        int ok = 0;
        Text why;
        check(bc_gg_verify(graph.c_str(), lambda.c_str(), &ok, why.out()));
        std::cout << (ok ? "true" : "false") << "\n";
        if (!ok) std::cout << why.str() << "\n";
    });
    auto delta_bound = [&] {
        Text t;
        check(bc_gg_delta_bound(lambda.c_str(), t.out()));
        std::cout << t.str() << "\n";
    };
    auto* h_bound = hyp->add_subcommand("gg-delta-bound", "constants from the guessing geodesics criterion");
    h_bound->add_option("--lambda", lambda)->required();
    run(h_bound, delta_bound);
    auto* gg = app.add_subcommand("gg", "guessing geodesics constants");
    gg->require_subcommand(1);
    auto* gg_bound = gg->add_subcommand("delta-bound", "same as hyp gg-delta-bound");
    gg_bound->add_option("--lambda", lambda)->required();
    run(gg_bound, delta_bound);

    // ---- frag
    auto* frag = app.add_subcommand("frag", "fragmentation norm certificates");
    frag->require_subcommand(1);
    std::string phi;
    auto* f_bound = frag->add_subcommand("bound", "(phi - D) / D");
    f_bound->add_option("--phi", phi)->required();
    f_bound->add_option("--defect", defect)->required();
    run(f_bound, [&] {
        Text t;
        check(bc_frag_bound(phi.c_str(), defect.c_str(), t.out()));
        std::cout << t.str() << "\n";
    });

    // ---- experiment
    auto* exp = app.add_subcommand("experiment", "named pipelines with fixed CSV schemas");
    exp->require_subcommand(1);
    std::string eps2;
    std::string summary_path;
    auto* e_two = exp->add_subcommand("two-scale", "lower bound at eps2 against the eps1 upper bound");
    e_two->add_option("--n-max", n_max)->capture_default_str();
    e_two->add_option("--eps1", eps1);
    e_two->add_option("--eps2", eps2);
    e_two->add_option("--out", out, "CSV path");
    e_two->add_option("--summary", summary_path, "write the check summary here instead of stderr");
    run(e_two, [&] {
        Text csv, summary;
        check(bc_two_scale(n_max, opt(eps1), opt(eps2), csv.out(), summary.out()));
        emit(csv.str(), out);
        if (summary_path.empty())
            std::cerr << summary.str();
        else
            emit(summary.str(), summary_path);
    });

    // ---- render
    auto* ren = app.add_subcommand("render", "SVG figures");
    ren->require_subcommand(1);
    auto* r_curves = ren->add_subcommand("curves", "one curve or the arrangement of two");
    add_files(r_curves, 1);
    r_curves->add_option("--out", out);
    run(r_curves, [&] {
        Pieces p = load_pieces(files);
        Text t;
        check(bc_arr_render_svg(p.get(), t.out()));
        emit(t.str(), out);
    });
    auto* r_tree = ren->add_subcommand("dual-tree", "directed dual tree over the arrangement");
    add_files(r_tree, 1);
    add_pair(r_tree);
    r_tree->add_option("--side", side)->check(CLI::IsMember({"inside", "outside"}));
    r_tree->add_option("--out", out);
    run(r_tree, [&] {
        Pieces p = load_pieces(files);
        Text t;
        check(bc_dual_tree_render_svg(p.get(), ia, ib, opt(side), t.out()));
        emit(t.str(), out);
    });
    auto* r_wit = ren->add_subcommand("witness", "witness holes and cuts, optionally with curves");
    r_wit->add_option("witness", witness_path)->required()->check(CLI::ExistingFile);
    r_wit->add_option("files", files, "curves to overlay")->check(CLI::ExistingFile);
    r_wit->add_option("--out", out);
    run(r_wit, [&] {
        Witness wp = load_witness(witness_path);
        Pieces p = files.empty() ? Pieces() : load_pieces(files);
        Text t;
        check(bc_witness_render_svg(wp.get(), p.get(), t.out()));
        emit(t.str(), out);
    });
    auto* r_cert = ren->add_subcommand("cert", "certificate chain");
    r_cert->add_option("certificate", cert_path)->required()->check(CLI::ExistingFile);
    r_cert->add_option("--out", out);
    run(r_cert, [&] {
        std::string json = slurp(cert_path);
        bc_cert* c = nullptr;
        check(bc_cert_parse(json.c_str(), &c));
        Cert cert(c);
        Text t;
        check(bc_cert_render_svg(cert.get(), t.out()));
        emit(t.str(), out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}
