// The C interface, exercised the way a foreign caller would: handles, status
// codes, owned strings.

#include <doctest.h>

#include "balcurve_c.h"

#include <string>

namespace {

const char* kTwoRects =
    "1/10 1/10\n9/10 1/10\n9/10 29/40\n1/10 29/40\n"
    "\n"
    "1/5 1/30\n4/5 1/30\n4/5 43/48\n1/5 43/48\n";

std::string take(char* s) {
    std::string out = s ? s : "";
    bc_string_free(s);
    return out;
}

struct Handles {
    bc_pieces* p = nullptr;
    Handles() { REQUIRE(bc_pieces_parse(kTwoRects, &p) == BC_OK); }
    ~Handles() { bc_pieces_free(p); }
};

}  // namespace

TEST_CASE("parse, count, serialize") {
    Handles h;
    CHECK(bc_pieces_count(h.p) == 2);
    CHECK(bc_pieces_is_closed(h.p, 0) == 1);
    CHECK(bc_pieces_is_closed(h.p, 7) == 0);
    char* text = nullptr;
    REQUIRE(bc_pieces_serialize(h.p, &text) == BC_OK);
    CHECK(take(text) == kTwoRects);
    char* area = nullptr;
    REQUIRE(bc_curve_area(h.p, 0, &area) == BC_OK);
    CHECK(take(area) == "1/2");
}

TEST_CASE("status codes and error names") {
    bc_pieces* p = nullptr;
    CHECK(bc_pieces_parse("1/2 nope\n", &p) == BC_ERR_USAGE);
    CHECK(std::string(bc_last_error_name()) == "ParseError");
    CHECK(p == nullptr);
    CHECK(bc_pieces_parse("0 0\n1 0\n1 1/2\n", &p) == BC_ERR_DOMAIN);
    CHECK(std::string(bc_last_error_name()) == "OutOfDomain");
    CHECK(std::string(bc_last_error()).rfind("OutOfDomain:", 0) == 0);

    Handles h;
    int ok = -1;
    CHECK(bc_is_balanced(h.p, 0, "3/4", &ok) == BC_ERR_USAGE);
    CHECK(std::string(bc_last_error_name()) == "InvalidEpsilon");
    CHECK(bc_is_balanced(h.p, 5, "1/2", &ok) == BC_ERR_USAGE);
    CHECK(std::string(bc_last_error_name()) == "IndexOutOfRange");
    CHECK(bc_is_balanced(nullptr, 0, "1/2", &ok) != BC_OK);
    CHECK(bc_pieces_load("/nonexistent/curve.txt", &p) == BC_ERR_USAGE);
    bc_pieces_free(nullptr);
    bc_cert_free(nullptr);
    bc_witness_free(nullptr);
    bc_backend_free(nullptr);
}

TEST_CASE("balanced graph calls") {
    Handles h;
    int ok = -1;
    REQUIRE(bc_is_balanced(h.p, 0, "1/2", &ok) == BC_OK);
    CHECK(ok == 1);
    REQUIRE(bc_is_balanced(h.p, 1, "1/2", &ok) == BC_OK);
    CHECK(ok == 0);
    char* report = nullptr;
    REQUIRE(bc_adjacent(h.p, 0, 1, "1/5", &report) == BC_OK);
    std::string adj = take(report);
    CHECK(adj.rfind("false\nkind = NotAdjacent\n", 0) == 0);

    bc_cert* cert = nullptr;
    REQUIRE(bc_upper_bound(h.p, 0, 1, "1/5", &cert) == BC_OK);
    CHECK(bc_cert_value(cert) == 2);
    CHECK(bc_cert_is_upper(cert) == 1);
    char* json = nullptr;
    REQUIRE(bc_cert_to_json(cert, &json) == BC_OK);
    std::string j = take(json);
    bc_cert* again = nullptr;
    REQUIRE(bc_cert_parse(j.c_str(), &again) == BC_OK);
    char* failure = nullptr;
    REQUIRE(bc_cert_verify(again, &ok, &failure) == BC_OK);
    CHECK(ok == 1);
    take(failure);
    bc_cert_free(again);
    bc_cert_free(cert);

    CHECK(bc_cert_parse("{not json", &again) == BC_ERR_USAGE);
}

TEST_CASE("arrangement reports") {
    Handles h;
    char* report = nullptr;
    REQUIRE(bc_arr_faces(h.p, 0, 1, &report) == BC_OK);
    std::string faces = take(report);
    CHECK(faces.rfind("faces = 6\n", 0) == 0);
    CHECK(faces.find("total = 1/1") != std::string::npos);
    char* dot = nullptr;
    CHECK(bc_arr_dual_tree(h.p, 0, 1, nullptr, 1, &dot) == BC_ERR_USAGE);
    REQUIRE(bc_arr_dual_tree(h.p, 0, 1, "inside", 1, &dot) == BC_OK);
    CHECK(take(dot).find("doublecircle") != std::string::npos);
    char* svg = nullptr;
    REQUIRE(bc_arr_render_svg(h.p, &svg) == BC_OK);
    CHECK(take(svg).rfind("<svg", 0) == 0);
}

TEST_CASE("witness round trip through the C interface") {
    bc_witness* w = nullptr;
    REQUIRE(bc_witness_make("1/2", 4, "uniform", nullptr, &w) == BC_OK);
    char* text = nullptr;
    REQUIRE(bc_witness_serialize(w, &text) == BC_OK);
    std::string t = take(text);
    bc_witness* w2 = nullptr;
    REQUIRE(bc_witness_parse(t.c_str(), &w2) == BC_OK);
    REQUIRE(bc_witness_serialize(w2, &text) == BC_OK);
    CHECK(take(text) == t);
    int ok = -1, hole = -1;
    REQUIRE(bc_witness_check(w2, "1/2", &ok, &hole) == BC_OK);
    CHECK(ok == 1);
    bc_witness_free(w2);
    bc_witness_free(w);
    CHECK(bc_witness_make("2/5", 4, "uniform", nullptr, &w) == BC_ERR_DOMAIN);
    CHECK(std::string(bc_last_error_name()) == "InfeasibleParameters");
}

TEST_CASE("farey, quasimorphisms, hyperbolicity") {
    long d = -1;
    REQUIRE(bc_farey_dist("0/1", "2/5", &d) == BC_OK);
    CHECK(d == 2);
    REQUIRE(bc_farey_bfs("0/1", "2/5", 10, &d) == BC_OK);
    CHECK(d == 2);

    bc_backend* b = nullptr;
    REQUIRE(bc_backend_make("free:2", &b) == BC_OK);
    char* report = nullptr;
    REQUIRE(bc_qm_eval(b, "ababab", "ab", 1, nullptr, &report) == BC_OK);
    CHECK(take(report).rfind("h = 3\n", 0) == 0);
    long copies = 0;
    REQUIRE(bc_qm_copies(b, "abab", "ab", &copies) == BC_OK);
    CHECK(copies == 2);
    CHECK(bc_qm_eval(b, "ab", "ab", 2, nullptr, &report) == BC_ERR_USAGE);
    CHECK(std::string(bc_last_error_name()) == "InvalidR");
    bc_backend_free(b);

    char* value = nullptr;
    REQUIRE(bc_gg_delta_bound("1", &value) == BC_OK);
    CHECK(take(value) == "m=22 delta=28");
    REQUIRE(bc_hyp_delta("cycle:6", "four-point", 0, 1, &value) == BC_OK);
    CHECK(take(value) == "1");
    REQUIRE(bc_frag_bound("24", "3", &value) == BC_OK);
    CHECK(take(value) == "7");
    CHECK(bc_frag_bound("24", "0", &value) == BC_ERR_DOMAIN);
    CHECK(std::string(bc_last_error_name()) == "ZeroDefect");
}
