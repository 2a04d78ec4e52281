#include "doctest.h"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cmsyz/dimer.hpp"
#include "cmsyz/error.hpp"
#include "cmsyz/quiver.hpp"

using namespace cmsyz;

namespace {

const std::string kData = CMSYZ_DATA_DIR;

ParsedInput load(const std::string& name) { return parse_input_file(kData + "/" + name); }

bool check_named(const DimerReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c.ok;
    FAIL(("no check named " + name));
    return false;
}

std::string path_str(const Quiver& q, const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += q.arrow(w[i]).id;
    }
    return s;
}

}  // namespace

TEST_CASE("the five-vertex potential is a dimer tree") {
    ParsedInput p = load("q5w.qp");
    DimerReport r = validate_dimer(p.q, *p.potential);
    CHECK(r.ok);
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.ok);
    }
    REQUIRE(r.analysis.has_value());
    CHECK(r.analysis->cycles.size() == 3);
    DimerAnalysis d = require_dimer(p);
    int interior = 0;
    for (int a = 0; a < d.q.num_arrows(); ++a) interior += d.is_boundary(a) ? 0 : 1;
    CHECK(interior == 2);  // b and e
    CHECK_FALSE(d.is_boundary(d.q.arrow_checked("b")));
    CHECK_FALSE(d.is_boundary(d.q.arrow_checked("e")));
    CHECK(d.is_boundary(d.q.arrow_checked("a")));
}

TEST_CASE("the six-vertex potential fails only the dual tree condition") {
    ParsedInput p = load("q6.qp");
    DimerReport r = validate_dimer(p.q, *p.potential);
    CHECK_FALSE(r.ok);
    CHECK(check_named(r, "no_loops"));
    CHECK(check_named(r, "no_two_cycles"));
    CHECK(check_named(r, "arrows_covered"));
    CHECK(check_named(r, "arrows_at_most_two"));
    CHECK(check_named(r, "potential_matches"));
    CHECK(check_named(r, "signs_alternate"));
    CHECK_FALSE(check_named(r, "dual_tree"));
    CHECK_THROWS_AS(require_dimer(p), NotDimerTree);
}

TEST_CASE("each validation check has a failing specimen") {
    // loop arrow
    Quiver lq({"1"}, {{"l", 0, 0}});
    DimerReport lr = validate_dimer(lq, Potential{});
    CHECK_FALSE(lr.ok);
    CHECK_FALSE(check_named(lr, "no_loops"));
    // two-cycle
    ParsedInput two = parse_input_string(
        "vertices: 1 2\narrow x: 1 -> 2\narrow y: 2 -> 1\ncycle +: x y\n");
    DimerReport tr = validate_dimer(two.q, *two.potential);
    CHECK_FALSE(tr.ok);
    CHECK_FALSE(check_named(tr, "no_two_cycles"));
    // a bridge arrow lies on no cycle, and the dual graph is disconnected
    ParsedInput bridge = parse_input_string(
        "vertices: 1 2 3 4 5 6\n"
        "arrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n"
        "arrow u: 4 -> 5\narrow v: 5 -> 6\narrow w: 6 -> 4\n"
        "arrow m: 3 -> 4\n"
        "cycle +: a b c\ncycle -: u v w\n");
    DimerReport br = validate_dimer(bridge.q, *bridge.potential);
    CHECK_FALSE(br.ok);
    CHECK_FALSE(check_named(br, "arrows_covered"));
    CHECK_FALSE(check_named(br, "dual_tree"));
    // one arrow on three cycles
    ParsedInput triple = parse_input_string(
        "vertices: 1 2 3 4 5\n"
        "arrow z: 4 -> 1\narrow u: 1 -> 2\narrow v: 2 -> 4\n"
        "arrow x: 1 -> 3\narrow y: 3 -> 4\narrow p: 1 -> 5\narrow q: 5 -> 4\n"
        "cycle +: u v z\ncycle -: x y z\ncycle +: p q z\n");
    DimerReport xr = validate_dimer(triple.q, *triple.potential);
    CHECK_FALSE(xr.ok);
    CHECK_FALSE(check_named(xr, "arrows_at_most_two"));
    // potential missing a chordless cycle
    ParsedInput p5 = load("q5w.qp");
    Potential partial{{p5.potential->cycles[0], p5.potential->cycles[1]}};
    DimerReport pr = validate_dimer(p5.q, partial);
    CHECK_FALSE(pr.ok);
    CHECK_FALSE(check_named(pr, "potential_matches"));
    // all signs equal
    Potential flat = *p5.potential;
    for (auto& c : flat.cycles) c.sign = 1;
    DimerReport sr = validate_dimer(p5.q, flat);
    CHECK_FALSE(sr.ok);
    CHECK_FALSE(check_named(sr, "signs_alternate"));
}

TEST_CASE("five-vertex zigzags, weights and type") {
    DimerAnalysis d = require_dimer(load("q5w.qp"));
    const Quiver& q = d.q;
    auto zz = [&](const char* id) { return path_str(q, zigzag(d, q.arrow_checked(id))); };
    auto co = [&](const char* id) { return path_str(q, co_zigzag(d, q.arrow_checked(id))); };
    CHECK(zz("a") == "a b s");
    CHECK(zz("g") == "g d");
    CHECK(zz("d") == "d e a");
    CHECK(zz("s") == "s t");
    CHECK(zz("t") == "t b e g");
    CHECK(co("a") == "d e a");
    CHECK(co("t") == "s t");
    std::map<std::string, int> w;
    for (int a = 0; a < q.num_arrows(); ++a)
        if (d.is_boundary(a)) w[q.arrow(a).id] = weight(d, a);
    CHECK(w == std::map<std::string, int>{{"a", 1}, {"d", 1}, {"g", 2}, {"s", 2}, {"t", 2}});
    CHECK(total_weight(d) == 8);
    CHECK(cm_type_a(d) == "A_2");
    CHECK_THROWS_AS(zigzag(d, q.arrow_checked("b")), NotBoundary);
    CHECK_THROWS_AS(co_zigzag(d, q.arrow_checked("e")), NotBoundary);
}

TEST_CASE("five-vertex tree is already minimal") {
    DimerAnalysis d = require_dimer(load("q5w.qp"));
    for (int v = 0; v < d.q.num_vertices(); ++v) {
        CAPTURE(v);
        CHECK_FALSE(criterion_at(d, v).qualifies);
    }
    CHECK(cm_minimal(d));
}

TEST_CASE("seven-vertex criterion holds exactly at vertex 7") {
    ParsedInput p = load("q7.qp");
    DimerAnalysis d = require_dimer(p);
    const Quiver& q = d.q;
    CHECK(total_weight(d) == 10);
    CHECK(cm_type_a(d) == "A_3");
    for (int v = 0; v < q.num_vertices(); ++v) {
        CAPTURE(q.vertex_name(v));
        CHECK(criterion_at(d, v).qualifies == (q.vertex_name(v) == "7"));
    }
    CriterionCell cell = criterion_at(d, q.vertex_checked("7"));
    CHECK(q.arrow(cell.beta).id == "a67");
    CHECK(q.arrow(cell.gamma).id == "a73");
    CHECK(q.arrow(cell.delta).id == "a36");
    CHECK(cell.beta_co_weight == 1);
    CHECK(cell.gamma_weight == 1);
    CHECK(path_str(q, zigzag(d, q.arrow_checked("a73"))) == "a73 a36 a65");
    CHECK(path_str(q, co_zigzag(d, q.arrow_checked("a67"))) == "a12 a25 a53 a36 a67");
    CHECK(path_str(q, co_zigzag(d, q.arrow_checked("a14"))) == "a32 a25 a51 a14");
    CHECK(co_weight(d, q.arrow_checked("a14")) == 2);
    CHECK_FALSE(cm_minimal(d));
}

TEST_CASE("seven-vertex boundary weights") {
    DimerAnalysis d = require_dimer(load("q7.qp"));
    const Quiver& q = d.q;
    std::map<std::string, int> w;
    for (int a = 0; a < q.num_arrows(); ++a)
        if (d.is_boundary(a)) w[q.arrow(a).id] = weight(d, a);
    CHECK(w == std::map<std::string, int>{{"a12", 1},
                                          {"a14", 2},
                                          {"a32", 2},
                                          {"a45", 1},
                                          {"a65", 1},
                                          {"a67", 2},
                                          {"a73", 1}});
}

TEST_CASE("reducing the seven-vertex tree at 7 keeps the type") {
    ParsedInput p = load("q7.qp");
    ParsedInput r = reduce_potential_input(p, "7");
    CHECK(r.q.num_vertices() == 6);
    CHECK(r.q.num_arrows() == 9);
    CHECK(r.q.arrow_index("a67") == -1);
    CHECK(r.q.arrow_index("a73") == -1);
    DimerAnalysis d = require_dimer(r);
    CHECK(d.cycles.size() == 4);
    CHECK(total_weight(d) == 10);
    CHECK(cm_type_a(d) == "A_3");
    const Quiver& q = d.q;
    CHECK(d.is_boundary(q.arrow_checked("a36")));
    CHECK(path_str(q, zigzag(d, q.arrow_checked("a36"))) == "a36 a65");
    CHECK(path_str(q, zigzag(d, q.arrow_checked("a12"))) == "a12 a25 a53 a36");
    CHECK_THROWS_AS(reduce_potential_input(p, "9"), UnknownName);
}

TEST_CASE("four reductions of the six-vertex potential share the type") {
    for (const char* name : {"q6_no1.qp", "q6_no2.qp", "q6_no6.qp", "q6_no12.qp"}) {
        CAPTURE(name);
        ParsedInput p = load(name);
        DimerAnalysis d = require_dimer(p);
        CHECK(total_weight(d) == 8);
        CHECK(cm_type_a(d) == "A_2");
        bool minimal = std::string(name) == "q6_no6.qp" || std::string(name) == "q6_no12.qp";
        CHECK(cm_minimal(d) == minimal);
    }
}

TEST_CASE("zigzag and co-zigzag retrace each other") {
    for (const char* name : {"q5w.qp", "q7.qp", "q7base.qp", "q6_no12.qp"}) {
        CAPTURE(name);
        DimerAnalysis d = require_dimer(load(name));
        for (int a = 0; a < d.q.num_arrows(); ++a) {
            if (!d.is_boundary(a)) continue;
            Word z = zigzag(d, a);
            CHECK(co_zigzag(d, z.back()) == z);
            Word c = co_zigzag(d, a);
            CHECK(zigzag(d, c.front()) == c);
        }
    }
}

TEST_CASE("random trees validate and stay within the cycle budget") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        CAPTURE(seed);
        ParsedInput p = random_dimer_tree(seed, 6);
        REQUIRE(p.has_potential());
        DimerReport r = validate_dimer(p.q, *p.potential);
        CHECK(r.ok);
        REQUIRE(r.analysis.has_value());
        CHECK(r.analysis->cycles.size() >= 1);
        CHECK(r.analysis->cycles.size() <= 6);
        // determinism and canonical serialization round trip
        CHECK(write_input(random_dimer_tree(seed, 6)) == write_input(p));
        ParsedInput again = parse_input_string(write_input(p));
        CHECK(validate_dimer(again.q, *again.potential).ok);
    }
    // the single-cycle degenerate case is a valid tree
    bool saw_single = false;
    for (std::uint64_t seed = 1; seed <= 40 && !saw_single; ++seed) {
        ParsedInput p = random_dimer_tree(seed, 1);
        DimerReport r = validate_dimer(p.q, *p.potential);
        CHECK(r.ok);
        saw_single = true;
    }
    CHECK(saw_single);
}
