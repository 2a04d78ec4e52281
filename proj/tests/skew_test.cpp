#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmsyz/dimer.hpp"
#include "cmsyz/error.hpp"
#include "cmsyz/quiver.hpp"
#include "cmsyz/skew.hpp"

using namespace cmsyz;

namespace {

const std::string kData = CMSYZ_DATA_DIR;

ParsedInput load(const std::string& name) { return parse_input_file(kData + "/" + name); }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::set<std::string> arrow_shapes(const Quiver& q) {
    std::set<std::string> s;
    for (const Arrow& a : q.arrows())
        s.insert(a.id + ":" + q.vertex_name(a.src) + ">" + q.vertex_name(a.tgt));
    return s;
}

}  // namespace

TEST_CASE("doubling the seven-vertex base reproduces the stored glued input") {
    ParsedInput base = load("q7base.qp");
    ParsedInput glued = fibered_product(base, "a");
    CHECK(glued.q.num_vertices() == 12);
    CHECK(glued.q.num_arrows() == 19);
    REQUIRE(glued.has_potential());
    CHECK(glued.potential->cycles.size() == 8);
    REQUIRE(glued.involution.has_value());
    CHECK(glued.involution->swaps.size() == 5);
    CHECK(glued.involution->fixed == std::vector<std::string>{"1", "2"});
    CHECK(write_input(glued) == slurp(kData + "/q12.qp"));
    // the glue arrow is interior now, its copies carry primes
    CHECK(glued.q.arrow_index("a") != -1);
    CHECK(glued.q.arrow_index("a'") == -1);  // glue arrow itself is not copied
    CHECK(glued.q.arrow_index("n17'") != -1);
    CHECK(glued.q.vertex_index("3'") != -1);
    CHECK(glued.q.vertex_index("1'") == -1);  // endpoints of the glue are fixed
    DimerAnalysis d = require_dimer(glued);
    CHECK_FALSE(d.is_boundary(glued.q.arrow_checked("a")));
    CHECK(total_weight(d) == 18);
    CHECK(cm_type_a(d) == "A_7");
}

TEST_CASE("gluing needs more than three vertices") {
    ParsedInput tri = parse_input_string(
        "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\ncycle +: a b c\n");
    CHECK_THROWS_AS(fibered_product(tri, "a"), TooSmall);
}

TEST_CASE("gluing requires a boundary arrow of a dimer tree") {
    ParsedInput base = load("q7base.qp");
    CHECK_THROWS_AS(fibered_product(base, "n41"), NotBoundary);  // interior
    CHECK_THROWS_AS(fibered_product(base, "zz"), UnknownName);
    ParsedInput notree = load("q6.qp");
    CHECK_THROWS_AS(fibered_product(notree, "a1"), NotDimerTree);
}

TEST_CASE("doubling a square along an edge is a valid tree of type D_3") {
    ParsedInput sq = parse_input_string(
        "vertices: 1 2 3 4\n"
        "arrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\narrow d: 4 -> 1\n"
        "cycle +: a b c d\n");
    ParsedInput glued = fibered_product(sq, "a");
    CHECK(glued.q.num_vertices() == 6);
    CHECK(glued.q.num_arrows() == 7);
    DimerAnalysis an = require_dimer(glued);
    CHECK(an.cycles.size() == 2);
    CHECK(total_weight(an) == 10);
    CHECK(d_type(an) == "D_3");
    SkewResult sk = skew_quiver(glued);
    CHECK(sk.b_type == "D_3");
}

TEST_CASE("involution maps validate structure and reject broken symmetries") {
    ParsedInput glued = load("q12.qp");
    Sigma s = involution_maps(glued);
    const Quiver& q = glued.q;
    CHECK(s.vertex[q.vertex_checked("3")] == q.vertex_checked("3'"));
    CHECK(s.vertex[q.vertex_checked("3'")] == q.vertex_checked("3"));
    CHECK(s.vertex[q.vertex_checked("1")] == q.vertex_checked("1"));
    CHECK(s.fixed_vertex[q.vertex_checked("1")]);
    CHECK(s.fixed_vertex[q.vertex_checked("2")]);
    CHECK_FALSE(s.fixed_vertex[q.vertex_checked("7")]);
    CHECK(s.arrow[q.arrow_checked("a")] == q.arrow_checked("a"));
    CHECK(s.arrow[q.arrow_checked("n17")] == q.arrow_checked("n17'"));
    CHECK(s.arrow[q.arrow_checked("n23'")] == q.arrow_checked("n23"));
    // an involution is required at all
    ParsedInput bare = glued;
    bare.involution.reset();
    CHECK_THROWS_AS(involution_maps(bare), InvalidAction);
    // unknown names in the involution
    ParsedInput wrong = glued;
    wrong.involution->swaps[0] = {"3", "nope"};
    CHECK_THROWS_AS(involution_maps(wrong), UnknownName);
    // potential must be anti-symmetric under the swap
    ParsedInput flipped = glued;
    flipped.potential->cycles[0].sign *= -1;
    CHECK_THROWS_AS(involution_maps(flipped), InvalidAction);
    // every vertex must be accounted for
    ParsedInput partial = glued;
    partial.involution->fixed = {"1"};
    CHECK_THROWS_AS(involution_maps(partial), InvalidAction);
}

TEST_CASE("orbit quiver of the twelve-vertex gluing") {
    ParsedInput glued = load("q12.qp");
    SkewResult sk = skew_quiver(glued);
    CHECK(sk.b_type == "D_5");
    const Quiver& q = sk.shape.q;
    CHECK(q.num_vertices() == 9);
    CHECK(q.num_arrows() == 16);
    std::set<std::string> vs(q.vertex_names().begin(), q.vertex_names().end());
    CHECK(vs == std::set<std::string>{"1+", "1-", "2+", "2-", "3", "4", "5", "6", "7"});
    CHECK(arrow_shapes(q) ==
          std::set<std::string>{"a+:1+>2+", "a-:1->2-", "n17+:1+>7", "n17-:1->7",
                                "n23+:2+>3", "n23-:2->3", "n26+:2+>6", "n26-:2->6",
                                "n34:3>4", "n35:3>5", "n41+:4>1+", "n41-:4>1-",
                                "n52+:5>2+", "n52-:5>2-", "n65:6>5", "n74:7>4"});
    CHECK_FALSE(sk.shape.has_potential());
}

TEST_CASE("the d-type needs an odd weight parameter") {
    DimerAnalysis d5 = require_dimer(load("q5w.qp"));
    CHECK_THROWS_AS(d_type(d5), InvalidAction);  // total weight 8, parameter 4
    DimerAnalysis d12 = require_dimer(load("q12.qp"));
    CHECK(d_type(d12) == "D_5");
}

TEST_CASE("minimality transfers between the glued tree and its orbit") {
    TransferReport t = minimality_transfer_check(load("q12.qp"));
    CHECK(t.a_type == "A_7");
    CHECK(t.b_type == "D_5");
    CHECK_FALSE(t.a_minimal);
    CHECK_FALSE(t.b_minimal);
    REQUIRE(t.orbits.size() == 5);
    std::set<std::string> reps;
    for (const auto& o : t.orbits) {
        reps.insert(o.rep);
        CHECK(o.partner == o.rep + "'");
        bool hot = o.rep == "7";
        CHECK(o.a_criterion == hot);
        CHECK(o.preserves == hot);
        if (hot) {
            CHECK(o.closes);
            CHECK(o.same_type);
        }
    }
    CHECK(reps == std::set<std::string>{"3", "4", "5", "6", "7"});
}

TEST_CASE("transfer on a glued input without symmetric reductions") {
    // doubling the square: no vertex passes the criterion on either side
    ParsedInput sq = parse_input_string(
        "vertices: 1 2 3 4\n"
        "arrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\narrow d: 4 -> 1\n"
        "cycle +: a b c d\n");
    TransferReport t = minimality_transfer_check(fibered_product(sq, "a"));
    CHECK(t.a_minimal);
    CHECK(t.b_minimal);
    CHECK(t.a_type == "A_3");
    CHECK(t.b_type == "D_3");
    REQUIRE(t.orbits.size() == 2);  // free orbits 3 and 4
    for (const auto& o : t.orbits) {
        CHECK_FALSE(o.a_criterion);
        CHECK_FALSE(o.preserves);
    }
}
