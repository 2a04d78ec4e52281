#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cmsyz/algebra.hpp"
#include "cmsyz/error.hpp"
#include "cmsyz/ideal.hpp"
#include "cmsyz/quiver.hpp"
#include "cmsyz/rep.hpp"

using namespace cmsyz;

namespace {

const std::string kData = CMSYZ_DATA_DIR;

Algebra algebra_of(const ParsedInput& p) {
    if (!p.relations.empty()) return build_algebra(p.q, p.relations);
    return build_algebra(p.q, jacobian_relations(p.q, *p.potential));
}

Algebra load_algebra(const std::string& name) {
    return algebra_of(parse_input_file(kData + "/" + name));
}

Rep radical_of(const Rep& m) { return sub_rep(m, radical_rows(m)).rep; }

std::multiset<std::string> tags(const IdealData& j) {
    std::multiset<std::string> t;
    for (const auto& s : j.summands) t.insert(s.tag);
    return t;
}

}  // namespace

TEST_CASE("five-vertex ideal at vertex 5: words, column, summands") {
    Algebra a = load_algebra("q5.qp");
    int v5 = a.q.vertex_checked("5");
    IdealData j = ideal_data(a, v5);
    CHECK(j.vertex == v5);
    CHECK(j.dim() == 5);
    std::set<std::string> words;
    for (int w : j.words) words.insert(a.basis_str(w));
    CHECK(words == std::set<std::string>{"e_5", "s", "t", "d*s", "e*a"});
    CHECK(j.m_column == std::vector<int>{0, 0, 1, 1, 1});
    CHECK(tags(j) ==
          std::multiset<std::string>{"P(5)", "P(5)", "module of dim 1"});
    int total = 0;
    for (const auto& s : j.summands) {
        CHECK(s.rep.satisfies_relations());
        total += s.rep.total_dim();
        if (s.tag == "module of dim 1") CHECK(is_isomorphic(s.rep, simple_rep(a, v5)));
        if (s.projective) CHECK(is_isomorphic(s.rep, projective_rep(a, v5)));
    }
    CHECK(total == j.dim());
    CHECK(j.rep.total_dim() == 5);
    CHECK(j.regular.total_dim() == a.dim());
    CHECK(is_morphism(j.rep, j.regular, j.incl));
    CHECK(hom_is_injective(j.rep, j.incl));
    // determinism: building twice gives the same generators
    IdealData j2 = ideal_data(a, v5);
    std::vector<int> g1, g2;
    for (const auto& s : j.summands) g1.push_back(s.gen);
    for (const auto& s : j2.summands) g2.push_back(s.gen);
    CHECK(g1 == g2);
}

TEST_CASE("five-vertex reduction at 5 does not preserve the stable category") {
    Algebra a = load_algebra("q5.qp");
    ReductionReport r = reduce_at(a, a.q.vertex_checked("5"));
    CHECK(r.dim_a == 15);
    CHECK(r.dim_j == 5);
    CHECK(r.dim_b == 10);
    CHECK_FALSE(r.verdict_b);
    CHECK_FALSE(r.verdict_c);
    CHECK_FALSE(r.verdict_d);
    CHECK_FALSE(r.preserves);
    CHECK_FALSE(r.f_witness.has_value());
    CHECK(r.b.dim() == 10);
}

TEST_CASE("five-vertex algebra is minimal: no vertex reduction preserves") {
    Algebra a = load_algebra("q5.qp");
    for (int v = 0; v < 5; ++v) {
        CAPTURE(v);
        ReductionReport r = reduce_at(a, v);
        CHECK_FALSE(r.preserves);
        CHECK(r.dim_j + r.dim_b == r.dim_a);
        CHECK(r.verdict_b == r.verdict_c);
        CHECK(r.verdict_c == r.verdict_d);
    }
}

TEST_CASE("ideal summand laws hold at every vertex of the five-vertex algebra") {
    Algebra a = load_algebra("q5.qp");
    for (int v = 0; v < 5; ++v) {
        CAPTURE(v);
        IdealData j = ideal_data(a, v);
        // the ideal is a cohen-macaulay module
        CHECK(is_cm(j.rep));
        // its top is concentrated at the vertex
        std::vector<int> top = top_dims(j.rep);
        CHECK(top[v] > 0);
        for (int u = 0; u < 5; ++u)
            if (u != v) CHECK(top[u] == 0);
        // no homs onto other simples
        for (int u = 0; u < 5; ++u)
            if (u != v) CHECK(hom_dim(j.rep, simple_rep(a, u)) == 0);
        // no self extensions
        CHECK(ext1(j.rep, j.rep).dim == 0);
        // the projective at the vertex is among the summands
        bool has_proj = false;
        for (const auto& s : j.summands) has_proj |= s.projective;
        CHECK(has_proj);
        // column bookkeeping
        int col = 0;
        for (int x : j.m_column) col += x;
        CHECK(int(j.summands.size()) == col);
    }
}

TEST_CASE("six-vertex reduction at 1 preserves, with an embedding witness") {
    Algebra a = load_algebra("q6.qp");
    int v1 = a.q.vertex_checked("1");
    ReductionReport r = reduce_at(a, v1);
    CHECK(r.verdict_b);
    CHECK(r.verdict_c);
    CHECK(r.verdict_d);
    CHECK(r.preserves);
    CHECK(r.dim_a == 24);
    CHECK(r.dim_j == 8);
    CHECK(r.dim_b == 16);
    CHECK(tags(r.ideal) == std::multiset<std::string>{"P(1)", "P(1)"});
    // the d-witnesses really embed, one per vertex with a nonzero column entry
    REQUIRE(r.d_witnesses.size() == 2);
    for (const auto& [jv, emb] : r.d_witnesses) {
        CHECK(r.ideal.m_column[jv] == 1);
        Rep src = projective_rep(a, v1), dst = projective_rep(a, jv);
        CHECK(is_morphism(src, dst, emb));
        CHECK(hom_is_injective(src, emb));
    }
    REQUIRE(r.f_witness.has_value());
    std::vector<std::string> pv;
    for (int u : r.f_witness->proj_vertices) pv.push_back(a.q.vertex_name(u));
    CHECK(pv == std::vector<std::string>{"5"});
    CHECK(verify_generation_witness(a, v1, r.f_witness->proj_vertices, r.f_witness->emb));
    CHECK_THROWS_AS(verify_generation_witness(a, v1, r.f_witness->proj_vertices, std::nullopt),
                    MapsNotGiven);
    // cokernel lives away from the reduced vertex
    CHECK(r.f_witness->coker.dim[v1] == 0);
}

TEST_CASE("six-vertex ideal at 3 nests the surviving cycle inside a summand") {
    Algebra a = load_algebra("q6.qp");
    int v3 = a.q.vertex_checked("3");
    IdealData j = ideal_data(a, v3);
    // thirteen basis words pass through the vertex: e_3, four incident arrows,
    // seven of the eight length-2 words, and the 3-cycle word
    CHECK(j.dim() == 13);
    CHECK(j.m_column[v3] == 2);
    // the 3-cycle word is swallowed by e_3 A, so five cyclic summands remain;
    // the one generated by the arrow 4 -> 3 keeps its continuation into 5
    CHECK(j.summands.size() == 6);
    std::multiset<int> sdims;
    for (const auto& s : j.summands) sdims.insert(s.rep.total_dim());
    CHECK(sdims == std::multiset<int>{1, 1, 1, 1, 2, 7});
    CHECK(tags(j) == std::multiset<std::string>{"P(3)", "module of dim 2", "module of dim 1",
                                                "module of dim 1", "module of dim 1",
                                                "module of dim 1"});
    ReductionReport r = reduce_at(a, v3);
    CHECK_FALSE(r.preserves);
}

TEST_CASE("six-vertex criterion matches homology at every vertex") {
    Algebra a = load_algebra("q6.qp");
    std::set<std::string> preserving;
    for (int v = 0; v < a.q.num_vertices(); ++v) {
        ReductionReport r = reduce_at(a, v);
        if (r.preserves) preserving.insert(a.q.vertex_name(v));
        CHECK(r.dim_j + r.dim_b == r.dim_a);
    }
    CHECK(preserving == std::set<std::string>{"1", "2", "6"});
}

TEST_CASE("perpendicular membership separates survivors from the dropped") {
    Algebra a = load_algebra("q5.qp");
    IdealData j = ideal_data(a, a.q.vertex_checked("5"));
    Rep r4 = radical_of(projective_rep(a, 3));  // dims 1 1 0 0 1
    Rep r3 = radical_of(projective_rep(a, 2));  // dims 0 0 0 1 1
    Rep r1 = radical_of(projective_rep(a, 0));  // dims 0 1 1 1 0
    CHECK(in_j_perp(j, r4));
    CHECK(in_j_perp(j, r3));
    CHECK(in_j_perp(j, r1));
    // the regular module and the ideal itself always sit inside the
    // perpendicular category, and membership passes to direct summands
    CHECK(in_j_perp(j, regular_rep(a)));
    CHECK(in_j_perp(j, j.rep));
    CHECK(in_j_perp(j, simple_rep(a, 4)));
    // S(2) carries an extension against the dim-1 summand of the ideal
    CHECK_FALSE(in_j_perp(j, simple_rep(a, 1)));
    // the 2-dimensional submodule of P(4) through vertices 1 and 2 is killed
    // by an extension, not a hom
    Rep p4 = projective_rep(a, 3);
    std::vector<Mat> rows(5);
    for (int v = 0; v < 5; ++v) rows[v] = Mat(0, p4.dim[v]);
    rows[0] = Mat::identity(1);
    rows[1] = Mat::identity(1);
    Rep oneTwo = sub_rep(p4, rows).rep;
    CHECK(oneTwo.dim_vector() == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(hom_dim(j.rep, oneTwo) == 0);
    CHECK(ext1(j.rep, oneTwo).dim > 0);
    CHECK_FALSE(in_j_perp(j, oneTwo));
}

TEST_CASE("reduction functor sends survivors to the quotient catalog") {
    Algebra a = load_algebra("q5.qp");
    int v5 = a.q.vertex_checked("5");
    IdealData j = ideal_data(a, v5);
    Algebra b = quotient_algebra(a, v5);
    Rep r4 = radical_of(projective_rep(a, 3));
    Rep img4 = f_functor(j, b, r4);
    CHECK(img4.dim_vector() == std::vector<int>{1, 0, 0, 0});
    CHECK(is_isomorphic(img4, simple_rep(b, b.q.vertex_checked("1"))));
    Rep r3 = radical_of(projective_rep(a, 2));
    Rep img3 = f_functor(j, b, r3);
    CHECK(img3.dim_vector() == std::vector<int>{0, 0, 0, 1});
    CHECK(is_isomorphic(img3, simple_rep(b, b.q.vertex_checked("4"))));
    Rep r1 = radical_of(projective_rep(a, 0));
    Rep img1 = f_functor(j, b, r1);
    CHECK(img1.dim_vector() == std::vector<int>{0, 1, 1, 1});
    // projectives map to projectives of the quotient
    Rep p1 = projective_rep(a, 0);
    Rep imgp = f_functor(j, b, p1);
    CHECK(is_projective_rep(imgp));
}

TEST_CASE("lifting against the ideal inverts the reduction functor") {
    Algebra a = load_algebra("q5.qp");
    int v5 = a.q.vertex_checked("5");
    IdealData j = ideal_data(a, v5);
    Algebra b = quotient_algebra(a, v5);

    Rep y1 = simple_rep(b, b.q.vertex_checked("1"));
    LiftResult l1 = lift_to_j_perp(a, j, b, y1);
    CHECK(in_j_perp(j, l1.x));
    CHECK(is_isomorphic(l1.x, radical_of(projective_rep(a, 3))));
    CHECK(is_isomorphic(f_functor(j, b, l1.x), y1));
    for (size_t k = 1; k < l1.ext_trail.size(); ++k)
        CHECK(l1.ext_trail[k] < l1.ext_trail[k - 1]);

    Rep y4 = simple_rep(b, b.q.vertex_checked("4"));
    LiftResult l4 = lift_to_j_perp(a, j, b, y4);
    CHECK(in_j_perp(j, l4.x));
    // the extension steps add projective carriers, so compare stably: the
    // lift splits as the expected radical plus copies of P(5)
    std::vector<Rep> nonproj;
    int projcount = 0;
    for (const Rep& p : decompose(l4.x)) {
        if (is_projective_rep(p))
            ++projcount;
        else
            nonproj.push_back(p);
    }
    REQUIRE(nonproj.size() == 1);
    CHECK(is_isomorphic(nonproj[0], radical_of(projective_rep(a, 2))));
    CHECK(projcount == 2);
    CHECK(is_isomorphic(f_functor(j, b, l4.x), y4));

    Rep r1b = restrict_rep(radical_of(projective_rep(a, 0)), b, v5);
    LiftResult lr = lift_to_j_perp(a, j, b, r1b);
    CHECK(in_j_perp(j, lr.x));
    CHECK(is_isomorphic(f_functor(j, b, lr.x), r1b));
}

TEST_CASE("ideal meets the bilinear pairing of a 3-dimensional symmetry") {
    // dim Ext^2(X, J) == dim Ext^1(J, X) for modules in the syzygy catalog
    Algebra a = load_algebra("q5.qp");
    IdealData j = ideal_data(a, a.q.vertex_checked("5"));
    for (int v = 0; v < 5; ++v) {
        Rep x = radical_of(projective_rep(a, v));
        if (x.total_dim() == 0) continue;
        CAPTURE(v);
        CHECK(ext_dim(x, j.rep, 2) == ext1(j.rep, x).dim);
    }
}
