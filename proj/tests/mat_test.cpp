#include "doctest.h"

#include <gmpxx.h>

#include "cmsyz/error.hpp"
#include "cmsyz/mat.hpp"

using namespace cmsyz;

namespace {

Mat m_of(const std::vector<std::vector<long>>& rows) {
    Mat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("product, transpose and scalar arithmetic") {
    Mat a = m_of({{1, 2, 3}, {0, -1, 4}});
    Mat b = m_of({{2, 0}, {1, 1}, {-1, 3}});
    Mat ab = a * b;
    CHECK(ab.rows() == 2);
    CHECK(ab.cols() == 2);
    CHECK(ab.at(0, 0) == 1);
    CHECK(ab.at(0, 1) == 11);
    CHECK(ab.at(1, 0) == -5);
    CHECK(ab.at(1, 1) == 11);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());

    Mat id = Mat::identity(3);
    CHECK(a * id == a);
    CHECK(Mat::identity(2) * a == a);
    CHECK(a + Mat::zero(2, 3) == a);
    CHECK(a - a == Mat::zero(2, 3));
    CHECK(a * mpq_class(2) == a + a);
}

TEST_CASE("rref is idempotent and spans the same row space") {
    Mat a = m_of({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}, {0, 2, 2}});
    std::vector<int> piv;
    Mat r = a.rref(&piv);
    CHECK(a.rank() == 2);
    CHECK(int(piv.size()) == 2);
    for (size_t k = 1; k < piv.size(); ++k) CHECK(piv[k - 1] < piv[k]);
    CHECK(r.rref() == r.rref().rref());
    CHECK(a.contains_rows(r));
    CHECK(r.contains_rows(a));
    CHECK(a.rank() == a.transpose().rank());
    CHECK(a.row_basis().rows() == 2);
    CHECK(a.contains_rows(a.row_basis()));
    CHECK(a.row_basis().contains_rows(a));
}

TEST_CASE("left kernel annihilates and has complementary dimension") {
    Mat a = m_of({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}, {3, 4, 7}});
    Mat k = a.left_kernel();
    CHECK((k * a).is_zero());
    CHECK(k.rows() == a.rows() - a.rank());
    CHECK(k.rank() == k.rows());

    Mat full = Mat::identity(3);
    CHECK(full.left_kernel().rows() == 0);
}

TEST_CASE("solve_left finds exact solutions and rejects inconsistent systems") {
    Mat a = m_of({{1, 2, 0}, {0, 1, 1}});
    Mat x0 = m_of({{3, -1}, {0, 2}, {1, 1}});
    Mat b = x0 * a;
    auto x = solve_left(a, b);
    REQUIRE(x.has_value());
    CHECK(*x * a == b);

    Mat outside = m_of({{0, 0, 1}});
    CHECK_FALSE(solve_left(a, outside).has_value());
}

TEST_CASE("express_in_rows inverts row combinations") {
    Mat basis = m_of({{1, 0, 1}, {0, 2, 0}});
    Mat v = m_of({{2, 3, 2}});
    Mat c = express_in_rows(basis, v.row(0));
    CHECK(c * basis == v);
    CHECK_THROWS_AS(express_in_rows(basis, m_of({{0, 0, 1}}).row(0)), InternalError);
}

TEST_CASE("complement_in extends a subspace deterministically from the given rows") {
    Mat whole = Mat::identity(3);
    Mat sub = m_of({{1, 1, 0}});
    Mat comp = complement_in(sub, whole);
    CHECK(comp.rows() == 2);
    CHECK(vstack(sub, comp).rank() == 3);
    // first rows of `whole` that extend the span, in order: e1 then e3
    CHECK(comp.row(0) == m_of({{1, 0, 0}}).row(0));
    CHECK(comp.row(1) == m_of({{0, 0, 1}}).row(0));

    Mat nothing = complement_in(whole, whole);
    CHECK(nothing.rows() == 0);
}

TEST_CASE("vstack and hstack shapes and content") {
    Mat a = m_of({{1, 2}});
    Mat b = m_of({{3, 4}, {5, 6}});
    Mat v = vstack(a, b);
    CHECK(v.rows() == 3);
    CHECK(v.at(2, 1) == 6);
    Mat h = hstack(b, b);
    CHECK(h.cols() == 4);
    CHECK(h.at(1, 3) == 6);
}

TEST_CASE("rational entries stay exact") {
    Mat a(1, 1);
    a.at(0, 0) = mpq_class(1, 3);
    Mat s = a + a + a;
    CHECK(s.at(0, 0) == 1);
    Mat third = Mat::identity(2) * mpq_class(1, 3);
    CHECK(third * mpq_class(3) == Mat::identity(2));
}
