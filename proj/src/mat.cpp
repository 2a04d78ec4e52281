#include "cmsyz/mat.hpp"

#include <sstream>

#include "cmsyz/error.hpp"

namespace cmsyz {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::operator*(const Mat& o) const {
    check_internal(cols_ == o.rows_, "matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const mpq_class& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    check_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    check_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator*(const mpq_class& s) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::row(int r) const {
    Mat v(1, cols_);
    for (int j = 0; j < cols_; ++j) v.at(0, j) = at(r, j);
    return v;
}

void Mat::set_row(int r, const Mat& v) {
    check_internal(v.rows() == 1 && v.cols() == cols_, "set_row shape mismatch");
    for (int j = 0; j < cols_; ++j) at(r, j) = v.at(0, j);
}

Mat Mat::rref(std::vector<int>* pivots) const {
    Mat m = *this;
    int lead = 0;
    for (int c = 0; c < cols_ && lead < rows_; ++c) {
        int piv = -1;
        for (int r = lead; r < rows_; ++r)
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        mpq_class inv = 1 / m.at(lead, c);
        for (int j = c; j < cols_; ++j) m.at(lead, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            const mpq_class f = m.at(r, c);
            if (f == 0) continue;
            for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(lead, j);
        }
        if (pivots) pivots->push_back(c);
        ++lead;
    }
    return m;
}

int Mat::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return int(piv.size());
}

Mat Mat::row_basis() const {
    std::vector<int> piv;
    Mat r = rref(&piv);
    Mat b(int(piv.size()), cols_);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < cols_; ++j) b.at(i, j) = r.at(i, j);
    return b;
}

Mat Mat::left_kernel() const {
    // x * M == 0  <=>  M^T x^T == 0; compute the nullspace of M^T.
    Mat t = transpose();
    std::vector<int> piv;
    Mat r = t.rref(&piv);
    std::vector<bool> is_piv(rows_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < rows_; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Mat k(int(free_cols.size()), rows_);
    for (int i = 0; i < k.rows(); ++i) {
        int fc = free_cols[i];
        k.at(i, fc) = 1;
        for (int p = 0; p < int(piv.size()); ++p) k.at(i, piv[p]) = -r.at(p, fc);
    }
    return k;
}

bool Mat::contains_rows(const Mat& v) const {
    check_internal(v.cols() == cols_, "contains_rows shape mismatch");
    Mat self = row_basis();
    int base = self.rows();
    return vstack(self, v).rank() == base;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.rows() == 0) return b.rows() ? b : Mat(0, std::max(a.cols(), b.cols()));
    if (b.rows() == 0) return a;
    check_internal(a.cols() == b.cols(), "vstack shape mismatch");
    Mat r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Mat hstack(const Mat& a, const Mat& b) {
    check_internal(a.rows() == b.rows(), "hstack shape mismatch");
    Mat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
    // X * a == b  <=>  a^T X^T == b^T: eliminate on [a^T | b^T].
    check_internal(a.cols() == b.cols(), "solve_left shape mismatch");
    Mat at = a.transpose(), bt = b.transpose();
    Mat aug = hstack(at, bt);
    std::vector<int> piv;
    Mat r = aug.rref(&piv);
    Mat xt(a.rows(), b.rows());
    for (int p = 0; p < int(piv.size()); ++p) {
        int c = piv[p];
        if (c >= at.cols()) return std::nullopt;  // inconsistent system
        for (int j = 0; j < b.rows(); ++j) xt.at(c, j) = r.at(p, at.cols() + j);
    }
    return xt.transpose();
}

Mat express_in_rows(const Mat& basis, const Mat& v) {
    auto x = solve_left(basis, v);
    check_internal(x.has_value(), "express_in_rows: vector outside span");
    return *x;
}

Mat complement_in(const Mat& sub, const Mat& whole) {
    Mat acc = sub.row_basis();
    int base = acc.rows();
    Mat out(0, whole.cols());
    for (int i = 0; i < whole.rows(); ++i) {
        Mat cand = vstack(acc, whole.row(i));
        if (cand.rank() > base) {
            out = vstack(out, whole.row(i));
            acc = cand;
            ++base;
        }
    }
    return out;
}

}  // namespace cmsyz
