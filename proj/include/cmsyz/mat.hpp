#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace cmsyz {

// Dense exact-rational matrix. Row-vector convention throughout the library:
// vectors are 1 x n rows and maps act on the right, so composing maps is plain
// left-to-right matrix multiplication.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpq_class& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const mpq_class& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const mpq_class& s) const;
    Mat transpose() const;

    Mat row(int r) const;
    void set_row(int r, const Mat& v);

    // Reduced row echelon form; pivot column indices appended to *pivots.
    Mat rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;

    // Basis of the row space: the nonzero rows of the RREF.
    Mat row_basis() const;

    // Rows x with x * this == 0 (basis, in RREF).
    Mat left_kernel() const;

    // True if every row of v lies in the row space of *this.
    bool contains_rows(const Mat& v) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<mpq_class> a_;
};

Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);

// X with X * a == b, if any (a need not be square).
std::optional<Mat> solve_left(const Mat& a, const Mat& b);

// Coefficients c with c * basis == v, for every row of v; basis rows must be
// independent. Throws InternalError if some row is not in the span.
Mat express_in_rows(const Mat& basis, const Mat& v);

// Rows spanning a complement of span(sub) inside span(whole); both inputs are
// row sets, sub's span contained in whole's. Deterministic: picks the first
// rows of `whole` (in order) that extend sub's RREF.
Mat complement_in(const Mat& sub, const Mat& whole);

}  // namespace cmsyz
