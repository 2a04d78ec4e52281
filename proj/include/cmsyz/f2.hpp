#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmsyz {

using F2Vec = std::vector<uint64_t>;  // packed bit row

inline int f2_words(int bits) { return (bits + 63) / 64; }
inline bool f2_get(const F2Vec& v, int i) { return (v[i >> 6] >> (i & 63)) & 1u; }
inline void f2_flip(F2Vec& v, int i) { v[i >> 6] ^= uint64_t(1) << (i & 63); }
inline bool f2_is_zero(const F2Vec& v) {
    for (uint64_t w : v)
        if (w) return false;
    return true;
}

// Bit matrix over F_2, row major. Used only by the submodule search.
class F2Mat {
public:
    F2Mat() : rows_(0), cols_(0), wpr_(0) {}
    explicit F2Mat(int cols) : rows_(0), cols_(cols), wpr_(f2_words(cols)) {}
    F2Mat(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_(f2_words(cols)), w_(size_t(rows) * f2_words(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (w_[size_t(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1u; }
    void flip(int r, int c) { w_[size_t(r) * wpr_ + (c >> 6)] ^= uint64_t(1) << (c & 63); }

    F2Vec row(int r) const {
        return F2Vec(w_.begin() + size_t(r) * wpr_, w_.begin() + size_t(r + 1) * wpr_);
    }
    void append_row(const F2Vec& v);

    // Keeps the matrix in reduced echelon form; returns false if v was already
    // in the row space (matrix unchanged), true if a row was added.
    bool insert_into_rref(F2Vec v);

    bool contains(F2Vec v) const;

    void rref();
    int rank() const;

    std::string key() const;  // canonical fingerprint; call on RREF'd matrices

private:
    int pivot_col(int r) const;

    int rows_, cols_, wpr_;
    std::vector<uint64_t> w_;
};

// v * m over F_2; v has m.rows() bits, result has m.cols() bits.
F2Vec f2_mul_vec(const F2Vec& v, const F2Mat& m);

}  // namespace cmsyz
