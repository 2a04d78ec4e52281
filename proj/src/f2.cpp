#include "cmsyz/f2.hpp"

#include "cmsyz/error.hpp"

namespace cmsyz {

void F2Mat::append_row(const F2Vec& v) {
    check_internal(int(v.size()) == wpr_, "f2 append_row width mismatch");
    w_.insert(w_.end(), v.begin(), v.end());
    ++rows_;
}

int F2Mat::pivot_col(int r) const {
    for (int k = 0; k < wpr_; ++k) {
        uint64_t x = w_[size_t(r) * wpr_ + k];
        if (x) return k * 64 + __builtin_ctzll(x);
    }
    return -1;
}

bool F2Mat::insert_into_rref(F2Vec v) {
    for (int r = 0; r < rows_; ++r) {
        int p = pivot_col(r);
        if (p >= 0 && f2_get(v, p))
            for (int k = 0; k < wpr_; ++k) v[k] ^= w_[size_t(r) * wpr_ + k];
    }
    if (f2_is_zero(v)) return false;
    int vp = 0;
    for (int k = 0; k < wpr_; ++k)
        if (v[k]) {
            vp = k * 64 + __builtin_ctzll(v[k]);
            break;
        }
    // clear the new pivot from earlier rows, then insert keeping pivots sorted
    for (int r = 0; r < rows_; ++r)
        if (get(r, vp))
            for (int k = 0; k < wpr_; ++k) w_[size_t(r) * wpr_ + k] ^= v[k];
    int pos = rows_;
    for (int r = 0; r < rows_; ++r)
        if (pivot_col(r) > vp) {
            pos = r;
            break;
        }
    w_.insert(w_.begin() + size_t(pos) * wpr_, v.begin(), v.end());
    ++rows_;
    return true;
}

bool F2Mat::contains(F2Vec v) const {
    for (int r = 0; r < rows_; ++r) {
        int p = pivot_col(r);
        if (p >= 0 && f2_get(v, p))
            for (int k = 0; k < wpr_; ++k) v[k] ^= w_[size_t(r) * wpr_ + k];
    }
    return f2_is_zero(v);
}

void F2Mat::rref() {
    F2Mat out(cols_);
    for (int r = 0; r < rows_; ++r) out.insert_into_rref(row(r));
    *this = out;
}

int F2Mat::rank() const {
    F2Mat t = *this;
    t.rref();
    return t.rows();
}

std::string F2Mat::key() const {
    std::string s;
    s.reserve(8 + w_.size() * 8);
    s.append(reinterpret_cast<const char*>(&rows_), 4);
    s.append(reinterpret_cast<const char*>(&cols_), 4);
    s.append(reinterpret_cast<const char*>(w_.data()), w_.size() * 8);
    return s;
}

F2Vec f2_mul_vec(const F2Vec& v, const F2Mat& m) {
    F2Vec out(f2_words(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        if (f2_get(v, i)) {
            F2Vec r = m.row(i);
            for (size_t k = 0; k < out.size(); ++k) out[k] ^= r[k];
        }
    return out;
}

}  // namespace cmsyz
