#include "cmsyz/rep.hpp"

#include <algorithm>
#include <sstream>

#include "cmsyz/error.hpp"

namespace cmsyz {

namespace {

const Algebra& A(const Rep& m) {
    check_internal(m.alg != nullptr, "rep without algebra");
    return *m.alg;
}

Mat unit_row(int n, int i) {
    Mat v(1, n);
    v.at(0, i) = 1;
    return v;
}

// flatten a morphism into one coordinate row (vertex blocks, row major)
Mat flatten_hom(const Hom& f) {
    int total = 0;
    for (const Mat& m : f) total += m.rows() * m.cols();
    Mat row(1, total);
    int k = 0;
    for (const Mat& m : f)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) row.at(0, k++) = m.at(i, j);
    return row;
}

Hom unflatten_hom(const Rep& m, const Rep& n, const Mat& row) {
    Hom f;
    int k = 0;
    for (int v = 0; v < int(m.dim.size()); ++v) {
        Mat fv(m.dim[v], n.dim[v]);
        for (int i = 0; i < fv.rows(); ++i)
            for (int j = 0; j < fv.cols(); ++j) fv.at(i, j) = row.at(0, k++);
        f.push_back(std::move(fv));
    }
    return f;
}

}  // namespace

int Rep::total_dim() const {
    int t = 0;
    for (int d : dim) t += d;
    return t;
}

Mat Rep::act_word(int src_vertex, const Word& w) const {
    Mat out = Mat::identity(dim[src_vertex]);
    for (int a : w) out = out * act[a];
    return out;
}

bool Rep::satisfies_relations() const {
    const Algebra& al = A(*this);
    for (const RelationLine& r : al.input_relations) {
        int s = al.q.word_src(r.lhs);
        Mat l = act_word(s, r.lhs);
        Mat rr = r.binomial() ? act_word(s, r.rhs) : Mat(l.rows(), l.cols());
        if (!(l - rr).is_zero()) return false;
    }
    return true;
}

bool is_morphism(const Rep& m, const Rep& n, const Hom& f) {
    const Quiver& q = A(m).q;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.arrow(a).src, t = q.arrow(a).tgt;
        if (!(m.act[a] * f[t] - f[s] * n.act[a]).is_zero()) return false;
    }
    return true;
}

Hom compose(const Rep& a, const Rep&, const Rep&, const Hom& f, const Hom& g) {
    Hom h;
    for (int v = 0; v < int(a.dim.size()); ++v) h.push_back(f[v] * g[v]);
    return h;
}

bool hom_is_zero(const Hom& f) {
    for (const Mat& m : f)
        if (!m.is_zero()) return false;
    return true;
}

bool hom_is_injective(const Rep& m, const Hom& f) {
    for (int v = 0; v < int(m.dim.size()); ++v)
        if (f[v].rank() != m.dim[v]) return false;
    return true;
}

bool hom_is_surjective(const Rep& n, const Hom& f) {
    for (int v = 0; v < int(n.dim.size()); ++v)
        if (f[v].rank() != n.dim[v]) return false;
    return true;
}

bool hom_is_invertible(const Rep& m, const Rep& n, const Hom& f) {
    for (int v = 0; v < int(m.dim.size()); ++v)
        if (m.dim[v] != n.dim[v] || f[v].rank() != m.dim[v]) return false;
    return true;
}

Rep zero_rep(const Algebra& a) {
    Rep r;
    r.alg = &a;
    r.dim.assign(a.q.num_vertices(), 0);
    for (int x = 0; x < a.q.num_arrows(); ++x) r.act.push_back(Mat(0, 0));
    return r;
}

Rep simple_rep(const Algebra& a, int v) {
    Rep r;
    r.alg = &a;
    r.dim.assign(a.q.num_vertices(), 0);
    r.dim[v] = 1;
    for (int x = 0; x < a.q.num_arrows(); ++x)
        r.act.push_back(Mat(r.dim[a.q.arrow(x).src], r.dim[a.q.arrow(x).tgt]));
    return r;
}

std::vector<std::vector<int>> projective_slots(const Algebra& a, int v) {
    std::vector<std::vector<int>> slots(a.q.num_vertices());
    for (int b : a.basis_from(v)) slots[a.basis[b].tgt].push_back(b);
    return slots;
}

std::vector<std::vector<int>> regular_slots(const Algebra& a) {
    std::vector<std::vector<int>> slots(a.q.num_vertices());
    for (int b = 0; b < a.dim(); ++b) slots[a.basis[b].tgt].push_back(b);
    return slots;
}

namespace {

Rep rep_from_slots(const Algebra& a, const std::vector<std::vector<int>>& slots) {
    Rep r;
    r.alg = &a;
    r.dim.resize(a.q.num_vertices());
    std::vector<int> pos(a.dim(), -1);
    for (int v = 0; v < a.q.num_vertices(); ++v) {
        r.dim[v] = int(slots[v].size());
        for (int i = 0; i < r.dim[v]; ++i) pos[slots[v][i]] = i;
    }
    for (int x = 0; x < a.q.num_arrows(); ++x) {
        int s = a.q.arrow(x).src, t = a.q.arrow(x).tgt;
        Mat mx(r.dim[s], r.dim[t]);
        int ax = a.basis_index(s, Word{x});
        check_internal(ax >= 0, "arrow missing from algebra basis");
        for (int i = 0; i < r.dim[s]; ++i) {
            int p = a.mul(slots[s][i], ax);
            if (p >= 0) {
                check_internal(pos[p] >= 0, "product slot missing");
                mx.at(i, pos[p]) = 1;
            }
        }
        r.act.push_back(std::move(mx));
    }
    return r;
}

}  // namespace

Rep projective_rep(const Algebra& a, int v) { return rep_from_slots(a, projective_slots(a, v)); }

Rep regular_rep(const Algebra& a) { return rep_from_slots(a, regular_slots(a)); }

SumRep direct_sum(const Algebra& a, const std::vector<const Rep*>& parts) {
    SumRep out;
    out.rep.alg = &a;
    int nv = a.q.num_vertices();
    out.rep.dim.assign(nv, 0);
    for (const Rep* p : parts) {
        std::vector<int> offs(nv);
        for (int v = 0; v < nv; ++v) {
            offs[v] = out.rep.dim[v];
            out.rep.dim[v] += p->dim[v];
        }
        out.vertex_offsets.push_back(std::move(offs));
    }
    for (int x = 0; x < a.q.num_arrows(); ++x) {
        int s = a.q.arrow(x).src, t = a.q.arrow(x).tgt;
        Mat mx(out.rep.dim[s], out.rep.dim[t]);
        for (size_t k = 0; k < parts.size(); ++k) {
            const Mat& blk = parts[k]->act[x];
            int ro = out.vertex_offsets[k][s], co = out.vertex_offsets[k][t];
            for (int i = 0; i < blk.rows(); ++i)
                for (int j = 0; j < blk.cols(); ++j) mx.at(ro + i, co + j) = blk.at(i, j);
        }
        out.rep.act.push_back(std::move(mx));
    }
    return out;
}

SubRep sub_rep(const Rep& m, const std::vector<Mat>& rows) {
    const Algebra& a = A(m);
    SubRep out;
    out.rep.alg = &a;
    int nv = a.q.num_vertices();
    std::vector<Mat> basis(nv);
    for (int v = 0; v < nv; ++v) {
        basis[v] = rows[v].row_basis();
        out.rep.dim.push_back(basis[v].rows());
    }
    for (int x = 0; x < a.q.num_arrows(); ++x) {
        int s = a.q.arrow(x).src, t = a.q.arrow(x).tgt;
        Mat img = basis[s] * m.act[x];
        out.rep.act.push_back(express_in_rows(basis[t], img));
    }
    out.incl = basis;
    return out;
}

QuotRep quotient_rep(const Rep& m, const std::vector<Mat>& rows) {
    const Algebra& a = A(m);
    QuotRep out;
    out.rep.alg = &a;
    int nv = a.q.num_vertices();
    std::vector<Mat> sub(nv), comp(nv), proj(nv);
    for (int v = 0; v < nv; ++v) {
        sub[v] = rows[v].row_basis();
        comp[v] = complement_in(sub[v], Mat::identity(m.dim[v]));
        out.rep.dim.push_back(comp[v].rows());
        // coordinates: x = (c | s) * vstack(comp, sub); projection keeps c
        Mat full = vstack(comp[v], sub[v]);
        Mat coords = express_in_rows(full, Mat::identity(m.dim[v]));
        Mat p(m.dim[v], comp[v].rows());
        for (int i = 0; i < m.dim[v]; ++i)
            for (int j = 0; j < comp[v].rows(); ++j) p.at(i, j) = coords.at(i, j);
        proj[v] = std::move(p);
    }
    for (int x = 0; x < a.q.num_arrows(); ++x) {
        int s = a.q.arrow(x).src, t = a.q.arrow(x).tgt;
        out.rep.act.push_back(comp[s] * m.act[x] * proj[t]);
    }
    out.proj = proj;
    return out;
}

std::vector<Mat> radical_rows(const Rep& m) {
    const Algebra& a = A(m);
    int nv = a.q.num_vertices();
    std::vector<Mat> rad(nv);
    for (int v = 0; v < nv; ++v) rad[v] = Mat(0, m.dim[v]);
    for (int x = 0; x < a.q.num_arrows(); ++x) {
        int s = a.q.arrow(x).src, t = a.q.arrow(x).tgt;
        if (m.dim[s] == 0) continue;
        rad[t] = vstack(rad[t], m.act[x]);
    }
    for (int v = 0; v < nv; ++v) rad[v] = rad[v].row_basis();
    return rad;
}

std::vector<int> top_dims(const Rep& m) {
    auto rad = radical_rows(m);
    std::vector<int> t;
    for (size_t v = 0; v < rad.size(); ++v) t.push_back(m.dim[v] - rad[v].rows());
    return t;
}

std::vector<Hom> hom_space(const Rep& m, const Rep& n) {
    const Algebra& a = A(m);
    int nv = a.q.num_vertices();
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + m.dim[v] * n.dim[v];
    int vars = off[nv];
    if (vars == 0) return {};

    int eqs = 0;
    for (int x = 0; x < a.q.num_arrows(); ++x)
        eqs += m.dim[a.q.arrow(x).src] * n.dim[a.q.arrow(x).tgt];
    Mat E(eqs, vars);
    int row = 0;
    for (int x = 0; x < a.q.num_arrows(); ++x) {
        int s = a.q.arrow(x).src, t = a.q.arrow(x).tgt;
        for (int r = 0; r < m.dim[s]; ++r)
            for (int c = 0; c < n.dim[t]; ++c) {
                // (act_m * F_t)[r][c] - (F_s * act_n)[r][c] = 0
                for (int k = 0; k < m.dim[t]; ++k)
                    if (m.act[x].at(r, k) != 0)
                        E.at(row, off[t] + k * n.dim[t] + c) += m.act[x].at(r, k);
                for (int k = 0; k < n.dim[s]; ++k)
                    if (n.act[x].at(k, c) != 0)
                        E.at(row, off[s] + r * n.dim[s] + k) -= n.act[x].at(k, c);
                ++row;
            }
    }
    Mat sols = E.transpose().left_kernel();  // rows z with E z^T = 0
    std::vector<Hom> out;
    for (int i = 0; i < sols.rows(); ++i) {
        Hom f;
        for (int v = 0; v < nv; ++v) {
            Mat fv(m.dim[v], n.dim[v]);
            for (int r = 0; r < m.dim[v]; ++r)
                for (int c = 0; c < n.dim[v]; ++c)
                    fv.at(r, c) = sols.at(i, off[v] + r * n.dim[v] + c);
            f.push_back(std::move(fv));
        }
        out.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const Rep& m, const Rep& n) { return int(hom_space(m, n).size()); }

Syzygy syzygy(const Rep& m) {
    const Algebra& a = A(m);
    int nv = a.q.num_vertices();
    auto rad = radical_rows(m);
    std::vector<Mat> gens(nv);
    Syzygy out;
    out.cover_mult.assign(nv, 0);
    for (int v = 0; v < nv; ++v) {
        gens[v] = complement_in(rad[v], Mat::identity(m.dim[v]));
        out.cover_mult[v] = gens[v].rows();
    }
    std::vector<Rep> projs;
    std::vector<const Rep*> parts;
    std::vector<std::pair<int, int>> summands;  // (vertex, copy)
    for (int v = 0; v < nv; ++v)
        for (int c = 0; c < out.cover_mult[v]; ++c) summands.emplace_back(v, c);
    for (auto& [v, c] : summands) {
        (void)c;
        projs.push_back(projective_rep(a, v));
    }
    for (const Rep& p : projs) parts.push_back(&p);
    SumRep sum = direct_sum(a, parts);
    out.cover = sum.rep;

    std::vector<std::vector<std::vector<int>>> slots;
    for (auto& [v, c] : summands) {
        (void)c;
        slots.push_back(projective_slots(a, v));
    }
    out.pi.clear();
    for (int u = 0; u < nv; ++u) {
        Mat pu(out.cover.dim[u], m.dim[u]);
        for (size_t k = 0; k < summands.size(); ++k) {
            auto [v, c] = summands[k];
            int offs = sum.vertex_offsets[k][u];
            for (size_t sidx = 0; sidx < slots[k][u].size(); ++sidx) {
                const BasisElem& b = a.basis[slots[k][u][sidx]];
                Mat img = gens[v].row(c) * m.act_word(v, b.w);
                pu.set_row(offs + int(sidx), img);
            }
        }
        out.pi.push_back(std::move(pu));
    }
    for (int u = 0; u < nv; ++u)
        check_internal(out.pi[u].rank() == m.dim[u], "projective cover not surjective");

    std::vector<Mat> ker(nv);
    for (int u = 0; u < nv; ++u) ker[u] = out.pi[u].left_kernel();
    SubRep sr = sub_rep(out.cover, ker);
    out.omega = sr.rep;
    out.incl = sr.incl;
    return out;
}

namespace {

Ext1 ext1_from(Syzygy ses, const Rep& n) {
    const Rep& omega = ses.omega;
    const Algebra& a = A(n);
    int nv = a.q.num_vertices();
    Ext1 out;

    std::vector<Hom> homs = hom_space(omega, n);
    if (homs.empty()) {
        out.dim = 0;
        out.ses = std::move(ses);
        return out;
    }

    // Hom(cover, n) restricted to omega; cover maps come for free: a map from
    // the projective on v is evaluation at a vector of n at v
    std::vector<std::pair<int, int>> summands;
    for (int v = 0; v < nv; ++v)
        for (int c = 0; c < ses.cover_mult[v]; ++c) summands.emplace_back(v, c);
    std::vector<std::vector<std::vector<int>>> slots;
    std::vector<int> voffs(nv, 0);
    // recompute vertex offsets of the cover's summands
    std::vector<std::vector<int>> offsets;
    {
        std::vector<int> acc(nv, 0);
        for (auto& [v, c] : summands) {
            (void)c;
            offsets.push_back(acc);
            auto sl = projective_slots(a, v);
            for (int u = 0; u < nv; ++u) acc[u] += int(sl[u].size());
            slots.push_back(std::move(sl));
        }
    }

    Mat restr(0, flatten_hom(homs[0]).cols());
    for (size_t k = 0; k < summands.size(); ++k) {
        auto [v, c] = summands[k];
        (void)c;
        for (int d = 0; d < n.dim[v]; ++d) {
            Hom phi;
            for (int u = 0; u < nv; ++u) phi.push_back(Mat(ses.cover.dim[u], n.dim[u]));
            for (int u = 0; u < nv; ++u)
                for (size_t sidx = 0; sidx < slots[k][u].size(); ++sidx) {
                    const BasisElem& b = a.basis[slots[k][u][sidx]];
                    Mat img = unit_row(n.dim[v], d) * n.act_word(v, b.w);
                    phi[u].set_row(offsets[k][u] + int(sidx), img);
                }
            Hom r;
            for (int u = 0; u < nv; ++u) r.push_back(ses.incl[u] * phi[u]);
            restr = vstack(restr, flatten_hom(r));
        }
    }

    Mat homs_flat(0, restr.cols());
    for (const Hom& h : homs) homs_flat = vstack(homs_flat, flatten_hom(h));
    Mat image = restr.row_basis();
    out.dim = int(homs.size()) - image.rows();
    check_internal(out.dim >= 0, "restriction image larger than hom space");
    Mat reps = complement_in(image, homs_flat);
    check_internal(reps.rows() == out.dim, "cocycle complement has wrong dimension");
    for (int i = 0; i < reps.rows(); ++i)
        out.cocycles.push_back(unflatten_hom(omega, n, reps.row(i)));
    out.ses = std::move(ses);
    return out;
}

}  // namespace

Ext1 ext1(const Rep& m, const Rep& n) { return ext1_from(syzygy(m), n); }

int ext_dim(const Rep& m, const Rep& n, int degree) {
    check_internal(degree == 1 || degree == 2, "ext degree must be 1 or 2");
    if (degree == 1) return ext1(m, n).dim;
    Syzygy s = syzygy(m);
    return ext1(s.omega, n).dim;
}

bool is_cm(const Rep& m) {
    const Algebra& a = A(m);
    if (m.total_dim() == 0) return true;
    Syzygy s = syzygy(m);
    for (int v = 0; v < a.q.num_vertices(); ++v) {
        Rep p = projective_rep(a, v);
        Syzygy copy = s;
        if (ext1_from(std::move(copy), p).dim != 0) return false;
    }
    return true;
}

Extension middle_term(const Rep& m, const Rep& n, const Ext1& ext, int cocycle_index) {
    const Algebra& a = A(m);
    check_internal(cocycle_index >= 0 && cocycle_index < int(ext.cocycles.size()),
                   "cocycle index out of range");
    const Hom& c = ext.cocycles[cocycle_index];
    const Syzygy& s = ext.ses;
    int nv = a.q.num_vertices();

    std::vector<const Rep*> parts{&s.cover, &n};
    SumRep d = direct_sum(a, parts);
    std::vector<Mat> w(nv);
    for (int v = 0; v < nv; ++v) {
        Mat wv(s.omega.dim[v], d.rep.dim[v]);
        for (int i = 0; i < s.omega.dim[v]; ++i) {
            for (int j = 0; j < s.cover.dim[v]; ++j)
                wv.at(i, d.vertex_offsets[0][v] + j) = s.incl[v].at(i, j);
            for (int j = 0; j < n.dim[v]; ++j)
                wv.at(i, d.vertex_offsets[1][v] + j) = -c[v].at(i, j);
        }
        w[v] = std::move(wv);
    }
    QuotRep q = quotient_rep(d.rep, w);
    Extension out;
    out.e = q.rep;
    for (int v = 0; v < nv; ++v) {
        Mat iv(n.dim[v], q.rep.dim[v]);
        for (int i = 0; i < n.dim[v]; ++i)
            for (int j = 0; j < q.rep.dim[v]; ++j)
                iv.at(i, j) = q.proj[v].at(d.vertex_offsets[1][v] + i, j);
        out.incl_n.push_back(std::move(iv));
    }
    // E -> m descends from D -> m (cover part by pi, n part by zero): the
    // glued rows land in ker(pi). In coordinates: section of proj, then down.
    for (int v = 0; v < nv; ++v) {
        auto sec = solve_left(q.proj[v], Mat::identity(q.rep.dim[v]));
        check_internal(sec.has_value(), "quotient projection not surjective");
        Mat dv(d.rep.dim[v], m.dim[v]);
        for (int i = 0; i < s.cover.dim[v]; ++i)
            for (int j = 0; j < m.dim[v]; ++j)
                dv.at(d.vertex_offsets[0][v] + i, j) = s.pi[v].at(i, j);
        out.proj_m.push_back(*sec * dv);
    }
    check_internal(is_morphism(n, out.e, out.incl_n), "extension inclusion not a morphism");
    check_internal(is_morphism(out.e, m, out.proj_m), "extension projection not a morphism");
    check_internal(hom_is_injective(n, out.incl_n), "extension inclusion not injective");
    check_internal(hom_is_surjective(m, out.proj_m), "extension projection not surjective");
    return out;
}

namespace {

// combination search shared by iso and injection tests: generic power
// weights, then the exhaustive {-2..2} grid under the budget
template <typename Pred>
std::optional<Hom> search_combination(const Rep& m, const Rep& n, const std::vector<Hom>& basis,
                                      Pred pred, bool* exhausted) {
    *exhausted = false;
    int h = int(basis.size());
    if (h == 0) {
        *exhausted = true;
        return std::nullopt;
    }
    auto assemble = [&](const std::vector<mpq_class>& c) {
        Hom f;
        for (int v = 0; v < int(m.dim.size()); ++v) {
            Mat fv(m.dim[v], n.dim[v]);
            for (int k = 0; k < h; ++k)
                if (c[k] != 0) fv = fv + basis[k][v] * c[k];
            f.push_back(std::move(fv));
        }
        return f;
    };
    for (long t : {1L, 2L, 3L, 5L, 7L, 11L, 13L}) {
        std::vector<mpq_class> c(h);
        mpq_class p = 1;
        for (int k = 0; k < h; ++k) {
            c[k] = p;
            p *= t;
        }
        Hom f = assemble(c);
        if (pred(f)) return f;
    }
    double budget = 1.0;
    for (int k = 0; k < h; ++k) {
        budget *= 5.0;
        if (budget > 100000.0) return std::nullopt;  // grid too large, undecided
    }
    std::vector<int> g(h, -2);
    while (true) {
        bool all_zero = std::all_of(g.begin(), g.end(), [](int x) { return x == 0; });
        if (!all_zero) {
            std::vector<mpq_class> c(g.begin(), g.end());
            Hom f = assemble(c);
            if (pred(f)) return f;
        }
        int k = 0;
        while (k < h && g[k] == 2) g[k++] = -2;
        if (k == h) break;
        ++g[k];
    }
    *exhausted = true;
    return std::nullopt;
}

}  // namespace

bool is_isomorphic(const Rep& m, const Rep& n) {
    if (m.dim != n.dim) return false;
    if (m.total_dim() == 0) return true;
    for (size_t x = 0; x < m.act.size(); ++x)
        if (m.act[x].rank() != n.act[x].rank()) return false;
    std::vector<Hom> h = hom_space(m, n);
    if (h.empty()) return false;
    if (int(h.size()) != hom_dim(n, m)) return false;
    bool exhausted = false;
    auto f = search_combination(m, n, h, [&](const Hom& f) { return hom_is_invertible(m, n, f); },
                                &exhausted);
    if (f) return true;
    if (exhausted) return false;
    // large hom space: match indecomposable summands pairwise instead
    std::vector<Rep> pm = decompose(m);
    std::vector<Rep> pn = decompose(n);
    if (pm.size() != pn.size()) return false;
    if (pm.size() <= 1)
        throw InconclusiveIso("isomorphism grid budget exceeded at hom dimension " +
                              std::to_string(h.size()));
    std::vector<bool> used(pn.size(), false);
    for (const Rep& part : pm) {
        bool found = false;
        for (size_t k = 0; k < pn.size(); ++k) {
            if (used[k]) continue;
            if (is_isomorphic(part, pn[k])) {
                used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::optional<Hom> find_injection(const Rep& m, const Rep& n) {
    for (size_t v = 0; v < m.dim.size(); ++v)
        if (m.dim[v] > n.dim[v]) return std::nullopt;
    if (m.total_dim() == 0) return Hom{};
    std::vector<Hom> h = hom_space(m, n);
    if (h.empty()) return std::nullopt;
    bool exhausted = false;
    return search_combination(m, n, h, [&](const Hom& f) { return hom_is_injective(m, f); },
                              &exhausted);
}

namespace {

std::vector<Mat> image_rows(const Rep& m, const Hom& f) {
    std::vector<Mat> rows;
    for (size_t v = 0; v < m.dim.size(); ++v) rows.push_back(f[v].row_basis());
    return rows;
}

std::vector<Mat> kernel_rows(const Rep& m, const Hom& f) {
    std::vector<Mat> rows;
    for (size_t v = 0; v < m.dim.size(); ++v) rows.push_back(f[v].left_kernel());
    return rows;
}

Hom hom_power(const Rep& m, const Hom& f, int e) {
    Hom out;
    for (size_t v = 0; v < m.dim.size(); ++v) out.push_back(Mat::identity(m.dim[v]));
    for (int i = 0; i < e; ++i)
        for (size_t v = 0; v < m.dim.size(); ++v) out[v] = out[v] * f[v];
    return out;
}

// endomorphism ring is local iff its semisimple quotient is 1-dimensional;
// in char 0 the radical is the kernel of the regular trace form
bool end_ring_local(const Rep& m, const std::vector<Hom>& ends) {
    int h = int(ends.size());
    Mat flat(0, flatten_hom(ends[0]).cols());
    for (const Hom& e : ends) flat = vstack(flat, flatten_hom(e));
    // structure constants: ends[i] . ends[j] = sum_k c[i][j][k] ends[k]
    std::vector<Mat> left_mult(h, Mat(h, h));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            Hom prod;
            for (size_t v = 0; v < m.dim.size(); ++v) prod.push_back(ends[i][v] * ends[j][v]);
            Mat coef = express_in_rows(flat, flatten_hom(prod));
            for (int k = 0; k < h; ++k) left_mult[i].at(j, k) = coef.at(0, k);
        }
    // trace form gram matrix: G[i][j] = tr(L_i L_j)
    Mat g(h, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            Mat p = left_mult[i] * left_mult[j];
            mpq_class tr = 0;
            for (int k = 0; k < h; ++k) tr += p.at(k, k);
            g.at(i, j) = tr;
        }
    return g.rank() == 1;
}

}  // namespace

std::vector<Rep> decompose(const Rep& m) {
    if (m.total_dim() == 0) return {};
    std::vector<Hom> ends = hom_space(m, m);
    check_internal(!ends.empty(), "endomorphism ring of a nonzero module is zero");
    if (ends.size() == 1) return {m};

    int n = m.total_dim();
    std::vector<Hom> candidates = ends;
    for (size_t i = 0; i < ends.size(); ++i)
        for (size_t j = i + 1; j < ends.size(); ++j) {
            Hom s, d;
            for (size_t v = 0; v < m.dim.size(); ++v) {
                s.push_back(ends[i][v] + ends[j][v]);
                d.push_back(ends[i][v] - ends[j][v]);
            }
            candidates.push_back(std::move(s));
            candidates.push_back(std::move(d));
        }
    for (const Hom& f : candidates) {
        Hom p = hom_power(m, f, n);  // Fitting: M = im(f^n) + ker(f^n), direct
        int imdim = 0;
        for (size_t v = 0; v < m.dim.size(); ++v) imdim += p[v].rank();
        if (imdim == 0 || imdim == m.total_dim()) continue;
        SubRep im = sub_rep(m, image_rows(m, p));
        SubRep ker = sub_rep(m, kernel_rows(m, p));
        check_internal(im.rep.total_dim() + ker.rep.total_dim() == m.total_dim(),
                       "Fitting split dimensions do not add up");
        std::vector<Rep> out;
        for (const Rep& part : decompose(im.rep)) out.push_back(part);
        for (const Rep& part : decompose(ker.rep)) out.push_back(part);
        std::sort(out.begin(), out.end(), [](const Rep& a, const Rep& b) {
            if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
            return a.dim < b.dim;
        });
        return out;
    }
    if (end_ring_local(m, ends)) return {m};
    throw InconclusiveIso("cannot split or certify indecomposability (End dim " +
                          std::to_string(ends.size()) + ")");
}

bool is_indecomposable(const Rep& m) {
    if (m.total_dim() == 0) return false;
    return decompose(m).size() == 1;
}

bool is_projective_rep(const Rep& m) {
    const Algebra& a = A(m);
    if (m.total_dim() == 0) return true;
    auto t = top_dims(m);
    std::vector<Rep> projs;
    std::vector<const Rep*> parts;
    for (int v = 0; v < a.q.num_vertices(); ++v)
        for (int c = 0; c < t[v]; ++c) projs.push_back(projective_rep(a, v));
    for (const Rep& p : projs) parts.push_back(&p);
    SumRep cand = direct_sum(a, parts);
    if (cand.rep.dim != m.dim) return false;
    return is_isomorphic(cand.rep, m);
}

Rep restrict_rep(const Rep& m, const Algebra& sub, int dropped) {
    const Algebra& a = A(m);
    check_internal(m.dim[dropped] == 0, "restricting a rep supported on the dropped vertex");
    Rep out;
    out.alg = &sub;
    out.dim.assign(sub.q.num_vertices(), 0);
    for (int v = 0; v < sub.q.num_vertices(); ++v)
        out.dim[v] = m.dim[a.q.vertex_checked(sub.q.vertex_name(v))];
    for (int x = 0; x < sub.q.num_arrows(); ++x)
        out.act.push_back(m.act[a.q.arrow_checked(sub.q.arrow(x).id)]);
    return out;
}

Rep inflate_rep(const Rep& m, const Algebra& full) {
    const Algebra& sub = A(m);
    Rep out;
    out.alg = &full;
    out.dim.assign(full.q.num_vertices(), 0);
    for (int v = 0; v < full.q.num_vertices(); ++v) {
        int sv = sub.q.vertex_index(full.q.vertex_name(v));
        if (sv >= 0) out.dim[v] = m.dim[sv];
    }
    for (int x = 0; x < full.q.num_arrows(); ++x) {
        int sx = sub.q.arrow_index(full.q.arrow(x).id);
        if (sx >= 0)
            out.act.push_back(m.act[sx]);
        else
            out.act.push_back(
                Mat(out.dim[full.q.arrow(x).src], out.dim[full.q.arrow(x).tgt]));
    }
    return out;
}

F2Rep f2_shadow(const Rep& m) {
    F2Rep out;
    out.dim = m.dim;
    for (const Mat& a : m.act) {
        F2Mat f(a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) {
                const mpq_class& x = a.at(i, j);
                check_internal(x == 0 || x == 1, "f2 shadow of a non-0/1 matrix");
                if (x == 1) f.flip(i, j);
            }
        out.act.push_back(std::move(f));
    }
    return out;
}

int f2_hom_dim(const F2Rep& m, const F2Rep& n, const Quiver& q) {
    int nv = q.num_vertices();
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + m.dim[v] * n.dim[v];
    int vars = off[nv];
    if (vars == 0) return 0;
    F2Mat e(vars);
    for (int x = 0; x < q.num_arrows(); ++x) {
        int s = q.arrow(x).src, t = q.arrow(x).tgt;
        for (int r = 0; r < m.dim[s]; ++r)
            for (int c = 0; c < n.dim[t]; ++c) {
                F2Vec row(f2_words(vars));
                for (int k = 0; k < m.dim[t]; ++k)
                    if (m.act[x].get(r, k)) f2_flip(row, off[t] + k * n.dim[t] + c);
                for (int k = 0; k < n.dim[s]; ++k)
                    if (n.act[x].get(k, c)) f2_flip(row, off[s] + r * n.dim[s] + k);
                if (!f2_is_zero(row)) e.insert_into_rref(row);
            }
    }
    return vars - e.rows();
}

}  // namespace cmsyz
