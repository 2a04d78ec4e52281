#include "cmsyz/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cmsyz/error.hpp"

namespace cmsyz {

namespace {

std::string dims_str(const std::vector<int>& d) {
    std::string s = "[";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

// Insert a vector at one vertex and close the mod-2 state under the action.
void close_state(const F2Rep& sh, const Quiver& q, std::vector<F2Mat>& sub, int v0, F2Vec seed) {
    std::vector<std::pair<int, F2Vec>> work{{v0, std::move(seed)}};
    while (!work.empty()) {
        auto [v, vec] = std::move(work.back());
        work.pop_back();
        if (!sub[v].insert_into_rref(vec)) continue;
        for (int a : q.out_arrows(v)) {
            F2Vec img = f2_mul_vec(vec, sh.act[a]);
            int t = q.arrow(a).tgt;
            if (!f2_is_zero(img) && !sub[t].contains(img)) work.emplace_back(t, img);
        }
    }
}

std::string state_key(const std::vector<F2Mat>& sub) {
    std::string k;
    for (const auto& m : sub) {
        k += m.key();
        k += '|';
    }
    return k;
}

// Mod-2 image of an integer-matrix rep. Denominators must be 1.
F2Rep mod2_shadow(const Rep& m) {
    F2Rep out;
    out.dim = m.dim;
    for (const Mat& a : m.act) {
        F2Mat f(a.rows(), a.cols());
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c) {
                const mpq_class& x = a.at(r, c);
                check_internal(x.get_den() == 1, "submodule action is not integral");
                if (mpz_odd_p(x.get_num().get_mpz_t())) f.flip(r, c);
            }
        out.act.push_back(std::move(f));
    }
    return out;
}

bool certified_indecomposable(const Rep& m, const Quiver& q) {
    // mod-2 endomorphism count bounds the exact one from above
    F2Rep sh = mod2_shadow(m);
    if (f2_hom_dim(sh, sh, q) == 1) return true;
    if (hom_dim(m, m) == 1) return true;
    return is_indecomposable(m);
}

}  // namespace

int Catalog::find(const Rep& r) const {
    for (int i = 0; i < int(entries.size()); ++i)
        if (entries[i].rep.dim == r.dim && is_isomorphic(entries[i].rep, r)) return i;
    return -1;
}

std::vector<int> Catalog::find_summands(const Rep& r) const {
    std::vector<int> out;
    if (r.total_dim() == 0) return out;
    for (const Rep& part : decompose(r)) {
        int idx = find(part);
        check_internal(idx >= 0, "summand of dims " + dims_str(part.dim) + " not in the catalog");
        out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Catalog::index_of_name(const std::string& name) const {
    for (int i = 0; i < int(entries.size()); ++i)
        if (entries[i].name == name) return i;
    throw UnknownName("no catalog entry named '" + name + "'");
}

Catalog enumerate_cmp(const Algebra& a, int dmax) {
    const Quiver& q = a.q;
    int nv = q.num_vertices();
    Rep reg = regular_rep(a);
    F2Rep sh = f2_shadow(reg);

    long budget = 0;
    for (int v = 0; v < nv; ++v) {
        if (reg.dim[v] > 22)
            throw SearchSpaceTooLarge("vertex dimension " + std::to_string(reg.dim[v]) +
                                      " in the regular module is too large to sweep");
        budget += 1L << reg.dim[v];
    }
    if (budget > 10'000'000)
        throw SearchSpaceTooLarge("generator sweep budget " + std::to_string(budget) +
                                  " exceeds 10^7");

    // Walk the lattice of mod-2 submodules of the regular module, up to two
    // generators per state; modules with wider tops are recovered by the
    // syzygy and extension closures below.
    std::vector<std::vector<F2Mat>> states;
    std::vector<int> state_gens;
    std::map<std::string, int> seen;
    {
        std::vector<F2Mat> empty;
        for (int v = 0; v < nv; ++v) empty.push_back(F2Mat(reg.dim[v]));
        seen[state_key(empty)] = 0;
        states.push_back(std::move(empty));
        state_gens.push_back(0);
    }
    for (size_t head = 0; head < states.size(); ++head) {
        if (states.size() > 1'000'000)
            throw SearchSpaceTooLarge("more than 10^6 submodule states");
        if (state_gens[head] >= 2) continue;
        for (int v = 0; v < nv; ++v) {
            for (long mask = 1; mask < (1L << reg.dim[v]); ++mask) {
                F2Vec vec(f2_words(reg.dim[v]), 0);
                for (int b = 0; b < reg.dim[v]; ++b)
                    if ((mask >> b) & 1) f2_flip(vec, b);
                if (states[head][v].contains(vec)) continue;
                std::vector<F2Mat> nxt = states[head];
                close_state(sh, q, nxt, v, std::move(vec));
                std::string k = state_key(nxt);
                if (!seen.count(k)) {
                    seen[k] = int(states.size());
                    states.push_back(std::move(nxt));
                    state_gens.push_back(state_gens[head] + 1);
                }
            }
        }
    }

    Catalog cat;
    cat.alg = &a;
    cat.stats.states = long(states.size());

    // Exact lift, indecomposability, Ext-vanishing, isomorphism dedupe.
    std::vector<Rep> mods;
    for (size_t si = 1; si < states.size(); ++si) {
        const auto& st = states[si];
        ++cat.stats.candidates;
        int total = 0;
        for (int v = 0; v < nv; ++v) total += st[v].rows();
        if (dmax > 0 && total > dmax) continue;

        std::vector<Mat> rows(nv);
        for (int v = 0; v < nv; ++v) {
            Mat rv(st[v].rows(), reg.dim[v]);
            for (int r = 0; r < st[v].rows(); ++r)
                for (int c = 0; c < reg.dim[v]; ++c)
                    if (st[v].get(r, c)) rv.at(r, c) = 1;
            rows[v] = std::move(rv);
        }
        bool closed = true;
        for (int ai = 0; ai < q.num_arrows() && closed; ++ai) {
            const Arrow& ar = q.arrow(ai);
            if (!rows[ar.tgt].contains_rows(rows[ar.src] * reg.act[ai])) closed = false;
        }
        if (!closed) {
            ++cat.stats.char_artifacts;
            continue;
        }
        Rep sub = sub_rep(reg, rows).rep;
        bool dup = false;
        for (const Rep& prev : mods)
            if (prev.dim == sub.dim && is_isomorphic(prev, sub)) {
                dup = true;
                break;
            }
        if (dup) continue;
        if (!certified_indecomposable(sub, q)) continue;
        if (!is_cm(sub)) continue;
        mods.push_back(std::move(sub));
    }

    // Projectives are catalog members regardless of the bound; the closures
    // and the final ordering assume they are present.  Radical summands are
    // syzygies of the simple tops, so they are always members too, and they
    // seed the generation closure.
    auto add_if_new = [&](Rep&& r) {
        for (const Rep& prev : mods)
            if (prev.dim == r.dim && is_isomorphic(prev, r)) return false;
        if (mods.size() >= 400) throw SearchSpaceTooLarge("catalog exceeded 400 entries");
        mods.push_back(std::move(r));
        return true;
    };
    for (int v = 0; v < nv; ++v) {
        Rep p = projective_rep(a, v);
        Rep rad = sub_rep(p, radical_rows(p)).rep;
        add_if_new(std::move(p));
        if (rad.total_dim() == 0) continue;
        for (Rep& part : decompose(rad)) {
            bool fresh = add_if_new(std::move(part));
            if (fresh)
                check_internal(is_cm(mods.back()), "radical summand fails Ext-vanishing");
        }
    }

    // Close under syzygies; every new summand is again a submodule of
    // projectives, just not necessarily of the regular module itself.
    std::vector<std::vector<Rep>> omega_parts;
    std::vector<bool> mod_proj;
    size_t omega_done = 0;
    auto close_under_omega = [&]() {
        for (; omega_done < mods.size(); ++omega_done) {
            size_t i = omega_done;
            if (mods.size() > 400) throw SearchSpaceTooLarge("catalog exceeded 400 entries");
            omega_parts.resize(mods.size());
            mod_proj.resize(mods.size(), false);
            mod_proj[i] = is_projective_rep(mods[i]);
            if (mod_proj[i]) continue;
            Syzygy s = syzygy(mods[i]);
            check_internal(s.omega.total_dim() > 0, "non-projective with vanishing syzygy");
            for (Rep& part : decompose(s.omega)) {
                bool known = false;
                for (const Rep& prev : mods)
                    if (prev.dim == part.dim && is_isomorphic(prev, part)) {
                        known = true;
                        break;
                    }
                omega_parts[i].push_back(std::move(part));
                if (!known) {
                    check_internal(is_cm(omega_parts[i].back()), "syzygy summand fails Ext-vanishing");
                    mods.push_back(omega_parts[i].back());
                }
            }
        }
        omega_parts.resize(mods.size());
        mod_proj.resize(mods.size(), false);
    };
    close_under_omega();

    // Middle terms of extensions between members decompose into members
    // again; grow to that fixpoint so the generation closure can match every
    // summand it produces.  Projective-to-projective extensions vanish and
    // pairs with a projective are never sampled downstream.
    std::set<std::pair<size_t, size_t>> sampled;
    bool grew = true;
    while (grew) {
        grew = false;
        size_t cur = mods.size();
        for (size_t i = 0; i < cur; ++i) {
            if (mod_proj[i]) continue;
            for (size_t k = 0; k < cur; ++k) {
                if (mod_proj[k]) continue;
                if (!sampled.insert({i, k}).second) continue;
                Ext1 ext = ext1(mods[i], mods[k]);
                std::vector<Hom> cocycles = ext.cocycles;
                const size_t base = cocycles.size();
                for (size_t x = 0; x < base; ++x)
                    for (size_t y = x + 1; y < base; ++y) {
                        Hom sum;
                        for (size_t v = 0; v < cocycles[x].size(); ++v)
                            sum.push_back(cocycles[x][v] + cocycles[y][v]);
                        cocycles.push_back(std::move(sum));
                    }
                for (size_t x = 0; x < cocycles.size(); ++x) {
                    Ext1 with = ext;
                    with.cocycles.push_back(cocycles[x]);
                    Extension mid =
                        middle_term(mods[i], mods[k], with, int(with.cocycles.size()) - 1);
                    for (Rep& part : decompose(mid.e)) {
                        bool fresh = add_if_new(std::move(part));
                        if (fresh) {
                            check_internal(is_cm(mods.back()),
                                           "extension middle summand fails Ext-vanishing");
                            grew = true;
                        }
                    }
                }
            }
        }
        if (grew) close_under_omega();
    }

    // Final order: projectives by vertex, then by (total dim, dims, discovery).
    std::vector<int> proj_of(mods.size(), -1);
    std::vector<int> proj_idx(nv, -1);
    for (int v = 0; v < nv; ++v) {
        Rep p = projective_rep(a, v);
        for (size_t i = 0; i < mods.size(); ++i)
            if (mods[i].dim == p.dim && is_isomorphic(mods[i], p)) {
                check_internal(proj_idx[v] < 0, "two catalog entries match one projective");
                proj_idx[v] = int(i);
                proj_of[i] = v;
            }
        check_internal(proj_idx[v] >= 0, "projective module missing from the sweep");
    }
    std::vector<int> order;
    for (int v = 0; v < nv; ++v) order.push_back(proj_idx[v]);
    std::vector<int> rest;
    for (size_t i = 0; i < mods.size(); ++i)
        if (proj_of[i] < 0) rest.push_back(int(i));
    std::stable_sort(rest.begin(), rest.end(), [&](int x, int y) {
        if (mods[x].total_dim() != mods[y].total_dim())
            return mods[x].total_dim() < mods[y].total_dim();
        return mods[x].dim < mods[y].dim;
    });
    order.insert(order.end(), rest.begin(), rest.end());

    std::vector<int> pos(mods.size());
    for (size_t k = 0; k < order.size(); ++k) pos[order[k]] = int(k);

    cat.num_projective = nv;
    std::map<std::string, int> name_count;
    for (int k = 0; k < int(order.size()); ++k) {
        int i = order[k];
        CatalogEntry e;
        e.rep = mods[i];
        e.projective = proj_of[i] >= 0;
        e.proj_vertex = proj_of[i];
        std::string base = e.projective ? "P(" + q.vertex_name(proj_of[i]) + ")"
                                        : "M" + dims_str(mods[i].dim);
        int c = ++name_count[base];
        e.name = c == 1 ? base : base + "#" + std::to_string(c);
        for (const Rep& part : omega_parts[i]) {
            int mi = -1;
            for (size_t m2 = 0; m2 < mods.size(); ++m2)
                if (mods[m2].dim == part.dim && is_isomorphic(mods[m2], part)) {
                    mi = int(m2);
                    break;
                }
            check_internal(mi >= 0, "syzygy summand lost during ordering");
            e.omega.push_back(pos[mi]);
        }
        std::sort(e.omega.begin(), e.omega.end());
        cat.entries.push_back(std::move(e));
    }

    cat.ext1_table.assign(cat.entries.size(), std::vector<int>(cat.entries.size(), 0));
    for (size_t i = 0; i < cat.entries.size(); ++i)
        for (size_t j = 0; j < cat.entries.size(); ++j)
            cat.ext1_table[i][j] = ext1(cat.entries[i].rep, cat.entries[j].rep).dim;
    return cat;
}

std::vector<int> radical_generation_closure(const Catalog& c) {
    std::set<int> reached;
    for (const auto& e : c.entries) {
        if (!e.projective) continue;
        Rep rad = sub_rep(e.rep, radical_rows(e.rep)).rep;
        if (rad.total_dim() == 0) continue;
        for (int idx : c.find_summands(rad))
            if (!c.entries[idx].projective) reached.insert(idx);
    }

    std::set<std::pair<int, int>> done;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i : std::vector<int>(reached.begin(), reached.end()))
            for (int j : c.entries[i].omega)
                if (!c.entries[j].projective && reached.insert(j).second) grew = true;
        for (int i = 0; i < int(c.entries.size()); ++i) {
            const auto& e = c.entries[i];
            if (e.projective || reached.count(i) || e.omega.empty()) continue;
            bool all_in = true, any_nonproj = false;
            for (int j : e.omega) {
                if (c.entries[j].projective) continue;
                any_nonproj = true;
                if (!reached.count(j)) all_in = false;
            }
            if (all_in && any_nonproj && reached.insert(i).second) grew = true;
        }
        std::vector<int> cur(reached.begin(), reached.end());
        for (int i : cur)
            for (int j : cur) {
                if (done.count({i, j})) continue;
                done.insert({i, j});
                Ext1 ext = ext1(c.entries[i].rep, c.entries[j].rep);
                std::vector<Hom> cocycles = ext.cocycles;
                const size_t base = cocycles.size();
                for (size_t k = 0; k < base; ++k)
                    for (size_t l = k + 1; l < base; ++l) {
                        Hom sum;
                        for (size_t v = 0; v < cocycles[k].size(); ++v)
                            sum.push_back(cocycles[k][v] + cocycles[l][v]);
                        cocycles.push_back(std::move(sum));
                    }
                for (size_t k = 0; k < cocycles.size(); ++k) {
                    Ext1 with = ext;
                    with.cocycles.push_back(cocycles[k]);
                    Extension mid = middle_term(c.entries[i].rep, c.entries[j].rep, with,
                                                int(with.cocycles.size()) - 1);
                    for (int idx : c.find_summands(mid.e))
                        if (!c.entries[idx].projective && reached.insert(idx).second) grew = true;
                }
            }
    }
    return std::vector<int>(reached.begin(), reached.end());
}

StableSummary stable_summary(const Catalog& ca, const IdealData& j, const Algebra& b,
                             const Catalog& cb) {
    StableSummary out;
    for (int i = 0; i < int(ca.entries.size()); ++i) {
        if (ca.entries[i].projective) continue;
        // summands of the ideal die in the quotient category even though they
        // sit inside the perpendicular subcategory
        bool in_add_j = false;
        for (const IdealSummand& s : j.summands)
            if (s.rep.dim == ca.entries[i].rep.dim && is_isomorphic(s.rep, ca.entries[i].rep)) {
                in_add_j = true;
                break;
            }
        if (!in_add_j && in_j_perp(j, ca.entries[i].rep))
            out.survivors.push_back(i);
        else
            out.dropped.push_back(i);
    }

    std::set<int> hit;
    for (int i : out.survivors) {
        Rep fx = f_functor(j, b, ca.entries[i].rep);
        int bi = cb.find(fx);
        if (bi < 0)
            throw BijectionFailure("image of '" + ca.entries[i].name +
                                   "' is missing from the quotient catalog");
        if (cb.entries[bi].projective)
            throw BijectionFailure("image of '" + ca.entries[i].name +
                                   "' is projective over the quotient");
        if (!hit.insert(bi).second)
            throw BijectionFailure("two survivors map to '" + cb.entries[bi].name + "'");
        out.matching.emplace_back(i, bi);
    }
    int nonproj_b = 0;
    for (const auto& e : cb.entries)
        if (!e.projective) ++nonproj_b;
    if (int(hit.size()) != nonproj_b)
        throw BijectionFailure("survivors cover " + std::to_string(hit.size()) + " of " +
                               std::to_string(nonproj_b) + " quotient classes");

    out.ext_preserved = true;
    for (const auto& [i1, b1] : out.matching)
        for (const auto& [i2, b2] : out.matching)
            if (ca.ext1_table[i1][i2] != cb.ext1_table[b1][b2]) out.ext_preserved = false;
    return out;
}

}  // namespace cmsyz
