#include "cmsyz/algebra.hpp"

#include <algorithm>
#include <deque>

#include "cmsyz/error.hpp"

namespace cmsyz {

namespace {

// equation between two words-or-zero that must be made joinable
struct Equation {
    std::optional<Word> a, b;
};

bool subword_at(const Word& w, const Word& pat, size_t pos) {
    if (pos + pat.size() > w.size()) return false;
    for (size_t i = 0; i < pat.size(); ++i)
        if (w[pos + i] != pat[i]) return false;
    return true;
}

}  // namespace

bool Algebra::word_less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (rank_[a[i]] != rank_[b[i]]) return rank_[a[i]] < rank_[b[i]];
    return false;
}

std::optional<Word> Algebra::reduce(Word w) const {
    long guard = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos < w.size() && !changed; ++pos) {
            for (const Rule& r : rules) {
                if (!subword_at(w, r.lhs, pos)) continue;
                if (r.to_zero()) return std::nullopt;
                Word next(w.begin(), w.begin() + pos);
                next.insert(next.end(), r.rhs.begin(), r.rhs.end());
                next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
                w = std::move(next);
                changed = true;
                break;
            }
        }
        check_internal(++guard < 1000000, "reduction did not terminate");
    }
    return w;
}

std::string Algebra::basis_key(int src, const Word& w) const {
    std::string k = std::to_string(src) + ":";
    for (int a : w) {
        k += q.arrow(a).id;
        k += '*';
    }
    return k;
}

int Algebra::basis_index(int src, const Word& w) const {
    auto it = index_.find(basis_key(src, w));
    return it == index_.end() ? -1 : it->second;
}

int Algebra::mul(int x, int y) const {
    auto it = mul_memo_.find({x, y});
    if (it != mul_memo_.end()) return it->second;
    int out = -1;
    const BasisElem& bx = basis[x];
    const BasisElem& by = basis[y];
    if (bx.tgt == by.src) {
        Word w = bx.w;
        w.insert(w.end(), by.w.begin(), by.w.end());
        auto nf = reduce(std::move(w));
        if (nf) {
            out = basis_index(bx.src, *nf);
            check_internal(out >= 0, "product normal form missing from basis");
        }
    }
    mul_memo_[{x, y}] = out;
    return out;
}

bool Algebra::is_schurian() const {
    for (const auto& row : m_)
        for (int x : row)
            if (x > 1) return false;
    return true;
}

std::string Algebra::basis_str(int x) const {
    const BasisElem& b = basis[x];
    if (b.w.empty()) return "e_" + q.vertex_name(b.src);
    return q.word_str(b.w);
}

void Algebra::finalize() {
    from_.assign(q.num_vertices(), {});
    to_.assign(q.num_vertices(), {});
    m_.assign(q.num_vertices(), std::vector<int>(q.num_vertices(), 0));
    index_.clear();
    for (int i = 0; i < dim(); ++i) {
        const BasisElem& b = basis[i];
        from_[b.src].push_back(i);
        to_[b.tgt].push_back(i);
        m_[b.src][b.tgt] += 1;
        index_[basis_key(b.src, b.w)] = i;
    }
    // associativity, exhaustively over composable triples
    for (int x = 0; x < dim(); ++x)
        for (int y : from_[basis[x].tgt]) {
            int xy = mul(x, y);
            for (int z : from_[basis[y].tgt]) {
                int yz = mul(y, z);
                int l = xy < 0 ? -1 : mul(xy, z);
                int r = yz < 0 ? -1 : mul(x, yz);
                check_internal(l == r, "associativity failure at (" + basis_str(x) + ", " +
                                           basis_str(y) + ", " + basis_str(z) + ")");
            }
        }
}

Algebra build_algebra(const Quiver& q, const std::vector<RelationLine>& rels, int cap) {
    Algebra a;
    a.q = q;
    a.input_relations = rels;
    a.cap = cap > 0 ? cap : 2 * q.num_arrows() + 2;

    // arrow ranks: position in the id-sorted arrow list
    std::vector<int> order(q.num_arrows());
    for (int i = 0; i < q.num_arrows(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return q.arrow(x).id < q.arrow(y).id; });
    a.rank_.assign(q.num_arrows(), 0);
    for (int i = 0; i < q.num_arrows(); ++i) a.rank_[order[i]] = i;

    std::deque<Equation> todo;
    for (const RelationLine& r : rels) {
        Equation e;
        e.a = r.lhs;
        if (r.binomial()) e.b = r.rhs;
        todo.push_back(std::move(e));
    }

    auto enqueue_overlaps = [&](const Rule& r1, const Rule& r2) {
        // suffix of r1.lhs == prefix of r2.lhs (proper, nonempty)
        for (size_t k = 1; k < r1.lhs.size() && k < r2.lhs.size(); ++k) {
            bool match = true;
            for (size_t i = 0; i < k && match; ++i)
                if (r1.lhs[r1.lhs.size() - k + i] != r2.lhs[i]) match = false;
            if (!match) continue;
            Equation e;
            if (!r1.to_zero()) {
                Word w = r1.rhs;  // r1.rhs + tail of r2.lhs
                w.insert(w.end(), r2.lhs.begin() + k, r2.lhs.end());
                e.a = std::move(w);
            }
            if (!r2.to_zero()) {
                Word w(r1.lhs.begin(), r1.lhs.end() - k);  // head of r1.lhs + r2.rhs
                w.insert(w.end(), r2.rhs.begin(), r2.rhs.end());
                e.b = std::move(w);
            }
            todo.push_back(std::move(e));
        }
        // r1.lhs contained in r2.lhs (proper)
        if (r1.lhs.size() < r2.lhs.size()) {
            for (size_t pos = 0; pos + r1.lhs.size() <= r2.lhs.size(); ++pos) {
                if (!subword_at(r2.lhs, r1.lhs, pos)) continue;
                Equation e;
                if (!r1.to_zero()) {
                    Word w(r2.lhs.begin(), r2.lhs.begin() + pos);
                    w.insert(w.end(), r1.rhs.begin(), r1.rhs.end());
                    w.insert(w.end(), r2.lhs.begin() + pos + r1.lhs.size(), r2.lhs.end());
                    e.a = std::move(w);
                }
                if (!r2.to_zero()) e.b = r2.rhs;
                todo.push_back(std::move(e));
            }
        }
    };

    long rounds = 0;
    while (!todo.empty()) {
        check_internal(++rounds < 200000, "completion did not stabilize");
        Equation e = std::move(todo.front());
        todo.pop_front();
        auto ra = e.a ? a.reduce(*e.a) : std::nullopt;
        auto rb = e.b ? a.reduce(*e.b) : std::nullopt;
        if (ra == rb) continue;
        Rule r;
        if (!ra) {
            r.lhs = *rb;
        } else if (!rb) {
            r.lhs = *ra;
        } else if (a.word_less(*ra, *rb)) {
            r.lhs = *rb;
            r.rhs = *ra;
        } else {
            r.lhs = *ra;
            r.rhs = *rb;
        }
        if (int(r.lhs.size()) > a.cap)
            throw CapExceeded("completion produced a rule of length " +
                              std::to_string(r.lhs.size()) + " over cap " + std::to_string(a.cap));
        if (a.rules.size() >= 10000)
            throw CapExceeded("completion produced more than 10000 rules");

        // retire rules whose lhs the new rule reduces; their content re-enters
        // as equations
        std::vector<Rule> kept;
        for (Rule& old : a.rules) {
            bool hit = false;
            for (size_t pos = 0; pos + r.lhs.size() <= old.lhs.size() && !hit; ++pos)
                if (subword_at(old.lhs, r.lhs, pos)) hit = true;
            if (hit) {
                Equation back;
                back.a = old.lhs;
                if (!old.to_zero()) back.b = old.rhs;
                todo.push_back(std::move(back));
            } else {
                kept.push_back(std::move(old));
            }
        }
        kept.push_back(r);
        a.rules = std::move(kept);
        for (const Rule& other : a.rules) {
            enqueue_overlaps(other, r);
            if (&other != &a.rules.back()) enqueue_overlaps(r, other);
        }
    }

    std::sort(a.rules.begin(), a.rules.end(),
              [&](const Rule& x, const Rule& y) { return a.word_less(x.lhs, y.lhs); });

    // normal-form basis, breadth first by length; normal words are closed
    // under subwords, so the first empty layer ends the search
    for (int v = 0; v < q.num_vertices(); ++v) a.basis.push_back({v, v, {}});
    std::vector<Word> layer;
    for (int x = 0; x < q.num_arrows(); ++x) {
        Word w{x};
        if (a.reduce(w) == std::optional<Word>(w)) layer.push_back(w);
    }
    int len = 1;
    while (!layer.empty()) {
        if (len > a.cap)
            throw CapExceeded("normal forms persist past length cap " + std::to_string(a.cap) +
                              "; the algebra may be infinite-dimensional");
        for (const Word& w : layer) a.basis.push_back({q.word_src(w), q.word_tgt(w), w});
        std::vector<Word> next;
        for (const Word& w : layer)
            for (int x : q.out_arrows(q.word_tgt(w))) {
                Word ext = w;
                ext.push_back(x);
                bool normal = true;
                for (const Rule& r : a.rules) {
                    if (r.lhs.size() > ext.size()) continue;
                    if (subword_at(ext, r.lhs, ext.size() - r.lhs.size())) {
                        normal = false;
                        break;
                    }
                }
                if (normal) next.push_back(ext);
            }
        layer = std::move(next);
        ++len;
    }

    std::sort(a.basis.begin(), a.basis.end(), [&](const BasisElem& x, const BasisElem& y) {
        if (x.src != y.src) return x.src < y.src;
        if (x.w.size() != y.w.size()) return x.w.size() < y.w.size();
        return x.w.empty() ? false : a.word_less(x.w, y.w);
    });
    a.finalize();
    return a;
}

std::vector<RelationLine> quotient_relations(const Quiver& q,
                                             const std::vector<RelationLine>& rels,
                                             const Quiver& sub, int dropped_vertex) {
    auto touches = [&](const Word& w) {
        for (int x : w)
            if (q.arrow(x).src == dropped_vertex || q.arrow(x).tgt == dropped_vertex) return true;
        return false;
    };
    auto remap = [&](const Word& w) {
        Word out;
        for (int x : w) out.push_back(sub.arrow_checked(q.arrow(x).id));
        return out;
    };
    std::vector<RelationLine> out;
    for (const RelationLine& r : rels) {
        bool l = touches(r.lhs);
        bool rr = r.binomial() ? touches(r.rhs) : true;
        if (l && rr) continue;
        RelationLine nr;
        if (!l && !r.binomial()) {
            nr.lhs = remap(r.lhs);
        } else if (!l && !rr) {
            nr.lhs = remap(r.lhs);
            nr.rhs = remap(r.rhs);
        } else if (!l && rr) {
            nr.lhs = remap(r.lhs);  // binomial with dead rhs: lhs becomes monomial
        } else {
            nr.lhs = remap(r.rhs);  // binomial with dead lhs
        }
        out.push_back(std::move(nr));
    }
    return out;
}

Algebra quotient_algebra(const Algebra& a, int v) {
    Quiver sub = a.q.without_vertices({v});
    auto rels = quotient_relations(a.q, a.input_relations, sub, v);
    return build_algebra(sub, rels, a.cap);
}

}  // namespace cmsyz
