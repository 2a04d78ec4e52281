#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmsyz/quiver.hpp"

namespace cmsyz {

// Rewriting rule lhs -> rhs along the length-then-lex word order
// (lex on the arrow-id ranks). Empty rhs means "rewrites to zero".
struct Rule {
    Word lhs;
    Word rhs;
    bool to_zero() const { return rhs.empty(); }
};

struct BasisElem {
    int src, tgt;
    Word w;  // empty for the idempotent e_src (then src == tgt)
};

// Finite-dimensional path-algebra quotient presented by monomial/binomial
// relations, finished into a confluent rewriting system. Multiplication of
// basis elements lands in the basis or at zero, with coefficient one.
class Algebra {
public:
    Quiver q;
    std::vector<RelationLine> input_relations;
    std::vector<Rule> rules;
    std::vector<BasisElem> basis;
    int cap = 0;

    int dim() const { return int(basis.size()); }

    // words compared by (length, lex on arrow ranks); ranks order arrow ids
    bool word_less(const Word& a, const Word& b) const;

    // full normal form; nullopt means the word is zero in the algebra
    std::optional<Word> reduce(Word w) const;

    // index of a normal word in the basis; idempotents via empty word + src
    int basis_index(int src, const Word& w) const;
    int idempotent(int v) const { return basis_index(v, {}); }

    // product of basis elements: basis index, or -1 when zero (including the
    // non-composable case)
    int mul(int x, int y) const;

    const std::vector<int>& basis_from(int v) const { return from_[v]; }
    const std::vector<int>& basis_to(int v) const { return to_[v]; }

    // m[j][i] = dim e_j A e_i = number of basis words from j to i
    const std::vector<std::vector<int>>& m_matrix() const { return m_; }
    bool is_schurian() const;

    std::string basis_str(int x) const;  // "e_v" or "a*b"

    void finalize();  // index structures + exhaustive associativity check

private:
    std::vector<int> rank_;                  // arrow index -> rank by id
    std::vector<std::vector<int>> from_, to_;
    std::vector<std::vector<int>> m_;
    std::map<std::string, int> index_;
    mutable std::map<std::pair<int, int>, int> mul_memo_;

    std::string basis_key(int src, const Word& w) const;
    friend Algebra build_algebra(const Quiver&, const std::vector<RelationLine>&, int);
};

// Completes the relations into a confluent system and enumerates the normal-
// form basis. cap <= 0 selects the default bound 2*|arrows| + 2 on word
// length; exceeding it raises CapExceeded.
Algebra build_algebra(const Quiver& q, const std::vector<RelationLine>& rels, int cap = 0);

// The quotient by the two-sided ideal generated by e_v: drop the vertex, drop
// relations with a side through v, demote binomials whose other side survives.
Algebra quotient_algebra(const Algebra& a, int v);
std::vector<RelationLine> quotient_relations(const Quiver& q,
                                             const std::vector<RelationLine>& rels,
                                             const Quiver& sub, int dropped_vertex);

}  // namespace cmsyz
