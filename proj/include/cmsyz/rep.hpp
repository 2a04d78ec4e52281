#pragma once

#include <optional>
#include <vector>

#include "cmsyz/algebra.hpp"
#include "cmsyz/f2.hpp"
#include "cmsyz/mat.hpp"

namespace cmsyz {

// Right module over an Algebra: row vectors at each vertex, arrows act on the
// right, so a word acts by the left-to-right product of its arrow matrices.
struct Rep {
    const Algebra* alg = nullptr;
    std::vector<int> dim;   // per vertex
    std::vector<Mat> act;   // per arrow: dim[src] x dim[tgt]

    int total_dim() const;
    Mat act_word(int src_vertex, const Word& w) const;  // identity for empty w
    bool satisfies_relations() const;
    std::vector<int> dim_vector() const { return dim; }
};

// Module morphism: one matrix per vertex, dim_src[v] x dim_tgt[v].
using Hom = std::vector<Mat>;

bool is_morphism(const Rep& m, const Rep& n, const Hom& f);
Hom compose(const Rep& a, const Rep& b, const Rep& c, const Hom& f, const Hom& g);
bool hom_is_zero(const Hom& f);
bool hom_is_injective(const Rep& m, const Hom& f);
bool hom_is_surjective(const Rep& n, const Hom& f);
bool hom_is_invertible(const Rep& m, const Rep& n, const Hom& f);

Rep zero_rep(const Algebra& a);
Rep simple_rep(const Algebra& a, int v);
Rep projective_rep(const Algebra& a, int v);   // basis: algebra words from v
Rep regular_rep(const Algebra& a);             // basis: all algebra words, by target

// Slot bookkeeping for the two canonical constructions above: the algebra
// basis indices sitting at each vertex, in order.
std::vector<std::vector<int>> projective_slots(const Algebra& a, int v);
std::vector<std::vector<int>> regular_slots(const Algebra& a);

struct SumRep {
    Rep rep;
    std::vector<std::pair<int, int>> offsets;  // per summand, per vertex handled internally
    std::vector<std::vector<int>> vertex_offsets;  // [summand][vertex] -> offset
};
SumRep direct_sum(const Algebra& a, const std::vector<const Rep*>& parts);

// Subrepresentation spanned by the given rows (must be action-closed; rows
// need not be independent). Returns the rep plus the inclusion morphism.
struct SubRep {
    Rep rep;
    Hom incl;
};
SubRep sub_rep(const Rep& m, const std::vector<Mat>& rows);

// Quotient by an action-closed row space. Returns the rep plus the projection.
struct QuotRep {
    Rep rep;
    Hom proj;
};
QuotRep quotient_rep(const Rep& m, const std::vector<Mat>& rows);

std::vector<Mat> radical_rows(const Rep& m);   // spanned by all arrow images
std::vector<int> top_dims(const Rep& m);

// Basis of Hom(m, n) as a vector space of morphisms.
std::vector<Hom> hom_space(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

// Minimal projective cover ses: 0 -> omega -> cover -pi-> m -> 0.
struct Syzygy {
    Rep cover;
    std::vector<int> cover_mult;  // multiplicity of each projective summand
    Hom pi;
    Rep omega;
    Hom incl;  // omega -> cover
};
Syzygy syzygy(const Rep& m);

// Ext^1(m, n): cokernel of Hom(cover, n) -> Hom(omega m, n); cocycles are the
// deterministic complement representatives, as morphisms omega -> n.
struct Ext1 {
    int dim = 0;
    std::vector<Hom> cocycles;
    Syzygy ses;
};
Ext1 ext1(const Rep& m, const Rep& n);
int ext_dim(const Rep& m, const Rep& n, int degree);  // degree 1 or 2

bool is_cm(const Rep& m);  // Ext^1(m, P(v)) = 0 for every vertex

// Middle term of the extension of m by n along a cocycle from ext1(m, n):
// 0 -> n -> e -> m -> 0.
struct Extension {
    Rep e;
    Hom incl_n;
    Hom proj_m;
};
Extension middle_term(const Rep& m, const Rep& n, const Ext1& ext, int cocycle_index);

// Isomorphism test: invariant falsifiers, then generic combinations of a hom
// basis, then the exhaustive small grid. Grid exhausted without a unit means
// "not isomorphic"; budget exceeded raises InconclusiveIso.
bool is_isomorphic(const Rep& m, const Rep& n);

// Search for an injective morphism m -> n by the same combination strategy.
std::optional<Hom> find_injection(const Rep& m, const Rep& n);

// Indecomposable direct summands, via Fitting splits of endomorphisms; the
// char-0 trace form certifies locality of the endomorphism ring. Raises
// InconclusiveIso when neither applies. Results sorted by (total dim, dims).
std::vector<Rep> decompose(const Rep& m);
bool is_indecomposable(const Rep& m);

bool is_projective_rep(const Rep& m);

// Transport across the vertex-deletion quotient. `sub` must be the quotient
// algebra of `m.alg` at `dropped` (arrows matched by id).
Rep restrict_rep(const Rep& m, const Algebra& sub, int dropped);
Rep inflate_rep(const Rep& m, const Algebra& full);

// F_2 shadow of a rep with 0/1 matrices, for fast prefilters.
struct F2Rep {
    std::vector<int> dim;
    std::vector<F2Mat> act;
};
F2Rep f2_shadow(const Rep& m);
int f2_hom_dim(const F2Rep& m, const F2Rep& n, const Quiver& q);

}  // namespace cmsyz
