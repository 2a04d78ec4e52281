#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmsyz/algebra.hpp"
#include "cmsyz/rep.hpp"

namespace cmsyz {

// The two-sided ideal J generated by the idempotent at a vertex, inside the
// regular module. J is the coordinate span of the normal forms u*v with u
// ending and v starting at the vertex; the cyclic summands u*A are selected
// greedily in basis order, skipping generators already swallowed.
struct IdealSummand {
    int gen;          // algebra basis index of the generating word u
    Rep rep;          // u*A as a representation
    bool projective;  // isomorphic to the projective at the vertex
    std::string tag;  // "P(i)" or "module of dim d"
};

struct IdealData {
    int vertex = -1;
    std::vector<int> words;  // algebra basis indices spanning J, sorted
    Rep rep;                 // J as a subrep of the regular module
    Hom incl;                // into the regular rep
    Rep regular;             // the regular module itself
    std::vector<IdealSummand> summands;
    std::vector<int> m_column;  // dim e_j A e_i, indexed by j

    int dim() const { return int(words.size()); }
};

IdealData ideal_data(const Algebra& a, int vertex);

// Witness for the embedding form of the equivalence: the radical of the
// projective at the vertex embeds into a sum of other projectives with
// cokernel supported away from the vertex.
struct FWitness {
    std::vector<int> proj_vertices;
    Hom emb;   // rad P(vertex) -> sum of projectives
    Rep coker;
};

struct ReductionReport {
    int vertex = -1;
    IdealData ideal;
    Algebra b;
    int dim_a = 0, dim_j = 0, dim_b = 0;
    // directly computed
    bool verdict_b = false;  // J projective
    bool verdict_c = false;  // J isomorphic to P(i)^(sum of the m-column)
    bool verdict_d = false;  // P(i)^(m_ji) embeds into P(j) for every j
    // the common value; (a), (e), (f) mirror it by the equivalence
    bool preserves = false;
    std::vector<std::pair<int, Hom>> d_witnesses;  // per vertex j with m_ji > 0
    std::optional<FWitness> f_witness;
};

// Full reduction analysis at a vertex. Raises ConditionMismatch if the three
// direct verdicts disagree or dim A != dim J + dim B.
ReductionReport reduce_at(const Algebra& a, int vertex);

// Verify a claimed embedding witness; raises MapsNotGiven without maps.
bool verify_generation_witness(const Algebra& a, int vertex,
                               const std::vector<int>& proj_vertices,
                               const std::optional<Hom>& emb);

// Perpendicular category membership: no homs and no extensions from J.
bool in_j_perp(const IdealData& j, const Rep& x);

// The reduction functor on modules: quotient by the trace of add(J), then
// restrict to the smaller quiver. The result is a module over `b`.
Rep f_functor(const IdealData& j, const Algebra& b, const Rep& x);

// Inverse direction: lift a CM module over the quotient algebra to the
// perpendicular category, by pullback along the projective covers and then
// killing extensions from J one cocycle at a time.
struct LiftResult {
    Rep x;                        // over the big algebra
    std::vector<int> ext_trail;   // dim Ext^1(X_k, J) per step, strictly down
};
LiftResult lift_to_j_perp(const Algebra& a, const IdealData& j, const Algebra& b, const Rep& y);

}  // namespace cmsyz
