#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmsyz/ideal.hpp"
#include "cmsyz/rep.hpp"

namespace cmsyz {

// One indecomposable up to isomorphism. Projectives are named "P(v)", the
// rest "M[d1,...,dk]" by dimension vector, with "#2", "#3" on collisions.
struct CatalogEntry {
    Rep rep;
    std::string name;
    bool projective = false;
    int proj_vertex = -1;
    std::vector<int> omega;  // catalog indices of the syzygy's summands
};

struct EnumStats {
    long states = 0;           // distinct submodule states visited
    long candidates = 0;       // nonzero states examined
    int char_artifacts = 0;    // mod-2 submodules with no exact counterpart
};

// Every indecomposable submodule-of-projectives module, found by walking the
// lattice of mod-2 submodules of the regular module, lifting exactly, and
// closing under syzygies.
struct Catalog {
    const Algebra* alg = nullptr;
    std::vector<CatalogEntry> entries;
    int num_projective = 0;
    std::vector<std::vector<int>> ext1_table;  // pairwise first-extension dims
    EnumStats stats;

    int find(const Rep& r) const;  // -1 when no entry is isomorphic
    std::vector<int> find_summands(const Rep& r) const;  // with multiplicity
    int index_of_name(const std::string& name) const;    // throws UnknownName
};

// dmax <= 0 means no bound on the total dimension of candidates.
Catalog enumerate_cmp(const Algebra& a, int dmax = 0);

// Indices of the non-projective entries reachable from the radicals of the
// projectives by syzygies and extensions between reached members.
std::vector<int> radical_generation_closure(const Catalog& c);

// Comparison of the catalog with the quotient algebra's catalog across the
// reduction functor: non-projectives inside the perpendicular category must
// biject onto the quotient's non-projectives with equal extension dims.
struct StableSummary {
    std::vector<int> survivors;
    std::vector<int> dropped;
    std::vector<std::pair<int, int>> matching;  // survivor entry -> quotient entry
    bool ext_preserved = false;
};
StableSummary stable_summary(const Catalog& ca, const IdealData& j, const Algebra& b,
                             const Catalog& cb);

}  // namespace cmsyz
