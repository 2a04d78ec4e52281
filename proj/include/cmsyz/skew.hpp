#pragma once

#include <string>
#include <vector>

#include "cmsyz/dimer.hpp"
#include "cmsyz/quiver.hpp"

namespace cmsyz {

// Doubling construction: two copies of a base quiver glued along one boundary
// arrow. Copied vertices and arrows get a trailing prime, copied cycles get
// the opposite sign, and the swap of the two copies is recorded as the
// involution fixing the glue arrow's endpoints.
ParsedInput fibered_product(const ParsedInput& base, const std::string& glue_arrow);

// Vertex and arrow action of the recorded involution.
struct Sigma {
    std::vector<int> vertex;       // vertex index -> image index
    std::vector<int> arrow;        // arrow index -> image index
    std::vector<bool> fixed_vertex;
};
Sigma involution_maps(const ParsedInput& p);  // throws InvalidAction

// Orbit quiver of the involution: one vertex per free orbit, a signed pair of
// vertices per fixed vertex, arrows split accordingly.
struct SkewResult {
    ParsedInput shape;   // quiver only, no potential
    std::string b_type;  // "D_<n>"; requires an odd weight parameter
};
SkewResult skew_quiver(const ParsedInput& glued);

std::string d_type(const DimerAnalysis& glued);  // throws InvalidAction when even

// Minimality agreement between the glued algebra and its orbit partner:
// reductions on the orbit side correspond to symmetric reduction pairs on the
// glued side, so both sides admit a type-preserving reduction together.
struct OrbitCheck {
    std::string rep, partner;
    bool a_criterion = false;   // criterion at the representative vertex
    bool closes = false;        // criterion at the partner after reducing the rep
    bool same_type = false;     // double reduction keeps the weight parameter
    bool preserves = false;     // orbit-side reduction preserves the type
};
struct TransferReport {
    bool a_minimal = false, b_minimal = false;
    std::string a_type, b_type;
    std::vector<OrbitCheck> orbits;
};
TransferReport minimality_transfer_check(const ParsedInput& glued);

}  // namespace cmsyz
