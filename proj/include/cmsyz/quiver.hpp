#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmsyz {

// A word is a composable sequence of arrow indices, read left to right:
// the word {a, b} is the path "first a, then b".
using Word = std::vector<int>;

struct Arrow {
    std::string id;
    int src = -1;
    int tgt = -1;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return int(vnames_.size()); }
    int num_arrows() const { return int(arrows_.size()); }

    const std::string& vertex_name(int v) const { return vnames_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::string>& vertex_names() const { return vnames_; }

    int vertex_index(const std::string& name) const;          // -1 if absent
    int arrow_index(const std::string& id) const;              // -1 if absent
    int vertex_checked(const std::string& name) const;         // throws UnknownName
    int arrow_checked(const std::string& id) const;            // throws UnknownName

    const std::vector<int>& out_arrows(int v) const { return out_[v]; }
    const std::vector<int>& in_arrows(int v) const { return in_[v]; }

    bool word_composable(const Word& w) const;
    int word_src(const Word& w) const { return arrows_[w.front()].src; }
    int word_tgt(const Word& w) const { return arrows_[w.back()].tgt; }
    std::string word_str(const Word& w) const;  // "a*b*c"

    bool connected() const;  // underlying undirected graph

    // Quiver on the vertices NOT listed; arrows touching them dropped.
    Quiver without_vertices(const std::vector<int>& drop) const;

    std::string dot() const;

private:
    std::vector<std::string> vnames_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vindex_;
    std::map<std::string, int> aindex_;
    std::vector<std::vector<int>> out_, in_;
};

struct SignedCycle {
    Word arrows;   // closed composable word, distinct vertices
    int sign = 1;  // +1 or -1
};

struct Potential {
    std::vector<SignedCycle> cycles;
};

// One relation line: lhs (and rhs when binomial) are parallel words, length >= 2.
struct RelationLine {
    Word lhs;
    Word rhs;  // empty for a monomial relation
    bool binomial() const { return !rhs.empty(); }
};

struct InvolutionSpec {
    std::vector<std::pair<std::string, std::string>> swaps;
    std::vector<std::string> fixed;
};

struct ParsedInput {
    Quiver q;
    std::optional<Potential> potential;
    std::vector<RelationLine> relations;
    std::optional<InvolutionSpec> involution;

    bool has_potential() const { return potential.has_value(); }
};

ParsedInput parse_input(std::istream& in);
ParsedInput parse_input_string(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

// Canonical text form, re-parseable.
std::string write_input(const ParsedInput& p);

// All chordless cycles: simple directed cycles whose vertex set induces
// exactly the cycle (no extra arrows among its vertices). Canonicalized to
// start at the smallest arrow index; sorted by (length, first arrow id).
std::vector<Word> chordless_cycles(const Quiver& q);

// Cyclic-derivative relations of the potential, one per arrow that appears in
// it; two-term derivatives with opposite signs become binomials. Derivatives
// with more than two terms, or two terms of equal sign, are outside the
// engine's relation class.
std::vector<RelationLine> jacobian_relations(const Quiver& q, const Potential& w);

}  // namespace cmsyz
