#include "cmsyz/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "cmsyz/error.hpp"

namespace cmsyz {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vnames_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (int v = 0; v < int(vnames_.size()); ++v) {
        if (vindex_.count(vnames_[v])) throw ParseError("duplicate vertex '" + vnames_[v] + "'");
        vindex_[vnames_[v]] = v;
    }
    out_.resize(vnames_.size());
    in_.resize(vnames_.size());
    for (int a = 0; a < int(arrows_.size()); ++a) {
        const Arrow& ar = arrows_[a];
        if (aindex_.count(ar.id)) throw ParseError("duplicate arrow '" + ar.id + "'");
        if (ar.src < 0 || ar.src >= int(vnames_.size()) || ar.tgt < 0 ||
            ar.tgt >= int(vnames_.size()))
            throw ParseError("arrow '" + ar.id + "' references unknown vertex");
        aindex_[ar.id] = a;
        out_[ar.src].push_back(a);
        in_[ar.tgt].push_back(a);
    }
}

int Quiver::vertex_index(const std::string& name) const {
    auto it = vindex_.find(name);
    return it == vindex_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& id) const {
    auto it = aindex_.find(id);
    return it == aindex_.end() ? -1 : it->second;
}

int Quiver::vertex_checked(const std::string& name) const {
    int v = vertex_index(name);
    if (v < 0) throw UnknownName("no vertex '" + name + "'");
    return v;
}

int Quiver::arrow_checked(const std::string& id) const {
    int a = arrow_index(id);
    if (a < 0) throw UnknownName("no arrow '" + id + "'");
    return a;
}

bool Quiver::word_composable(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (arrows_[w[i]].tgt != arrows_[w[i + 1]].src) return false;
    return !w.empty();
}

std::string Quiver::word_str(const Word& w) const {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += arrows_[w[i]].id;
    }
    return s;
}

bool Quiver::connected() const {
    if (vnames_.empty()) return true;
    std::vector<bool> seen(vnames_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int a : out_[v])
            if (!seen[arrows_[a].tgt]) seen[arrows_[a].tgt] = true, stack.push_back(arrows_[a].tgt);
        for (int a : in_[v])
            if (!seen[arrows_[a].src]) seen[arrows_[a].src] = true, stack.push_back(arrows_[a].src);
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Quiver Quiver::without_vertices(const std::vector<int>& drop) const {
    std::set<int> dropped(drop.begin(), drop.end());
    std::vector<std::string> vs;
    for (int v = 0; v < num_vertices(); ++v)
        if (!dropped.count(v)) vs.push_back(vnames_[v]);
    std::vector<Arrow> as;
    for (const Arrow& a : arrows_)
        if (!dropped.count(a.src) && !dropped.count(a.tgt)) as.push_back(a);
    Quiver out;
    std::vector<Arrow> remapped;
    std::map<std::string, int> vmap;
    for (int i = 0; i < int(vs.size()); ++i) vmap[vs[i]] = i;
    for (Arrow a : as) {
        a.src = vmap[vnames_[arrows_[aindex_.at(a.id)].src]];
        a.tgt = vmap[vnames_[arrows_[aindex_.at(a.id)].tgt]];
        remapped.push_back(a);
    }
    return Quiver(vs, remapped);
}

std::string Quiver::dot() const {
    std::ostringstream os;
    os << "digraph Q {\n";
    for (const auto& v : vnames_) os << "  \"" << v << "\";\n";
    for (const Arrow& a : arrows_)
        os << "  \"" << vnames_[a.src] << "\" -> \"" << vnames_[a.tgt] << "\" [label=\"" << a.id
           << "\"];\n";
    os << "}\n";
    return os.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Word parse_word(const Quiver& q, const std::string& text) {
    Word w;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, '*')) {
        cur = strip(cur);
        if (cur.empty()) throw ParseError("empty factor in word '" + text + "'");
        w.push_back(q.arrow_checked(cur));
    }
    if (w.empty()) throw ParseError("empty word");
    if (!q.word_composable(w)) throw ParseError("word '" + text + "' is not a composable path");
    return w;
}

}  // namespace

ParsedInput parse_input(std::istream& in) {
    std::vector<std::string> vertices;
    struct RawArrow {
        std::string id, src, tgt;
    };
    std::vector<RawArrow> raw_arrows;
    struct RawCycle {
        int sign;
        std::vector<std::string> ids;
    };
    std::vector<RawCycle> raw_cycles;
    std::vector<std::pair<std::string, std::string>> raw_rels;  // lhs text, rhs text ("" if none)
    std::optional<InvolutionSpec> inv;
    bool saw_vertices = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        size_t colon = s.find(':');
        if (colon == std::string::npos) fail("expected '<keyword>:'");
        std::string head = strip(s.substr(0, colon));
        std::string rest = strip(s.substr(colon + 1));

        if (head == "vertices") {
            if (saw_vertices) fail("duplicate vertices line");
            saw_vertices = true;
            vertices = tokenize(rest);
            if (vertices.empty()) fail("no vertices listed");
        } else if (head.rfind("arrow ", 0) == 0) {
            std::string id = strip(head.substr(6));
            if (id.empty()) fail("missing arrow id");
            auto toks = tokenize(rest);
            if (toks.size() != 3 || toks[1] != "->") fail("expected '<src> -> <tgt>'");
            raw_arrows.push_back({id, toks[0], toks[2]});
        } else if (head.rfind("cycle", 0) == 0) {
            std::string signtok = strip(head.substr(5));
            if (signtok != "+" && signtok != "-") fail("cycle sign must be '+' or '-'");
            auto ids = tokenize(rest);
            if (ids.empty()) fail("empty cycle");
            raw_cycles.push_back({signtok == "+" ? 1 : -1, ids});
        } else if (head == "relation") {
            size_t dash = rest.find(" - ");
            if (dash == std::string::npos)
                raw_rels.emplace_back(rest, "");
            else
                raw_rels.emplace_back(strip(rest.substr(0, dash)), strip(rest.substr(dash + 3)));
        } else if (head == "involution") {
            if (inv) fail("duplicate involution line");
            InvolutionSpec spec;
            bool in_fixed = false;
            for (const auto& t : tokenize(rest)) {
                if (t == "fix") {
                    in_fixed = true;
                    continue;
                }
                if (in_fixed) {
                    spec.fixed.push_back(t);
                } else {
                    size_t arr = t.find("<->");
                    if (arr == std::string::npos) fail("expected 'v<->w' pair or 'fix'");
                    spec.swaps.emplace_back(t.substr(0, arr), t.substr(arr + 3));
                }
            }
            inv = std::move(spec);
        } else {
            fail("unknown keyword '" + head + "'");
        }
    }

    if (!saw_vertices) throw ParseError("missing vertices line");
    if (!raw_cycles.empty() && !raw_rels.empty())
        throw ParseError("cycle and relation lines are mutually exclusive");

    std::vector<Arrow> arrows;
    {
        // build with provisional indices, validated by the Quiver constructor
        std::map<std::string, int> vidx;
        for (int i = 0; i < int(vertices.size()); ++i) {
            if (vidx.count(vertices[i])) throw ParseError("duplicate vertex '" + vertices[i] + "'");
            vidx[vertices[i]] = i;
        }
        for (const auto& ra : raw_arrows) {
            if (!vidx.count(ra.src)) throw ParseError("arrow '" + ra.id + "': unknown vertex '" + ra.src + "'");
            if (!vidx.count(ra.tgt)) throw ParseError("arrow '" + ra.id + "': unknown vertex '" + ra.tgt + "'");
            arrows.push_back({ra.id, vidx.at(ra.src), vidx.at(ra.tgt)});
        }
    }
    ParsedInput p;
    p.q = Quiver(vertices, arrows);

    if (!raw_cycles.empty()) {
        Potential w;
        for (const auto& rc : raw_cycles) {
            SignedCycle c;
            c.sign = rc.sign;
            for (const auto& id : rc.ids) c.arrows.push_back(p.q.arrow_checked(id));
            if (!p.q.word_composable(c.arrows))
                throw ParseError("cycle '" + p.q.word_str(c.arrows) + "' is not composable");
            if (p.q.word_tgt(c.arrows) != p.q.word_src(c.arrows))
                throw ParseError("cycle '" + p.q.word_str(c.arrows) + "' is not closed");
            std::set<int> seen;
            for (int a : c.arrows) {
                if (!seen.insert(p.q.arrow(a).src).second)
                    throw ParseError("cycle '" + p.q.word_str(c.arrows) + "' repeats a vertex");
            }
            w.cycles.push_back(std::move(c));
        }
        p.potential = std::move(w);
    }
    for (const auto& [lt, rt] : raw_rels) {
        RelationLine r;
        r.lhs = parse_word(p.q, lt);
        if (!rt.empty()) r.rhs = parse_word(p.q, rt);
        if (r.lhs.size() < 2) throw ParseError("relation side '" + lt + "' shorter than 2 arrows");
        if (r.binomial()) {
            if (r.rhs.size() < 2)
                throw ParseError("relation side '" + rt + "' shorter than 2 arrows");
            if (p.q.word_src(r.lhs) != p.q.word_src(r.rhs) ||
                p.q.word_tgt(r.lhs) != p.q.word_tgt(r.rhs))
                throw ParseError("binomial sides '" + lt + "', '" + rt + "' are not parallel");
        }
        p.relations.push_back(std::move(r));
    }
    if (inv) {
        for (auto& [x, y] : inv->swaps) {
            p.q.vertex_checked(x);
            p.q.vertex_checked(y);
        }
        for (auto& f : inv->fixed) p.q.vertex_checked(f);
        p.involution = std::move(inv.value());
    }
    return p;
}

ParsedInput parse_input_string(const std::string& text) {
    std::istringstream is(text);
    return parse_input(is);
}

ParsedInput parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return parse_input(f);
}

std::string write_input(const ParsedInput& p) {
    std::ostringstream os;
    os << "vertices:";
    for (const auto& v : p.q.vertex_names()) os << " " << v;
    os << "\n";
    std::vector<int> order(p.q.num_arrows());
    for (int i = 0; i < p.q.num_arrows(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return p.q.arrow(a).id < p.q.arrow(b).id;
    });
    for (int a : order)
        os << "arrow " << p.q.arrow(a).id << ": " << p.q.vertex_name(p.q.arrow(a).src) << " -> "
           << p.q.vertex_name(p.q.arrow(a).tgt) << "\n";
    if (p.potential) {
        for (const SignedCycle& c : p.potential->cycles) {
            os << "cycle " << (c.sign > 0 ? "+" : "-") << ":";
            for (int a : c.arrows) os << " " << p.q.arrow(a).id;
            os << "\n";
        }
    }
    for (const RelationLine& r : p.relations) {
        os << "relation: " << p.q.word_str(r.lhs);
        if (r.binomial()) os << " - " << p.q.word_str(r.rhs);
        os << "\n";
    }
    if (p.involution) {
        os << "involution:";
        for (const auto& [x, y] : p.involution->swaps) os << " " << x << "<->" << y;
        if (!p.involution->fixed.empty()) {
            os << " fix";
            for (const auto& f : p.involution->fixed) os << " " << f;
        }
        os << "\n";
    }
    return os.str();
}

std::vector<Word> chordless_cycles(const Quiver& q) {
    std::vector<Word> found;
    int n = q.num_vertices();
    // simple directed cycles whose smallest vertex is the start vertex
    for (int s = 0; s < n; ++s) {
        std::vector<int> path_arrows;
        std::vector<bool> on_path(n, false);
        std::function<void(int)> dfs = [&](int v) {
            for (int a : q.out_arrows(v)) {
                int t = q.arrow(a).tgt;
                if (t == s && !path_arrows.empty()) {
                    path_arrows.push_back(a);
                    found.push_back(path_arrows);
                    path_arrows.pop_back();
                } else if (t > s && !on_path[t]) {
                    on_path[t] = true;
                    path_arrows.push_back(a);
                    dfs(t);
                    path_arrows.pop_back();
                    on_path[t] = false;
                }
            }
        };
        on_path[s] = true;
        dfs(s);
        on_path[s] = false;
    }
    // keep the chordless ones: vertex set induces exactly the cycle
    std::vector<Word> out;
    for (const Word& c : found) {
        if (c.size() < 2) continue;
        std::set<int> vs, cycle_arrows(c.begin(), c.end());
        for (int a : c) vs.insert(q.arrow(a).src);
        bool chordless = true;
        for (int a = 0; a < q.num_arrows() && chordless; ++a)
            if (vs.count(q.arrow(a).src) && vs.count(q.arrow(a).tgt) && !cycle_arrows.count(a))
                chordless = false;
        if (!chordless) continue;
        // canonical rotation: start at the smallest arrow index
        size_t best = 0;
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i] < c[best]) best = i;
        Word rot(c.begin() + best, c.end());
        rot.insert(rot.end(), c.begin(), c.begin() + best);
        out.push_back(rot);
    }
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RelationLine> jacobian_relations(const Quiver& q, const Potential& w) {
    std::vector<RelationLine> rels;
    for (int a = 0; a < q.num_arrows(); ++a) {
        // cyclic derivative: for each occurrence of `a` in a cycle, the path
        // that follows it (wrapping around), with the cycle's sign
        std::vector<std::pair<int, Word>> terms;
        for (const SignedCycle& c : w.cycles) {
            for (size_t i = 0; i < c.arrows.size(); ++i) {
                if (c.arrows[i] != a) continue;
                Word rest;
                for (size_t k = 1; k < c.arrows.size(); ++k)
                    rest.push_back(c.arrows[(i + k) % c.arrows.size()]);
                terms.emplace_back(c.sign, rest);
            }
        }
        if (terms.empty()) continue;
        if (terms.size() > 2)
            throw NonBinomialConsequence("derivative by '" + q.arrow(a).id +
                                         "' has more than two terms");
        RelationLine r;
        if (terms.size() == 1) {
            r.lhs = terms[0].second;
        } else {
            if (terms[0].first == terms[1].first)
                throw NonBinomialConsequence("derivative by '" + q.arrow(a).id +
                                             "' has two terms of equal sign");
            r.lhs = terms[0].second;
            r.rhs = terms[1].second;
        }
        if (r.lhs.size() < 2 || (r.binomial() && r.rhs.size() < 2))
            throw NonBinomialConsequence("derivative by '" + q.arrow(a).id +
                                         "' leaves a path shorter than 2 arrows");
        rels.push_back(std::move(r));
    }
    return rels;
}

}  // namespace cmsyz
