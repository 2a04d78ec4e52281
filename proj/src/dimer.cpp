#include "cmsyz/dimer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cmsyz/error.hpp"

namespace cmsyz {

namespace {

Word rotate_min(const Word& w) {
    int best = 0;
    for (int i = 1; i < (int)w.size(); ++i)
        if (w[i] < w[best]) best = i;
    Word out;
    for (int i = 0; i < (int)w.size(); ++i) out.push_back(w[(best + i) % w.size()]);
    return out;
}

int successor(const Word& cycle, int arrow) {
    for (int i = 0; i < (int)cycle.size(); ++i)
        if (cycle[i] == arrow) return cycle[(i + 1) % cycle.size()];
    throw InternalError("arrow not on its cycle");
}

int predecessor(const Word& cycle, int arrow) {
    for (int i = 0; i < (int)cycle.size(); ++i)
        if (cycle[i] == arrow) return cycle[(i + (int)cycle.size() - 1) % cycle.size()];
    throw InternalError("arrow not on its cycle");
}

}  // namespace

DimerReport validate_dimer(const Quiver& q, const Potential& w) {
    DimerReport rep;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, detail});
        return ok;
    };

    bool ok = add("connected", q.connected(), "underlying graph must be connected");

    bool loops = false;
    for (const auto& a : q.arrows())
        if (a.src == a.tgt) loops = true;
    ok = add("no_loops", !loops, "arrows with equal endpoints are not allowed") && ok;

    bool two_cycle = false;
    for (const auto& a : q.arrows())
        for (const auto& b : q.arrows())
            if (a.src == b.tgt && a.tgt == b.src && a.src != a.tgt) two_cycle = true;
    ok = add("no_two_cycles", !two_cycle, "no pair of mutually inverse arrows") && ok;

    std::vector<Word> cyc = chordless_cycles(q);
    std::vector<std::vector<int>> incident(q.num_arrows());
    for (int c = 0; c < (int)cyc.size(); ++c)
        for (int a : cyc[c]) incident[a].push_back(c);

    bool covered = true, at_most_two = true;
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (incident[a].empty()) covered = false;
        if (incident[a].size() > 2) at_most_two = false;
    }
    ok = add("arrows_covered", covered, "every arrow lies on a chordless cycle") && ok;
    ok = add("arrows_at_most_two", at_most_two,
             "no arrow lies on three or more chordless cycles") &&
         ok;

    // The potential must list exactly the chordless cycles, once each.
    std::map<std::string, int> pot_sign;
    bool pot_wellformed = true;
    for (const auto& sc : w.cycles) {
        std::string key = q.word_str(rotate_min(sc.arrows));
        if (pot_sign.count(key)) pot_wellformed = false;
        pot_sign[key] = sc.sign;
    }
    std::vector<int> sign(cyc.size(), 0);
    bool matches = pot_wellformed && pot_sign.size() == cyc.size();
    for (int c = 0; c < (int)cyc.size(); ++c) {
        auto it = pot_sign.find(q.word_str(cyc[c]));
        if (it == pot_sign.end())
            matches = false;
        else
            sign[c] = it->second;
    }
    ok = add("potential_matches", matches,
             "signed cycles must be exactly the chordless cycles") &&
         ok;

    bool alternating = true;
    int interior_edges = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (incident[a].size() == 2) {
            ++interior_edges;
            if (matches && sign[incident[a][0]] == sign[incident[a][1]]) alternating = false;
        }
    }
    ok = add("signs_alternate", alternating, "cycles sharing an arrow carry opposite signs") && ok;

    // Cycle adjacency (one edge per interior arrow) must form a tree.
    bool tree = !cyc.empty() && interior_edges == (int)cyc.size() - 1;
    if (tree) {
        std::vector<std::set<int>> adj(cyc.size());
        for (int a = 0; a < q.num_arrows(); ++a)
            if (incident[a].size() == 2) {
                adj[incident[a][0]].insert(incident[a][1]);
                adj[incident[a][1]].insert(incident[a][0]);
            }
        std::vector<bool> seen(cyc.size(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int d : adj[c])
                if (!seen[d]) {
                    seen[d] = true;
                    ++reached;
                    stack.push_back(d);
                }
        }
        tree = reached == (int)cyc.size();
    }
    ok = add("dual_tree", tree, "cycle adjacency graph must be a tree") && ok;

    rep.ok = ok;
    if (ok) {
        DimerAnalysis an;
        an.q = q;
        an.pot = w;
        an.cycles = cyc;
        an.sign = sign;
        an.arrow_cycles = incident;
        rep.analysis = std::move(an);
    }
    return rep;
}

DimerAnalysis require_dimer(const ParsedInput& p) {
    if (!p.has_potential()) throw NotDimerTree("input carries no signed cycles");
    DimerReport rep = validate_dimer(p.q, *p.potential);
    if (!rep.ok) {
        for (const auto& c : rep.checks)
            if (!c.ok) throw NotDimerTree("check '" + c.name + "' failed: " + c.detail);
    }
    return *rep.analysis;
}

Word zigzag(const DimerAnalysis& d, int boundary_arrow) {
    if (boundary_arrow < 0 || boundary_arrow >= d.q.num_arrows())
        throw UnknownName("no such arrow");
    if (!d.is_boundary(boundary_arrow))
        throw NotBoundary("zigzag paths start at boundary arrows; '" +
                          d.q.arrow(boundary_arrow).id + "' is interior");
    Word path{boundary_arrow};
    int cyc = d.arrow_cycles[boundary_arrow][0];
    int cur = boundary_arrow;
    int cap = 2 * d.q.num_arrows() + 2;
    for (int step = 0; step < cap; ++step) {
        int nxt = successor(d.cycles[cyc], cur);
        path.push_back(nxt);
        if (d.is_boundary(nxt)) return path;
        const auto& inc = d.arrow_cycles[nxt];
        cyc = inc[0] == cyc ? inc[1] : inc[0];
        cur = nxt;
    }
    throw InternalError("zigzag walk failed to reach the boundary");
}

Word co_zigzag(const DimerAnalysis& d, int boundary_arrow) {
    if (boundary_arrow < 0 || boundary_arrow >= d.q.num_arrows())
        throw UnknownName("no such arrow");
    if (!d.is_boundary(boundary_arrow))
        throw NotBoundary("co-zigzag paths end at boundary arrows; '" +
                          d.q.arrow(boundary_arrow).id + "' is interior");
    Word path{boundary_arrow};
    int cyc = d.arrow_cycles[boundary_arrow][0];
    int cur = boundary_arrow;
    int cap = 2 * d.q.num_arrows() + 2;
    for (int step = 0; step < cap; ++step) {
        int prv = predecessor(d.cycles[cyc], cur);
        path.push_back(prv);
        if (d.is_boundary(prv)) {
            std::reverse(path.begin(), path.end());
            return path;
        }
        const auto& inc = d.arrow_cycles[prv];
        cyc = inc[0] == cyc ? inc[1] : inc[0];
        cur = prv;
    }
    throw InternalError("co-zigzag walk failed to reach the boundary");
}

int weight(const DimerAnalysis& d, int boundary_arrow) {
    return zigzag(d, boundary_arrow).size() % 2 == 1 ? 1 : 2;
}

int co_weight(const DimerAnalysis& d, int boundary_arrow) {
    return co_zigzag(d, boundary_arrow).size() % 2 == 1 ? 1 : 2;
}

int total_weight(const DimerAnalysis& d) {
    int total = 0;
    for (int a = 0; a < d.q.num_arrows(); ++a)
        if (d.is_boundary(a)) total += weight(d, a);
    check_internal(total % 2 == 0, "boundary weights must sum to an even number");
    return total;
}

std::string cm_type_a(const DimerAnalysis& d) {
    int n = total_weight(d) / 2;
    check_internal(n >= 3, "weight sum too small for a type letter");
    return "A_" + std::to_string(n - 2);
}

CriterionCell criterion_at(const DimerAnalysis& d, int vertex) {
    CriterionCell cell;
    for (int c = 0; c < (int)d.cycles.size(); ++c) {
        const Word& w = d.cycles[c];
        if (w.size() != 3) continue;
        int beta = -1, gamma = -1;
        for (int a : w) {
            if (d.q.arrow(a).tgt == vertex) beta = a;
            if (d.q.arrow(a).src == vertex) gamma = a;
        }
        if (beta < 0 || gamma < 0) continue;
        int delta = -1;
        for (int a : w)
            if (a != beta && a != gamma) delta = a;
        if (!d.is_boundary(beta) || !d.is_boundary(gamma) || d.is_boundary(delta)) continue;
        int cw = co_weight(d, beta);
        int gw = weight(d, gamma);
        if (cw == 1 && gw == 1) {
            cell.qualifies = true;
            cell.cycle = c;
            cell.beta = beta;
            cell.gamma = gamma;
            cell.delta = delta;
            cell.beta_co_weight = cw;
            cell.gamma_weight = gw;
            return cell;
        }
    }
    return cell;
}

bool cm_minimal(const DimerAnalysis& d) {
    for (int v = 0; v < d.q.num_vertices(); ++v)
        if (criterion_at(d, v).qualifies) return false;
    return true;
}

ParsedInput reduce_potential_input(const ParsedInput& p, const std::string& vertex) {
    int vid = p.q.vertex_checked(vertex);
    if (!p.has_potential()) throw NotDimerTree("input carries no signed cycles");
    ParsedInput out;
    out.q = p.q.without_vertices({vid});
    Potential w;
    for (const auto& sc : p.potential->cycles) {
        bool touches = false;
        for (int a : sc.arrows) {
            const Arrow& ar = p.q.arrow(a);
            if (ar.src == vid || ar.tgt == vid) touches = true;
        }
        if (touches) continue;
        SignedCycle c;
        c.sign = sc.sign;
        for (int a : sc.arrows) c.arrows.push_back(out.q.arrow_checked(p.q.arrow(a).id));
        w.cycles.push_back(std::move(c));
    }
    out.potential = std::move(w);
    return out;
}

ParsedInput random_dimer_tree(std::uint64_t seed, int max_cycles) {
    check_internal(max_cycles >= 1, "random_dimer_tree needs max_cycles >= 1");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int lo, int hi) {
        return lo + int(rng() % std::uint64_t(hi - lo + 1));
    };

    std::vector<std::string> verts;
    std::vector<Arrow> arrows;
    Potential w;
    std::vector<int> cycle_of;  // per arrow, the first cycle through it
    std::vector<int> uses;      // per arrow, number of cycles through it

    auto fresh_vertex = [&verts]() {
        verts.push_back("v" + std::to_string(verts.size() + 1));
        return int(verts.size()) - 1;
    };
    auto fresh_arrow = [&](int s, int t) {
        arrows.push_back({"a" + std::to_string(arrows.size() + 1), s, t});
        cycle_of.push_back(-1);
        uses.push_back(0);
        return int(arrows.size()) - 1;
    };

    int first_len = pick(3, 5);
    {
        std::vector<int> vs;
        for (int k = 0; k < first_len; ++k) vs.push_back(fresh_vertex());
        SignedCycle c;
        c.sign = 1;
        for (int k = 0; k < first_len; ++k)
            c.arrows.push_back(fresh_arrow(vs[k], vs[(k + 1) % first_len]));
        for (int a : c.arrows) {
            cycle_of[a] = 0;
            uses[a] = 1;
        }
        w.cycles.push_back(std::move(c));
    }

    int target = pick(1, max_cycles);
    while (int(w.cycles.size()) < target) {
        std::vector<int> boundary;
        for (int a = 0; a < int(arrows.size()); ++a)
            if (uses[a] == 1) boundary.push_back(a);
        int glue = boundary[size_t(pick(0, int(boundary.size()) - 1))];
        int len = pick(3, 5);
        SignedCycle c;
        c.sign = -w.cycles[size_t(cycle_of[glue])].sign;
        c.arrows.push_back(glue);
        int prev = arrows[size_t(glue)].tgt;
        for (int k = 0; k < len - 2; ++k) {
            int nxt = fresh_vertex();
            c.arrows.push_back(fresh_arrow(prev, nxt));
            prev = nxt;
        }
        c.arrows.push_back(fresh_arrow(prev, arrows[size_t(glue)].src));
        int cid = int(w.cycles.size());
        for (int a : c.arrows) {
            if (uses[a] == 0) cycle_of[a] = cid;
            ++uses[a];
        }
        w.cycles.push_back(std::move(c));
    }

    ParsedInput out;
    out.q = Quiver(verts, arrows);
    out.potential = std::move(w);
    return out;
}

}  // namespace cmsyz
