#include "cmsyz/skew.hpp"

#include <algorithm>
#include <map>

#include "cmsyz/error.hpp"

namespace cmsyz {

namespace {

std::string primed(const std::string& name) { return name + "'"; }

Word canon_rot(const Word& w) {
    int best = 0;
    for (int i = 1; i < (int)w.size(); ++i)
        if (w[i] < w[best]) best = i;
    Word out;
    for (int i = 0; i < (int)w.size(); ++i) out.push_back(w[(best + i) % w.size()]);
    return out;
}

}  // namespace

ParsedInput fibered_product(const ParsedInput& base, const std::string& glue_arrow) {
    DimerAnalysis an = require_dimer(base);
    if (base.q.num_vertices() <= 3)
        throw TooSmall("gluing needs a base with more than three vertices");
    int alpha = base.q.arrow_checked(glue_arrow);
    if (!an.is_boundary(alpha)) throw NotBoundary("glue arrow must be a boundary arrow");
    int gx = base.q.arrow(alpha).src, gy = base.q.arrow(alpha).tgt;

    for (const auto& v : base.q.vertex_names())
        if (base.q.vertex_index(primed(v)) >= 0)
            throw InvalidAction("vertex name '" + primed(v) + "' already taken");
    for (const auto& a : base.q.arrows())
        if (base.q.arrow_index(primed(a.id)) >= 0)
            throw InvalidAction("arrow name '" + primed(a.id) + "' already taken");

    std::vector<std::string> verts = base.q.vertex_names();
    std::vector<int> copy_of(base.q.num_vertices());  // vertex -> its primed copy
    for (int v = 0; v < base.q.num_vertices(); ++v) {
        if (v == gx || v == gy) {
            copy_of[v] = v;
        } else {
            copy_of[v] = int(verts.size());
            verts.push_back(primed(base.q.vertex_name(v)));
        }
    }

    std::vector<Arrow> arrows = base.q.arrows();
    std::vector<int> arrow_copy(base.q.num_arrows());
    for (int a = 0; a < base.q.num_arrows(); ++a) {
        if (a == alpha) {
            arrow_copy[a] = a;
            continue;
        }
        const Arrow& ar = base.q.arrow(a);
        arrow_copy[a] = int(arrows.size());
        arrows.push_back({primed(ar.id), copy_of[ar.src], copy_of[ar.tgt]});
    }

    ParsedInput out;
    out.q = Quiver(verts, arrows);
    Potential w;
    for (const auto& sc : base.potential->cycles) w.cycles.push_back(sc);
    for (const auto& sc : base.potential->cycles) {
        SignedCycle c;
        c.sign = -sc.sign;
        for (int a : sc.arrows) c.arrows.push_back(arrow_copy[a]);
        w.cycles.push_back(std::move(c));
    }
    out.potential = std::move(w);

    InvolutionSpec inv;
    for (int v = 0; v < base.q.num_vertices(); ++v) {
        const std::string& n = base.q.vertex_name(v);
        if (v == gx || v == gy)
            inv.fixed.push_back(n);
        else
            inv.swaps.emplace_back(n, primed(n));
    }
    out.involution = std::move(inv);
    return out;
}

Sigma involution_maps(const ParsedInput& p) {
    if (!p.involution) throw InvalidAction("input declares no involution");
    const Quiver& q = p.q;
    Sigma s;
    s.vertex.assign(q.num_vertices(), -1);
    s.fixed_vertex.assign(q.num_vertices(), false);
    for (const auto& n : p.involution->fixed) {
        int v = q.vertex_checked(n);
        if (s.vertex[v] >= 0) throw InvalidAction("vertex '" + n + "' listed twice");
        s.vertex[v] = v;
        s.fixed_vertex[v] = true;
    }
    for (const auto& [na, nb] : p.involution->swaps) {
        int a = q.vertex_checked(na), b = q.vertex_checked(nb);
        if (a == b || s.vertex[a] >= 0 || s.vertex[b] >= 0)
            throw InvalidAction("swap '" + na + "<->" + nb + "' overlaps another entry");
        s.vertex[a] = b;
        s.vertex[b] = a;
    }
    for (int v = 0; v < q.num_vertices(); ++v)
        if (s.vertex[v] < 0)
            throw InvalidAction("vertex '" + q.vertex_name(v) + "' missing from the involution");

    s.arrow.assign(q.num_arrows(), -1);
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        int su = s.vertex[ar.src], sv = s.vertex[ar.tgt];
        int image = -1;
        for (int b = 0; b < q.num_arrows(); ++b)
            if (q.arrow(b).src == su && q.arrow(b).tgt == sv) {
                if (image >= 0) throw InvalidAction("arrow image of '" + ar.id + "' is ambiguous");
                image = b;
            }
        if (image < 0) throw InvalidAction("arrow '" + ar.id + "' has no image arrow");
        s.arrow[a] = image;
    }
    for (int a = 0; a < q.num_arrows(); ++a)
        if (s.arrow[s.arrow[a]] != a) throw InvalidAction("arrow map is not an involution");

    if (p.has_potential()) {
        std::map<std::string, int> signs;
        for (const auto& sc : p.potential->cycles)
            signs[q.word_str(canon_rot(sc.arrows))] = sc.sign;
        for (const auto& sc : p.potential->cycles) {
            Word img;
            for (int a : sc.arrows) img.push_back(s.arrow[a]);
            auto it = signs.find(q.word_str(canon_rot(img)));
            if (it == signs.end() || it->second != -sc.sign)
                throw InvalidAction("involution must send each cycle to one of the opposite sign");
        }
    }
    return s;
}

std::string d_type(const DimerAnalysis& glued) {
    int n = total_weight(glued) / 2;
    if (n % 2 == 0)
        throw InvalidAction("orbit type needs an odd weight parameter, got " + std::to_string(n));
    return "D_" + std::to_string((n + 1) / 2);
}

SkewResult skew_quiver(const ParsedInput& glued) {
    Sigma s = involution_maps(glued);
    const Quiver& q = glued.q;

    std::vector<std::string> verts;
    std::vector<std::string> rep_name(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) {
        const std::string& n = q.vertex_name(v);
        if (s.fixed_vertex[v]) {
            verts.push_back(n + "+");
            verts.push_back(n + "-");
            rep_name[v] = n;
        } else if (s.vertex[v] > v) {
            verts.push_back(n);
            rep_name[v] = n;
            rep_name[s.vertex[v]] = n;
        }
    }
    std::map<std::string, int> vidx;
    for (int i = 0; i < (int)verts.size(); ++i) vidx[verts[i]] = i;

    std::vector<Arrow> arrows;
    auto emit = [&](const std::string& id, const std::string& sn, const std::string& tn) {
        arrows.push_back({id, vidx.at(sn), vidx.at(tn)});
    };
    for (int a = 0; a < q.num_arrows(); ++a) {
        if (s.arrow[a] < a) continue;  // orbit handled at its first arrow
        const Arrow& ar = q.arrow(a);
        bool fs = s.fixed_vertex[ar.src], ft = s.fixed_vertex[ar.tgt];
        const std::string& sn = q.vertex_name(ar.src);
        const std::string& tn = q.vertex_name(ar.tgt);
        if (s.arrow[a] == a) {
            check_internal(fs && ft, "a fixed arrow must join fixed vertices");
            emit(ar.id + "+", sn + "+", tn + "+");
            emit(ar.id + "-", sn + "-", tn + "-");
        } else if (fs && ft) {
            throw InvalidAction("swapped arrow between fixed vertices is not supported");
        } else if (fs) {
            emit(ar.id + "+", sn + "+", rep_name[ar.tgt]);
            emit(ar.id + "-", sn + "-", rep_name[ar.tgt]);
        } else if (ft) {
            emit(ar.id + "+", rep_name[ar.src], tn + "+");
            emit(ar.id + "-", rep_name[ar.src], tn + "-");
        } else {
            emit(ar.id, rep_name[ar.src], rep_name[ar.tgt]);
        }
    }

    SkewResult out;
    out.shape.q = Quiver(verts, arrows);
    out.b_type = d_type(require_dimer(glued));
    return out;
}

TransferReport minimality_transfer_check(const ParsedInput& glued) {
    DimerAnalysis an = require_dimer(glued);
    Sigma s = involution_maps(glued);
    const Quiver& q = glued.q;

    TransferReport rep;
    rep.a_type = cm_type_a(an);
    rep.b_type = d_type(an);
    int base_weight = total_weight(an);

    rep.a_minimal = cm_minimal(an);
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (!s.fixed_vertex[v]) continue;
        if (criterion_at(an, v).qualifies)
            throw TransferMismatch("fixed vertex '" + q.vertex_name(v) +
                                   "' qualifies but has no orbit partner");
    }

    bool any_preserving = false;
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (s.fixed_vertex[v] || s.vertex[v] < v) continue;
        int w = s.vertex[v];
        OrbitCheck oc;
        oc.rep = q.vertex_name(v);
        oc.partner = q.vertex_name(w);
        oc.a_criterion = criterion_at(an, v).qualifies;
        if (criterion_at(an, w).qualifies != oc.a_criterion)
            throw TransferMismatch("criterion differs across the orbit of '" + oc.rep + "'");
        if (oc.a_criterion) {
            ParsedInput once = reduce_potential_input(glued, oc.rep);
            DimerAnalysis an1 = require_dimer(once);
            oc.closes = criterion_at(an1, once.q.vertex_checked(oc.partner)).qualifies;
            if (oc.closes) {
                ParsedInput twice = reduce_potential_input(once, oc.partner);
                DimerAnalysis an2 = require_dimer(twice);
                oc.same_type = total_weight(an2) == base_weight;
                if (!oc.same_type)
                    throw TransferMismatch("double reduction at the orbit of '" + oc.rep +
                                           "' changed the weight parameter");
            }
        }
        oc.preserves = oc.a_criterion && oc.closes;
        if (oc.preserves) any_preserving = true;
        rep.orbits.push_back(oc);
    }
    rep.b_minimal = !any_preserving;
    if (rep.a_minimal != rep.b_minimal) throw TransferMismatch("minimality verdicts disagree");
    return rep;
}

}  // namespace cmsyz
