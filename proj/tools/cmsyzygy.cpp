#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmsyz/acceptance.hpp"
#include "cmsyz/algebra.hpp"
#include "cmsyz/dimer.hpp"
#include "cmsyz/enumerate.hpp"
#include "cmsyz/error.hpp"
#include "cmsyz/ideal.hpp"
#include "cmsyz/quiver.hpp"
#include "cmsyz/rep.hpp"
#include "cmsyz/skew.hpp"

using nlohmann::ordered_json;

namespace {

using namespace cmsyz;

struct Options {
    std::string input;
    std::string vertex;
    std::string arrow;
    std::string glue = "a";
    std::string module_spec;
    std::string data_dir = "data";
    std::string dot_path;
    int dmax = 0;
    int characteristic = 0;
    int cap = 0;
    bool json = false;
};

void check_char(int c) {
    if (c != 0 && c != 2)
        throw InvalidAction("field characteristic must be 0 or 2");
}

Algebra make_algebra(const ParsedInput& p, int cap) {
    if (!p.relations.empty()) return build_algebra(p.q, p.relations, cap);
    if (p.has_potential())
        return build_algebra(p.q, jacobian_relations(p.q, *p.potential), cap);
    throw ParseError("input has neither relations nor signed cycles");
}

void write_dot(const Options& o, const Quiver& q) {
    if (o.dot_path.empty()) return;
    std::ofstream out(o.dot_path, std::ios::binary);
    if (!out) throw InvalidAction("cannot write '" + o.dot_path + "'");
    out << q.dot();
}

void emit(const Options& o, const ordered_json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string dims_str(const Rep& r) {
    std::string s = "[";
    auto dv = r.dim_vector();
    for (size_t i = 0; i < dv.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dv[i]);
    }
    return s + "]";
}

std::string path_str(const Quiver& q, const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += q.arrow(w[i]).id;
    }
    return s;
}

// Names a module over the algebra by sight: a simple, a projective, or its
// dimension vector.
std::string module_name(const Algebra& a, const Rep& m) {
    for (int v = 0; v < a.q.num_vertices(); ++v) {
        if (m.total_dim() == 1 && is_isomorphic(m, simple_rep(a, v)))
            return "S(" + a.q.vertex_name(v) + ")";
    }
    for (int v = 0; v < a.q.num_vertices(); ++v) {
        Rep p = projective_rep(a, v);
        if (m.total_dim() == p.total_dim() && is_isomorphic(m, p))
            return "P(" + a.q.vertex_name(v) + ")";
    }
    return "M" + dims_str(m);
}

int cmd_validate(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    write_dot(o, p.q);
    ordered_json j{{"schema", 1},
                   {"vertices", p.q.num_vertices()},
                   {"arrows", p.q.num_arrows()},
                   {"relations", p.relations.size()},
                   {"has_potential", p.has_potential()}};
    std::ostringstream t;
    t << "vertices: " << p.q.num_vertices() << "\n"
      << "arrows: " << p.q.num_arrows() << "\n"
      << "relations: " << p.relations.size() << "\n";
    if (p.has_potential()) {
        t << "cycles: " << p.potential->cycles.size() << "\n";
        j["cycles"] = p.potential->cycles.size();
        DimerReport r = validate_dimer(p.q, *p.potential);
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks) {
            t << "check " << c.name << ": " << (c.ok ? "ok" : "FAIL") ;
            if (!c.detail.empty()) t << " (" << c.detail << ")";
            t << "\n";
            checks.push_back(ordered_json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        }
        t << "dimer tree: " << yn(r.ok) << "\n";
        j["checks"] = checks;
        j["dimer_tree"] = r.ok;
    }
    emit(o, j, t.str());
    return 0;
}

int cmd_basis(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    Algebra a = make_algebra(p, o.cap);
    write_dot(o, p.q);
    int only = o.vertex.empty() ? -1 : p.q.vertex_checked(o.vertex);
    ordered_json j{{"schema", 1}, {"dim", a.dim()}};
    ordered_json by_source = ordered_json::object();
    std::ostringstream t;
    t << "dim = " << a.dim() << "\n";
    for (int v = 0; v < p.q.num_vertices(); ++v) {
        if (only >= 0 && v != only) continue;
        ordered_json words = ordered_json::array();
        t << p.q.vertex_name(v) << ":";
        for (int x : a.basis_from(v)) {
            t << " " << a.basis_str(x);
            words.push_back(a.basis_str(x));
        }
        t << "\n";
        by_source[p.q.vertex_name(v)] = words;
    }
    j["basis_by_source"] = by_source;
    emit(o, j, t.str());
    return 0;
}

int cmd_dims(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    Algebra a = make_algebra(p, o.cap);
    write_dot(o, p.q);
    const auto& m = a.m_matrix();
    ordered_json j{{"schema", 1}, {"dim", a.dim()}, {"schurian", a.is_schurian()}};
    ordered_json rows = ordered_json::array();
    ordered_json pdims = ordered_json::object();
    std::ostringstream t;
    t << "dim = " << a.dim() << "\n";
    t << "schurian: " << yn(a.is_schurian()) << "\n";
    t << "m[j][i] (rows j, columns i):\n";
    for (int jj = 0; jj < p.q.num_vertices(); ++jj) {
        t << "  " << p.q.vertex_name(jj) << ":";
        ordered_json row = ordered_json::array();
        for (int i = 0; i < p.q.num_vertices(); ++i) {
            t << " " << m[jj][i];
            row.push_back(m[jj][i]);
        }
        t << "\n";
        rows.push_back(row);
    }
    for (int v = 0; v < p.q.num_vertices(); ++v) {
        int d = int(a.basis_from(v).size());
        t << "dim P(" << p.q.vertex_name(v) << ") = " << d << "\n";
        pdims[p.q.vertex_name(v)] = d;
    }
    j["m"] = rows;
    j["projective_dims"] = pdims;
    emit(o, j, t.str());
    return 0;
}

int cmd_module(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    Algebra a = make_algebra(p, o.cap);
    if (o.vertex.empty()) throw InvalidAction("module needs --vertex");
    int v = p.q.vertex_checked(o.vertex);
    Rep pr = projective_rep(a, v);
    Rep rad = sub_rep(pr, radical_rows(pr)).rep;
    Rep s = simple_rep(a, v);
    ordered_json j{{"schema", 1}, {"vertex", o.vertex}};
    std::ostringstream t;
    auto line = [&](const std::string& name, const Rep& r) {
        bool cm = is_cm(r);
        t << name << ": dims " << dims_str(r) << ", dim " << r.total_dim() << ", syzygy "
          << yn(cm) << "\n";
        j[name] = ordered_json{{"dims", r.dim_vector()},
                               {"dim", r.total_dim()},
                               {"syzygy", cm}};
    };
    line("P", pr);
    line("rad P", rad);
    line("S", s);
    emit(o, j, t.str());
    return 0;
}

int cmd_cmtype(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    DimerAnalysis d = require_dimer(p);
    write_dot(o, p.q);
    int tw = total_weight(d);
    std::string ty = cm_type_a(d);
    ordered_json j{{"schema", 1}, {"type", ty}, {"total_weight", tw}};
    emit(o, j, ty + " (total weight " + std::to_string(tw) + ")\n");
    return 0;
}

int cmd_zigzag(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    DimerAnalysis d = require_dimer(p);
    write_dot(o, p.q);
    std::vector<int> targets;
    if (!o.arrow.empty()) {
        targets.push_back(p.q.arrow_checked(o.arrow));
    } else {
        for (int a = 0; a < p.q.num_arrows(); ++a)
            if (d.is_boundary(a)) targets.push_back(a);
    }
    ordered_json j{{"schema", 1}};
    ordered_json rows = ordered_json::array();
    std::ostringstream t;
    for (int a : targets) {
        Word z = zigzag(d, a), cz = co_zigzag(d, a);
        t << p.q.arrow(a).id << ": zigzag [" << path_str(p.q, z) << "] weight "
          << weight(d, a) << ", co-zigzag [" << path_str(p.q, cz) << "] co-weight "
          << co_weight(d, a) << "\n";
        rows.push_back(ordered_json{{"arrow", p.q.arrow(a).id},
                                    {"zigzag", path_str(p.q, z)},
                                    {"weight", weight(d, a)},
                                    {"co_zigzag", path_str(p.q, cz)},
                                    {"co_weight", co_weight(d, a)}});
    }
    j["paths"] = rows;
    emit(o, j, t.str());
    return 0;
}

ordered_json reduction_json(const Algebra& a, const ReductionReport& rr) {
    ordered_json summands = ordered_json::array();
    for (const auto& s : rr.ideal.summands)
        summands.push_back(ordered_json{{"generator", a.basis_str(s.gen)},
                                        {"tag", s.tag},
                                        {"projective", s.projective}});
    ordered_json mcol = ordered_json::object();
    for (int jj = 0; jj < a.q.num_vertices(); ++jj)
        mcol[a.q.vertex_name(jj)] = rr.ideal.m_column[jj];
    ordered_json rels = ordered_json::array();
    for (const auto& r : rr.b.input_relations) {
        std::string line = rr.b.q.word_str(r.lhs);
        if (r.binomial()) line += " - " + rr.b.q.word_str(r.rhs);
        rels.push_back(line);
    }
    return ordered_json{{"schema", 1},
                        {"vertex", a.q.vertex_name(rr.vertex)},
                        {"dim_a", rr.dim_a},
                        {"dim_j", rr.dim_j},
                        {"dim_b", rr.dim_b},
                        {"summands", summands},
                        {"m_column", mcol},
                        {"projective", rr.verdict_b},
                        {"decomposition", rr.verdict_c},
                        {"embeddings", rr.verdict_d},
                        {"preserves", rr.preserves},
                        {"quotient_relations", rels}};
}

std::string reduction_text(const Algebra& a, const ReductionReport& rr) {
    std::ostringstream t;
    t << "vertex " << a.q.vertex_name(rr.vertex) << ": dim A = " << rr.dim_a
      << ", dim J = " << rr.dim_j << ", dim B = " << rr.dim_b << "\n";
    t << "summands:";
    for (const auto& s : rr.ideal.summands)
        t << " " << a.basis_str(s.gen) << "*A = " << s.tag << ",";
    std::string line = t.str();
    line.pop_back();
    std::ostringstream u;
    u << line << "\n";
    u << "m-column:";
    for (int jj = 0; jj < a.q.num_vertices(); ++jj)
        u << " " << a.q.vertex_name(jj) << ":" << rr.ideal.m_column[jj];
    u << "\n";
    u << "verdicts: projective " << yn(rr.verdict_b) << ", decomposition "
      << yn(rr.verdict_c) << ", embeddings " << yn(rr.verdict_d) << "\n";
    u << "preserves stable category: " << yn(rr.preserves) << "\n";
    u << "quotient relations:";
    if (rr.b.input_relations.empty()) u << " (none)";
    for (const auto& r : rr.b.input_relations) {
        u << " " << rr.b.q.word_str(r.lhs);
        if (r.binomial()) u << " - " << rr.b.q.word_str(r.rhs);
        u << ";";
    }
    std::string out = u.str();
    if (out.back() == ';') out.pop_back();
    return out + "\n";
}

int cmd_reduce(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    Algebra a = make_algebra(p, o.cap);
    if (o.vertex.empty()) throw InvalidAction("reduce needs --vertex");
    int v = p.q.vertex_checked(o.vertex);
    ReductionReport rr = reduce_at(a, v);
    write_dot(o, rr.b.q);
    ordered_json j = reduction_json(a, rr);
    std::string t = reduction_text(a, rr);
    if (p.has_potential()) {
        DimerReport dr = validate_dimer(p.q, *p.potential);
        if (dr.ok && dr.analysis) {
            CriterionCell cell = criterion_at(*dr.analysis, v);
            j["criterion"] = cell.qualifies;
            t += "criterion: " + yn(cell.qualifies) + "\n";
        }
    }
    emit(o, j, t);
    return 0;
}

int cmd_equiv(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    Algebra a = make_algebra(p, o.cap);
    if (o.vertex.empty()) throw InvalidAction("equiv needs --vertex");
    int v = p.q.vertex_checked(o.vertex);
    ReductionReport rr = reduce_at(a, v);
    std::string verdict;
    if (rr.preserves) {
        int mult = 0;
        for (int c : rr.ideal.m_column) mult += c;
        verdict = "YES (J = P(" + a.q.vertex_name(v) + ")^" + std::to_string(mult) + ")";
    } else {
        std::string witness = "no witness";
        for (const auto& s : rr.ideal.summands)
            if (!s.projective) {
                witness = "summand " + a.basis_str(s.gen) + "A = " +
                          module_name(a, s.rep) + " non-projective";
                break;
            }
        verdict = "NO (witness: " + witness + ")";
    }
    ordered_json j{{"schema", 1},
                   {"vertex", a.q.vertex_name(v)},
                   {"preserves", rr.preserves},
                   {"verdict", verdict}};
    emit(o, j, verdict + "\n");
    return 0;
}

int cmd_minimal(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    DimerAnalysis d = require_dimer(p);
    write_dot(o, p.q);
    ordered_json j{{"schema", 1}};
    ordered_json rows = ordered_json::array();
    std::ostringstream t;
    for (int v = 0; v < p.q.num_vertices(); ++v) {
        CriterionCell c = criterion_at(d, v);
        t << "vertex " << p.q.vertex_name(v) << ": " << yn(c.qualifies);
        ordered_json row{{"vertex", p.q.vertex_name(v)}, {"qualifies", c.qualifies}};
        if (c.qualifies) {
            t << " (incoming " << p.q.arrow(c.beta).id << " co-weight 1, outgoing "
              << p.q.arrow(c.gamma).id << " weight 1)";
            row["beta"] = p.q.arrow(c.beta).id;
            row["gamma"] = p.q.arrow(c.gamma).id;
        }
        t << "\n";
        rows.push_back(row);
    }
    bool min = cm_minimal(d);
    t << "CM-minimal: " << yn(min) << "\n";
    j["vertices"] = rows;
    j["cm_minimal"] = min;
    emit(o, j, t.str());
    return 0;
}

int cmd_skew(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    SkewResult sk = skew_quiver(p);
    write_dot(o, sk.shape.q);
    ordered_json j{{"schema", 1}, {"b_type", sk.b_type}};
    ordered_json verts = ordered_json::array();
    ordered_json arrs = ordered_json::array();
    std::ostringstream t;
    t << "orbit quiver vertices:";
    for (const auto& v : sk.shape.q.vertex_names()) {
        t << " " << v;
        verts.push_back(v);
    }
    t << "\norbit quiver arrows:\n";
    for (const auto& ar : sk.shape.q.arrows()) {
        t << "  " << ar.id << ": " << sk.shape.q.vertex_name(ar.src) << " -> "
          << sk.shape.q.vertex_name(ar.tgt) << "\n";
        arrs.push_back(ordered_json{{"id", ar.id},
                                    {"src", sk.shape.q.vertex_name(ar.src)},
                                    {"tgt", sk.shape.q.vertex_name(ar.tgt)}});
    }
    t << "type: " << sk.b_type << "\n";
    j["vertices"] = verts;
    j["arrows"] = arrs;
    emit(o, j, t.str());
    return 0;
}

int cmd_transfer(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    TransferReport tr = minimality_transfer_check(p);
    ordered_json j{{"schema", 1},
                   {"a_type", tr.a_type},
                   {"b_type", tr.b_type},
                   {"a_minimal", tr.a_minimal},
                   {"b_minimal", tr.b_minimal}};
    ordered_json rows = ordered_json::array();
    std::ostringstream t;
    for (const auto& oc : tr.orbits) {
        t << "orbit " << oc.rep << " (partner " << oc.partner << "): criterion "
          << yn(oc.a_criterion) << ", closes " << yn(oc.closes) << ", same type "
          << yn(oc.same_type) << ", preserves " << yn(oc.preserves) << "\n";
        rows.push_back(ordered_json{{"rep", oc.rep},
                                    {"partner", oc.partner},
                                    {"criterion", oc.a_criterion},
                                    {"closes", oc.closes},
                                    {"same_type", oc.same_type},
                                    {"preserves", oc.preserves}});
    }
    t << "glued: " << tr.a_type << " minimal " << yn(tr.a_minimal) << "\n";
    t << "orbit: " << tr.b_type << " minimal " << yn(tr.b_minimal) << "\n";
    t << "agreement: yes\n";
    j["orbits"] = rows;
    j["agreement"] = true;
    emit(o, j, t.str());
    return 0;
}

int cmd_functor_f(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    Algebra a = make_algebra(p, o.cap);
    if (o.vertex.empty()) throw InvalidAction("functor-f needs --vertex");
    if (o.module_spec.empty())
        throw InvalidAction("functor-f needs --module (rad:<vertex> or d1,d2,...)");
    int v = p.q.vertex_checked(o.vertex);
    IdealData jd = ideal_data(a, v);
    Algebra b = quotient_algebra(a, v);

    Rep x = zero_rep(a);
    std::string xname;
    if (o.module_spec.rfind("rad:", 0) == 0) {
        int w = p.q.vertex_checked(o.module_spec.substr(4));
        Rep pw = projective_rep(a, w);
        x = sub_rep(pw, radical_rows(pw)).rep;
        xname = "rad P(" + p.q.vertex_name(w) + ")";
    } else {
        std::vector<int> want;
        std::stringstream ss(o.module_spec);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            try {
                want.push_back(std::stoi(piece));
            } catch (const std::exception&) {
                throw InvalidAction("bad dimension vector entry '" + piece + "'");
            }
        }
        if (int(want.size()) != p.q.num_vertices())
            throw InvalidAction("dimension vector needs one entry per vertex");
        Catalog ca = enumerate_cmp(a, o.dmax);
        int found = -1;
        for (int i = 0; i < int(ca.entries.size()); ++i) {
            if (ca.entries[i].rep.dim_vector() != want) continue;
            if (found >= 0)
                throw Ambiguous("several catalog entries share that dimension vector");
            found = i;
        }
        if (found < 0) throw UnknownName("no catalog entry has that dimension vector");
        x = ca.entries[found].rep;
        xname = ca.entries[found].name;
    }

    bool perp = in_j_perp(jd, x);
    Rep fx = f_functor(jd, b, x);
    std::string fname = fx.total_dim() == 0 ? "0" : module_name(b, fx);
    ordered_json j{{"schema", 1},
                   {"vertex", a.q.vertex_name(v)},
                   {"module", xname},
                   {"in_perpendicular", perp},
                   {"image", fname},
                   {"image_dims", fx.dim_vector()}};
    std::string t = "F(" + xname + ") = " + fname + "\n";
    if (!perp) t += "note: module lies outside the perpendicular category\n";
    emit(o, j, t);
    return 0;
}

int cmd_enumerate(const Options& o) {
    ParsedInput p = parse_input_file(o.input);
    Algebra a = make_algebra(p, o.cap);
    write_dot(o, p.q);
    Catalog c = enumerate_cmp(a, o.dmax);
    int nonproj = int(c.entries.size()) - c.num_projective;
    std::set<int> reach;
    for (int i : radical_generation_closure(c)) reach.insert(i);

    ordered_json j{{"schema", 1},
                   {"entries", c.entries.size()},
                   {"projective", c.num_projective},
                   {"non_projective", nonproj}};
    ordered_json rows = ordered_json::array();
    std::ostringstream t;
    t << "catalog: " << c.entries.size() << " entries (" << nonproj
      << " non-projective)\n";
    for (const auto& e : c.entries) {
        t << "  " << e.name << " dims " << dims_str(e.rep);
        ordered_json row{{"name", e.name},
                         {"dims", e.rep.dim_vector()},
                         {"projective", e.projective}};
        if (!e.projective) {
            t << " omega:";
            ordered_json om = ordered_json::array();
            if (e.omega.empty()) t << " 0";
            for (int k : e.omega) {
                t << " " << c.entries[k].name;
                om.push_back(c.entries[k].name);
            }
            row["omega"] = om;
        }
        t << "\n";
        rows.push_back(row);
    }
    t << "states visited: " << c.stats.states << ", candidates " << c.stats.candidates
      << ", characteristic artifacts " << c.stats.char_artifacts << "\n";
    t << "radical closure: " << reach.size() << " of " << nonproj
      << " non-projective\n";
    j["catalog"] = rows;
    j["states"] = c.stats.states;
    j["candidates"] = c.stats.candidates;
    j["char_artifacts"] = c.stats.char_artifacts;
    j["radical_closure"] = reach.size();
    emit(o, j, t.str());
    return 0;
}

int cmd_golden(const Options& o) {
    if (o.json) {
        std::ostringstream buf;
        AcceptanceOutcome res = run_acceptance(o.data_dir, buf);
        ordered_json items = ordered_json::array();
        std::istringstream lines(buf.str());
        std::string line;
        while (std::getline(lines, line)) items.push_back(line);
        ordered_json j{{"schema", 1},
                       {"passed", res.passed},
                       {"failed", res.failed},
                       {"lines", items}};
        std::cout << j.dump(2) << "\n";
        return res.ok() ? 0 : 1;
    }
    AcceptanceOutcome res = run_acceptance(o.data_dir, std::cout);
    return res.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"syzygy categories of Jacobian algebras: reduction, dimer trees, catalogs"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input)
            sub->add_option("input", o.input, "quiver input file")->required();
        sub->add_flag("--json", o.json, "emit JSON (schema 1)");
        sub->add_option("--dot", o.dot_path, "write the relevant quiver as DOT");
        sub->add_option("--cap", o.cap, "override the rewriting length cap");
        sub->add_option("--char", o.characteristic, "field characteristic (0 or 2)");
    };

    auto* validate = app.add_subcommand("validate", "parse and structural checks");
    add_common(validate, true);
    auto* basis = app.add_subcommand("basis", "normal-form basis of the algebra");
    add_common(basis, true);
    basis->add_option("--vertex", o.vertex, "restrict to one source vertex");
    auto* dims = app.add_subcommand("dims", "dimension data of the algebra");
    add_common(dims, true);
    auto* module = app.add_subcommand("module", "projective, radical and simple at a vertex");
    add_common(module, true);
    module->add_option("--vertex", o.vertex, "vertex name")->required();
    auto* cmtype = app.add_subcommand("cmtype", "CM-type from the total weight");
    add_common(cmtype, true);
    auto* zz = app.add_subcommand("zigzag", "zigzag paths of boundary arrows");
    add_common(zz, true);
    zz->add_option("--arrow", o.arrow, "restrict to one boundary arrow");
    auto* reduce = app.add_subcommand("reduce", "full reduction report at a vertex");
    add_common(reduce, true);
    reduce->add_option("--vertex", o.vertex, "vertex name")->required();
    auto* equiv = app.add_subcommand("equiv", "does reduction preserve the stable category");
    add_common(equiv, true);
    equiv->add_option("--vertex", o.vertex, "vertex name")->required();
    auto* minimal = app.add_subcommand("minimal", "per-vertex criterion and CM-minimality");
    add_common(minimal, true);
    auto* skew = app.add_subcommand("skew", "orbit quiver of the recorded involution");
    add_common(skew, true);
    auto* transfer = app.add_subcommand("transfer-check", "minimality agreement across the involution");
    add_common(transfer, true);
    auto* functor = app.add_subcommand("functor-f", "image of a module under the reduction functor");
    add_common(functor, true);
    functor->add_option("--vertex", o.vertex, "vertex name")->required();
    functor->add_option("--module", o.module_spec, "rad:<vertex> or comma dimension vector")
        ->required();
    functor->add_option("--dmax", o.dmax, "total dimension bound for the catalog");
    auto* enumerate = app.add_subcommand("enumerate", "catalog of indecomposable syzygies");
    add_common(enumerate, true);
    enumerate->add_option("--dmax", o.dmax, "total dimension bound for candidates");
    auto* golden = app.add_subcommand("golden", "bundled golden-example suite");
    golden->add_option("dir", o.data_dir, "directory with the bundled examples");
    golden->add_flag("--json", o.json, "emit JSON (schema 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        check_char(o.characteristic);
        if (validate->parsed()) return cmd_validate(o);
        if (basis->parsed()) return cmd_basis(o);
        if (dims->parsed()) return cmd_dims(o);
        if (module->parsed()) return cmd_module(o);
        if (cmtype->parsed()) return cmd_cmtype(o);
        if (zz->parsed()) return cmd_zigzag(o);
        if (reduce->parsed()) return cmd_reduce(o);
        if (equiv->parsed()) return cmd_equiv(o);
        if (minimal->parsed()) return cmd_minimal(o);
        if (skew->parsed()) return cmd_skew(o);
        if (transfer->parsed()) return cmd_transfer(o);
        if (functor->parsed()) return cmd_functor_f(o);
        if (enumerate->parsed()) return cmd_enumerate(o);
        if (golden->parsed()) return cmd_golden(o);
        throw InvalidAction("no subcommand");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.engine_failure() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
