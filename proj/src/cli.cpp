#include "folpol/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "folpol/errors.hpp"
#include "folpol/parse.hpp"

namespace folpol::cli {

// ---- reporters

json class_json(const SingClass& c) {
    json j{{"kind", c.kind_name()}};
    if (c.kind == SingClass::Kind::NonDegenerate) {
        j["lambda"] = c.lambda_str();
        json dirs = json::array();
        for (const auto& d : c.directions) dirs.push_back(d.str());
        j["directions"] = dirs;
    }
    if (c.kind == SingClass::Kind::SaddleNode) {
        j["weak"] = c.weak.str();
        j["strong"] = c.strong.str();
        j["weak_index"] = c.weak_index;
    }
    return j;
}

json branch_json(const Branch& b) {
    return {{"x", b.x().str("t", 8)}, {"y", b.y().str("t", 8)}, {"mult", b.mult()}, {"formal", b.formal()}};
}

json tree_json(const ReductionTree& t) {
    json nodes = json::array();
    for (const auto& n : t.nodes()) {
        json j{{"id", n.id},
               {"parent", n.parent},
               {"depth", n.depth},
               {"germ", n.germ.str()},
               {"class", class_json(n.cls)},
               {"blown_up", n.blown_up},
               {"children", n.children}};
        if (n.parent >= 0) j["position"] = n.position.str();
        json comps = json::array();
        for (int c : n.components()) comps.push_back(c);
        j["components"] = comps;
        if (n.blown_up) j["created"] = n.created;
        nodes.push_back(j);
    }
    json comps = json::array();
    for (const auto& c : t.components()) {
        json j{{"id", c.id},
               {"created_at", c.created_at},
               {"rho", c.rho},
               {"dicritical", c.dicritical},
               {"valence", c.valence()},
               {"epsilon", c.epsilon()},
               {"nu_D", c.nu_D},
               {"neighbors", std::vector<int>(c.neighbors.begin(), c.neighbors.end())}};
        if (c.nu_star_D) j["nu_star_D"] = *c.nu_star_D;
        comps.push_back(j);
    }
    return {{"germ", t.germ().str()},
            {"length", t.length()},
            {"leaves", t.leaves()},
            {"nodes", nodes},
            {"components", comps}};
}

json divisor_json(const ReductionTree& t, const BranchDivisor& f) {
    json items = json::array();
    for (const auto& it : f.items) {
        json j = branch_json(it.branch);
        j["coeff"] = it.coeff;
        j["adapted"] = it.adapted;
        j["attachment"] = it.at.str();
        items.push_back(j);
    }
    std::string why;
    bool ok = is_balanced(t, f, &why);
    json j{{"items", items},
           {"zeros", f.zeros().size()},
           {"poles", f.poles().size()},
           {"multiplicity", f.multiplicity()},
           {"balanced", ok}};
    if (!ok) j["unbalanced_reason"] = why;
    return j;
}

json point_json(const SingularPoint& p) {
    return {{"point", p.str()},
            {"chart", chart_name(p.chart)},
            {"germ", p.germ.str()},
            {"milnor", p.milnor},
            {"class", class_json(classify(p.germ))}};
}

json curve_term_json(const LocalCurveTerm& t) {
    return {{"point", t.point.str()},
            {"chart", chart_name(t.point.chart)},
            {"germ", t.point.germ.str()},
            {"curve", t.s_local.str()},
            {"branches", t.branches},
            {"var", t.var},
            {"to_zeros_outside", t.to_rest},
            {"to_poles", t.to_poles},
            {"correction", t.correction()},
            {"gsv", t.gsv},
            {"gsv_direct", t.gsv_direct},
            {"generalized_curve", t.generalized_curve}};
}

json degree_json(const DegreeReport& r) {
    return {{"degree", r.degree}, {"tangency_degree", r.tangency_degree}, {"lines_sampled", r.lines_sampled}};
}

json bezout_json(const BezoutReport& r) {
    json pts = json::array();
    for (const auto& p : r.locus.points) pts.push_back(point_json(p));
    json cl = json::array();
    for (const auto& c : r.locus.clusters)
        cl.push_back({{"chart", chart_name(c.chart)}, {"description", c.description}, {"resultant_degree", c.resultant_degree}});
    return {{"degree", r.degree},
            {"expected", r.expected},
            {"milnor_sum", r.milnor_sum},
            {"generic_count", r.generic_count},
            {"points", pts},
            {"clusters", cl},
            {"holds", r.holds}};
}

json brunella_json(const BrunellaReport& r) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back(curve_term_json(t));
    return {{"degree", r.degree},
            {"curve_degree", r.curve_degree},
            {"lhs", r.lhs},
            {"gsv_sum", r.gsv_sum},
            {"terms", terms},
            {"holds", r.holds}};
}

json poincare_json(const PoincareReport& r) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back(curve_term_json(t));
    return {{"degree", r.degree},
            {"curve_degree", r.curve_degree},
            {"terms", terms},
            {"correction_sum", r.correction_sum},
            {"rhs", rational_str(r.rhs)},
            {"bound_holds", r.bound_holds},
            {"generalized_curves", r.generalized_curves},
            {"equality", r.equality}};
}

json pencil_json(const PencilDegree& r) {
    return {{"alpha1", r.alpha1.str()},
            {"beta1", r.beta1.str()},
            {"N", r.N},
            {"radicand", r.radicand},
            {"d0_radicand", r.d0_radicand},
            {"d0_norms", r.d0_norms},
            {"agree", r.agree()}};
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_flat(const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& e) { return !e.is_object() && !e.is_array(); });
}

void render(const json& j, int indent, std::ostringstream& os) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const json& v = it.value();
            if (v.is_object() || (v.is_array() && !is_flat(v))) {
                os << pad << it.key() << ":\n";
                render(v, indent + 2, os);
            } else if (v.is_array()) {
                os << pad << it.key() << ": [";
                for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
                os << "]\n";
            } else {
                os << pad << it.key() << ": " << scalar_text(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object()) {
                std::ostringstream inner;
                render(e, indent + 2, inner);
                std::string s = inner.str();
                s.replace(indent, 2, "- ");
                os << s;
            } else {
                os << pad << "- " << scalar_text(e) << "\n";
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

}  // namespace

std::string render_text(const json& j) {
    std::ostringstream os;
    render(j, 0, os);
    return os.str();
}

// ---- commands

namespace {

struct Options {
    std::string command;
    std::string input;
    std::string file;
    std::vector<std::string> curves;
    int trunc = 0;
    int max_blowups = 64;
    std::uint64_t seed = 0;
    bool text = false;
    std::string chart = "z";
    std::string num = "2", den = "1";
    int radial = 0;
};

ProjChart chart_of(const std::string& s) {
    if (s == "x") return ProjChart::X;
    if (s == "y") return ProjChart::Y;
    return ProjChart::Z;
}

EisensteinInt eisenstein_of(const std::string& s) {
    // "a" or "a,b" for a + b j
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return EisensteinInt(std::stoll(s));
        return EisensteinInt(std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1)));
    } catch (const std::exception&) {
        throw SyntaxError("expected an Eisenstein integer as a or a,b", 1, 1);
    }
}

struct Context {
    Options o;
    OneForm form;
    std::vector<BivariatePoly> curves;
    PolarOptions polar() const { return PolarOptions{o.seed}; }
    ReductionTree tree() const {
        ReduceOptions r;
        r.max_blowups = o.max_blowups;
        r.trunc = o.trunc;
        return reduce(form, r);
    }
    CurveSelection selection() const {
        CurveSelection s;
        s.curves = curves;
        s.all_zeros = curves.empty();
        return s;
    }
    int display_trunc(const ReductionTree& t) const {
        if (o.trunc > 0) return o.trunc;
        int deg = std::max(form.a().degree(), form.b().degree());
        return initial_truncation(deg + t.length());
    }
};

json cmd_reduce(const Context& c) {
    ReductionTree t = c.tree();
    return {{"tree", tree_json(t)}};
}

json cmd_invariants(const Context& c) {
    ReductionTree t = c.tree();
    IntersectionValue mu = milnor(c.form);
    int tau = tangency_excess(t);
    json j{{"multiplicity", c.form.multiplicity()},
           {"milnor", mu.infinite ? json("infinite") : json(mu.value)},
           {"class", class_json(t.node(0).cls)},
           {"dicritical_first_blowup", is_dicritical_first_blowup(c.form)},
           {"length", t.length()},
           {"tangency_excess", tau},
           {"second_type", is_second_type(t)},
           {"generalized_curve", is_generalized_curve_tree(t)}};
    CurveSelection all;
    all.all_zeros = true;
    with_instance(t, all, [&](const LocalInstance& in) {
        auto pure = pure_valuations(t, in.f);
        auto val = divisor_valuations(t, in.f, in.trunc);
        int nu_bal = in.f.multiplicity();
        j["balanced_multiplicity"] = nu_bal;
        j["pure_multiplicity"] = pure_multiplicity(in.f);
        j["equation_multiplicity_check"] = {{"multiplicity", c.form.multiplicity()},
                                            {"balanced_minus_one_plus_tau", nu_bal - 1 + tau},
                                            {"holds", c.form.multiplicity() == nu_bal - 1 + tau}};
        json comps = json::array();
        for (const auto& D : t.components()) {
            int nb = val.at(D.id), ns = pure.at(D.id);
            comps.push_back({{"id", D.id},
                             {"dicritical", D.dicritical},
                             {"rho", D.rho},
                             {"valence", D.valence()},
                             {"nu_D_form", D.nu_D},
                             {"nu_D_balanced", nb},
                             {"nu_star_D", ns},
                             {"valuation_check", nb == ns + D.epsilon() && nb > 0}});
        }
        j["components"] = comps;
        return 0;
    });
    return j;
}

json cmd_separatrices(const Context& c) {
    ReductionTree t = c.tree();
    int trunc = c.display_trunc(t);
    json iso = json::array();
    for (const auto& s : separatrices(t, trunc)) {
        json b = branch_json(s.branch);
        b["attachment"] = s.at.str();
        iso.push_back(b);
    }
    json dic = json::array();
    for (const auto& D : t.components()) {
        if (!D.dicritical) continue;
        json b = branch_json(curvette(t, D.id, trunc));
        dic.push_back({{"component", D.id}, {"valence", D.valence()}, {"rho", D.rho}, {"sample_curvet", b}});
    }
    return {{"isolated", iso}, {"dicritical_components", dic}, {"finite", dic.empty()}};
}

json cmd_balanced(const Context& c) {
    ReductionTree t = c.tree();
    return with_instance(t, c.selection(), [&](const LocalInstance& in) {
        json j = divisor_json(t, in.f);
        j["truncation"] = in.trunc;
        return j;
    });
}

json cmd_var(const Context& c) {
    ReductionTree t = c.tree();
    PolarOptions po = c.polar();
    return with_instance(t, c.selection(), [&](const LocalInstance& in) {
        json per = json::array();
        int total = 0;
        for (int k : in.c) {
            int v = var_branch(c.form, in.f, k, po);
            total += v;
            json b = branch_json(in.f.items[k].branch);
            b["polar_foliation"] = polar_intersection(c.form, in.f.items[k].branch, po);
            b["polar_differential"] = polar_of_divisor(in.f, k, po);
            b["var"] = v;
            per.push_back(b);
        }
        return json{{"branches", per}, {"var", total}, {"var_rel", var_rel_set(c.form, in.f, in.c, po)}};
    });
}

json cmd_gsv(const Context& c) {
    ReductionTree t = c.tree();
    CurveSelection s = c.selection();
    int d = gsv_direct(c.form, t, s, c.polar()), b = gsv_polar(c.form, t, s, c.polar());
    return {{"gsv", d}, {"gsv_direct", d}, {"gsv_polar", b}, {"agree", d == b}};
}

json cmd_generalized_curve(const Context& c) {
    ReductionTree t = c.tree();
    bool p = is_generalized_curve_polar(c.form, t, c.polar()), r = is_generalized_curve_tree(t);
    return {{"generalized_curve", p}, {"by_polar_excess", p}, {"by_reduction", r}, {"agree", p == r}};
}

json cmd_second_type(const Context& c) {
    ReductionTree t = c.tree();
    return {{"second_type", is_second_type(t)}, {"tangency_excess", tangency_excess(t)}};
}

ProjectiveFoliation projective(const Context& c) { return ProjectiveFoliation::from_affine(c.form, chart_of(c.o.chart)); }

InvariantCurve single_curve(const Context& c) {
    if (c.curves.size() != 1) throw CLI::ValidationError("--curve", "exactly one invariant curve is required");
    return InvariantCurve::from_affine(c.curves.front(), chart_of(c.o.chart));
}

json cmd_poincare(const Context& c) {
    ProjectiveFoliation F = projective(c);
    return poincare_json(poincare_bound(F, single_curve(c), c.polar()));
}

json cmd_brunella(const Context& c) {
    ProjectiveFoliation F = projective(c);
    return brunella_json(brunella_identity(F, single_curve(c), c.polar()));
}

json cmd_bezout(const Context& c) {
    ProjectiveFoliation F = projective(c);
    json j = bezout_json(bezout_check(F, c.o.seed));
    j["degree_check"] = degree_json(degree_of(F, c.o.seed));
    return j;
}

json cmd_linsneto(const Context& c) {
    json j{{"pencil", pencil_json(pencil_degree(eisenstein_of(c.o.num), eisenstein_of(c.o.den)))}};
    if (c.o.radial > 0) {
        RadialCheck r = radial_local_terms_engine(c.o.radial);
        j["radial"] = {{"N", c.o.radial},
                       {"closed_form", r.closed_form},
                       {"engine", r.engine},
                       {"to_poles", r.to_poles},
                       {"to_zeros_outside", r.to_rest},
                       {"agree", r.closed_form == r.engine}};
    }
    return j;
}

using Handler = json (*)(const Context&);

struct Command {
    const char* name;
    const char* help;
    Handler run;
    bool needs_form;
};

const Command kCommands[] = {
    {"reduce", "reduction of singularities", cmd_reduce, true},
    {"invariants", "multiplicities, Milnor number, valuations", cmd_invariants, true},
    {"separatrices", "isolated separatrices and curvet families", cmd_separatrices, true},
    {"balanced", "balanced equation of separatrices (adapted to --curve)", cmd_balanced, true},
    {"var", "polar excess of the selected separatrices", cmd_var, true},
    {"gsv", "GSV index by two routes", cmd_gsv, true},
    {"generalized-curve", "generalized curve test", cmd_generalized_curve, true},
    {"second-type", "second type test", cmd_second_type, true},
    {"poincare", "degree bound for an invariant curve", cmd_poincare, true},
    {"bezout", "singular locus and Milnor sum", cmd_bezout, true},
    {"brunella", "GSV sum over an invariant curve", cmd_brunella, true},
    {"linsneto", "pencil degree arithmetic", cmd_linsneto, false},
};

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void emit(const json& report, bool text, std::ostream& out) {
    if (text) out << render_text(report);
    else out << report.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of plane foliation germs and projective foliations", "folpol"};
    app.require_subcommand(1);
    Options o;
    for (const auto& cmd : kCommands) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        if (cmd.needs_form) {
            sub->add_option("form", o.input, "1-form such as \"x dy - y dx\"; - reads stdin");
            sub->add_option("--file", o.file, "read the form from a file");
            sub->add_option("--curve", o.curves, "curve polynomial (repeatable)")->allow_extra_args(false);
            sub->add_option("--trunc", o.trunc, "truncation for printed series and classification")->check(CLI::NonNegativeNumber);
            sub->add_option("--max-blowups", o.max_blowups, "blow-up ceiling")->check(CLI::PositiveNumber);
            sub->add_option("--chart", o.chart, "affine chart of the input")->check(CLI::IsMember({"z", "x", "y"}));
        } else {
            sub->add_option("--num", o.num, "numerator a or a,b meaning a + b j");
            sub->add_option("--den", o.den, "denominator a or a,b meaning a + b j");
            sub->add_option("--radial", o.radial, "also check N lines through a radial point")->check(CLI::NonNegativeNumber);
        }
        sub->add_option("--seed", o.seed, "seed for sampled directions and lines");
        auto* j = sub->add_flag("--json", "JSON output (default)");
        sub->add_flag("--text", o.text, "text output")->excludes(j);
        sub->callback([&o, name = cmd.name] { o.command = name; });
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os, es;
        int code = app.exit(e, os, es);
        out << os.str();
        err << es.str();
        return code == 0 ? 0 : 2;
    }
    const Command* cmd = nullptr;
    for (const auto& c : kCommands)
        if (o.command == c.name) cmd = &c;
    json report{{"schema", kSchema}, {"command", o.command}};
    try {
        Context ctx;
        ctx.o = o;
        if (cmd->needs_form) {
            std::string text = o.input;
            if (!o.file.empty()) {
                std::ifstream f(o.file);
                if (!f) {
                    err << "cannot read " << o.file << "\n";
                    return 2;
                }
                text = read_all(f);
            } else if (text == "-") {
                text = read_all(in);
            }
            if (text.empty()) {
                err << "missing form\n";
                return 2;
            }
            ctx.form = parse_form(text);
            for (const auto& s : o.curves) ctx.curves.push_back(parse_poly(s));
            report["input"] = {{"form", ctx.form.str()}, {"chart", o.chart}};
            if (!ctx.curves.empty()) {
                json cs = json::array();
                for (const auto& s : ctx.curves) cs.push_back(s.str());
                report["input"]["curves"] = cs;
            }
        }
        report["result"] = cmd->run(ctx);
    } catch (const SyntaxError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        report["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        emit(report, o.text, out);
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        report["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
        emit(report, o.text, out);
        err << e.what() << "\n";
        return 1;
    }
    emit(report, o.text, out);
    return 0;
}

}  // namespace folpol::cli
