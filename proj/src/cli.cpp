#include "fibcones/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibcones/blowver.hpp"
#include "fibcones/effcones.hpp"

namespace fibcones {

namespace {

using json = nlohmann::ordered_json;

// ---- input ----------------------------------------------------------------

int get_int(const nlohmann::json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
    if (!it->is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
    const auto v = it->get<long long>();
    if (v < -1000000 || v > 1000000) throw ParseError(where + "." + key + ": value out of range");
    return static_cast<int>(v);
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<std::string_view> known,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (auto k : known) ok = ok || key == k;
        if (!ok) throw ParseError(where + ": unknown field \"" + key + "\"");
    }
}

BundleData parse_bundle(const nlohmann::json& obj, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown(obj, {"rank", "degree", "hn"}, where);
    BundleData e;
    e.rank = get_int(obj, "rank", where);
    e.degree = get_int(obj, "degree", where);
    if (auto it = obj.find("hn"); it != obj.end() && !it->is_null()) {
        if (!it->is_array()) throw ParseError(where + ".hn: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string at = where + ".hn[" + std::to_string(i) + "]";
            const auto& q = (*it)[i];
            if (!q.is_object()) throw ParseError(at + ": expected an object");
            reject_unknown(q, {"rank", "degree"}, at);
            e.hn.push_back({get_int(q, "rank", at), get_int(q, "degree", at)});
        }
    }
    return e;
}

// ---- rendering --------------------------------------------------------------

json rat(const Rational& q) { return to_string(q); }

json vec_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat(x));
    return a;
}

json matrix_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r)));
    return a;
}

std::string matrix_text(const Matrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) s += "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? ", " : "") + to_string(m(r, c));
    }
    return s + "]";
}

json bundle_json(const BundleData& e) {
    json hn = json::array();
    for (const auto& q : e.hn) hn.push_back({{"rank", q.rank}, {"degree", q.degree}});
    return {{"rank", e.rank}, {"degree", e.degree}, {"hn", hn}};
}

json space_json(const ProductSpace& s) {
    return {{"E1", bundle_json(s.original(Factor::First))},
            {"E2", bundle_json(s.original(Factor::Second))},
            {"dimension", s.dimension()}};
}

json classes_json(const ProductSpace& s, const std::vector<CycleClass>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(s.format(c));
    return a;
}

json report_json(const IdentityReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"passed", c.passed}});
    json out = {{"checks", checks}};
    if (!rep.notes.empty()) out["notes"] = rep.notes;
    out["all_passed"] = rep.all_passed();
    return out;
}

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (!is_scalar(x)) return false;
    return true;
}

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_array(const json& j) {
    std::string s = "[";
    bool first = true;
    for (const auto& x : j) {
        if (!first) s += ", ";
        s += scalar_text(x);
        first = false;
    }
    return s + "]";
}

void render(std::ostream& os, const json& j, int indent);

void render_entry(std::ostream& os, const std::string& head, const json& v, int child_indent) {
    if (is_scalar(v))
        os << head << ' ' << scalar_text(v) << '\n';
    else if (is_flat(v))
        os << head << ' ' << inline_array(v) << '\n';
    else if (v.empty())
        os << head << " {}\n";
    else {
        os << head << '\n';
        render(os, v, child_indent);
    }
}

// Indented key/value text; arrays of objects become "- " items.
void render(std::ostream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_entry(os, pad + k + ":", v, indent + 2);
        return;
    }
    for (const auto& el : j) {
        if (el.is_object() && !el.empty()) {
            bool first = true;
            for (const auto& [k, v] : el.items()) {
                render_entry(os, pad + (first ? "- " : "  ") + k + ":", v, indent + 4);
                first = false;
            }
        } else if (is_scalar(el)) {
            os << pad << "- " << scalar_text(el) << '\n';
        } else if (is_flat(el)) {
            os << pad << "- " << inline_array(el) << '\n';
        } else {
            os << pad << "-\n";
            render(os, el, indent + 2);
        }
    }
}

// ---- commands ---------------------------------------------------------------

struct Outcome {
    json result;
    bool passed = true;
};

Outcome cmd_relations(const ProductSpace& s) {
    const IdentityReport rep = verify_relations(s);
    return {report_json(rep), rep.all_passed()};
}

Outcome cmd_basis(const ProductSpace& s, int k) {
    const auto basis = nk_basis(s, k);
    const auto sep = separating_classes(s, k);
    const Matrix m = pairing_matrix(s, basis, sep);
    json r = {{"codim", k},
              {"dimension", basis.size()},
              {"basis", classes_json(s, basis)},
              {"separating_classes", classes_json(s, sep)},
              {"pairing", matrix_json(m)},
              {"pairing_is_identity", m.is_identity()}};
    return {r, m.is_identity()};
}

Outcome cmd_pairing(const ProductSpace& s, int k) {
    if (k < 0 || k > s.dimension())
        throw Error(ErrorKind::OutOfRange, "codimension " + std::to_string(k) + " outside 0.." +
                                               std::to_string(s.dimension()));
    const auto rows = nk_basis(s, k);
    const auto cols = nk_basis(s, s.dimension() - k);
    json r = {{"codim", k},
              {"rows", classes_json(s, rows)},
              {"columns", classes_json(s, cols)},
              {"matrix", matrix_json(pairing_matrix(s, rows, cols))}};
    return {r, true};
}

json eff_json(const EffConeResult& res) {
    const ProductSpace& s = *res.space;
    json gens = json::array();
    for (const auto& g : res.generators) {
        const Vector v = basis_coordinates(s, g, res.codim);
        gens.push_back({{"class", s.format(g)}, {"coordinates", vec_json(v)}, {"extremal", res.cone.is_extremal(v)}});
    }
    json r = {{"codim", res.codim},
              {"cycle_dimension", res.cycle_dim()},
              {"provenance", std::string(provenance_name(res.provenance))},
              {"basis", classes_json(s, nk_basis(s, res.codim))},
              {"generators", gens}};
    if (!res.sub_results.empty()) {
        json subs = json::array();
        for (const auto& sub : res.sub_results) {
            json j = {{"space", space_json(*sub.space)}};
            j.update(eff_json(sub));
            subs.push_back(j);
        }
        r["sub_results"] = subs;
    }
    return r;
}

Outcome cmd_eff(const ProductSpace& s, int k) { return {eff_json(eff_cone(s, k)), true}; }

Outcome cmd_nef(const ProductSpace& s, int k) {
    const Cone c = nef_cone(s, k);
    json gens = json::array();
    for (const auto& g : c.generators())
        gens.push_back({{"class", s.format(from_basis_coordinates(s, g, k))}, {"coordinates", vec_json(g)}});
    json ineq = json::array();
    for (const auto& a : c.facets().inequalities) ineq.push_back(vec_json(a));
    json eq = json::array();
    for (const auto& e : c.facets().equalities) eq.push_back(vec_json(e));
    json r = {{"codim", k},
              {"basis", classes_json(s, nk_basis(s, k))},
              {"generators", gens},
              {"inequalities", ineq},
              {"equalities", eq}};
    return {r, true};
}

Outcome cmd_verify_blowup(const ProductSpace& s, Factor f) {
    const BlowupModel m = build_blowup_model(s, f);
    const IdentityReport rep = verify_exceptional_vanishing(m);
    json r = {{"factor", m.bundle_label},
              {"n11", m.n11},
              {"d11", m.d11},
              {"mu11", rat(m.mu11())},
              {"zprime", space_json(*m.zprime)},
              {"dimension", m.dimension()},
              {"c1", m.tower.format(m.c1())},
              {"c2", m.tower.format(m.c2())},
              {"exceptional", m.tower.format(m.exceptional())}};
    r.update(report_json(rep));
    return {r, rep.all_passed()};
}

void add_check(IdentityReport& rep, std::string name, std::string lhs, std::string rhs, bool passed) {
    rep.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), passed});
}

IdentityReport verify_bases(const ProductSpace& s) {
    IdentityReport rep;
    const auto d = dual_one_cycle_basis(s);
    const Matrix dm = pairing_matrix(s, {d.begin(), d.end()}, {s.zeta1(), s.zeta2(), s.fiber()});
    add_check(rep, "dual one-cycles against (" + s.format(s.zeta1()) + ", " + s.format(s.zeta2()) + ", F)",
              dm.is_identity() ? "identity" : matrix_text(dm), "identity", dm.is_identity());
    for (int k = 0; k <= s.dimension(); ++k) {
        const Matrix m = pairing_matrix(s, nk_basis(s, k), separating_classes(s, k));
        add_check(rep, "N^" + std::to_string(k) + " basis against separating classes",
                  m.is_identity() ? "identity" : matrix_text(m), "identity", m.is_identity());
    }
    return rep;
}

IdentityReport verify_semistable(const ProductSpace& s) {
    IdentityReport rep;
    for (int k = 1; k < s.dimension(); ++k) {
        const EffConeResult r = semistable_eff_generators(s, k);
        const Matrix m = pairing_matrix(s, r.generators, extremality_certificates(s, k));
        const std::string at = "codim " + std::to_string(k) + ": ";
        add_check(rep, at + "generators against certificates", m.is_identity() ? "identity" : matrix_text(m),
                  "identity", m.is_identity());
        const std::size_t n = nk_basis_monomials(s, k).size();
        add_check(rep, at + "generator count", std::to_string(r.generators.size()), std::to_string(n),
                  r.generators.size() == n);
        std::size_t extremal = 0;
        for (const auto& v : r.cone.generators()) extremal += r.cone.is_extremal(v) ? 1 : 0;
        add_check(rep, at + "extremal generators", std::to_string(extremal), std::to_string(r.generators.size()),
                  extremal == r.generators.size());
    }
    return rep;
}

IdentityReport verify_low_dim(const ProductSpace& s) {
    IdentityReport rep;
    const int nn = *s.low_dim_bound();
    for (int kd = 1; kd <= nn; ++kd) {
        const auto above = boundary_vanishing_products(s, kd, 1);
        const auto top = boundary_vanishing_products(s, kd, 0);
        for (std::size_t i = 0; i < above.size(); ++i) {
            const std::string at = "dim " + std::to_string(kd) + ", phi_" + std::to_string(i) + ": ";
            add_check(rep, at + "boundary product", s.format(above[i]), "0", above[i].is_zero());
            const Rational deg = s.degree(top[i]);
            add_check(rep, at + "degree against the complementary nef product", to_string(deg), "0", deg == 0);
        }
    }
    return rep;
}

IdentityReport verify_blowups(const ProductSpace& s) {
    IdentityReport rep;
    for (Factor f : {Factor::First, Factor::Second}) {
        if (s.original(f).semistable()) continue;
        const BlowupModel m = build_blowup_model(s, f);
        const IdentityReport sub = verify_exceptional_vanishing(m);
        for (const auto& c : sub.checks) rep.checks.push_back({m.bundle_label + ": " + c.name, c.lhs, c.rhs, c.passed});
        for (const auto& n : sub.notes) rep.notes.push_back(m.bundle_label + ": " + n);
    }
    return rep;
}

IdentityReport verify_transport(const ProductSpace& s) {
    IdentityReport rep;
    const ProductSpace z = truncated_space(s);
    const int bound = s.dimension() - *s.low_dim_bound();
    for (int k = 1; k < bound; ++k) {
        const std::string at = "codim " + std::to_string(k) + ": ";
        Matrix theta;
        try {
            theta = theta_map(s, z, k);
        } catch (const Error& e) {
            rep.notes.push_back(at + "no monomial transport (" + e.what() + ")");
            continue;
        }
        add_check(rep, at + "theta is a permutation", theta.is_permutation() ? "permutation" : matrix_text(theta),
                  "permutation", theta.is_permutation());
        if (!z.semistable()) {
            rep.notes.push_back(at + "truncated pair is not semistable; no direct construction to compare");
            continue;
        }
        try {
            const EffConeResult moved = eff_cone(s, k);
            const auto direct =
                slope_twisted_generators(s, k, s.e1().truncated().slope(), s.e2().truncated().slope());
            std::vector<Vector> coords;
            for (const auto& g : direct) coords.push_back(basis_coordinates(s, g, k));
            const Cone dc = Cone::from_generators(moved.cone.ambient_dim(), coords);
            const bool eq = cones_equal(moved.cone, dc);
            add_check(rep, at + "transported cone equals the direct construction", eq ? "equal" : "different",
                      "equal", eq);
        } catch (const Error& e) {
            rep.notes.push_back(at + e.what());
        }
    }
    return rep;
}

Outcome cmd_verify(const ProductSpace& s) {
    json sections;
    bool ok = true;
    auto add = [&](const char* name, const IdentityReport& rep) {
        sections[name] = report_json(rep);
        ok = ok && rep.all_passed();
    };
    add("relations", verify_relations(s));
    add("bases", verify_bases(s));
    IdentityReport scope;
    if (s.semistable()) {
        add("semistable_cones", verify_semistable(s));
    } else if (s.unstable()) {
        add("low_dimension_cones", verify_low_dim(s));
        add("blowup", verify_blowups(s));
        add("transport", verify_transport(s));
    } else {
        add("blowup", verify_blowups(s));
        scope.notes.push_back("exactly one bundle is semistable; cone checks skipped");
    }
    json r = {{"sections", sections}};
    if (!scope.notes.empty()) r["notes"] = scope.notes;
    r["all_passed"] = ok;
    return {r, ok};
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

InputSpec parse_input(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("input: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("input: expected an object with fields \"E1\" and \"E2\"");
    reject_unknown(doc, {"E1", "E2"}, "input");
    InputSpec spec;
    for (const char* key : {"E1", "E2"}) {
        auto it = doc.find(key);
        if (it == doc.end()) throw ParseError(std::string("input: missing field \"") + key + "\"");
        (key[1] == '1' ? spec.e1 : spec.e2) = parse_bundle(*it, key);
    }
    return spec;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MixedStabilityUnsupported:
        case ErrorKind::BasisMismatch:
        case ErrorKind::NotUnstable:
        case ErrorKind::NotSemistable: return kExitUnsupported;
        default: return kExitValidation;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Intersection ring and cones of cycles of P(E1) x_C P(E2)", "fibcones"};
    std::string input_file;
    std::string format = "text";
    bool quiet = false;
    app.add_option("--input", input_file, "Input JSON document (default: standard input)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--quiet,-q", quiet, "Print nothing on success");
    app.require_subcommand(1);
    app.fallthrough();

    int codim = 0;
    std::optional<int> eff_codim, eff_dim;
    int factor = 1;
    auto* relations = app.add_subcommand("relations", "Check the relations of the ring");
    auto* basis = app.add_subcommand("basis", "Basis of N^k and its separating classes");
    basis->add_option("--codim", codim)->required();
    auto* pairing = app.add_subcommand("pairing", "Intersection pairing N^k x N^(dim-k)");
    pairing->add_option("--codim", codim)->required();
    auto* eff = app.add_subcommand("eff", "Generators of the pseudo-effective cone");
    auto* eff_c = eff->add_option("--codim", eff_codim);
    auto* eff_d = eff->add_option("--dim", eff_dim, "Cycle dimension instead of codimension");
    eff_c->excludes(eff_d);
    eff->require_option(1);
    auto* nef = app.add_subcommand("nef", "Generators and facets of the nef cone");
    nef->add_option("--codim", codim)->required();
    auto* blowup = app.add_subcommand("verify-blowup", "Identities of the blow-up model");
    blowup->add_option("--factor", factor, "Which bundle to blow up (1 or 2)")->check(CLI::Range(1, 2));
    auto* verify = app.add_subcommand("verify", "Run every applicable identity check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        std::string text;
        if (input_file.empty()) {
            text = read_all(in);
        } else {
            std::ifstream f(input_file);
            if (!f) throw ParseError("cannot read " + input_file);
            text = read_all(f);
        }
        const InputSpec spec = parse_input(text);
        for (const auto& [name, e] : {std::pair{"E1", &spec.e1}, std::pair{"E2", &spec.e2}}) {
            try {
                validate(*e);
            } catch (const Error& ex) {
                throw Error(ex.kind(), std::string(name) + ": " + ex.detail());
            }
        }
        const ProductSpace space = build_space(spec.e1, spec.e2);

        json command;
        Outcome outcome;
        if (relations->parsed()) {
            command = {{"name", "relations"}};
            outcome = cmd_relations(space);
        } else if (basis->parsed()) {
            command = {{"name", "basis"}, {"codim", codim}};
            outcome = cmd_basis(space, codim);
        } else if (pairing->parsed()) {
            command = {{"name", "pairing"}, {"codim", codim}};
            outcome = cmd_pairing(space, codim);
        } else if (eff->parsed()) {
            const int k = eff_codim ? *eff_codim : space.dimension() - *eff_dim;
            command = {{"name", "eff"}};
            if (eff_codim)
                command["codim"] = *eff_codim;
            else
                command["dim"] = *eff_dim;
            outcome = cmd_eff(space, k);
        } else if (nef->parsed()) {
            command = {{"name", "nef"}, {"codim", codim}};
            outcome = cmd_nef(space, codim);
        } else if (blowup->parsed()) {
            command = {{"name", "verify-blowup"}, {"factor", factor}};
            outcome = cmd_verify_blowup(space, factor == 1 ? Factor::First : Factor::Second);
        } else if (verify->parsed()) {
            command = {{"name", "verify"}};
            outcome = cmd_verify(space);
        }

        if (!quiet) {
            json report = {{"command", command},
                           {"input", {{"E1", bundle_json(spec.e1)}, {"E2", bundle_json(spec.e2)}}},
                           {"result", outcome.result}};
            if (format == "json")
                out << report.dump(2) << '\n';
            else
                render(out, report, 0);
        }
        if (!outcome.passed) {
            err << "error: identity check failed\n";
            return kExitIdentityFailure;
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace fibcones
