#include "leibniz/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "leibniz/io.hpp"

namespace leibniz {

using nlohmann::json;

namespace {

std::string hex_seed(std::uint64_t seed) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(seed));
    return buf;
}

std::string series_line(const SeriesResult& s, const char* sym_open, const char* sym_close) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        if (i) os << ", ";
        os << "L" << sym_open << (i + 1) << sym_close << " = " << s.terms[i].to_basis_string();
    }
    return os.str();
}

}  // namespace

// ---------------------------------------------------------- theorem report

TheoremReport theorem_report(const std::vector<CorpusItem>& corpus, std::size_t samples, std::uint64_t seed) {
    TheoremReport rep;
    json rows = json::array();
    std::string digest_input;
    bool all = true;
    const XSelection basis = XSelection::basis();
    const XSelection sampled = XSelection::sampled(samples, seed);
    for (const auto& item : corpus) {
        const LeibnizAlgebra& L = item.algebra;
        digest_input += export_algebra(L.table(), item.name + "[" + item.alpha_label + "]");
        json row{{"name", item.name}, {"alpha", item.alpha_label}, {"dim", L.dim()}};
        const auto leibniz_witness = validate_leibniz(L.table());
        row["leibniz"] = !leibniz_witness.has_value();
        bool ok = !leibniz_witness;
        if (leibniz_witness) {
            row["leibniz_witness"] = {{"i", leibniz_witness->i + 1},
                                      {"j", leibniz_witness->j + 1},
                                      {"k", leibniz_witness->k + 1},
                                      {"lhs", to_json(leibniz_witness->lhs)},
                                      {"rhs", to_json(leibniz_witness->rhs)}};
        }
        const SeriesResult lcs = lower_central_series(L);
        const bool nilpotent = lcs.verdict == SeriesVerdict::nilpotent;
        row["nilpotent"] = nilpotent;
        row["nilpotency_class"] = lcs.steps;
        const ClVerdict vb = is_cl(L, basis);
        const ClVerdict vs = is_cl(L, sampled);
        row["cl_basis"] = to_json(vb);
        row["cl_sampled"] = to_json(vs);
        ok = ok && nilpotent && vb.pass && vs.pass;
        row["pass"] = ok;
        all = all && ok;
        rows.push_back(std::move(row));
    }
    rep.pass = all && !corpus.empty();
    rep.document = {{"tool", kToolName},
                    {"version", kToolVersion},
                    {"command", "theorem-report"},
                    {"input_digest", sha256_hex(digest_input)},
                    {"corpus_size", corpus.size()},
                    {"selections", {{"basis", "basis"}, {"sampled", {{"count", samples}, {"seed", hex_seed(seed)}}}}},
                    {"claim", "every nilpotent Leibniz algebra of dimension <= 4 is a CL-algebra "
                              "(verified on the recorded selections)"},
                    {"rows", rows},
                    {"pass", rep.pass}};
    return rep;
}

std::string render_theorem_report(const json& report) {
    std::ostringstream os;
    os << "CL verification of nilpotent Leibniz algebras of dimension <= 4\n";
    os << "sampled selection: " << report["selections"]["sampled"]["count"].get<std::size_t>()
       << " vectors, seed " << report["selections"]["sampled"]["seed"].get<std::string>() << "\n\n";
    os << std::left << std::setw(12) << "entry" << std::setw(10) << "alpha" << std::setw(9) << "leibniz"
       << std::setw(8) << "class" << std::setw(10) << "CL basis" << std::setw(12) << "CL sampled"
       << "result\n";
    for (const auto& row : report["rows"]) {
        const bool nil = row["nilpotent"].get<bool>();
        os << std::left << std::setw(12) << row["name"].get<std::string>() << std::setw(10)
           << row["alpha"].get<std::string>() << std::setw(9) << (row["leibniz"].get<bool>() ? "yes" : "NO")
           << std::setw(8) << (nil ? std::to_string(row["nilpotency_class"].get<std::size_t>()) : "none")
           << std::setw(10) << (row["cl_basis"]["pass"].get<bool>() ? "pass" : "FAIL") << std::setw(12)
           << (row["cl_sampled"]["pass"].get<bool>() ? "pass" : "FAIL") << (row["pass"].get<bool>() ? "ok" : "FAILED")
           << "\n";
        for (const char* key : {"cl_basis", "cl_sampled"})
            if (row[key].contains("witness")) {
                const auto& w = row[key]["witness"];
                os << "    witness (" << key << "): condition " << w["condition"].get<int>() << ", x = "
                   << w["x"].dump() << ", a = " << w["a"].dump() << ", y = " << w["y"].dump()
                   << ", value = " << w["value"].dump() << "\n";
            }
        if (row.contains("leibniz_witness")) {
            const auto& w = row["leibniz_witness"];
            os << "    Leibniz identity fails on (e" << w["i"].get<std::size_t>() << ", e" << w["j"].get<std::size_t>()
               << ", e" << w["k"].get<std::size_t>() << ")\n";
        }
    }
    os << "\n" << report["rows"].size() << " entries, overall: " << (report["pass"].get<bool>() ? "PASS" : "FAIL")
       << "\n";
    return os.str();
}

// ----------------------------------------------------------------- dispatch

namespace {

struct Options {
    std::string catalog;
    std::string file;
    std::string alpha;
    std::string mode = "basis";
    std::size_t samples = kTheoremSamples;
    std::string seed;
    std::string out;
    std::string format = "human";
    std::string element;
    std::string kind = "two_sided";
    std::string flavor = "two_sided";
    std::string action;
};

class UsageError : public Error {
public:
    using Error::Error;
};

struct Loaded {
    std::string name;
    std::string digest;
    LeibnizAlgebra algebra;
    const CatalogEntry* entry = nullptr;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t parse_seed(const std::string& s) {
    if (s.empty()) return kDefaultSeed;
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(s, &used, 16);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("--seed expects a hexadecimal value, got '" + s + "'");
    }
}

/// Loads the algebra named by --catalog or --file. With `validate` false the
/// Leibniz identity is not enforced (the validate command reports it instead).
Loaded load(const Options& o, bool validate = true) {
    if (o.catalog.empty() == o.file.empty()) throw UsageError("exactly one of --catalog or --file is required");
    Loaded l;
    if (!o.catalog.empty()) {
        const CatalogEntry& e = catalog_entry(o.catalog);
        std::optional<Rational> alpha;
        if (!o.alpha.empty()) {
            if (!e.parametric) throw UsageError(e.name + " has no parameter");
            alpha = Rational::from_string(o.alpha);
        }
        StructureTable t = build_table(e, alpha);
        l.name = e.name + (alpha ? "(a=" + alpha->to_string() + ")" : "");
        l.digest = sha256_hex(export_algebra(t, e.name));
        l.algebra = validate ? LeibnizAlgebra::from_table(std::move(t)) : LeibnizAlgebra::unchecked(std::move(t));
        l.entry = &e;
    } else {
        const std::string text = read_file(o.file);
        if (!o.alpha.empty()) throw UsageError("--alpha applies to catalog entries only");
        AlgebraDocument doc = parse_algebra_document(text);
        l.name = doc.name;
        l.digest = sha256_hex(text);
        l.algebra =
            validate ? LeibnizAlgebra::from_table(std::move(doc.table)) : LeibnizAlgebra::unchecked(std::move(doc.table));
    }
    return l;
}

XSelection selection(const Options& o) {
    if (o.mode == "basis") return XSelection::basis();
    if (o.mode == "pairs") return XSelection::basis_plus_pairs();
    if (o.mode == "sample") {
        if (o.samples == 0) throw UsageError("--samples must be at least 1");
        return XSelection::sampled(o.samples, parse_seed(o.seed));
    }
    throw UsageError("--mode must be basis, pairs or sample");
}

ClFlavor flavor(const Options& o) {
    if (o.flavor == "left") return ClFlavor::left;
    if (o.flavor == "right") return ClFlavor::right;
    if (o.flavor == "two_sided") return ClFlavor::two_sided;
    throw UsageError("--flavor must be left, right or two_sided");
}

json header(const std::string& command, const Loaded& l) {
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"command", command},
            {"input", {{"name", l.name}, {"digest", l.digest}, {"dim", l.algebra.dim()}}}};
}

struct Outcome {
    json report;
    std::string human;
    int code = kExitPass;
};

Outcome run_validate(const Options& o) {
    Loaded l = load(o, false);
    Outcome r;
    r.report = header("validate", l);
    const auto w = validate_leibniz(l.algebra.table());
    r.report["pass"] = !w;
    std::ostringstream os;
    if (!w) {
        os << l.name << ": Leibniz identity holds on all basis triples\n";
    } else {
        r.code = kExitFail;
        r.report["witness"] = {
            {"i", w->i + 1}, {"j", w->j + 1}, {"k", w->k + 1}, {"lhs", to_json(w->lhs)}, {"rhs", to_json(w->rhs)}};
        os << l.name << ": Leibniz identity FAILS on (e" << w->i + 1 << ", e" << w->j + 1 << ", e" << w->k + 1
           << "): [x,[y,z]] = " << w->lhs.to_string() << ", [[x,y],z] - [[x,z],y] = " << w->rhs.to_string() << "\n";
    }
    r.human = os.str();
    return r;
}

Outcome run_centralizer(const Options& o) {
    Loaded l = load(o);
    if (o.element.empty()) throw UsageError("--element is required");
    const Vector x = parse_vector(o.element, l.algebra.dim(), l.algebra.field());
    CentralizerKind kind = CentralizerKind::two_sided;
    if (o.kind == "left")
        kind = CentralizerKind::left;
    else if (o.kind == "right")
        kind = CentralizerKind::right;
    else if (o.kind != "two_sided")
        throw UsageError("--kind must be left, right or two_sided");
    const Subspace C = centralizer(l.algebra, x, kind);
    Outcome r;
    r.report = header("centralizer", l);
    r.report["element"] = to_json(x);
    r.report["kind"] = o.kind;
    r.report["centralizer"] = to_json(C);
    std::ostringstream os;
    os << "C" << (kind == CentralizerKind::left ? "^l" : (kind == CentralizerKind::right ? "^r" : "")) << "_L("
       << o.element << ") = " << C.to_basis_string() << "  (dim " << C.dim() << ")\n";
    if (l.entry && l.entry->annotated_index > 0 && kind == CentralizerKind::two_sided &&
        x == Vector::basis(l.algebra.dim(), static_cast<std::size_t>(l.entry->annotated_index - 1),
                           l.algebra.field())) {
        r.report["annotation"] = l.entry->annotation;
        os << "note: " << l.entry->annotation << "\n";
    }
    r.human = os.str();
    return r;
}

Outcome run_series(const Options& o) {
    Loaded l = load(o);
    const SeriesResult lcs = lower_central_series(l.algebra);
    const SeriesResult ds = derived_series(l.algebra);
    Outcome r;
    r.report = header("series", l);
    r.report["lower_central"] = to_json(lcs);
    r.report["derived"] = to_json(ds);
    r.report["squares_ideal"] = to_json(squares_ideal(l.algebra));
    std::ostringstream os;
    os << "lower central series: " << series_line(lcs, "^", "") << "\n";
    if (lcs.verdict == SeriesVerdict::nilpotent)
        os << "nilpotent, " << lcs.steps << "-step\n";
    else
        os << "not nilpotent; L^" << lcs.stabilized_at - 1 << " = " << lcs.terms.back().to_basis_string()
           << " (series stabilizes)\n";
    os << "derived series: " << series_line(ds, "^[", "]") << "\n";
    if (ds.verdict == SeriesVerdict::solvable)
        os << "solvable, derived length " << ds.steps << "\n";
    else
        os << "not solvable\n";
    r.human = os.str();
    return r;
}

Outcome run_cl_check(const Options& o) {
    Loaded l = load(o);
    const XSelection sel = selection(o);
    const ClVerdict v = is_cl(l.algebra, sel, flavor(o));
    Outcome r;
    r.report = header("cl-check", l);
    r.report["flavor"] = o.flavor;
    r.report["verdict"] = to_json(v);
    r.code = v.pass ? kExitPass : kExitFail;
    std::ostringstream os;
    os << l.name << ": " << (v.pass ? "CL-verified" : "NOT CL") << " on selection " << sel.describe() << " ("
       << v.checked << " x checked, flavor " << o.flavor << ")\n";
    if (v.witness) {
        const auto& w = *v.witness;
        os << "witness: condition " << w.condition << ", x = " << w.x.to_string() << ", a = " << w.a.to_string()
           << ", y = " << w.y.to_string() << ", bracket = " << w.value.to_string() << "\n";
    }
    r.human = os.str();
    return r;
}

Outcome run_cl_elements(const Options& o) {
    Loaded l = load(o);
    const XSelection sel = selection(o);
    Outcome r;
    r.report = header("cl-elements", l);
    std::ostringstream os;
    if (!o.element.empty()) {
        const Vector a = parse_vector(o.element, l.algebra.dim(), l.algebra.field());
        const ClElementReport rep = cl_element_check(l.algebra, a, sel);
        r.report["element_check"] = to_json(rep);
        r.code = rep.pass ? kExitPass : kExitFail;
        os << a.to_string() << (rep.pass ? " is a CL-element" : " is NOT a CL-element") << " on selection "
           << sel.describe() << "\n";
        if (rep.witness)
            os << "witness: condition " << rep.witness->condition << ", x = " << rep.witness->x.to_string()
               << ", y = " << rep.witness->y.to_string() << ", bracket = " << rep.witness->value.to_string() << "\n";
    }
    const ClElementSubspace S = cl_element_subspace(l.algebra, sel);
    r.report["subspace"] = to_json(S.elements);
    r.report["closure_check"] = S.closure_check;
    r.report["selection"] = sel.describe();
    if (!S.closure_check) r.code = kExitFail;
    os << "CL-elements on selection " << sel.describe() << ": S = " << S.elements.to_basis_string() << " (dim "
       << S.elements.dim() << "), subalgebra: " << (S.closure_check ? "yes" : "NO") << "\n";
    r.human = os.str();
    return r;
}

Outcome run_catalog(const Options& o) {
    Outcome r;
    std::ostringstream os;
    if (o.catalog.empty()) {
        json entries = json::array();
        for (const auto& e : catalog()) {
            entries.push_back({{"name", e.name}, {"dim", e.dim}, {"parametric", e.parametric}, {"citation", e.citation}});
            os << std::left << std::setw(20) << e.name << "dim " << e.dim << (e.parametric ? "  Q(a)  " : "  Q     ")
               << e.citation << "\n";
        }
        r.report = {{"tool", kToolName}, {"version", kToolVersion}, {"command", "catalog"}, {"entries", entries}};
        r.human = os.str();
        return r;
    }
    Loaded l = load(o);
    const std::string doc = export_algebra(l.algebra.table(), l.entry->name);
    r.report = json::parse(doc);
    r.human = doc;
    return r;
}

Outcome run_action_check(const Options& o) {
    Loaded l = load(o);
    if (o.action.empty()) throw UsageError("--action PATH is required");
    const std::string text = read_file(o.action);
    Outcome r;
    r.report = header("action-check", l);
    r.report["action_digest"] = sha256_hex(text);
    std::ostringstream os;
    FiniteGroupAction action;
    try {
        action = parse_action_document(text, l.algebra.field());
    } catch (const InvalidAction& e) {
        r.report["pass"] = false;
        r.report["error"] = e.what();
        r.code = kExitFail;
        r.human = std::string("action is not a group: ") + e.what() + "\n";
        return r;
    }
    const ActionReport rep = validate_action(l.algebra, action);
    r.report["action"] = to_json(rep);
    r.report["pass"] = rep.pass();
    r.code = rep.pass() ? kExitPass : kExitFail;
    os << "group of order " << action.order() << " acting on " << l.name << "\n";
    static const char* names[4] = {"linear", "identity acts trivially", "compatible with products",
                                   "acts by automorphisms"};
    for (int c = 0; c < 4; ++c)
        os << "  (" << c + 1 << ") " << names[c] << ": " << (rep.conditions[c] ? "pass" : "FAIL") << "\n";
    for (const auto& v : rep.violations)
        os << "  violation: condition " << v.condition << ", g = " << v.g << ": " << v.detail << "\n";
    if (rep.pass()) {
        // CL-elements among the basis stay CL-elements under the whole group.
        const XSelection sel = XSelection::basis();
        json preserved = json::array();
        bool all = true;
        for (const auto& e : l.algebra.basis()) {
            if (!cl_element_check(l.algebra, e, sel).pass) continue;
            const bool ok = action_cl_preservation(l.algebra, action, e, sel);
            all = all && ok;
            preserved.push_back({{"element", to_json(e)}, {"orbit_cl", ok}});
        }
        r.report["cl_preservation"] = preserved;
        os << "  CL-elements preserved along orbits of basis CL-elements: " << (all ? "yes" : "NO") << "\n";
        if (!all) r.code = kExitFail;
    }
    r.human = os.str();
    return r;
}

Outcome run_theorem_report(const Options& o) {
    if (o.samples == 0) throw UsageError("--samples must be at least 1");
    TheoremReport t = theorem_report(theorem_corpus(), o.samples, parse_seed(o.seed));
    Outcome r;
    r.report = std::move(t.document);
    r.human = render_theorem_report(r.report);
    r.code = t.pass ? kExitPass : kExitFail;
    return r;
}

Outcome run_counterexample(const Options& o) {
    Options opts = o;
    opts.catalog = "counterexample_s4";
    opts.file.clear();
    Loaded l = load(opts);
    const SeriesResult lcs = lower_central_series(l.algebra);
    const SeriesResult ds = derived_series(l.algebra);
    const ClVerdict vb = is_cl(l.algebra, XSelection::basis());
    const ClVerdict vs = is_cl(l.algebra, XSelection::sampled(o.samples ? o.samples : kTheoremSamples, parse_seed(o.seed)));
    const bool nilpotent = lcs.verdict == SeriesVerdict::nilpotent;
    const bool ok = !nilpotent && vb.pass && vs.pass;
    Outcome r;
    r.report = header("counterexample", l);
    r.report["lower_central"] = to_json(lcs);
    r.report["derived"] = to_json(ds);
    r.report["cl_basis"] = to_json(vb);
    r.report["cl_sampled"] = to_json(vs);
    r.report["pass"] = ok;
    r.code = ok ? kExitPass : kExitFail;
    std::ostringstream os;
    os << "algebra: [e3,e3] = e1, [e3,e2] = e2, [e2,e3] = -e2\n";
    os << "lower central series: " << series_line(lcs, "^", "") << "\n";
    os << (nilpotent ? "nilpotent" : "not nilpotent") << "\n";
    os << "derived series: " << series_line(ds, "^[", "]") << " -> "
       << (ds.verdict == SeriesVerdict::solvable ? "solvable" : "not solvable") << "\n";
    for (const auto& e : l.algebra.basis())
        os << "C_L(" << e.to_string() << ") = " << centralizer(l.algebra, e).to_basis_string() << "\n";
    os << "CL on basis: " << (vb.pass ? "pass" : "FAIL") << "; CL on " << vs.selection.describe() << ": "
       << (vs.pass ? "pass" : "FAIL") << "\n";
    os << (ok ? "a CL-algebra that is not nilpotent\n" : "counterexample NOT reproduced\n");
    r.human = os.str();
    return r;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of CL conditions for Leibniz algebras", kToolName};
    app.require_subcommand(1);
    Options o;

    auto add_algebra = [&o](CLI::App* sub) {
        sub->add_option("--catalog", o.catalog, "built-in algebra name");
        sub->add_option("--file", o.file, "algebra document path");
        sub->add_option("--alpha", o.alpha, "parameter value P/Q for parametric families");
    };
    auto add_output = [&o](CLI::App* sub) {
        sub->add_option("--out", o.out, "write the machine-readable report to PATH");
        sub->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"human", "machine"}));
    };
    auto add_selection = [&o](CLI::App* sub) {
        sub->add_option("--mode", o.mode, "x selection")->check(CLI::IsMember({"basis", "pairs", "sample"}));
        sub->add_option("--samples", o.samples, "number of sampled x");
        sub->add_option("--seed", o.seed, "sampling seed (hex)");
    };

    auto* validate = app.add_subcommand("validate", "check the Leibniz identity");
    add_algebra(validate);
    add_output(validate);
    auto* cent = app.add_subcommand("centralizer", "compute a centralizer");
    add_algebra(cent);
    add_output(cent);
    cent->add_option("--element", o.element, "e3 or comma-separated coordinates");
    cent->add_option("--kind", o.kind, "left, right or two_sided");
    auto* series = app.add_subcommand("series", "lower central and derived series");
    add_algebra(series);
    add_output(series);
    auto* clc = app.add_subcommand("cl-check", "verify the CL conditions on a selection");
    add_algebra(clc);
    add_output(clc);
    add_selection(clc);
    clc->add_option("--flavor", o.flavor, "left, right or two_sided");
    auto* cle = app.add_subcommand("cl-elements", "CL-element subspace and membership");
    add_algebra(cle);
    add_output(cle);
    add_selection(cle);
    cle->add_option("--element", o.element, "check one element");
    auto* cat = app.add_subcommand("catalog", "list entries or export one as an algebra document");
    add_algebra(cat);
    add_output(cat);
    auto* act = app.add_subcommand("action-check", "validate a finite group action");
    add_algebra(act);
    add_output(act);
    act->add_option("--action", o.action, "action document path");
    auto* thm = app.add_subcommand("theorem-report", "CL verification over every nilpotent algebra of dim <= 4");
    add_output(thm);
    thm->add_option("--samples", o.samples, "number of sampled x per entry");
    thm->add_option("--seed", o.seed, "sampling seed (hex)");
    auto* cex = app.add_subcommand("counterexample", "the non-nilpotent CL-algebra");
    add_output(cex);
    cex->add_option("--samples", o.samples, "number of sampled x");
    cex->add_option("--seed", o.seed, "sampling seed (hex)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    Outcome result;
    try {
        if (*validate)
            result = run_validate(o);
        else if (*cent)
            result = run_centralizer(o);
        else if (*series)
            result = run_series(o);
        else if (*clc)
            result = run_cl_check(o);
        else if (*cle)
            result = run_cl_elements(o);
        else if (*cat)
            result = run_catalog(o);
        else if (*act)
            result = run_action_check(o);
        else if (*thm)
            result = run_theorem_report(o);
        else
            result = run_counterexample(o);
    } catch (const LeibnizIdentityViolation& e) {
        err << "error: input is not a Leibniz algebra: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string machine = result.report.dump(2) + "\n";
    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << o.out << "'\n";
            return kExitUsage;
        }
        f << machine;
    }
    out << (o.format == "machine" ? machine : result.human);
    return result.code;
}

}  // namespace leibniz
