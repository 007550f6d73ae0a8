#include "leibniz/catalog.hpp"

#include <algorithm>

namespace leibniz {

namespace {

using C = std::vector<std::vector<int>>;

CatalogEntry entry(std::string name, std::size_t dim, std::vector<BracketRule> rules, std::string citation,
                   C centralizers = {}) {
    CatalogEntry e;
    e.name = std::move(name);
    e.dim = dim;
    e.rules = std::move(rules);
    e.citation = std::move(citation);
    e.published_centralizers = std::move(centralizers);
    return e;
}

CatalogEntry parametric(CatalogEntry e) {
    e.parametric = true;
    return e;
}

const char* kDim2 = "classification of 2-dimensional nilpotent Leibniz algebras";
const char* kDim3 = "classification of 3-dimensional nilpotent Leibniz algebras";
const char* kDim4 = "classification of 4-dimensional nilpotent complex Leibniz algebras";

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> v;

    v.push_back(entry("abelian_1", 1, {}, "1-dimensional (necessarily abelian) Leibniz algebra", {{1}}));
    v.push_back(entry("abelian_2", 2, {}, std::string(kDim2) + ": abelian case", {{1, 2}, {1, 2}}));
    v.push_back(entry("mu_1", 2, {{1, 1, {{2, "1"}}}}, std::string(kDim2) + ": mu_1", {{2}, {1, 2}}));

    v.push_back(entry("lambda_1", 3, {}, std::string(kDim3) + ": lambda_1 (abelian)", {}));
    v.push_back(entry("lambda_2", 3, {{1, 1, {{3, "1"}}}}, std::string(kDim3) + ": lambda_2",
                      {{2, 3}, {1, 2, 3}, {1, 2, 3}}));
    v.push_back(entry("lambda_3", 3, {{1, 2, {{3, "1"}}}, {2, 1, {{3, "-1"}}}}, std::string(kDim3) + ": lambda_3",
                      {{1, 3}, {2, 3}, {1, 2, 3}}));
    {
        auto e = parametric(entry("lambda_4", 3, {{1, 1, {{3, "1"}}}, {2, 2, {{3, "a"}}}, {1, 2, {{3, "1"}}}},
                                  std::string(kDim3) + ": lambda_4(a), parameter range unstated (all of Q)",
                                  {{3}, {3}, {1, 2, 3}}));
        e.samples = {Rational(0), Rational(1), Rational(-1), Rational(2)};
        v.push_back(std::move(e));
    }
    v.push_back(entry("lambda_5", 3, {{2, 1, {{3, "1"}}}, {1, 2, {{3, "1"}}}}, std::string(kDim3) + ": lambda_5",
                      {{1, 3}, {2, 3}, {1, 2, 3}}));
    v.push_back(entry("lambda_6", 3, {{1, 1, {{2, "1"}}}, {2, 1, {{3, "1"}}}}, std::string(kDim3) + ": lambda_6",
                      {{3}, {2, 3}, {1, 2, 3}}));

    const C kRhoA = {{4}, {2, 3, 4}, {2, 3, 4}, {1, 2, 3, 4}};
    v.push_back(entry("rho_1", 4, {{1, 1, {{2, "1"}}}, {2, 1, {{3, "1"}}}, {3, 1, {{4, "1"}}}},
                      std::string(kDim4) + ": rho_1", kRhoA));
    v.push_back(entry("rho_2", 4, {{1, 1, {{3, "1"}}}, {1, 2, {{4, "1"}}}, {2, 1, {{3, "1"}}}, {3, 1, {{4, "1"}}}},
                      std::string(kDim4) + ": rho_2", kRhoA));
    v.push_back(entry("rho_3", 4, {{1, 1, {{3, "1"}}}, {2, 1, {{3, "1"}}}, {3, 1, {{4, "1"}}}},
                      std::string(kDim4) + ": rho_3", kRhoA));
    {
        auto e = parametric(entry(
            "rho_4", 4,
            {{1, 1, {{3, "1"}}}, {1, 2, {{4, "a"}}}, {2, 1, {{3, "1"}}}, {2, 2, {{4, "1"}}}, {3, 1, {{4, "1"}}}},
            std::string(kDim4) + ": rho_4(a), a in {0, 1}", {{4}, {3, 4}, {2, 3, 4}, {1, 2, 3, 4}}));
        e.allowed = std::vector<Rational>{Rational(0), Rational(1)};
        v.push_back(std::move(e));
    }
    v.push_back(entry("rho_5", 4, {{1, 1, {{3, "1"}}}, {1, 2, {{4, "1"}}}, {3, 1, {{4, "1"}}}},
                      std::string(kDim4) + ": rho_5", kRhoA));
    {
        auto e = entry("rho_6", 4, {{1, 1, {{3, "1"}}}, {2, 2, {{4, "1"}}}, {3, 1, {{4, "1"}}}},
                       std::string(kDim4) + ": rho_6", {{2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 3, 4}});
        e.annotated_index = 3;
        e.annotation =
            "published list reads C_L(e3) = <e2,e3,e4> = L; the span is 3-dimensional and e1 is excluded "
            "since [e3,e1] = e4 != 0, so the '= L' is a misprint";
        v.push_back(std::move(e));
    }
    const C kRhoB = {{3, 4}, {3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}};
    v.push_back(entry("rho_7", 4, {{1, 1, {{4, "1"}}}, {1, 2, {{3, "1"}}}, {2, 1, {{3, "-1"}}}, {2, 2, {{3, "-2"}, {4, "1"}}}},
                      std::string(kDim4) + ": rho_7", kRhoB));
    v.push_back(entry("rho_8", 4, {{1, 2, {{3, "1"}}}, {2, 1, {{4, "1"}}}, {2, 2, {{3, "-1"}}}},
                      std::string(kDim4) + ": rho_8", {{1, 3, 4}, {3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}}));
    v.push_back(parametric(entry("rho_9", 4,
                                 {{1, 1, {{3, "1"}}}, {1, 2, {{4, "1"}}}, {2, 1, {{3, "-a"}}}, {2, 2, {{4, "-1"}}}},
                                 std::string(kDim4) + ": rho_9(a), a in C", kRhoB)));
    v.push_back(parametric(entry("rho_10", 4,
                                 {{1, 1, {{4, "1"}}},
                                  {1, 2, {{4, "a"}}},
                                  {2, 1, {{4, "-a"}}},
                                  {2, 2, {{4, "1"}}},
                                  {3, 3, {{4, "1"}}}},
                                 std::string(kDim4) + ": rho_10(a), a in C",
                                 {{3, 4}, {3, 4}, {1, 2, 4}, {1, 2, 3, 4}})));
    v.push_back(entry("rho_11", 4,
                      {{1, 2, {{4, "1"}}}, {1, 3, {{4, "1"}}}, {2, 1, {{4, "-1"}}}, {2, 2, {{4, "1"}}}, {3, 1, {{4, "1"}}}},
                      std::string(kDim4) + ": rho_11", {{1, 4}, {3, 4}, {2, 3, 4}, {1, 2, 3, 4}}));
    v.push_back(entry("rho_12", 4, {{1, 1, {{4, "1"}}}, {1, 2, {{4, "1"}}}, {2, 1, {{4, "-1"}}}, {3, 3, {{4, "1"}}}},
                      std::string(kDim4) + ": rho_12", {{3, 4}, {2, 3, 4}, {1, 2, 4}, {1, 2, 3, 4}}));
    const C kRhoC = {{1, 3, 4}, {3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}};
    v.push_back(entry("rho_13", 4, {{1, 2, {{3, "1"}}}, {2, 1, {{4, "1"}}}}, std::string(kDim4) + ": rho_13",
                      {{1, 3, 4}, {2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}}));
    v.push_back(entry("rho_14", 4, {{1, 2, {{3, "1"}}}, {2, 1, {{3, "-1"}}}, {2, 2, {{4, "1"}}}},
                      std::string(kDim4) + ": rho_14", kRhoC));
    v.push_back(entry("rho_15", 4, {{2, 1, {{4, "1"}}}, {2, 2, {{3, "1"}}}}, std::string(kDim4) + ": rho_15", kRhoC));
    {
        auto e = parametric(entry("rho_16", 4, {{1, 2, {{4, "1"}}}, {2, 1, {{4, "(1+a)/(1-a)"}}}, {2, 2, {{3, "1"}}}},
                                  std::string(kDim4) + ": rho_16(a), a in C minus {1}", kRhoC));
        e.excluded = {Rational(1)};
        v.push_back(std::move(e));
    }
    v.push_back(entry("rho_17", 4, {{1, 2, {{4, "1"}}}, {2, 1, {{4, "-1"}}}, {3, 3, {{4, "1"}}}},
                      std::string(kDim4) + ": rho_17", {{1, 3, 4}, {2, 3, 4}, {1, 2, 4}, {1, 2, 3, 4}}));

    {
        auto e = entry("counterexample_s4", 3, {{3, 3, {{1, "1"}}}, {3, 2, {{2, "1"}}}, {2, 3, {{2, "-1"}}}},
                       "non-nilpotent CL-algebra answering whether every CL-algebra is nilpotent",
                       {{1, 2, 3}, {1, 2}, {1}});
        e.nilpotent = false;
        v.push_back(std::move(e));
    }
    v.push_back(entry("example_3_8", 2, {{1, 1, {{2, "1"}}}}, "non-abelian CL-algebra with basis a = e1, b = e2",
                      {{2}, {1, 2}}));
    v.push_back(entry("remark_3_2", 3, {{3, 3, {{1, "1"}}}, {1, 3, {{2, "1"}}}},
                      "algebra where [x,x] lies in the right but not the left centralizer", {{}, {}, {2}}));
    v.push_back(entry("example_2_4", 3, {{1, 3, {{2, "1"}}}, {3, 3, {{1, "1"}}}},
                      "3-dimensional nilpotent example presented as lambda_6 in a second basis", {}));
    return v;
}

bool contains(const std::vector<Rational>& values, const Rational& r) {
    return std::find(values.begin(), values.end(), r) != values.end();
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw UnknownName(std::string(name));
}

StructureTable build_table(const CatalogEntry& e, const std::optional<Rational>& alpha) {
    const bool symbolic = e.parametric && !alpha;
    const Field out = symbolic ? Field::Qa : Field::Q;
    if (e.parametric && alpha) {
        if (contains(e.excluded, *alpha))
            throw ExcludedParameter(e.name + " excludes a = " + alpha->to_string());
        if (e.allowed && !contains(*e.allowed, *alpha))
            throw ExcludedParameter(e.name + " only admits the listed parameter values, not a = " +
                                    alpha->to_string());
    }
    StructureTable t(e.dim, out);
    for (const auto& rule : e.rules)
        for (const auto& [k, text] : rule.result) {
            Scalar s = parse_scalar(text, e.field());
            if (e.parametric && alpha) s = Scalar(substitute(s, *alpha));
            t.set(static_cast<std::size_t>(rule.left - 1), static_cast<std::size_t>(rule.right - 1),
                  static_cast<std::size_t>(k - 1), std::move(s));
        }
    return t;
}

LeibnizAlgebra catalog_get(std::string_view name, const std::optional<Rational>& alpha) {
    const CatalogEntry& e = catalog_entry(name);
    return LeibnizAlgebra::from_table(build_table(e, e.parametric ? alpha : std::nullopt));
}

const std::vector<Rational>& parameter_samples() {
    static const std::vector<Rational> samples = {Rational(0), Rational(2), Rational(-1), Rational(1, 2)};
    return samples;
}

std::vector<CorpusItem> theorem_corpus() {
    std::vector<CorpusItem> out;
    for (const auto& e : catalog()) {
        if (!e.nilpotent || e.dim > 4) continue;
        if (e.name == "example_3_8" || e.name == "remark_3_2" || e.name == "example_2_4") continue;
        if (!e.parametric) {
            out.push_back({e.name, "-", std::nullopt, catalog_get(e.name)});
            continue;
        }
        if (e.allowed) {
            for (const auto& a : *e.allowed) out.push_back({e.name, "a=" + a.to_string(), a, catalog_get(e.name, a)});
            continue;
        }
        out.push_back({e.name, "generic", std::nullopt, catalog_get(e.name)});
        for (const auto& a : e.samples.empty() ? parameter_samples() : e.samples) {
            if (contains(e.excluded, a)) continue;
            out.push_back({e.name, "a=" + a.to_string(), a, catalog_get(e.name, a)});
        }
    }
    return out;
}

}  // namespace leibniz
