#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "leibniz/centralizer.hpp"

using namespace leibniz;
using fixtures::e;

TEST_CASE("lookup and instantiation") {
    const auto r1 = catalog_get("rho_1");
    CHECK(r1.dim() == 4);
    CHECK(bracket(r1, e(4, 1), e(4, 1)) == e(4, 2));
    CHECK(bracket(r1, e(4, 2), e(4, 1)) == e(4, 3));
    CHECK(bracket(r1, e(4, 3), e(4, 1)) == e(4, 4));
    CHECK(catalog_get("lambda_1").table().is_zero());
    CHECK(catalog_get("lambda_1").dim() == 3);
    CHECK_THROWS_AS(catalog_get("rho_16", Rational(1)), ExcludedParameter);
    CHECK_THROWS_AS(catalog_get("rho_4", Rational(2)), ExcludedParameter);
    CHECK_NOTHROW(catalog_get("rho_4", Rational(1)));
    CHECK_THROWS_AS(catalog_get("rho_18"), UnknownName);

    const auto r16 = catalog_get("rho_16");
    CHECK(r16.field() == Field::Qa);
    const auto r16_3 = catalog_get("rho_16", Rational(3));
    CHECK(r16_3.field() == Field::Q);
    CHECK(bracket(r16_3, e(4, 2), e(4, 1))[3] == Scalar(Rational(-2)));
}

TEST_CASE("catalog names") {
    std::set<std::string> names;
    for (const auto& e : catalog()) names.insert(e.name);
    for (const char* n : {"mu_1", "counterexample_s4", "example_3_8", "remark_3_2", "example_2_4"}) CHECK(names.count(n));
    for (int i = 1; i <= 6; ++i) CHECK(names.count("lambda_" + std::to_string(i)));
    for (int i = 1; i <= 17; ++i) CHECK(names.count("rho_" + std::to_string(i)));
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        CHECK(!e.citation.empty());
        const bool want_param = e.name == "lambda_4" || e.name == "rho_4" || e.name == "rho_9" ||
                                e.name == "rho_10" || e.name == "rho_16";
        CHECK(e.parametric == want_param);
    }
}

TEST_CASE("theorem corpus") {
    const auto corpus = theorem_corpus();
    CHECK(corpus.size() == kTheoremCorpusSize);
    std::set<std::string> seen;
    for (const auto& item : corpus) {
        CAPTURE(item.name);
        CAPTURE(item.alpha_label);
        CHECK(item.algebra.dim() <= 4);
        CHECK(item.algebra.leibniz_checked());
        CHECK(!validate_leibniz(item.algebra.table()));
        CHECK(lower_central_series(item.algebra).verdict == SeriesVerdict::nilpotent);
        CHECK(seen.insert(item.name + "/" + item.alpha_label).second);
        CHECK(item.algebra.field() == (item.alpha_label == "generic" ? Field::Qa : Field::Q));
        CHECK(item.name != "counterexample_s4");
    }
    for (const char* label : {"lambda_4/a=1", "lambda_4/generic", "rho_4/a=0", "rho_4/a=1", "rho_16/a=1/2",
                              "rho_9/a=-1", "abelian_1/-", "abelian_2/-"})
        CHECK(seen.count(label));
    CHECK(!seen.count("rho_16/a=1"));
    CHECK(!seen.count("rho_4/generic"));

    const auto again = theorem_corpus();
    REQUIRE(again.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(again[i].name == corpus[i].name);
        CHECK(again[i].algebra.table() == corpus[i].algebra.table());
    }
}

TEST_CASE("published centralizers") {
    int compared = 0;
    for (const auto& entry : catalog()) {
        if (entry.published_centralizers.empty()) continue;
        const auto L = catalog_get(entry.name);
        REQUIRE(entry.published_centralizers.size() == L.dim());
        for (std::size_t i = 0; i < L.dim(); ++i) {
            const auto& pub = entry.published_centralizers[i];
            if (pub.empty()) continue;
            CAPTURE(entry.name);
            CAPTURE(i + 1);
            std::vector<Vector> vs;
            for (int k : pub) vs.push_back(e(L.dim(), static_cast<std::size_t>(k), L.field()));
            CHECK(centralizer(L, L.basis_vector(i)) == Subspace::span(vs, L.dim(), L.field()));
            ++compared;
        }
    }
    CHECK(compared > 70);
    const auto& r6 = catalog_entry("rho_6");
    CHECK(r6.annotated_index == 3);
    CHECK(centralizer(catalog_get("rho_6"), e(4, 3)).dim() == 3);
}

TEST_CASE("the counterexample is the only CL entry that is not nilpotent") {
    for (const auto& entry : catalog()) {
        CAPTURE(entry.name);
        const auto L = catalog_get(entry.name);
        const bool nil = lower_central_series(L).verdict == SeriesVerdict::nilpotent;
        CHECK(nil == entry.nilpotent);
        CHECK(nil == (entry.name != "counterexample_s4"));
        CHECK(is_cl(L, XSelection::basis()).pass);
    }
}
