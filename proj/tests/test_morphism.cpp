#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "leibniz/morphism.hpp"
#include "oracle.hpp"

using namespace leibniz;
using fixtures::e;
using fixtures::span_e;

namespace {

// e1 <-> e2, e3 -> -e3; columns are images.
Matrix lambda3_g() { return Matrix::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}); }

FiniteGroupAction lambda3_action() {
    return FiniteGroupAction::from_elements({Matrix::identity(3, Field::Q), lambda3_g()});
}

}  // namespace

TEST_CASE("morphism_check") {
    const auto l6 = catalog_get("lambda_6");
    CHECK(morphism_check(LinearMap(Matrix::identity(3, Field::Q)), l6, l6).kind == MorphismKind::isomorphism);
    CHECK(morphism_check(LinearMap(Matrix(3, 3, Field::Q)), l6, l6).kind == MorphismKind::morphism);
    const auto bad = morphism_check(LinearMap(Matrix::from_ints({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})), l6, l6);
    CHECK(bad.kind == MorphismKind::not_morphism);
    REQUIRE(bad.witness);
    CHECK(bad.image_of_bracket != bad.bracket_of_images);

    std::mt19937_64 g(10);
    for (const char* name : {"mu_1", "lambda_6", "rho_1", "rho_12"}) {
        const auto L = catalog_get(name);
        for (int it = 0; it < 10; ++it) {
            const Matrix P = oracle::random_invertible(g, L.dim());
            CHECK(morphism_check(LinearMap(P), L, transport(L, P)).kind == MorphismKind::isomorphism);
        }
    }
    CHECK_THROWS_AS(morphism_check(LinearMap(Matrix::identity(2, Field::Q)), l6, l6), DimensionMismatch);
}

TEST_CASE("centralizer transport") {
    const auto mu = catalog_get("mu_1");
    CHECK(centralizer_transport_check(LinearMap(Matrix::identity(2, Field::Q)), mu, mu, mu.basis()));
    std::mt19937_64 g(11);
    for (int it = 0; it < 5; ++it) {
        const Matrix P = oracle::random_invertible(g, 2);
        std::vector<Vector> xs = mu.basis();
        for (const auto& x : sample_vectors(2, Field::Q, 20, g())) xs.push_back(x);
        CHECK(centralizer_transport_check(LinearMap(P), mu, transport(mu, P), xs));
    }
    CHECK_THROWS_AS(centralizer_transport_check(LinearMap(Matrix(2, 2, Field::Q)), mu, mu, mu.basis()),
                    NotIsomorphism);
}

TEST_CASE("CL-elements survive isomorphisms on the image selection") {
    std::mt19937_64 g(12);
    for (const auto& n : fixtures::rational_catalog()) {
        CAPTURE(n.label);
        const Matrix P = oracle::random_invertible(g, n.algebra.dim());
        const auto T = transport(n.algebra, P);
        std::vector<Vector> xs = XSelection::basis_plus_pairs().realize(n.algebra.dim(), Field::Q);
        std::vector<Vector> fxs;
        for (const auto& x : xs) fxs.push_back(P * x);
        const auto S = cl_element_subspace(n.algebra, XSelection::explicit_list(xs));
        for (const auto& a : S.elements.basis())
            CHECK(cl_element_check(T, P * a, XSelection::explicit_list(fxs)).pass);
        CHECK(image(P, S.elements) == cl_element_subspace(T, XSelection::explicit_list(fxs)).elements);
    }
}

TEST_CASE("validate_action") {
    const auto l3 = catalog_get("lambda_3");
    const auto trivial = FiniteGroupAction::from_elements({Matrix::identity(3, Field::Q)});
    CHECK(validate_action(l3, trivial).pass());

    const auto act = lambda3_action();
    CHECK(act.order() == 2);
    CHECK(act.identity_index == 0);
    CHECK(act.table[1][1] == 0);
    const auto rep = validate_action(l3, act);
    CHECK(rep.pass());
    for (bool c : rep.conditions) CHECK(c);

    FiniteGroupAction corrupt = act;
    corrupt.table[1][1] = 1;
    const auto bad = validate_action(l3, corrupt);
    CHECK(!bad.pass());
    CHECK(!bad.conditions[2]);
    REQUIRE(!bad.violations.empty());
    CHECK(bad.violations.front().condition == 3);

    // an involution that is linear but not an automorphism of lambda_3
    const auto wrong = FiniteGroupAction::from_elements(
        {Matrix::identity(3, Field::Q), Matrix::from_ints({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}})});
    const auto r4 = validate_action(l3, wrong);
    CHECK(!r4.conditions[3]);
    REQUIRE(!r4.violations.empty());
    const auto& v = r4.violations.front();
    CHECK(v.condition == 4);
    const Matrix& M = wrong.elements[v.g];
    CHECK(M * bracket(l3, e(3, v.i + 1), e(3, v.j + 1)) != bracket(l3, M * e(3, v.i + 1), M * e(3, v.j + 1)));

    CHECK_THROWS_AS(FiniteGroupAction::from_elements({Matrix::identity(3, Field::Q), Matrix::from_ints(
                                                                                         {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})}),
                    InvalidAction);
    CHECK_THROWS_AS(FiniteGroupAction::from_elements({lambda3_g()}), InvalidAction);
}

TEST_CASE("centralizer action map") {
    const auto l3 = catalog_get("lambda_3");
    const auto act = lambda3_action();
    CHECK(centralizer(l3, e(3, 1)) == span_e(3, {1, 3}));
    CHECK(image(lambda3_g(), centralizer(l3, e(3, 1))) == centralizer(l3, e(3, 2)));
    CHECK(centralizer_action_map(l3, act, 0, e(3, 1)));
    CHECK(centralizer_action_map(l3, act, 1, e(3, 1)));
    for (const auto& x : sample_vectors(3, Field::Q, 50, 99))
        for (std::size_t gi = 0; gi < act.order(); ++gi) CHECK(centralizer_action_map(l3, act, gi, x));
    FiniteGroupAction corrupt = act;
    corrupt.table[1][1] = 1;
    CHECK_THROWS_AS(centralizer_action_map(l3, corrupt, 1, e(3, 1)), InvalidAction);
}

TEST_CASE("CL-elements are preserved along orbits") {
    const auto l3 = catalog_get("lambda_3");
    const auto act = lambda3_action();
    const XSelection sel = XSelection::basis_plus_pairs();
    CHECK(action_cl_preservation(l3, act, Vector(3, Field::Q), sel));
    CHECK(action_cl_preservation(l3, act, e(3, 3), sel));
    const auto trivial = FiniteGroupAction::from_elements({Matrix::identity(3, Field::Q)});
    const auto l6 = catalog_get("lambda_6");
    CHECK(action_cl_preservation(l6, trivial, e(3, 3), sel));
    for (const auto& a : l3.basis())
        if (cl_element_check(l3, a, sel).pass) CHECK(action_cl_preservation(l3, act, a, sel));
}

TEST_CASE("equivariant maps") {
    const auto act = lambda3_action();
    CHECK(equivariant_check(LinearMap(Matrix::identity(3, Field::Q)), act));
    for (const auto& h : act.elements) CHECK(equivariant_check(LinearMap(h), act));
    const auto r = equivariant_check(LinearMap(Matrix::from_ints({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}})), act);
    CHECK(!r.equivariant);
    REQUIRE(r.witness_g);
    CHECK(*r.witness_g == 1);
    CHECK_THROWS_AS(equivariant_check(LinearMap(Matrix::identity(2, Field::Q)), act), DimensionMismatch);

    // an equivariant automorphism carries CL-elements to CL-elements
    const auto l3 = catalog_get("lambda_3");
    const Matrix f = Matrix::from_ints({{2, 1, 0}, {1, 2, 0}, {0, 0, 3}});
    REQUIRE(equivariant_check(LinearMap(f), act));
    REQUIRE(morphism_check(LinearMap(f), l3, l3).kind == MorphismKind::isomorphism);
    const XSelection sel = XSelection::basis_plus_pairs();
    const auto S = cl_element_subspace(l3, sel);
    for (const auto& a : S.elements.basis()) {
        CHECK(cl_element_check(l3, f * a, sel).pass);
        for (const auto& g : act.elements) CHECK(cl_element_check(l3, g * (f * a), sel).pass);
    }
}
