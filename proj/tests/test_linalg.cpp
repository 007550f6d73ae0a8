#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "leibniz/linalg.hpp"
#include "oracle.hpp"

using namespace leibniz;

namespace {

constexpr Field kQ = Field::Q;

Subspace random_subspace(std::mt19937_64& g, std::size_t n) {
    std::uniform_int_distribution<std::size_t> k(0, n);
    std::vector<Vector> vs;
    const std::size_t count = k(g);
    for (std::size_t i = 0; i < count; ++i) {
        Vector v = oracle::random_vector(g, n, 2);
        // sparsify so that low-dimensional overlaps are common
        for (std::size_t j = 0; j < n; ++j)
            if (g() % 3 == 0) v[j] = Scalar::zero(kQ);
        vs.push_back(v);
    }
    return Subspace::span(vs, n, kQ);
}

std::vector<oracle::QVec> qbasis(const Subspace& s) {
    std::vector<oracle::QVec> out;
    for (const auto& b : s.basis()) out.push_back(oracle::vec(b));
    return out;
}

bool is_rref(const Matrix& m) {
    std::optional<std::size_t> last_pivot;
    bool seen_zero_row = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t c = 0;
        while (c < m.cols() && m(r, c).is_zero()) ++c;
        if (c == m.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (last_pivot && c <= *last_pivot) return false;
        if (!m(r, c).is_one()) return false;
        for (std::size_t o = 0; o < m.rows(); ++o)
            if (o != r && !m(o, c).is_zero()) return false;
        last_pivot = c;
    }
    return true;
}

}  // namespace

TEST_CASE("rref examples") {
    CHECK(rref(Matrix::identity(4, kQ)) == Matrix::identity(4, kQ));
    CHECK(rref(Matrix::from_ints({{2, 4}, {1, 2}})) == Matrix::from_ints({{1, 2}, {0, 0}}));
    CHECK(rank(Matrix(3, 3, kQ)) == 0);
}

TEST_CASE("random invertible 5x5 reduces to the identity") {
    std::mt19937_64 g(17);
    int invertible = 0;
    for (int it = 0; it < 40; ++it) {
        Matrix m(5, 5, kQ);
        std::uniform_int_distribution<long> d(-4, 4);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c) m(r, c) = Rational(d(g), 1 + static_cast<long>(g() % 3));
        const bool nonsingular = oracle::det(oracle::mat(m)) != 0;
        CHECK((rref(m) == Matrix::identity(5, kQ)) == nonsingular);
        if (nonsingular) {
            ++invertible;
            CHECK(m * inverse(m) == Matrix::identity(5, kQ));
        } else {
            CHECK_THROWS_AS(inverse(m), SingularMatrix);
        }
    }
    CHECK(invertible > 20);
}

TEST_CASE("rref canonicity and rank against the oracle") {
    std::mt19937_64 g(23);
    for (int it = 0; it < 200; ++it) {
        const std::size_t rows = 1 + g() % 5, cols = 1 + g() % 6;
        Matrix m(rows, cols, kQ);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(static_cast<long>(g() % 5) - 2);
        const Matrix R = rref(m);
        CHECK(is_rref(R));
        CHECK(rref(R) == R);
        CHECK(rank(m) == oracle::rank(oracle::mat(m)));
        // row operations by an invertible matrix leave the RREF unchanged
        const Matrix P = oracle::random_invertible(g, rows);
        CHECK(rref(P * m) == R);
        // rank-nullity, and every kernel vector is annihilated
        const Subspace K = null_space(m);
        CHECK(K.dim() + rank(m) == cols);
        for (const auto& v : K.basis()) CHECK((m * v).is_zero());
    }
}

TEST_CASE("null space examples") {
    CHECK(null_space(Matrix(3, 3, kQ)) == Subspace::full(3, kQ));
    CHECK(null_space(Matrix::identity(3, kQ)) == Subspace::zero(3, kQ));
}

TEST_CASE("span canonicalization") {
    const Vector e1 = Vector::basis(3, 0, kQ), e2 = Vector::basis(3, 1, kQ);
    CHECK(Subspace::span(std::vector<Vector>{}, 3, kQ).is_zero());
    const Subspace s = Subspace::span({e1, e1 + e2}, 3, kQ);
    CHECK(s.dim() == 2);
    CHECK(s.basis()[0] == e1);
    CHECK(s.basis()[1] == e2);
    CHECK(s == Subspace::span({e2, Scalar(Rational(3)) * e1}, 3, kQ));
    CHECK(s.to_basis_string() == "<e1, e2>");
    CHECK_THROWS_AS(Subspace::span({Vector::basis(2, 0, kQ)}, 3, kQ), DimensionMismatch);
}

TEST_CASE("sum, intersection, compare") {
    const Subspace a = Subspace::span({Vector::basis(3, 0, kQ)}, 3, kQ);
    const Subspace b = Subspace::span({Vector::basis(3, 1, kQ)}, 3, kQ);
    CHECK(subspace_intersect(a, b).is_zero());
    CHECK(subspace_sum(a, b) == Subspace::span({Vector::basis(3, 0, kQ), Vector::basis(3, 1, kQ)}, 3, kQ));
    CHECK(subspace_intersect(a, a) == a);
    CHECK(subspace_sum(a, a) == a);
    CHECK(subspace_compare(a, b) == SubspaceRelation::incomparable);
    CHECK(subspace_compare(Subspace::zero(3, kQ), a) == SubspaceRelation::a_in_b);
    CHECK(subspace_compare(subspace_sum(a, b), b) == SubspaceRelation::b_in_a);
    CHECK(subspace_compare(a, a) == SubspaceRelation::equal);
    CHECK(is_subset(Subspace::zero(3, kQ), b));
    CHECK_THROWS_AS(subspace_sum(a, Subspace::zero(2, kQ)), DimensionMismatch);
}

TEST_CASE("dimension formula on 200 random pairs") {
    std::mt19937_64 g(29);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 2 + it % 5;
        const Subspace a = random_subspace(g, n), b = random_subspace(g, n);
        const Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
        CHECK(a.dim() + b.dim() == s.dim() + i.dim());
        // oracle: sum dimension by direct rank, intersection vectors lie in both
        auto both = qbasis(a);
        for (const auto& v : qbasis(b)) both.push_back(v);
        CHECK(s.dim() == oracle::span_dim(both));
        for (const auto& v : qbasis(i)) {
            CHECK(oracle::in_span(qbasis(a), v));
            CHECK(oracle::in_span(qbasis(b), v));
        }
        CHECK(oracle::same_span(qbasis(Subspace::span(s.basis(), n, kQ)), both));
    }
}

TEST_CASE("subspaces over Q(a) use exact zero tests") {
    const Field F = Field::Qa;
    Vector v(2, F), w(2, F);
    v[0] = parse_scalar("a", F);
    v[1] = parse_scalar("1", F);
    w[0] = parse_scalar("a^2", F);
    w[1] = parse_scalar("a", F);
    CHECK(Subspace::span({v, w}, 2, F).dim() == 1);
    w[1] = parse_scalar("a + 1", F);
    CHECK(Subspace::span({v, w}, 2, F).dim() == 2);
}

TEST_CASE("image of a subspace") {
    const Matrix swap = Matrix::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
    const Subspace s = Subspace::span({Vector::basis(3, 0, kQ), Vector::basis(3, 2, kQ)}, 3, kQ);
    CHECK(image(swap, s) == Subspace::span({Vector::basis(3, 1, kQ), Vector::basis(3, 2, kQ)}, 3, kQ));
    CHECK(member(Vector::basis(3, 2, kQ), s));
    CHECK(!member(Vector::basis(3, 1, kQ), s));
}
