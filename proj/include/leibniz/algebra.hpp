#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

/// Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k (0-based).
class StructureTable {
public:
    StructureTable() = default;
    StructureTable(std::size_t dim, Field field);

    std::size_t dim() const noexcept { return n_; }
    Field field() const noexcept { return field_; }

    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    /// Throws IndexOutOfRange / MixedFieldError.
    void set(std::size_t i, std::size_t j, std::size_t k, Scalar value);
    /// Coordinates of [e_i, e_j].
    Vector product(std::size_t i, std::size_t j) const;
    void set_product(std::size_t i, std::size_t j, const Vector& value);

    bool is_zero() const noexcept;
    bool is_antisymmetric() const;

    friend bool operator==(const StructureTable&, const StructureTable&) = default;

private:
    std::size_t n_ = 0;
    Field field_ = Field::Q;
    std::vector<Scalar> c_;
};

/// Basis triple (i, j, k) for which [x,[y,z]] = [[x,y],z] - [[x,z],y] fails.
struct LeibnizWitness {
    std::size_t i = 0, j = 0, k = 0;
    Vector lhs;
    Vector rhs;
};

/// Empty optional means the identity holds on every basis triple.
std::optional<LeibnizWitness> validate_leibniz(const StructureTable& t);

class LeibnizIdentityViolation : public Error {
public:
    explicit LeibnizIdentityViolation(LeibnizWitness w);
    const LeibnizWitness& witness() const noexcept { return w_; }

private:
    LeibnizWitness w_;
};

class LeibnizAlgebra {
public:
    LeibnizAlgebra() = default;

    /// Validates the table; throws LeibnizIdentityViolation on failure.
    static LeibnizAlgebra from_table(StructureTable t);
    /// Skips validation; leibniz_checked() is false.
    static LeibnizAlgebra unchecked(StructureTable t);

    const StructureTable& table() const noexcept { return t_; }
    std::size_t dim() const noexcept { return t_.dim(); }
    Field field() const noexcept { return t_.field(); }
    bool leibniz_checked() const noexcept { return checked_; }

    Vector basis_vector(std::size_t i) const { return Vector::basis(dim(), i, field()); }
    std::vector<Vector> basis() const;
    Subspace whole() const { return Subspace::full(dim(), field()); }
    Subspace none() const { return Subspace::zero(dim(), field()); }

private:
    StructureTable t_;
    bool checked_ = false;
};

/// z_k = sum_{i,j} x_i y_j c[i][j][k].
Vector bracket(const StructureTable& t, const Vector& x, const Vector& y);
inline Vector bracket(const LeibnizAlgebra& L, const Vector& x, const Vector& y) { return bracket(L.table(), x, y); }

/// Matrix of y -> [x, y] (columns are [x, e_j]).
Matrix left_multiplication(const StructureTable& t, const Vector& x);
/// Matrix of y -> [y, x] (columns are [e_i, x]).
Matrix right_multiplication(const StructureTable& t, const Vector& x);

/// Span of [u, v] over basis vectors of U and V.
Subspace bracket_span(const LeibnizAlgebra& L, const Subspace& U, const Subspace& V);

enum class SubspaceRole { subalgebra, left_ideal, right_ideal, ideal };

bool subspace_role(const LeibnizAlgebra& L, const Subspace& U, SubspaceRole role);

enum class SeriesVerdict { nilpotent, solvable, neither };

struct SeriesResult {
    /// terms[0] is L itself; the final term repeats its predecessor (or is 0).
    std::vector<Subspace> terms;
    /// 1-based index of the first term equal to its predecessor, or of the zero term.
    std::size_t stabilized_at = 0;
    SeriesVerdict verdict = SeriesVerdict::neither;
    /// Least n with the n-th term zero (nilpotency class / derived length); 0 if never.
    std::size_t steps = 0;

    const Subspace& term(std::size_t one_based) const { return terms.at(one_based - 1); }
};

/// L^1 = L, L^{k+1} = [L^k, L].
SeriesResult lower_central_series(const LeibnizAlgebra& L);
/// L^[1] = L, L^[k+1] = [L^[k], L^[k]].
SeriesResult derived_series(const LeibnizAlgebra& L);

/// Ideal generated by all squares [x, x].
Subspace squares_ideal(const LeibnizAlgebra& L);

/// Leibniz bracket [x, y]_d = [x, d y] on a Lie algebra with a square-zero derivation d.
/// Throws NotLie, NotDifferential or NotDerivation with a basis-pair witness in the message.
LeibnizAlgebra derived_bracket(const StructureTable& lie_table, const Matrix& d);

/// Algebra with [u, v]' = P [P^-1 u, P^-1 v]; x -> P x is then an isomorphism.
/// Throws SingularMatrix.
LeibnizAlgebra transport(const LeibnizAlgebra& L, const Matrix& P);

}  // namespace leibniz
