#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over a Scalar field.
 *
 * Matrices act on column vectors. Subspaces are always stored by their
 * reduced row-echelon basis, so equality of subspaces is equality of bases.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

class Vector {
public:
    Vector() = default;
    Vector(std::size_t n, Field field);
    explicit Vector(std::vector<Scalar> entries);

    static Vector basis(std::size_t n, std::size_t index, Field field);
    /// Convenience for tests and the catalog: integer coordinates.
    static Vector from_ints(std::initializer_list<long> values, Field field = Field::Q);

    std::size_t size() const noexcept { return e_.size(); }
    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept;

    Scalar& operator[](std::size_t i) { return e_[i]; }
    const Scalar& operator[](std::size_t i) const { return e_[i]; }
    std::span<const Scalar> entries() const noexcept { return e_; }

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& k, const Vector& v);
    Vector operator-() const;

    friend bool operator==(const Vector&, const Vector&) = default;

    /// "(x1, x2, ...)" with entries in the scalar grammar.
    std::string to_string() const;

private:
    Field field_ = Field::Q;
    std::vector<Scalar> e_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field);

    static Matrix identity(std::size_t n, Field field);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Field field);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows, Field field);
    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows, Field field = Field::Q);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Field field() const noexcept { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Matrix transposed() const;
    bool is_zero() const noexcept;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_ = Field::Q;
    std::vector<Scalar> d_;
};

/// Reduced row-echelon form. Pivots are chosen as the first nonzero entry
/// scanning columns left to right.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws SingularMatrix.
Matrix inverse(const Matrix& m);

class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient, Field field);
    static Subspace full(std::size_t ambient, Field field);
    /// Throws DimensionMismatch if a vector has the wrong length or field.
    static Subspace span(std::span<const Vector> vectors, std::size_t ambient, Field field);
    static Subspace span(std::initializer_list<Vector> vectors, std::size_t ambient, Field field);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept { return basis_.empty(); }
    bool is_full() const noexcept { return basis_.size() == ambient_; }

    /// RREF rows, no zero rows, pivot columns strictly increasing.
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    std::vector<std::size_t> pivots() const;

    bool contains(const Vector& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

    /// "<v1, v2>" using angle brackets; "<0>" for the zero subspace.
    std::string to_string() const;
    /// Compact form when every basis vector is a standard basis vector, e.g. "<e2, e3>".
    std::string to_basis_string() const;

private:
    std::size_t ambient_ = 0;
    Field field_ = Field::Q;
    std::vector<Vector> basis_;
};

enum class SubspaceRelation { equal, a_in_b, b_in_a, incomparable };

Subspace null_space(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
SubspaceRelation subspace_compare(const Subspace& a, const Subspace& b);
bool is_subset(const Subspace& a, const Subspace& b);
bool member(const Vector& v, const Subspace& s);
/// Image of a subspace under a linear map (matrix acting on columns).
Subspace image(const Matrix& m, const Subspace& s);

}  // namespace leibniz
