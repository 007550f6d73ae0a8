#include "leibniz/algebra.hpp"

#include <utility>

namespace leibniz {

// ---------------------------------------------------------- StructureTable

StructureTable::StructureTable(std::size_t dim, Field field)
    : n_(dim), field_(field), c_(dim * dim * dim, Scalar::zero(field)) {}

void StructureTable::set(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
    if (i >= n_ || j >= n_ || k >= n_)
        throw IndexOutOfRange("structure constant index out of range for dimension " + std::to_string(n_));
    if (value.field() != field_) throw MixedFieldError();
    c_[(i * n_ + j) * n_ + k] = std::move(value);
}

Vector StructureTable::product(std::size_t i, std::size_t j) const {
    Vector v(n_, field_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = at(i, j, k);
    return v;
}

void StructureTable::set_product(std::size_t i, std::size_t j, const Vector& value) {
    if (value.size() != n_) throw DimensionMismatch("product vector length");
    for (std::size_t k = 0; k < n_; ++k) set(i, j, k, value[k]);
}

bool StructureTable::is_zero() const noexcept {
    for (const auto& s : c_)
        if (!s.is_zero()) return false;
    return true;
}

bool StructureTable::is_antisymmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (!(at(i, j, k) + at(j, i, k)).is_zero()) return false;
    return true;
}

// ----------------------------------------------------------------- bracket

Vector bracket(const StructureTable& t, const Vector& x, const Vector& y) {
    const std::size_t n = t.dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket operand length");
    if (x.field() != t.field() || y.field() != t.field()) throw MixedFieldError();
    Vector z(n, t.field());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy;
            bool have = false;
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = t.at(i, j, k);
                if (c.is_zero()) continue;
                if (!have) {
                    xy = x[i] * y[j];
                    have = true;
                }
                z[k] += xy * c;
            }
        }
    }
    return z;
}

Matrix left_multiplication(const StructureTable& t, const Vector& x) {
    const std::size_t n = t.dim();
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(bracket(t, x, Vector::basis(n, j, t.field())));
    return Matrix::from_columns(cols, n, t.field());
}

Matrix right_multiplication(const StructureTable& t, const Vector& x) {
    const std::size_t n = t.dim();
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(bracket(t, Vector::basis(n, i, t.field()), x));
    return Matrix::from_columns(cols, n, t.field());
}

// ---------------------------------------------------------------- validate

std::optional<LeibnizWitness> validate_leibniz(const StructureTable& t) {
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector ei = Vector::basis(n, i, t.field());
                const Vector lhs = bracket(t, ei, t.product(j, k));
                const Vector rhs = bracket(t, t.product(i, j), Vector::basis(n, k, t.field())) -
                                   bracket(t, t.product(i, k), Vector::basis(n, j, t.field()));
                if (lhs != rhs) return LeibnizWitness{i, j, k, lhs, rhs};
            }
    return std::nullopt;
}

LeibnizIdentityViolation::LeibnizIdentityViolation(LeibnizWitness w)
    : Error("Leibniz identity fails on basis triple (e" + std::to_string(w.i + 1) + ", e" + std::to_string(w.j + 1) +
            ", e" + std::to_string(w.k + 1) + "): lhs " + w.lhs.to_string() + " != rhs " + w.rhs.to_string()),
      w_(std::move(w)) {}

LeibnizAlgebra LeibnizAlgebra::from_table(StructureTable t) {
    if (auto w = validate_leibniz(t)) throw LeibnizIdentityViolation(std::move(*w));
    LeibnizAlgebra L;
    L.t_ = std::move(t);
    L.checked_ = true;
    return L;
}

LeibnizAlgebra LeibnizAlgebra::unchecked(StructureTable t) {
    LeibnizAlgebra L;
    L.t_ = std::move(t);
    return L;
}

std::vector<Vector> LeibnizAlgebra::basis() const {
    std::vector<Vector> b;
    for (std::size_t i = 0; i < dim(); ++i) b.push_back(basis_vector(i));
    return b;
}

// ------------------------------------------------------ spans and ideals

Subspace bracket_span(const LeibnizAlgebra& L, const Subspace& U, const Subspace& V) {
    if (U.ambient_dim() != L.dim() || V.ambient_dim() != L.dim())
        throw DimensionMismatch("bracket_span ambient dimension");
    std::vector<Vector> products;
    for (const auto& u : U.basis())
        for (const auto& v : V.basis()) {
            Vector p = bracket(L, u, v);
            if (!p.is_zero()) products.push_back(std::move(p));
        }
    return Subspace::span(products, L.dim(), L.field());
}

bool subspace_role(const LeibnizAlgebra& L, const Subspace& U, SubspaceRole role) {
    const Subspace all = L.whole();
    switch (role) {
        case SubspaceRole::subalgebra:
            return is_subset(bracket_span(L, U, U), U);
        case SubspaceRole::left_ideal:
            return is_subset(bracket_span(L, all, U), U);
        case SubspaceRole::right_ideal:
            return is_subset(bracket_span(L, U, all), U);
        case SubspaceRole::ideal:
            return is_subset(bracket_span(L, all, U), U) && is_subset(bracket_span(L, U, all), U);
    }
    return false;
}

// ------------------------------------------------------------------ series

namespace {

template <class Next>
SeriesResult run_series(const LeibnizAlgebra& L, SeriesVerdict success, Next next) {
    SeriesResult r;
    r.terms.push_back(L.whole());
    for (;;) {
        const Subspace& last = r.terms.back();
        if (last.is_zero()) {
            r.stabilized_at = r.terms.size();
            r.verdict = success;
            r.steps = r.terms.size();
            return r;
        }
        Subspace nxt = next(last);
        const bool same = nxt == last;
        r.terms.push_back(std::move(nxt));
        if (same) {
            r.stabilized_at = r.terms.size();
            r.verdict = SeriesVerdict::neither;
            r.steps = 0;
            return r;
        }
    }
}

}  // namespace

SeriesResult lower_central_series(const LeibnizAlgebra& L) {
    const Subspace all = L.whole();
    return run_series(L, SeriesVerdict::nilpotent, [&](const Subspace& s) { return bracket_span(L, s, all); });
}

SeriesResult derived_series(const LeibnizAlgebra& L) {
    return run_series(L, SeriesVerdict::solvable, [&](const Subspace& s) { return bracket_span(L, s, s); });
}

Subspace squares_ideal(const LeibnizAlgebra& L) {
    const std::size_t n = L.dim();
    const StructureTable& t = L.table();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(t.product(i, i));
        for (std::size_t j = i + 1; j < n; ++j) gens.push_back(t.product(i, j) + t.product(j, i));
    }
    Subspace I = Subspace::span(gens, n, L.field());
    const Subspace all = L.whole();
    for (;;) {
        Subspace grown = subspace_sum(I, subspace_sum(bracket_span(L, I, all), bracket_span(L, all, I)));
        if (grown == I) return I;
        I = std::move(grown);
    }
}

// --------------------------------------------------------- constructions

LeibnizAlgebra derived_bracket(const StructureTable& lie, const Matrix& d) {
    const std::size_t n = lie.dim();
    if (d.rows() != n || d.cols() != n) throw DimensionMismatch("differential must be n x n");
    if (d.field() != lie.field()) throw MixedFieldError();
    auto pair_name = [](std::size_t i, std::size_t j) {
        return "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")";
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (lie.product(i, j) != -lie.product(j, i))
                throw NotLie("bracket is not antisymmetric on " + pair_name(i, j));
    if (auto w = validate_leibniz(lie))
        throw NotLie("Jacobi identity fails on basis triple (e" + std::to_string(w->i + 1) + ", e" +
                     std::to_string(w->j + 1) + ", e" + std::to_string(w->k + 1) + ")");
    const Matrix d2 = d * d;
    for (std::size_t j = 0; j < n; ++j)
        if (!d2.column(j).is_zero()) throw NotDifferential("d^2 e" + std::to_string(j + 1) + " != 0");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector ei = Vector::basis(n, i, lie.field());
            const Vector ej = Vector::basis(n, j, lie.field());
            const Vector lhs = d * lie.product(i, j);
            const Vector rhs = bracket(lie, d * ei, ej) + bracket(lie, ei, d * ej);
            if (lhs != rhs) throw NotDerivation("d[x,y] != [dx,y] + [x,dy] on " + pair_name(i, j));
        }
    StructureTable out(n, lie.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.set_product(i, j, bracket(lie, Vector::basis(n, i, lie.field()), d.column(j)));
    return LeibnizAlgebra::from_table(std::move(out));
}

LeibnizAlgebra transport(const LeibnizAlgebra& L, const Matrix& P) {
    const std::size_t n = L.dim();
    if (P.rows() != n || P.cols() != n) throw DimensionMismatch("transport matrix must be n x n");
    const Matrix Pinv = inverse(P);
    std::vector<Vector> pre;
    for (std::size_t i = 0; i < n; ++i) pre.push_back(Pinv.column(i));
    StructureTable out(n, L.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, P * bracket(L, pre[i], pre[j]));
    if (L.leibniz_checked()) return LeibnizAlgebra::from_table(std::move(out));
    return LeibnizAlgebra::unchecked(std::move(out));
}

}  // namespace leibniz
