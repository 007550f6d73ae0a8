#include "leibniz/centralizer.hpp"

#include <cstdio>
#include <random>
#include <utility>

namespace leibniz {

Subspace centralizer(const LeibnizAlgebra& L, const Vector& x, CentralizerKind kind) {
    if (x.size() != L.dim()) throw DimensionMismatch("centralizer element length");
    switch (kind) {
        case CentralizerKind::right:
            return null_space(left_multiplication(L.table(), x));
        case CentralizerKind::left:
            return null_space(right_multiplication(L.table(), x));
        case CentralizerKind::two_sided:
            return subspace_intersect(null_space(left_multiplication(L.table(), x)),
                                      null_space(right_multiplication(L.table(), x)));
    }
    return L.none();
}

bool centralizer_is_subalgebra(const LeibnizAlgebra& L, const Vector& x) {
    return subspace_role(L, centralizer(L, x), SubspaceRole::subalgebra);
}

// --------------------------------------------------------------- selection

XSelection XSelection::sampled(std::size_t count, std::uint64_t seed) {
    if (count == 0) throw PreconditionError("sampled selection needs at least one vector");
    XSelection s(Mode::sampled);
    s.count_ = count;
    s.seed_ = seed;
    return s;
}

XSelection XSelection::explicit_list(std::vector<Vector> xs) {
    XSelection s(Mode::explicit_list);
    s.count_ = xs.size();
    s.xs_ = std::move(xs);
    return s;
}

std::vector<Vector> sample_vectors(std::size_t n, Field field, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Vector> out;
    out.reserve(count);
    while (out.size() < count) {
        Vector v(n, field);
        for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::from_int(static_cast<long>(gen() % 19) - 9, field);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> XSelection::realize(std::size_t n, Field field) const {
    std::vector<Vector> xs;
    switch (mode_) {
        case Mode::basis:
        case Mode::basis_plus_pairs:
            for (std::size_t i = 0; i < n; ++i) xs.push_back(Vector::basis(n, i, field));
            if (mode_ == Mode::basis_plus_pairs)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        xs.push_back(Vector::basis(n, i, field) + Vector::basis(n, j, field));
            return xs;
        case Mode::sampled:
            return sample_vectors(n, field, count_, seed_);
        case Mode::explicit_list:
            for (const auto& v : xs_)
                if (v.size() != n) throw DimensionMismatch("explicit selection vector length");
            return xs_;
    }
    return xs;
}

std::string XSelection::describe() const {
    switch (mode_) {
        case Mode::basis:
            return "basis";
        case Mode::basis_plus_pairs:
            return "pairs";
        case Mode::sampled: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(seed_));
            return "sample(" + std::to_string(count_) + ", seed=0x" + buf + ")";
        }
        case Mode::explicit_list:
            return "explicit(" + std::to_string(xs_.size()) + ")";
    }
    return {};
}

// --------------------------------------------------------------- CL checks

ClConditions cl_check_at(const LeibnizAlgebra& L, const Vector& x) {
    const Subspace C = centralizer(L, x);
    const Subspace all = L.whole();
    const Subspace xL = bracket_span(L, Subspace::span({x}, L.dim(), L.field()), all);
    const Subspace Lx = bracket_span(L, all, Subspace::span({x}, L.dim(), L.field()));
    ClConditions c;
    c.c1 = bracket_span(L, xL, C).is_zero();
    c.c2 = bracket_span(L, Lx, C).is_zero();
    c.c3 = bracket_span(L, C, Lx).is_zero();
    return c;
}

Vector evaluate_condition(const LeibnizAlgebra& L, int condition, const Vector& x, const Vector& a, const Vector& y) {
    switch (condition) {
        case 1:
            return bracket(L, bracket(L, x, a), y);
        case 2:
            return bracket(L, bracket(L, a, x), y);
        case 3:
            return bracket(L, y, bracket(L, a, x));
        default:
            throw PreconditionError("condition must be 1, 2 or 3");
    }
}

namespace {

std::vector<int> conditions_for(ClFlavor f) {
    switch (f) {
        case ClFlavor::left:
            return {1, 2};
        case ClFlavor::right:
            return {1, 3};
        case ClFlavor::two_sided:
            break;
    }
    return {1, 2, 3};
}

}  // namespace

ClVerdict is_cl(const LeibnizAlgebra& L, const XSelection& sel, ClFlavor flavor) {
    ClVerdict v;
    v.selection = sel;
    const auto conds = conditions_for(flavor);
    const auto basis = L.basis();
    for (const auto& x : sel.realize(L.dim(), L.field())) {
        ++v.checked;
        const ClConditions at = cl_check_at(L, x);
        const bool ok = flavor == ClFlavor::left ? at.left() : (flavor == ClFlavor::right ? at.right() : at.both());
        if (ok) continue;
        // Locate the first (condition, a, y) in deterministic order.
        const Subspace C = centralizer(L, x);
        for (int c : conds)
            for (const auto& a : basis)
                for (const auto& y : C.basis()) {
                    Vector value = evaluate_condition(L, c, x, a, y);
                    if (!value.is_zero()) {
                        v.pass = false;
                        v.witness = ClWitness{x, c, a, y, std::move(value)};
                        return v;
                    }
                }
    }
    return v;
}

ClElementReport cl_element_check(const LeibnizAlgebra& L, const Vector& a, const XSelection& sel) {
    if (a.size() != L.dim()) throw DimensionMismatch("CL-element length");
    ClElementReport r;
    r.element = a;
    r.selection = sel;
    for (const auto& x : sel.realize(L.dim(), L.field())) {
        const Subspace C = centralizer(L, x);
        for (int c = 1; c <= 3; ++c)
            for (const auto& y : C.basis()) {
                Vector value = evaluate_condition(L, c, x, a, y);
                if (!value.is_zero()) {
                    r.pass = false;
                    r.witness = ClElementWitness{x, c, y, std::move(value)};
                    return r;
                }
            }
    }
    return r;
}

ClElementSubspace cl_element_subspace(const LeibnizAlgebra& L, const XSelection& sel) {
    const std::size_t n = L.dim();
    const auto basis = L.basis();
    // Each (x, y, condition) contributes n rows: coordinate k of the condition as a linear function of a.
    std::vector<Vector> rows;
    for (const auto& x : sel.realize(n, L.field())) {
        const Subspace C = centralizer(L, x);
        for (const auto& y : C.basis())
            for (int c = 1; c <= 3; ++c) {
                std::vector<Vector> cols;
                cols.reserve(n);
                for (const auto& e : basis) cols.push_back(evaluate_condition(L, c, x, e, y));
                for (std::size_t k = 0; k < n; ++k) {
                    Vector row(n, L.field());
                    bool nonzero = false;
                    for (std::size_t j = 0; j < n; ++j) {
                        row[j] = cols[j][k];
                        nonzero = nonzero || !row[j].is_zero();
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
    }
    ClElementSubspace out;
    out.selection = sel;
    out.elements = null_space(Matrix::from_rows(rows, n, L.field()));
    out.closure_check = subspace_role(L, out.elements, SubspaceRole::subalgebra);
    return out;
}

}  // namespace leibniz
