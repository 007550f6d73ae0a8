#include "leibniz/morphism.hpp"

#include <utility>

namespace leibniz {

MorphismResult morphism_check(const LinearMap& f, const LeibnizAlgebra& L1, const LeibnizAlgebra& L2) {
    if (f.source_dim() != L1.dim() || f.target_dim() != L2.dim())
        throw DimensionMismatch("morphism dimensions do not match the algebras");
    MorphismResult r;
    const std::size_t n = L1.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = f(L1.table().product(i, j));
            Vector rhs = bracket(L2, f.matrix().column(i), f.matrix().column(j));
            if (lhs != rhs) {
                r.kind = MorphismKind::not_morphism;
                r.witness = std::make_pair(i, j);
                r.image_of_bracket = std::move(lhs);
                r.bracket_of_images = std::move(rhs);
                return r;
            }
        }
    const bool bijective = L1.dim() == L2.dim() && rank(f.matrix()) == n;
    r.kind = bijective ? MorphismKind::isomorphism : MorphismKind::morphism;
    return r;
}

bool centralizer_transport_check(const LinearMap& f, const LeibnizAlgebra& L1, const LeibnizAlgebra& L2,
                                 const std::vector<Vector>& xs) {
    if (morphism_check(f, L1, L2).kind != MorphismKind::isomorphism)
        throw NotIsomorphism("centralizer transport requires an isomorphism");
    for (const auto& x : xs)
        if (image(f.matrix(), centralizer(L1, x)) != centralizer(L2, f(x))) return false;
    return true;
}

// ----------------------------------------------------------------- actions

FiniteGroupAction FiniteGroupAction::from_elements(std::vector<Matrix> elements) {
    FiniteGroupAction a;
    a.elements = std::move(elements);
    if (a.elements.empty()) throw InvalidAction("group has no elements");
    const std::size_t n = a.elements.front().rows();
    const Field f = a.elements.front().field();
    const Matrix id = Matrix::identity(n, f);
    bool found = false;
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
        if (a.elements[i].rows() != n || a.elements[i].cols() != n)
            throw InvalidAction("group element " + std::to_string(i) + " is not " + std::to_string(n) + "x" +
                                std::to_string(n));
        if (!found && a.elements[i] == id) {
            a.identity_index = i;
            found = true;
        }
    }
    if (!found) throw InvalidAction("identity matrix missing from the group");
    a.table.assign(a.elements.size(), std::vector<std::size_t>(a.elements.size(), 0));
    for (std::size_t i = 0; i < a.elements.size(); ++i)
        for (std::size_t j = 0; j < a.elements.size(); ++j) {
            const Matrix prod = a.elements[i] * a.elements[j];
            std::size_t k = 0;
            while (k < a.elements.size() && a.elements[k] != prod) ++k;
            if (k == a.elements.size())
                throw InvalidAction("not closed: product of elements " + std::to_string(i) + " and " +
                                    std::to_string(j) + " is not in the group");
            a.table[i][j] = k;
        }
    return a;
}

ActionReport validate_action(const LeibnizAlgebra& L, const FiniteGroupAction& action) {
    ActionReport rep;
    const std::size_t n = L.dim();
    const std::size_t m = action.order();
    // (1) linearity: every element is an n x n matrix over the algebra's field.
    for (std::size_t g = 0; g < m; ++g) {
        const Matrix& M = action.elements[g];
        if (M.rows() != n || M.cols() != n || M.field() != L.field()) {
            rep.conditions[0] = false;
            rep.violations.push_back({1, g, 0, 0, 0, "element is not an n x n matrix over the algebra's field"});
        }
    }
    if (!rep.conditions[0]) {
        rep.conditions[1] = rep.conditions[2] = rep.conditions[3] = false;
        return rep;
    }
    // (2) identity.
    if (action.identity_index >= m || action.elements[action.identity_index] != Matrix::identity(n, L.field())) {
        rep.conditions[1] = false;
        rep.violations.push_back({2, action.identity_index, 0, 0, 0, "identity element does not act as identity"});
    }
    // (3) compatibility with the multiplication table.
    if (action.table.size() != m) {
        rep.conditions[2] = false;
        rep.violations.push_back({3, 0, 0, 0, 0, "multiplication table has wrong size"});
    } else {
        for (std::size_t g = 0; g < m && rep.conditions[2]; ++g) {
            if (action.table[g].size() != m) {
                rep.conditions[2] = false;
                rep.violations.push_back({3, g, 0, 0, 0, "multiplication table row has wrong size"});
                break;
            }
            for (std::size_t h = 0; h < m; ++h) {
                const std::size_t k = action.table[g][h];
                if (k >= m || action.elements[g] * action.elements[h] != action.elements[k]) {
                    rep.conditions[2] = false;
                    rep.violations.push_back(
                        {3, g, h, 0, 0, "psi_g psi_h != psi_(gh) for table entry " + std::to_string(k)});
                    break;
                }
            }
        }
    }
    // (4) each psi_g is an automorphism.
    for (std::size_t g = 0; g < m; ++g) {
        const MorphismResult r = morphism_check(LinearMap(action.elements[g]), L, L);
        if (r.kind == MorphismKind::isomorphism) continue;
        rep.conditions[3] = false;
        if (r.witness)
            rep.violations.push_back({4, g, 0, r.witness->first, r.witness->second,
                                      "g[e_i,e_j] = " + r.image_of_bracket.to_string() +
                                          " but [g e_i, g e_j] = " + r.bracket_of_images.to_string()});
        else
            rep.violations.push_back({4, g, 0, 0, 0, "element is not invertible"});
    }
    return rep;
}

namespace {

void require_valid(const LeibnizAlgebra& L, const FiniteGroupAction& action) {
    if (!validate_action(L, action).pass()) throw InvalidAction("group action fails validation");
}

}  // namespace

bool centralizer_action_map(const LeibnizAlgebra& L, const FiniteGroupAction& action, std::size_t g, const Vector& x) {
    require_valid(L, action);
    if (g >= action.order()) throw InvalidAction("group element index out of range");
    const Matrix& psi = action.elements[g];
    const Subspace img = image(psi, centralizer(L, x));
    const Subspace target = centralizer(L, psi * x);
    return is_subset(img, target) && img == target;
}

bool action_cl_preservation(const LeibnizAlgebra& L, const FiniteGroupAction& action, const Vector& a,
                            const XSelection& sel) {
    require_valid(L, action);
    if (!cl_element_check(L, a, sel).pass)
        throw PreconditionError("element " + a.to_string() + " is not a CL-element on selection " + sel.describe());
    for (const auto& psi : action.elements)
        if (!cl_element_check(L, psi * a, sel).pass) return false;
    return true;
}

EquivariantResult equivariant_check(const LinearMap& f, const FiniteGroupAction& action) {
    const Matrix& F = f.matrix();
    if (F.rows() != F.cols()) throw DimensionMismatch("equivariant map must be an endomorphism");
    EquivariantResult r;
    for (std::size_t g = 0; g < action.order(); ++g) {
        const Matrix& psi = action.elements[g];
        if (psi.rows() != F.rows()) throw DimensionMismatch("group element and map dimensions differ");
        if (F * psi != psi * F) {
            r.equivariant = false;
            r.witness_g = g;
            return r;
        }
    }
    return r;
}

}  // namespace leibniz
