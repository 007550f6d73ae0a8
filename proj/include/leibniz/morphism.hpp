#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/centralizer.hpp"

namespace leibniz {

/// Linear map given by a target_dim x source_dim matrix acting on columns.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(Matrix m) : m_(std::move(m)) {}

    const Matrix& matrix() const noexcept { return m_; }
    std::size_t source_dim() const noexcept { return m_.cols(); }
    std::size_t target_dim() const noexcept { return m_.rows(); }

    Vector operator()(const Vector& x) const { return m_ * x; }

private:
    Matrix m_;
};

enum class MorphismKind { not_morphism, morphism, isomorphism };

struct MorphismResult {
    MorphismKind kind = MorphismKind::not_morphism;
    /// On not_morphism: basis pair (i, j) with f([e_i,e_j]) != [f e_i, f e_j].
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    Vector image_of_bracket;
    Vector bracket_of_images;
};

MorphismResult morphism_check(const LinearMap& f, const LeibnizAlgebra& L1, const LeibnizAlgebra& L2);

/// f(C_{L1}(x)) == C_{L2}(f x) for every x in xs. Throws NotIsomorphism.
bool centralizer_transport_check(const LinearMap& f, const LeibnizAlgebra& L1, const LeibnizAlgebra& L2,
                                 const std::vector<Vector>& xs);

/// Finite group given extensionally by its matrices psi_g and multiplication table.
struct FiniteGroupAction {
    std::vector<Matrix> elements;
    std::size_t identity_index = 0;
    /// table[i][j] = index of elements[i] * elements[j].
    std::vector<std::vector<std::size_t>> table;

    std::size_t order() const noexcept { return elements.size(); }

    /// Derives identity and table from the matrices; throws InvalidAction if the
    /// set has no identity or is not closed under products.
    static FiniteGroupAction from_elements(std::vector<Matrix> elements);
};

struct ActionViolation {
    int condition = 0;
    std::size_t g = 0;
    std::size_t h = 0;
    /// Basis indices for condition 4.
    std::size_t i = 0;
    std::size_t j = 0;
    std::string detail;
};

struct ActionReport {
    /// Index 0..3 for conditions 1..4.
    bool conditions[4] = {true, true, true, true};
    std::vector<ActionViolation> violations;

    bool pass() const noexcept { return conditions[0] && conditions[1] && conditions[2] && conditions[3]; }
};

ActionReport validate_action(const LeibnizAlgebra& L, const FiniteGroupAction& action);

/// g C_L(x) == C_L(g x). Throws InvalidAction if the action fails validation.
bool centralizer_action_map(const LeibnizAlgebra& L, const FiniteGroupAction& action, std::size_t g, const Vector& x);

/// Every g a is again a CL-element on the selection. Throws InvalidAction, or
/// PreconditionError when `a` is not itself a CL-element on the selection.
bool action_cl_preservation(const LeibnizAlgebra& L, const FiniteGroupAction& action, const Vector& a,
                            const XSelection& sel);

struct EquivariantResult {
    bool equivariant = true;
    std::optional<std::size_t> witness_g;
    explicit operator bool() const noexcept { return equivariant; }
};

/// f psi_g == psi_g f for every group element.
EquivariantResult equivariant_check(const LinearMap& f, const FiniteGroupAction& action);

}  // namespace leibniz
