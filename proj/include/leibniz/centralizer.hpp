#pragma once

/**
 * @file centralizer.hpp
 * @brief Centralizers, CL conditions and CL-elements.
 *
 * The CL conditions quantify over every x in L. Centralizers are not linear
 * in x, so checks run over an explicit, recorded selection of x values
 * (XSelection). A pass means "verified on this selection", nothing more.
 *
 * Condition numbering used in verdicts and reports:
 *   1: [[x, L], C_L(x)] = 0
 *   2: [[L, x], C_L(x)] = 0
 *   3: [C_L(x), [L, x]] = 0
 * Left CL at x is 1 and 2, right CL at x is 1 and 3.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class CentralizerKind { left, right, two_sided };

/// right: {y : [x,y] = 0}; left: {y : [y,x] = 0}; two_sided: both.
Subspace centralizer(const LeibnizAlgebra& L, const Vector& x, CentralizerKind kind = CentralizerKind::two_sided);

/// Regression oracle for the lemma that C_L(x) is always a subalgebra.
bool centralizer_is_subalgebra(const LeibnizAlgebra& L, const Vector& x);

inline constexpr std::uint64_t kDefaultSeed = 0x4C45494231393939ULL;

class XSelection {
public:
    enum class Mode { basis, basis_plus_pairs, sampled, explicit_list };

    static XSelection basis() { return XSelection(Mode::basis); }
    static XSelection basis_plus_pairs() { return XSelection(Mode::basis_plus_pairs); }
    /// Random vectors with integer coordinates in [-9, 9]; never the zero vector.
    static XSelection sampled(std::size_t count, std::uint64_t seed = kDefaultSeed);
    static XSelection explicit_list(std::vector<Vector> xs);

    Mode mode() const noexcept { return mode_; }
    std::size_t count() const noexcept { return count_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<Vector>& explicit_vectors() const noexcept { return xs_; }

    /// Deterministic list of x values for an algebra of dimension n over `field`.
    std::vector<Vector> realize(std::size_t n, Field field) const;

    /// "basis", "pairs", "sample(200, seed=0x...)" or "explicit(k)".
    std::string describe() const;

private:
    explicit XSelection(Mode m) : mode_(m) {}
    Mode mode_;
    std::size_t count_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<Vector> xs_;
};

/// Random vector with coordinates (draw mod 19) - 9 from a mt19937_64 stream.
std::vector<Vector> sample_vectors(std::size_t n, Field field, std::size_t count, std::uint64_t seed);

struct ClConditions {
    bool c1 = true;
    bool c2 = true;
    bool c3 = true;

    bool left() const noexcept { return c1 && c2; }
    bool right() const noexcept { return c1 && c3; }
    bool both() const noexcept { return c1 && c2 && c3; }
};

ClConditions cl_check_at(const LeibnizAlgebra& L, const Vector& x);

enum class ClFlavor { left, right, two_sided };

struct ClWitness {
    Vector x;
    int condition = 0;
    Vector a;
    Vector y;
    /// The nonzero bracket: [[x,a],y], [[a,x],y] or [y,[a,x]].
    Vector value;
};

struct ClVerdict {
    bool pass = true;
    std::optional<ClWitness> witness;
    XSelection selection = XSelection::basis();
    std::size_t checked = 0;
};

/// Evaluates the bracket a witness names; nonzero for a genuine witness.
Vector evaluate_condition(const LeibnizAlgebra& L, int condition, const Vector& x, const Vector& a, const Vector& y);

ClVerdict is_cl(const LeibnizAlgebra& L, const XSelection& sel, ClFlavor flavor = ClFlavor::two_sided);

struct ClElementWitness {
    Vector x;
    int condition = 0;
    Vector y;
    Vector value;
};

struct ClElementReport {
    Vector element;
    bool pass = true;
    std::optional<ClElementWitness> witness;
    XSelection selection = XSelection::basis();
};

ClElementReport cl_element_check(const LeibnizAlgebra& L, const Vector& a, const XSelection& sel);

struct ClElementSubspace {
    Subspace elements;
    bool closure_check = false;
    XSelection selection = XSelection::basis();
};

/// The conditions are linear in a, so the CL-elements on the selection form
/// the null space of the stacked condition matrix.
ClElementSubspace cl_element_subspace(const LeibnizAlgebra& L, const XSelection& sel);

}  // namespace leibniz
