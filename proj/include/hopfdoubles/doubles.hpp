#pragma once

// Algebras on tensor-product spaces built from straightening rules: the
// O-doubles (smash products), the full double (M (x) M^1)X, the Drinfeld
// double, and the morphisms between them.
//
// A DoubleAlgebra on V (x) W always uses the flat basis index i*dim(W)+j,
// elements being normal-ordered: the first factor to the left. For graded
// factors the basis is the full rectangle and each factor keeps its own
// cutoff; identities are checked on tuples whose first-factor degrees and
// second-factor degrees each add up to at most the cutoff.

#include "hopfdoubles/actions.hpp"
#include "hopfdoubles/hopf.hpp"
#include "hopfdoubles/instances.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfdoubles {

struct DoubleAlgebra {
    std::string recipe;
    Algebra first;   // left tensor factor
    Algebra second;  // right tensor factor
    Algebra algebra; // derived multiplication on first (x) second
    /// (1 (x) f_j)(e_i (x) 1) at index j*dim(first)+i.
    std::vector<SparseVec> straightening;
    /// Present for the Drinfeld double.
    std::optional<HopfData> hopf;

    std::size_t dim() const noexcept { return algebra.dim(); }
    SparseVec pure(const SparseVec& a, const SparseVec& b) const { return tensor(a, b); }
    SparseVec embed_first(const SparseVec& a) const { return tensor(a, second.unit); }
    SparseVec embed_second(const SparseVec& b) const { return tensor(first.unit, b); }
    bool admissible(std::span<const std::size_t> idx) const;
};

struct BuildOptions {
    /// Skip the Milnor / representation precondition.
    bool force = false;
};

/// M # H on M (x) H: (u (x) x)(v (x) y) = sum u rho(x')(v) (x) x'' y.
DoubleAlgebra left_smash(const Algebra& m, const HopfData& h, const Representation& rho, std::string recipe);
/// H # M on H (x) M: (h (x) m)(h2 (x) m2) = sum h h2' (x) rho(h2'')(m) m2, rho a right action.
DoubleAlgebra right_smash(const HopfData& h, const Algebra& m, const Representation& rho, std::string recipe);

/// The O-double of a Milnor module. Left: on M (x) X; right: on X (x) M.
/// Throws MilnorCheckFailed unless rho is a representation of the declared
/// side and Milnor over x (skipped with options.force).
DoubleAlgebra build_o_double(const ModuleAlgebra& m, const HopfData& x, Side side, BuildOptions options = {});

/// (M (x) M^1) X with (u(x)v(x)x)(u'(x)v'(x)y) = sum u rho1(x1)(u') (x) rho2(x3)(v') v (x) x2 y.
/// Throws MilnorCheckFailed unless rho1 and rho2 are Milnor over x.
DoubleAlgebra build_full_double(const Algebra& m, const HopfData& x, const Representation& rho1,
                                const Representation& rho2, BuildOptions options = {});

/// D(X) on X* (x) X with x u = sum [R*_{x1} L*_{s^{-1} x3}(u)] x2 and
/// Delta(u x) = Delta^t(u) Delta(x). The result carries the bialgebra (and
/// antipode) in `hopf`. Throws NonInvertibleAntipode.
DoubleAlgebra build_drinfeld_double(const HopfData& x);
/// Associativity, coassociativity, counit and the bialgebra property.
std::vector<VerificationReport> check_drinfeld_axioms(const DoubleAlgebra& d);

/// (delta_a (x) g)(delta_b (x) h) = [a = g b g^{-1}] delta_a (x) gh, built directly.
DoubleAlgebra oracle_group_double(const CayleyTable& g, Field field = Field::rationals());

/// Coefficientwise comparison of two multiplication tensors on the same space.
VerificationReport compare_multiplication(const std::string& name, const DoubleAlgebra& a, const DoubleAlgebra& b);
VerificationReport check_associativity(const DoubleAlgebra& d);
/// Dimension of the center, by solving the commutator equations.
std::size_t center_dimension(const DoubleAlgebra& d);

// ---------------------------------------------------------------- R element

struct RElement {
    SparseVec tensor;  // in X* (x) X
    std::vector<std::vector<std::string>> factor_names;
};

/// sum e^i (x) e_i for the delta-dual basis.
RElement canonical_R(const HopfData& x);
/// R in the basis f_a (x) e_b of X* (x) X, for a basis f of X* given as
/// delta-coordinates. Throws SingularPairing.
RElement canonical_R_in(const HopfData& x, const std::vector<SparseVec>& dual_family,
                        std::vector<std::string> family_names);
/// sum_i (e^i, e_j) e_i, which must be e_j.
SparseVec contract_R(const HopfData& x, const RElement& r, std::size_t j);

/// Psi*(x u) = Delta(x) R Delta(u) for every basis element of A* = X X*,
/// and Psi*(1) = R.
VerificationReport verify_lemma2(const HopfData& x);

/// Both clauses of Lemma 3 as one report (notes record each clause).
VerificationReport verify_lemma3(const HopfData& x, int k);
/// Clause 1 with the parity of the second construction shifted; must fail.
VerificationReport lemma3_parity_control(const HopfData& x, int k);

// ---------------------------------------------------------------- morphisms

enum class MorphismKind { Homomorphism, Antihomomorphism };

struct AlgebraMorphism {
    std::string name;
    std::shared_ptr<const DoubleAlgebra> source;
    std::shared_ptr<const DoubleAlgebra> target;
    LinearMap matrix;
    MorphismKind kind = MorphismKind::Homomorphism;
    VerificationReport verified;
};

/// phi(1) = 1 and phi(ab) = phi(a)phi(b) (or phi(b)phi(a)) on admissible basis pairs.
VerificationReport check_morphism(const std::string& name, const LinearMap& phi, const DoubleAlgebra& source,
                                  const DoubleAlgebra& target, MorphismKind kind);

struct Lemma4Arrows {
    AlgebraMorphism first;   // X*X -> X*X^t
    AlgebraMorphism second;  // X*X^t -> X*X
    /// The second arrow with the target action R*_{s^{2k1+1}x} taken literally.
    VerificationReport literal_second;
};

/// u x -> s^{2m+1}(x) s^{2l+1}(u), normal-ordered in the target.
/// Throws ConstraintViolated unless m+l+2 = k-n and k1-n = -(l+m), unless forced.
Lemma4Arrows lemma4_antihom(const HopfData& x, int m, int l, int k, int n, int k1, BuildOptions options = {});

struct Theorem1Maps {
    AlgebraMorphism a_forward, a_backward;
    VerificationReport a_composite;
    AlgebraMorphism b_first, b_second;
    VerificationReport b_composite;
    AlgebraMorphism c;
    VerificationReport c_invertible;

    std::vector<VerificationReport> reports() const;
};

Theorem1Maps theorem1_maps(const HopfData& x);

// ---------------------------------------------------------------- representations of X*X

struct StandardReps {
    Representation p_rep;  // on X*: u -> L_u, x -> R*_x (left)
    Representation x_rep;  // on X:  x -> R_x, u -> L*_u (right)
    VerificationReport verified;
};

/// d must be the O-double X*X with rho = R*_x. Throws RecipeMismatch.
StandardReps standard_reps(const DoubleAlgebra& d, const HopfData& x);

/// Two reports: the x-representation against the transpose of the
/// p-representation, and the same with the p-side precomposed with the
/// Theorem 1(a) antiisomorphism (noted INTERPRETATION-FAIL when it fails).
std::vector<VerificationReport> check_fourier_adjointness(const DoubleAlgebra& d, const HopfData& x);

/// a(uv) = a(u)a(v) on admissible basis pairs and a(1) = 1.
VerificationReport check_multiplicative(const LinearMap& a, const Algebra& source, const Algebra& target);
VerificationReport check_multiplicative(const LinearMap& a, const Algebra& m);
/// The ground field as a one-dimensional algebra.
Algebra ground_algebra(const Field& f);

}  // namespace hopfdoubles
