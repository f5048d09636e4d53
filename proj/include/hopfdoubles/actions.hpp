#pragma once

// Representations of Hopf algebras on modules, the adjoint actions on the
// dual, and the Milnor (module-algebra) condition.
//
// Conventions used throughout the library:
//   (R*_x u)(a) = u(a x)        (L*_x u)(a) = u(x a)
//   (u v)(a)    = sum u(a') v(a'')
// With these, R*_{s^{2k}x} is a left representation of X, L*_{s^{2k}x} a
// right one, L*_{s^{2k+1}x} a left representation of X^t and R*_{s^{2k+1}x}
// a right one.

#include "hopfdoubles/hopf.hpp"

#include <string>
#include <vector>

namespace hopfdoubles {

enum class Side { Left, Right };

struct Representation {
    std::string recipe;
    Side side = Side::Left;
    Algebra acting;
    std::size_t module_dim = 0;
    std::vector<std::string> module_basis;
    std::vector<LinearMap> ops;  // ops[i] = rho(e_i)

    /// rho(x) for an arbitrary element x of the acting algebra.
    LinearMap act(const SparseVec& x) const;
    SparseVec apply(std::size_t i, const SparseVec& m) const { return ops[i].apply(m); }
};

/// An algebra M together with an action on it.
struct ModuleAlgebra {
    Algebra algebra;
    Representation action;
};

enum class AdjointVariant { RStar, LStar };

/// a -> L_a (left) or b -> R_b (right) on the algebra itself.
Representation regular_action(const HopfData& h, Side side);

/// x -> R*_{s^k x} or L*_{s^k x} on the dual space of h, with the side fixed
/// by the parity contract. k < 0 throws NonInvertibleAntipode when s is singular.
Representation adjoint_action(const HopfData& h, AdjointVariant variant, int k);

/// Adjoint actions of an arbitrary linear combination x (no antipode twist).
LinearMap r_star(const HopfData& h, const SparseVec& x);
LinearMap l_star(const HopfData& h, const SparseVec& x);

/// eps_{X*}(R*_x u): the pairing of u in X* with x in X.
Scalar canonical_pairing(const HopfData& h, const SparseVec& u, const SparseVec& x);

/// rho(1) = id and rho(xy) = rho(x)rho(y) (left) or rho(y)rho(x) (right).
VerificationReport check_representation(const Representation& rho);

/// rho1(x) rho2(y) = rho2(y) rho1(x) for all basis pairs.
VerificationReport check_commutation(const Representation& rho1, const Representation& rho2);

/// rho(x)(uv) = sum rho(x')(u) rho(x'')(v) with Delta of `over`, over all
/// basis triples (x, u, v) in lexicographic order.
VerificationReport check_milnor(const Representation& rho, const Algebra& module, const HopfData& over);
VerificationReport check_milnor(const ModuleAlgebra& m, const HopfData& over);

/// Lemma 1 clauses (a)-(d) and the commuting X (x) X^t structure (e).
std::vector<VerificationReport> verify_lemma1(const HopfData& x, int k);

/// (x (x) y) -> rho1(x) rho2(y) on the basis of tensor_hopf(a, b).
Representation product_action(const Representation& rho1, const Representation& rho2, const HopfData& a,
                              const HopfData& b);

/// x -> sum rho1(x') rho2(x''). Throws NonCommutingFactors.
Representation ad_action(const Representation& rho1, const Representation& rho2, const HopfData& x);

/// rho_x(uv) = sum [rho1(x') rho2(x''') u] rho_{x''}(v).
VerificationReport check_ad_leibniz(const Representation& rho1, const Representation& rho2,
                                    const HopfData& x, const Algebra& module);

/// Matrices as vectors, entry (i, j) at i*cols+j, for identity sweeps on operators.
SparseVec flatten(const LinearMap& m);

}  // namespace hopfdoubles
