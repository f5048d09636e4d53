#pragma once

// Hopf algebras given by structure constants.
//
// e_i e_j = sum_k mult[i*dim+j][k] e_k
// Delta e_i = sum_{j,k} comult[i][j*dim+k] e_j (x) e_k
//
// A grading, when present, assigns a degree to every basis element and a
// cutoff N. Only degrees <= N are stored; products landing above N are
// dropped. All identities are then checked on tuples of total degree <= N,
// where truncation cannot interfere.

#include "hopfdoubles/exactlin.hpp"
#include "hopfdoubles/report.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hopfdoubles {

struct Grading {
    std::vector<int> degree;
    int cutoff = 0;

    friend bool operator==(const Grading&, const Grading&) = default;
};

/// An associative unital algebra by structure constants.
struct Algebra {
    Field field;
    std::vector<std::string> basis;
    std::vector<SparseVec> mult;
    SparseVec unit;
    std::optional<Grading> grading;

    std::size_t dim() const noexcept { return basis.size(); }
    const SparseVec& product(std::size_t i, std::size_t j) const { return mult[i * dim() + j]; }
    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
    SparseVec basis_vector(std::size_t i) const { return SparseVec::unit_vector(field, dim(), i); }
    SparseVec zero() const { return SparseVec(field, dim()); }

    int degree(std::size_t i) const { return grading ? grading->degree[i] : 0; }
    /// True unless the tuple's total degree exceeds the cutoff.
    bool admissible(std::span<const std::size_t> idx) const;
    /// Throws DimensionMismatch on malformed tables.
    void validate() const;
};

/// A Hopf algebra (or a bialgebra, when bialgebra_only is set and the
/// antipode is absent).
struct HopfData : Algebra {
    std::vector<SparseVec> comult;
    SparseVec counit;
    LinearMap antipode;
    bool bialgebra_only = false;

    SparseVec coproduct(const SparseVec& a) const;
    Scalar counit_of(const SparseVec& a) const;
    void validate() const;
};

/// Coefficientwise equality of all structure constants (names ignored).
bool same_structure(const HopfData& a, const HopfData& b);
bool same_structure(const Algebra& a, const Algebra& b);

/// Product in A (x) B of two tensors, factorwise.
SparseVec multiply_tensor(const Algebra& a, const Algebra& b, const SparseVec& x, const SparseVec& y);

/// (Delta (x) id) o Delta, checked equal to (id (x) Delta) o Delta.
/// Throws AxiomViolation if the two association orders disagree.
SparseVec delta_square(const HopfData& h, const SparseVec& v);

/// Delta^t e_i = sum comult[i][k*dim+j] e_j (x) e_k
SparseVec swap_tensor(const SparseVec& t, std::size_t d1, std::size_t d2);

/// One report per axiom: associativity, unit, coassociativity, counit,
/// bialgebra, antipode, antipode-antihom, antipode-anticohom.
std::vector<VerificationReport> check_hopf_axioms(const HopfData& h);

HopfData dual_hopf(const HopfData& h);
/// The opposite multiplication u.v = vu; antipode s^{-1}, or bialgebra-only.
HopfData opposite_algebra(const HopfData& h);
/// The transposed diagonal; antipode s^{-1}, or bialgebra-only.
HopfData coopposite(const HopfData& h);
/// Componentwise structure with the middle swap in the coproduct. Graded
/// factors give a graded product restricted to total degree <= min cutoff.
HopfData tensor_hopf(const HopfData& a, const HopfData& b);
/// The factor index pairs of tensor_hopf(a, b), in its basis order.
std::vector<std::pair<std::size_t, std::size_t>> tensor_basis_pairs(const HopfData& a, const HopfData& b);

/// s^k; k < 0 needs an invertible antipode (NonInvertibleAntipode).
LinearMap antipode_power(const HopfData& h, int k);

/// Left and right multiplication operators.
LinearMap left_multiplication(const Algebra& a, const SparseVec& x);
LinearMap right_multiplication(const Algebra& a, const SparseVec& x);

bool is_commutative(const Algebra& a);
bool is_cocommutative(const HopfData& h);

/// Solves m o (s (x) id) o Delta = eta o eps degree by degree. Requires a
/// connected grading whose degree-0 part is spanned by the unit.
LinearMap connected_antipode(const HopfData& h);

}  // namespace hopfdoubles
