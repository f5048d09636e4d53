#pragma once

// The built-in instance zoo.

#include "hopfdoubles/actions.hpp"
#include "hopfdoubles/hopf.hpp"

#include <string>
#include <vector>

namespace hopfdoubles {

/// A finite group by its multiplication table; validated on construction.
class CayleyTable {
public:
    /// Throws NotAGroup unless the table is associative with identity and inverses.
    CayleyTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names);

    std::size_t order() const noexcept { return table_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t product(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    static CayleyTable cyclic(std::size_t n);
    static CayleyTable klein_four();
    static CayleyTable symmetric3();

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::string> names_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// k[G]: g group-like, s(g) = g^{-1}.
HopfData group_algebra(const CayleyTable& g, Field field = Field::rationals());
/// Functions on G in the delta basis; the dual of k[G].
HopfData function_hopf(const CayleyTable& g, Field field = Field::rationals());

/// Basis {1, g, x, gx}; g^2 = 1, x^2 = 0, xg = -gx; Delta x = x (x) 1 + g (x) x.
/// Throws BadCharacteristic in characteristic 2.
HopfData sweedler(Field field = Field::rationals());

/// k[x]/(x^p) over F_p with x primitive. Throws NotPrime.
HopfData binomial_modular(std::uint32_t p);
/// Q[x] truncated above degree n, x primitive of degree 1.
HopfData binomial_graded(int n);

/// The degree-truncated Faa di Bruno / Landweber-Novikov pair.
///
/// dual_x is Q[b_1..b_N] (deg b_i = i) with
///   Delta b_n = sum_{k=0}^{n} b_k (x) [t^{n+1}] b(t)^{k+1},  b(t) = t + sum b_i t^{i+1},
/// and x is its graded dual, whose basis S[...] is dual to the monomials in b.
struct LandweberNovikovPair {
    int cutoff = 0;
    HopfData dual_x;
    HopfData x;
    Representation action;  // R*_x of x on dual_x
    /// Parts of the partition indexing each basis monomial.
    std::vector<std::vector<int>> partitions;
};

LandweberNovikovPair landweber_novikov_pair(int n);

/// Named instances: group:C2, group:C3, group:C2xC2, group:S3, group:C<n>,
/// sweedler, binomial:p=<prime>, binomial:gradedN=<n>, landweber-novikov:N=<n>.
/// Throws UnknownInstance.
HopfData instance_by_name(const std::string& name);
std::vector<std::string> instance_names();

}  // namespace hopfdoubles
