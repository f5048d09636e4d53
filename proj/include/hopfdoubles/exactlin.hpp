#pragma once

// Exact scalars (Q or F_p) and sparse multilinear algebra over them.
//
// Everything here is a value type. Tensors in V(x)W are SparseVecs over the
// flattened index i*dim(W)+j, so a Tensor2 or Tensor3 is just a SparseVec
// whose dimension is the product of the factor dimensions.

#include "hopfdoubles/error.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hopfdoubles {

class Field;

/// An element of Q or of F_p. Rationals are kept as reduced fractions,
/// residues as integers in [0, p). The modulus travels with the value so that
/// mixing fields is caught instead of silently producing garbage.
class Scalar {
public:
    Scalar() = default;

    std::uint32_t modulus() const noexcept { return modulus_; }
    const mpq_class& value() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }

    /// "3/4", "-2" over Q; "2 mod 5" over F_5.
    std::string to_string() const;

private:
    friend class Field;
    Scalar(mpq_class value, std::uint32_t modulus);
    void reduce();
    void require_same_field(const Scalar& other) const;

    mpq_class value_{0};
    std::uint32_t modulus_ = 0;
};

/// The ground field: Q (characteristic 0) or F_p.
class Field {
public:
    enum class Kind { Rationals, PrimeField };

    Field() = default;
    static Field rationals() { return Field{}; }
    /// Throws NotPrime unless p is prime.
    static Field prime(std::uint32_t p);

    Kind kind() const noexcept { return modulus_ == 0 ? Kind::Rationals : Kind::PrimeField; }
    std::uint32_t characteristic() const noexcept { return modulus_; }

    Scalar zero() const { return Scalar(mpq_class(0), modulus_); }
    Scalar one() const { return Scalar(mpq_class(1), modulus_); }
    Scalar from_int(long n) const { return Scalar(mpq_class(n), modulus_); }
    /// num/den; den must be invertible in the field.
    Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

    /// Inverse of Scalar::to_string. Throws ParseError.
    Scalar parse(std::string_view text) const;
    /// "Q" or "F_p".
    std::string name() const;
    static Field from_name(std::string_view name);

    friend bool operator==(const Field& a, const Field& b) { return a.modulus_ == b.modulus_; }

private:
    explicit Field(std::uint32_t p) : modulus_(p) {}
    std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// A vector in a space of fixed dimension, stored as sorted nonzero entries.
class SparseVec {
public:
    using Entries = std::map<std::size_t, Scalar>;

    SparseVec() = default;
    SparseVec(Field field, std::size_t dim) : field_(field), dim_(dim) {}

    static SparseVec unit_vector(Field field, std::size_t dim, std::size_t i);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t nnz() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }
    const Entries& entries() const noexcept { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    Scalar coeff(std::size_t i) const;

    /// entries[i] += c, dropping the entry if it cancels.
    void add(std::size_t i, const Scalar& c);
    /// this += c * other
    void axpy(const Scalar& c, const SparseVec& other);

    SparseVec& operator+=(const SparseVec& other);
    SparseVec& operator-=(const SparseVec& other);
    SparseVec scaled(const Scalar& c) const;

    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
    friend bool operator==(const SparseVec& a, const SparseVec& b)
    {
        return a.dim_ == b.dim_ && a.field_ == b.field_ && a.entries_ == b.entries_;
    }

private:
    void check_index(std::size_t i) const;

    Field field_{};
    std::size_t dim_ = 0;
    Entries entries_;
};

/// a (x) b in the flattened product space.
SparseVec tensor(const SparseVec& a, const SparseVec& b);

/// Human-readable "3/4*g + -1*x" using the given basis labels. The tensor
/// variant decodes flattened indices using one label list per factor.
std::string format_vector(const SparseVec& v, std::span<const std::string> names);
std::string format_tensor(const SparseVec& v, std::span<const std::vector<std::string>> factor_names);

/// A linear map V -> W stored by columns: column j is the image of e_j.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(Field field, std::size_t rows, std::size_t cols);

    static LinearMap identity(Field field, std::size_t n);
    /// rows[i][j] is the matrix entry (i, j).
    static LinearMap from_rows(Field field, const std::vector<std::vector<long>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const SparseVec& column(std::size_t j) const { return columns_.at(j); }
    void set_column(std::size_t j, SparseVec v);
    Scalar entry(std::size_t i, std::size_t j) const { return columns_.at(j).coeff(i); }

    SparseVec apply(const SparseVec& v) const;
    bool is_identity() const;

    friend bool operator==(const LinearMap& a, const LinearMap& b)
    {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    Field field_{};
    std::size_t rows_ = 0;
    std::vector<SparseVec> columns_;
};

/// f o g
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap add(const LinearMap& f, const LinearMap& g);
LinearMap scale(const LinearMap& f, const Scalar& c);

/// The adjoint W* -> V* in delta-dual coordinates, i.e. the matrix transpose.
LinearMap transpose_map(const LinearMap& f);

/// f (x) g on the flattened product spaces.
LinearMap tensor_map(const LinearMap& f, const LinearMap& g);

/// Dense Gauss-Jordan over the field. Throws SingularPairing when singular.
LinearMap inverse(const LinearMap& f);
bool is_invertible(const LinearMap& f);
std::size_t rank(const LinearMap& f);
/// Basis of the kernel, one SparseVec per free column.
std::vector<SparseVec> kernel(const LinearMap& f);

/// pairing.entry(a, b) = (f_a, e_b). Returns C whose column i holds the
/// coordinates of the dual basis vector e^i in the f basis, so that
/// (e^i, e_j) = delta_ij. Throws SingularPairing.
LinearMap dual_basis(const LinearMap& pairing);

}  // namespace hopfdoubles
