#include "hopfdoubles/exactlin.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hopfdoubles {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::SingularPairing: return "SingularPairing";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NonInvertibleAntipode: return "NonInvertibleAntipode";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::MilnorCheckFailed: return "MilnorCheckFailed";
    case ErrorKind::NonCommutingFactors: return "NonCommutingFactors";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::RecipeMismatch: return "RecipeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnknownInstance: return "UnknownInstance";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(mpq_class value, std::uint32_t modulus) : value_(std::move(value)), modulus_(modulus)
{
    reduce();
}

void Scalar::reduce()
{
    if (modulus_ == 0) {
        value_.canonicalize();
        return;
    }
    mpz_class p = modulus_;
    value_.canonicalize();
    mpz_class num = value_.get_num();
    mpz_class den = value_.get_den();
    num %= p;
    if (num < 0)
        num += p;
    if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("denominator not invertible mod " + std::to_string(modulus_));
        num = (num * inv) % p;
    }
    value_ = mpq_class(num);
}

void Scalar::require_same_field(const Scalar& other) const
{
    if (modulus_ != other.modulus_)
        throw Error(ErrorKind::FieldMismatch, "scalar arithmetic across F_" + std::to_string(modulus_) +
                                                  " and F_" + std::to_string(other.modulus_));
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    require_same_field(other);
    value_ += other.value_;
    if (modulus_ != 0 && value_ >= modulus_)
        value_ -= modulus_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    require_same_field(other);
    value_ -= other.value_;
    if (modulus_ != 0 && value_ < 0)
        value_ += modulus_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    require_same_field(other);
    value_ *= other.value_;
    if (modulus_ != 0)
        reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other)
{
    return *this *= other.inverse();
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.value_ = -r.value_;
    if (modulus_ != 0 && r.value_ < 0)
        r.value_ += modulus_;
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero");
    if (modulus_ == 0)
        return Scalar(1 / value_, 0);
    mpz_class inv;
    mpz_class p = modulus_;
    mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
    return Scalar(mpq_class(inv), modulus_);
}

std::string Scalar::to_string() const
{
    if (modulus_ == 0)
        return value_.get_str();
    return value_.get_num().get_str() + " mod " + std::to_string(modulus_);
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const
{
    return Scalar(mpq_class(num, den), modulus_);
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

bool parse_integer(std::string_view s, mpz_class& out)
{
    s = trim(s);
    if (s.empty())
        return false;
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Scalar Field::parse(std::string_view text) const
{
    std::string_view body = trim(text);
    auto fail = [&](const std::string& why) {
        return Error(ErrorKind::ParseError, "bad scalar \"" + std::string(text) + "\": " + why);
    };
    if (auto pos = body.find(" mod "); pos != std::string_view::npos) {
        mpz_class p;
        if (!parse_integer(body.substr(pos + 5), p))
            throw fail("malformed modulus");
        if (modulus_ == 0 || p != modulus_)
            throw Error(ErrorKind::FieldMismatch,
                        "scalar \"" + std::string(text) + "\" does not belong to " + name());
        body = body.substr(0, pos);
    }
    mpz_class num, den = 1;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        if (!parse_integer(body.substr(0, slash), num) || !parse_integer(body.substr(slash + 1), den))
            throw fail("malformed fraction");
        if (den == 0)
            throw fail("zero denominator");
    }
    else if (!parse_integer(body, num)) {
        throw fail("not an integer or fraction");
    }
    if (modulus_ != 0 && den % modulus_ == 0)
        throw fail("denominator vanishes in " + name());
    return from_fraction(num, den);
}

std::string Field::name() const
{
    return modulus_ == 0 ? "Q" : "F_" + std::to_string(modulus_);
}

Field Field::from_name(std::string_view name)
{
    if (name == "Q")
        return rationals();
    if (name.starts_with("F_")) {
        std::uint32_t p = 0;
        auto rest = name.substr(2);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
        if (ec == std::errc() && ptr == rest.data() + rest.size())
            return prime(p);
    }
    throw Error(ErrorKind::ParseError, "unknown field \"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------- SparseVec

SparseVec SparseVec::unit_vector(Field field, std::size_t dim, std::size_t i)
{
    SparseVec v(field, dim);
    v.add(i, field.one());
    return v;
}

void SparseVec::check_index(std::size_t i) const
{
    if (i >= dim_)
        throw Error(ErrorKind::DimensionMismatch,
                    "index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim_));
}

Scalar SparseVec::coeff(std::size_t i) const
{
    auto it = entries_.find(i);
    return it == entries_.end() ? field_.zero() : it->second;
}

void SparseVec::add(std::size_t i, const Scalar& c)
{
    if (c.is_zero())
        return;
    check_index(i);
    auto [it, inserted] = entries_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

void SparseVec::axpy(const Scalar& c, const SparseVec& other)
{
    if (other.dim_ != dim_)
        throw Error(ErrorKind::DimensionMismatch, "axpy between dimensions " + std::to_string(dim_) + " and " +
                                                      std::to_string(other.dim_));
    if (c.is_zero())
        return;
    for (const auto& [i, v] : other.entries_)
        add(i, c * v);
}

SparseVec& SparseVec::operator+=(const SparseVec& other)
{
    axpy(field_.one(), other);
    return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& other)
{
    axpy(-field_.one(), other);
    return *this;
}

SparseVec SparseVec::scaled(const Scalar& c) const
{
    SparseVec r(field_, dim_);
    r.axpy(c, *this);
    return r;
}

SparseVec tensor(const SparseVec& a, const SparseVec& b)
{
    SparseVec r(a.field(), a.dim() * b.dim());
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            r.add(i * b.dim() + j, x * y);
    return r;
}

std::string format_vector(const SparseVec& v, std::span<const std::string> names)
{
    if (v.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first)
            out << " + ";
        first = false;
        out << c.to_string() << "*" << (i < names.size() ? names[i] : "#" + std::to_string(i));
    }
    return out.str();
}

std::string format_tensor(const SparseVec& v, std::span<const std::vector<std::string>> factor_names)
{
    if (v.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [flat, c] : v) {
        if (!first)
            out << " + ";
        first = false;
        if (factor_names.empty()) {
            out << c.to_string() << "*#" << flat;
            continue;
        }
        std::vector<std::string> parts(factor_names.size());
        std::size_t rest = flat;
        for (std::size_t f = factor_names.size(); f-- > 0;) {
            std::size_t d = factor_names[f].size();
            std::size_t idx = rest % d;
            rest /= d;
            parts[f] = factor_names[f][idx];
        }
        out << c.to_string() << "*";
        for (std::size_t f = 0; f < parts.size(); ++f)
            out << (f ? "(x)" : "") << parts[f];
    }
    return out.str();
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), columns_(cols, SparseVec(field, rows))
{
}

LinearMap LinearMap::identity(Field field, std::size_t n)
{
    LinearMap m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.columns_[i].add(i, field.one());
    return m;
}

LinearMap LinearMap::from_rows(Field field, const std::vector<std::vector<long>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    LinearMap m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j)
            m.columns_[j].add(i, field.from_int(rows[i][j]));
    }
    return m;
}

void LinearMap::set_column(std::size_t j, SparseVec v)
{
    if (v.dim() != rows_ || !(v.field() == field_))
        throw Error(ErrorKind::DimensionMismatch, "column has wrong dimension or field");
    columns_.at(j) = std::move(v);
}

SparseVec LinearMap::apply(const SparseVec& v) const
{
    if (v.dim() != cols())
        throw Error(ErrorKind::DimensionMismatch,
                    "applying a map with " + std::to_string(cols()) + " columns to a vector of dimension " +
                        std::to_string(v.dim()));
    SparseVec r(field_, rows_);
    for (const auto& [j, c] : v)
        r.axpy(c, columns_[j]);
    return r;
}

bool LinearMap::is_identity() const
{
    return rows_ == cols() && *this == identity(field_, rows_);
}

LinearMap compose(const LinearMap& f, const LinearMap& g)
{
    LinearMap r(f.field(), f.rows(), g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j)
        r.set_column(j, f.apply(g.column(j)));
    return r;
}

LinearMap add(const LinearMap& f, const LinearMap& g)
{
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw Error(ErrorKind::DimensionMismatch, "adding maps of different shapes");
    LinearMap r(f.field(), f.rows(), f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j)
        r.set_column(j, f.column(j) + g.column(j));
    return r;
}

LinearMap scale(const LinearMap& f, const Scalar& c)
{
    LinearMap r(f.field(), f.rows(), f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j)
        r.set_column(j, f.column(j).scaled(c));
    return r;
}

LinearMap transpose_map(const LinearMap& f)
{
    std::vector<SparseVec> cols(f.rows(), SparseVec(f.field(), f.cols()));
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (const auto& [i, c] : f.column(j))
            cols[i].add(j, c);
    LinearMap r(f.field(), f.cols(), f.rows());
    for (std::size_t i = 0; i < cols.size(); ++i)
        r.set_column(i, std::move(cols[i]));
    return r;
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g)
{
    LinearMap r(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
    for (std::size_t i = 0; i < f.cols(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            r.set_column(i * g.cols() + j, tensor(f.column(i), g.column(j)));
    return r;
}

namespace {

using Dense = std::vector<std::vector<Scalar>>;

Dense to_dense(const LinearMap& f)
{
    Dense d(f.rows(), std::vector<Scalar>(f.cols(), f.field().zero()));
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (const auto& [i, c] : f.column(j))
            d[i][j] = c;
    return d;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Dense& m, const Field& field)
{
    std::vector<std::size_t> pivots;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m.front().size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        Scalar inv = m[r][c].inverse();
        for (auto& x : m[r])
            x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            Scalar factor = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!m[r][k].is_zero())
                    m[i][k] -= factor * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    (void)field;
    return pivots;
}

}  // namespace

LinearMap inverse(const LinearMap& f)
{
    std::size_t n = f.rows();
    if (n != f.cols())
        throw Error(ErrorKind::SingularPairing, "non-square matrix has no inverse");
    Dense aug = to_dense(f);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, f.field().zero());
        aug[i][n + i] = f.field().one();
    }
    auto pivots = rref(aug, f.field());
    if (pivots.size() < n || (n > 0 && pivots.back() >= n))
        throw Error(ErrorKind::SingularPairing, "matrix of size " + std::to_string(n) + " is singular");
    LinearMap r(f.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        SparseVec col(f.field(), n);
        for (std::size_t i = 0; i < n; ++i)
            col.add(i, aug[i][n + j]);
        r.set_column(j, std::move(col));
    }
    return r;
}

bool is_invertible(const LinearMap& f)
{
    return f.rows() == f.cols() && rank(f) == f.rows();
}

std::size_t rank(const LinearMap& f)
{
    Dense d = to_dense(f);
    return rref(d, f.field()).size();
}

std::vector<SparseVec> kernel(const LinearMap& f)
{
    Dense d = to_dense(f);
    auto pivots = rref(d, f.field());
    std::vector<bool> is_pivot(f.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<SparseVec> basis;
    for (std::size_t free = 0; free < f.cols(); ++free) {
        if (is_pivot[free])
            continue;
        SparseVec v(f.field(), f.cols());
        v.add(free, f.field().one());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v.add(pivots[r], -d[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearMap dual_basis(const LinearMap& pairing)
{
    // C^T P = I  =>  C = (P^{-1})^T
    return transpose_map(inverse(pairing));
}

}  // namespace hopfdoubles
