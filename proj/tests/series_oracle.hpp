#pragma once

// Truncated formal power series over Q, used as an independent oracle for the
// Faa di Bruno coproduct and antipode.

#include "hopfdoubles/instances.hpp"

#include <random>
#include <vector>

namespace series_oracle {

using namespace hopfdoubles;

// Truncated power series t + sum c_i t^{i+1}, coefficients of t^0..t^{N+1}.
using Series = std::vector<mpq_class>;

inline Series mul(const Series& a, const Series& b)
{
    Series out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// f(g(t)) by Horner's rule on the polynomial f.
inline Series compose_series(const Series& f, const Series& g)
{
    Series out(f.size(), 0);
    for (std::size_t i = f.size(); i-- > 0;) {
        out = mul(out, g);
        out[0] += f[i];
    }
    return out;
}

inline Series identity_series(std::size_t len)
{
    Series t(len, 0);
    t[1] = 1;
    return t;
}

inline Series compositional_inverse(const Series& f)
{
    auto t = identity_series(f.size());
    auto g = t;
    for (std::size_t it = 0; it <= f.size(); ++it) {
        auto fg = compose_series(f, g);
        for (std::size_t i = 0; i < g.size(); ++i)
            g[i] -= fg[i] - t[i];
    }
    return g;
}

inline Series random_series(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
    auto f = identity_series(n + 2);
    for (int i = 1; i <= n; ++i)
        f[i + 1] = mpq_class(num(rng), den(rng));
    for (auto& c : f)
        c.canonicalize();
    return f;
}

// The character b_i -> f_{i+1} of Q[b_1..b_N].
inline mpq_class character(const LandweberNovikovPair& pair, const Series& f, const SparseVec& v)
{
    mpq_class total = 0;
    for (const auto& [i, c] : v) {
        mpq_class term = c.value();
        for (int part : pair.partitions[i])
            term *= f[part + 1];
        total += term;
    }
    return total;
}


/// Every basis monomial of the pair: (f (x) g)(Delta m) against the same
/// monomial in the coefficients of f(g(t)). Returns the number of mismatches.
inline std::size_t coproduct_mismatches(const LandweberNovikovPair& pair, const Series& f, const Series& g)
{
    const auto& h = pair.dual_x;
    const std::size_t n = h.dim();
    auto fg = compose_series(f, g);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class lhs = 0;
        for (const auto& [flat, c] : h.comult[i])
            lhs += c.value() * character(pair, f, h.basis_vector(flat / n)) * character(pair, g, h.basis_vector(flat % n));
        mpq_class rhs = 1;
        for (int part : pair.partitions[i])
            rhs *= fg[part + 1];
        bad += lhs == rhs ? 0 : 1;
    }
    return bad;
}

/// f(s m) against m evaluated on the compositional inverse of f.
inline std::size_t antipode_mismatches(const LandweberNovikovPair& pair, const Series& f)
{
    const auto& h = pair.dual_x;
    auto inv = compositional_inverse(f);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        mpq_class rhs = 1;
        for (int part : pair.partitions[i])
            rhs *= inv[part + 1];
        bad += character(pair, f, h.antipode.column(i)) == rhs ? 0 : 1;
    }
    return bad;
}

}  // namespace series_oracle
