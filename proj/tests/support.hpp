#pragma once

#include "hopfdoubles/exactlin.hpp"
#include "hopfdoubles/report.hpp"

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace testing_support {

using namespace hopfdoubles;

inline SparseVec vec(const Field& f, std::size_t dim, std::initializer_list<std::pair<std::size_t, long>> entries)
{
    SparseVec v(f, dim);
    for (auto [i, c] : entries)
        v.add(i, f.from_int(c));
    return v;
}

/// Dense matrices as the independent oracle for LinearMap operations.
using Dense = std::vector<std::vector<Scalar>>;

inline Dense dense(const LinearMap& m)
{
    Dense d(m.rows(), std::vector<Scalar>(m.cols(), m.field().zero()));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, c] : m.column(j))
            d[i][j] = c;
    return d;
}

inline LinearMap random_map(std::mt19937& rng, const Field& f, std::size_t rows, std::size_t cols, double density = 0.4)
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    LinearMap m(f, rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        SparseVec col(f, rows);
        for (std::size_t i = 0; i < rows; ++i)
            if (coin(rng) < density) {
                long d = den(rng);
                if (f.characteristic() != 0 && d % static_cast<long>(f.characteristic()) == 0)
                    d = 1;
                col.add(i, f.from_fraction(num(rng), d));
            }
        m.set_column(j, col);
    }
    return m;
}

inline bool no_stored_zeros(const SparseVec& v)
{
    for (const auto& [i, c] : v)
        if (c.is_zero() || i >= v.dim())
            return false;
    return true;
}

inline std::size_t count_failures(std::span<const VerificationReport> reports)
{
    std::size_t n = 0;
    for (const auto& r : reports)
        n += r.passed ? 0 : 1;
    return n;
}

}  // namespace testing_support
