#include "support.hpp"

#include <doctest.h>

using namespace hopfdoubles;
using namespace testing_support;

TEST_CASE("rational arithmetic is exact and canonical")
{
    auto Q = Field::rationals();
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        auto x = Q.from_fraction(a, b) + Q.from_fraction(c, d);
        auto y = Q.from_fraction(a * d + c * b, b * d);
        CHECK(x == y);
        CHECK(x.to_string() == y.to_string());
        CHECK(Q.parse(x.to_string()) == x);
    }
    CHECK(Q.from_fraction(6, -4).to_string() == "-3/2");
    CHECK((Q.from_int(1) / Q.from_int(3)).inverse() == Q.from_int(3));
}

TEST_CASE("prime field residues")
{
    auto F5 = Field::prime(5);
    CHECK(F5.from_int(-1).to_string() == "4 mod 5");
    CHECK(F5.from_fraction(1, 2) == F5.from_int(3));
    CHECK(F5.parse("2 mod 5") == F5.from_int(7));
    CHECK(F5.name() == "F_5");
    CHECK(Field::from_name("F_5") == F5);
    CHECK(Field::from_name("Q") == Field::rationals());
    CHECK_THROWS_AS(Field::prime(6), Error);
    try {
        Field::prime(9);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPrime);
    }
    try {
        auto bad = F5.one() + Field::rationals().one();
        (void)bad;
        FAIL("mixed fields must throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
    CHECK_THROWS(F5.zero().inverse());
    CHECK_THROWS(F5.from_fraction(1, 5));
}

TEST_CASE("sparse vectors never store zeros")
{
    auto Q = Field::rationals();
    auto v = vec(Q, 5, {{0, 1}, {3, 2}});
    auto w = vec(Q, 5, {{0, -1}, {3, -2}});
    auto s = v + w;
    CHECK(s.is_zero());
    CHECK(no_stored_zeros(s));
    v.axpy(Q.from_int(-2), vec(Q, 5, {{3, 1}}));
    CHECK(v == vec(Q, 5, {{0, 1}}));
    CHECK(no_stored_zeros(v.scaled(Q.zero())));
    CHECK(v.scaled(Q.zero()).is_zero());
    CHECK_THROWS(v.add(5, Q.one()));
}

TEST_CASE("transpose_map")
{
    auto Q = Field::rationals();
    CHECK(transpose_map(LinearMap::identity(Q, 3)).is_identity());
    auto f = LinearMap::from_rows(Q, {{1, 2}, {0, 1}});
    CHECK(transpose_map(f) == LinearMap::from_rows(Q, {{1, 0}, {2, 1}}));

    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_map(rng, Q, size(rng), size(rng));
        auto t = transpose_map(g);
        auto dg = dense(g), dt = dense(t);
        REQUIRE(t.rows() == g.cols());
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                CHECK(dt[j][i] == dg[i][j]);
        CHECK(transpose_map(t) == g);
    }
}

TEST_CASE("tensor_map")
{
    auto Q = Field::rationals();
    CHECK(tensor_map(LinearMap::identity(Q, 2), LinearMap::identity(Q, 3)).is_identity());

    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_map(rng, Q, 3, 3), g = random_map(rng, Q, 3, 3);
        auto f2 = random_map(rng, Q, 3, 3), g2 = random_map(rng, Q, 3, 3);
        auto fg = tensor_map(f, g);
        CHECK(fg.apply(tensor(SparseVec::unit_vector(Q, 3, 0), SparseVec::unit_vector(Q, 3, 0))) ==
              tensor(f.column(0), g.column(0)));
        // Kronecker product oracle.
        auto df = dense(f), dg = dense(g), dk = dense(fg);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j)
                CHECK(dk[i][j] == df[i / 3][j / 3] * dg[i % 3][j % 3]);
        CHECK(compose(fg, tensor_map(f2, g2)) == tensor_map(compose(f, f2), compose(g, g2)));
    }
}

TEST_CASE("inverse, rank and kernel")
{
    auto Q = Field::rationals();
    auto m = LinearMap::from_rows(Q, {{2, 1}, {1, 1}});
    CHECK(compose(m, inverse(m)).is_identity());
    auto singular = LinearMap::from_rows(Q, {{1, 2}, {2, 4}});
    CHECK(rank(singular) == 1);
    auto ker = kernel(singular);
    REQUIRE(ker.size() == 1);
    CHECK(singular.apply(ker[0]).is_zero());
    try {
        inverse(singular);
        FAIL("singular matrix inverted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularPairing);
    }
}

TEST_CASE("dual_basis")
{
    auto Q = Field::rationals();
    CHECK(dual_basis(LinearMap::identity(Q, 3)).is_identity());
    auto swap = LinearMap::from_rows(Q, {{0, 1}, {1, 0}});
    CHECK(dual_basis(swap) == swap);

    // (p^a, x^b) = a! delta_ab over F_5 gives e^i = p^i / i!.
    auto F5 = Field::prime(5);
    LinearMap pairing(F5, 5, 5);
    Scalar fact = F5.one();
    for (std::size_t a = 0; a < 5; ++a) {
        if (a > 0)
            fact *= F5.from_int(static_cast<long>(a));
        pairing.set_column(a, SparseVec::unit_vector(F5, 5, a).scaled(fact));
    }
    auto c = dual_basis(pairing);
    const long inverse_factorials[] = {1, 1, 3, 1, 4};  // 1/n! mod 5
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(c.column(i) == SparseVec::unit_vector(F5, 5, i).scaled(F5.from_int(inverse_factorials[i])));
    // (e^i, e_j) = delta_ij
    auto check = compose(transpose_map(c), pairing);
    CHECK(check.is_identity());

    CHECK_THROWS_AS(dual_basis(LinearMap::from_rows(Q, {{1, 1}, {1, 1}})), Error);
}

TEST_CASE("tensor formatting")
{
    auto Q = Field::rationals();
    std::vector<std::vector<std::string>> names{{"1", "g"}, {"a", "b"}};
    auto t = tensor(vec(Q, 2, {{1, 1}}), vec(Q, 2, {{0, 2}}));
    CHECK(format_tensor(t, names).find("g(x)a") != std::string::npos);
}
