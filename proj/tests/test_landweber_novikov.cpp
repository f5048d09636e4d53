#include "hopfdoubles/doubles.hpp"
#include "series_oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace hopfdoubles;
using namespace testing_support;
using namespace series_oracle;

TEST_CASE("graded dimensions at N=5")
{
    auto pair = landweber_novikov_pair(5);
    std::vector<int> dims(6, 0);
    for (std::size_t i = 0; i < pair.dual_x.dim(); ++i)
        ++dims[pair.dual_x.degree(i)];
    CHECK(dims == std::vector<int>{1, 1, 2, 3, 5, 7});
    CHECK(pair.x.dim() == 19);
    CHECK(pair.x.basis[0] == "S[]");
}

TEST_CASE("series oracle sanity")
{
    // (t + t^2) composed with itself is t + 2t^2 + 2t^3 + t^4
    Series f{0, 1, 1, 0, 0};
    CHECK(compose_series(f, f) == Series{0, 1, 2, 2, 1});
    auto g = compositional_inverse(f);
    CHECK(compose_series(f, g) == identity_series(5));
    CHECK(g == Series{0, 1, -1, 2, -5});
}

TEST_CASE("coproduct is composition of series")
{
    auto pair = landweber_novikov_pair(5);
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 6; ++trial) {
        auto f = random_series(rng, 5), g = random_series(rng, 5);
        CHECK(coproduct_mismatches(pair, f, g) == 0);
    }
    // a wrong coproduct is caught by the oracle
    auto broken = pair;
    broken.dual_x.comult[1] = tensor(broken.dual_x.basis_vector(1), broken.dual_x.unit);
    auto f = random_series(rng, 5), g = random_series(rng, 5);
    CHECK(coproduct_mismatches(broken, f, g) > 0);
}

TEST_CASE("antipode is compositional inverse")
{
    auto pair = landweber_novikov_pair(5);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial)
        CHECK(antipode_mismatches(pair, random_series(rng, 5)) == 0);
}

TEST_CASE("Hopf axioms, Milnor property and the A^U model at N=5")
{
    auto pair = landweber_novikov_pair(5);
    for (const auto* h : {&pair.dual_x, &pair.x})
        for (const auto& r : check_hopf_axioms(*h))
            CHECK_MESSAGE(r.passed, describe(r));
    CHECK(same_structure(dual_hopf(pair.dual_x), pair.x));

    ModuleAlgebra m{pair.dual_x, pair.action};
    auto rep = check_representation(pair.action);
    CHECK_MESSAGE(rep.passed, describe(rep));
    auto milnor = check_milnor(m, pair.x);
    CHECK_MESSAGE(milnor.passed, describe(milnor));

    auto d = build_o_double(m, pair.x, Side::Left);
    CHECK(d.dim() == 19 * 19);
    auto assoc = check_associativity(d);
    CHECK_MESSAGE(assoc.passed, describe(assoc));
    CHECK(assoc.cases > 1000);
}
