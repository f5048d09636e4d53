#include "hopfdoubles/hopf.hpp"
#include "hopfdoubles/instances.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hopfdoubles;
using namespace testing_support;

namespace {

const VerificationReport& find(const std::vector<VerificationReport>& rs, const std::string& name)
{
    for (const auto& r : rs)
        if (r.name == name)
            return r;
    FAIL("no report " << name);
    return rs.front();
}

}  // namespace

TEST_CASE("axioms hold on group algebras and Sweedler")
{
    for (auto h : {group_algebra(CayleyTable::cyclic(2)), group_algebra(CayleyTable::symmetric3()), sweedler()}) {
        auto reports = check_hopf_axioms(h);
        CHECK(reports.size() == 8);
        for (const auto& r : reports)
            CHECK_MESSAGE(r.passed, describe(r));
    }
    auto reports = check_hopf_axioms(sweedler());
    const auto& anti = find(reports, "antipode-anticohom");
    CHECK(std::find(anti.notes.begin(), anti.notes.end(), "s^2 != id") != anti.notes.end());
}

TEST_CASE("wrong Sweedler coproduct is caught by the bialgebra check")
{
    auto h = sweedler();
    auto one = h.field.one();
    h.comult[2] = SparseVec(h.field, 16);
    h.comult[2].add(2 * 4 + 0, one);
    h.comult[2].add(0 * 4 + 2, one);
    auto reports = check_hopf_axioms(h);
    const auto& bialg = find(reports, "bialgebra");
    REQUIRE_FALSE(bialg.passed);
    REQUIRE(bialg.witness);
    // (g, x) is the first failing pair in lexicographic order; (x, g) fails as well.
    CHECK(bialg.witness->indices == std::vector<std::size_t>{1, 2});
    CHECK_FALSE(bialg.witness->lhs == bialg.witness->rhs);
    CHECK_FALSE(h.coproduct(h.product(2, 1)) == multiply_tensor(h, h, h.comult[2], h.comult[1]));
}

TEST_CASE("malformed tables raise DimensionMismatch")
{
    auto h = sweedler();
    h.mult.pop_back();
    try {
        check_hopf_axioms(h);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("dual of k[C2] is the function algebra")
{
    auto g = CayleyTable::cyclic(2);
    auto d = dual_hopf(group_algebra(g));
    auto f = function_hopf(g);
    CHECK(same_structure(d, f));
    // delta_a delta_b = [a = b] delta_a
    CHECK(d.product(0, 0) == d.basis_vector(0));
    CHECK(d.product(0, 1).is_zero());
    // Delta delta_e = delta_e (x) delta_e + delta_a (x) delta_a
    CHECK(d.comult[0] == vec(d.field, 4, {{0, 1}, {3, 1}}));
}

TEST_CASE("dual is an involution")
{
    for (auto h : {sweedler(), binomial_modular(5), group_algebra(CayleyTable::symmetric3())}) {
        auto dd = dual_hopf(dual_hopf(h));
        CHECK(same_structure(dd, h));
        CHECK(dd.basis == h.basis);
    }
}

TEST_CASE("graded dual of truncated polynomials at N=2")
{
    auto pair = landweber_novikov_pair(2);
    std::vector<int> dims(3, 0);
    for (std::size_t i = 0; i < pair.x.dim(); ++i)
        ++dims[pair.x.degree(i)];
    CHECK(dims == std::vector<int>{1, 1, 2});
}

TEST_CASE("opposite and coopposite")
{
    auto c3 = group_algebra(CayleyTable::cyclic(3));
    CHECK(same_structure(opposite_algebra(c3), c3));
    CHECK(same_structure(coopposite(c3), c3));

    auto h = sweedler();
    auto op = opposite_algebra(h);
    // (gx).x in op is x.(gx) in h
    CHECK(op.product(3, 2) == h.product(2, 3));
    CHECK(op.product(2, 3) == h.product(3, 2));
    CHECK_FALSE(op.product(2, 1) == h.product(2, 1));
    CHECK(same_structure(opposite_algebra(op), h));
    CHECK(same_structure(coopposite(coopposite(h)), h));
    CHECK(same_structure(dual_hopf(coopposite(h)), opposite_algebra(dual_hopf(h))));
    for (const auto& r : check_hopf_axioms(op))
        CHECK_MESSAGE(r.passed, describe(r));
    for (const auto& r : check_hopf_axioms(coopposite(h)))
        CHECK_MESSAGE(r.passed, describe(r));
}

TEST_CASE("non-invertible antipode gives a bialgebra-only coopposite")
{
    auto h = sweedler();
    h.antipode = LinearMap(h.field, 4, 4);
    auto c = coopposite(h);
    CHECK(c.bialgebra_only);
    try {
        antipode_power(h, -1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonInvertibleAntipode);
    }
}

TEST_CASE("tensor products")
{
    auto c2 = group_algebra(CayleyTable::cyclic(2));
    auto t = tensor_hopf(c2, c2);
    CHECK(t.dim() == 4);
    CHECK(t.unit == tensor(c2.unit, c2.unit));
    for (const auto& r : check_hopf_axioms(t))
        CHECK_MESSAGE(r.passed, describe(r));

    auto h = sweedler();
    auto big = tensor_hopf(h, coopposite(h));
    CHECK(big.dim() == 16);
    CHECK(big.antipode == tensor_map(h.antipode, inverse(h.antipode)));
    for (const auto& r : check_hopf_axioms(big))
        CHECK_MESSAGE(r.passed, describe(r));

    try {
        tensor_hopf(h, binomial_modular(5));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}

TEST_CASE("antipode powers")
{
    auto h = sweedler();
    CHECK(antipode_power(h, 0).is_identity());
    auto s2 = antipode_power(h, 2);
    CHECK(s2.column(2) == vec(h.field, 4, {{2, -1}}));
    CHECK(s2.column(1) == h.basis_vector(1));
    CHECK(antipode_power(h, 4).is_identity());
    CHECK(compose(antipode_power(h, 3), antipode_power(h, -1)) == antipode_power(h, 2));
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            CHECK(antipode_power(h, a + b) == compose(antipode_power(h, a), antipode_power(h, b)));

    auto s3 = group_algebra(CayleyTable::symmetric3());
    CHECK(antipode_power(s3, -1) == antipode_power(s3, 1));
}

TEST_CASE("delta_square")
{
    auto h = sweedler();
    const std::size_t n = 4;
    auto flat = [&](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
    CHECK(delta_square(h, h.basis_vector(1)) == vec(h.field, 64, {{flat(1, 1, 1), 1}}));
    CHECK(delta_square(h, h.basis_vector(2)) ==
          vec(h.field, 64, {{flat(2, 0, 0), 1}, {flat(1, 2, 0), 1}, {flat(1, 1, 2), 1}}));

    auto b = binomial_graded(3);
    const std::size_t m = 4;
    CHECK(delta_square(b, b.basis_vector(1)) ==
          vec(b.field, 64, {{(1 * m + 0) * m + 0, 1}, {(0 * m + 1) * m + 0, 1}, {(0 * m + 0) * m + 1, 1}}));
}

TEST_CASE("connected antipode of the binomial algebra")
{
    auto b = binomial_graded(4);
    CHECK(connected_antipode(b) == b.antipode);
}
