#include "hopfdoubles/instances.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace hopfdoubles;
using namespace testing_support;

TEST_CASE("Cayley tables are validated")
{
    CHECK(CayleyTable::symmetric3().order() == 6);
    try {
        CayleyTable({{0, 1}, {1, 1}}, {"e", "a"});
        FAIL("expected NotAGroup");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAGroup);
    }
    // Latin square without associativity.
    CHECK_THROWS_AS(CayleyTable({{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 4, 0, 1, 3},
                                 {3, 2, 4, 0, 1},
                                 {4, 3, 1, 2, 0}},
                                {"e", "a", "b", "c", "d"}),
                    Error);
}

TEST_CASE("group algebras")
{
    auto c2 = group_algebra(CayleyTable::cyclic(2));
    CHECK(c2.dim() == 2);
    CHECK(c2.antipode.is_identity());
    auto s3 = group_algebra(CayleyTable::symmetric3());
    CHECK(s3.dim() == 6);
    CHECK_FALSE(is_commutative(s3));
    CHECK(is_cocommutative(s3));
    for (const auto& name : {"group:C2", "group:C3", "group:C2xC2", "group:S3"}) {
        auto h = instance_by_name(name);
        CHECK(antipode_power(h, 2).is_identity());
        for (const auto& r : check_hopf_axioms(h))
            CHECK_MESSAGE(r.passed, name << ": " << describe(r));
    }
}

TEST_CASE("function algebras")
{
    for (auto g : {CayleyTable::cyclic(2), CayleyTable::cyclic(3), CayleyTable::klein_four(), CayleyTable::symmetric3()}) {
        auto f = function_hopf(g);
        CHECK(same_structure(f, dual_hopf(group_algebra(g))));
        CHECK(is_commutative(f));
        CHECK(is_cocommutative(f) == (g.order() != 6));
        CHECK(f.counit == SparseVec::unit_vector(f.field, g.order(), g.identity()));
    }
}

TEST_CASE("Sweedler algebra")
{
    auto h = sweedler();
    for (const auto& r : check_hopf_axioms(h))
        CHECK_MESSAGE(r.passed, describe(r));
    CHECK(antipode_power(h, 2).apply(h.basis_vector(2)) == h.basis_vector(2).scaled(h.field.from_int(-1)));
    CHECK(antipode_power(h, 4).is_identity());
    CHECK(is_invertible(h.antipode));
    for (const auto& r : check_hopf_axioms(sweedler(Field::prime(3))))
        CHECK_MESSAGE(r.passed, describe(r));
    try {
        sweedler(Field::prime(2));
        FAIL("expected BadCharacteristic");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadCharacteristic);
    }
}

TEST_CASE("binomial algebras")
{
    auto b2 = binomial_modular(2);
    CHECK(b2.dim() == 2);
    CHECK(b2.product(1, 1).is_zero());
    CHECK(b2.comult[1] == vec(b2.field, 4, {{1 * 2 + 0, 1}, {0 * 2 + 1, 1}}));

    auto b5 = binomial_modular(5);
    // Delta(x^2) = x^2 (x) 1 + 2 x (x) x + 1 (x) x^2
    CHECK(b5.comult[2] == vec(b5.field, 25, {{2 * 5 + 0, 1}, {1 * 5 + 1, 2}, {0 * 5 + 2, 1}}));
    for (const auto& r : check_hopf_axioms(b5))
        CHECK_MESSAGE(r.passed, describe(r));

    auto g4 = binomial_graded(4);
    for (std::size_t n = 0; n <= 4; ++n)
        CHECK(g4.antipode.column(n) == g4.basis_vector(n).scaled(g4.field.from_int(n % 2 ? -1 : 1)));
    for (const auto& r : check_hopf_axioms(g4))
        CHECK_MESSAGE(r.passed, describe(r));

    try {
        instance_by_name("binomial:p=6");
        FAIL("expected NotPrime");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPrime);
    }
}

TEST_CASE("Landweber-Novikov pair, small cutoffs")
{
    auto pair = landweber_novikov_pair(2);
    const auto& h = pair.dual_x;
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < h.dim(); ++i)
        idx[h.basis[i]] = i;
    const std::size_t n = h.dim();
    auto at = [&](const char* a, const char* b) { return idx.at(a) * n + idx.at(b); };
    // Delta b2 = 1 (x) b2 + 2 b1 (x) b1 + b2 (x) 1
    CHECK(h.comult[idx.at("b2")] == vec(h.field, n * n, {{at("1", "b2"), 1}, {at("b1", "b1"), 2}, {at("b2", "1"), 1}}));
    // s(b1) = -b1, s(b2) = -b2 + 2 b1^2
    CHECK(h.antipode.column(idx.at("b1")) == vec(h.field, n, {{idx.at("b1"), -1}}));
    CHECK(h.antipode.column(idx.at("b2")) == vec(h.field, n, {{idx.at("b2"), -1}, {idx.at("b1^2"), 2}}));

    auto p3 = landweber_novikov_pair(3);
    std::vector<int> dims(4, 0);
    for (std::size_t i = 0; i < p3.dual_x.dim(); ++i)
        ++dims[p3.dual_x.degree(i)];
    CHECK(dims == std::vector<int>{1, 1, 2, 3});
    CHECK(p3.x.basis[0] == "S[]");
    CHECK(std::find(p3.x.basis.begin(), p3.x.basis.end(), "S[1,2]") != p3.x.basis.end());
}

TEST_CASE("named instances")
{
    CHECK(instance_names().size() == 8);
    for (const auto& name : instance_names())
        CHECK_NOTHROW(instance_by_name(name));
    try {
        instance_by_name("group:Q8");
        FAIL("expected UnknownInstance");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownInstance);
    }
}
