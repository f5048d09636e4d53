#include "hopfdoubles/instances.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

namespace hopfdoubles {

// ---------------------------------------------------------------- groups

CayleyTable::CayleyTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names))
{
    const std::size_t n = table_.size();
    auto fail = [](const std::string& why) { throw Error(ErrorKind::NotAGroup, why); };
    if (n == 0)
        fail("empty table");
    if (names_.size() != n)
        fail("expected " + std::to_string(n) + " element names");
    for (const auto& row : table_) {
        if (row.size() != n)
            fail("table is not square");
        for (auto v : row)
            if (v >= n)
                fail("entry " + std::to_string(v) + " out of range");
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        fail("no identity element");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    fail("not associative at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_)
                inverse_[a] = b;
        if (inverse_[a] == n)
            fail(names_[a] + " has no inverse");
    }
}

CayleyTable CayleyTable::cyclic(std::size_t n)
{
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    }
    return CayleyTable(std::move(t), std::move(names));
}

CayleyTable CayleyTable::klein_four()
{
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            t[i][j] = i ^ j;
    return CayleyTable(std::move(t), {"e", "a", "b", "ab"});
}

CayleyTable CayleyTable::symmetric3()
{
    using Perm = std::array<int, 3>;
    // Images of (0,1,2); composition (pq)(i) = p(q(i)).
    const std::vector<Perm> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> names{"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Perm r{};
            for (int k = 0; k < 3; ++k)
                r[k] = perms[i][perms[j][k]];
            t[i][j] = std::find(perms.begin(), perms.end(), r) - perms.begin();
        }
    return CayleyTable(std::move(t), names);
}

HopfData group_algebra(const CayleyTable& g, Field field)
{
    const std::size_t n = g.order();
    HopfData h;
    h.field = field;
    h.basis = g.names();
    h.mult.assign(n * n, SparseVec(field, n));
    h.comult.assign(n, SparseVec(field, n * n));
    h.counit = SparseVec(field, n);
    h.antipode = LinearMap(field, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            h.mult[a * n + b].add(g.product(a, b), field.one());
        h.comult[a].add(a * n + a, field.one());
        h.counit.add(a, field.one());
        h.antipode.set_column(a, SparseVec::unit_vector(field, n, g.inverse(a)));
    }
    h.unit = SparseVec::unit_vector(field, n, g.identity());
    return h;
}

HopfData function_hopf(const CayleyTable& g, Field field)
{
    const std::size_t n = g.order();
    HopfData h;
    h.field = field;
    for (const auto& name : g.names())
        h.basis.push_back("\xce\xb4" + name);
    h.mult.assign(n * n, SparseVec(field, n));
    h.comult.assign(n, SparseVec(field, n * n));
    h.unit = SparseVec(field, n);
    h.antipode = LinearMap(field, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        h.mult[a * n + a].add(a, field.one());
        for (std::size_t b = 0; b < n; ++b)
            h.comult[g.product(a, b)].add(a * n + b, field.one());
        h.unit.add(a, field.one());
        h.antipode.set_column(a, SparseVec::unit_vector(field, n, g.inverse(a)));
    }
    h.counit = SparseVec::unit_vector(field, n, g.identity());
    return h;
}

// ---------------------------------------------------------------- Sweedler

HopfData sweedler(Field field)
{
    if (field.characteristic() == 2)
        throw Error(ErrorKind::BadCharacteristic, "the 4-dimensional example needs characteristic != 2");
    // Basis index = 2*b + a for g^a x^b: 1, g, x, gx.
    HopfData h;
    h.field = field;
    h.basis = {"1", "g", "x", "gx"};
    const std::size_t n = 4;
    auto idx = [](int a, int b) { return static_cast<std::size_t>(2 * b + a); };
    h.mult.assign(n * n, SparseVec(field, n));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int a1 = i % 2, b1 = i / 2, a2 = j % 2, b2 = j / 2;
            if (b1 + b2 > 1)
                continue;
            // g^a1 x^b1 g^a2 x^b2 = (-1)^{b1 a2} g^{a1+a2} x^{b1+b2}
            h.mult[i * n + j].add(idx((a1 + a2) % 2, b1 + b2), field.from_int(b1 * a2 == 1 ? -1 : 1));
        }
    h.unit = SparseVec::unit_vector(field, n, 0);
    h.comult.assign(n, SparseVec(field, n * n));
    auto one = field.one();
    h.comult[0].add(0 * n + 0, one);
    h.comult[1].add(1 * n + 1, one);
    h.comult[2].add(2 * n + 0, one);  // x (x) 1
    h.comult[2].add(1 * n + 2, one);  // g (x) x
    h.comult[3].add(3 * n + 1, one);  // gx (x) g
    h.comult[3].add(0 * n + 3, one);  // 1 (x) gx
    h.counit = SparseVec(field, n);
    h.counit.add(0, one);
    h.counit.add(1, one);
    h.antipode = LinearMap(field, n, n);
    h.antipode.set_column(0, SparseVec::unit_vector(field, n, 0));
    h.antipode.set_column(1, SparseVec::unit_vector(field, n, 1));
    h.antipode.set_column(2, SparseVec::unit_vector(field, n, 3).scaled(-one));
    h.antipode.set_column(3, SparseVec::unit_vector(field, n, 2));
    return h;
}

// ---------------------------------------------------------------- binomial

namespace {

std::string power_name(const std::string& var, int n)
{
    if (n == 0)
        return "1";
    return n == 1 ? var : var + "^" + std::to_string(n);
}

HopfData divided_line(Field field, int top)
{
    const std::size_t n = top + 1;
    HopfData h;
    h.field = field;
    for (int i = 0; i <= top; ++i)
        h.basis.push_back(power_name("x", i));
    h.mult.assign(n * n, SparseVec(field, n));
    h.comult.assign(n, SparseVec(field, n * n));
    h.antipode = LinearMap(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j)
            h.mult[i * n + j].add(i + j, field.one());
        for (std::size_t j = 0; j <= i; ++j) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), i, j);
            h.comult[i].add(j * n + (i - j), field.from_fraction(c, 1));
        }
        h.antipode.set_column(i, SparseVec::unit_vector(field, n, i).scaled(field.from_int(i % 2 ? -1 : 1)));
    }
    h.unit = SparseVec::unit_vector(field, n, 0);
    h.counit = SparseVec::unit_vector(field, n, 0);
    return h;
}

}  // namespace

HopfData binomial_modular(std::uint32_t p)
{
    auto field = Field::prime(p);
    return divided_line(field, static_cast<int>(p) - 1);
}

HopfData binomial_graded(int n)
{
    if (n < 0)
        throw Error(ErrorKind::DimensionMismatch, "negative cutoff");
    auto h = divided_line(Field::rationals(), n);
    Grading g;
    g.cutoff = n;
    for (int i = 0; i <= n; ++i)
        g.degree.push_back(i);
    h.grading = g;
    return h;
}

// ---------------------------------------------------------------- Landweber-Novikov

namespace {

void partitions_of(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.emplace_back(prefix.rbegin(), prefix.rend());
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_of(n - part, part, prefix, out);
        prefix.pop_back();
    }
}

std::string monomial_name(const std::vector<int>& parts)
{
    if (parts.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (!s.empty())
            s += "*";
        s += power_name("b" + std::to_string(parts[i]), static_cast<int>(j - i));
        i = j;
    }
    return s;
}

std::string dual_monomial_name(const std::vector<int>& parts)
{
    std::string s = "S[";
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts[i]);
    return s + "]";
}

// Power series in t with coefficients in an algebra, truncated after t^top.
using Series = std::vector<SparseVec>;

Series series_multiply(const Algebra& a, const Series& f, const Series& g)
{
    Series r(f.size(), a.zero());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; i + j < f.size(); ++j)
            if (!f[i].is_zero() && !g[j].is_zero())
                r[i + j] += a.multiply(f[i], g[j]);
    return r;
}

}  // namespace

LandweberNovikovPair landweber_novikov_pair(int n)
{
    if (n < 1)
        throw Error(ErrorKind::DimensionMismatch, "cutoff must be at least 1");
    const Field field = Field::rationals();
    LandweberNovikovPair pair;
    pair.cutoff = n;

    // Ascending parts, ordered by weight and then as generated.
    for (int w = 0; w <= n; ++w) {
        std::vector<int> prefix;
        std::vector<std::vector<int>> out;
        partitions_of(w, w, prefix, out);
        std::reverse(out.begin(), out.end());
        for (auto& p : out)
            pair.partitions.push_back(std::move(p));
    }
    const std::size_t dim = pair.partitions.size();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < dim; ++i)
        index[pair.partitions[i]] = i;
    auto weight = [](const std::vector<int>& p) {
        int w = 0;
        for (int v : p)
            w += v;
        return w;
    };

    HopfData& h = pair.dual_x;
    h.field = field;
    Grading grading;
    grading.cutoff = n;
    for (const auto& p : pair.partitions) {
        h.basis.push_back(monomial_name(p));
        grading.degree.push_back(weight(p));
    }
    h.grading = grading;
    h.mult.assign(dim * dim, SparseVec(field, dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& p = pair.partitions[i];
            const auto& q = pair.partitions[j];
            if (weight(p) + weight(q) > n)
                continue;
            std::vector<int> merged;
            std::merge(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(merged));
            h.mult[i * dim + j].add(index.at(merged), field.one());
        }
    h.unit = h.basis_vector(0);
    h.counit = h.basis_vector(0);

    // beta_j = b_j (beta_0 = 1) is the t^{j+1} coefficient of b(t).
    auto beta = [&](int j) { return j == 0 ? h.unit : h.basis_vector(index.at({j})); };
    Series b(n + 2, h.zero());
    for (int j = 0; j <= n; ++j)
        b[j + 1] = beta(j);
    std::vector<Series> powers{b};  // powers[k] = b(t)^{k+1}
    for (int k = 1; k <= n; ++k)
        powers.push_back(series_multiply(h, powers.back(), b));

    h.comult.assign(dim, SparseVec(field, dim * dim));
    h.comult[0].add(0, field.one());
    for (int m = 1; m <= n; ++m) {
        SparseVec d(field, dim * dim);
        for (int k = 0; k <= m; ++k)
            d += tensor(beta(k), powers[k][m + 1]);
        h.comult[index.at({m})] = d;
    }
    // Monomials in order of weight: Delta(b_i * rest) = Delta(b_i) Delta(rest).
    for (std::size_t i = 1; i < dim; ++i) {
        const auto& p = pair.partitions[i];
        if (p.size() < 2)
            continue;
        std::vector<int> rest(p.begin() + 1, p.end());
        h.comult[i] = multiply_tensor(h, h, h.comult[index.at({p[0]})], h.comult[index.at(rest)]);
    }
    h.antipode = connected_antipode(h);

    pair.x = dual_hopf(h);
    for (std::size_t i = 0; i < dim; ++i)
        pair.x.basis[i] = dual_monomial_name(pair.partitions[i]);
    pair.action = adjoint_action(pair.x, AdjointVariant::RStar, 0);
    pair.action.module_basis = h.basis;
    return pair;
}

// ---------------------------------------------------------------- registry

namespace {

bool parse_suffix(const std::string& name, const std::string& prefix, long& value)
{
    if (!name.starts_with(prefix))
        return false;
    auto rest = std::string_view(name).substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    return ec == std::errc() && ptr == rest.data() + rest.size();
}

}  // namespace

HopfData instance_by_name(const std::string& name)
{
    long v = 0;
    if (name == "group:C2xC2")
        return group_algebra(CayleyTable::klein_four());
    if (name == "group:S3")
        return group_algebra(CayleyTable::symmetric3());
    if (parse_suffix(name, "group:C", v) && v >= 1 && v <= 64)
        return group_algebra(CayleyTable::cyclic(v));
    if (name == "sweedler")
        return sweedler();
    if (parse_suffix(name, "binomial:p=", v) && v >= 2 && v <= 64) {
        if (!is_prime(v))
            throw Error(ErrorKind::NotPrime, std::to_string(v) + " is not prime");
        return binomial_modular(static_cast<std::uint32_t>(v));
    }
    if (parse_suffix(name, "binomial:gradedN=", v) && v >= 0 && v <= 64)
        return binomial_graded(static_cast<int>(v));
    if (parse_suffix(name, "landweber-novikov:N=", v) && v >= 1 && v <= 10)
        return landweber_novikov_pair(static_cast<int>(v)).x;
    throw Error(ErrorKind::UnknownInstance, "no instance named '" + name + "'");
}

std::vector<std::string> instance_names()
{
    return {"group:C2",     "group:C3",           "group:C2xC2",        "group:S3",
            "sweedler",     "binomial:p=5",       "binomial:gradedN=4", "landweber-novikov:N=5"};
}

}  // namespace hopfdoubles
