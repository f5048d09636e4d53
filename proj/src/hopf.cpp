#include "hopfdoubles/hopf.hpp"

#include <algorithm>
#include <numeric>

namespace hopfdoubles {

namespace {

const std::string kDelta = "\xce\xb4";  // δ

std::string dual_name(const std::string& name)
{
    if (name.starts_with(kDelta))
        return name.substr(kDelta.size());
    return kDelta + name;
}

std::vector<std::vector<std::string>> repeat_names(const Algebra& a, std::size_t times)
{
    return std::vector<std::vector<std::string>>(times, a.basis);
}

}  // namespace

// ---------------------------------------------------------------- Algebra

SparseVec Algebra::multiply(const SparseVec& a, const SparseVec& b) const
{
    SparseVec r(field, dim());
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            r.axpy(x * y, product(i, j));
    return r;
}

bool Algebra::admissible(std::span<const std::size_t> idx) const
{
    if (!grading)
        return true;
    int total = 0;
    for (auto i : idx)
        total += grading->degree[i];
    return total <= grading->cutoff;
}

void Algebra::validate() const
{
    auto n = dim();
    auto fail = [](const std::string& what) { throw Error(ErrorKind::DimensionMismatch, what); };
    if (mult.size() != n * n)
        fail("multiplication table has " + std::to_string(mult.size()) + " entries, expected " +
             std::to_string(n * n));
    for (const auto& v : mult)
        if (v.dim() != n || !(v.field() == field))
            fail("multiplication entry has wrong dimension or field");
    if (unit.dim() != n)
        fail("unit has wrong dimension");
    if (grading) {
        if (grading->degree.size() != n)
            fail("degree list does not match basis size");
        for (auto d : grading->degree)
            if (d < 0 || d > grading->cutoff)
                fail("basis degree outside [0, cutoff]");
    }
}

// ---------------------------------------------------------------- HopfData

SparseVec HopfData::coproduct(const SparseVec& a) const
{
    SparseVec r(field, dim() * dim());
    for (const auto& [i, x] : a)
        r.axpy(x, comult[i]);
    return r;
}

Scalar HopfData::counit_of(const SparseVec& a) const
{
    Scalar r = field.zero();
    for (const auto& [i, x] : a)
        r += x * counit.coeff(i);
    return r;
}

void HopfData::validate() const
{
    Algebra::validate();
    auto n = dim();
    if (comult.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "comultiplication table does not match basis size");
    for (const auto& v : comult)
        if (v.dim() != n * n)
            throw Error(ErrorKind::DimensionMismatch, "comultiplication entry has wrong dimension");
    if (counit.dim() != n)
        throw Error(ErrorKind::DimensionMismatch, "counit has wrong dimension");
    if (!bialgebra_only && (antipode.rows() != n || antipode.cols() != n))
        throw Error(ErrorKind::DimensionMismatch, "antipode is not a square map of the basis size");
}

bool same_structure(const Algebra& a, const Algebra& b)
{
    return a.field == b.field && a.dim() == b.dim() && a.mult == b.mult && a.unit == b.unit &&
           a.grading == b.grading;
}

bool same_structure(const HopfData& a, const HopfData& b)
{
    return same_structure(static_cast<const Algebra&>(a), static_cast<const Algebra&>(b)) &&
           a.comult == b.comult && a.counit == b.counit && a.bialgebra_only == b.bialgebra_only &&
           (a.bialgebra_only || a.antipode == b.antipode);
}

SparseVec multiply_tensor(const Algebra& a, const Algebra& b, const SparseVec& x, const SparseVec& y)
{
    std::size_t nb = b.dim();
    SparseVec r(a.field, a.dim() * nb);
    for (const auto& [p, cx] : x) {
        for (const auto& [q, cy] : y) {
            const auto& left = a.product(p / nb, q / nb);
            const auto& right = b.product(p % nb, q % nb);
            if (left.is_zero() || right.is_zero())
                continue;
            Scalar c = cx * cy;
            for (const auto& [i, li] : left)
                for (const auto& [j, rj] : right)
                    r.add(i * nb + j, c * li * rj);
        }
    }
    return r;
}

SparseVec swap_tensor(const SparseVec& t, std::size_t d1, std::size_t d2)
{
    SparseVec r(t.field(), t.dim());
    for (const auto& [flat, c] : t)
        r.add((flat % d2) * d1 + flat / d2, c);
    return r;
}

namespace {

// (Delta (x) id) applied to a tensor in H (x) H.
SparseVec delta_left(const HopfData& h, const SparseVec& t)
{
    std::size_t n = h.dim();
    SparseVec r(h.field, n * n * n);
    for (const auto& [flat, c] : t) {
        std::size_t i = flat / n, j = flat % n;
        for (const auto& [ab, d] : h.comult[i])
            r.add(ab * n + j, c * d);
    }
    return r;
}

SparseVec delta_right(const HopfData& h, const SparseVec& t)
{
    std::size_t n = h.dim();
    SparseVec r(h.field, n * n * n);
    for (const auto& [flat, c] : t) {
        std::size_t i = flat / n, j = flat % n;
        for (const auto& [ab, d] : h.comult[j])
            r.add(i * n * n + ab, c * d);
    }
    return r;
}

// m o (f (x) g) on a tensor in H (x) H.
SparseVec multiply_through(const HopfData& h, const LinearMap* f, const LinearMap* g, const SparseVec& t)
{
    std::size_t n = h.dim();
    SparseVec r(h.field, n);
    for (const auto& [flat, c] : t) {
        auto a = h.basis_vector(flat / n);
        auto b = h.basis_vector(flat % n);
        if (f)
            a = f->apply(a);
        if (g)
            b = g->apply(b);
        r.axpy(c, h.multiply(a, b));
    }
    return r;
}

SparseVec scalar_vec(const Field& f, const Scalar& s)
{
    SparseVec r(f, 1);
    r.add(0, s);
    return r;
}

}  // namespace

SparseVec delta_square(const HopfData& h, const SparseVec& v)
{
    auto once = h.coproduct(v);
    auto left = delta_left(h, once);
    if (!(left == delta_right(h, once)))
        throw Error(ErrorKind::AxiomViolation, "comultiplication is not coassociative on the given vector");
    return left;
}

std::vector<VerificationReport> check_hopf_axioms(const HopfData& h)
{
    h.validate();
    const std::size_t n = h.dim();
    const auto& F = h.field;
    auto admit = [&h](std::span<const std::size_t> idx) { return h.admissible(idx); };
    auto e = [&h](std::size_t i) { return h.basis_vector(i); };
    std::vector<std::string> sides{"left", "right"};
    std::vector<VerificationReport> reports;

    reports.push_back(IdentitySweep{
        "associativity",
        {n, n, n},
        admit,
        [&](std::span<const std::size_t> t) {
            return std::pair{h.multiply(h.product(t[0], t[1]), e(t[2])),
                             h.multiply(e(t[0]), h.product(t[1], t[2]))};
        },
        repeat_names(h, 3),
        repeat_names(h, 1)}
                          .run());

    reports.push_back(IdentitySweep{
        "unit",
        {n, 2},
        nullptr,
        [&](std::span<const std::size_t> t) {
            auto x = e(t[0]);
            return std::pair{t[1] == 0 ? h.multiply(h.unit, x) : h.multiply(x, h.unit), x};
        },
        {h.basis, sides},
        repeat_names(h, 1)}
                          .run());

    reports.push_back(IdentitySweep{
        "coassociativity",
        {n},
        nullptr,
        [&](std::span<const std::size_t> t) {
            return std::pair{delta_left(h, h.comult[t[0]]), delta_right(h, h.comult[t[0]])};
        },
        {h.basis},
        repeat_names(h, 3)}
                          .run());

    reports.push_back(IdentitySweep{
        "counit",
        {n, 2},
        nullptr,
        [&](std::span<const std::size_t> t) {
            SparseVec r(F, n);
            for (const auto& [flat, c] : h.comult[t[0]]) {
                std::size_t a = flat / n, b = flat % n;
                if (t[1] == 0)
                    r.add(b, c * h.counit.coeff(a));
                else
                    r.add(a, c * h.counit.coeff(b));
            }
            return std::pair{r, e(t[0])};
        },
        {h.basis, sides},
        repeat_names(h, 1)}
                          .run());

    {
        std::vector<VerificationReport> parts;
        parts.push_back(IdentitySweep{
            "Delta(ab) = Delta(a)Delta(b)",
            {n, n},
            admit,
            [&](std::span<const std::size_t> t) {
                return std::pair{h.coproduct(h.product(t[0], t[1])),
                                 multiply_tensor(h, h, h.comult[t[0]], h.comult[t[1]])};
            },
            repeat_names(h, 2),
            repeat_names(h, 2)}
                            .run());
        parts.push_back(IdentitySweep{
            "eps(ab) = eps(a)eps(b)",
            {n, n},
            admit,
            [&](std::span<const std::size_t> t) {
                return std::pair{scalar_vec(F, h.counit_of(h.product(t[0], t[1]))),
                                 scalar_vec(F, h.counit.coeff(t[0]) * h.counit.coeff(t[1]))};
            },
            repeat_names(h, 2),
            {}}
                            .run());
        parts.push_back(IdentitySweep{
            "Delta(1) = 1(x)1, eps(1) = 1",
            {2},
            nullptr,
            [&](std::span<const std::size_t> t) {
                if (t[0] == 0)
                    return std::pair{h.coproduct(h.unit), tensor(h.unit, h.unit)};
                return std::pair{scalar_vec(F, h.counit_of(h.unit)), scalar_vec(F, F.one())};
            },
            {{"Delta", "eps"}},
            repeat_names(h, 2)}
                            .run());
        reports.push_back(merge_reports("bialgebra", parts));
    }

    if (h.bialgebra_only) {
        for (const char* name : {"antipode", "antipode-antihom", "antipode-anticohom"}) {
            VerificationReport skipped;
            skipped.name = name;
            skipped.notes.push_back("bialgebra only: no antipode to check");
            reports.push_back(skipped);
        }
        return reports;
    }

    const LinearMap& s = h.antipode;
    reports.push_back(IdentitySweep{
        "antipode",
        {n, 2},
        nullptr,
        [&](std::span<const std::size_t> t) {
            auto lhs = t[1] == 0 ? multiply_through(h, &s, nullptr, h.comult[t[0]])
                                 : multiply_through(h, nullptr, &s, h.comult[t[0]]);
            return std::pair{lhs, h.unit.scaled(h.counit.coeff(t[0]))};
        },
        {h.basis, sides},
        repeat_names(h, 1)}
                          .run());

    reports.push_back(IdentitySweep{
        "antipode-antihom",
        {n, n},
        admit,
        [&](std::span<const std::size_t> t) {
            return std::pair{s.apply(h.product(t[0], t[1])),
                             h.multiply(s.apply(e(t[1])), s.apply(e(t[0])))};
        },
        repeat_names(h, 2),
        repeat_names(h, 1)}
                          .run());

    auto ss = tensor_map(s, s);
    reports.push_back(IdentitySweep{
        "antipode-anticohom",
        {n},
        nullptr,
        [&](std::span<const std::size_t> t) {
            return std::pair{h.coproduct(s.apply(e(t[0]))), ss.apply(swap_tensor(h.comult[t[0]], n, n))};
        },
        {h.basis},
        repeat_names(h, 2)}
                          .run());

    if (compose(s, s).is_identity())
        reports.back().notes.push_back("s^2 = id");
    else
        reports.back().notes.push_back("s^2 != id");
    return reports;
}

// ---------------------------------------------------------------- constructions

HopfData dual_hopf(const HopfData& h)
{
    h.validate();
    const std::size_t n = h.dim();
    HopfData d;
    d.field = h.field;
    d.grading = h.grading;
    d.bialgebra_only = h.bialgebra_only;
    for (const auto& name : h.basis)
        d.basis.push_back(dual_name(name));
    d.mult.assign(n * n, SparseVec(h.field, n));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [ab, c] : h.comult[i])
            d.mult[ab].add(i, c);
    d.comult.assign(n, SparseVec(h.field, n * n));
    for (std::size_t ij = 0; ij < n * n; ++ij)
        for (const auto& [k, c] : h.mult[ij])
            d.comult[k].add(ij, c);
    d.unit = h.counit;
    d.counit = h.unit;
    if (!h.bialgebra_only)
        d.antipode = transpose_map(h.antipode);
    return d;
}

namespace {

void replace_antipode_by_inverse(HopfData& h)
{
    if (h.bialgebra_only)
        return;
    if (is_invertible(h.antipode)) {
        h.antipode = inverse(h.antipode);
    }
    else {
        h.antipode = LinearMap();
        h.bialgebra_only = true;
    }
}

}  // namespace

HopfData opposite_algebra(const HopfData& h)
{
    HopfData r = h;
    const std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r.mult[i * n + j] = h.mult[j * n + i];
    replace_antipode_by_inverse(r);
    return r;
}

HopfData coopposite(const HopfData& h)
{
    HopfData r = h;
    const std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        r.comult[i] = swap_tensor(h.comult[i], n, n);
    replace_antipode_by_inverse(r);
    return r;
}

std::vector<std::pair<std::size_t, std::size_t>> tensor_basis_pairs(const HopfData& a, const HopfData& b)
{
    // Graded products keep total degree <= min cutoff.
    int cutoff = a.grading && b.grading ? std::min(a.grading->cutoff, b.grading->cutoff) : 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (!a.grading || !b.grading || a.degree(i) + b.degree(j) <= cutoff)
                pairs.emplace_back(i, j);
    return pairs;
}

HopfData tensor_hopf(const HopfData& a, const HopfData& b)
{
    if (!(a.field == b.field))
        throw Error(ErrorKind::FieldMismatch, "tensor product of Hopf algebras over " + a.field.name() + " and " +
                                                  b.field.name());
    if (a.grading.has_value() != b.grading.has_value())
        throw Error(ErrorKind::DimensionMismatch, "tensor product of a graded and an ungraded algebra");
    const std::size_t na = a.dim(), nb = b.dim();

    int cutoff = a.grading ? std::min(a.grading->cutoff, b.grading->cutoff) : 0;
    auto pairs = tensor_basis_pairs(a, b);
    std::vector<std::size_t> index(na * nb, SIZE_MAX);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        index[pairs[p].first * nb + pairs[p].second] = p;
    const std::size_t n = pairs.size();
    auto reindex = [&](const SparseVec& flat) {
        SparseVec r(a.field, n);
        for (const auto& [k, c] : flat)
            if (index[k] != SIZE_MAX)
                r.add(index[k], c);
        return r;
    };

    HopfData t;
    t.field = a.field;
    t.bialgebra_only = a.bialgebra_only || b.bialgebra_only;
    if (a.grading) {
        Grading g;
        g.cutoff = cutoff;
        for (auto [i, j] : pairs)
            g.degree.push_back(a.degree(i) + b.degree(j));
        t.grading = g;
    }
    for (auto [i, j] : pairs)
        t.basis.push_back(a.basis[i] + "\xe2\x8a\x97" + b.basis[j]);
    t.mult.reserve(n * n);
    for (auto [i, j] : pairs)
        for (auto [k, l] : pairs)
            t.mult.push_back(reindex(tensor(a.product(i, k), b.product(j, l))));
    t.unit = reindex(tensor(a.unit, b.unit));
    for (auto [i, j] : pairs) {
        // (e'(x)e'') (x) (f'(x)f'')  ->  (e'(x)f') (x) (e''(x)f'')
        SparseVec d(a.field, n * n);
        for (const auto& [ea, ca] : a.comult[i]) {
            std::size_t a1 = ea / na, a2 = ea % na;
            for (const auto& [fb, cb] : b.comult[j]) {
                std::size_t b1 = fb / nb, b2 = fb % nb;
                std::size_t left = index[a1 * nb + b1], right = index[a2 * nb + b2];
                if (left != SIZE_MAX && right != SIZE_MAX)
                    d.add(left * n + right, ca * cb);
            }
        }
        t.comult.push_back(std::move(d));
    }
    t.counit = SparseVec(a.field, n);
    for (std::size_t p = 0; p < n; ++p)
        t.counit.add(p, a.counit.coeff(pairs[p].first) * b.counit.coeff(pairs[p].second));
    if (!t.bialgebra_only) {
        LinearMap s(a.field, n, n);
        for (std::size_t p = 0; p < n; ++p)
            s.set_column(p, reindex(tensor(a.antipode.column(pairs[p].first), b.antipode.column(pairs[p].second))));
        t.antipode = std::move(s);
    }
    return t;
}

LinearMap antipode_power(const HopfData& h, int k)
{
    const std::size_t n = h.dim();
    if (k == 0)
        return LinearMap::identity(h.field, n);
    if (h.bialgebra_only)
        throw Error(ErrorKind::NonInvertibleAntipode, "bialgebra has no antipode");
    LinearMap base = h.antipode;
    if (k < 0) {
        if (!is_invertible(base))
            throw Error(ErrorKind::NonInvertibleAntipode, "s^" + std::to_string(k) + " needs an invertible antipode");
        base = inverse(base);
    }
    LinearMap r = LinearMap::identity(h.field, n);
    for (int i = 0; i < std::abs(k); ++i)
        r = compose(base, r);
    return r;
}

LinearMap left_multiplication(const Algebra& a, const SparseVec& x)
{
    LinearMap m(a.field, a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        m.set_column(j, a.multiply(x, a.basis_vector(j)));
    return m;
}

LinearMap right_multiplication(const Algebra& a, const SparseVec& x)
{
    LinearMap m(a.field, a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        m.set_column(j, a.multiply(a.basis_vector(j), x));
    return m;
}

bool is_commutative(const Algebra& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!(a.product(i, j) == a.product(j, i)))
                return false;
    return true;
}

bool is_cocommutative(const HopfData& h)
{
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (!(h.comult[i] == swap_tensor(h.comult[i], h.dim(), h.dim())))
            return false;
    return true;
}

LinearMap connected_antipode(const HopfData& h)
{
    if (!h.grading)
        throw Error(ErrorKind::AxiomViolation, "connected antipode needs a grading");
    const std::size_t n = h.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return h.degree(x) < h.degree(y); });
    std::size_t unit_index = order.front();
    if (h.degree(unit_index) != 0 || (n > 1 && h.degree(order[1]) == 0) ||
        !(h.unit == h.basis_vector(unit_index)))
        throw Error(ErrorKind::AxiomViolation, "grading is not connected with the unit as degree-0 basis vector");

    std::vector<std::optional<SparseVec>> s(n);
    for (auto i : order) {
        // eps(e_i) 1 = sum d^{jk} s(e_j) e_k, solved for the (i, unit) term.
        SparseVec rhs = h.unit.scaled(h.counit.coeff(i));
        Scalar lead = h.field.zero();
        for (const auto& [flat, c] : h.comult[i]) {
            std::size_t j = flat / n, k = flat % n;
            if (j == i && k == unit_index) {
                lead = c;
                continue;
            }
            if (!s[j])
                throw Error(ErrorKind::AxiomViolation,
                            "coproduct of " + h.basis[i] + " is not of connected form (term " + h.basis[j] + ")");
            rhs.axpy(-c, h.multiply(*s[j], h.basis_vector(k)));
        }
        if (lead.is_zero())
            throw Error(ErrorKind::AxiomViolation, "coproduct of " + h.basis[i] + " lacks the x(x)1 term");
        s[i] = rhs.scaled(lead.inverse());
    }
    LinearMap m(h.field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set_column(i, *s[i]);
    return m;
}

}  // namespace hopfdoubles
