#include "hopfdoubles/actions.hpp"

namespace hopfdoubles {

namespace {

LinearMap from_columns(const Field& f, std::size_t rows, std::vector<SparseVec> cols)
{
    LinearMap m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        m.set_column(j, std::move(cols[j]));
    return m;
}

// Degree filter over a tuple whose positions come from different algebras.
// Positions with a null algebra are ignored; the cutoff is the smallest one seen.
std::function<bool(std::span<const std::size_t>)> mixed_admit(std::vector<const Algebra*> parts)
{
    bool graded = false;
    for (auto* a : parts)
        graded = graded || (a && a->grading);
    if (!graded)
        return nullptr;
    return [parts](std::span<const std::size_t> t) {
        int total = 0;
        int cutoff = -1;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const Algebra* a = parts[i];
            if (!a || !a->grading)
                continue;
            total += a->degree(t[i]);
            cutoff = cutoff < 0 ? a->grading->cutoff : std::min(cutoff, a->grading->cutoff);
        }
        return cutoff < 0 || total <= cutoff;
    };
}

std::string power_label(int k)
{
    return k == 0 ? "x" : "s^" + std::to_string(k) + "x";
}

Algebra algebra_part(const HopfData& h)
{
    return static_cast<const Algebra&>(h);
}

}  // namespace

LinearMap Representation::act(const SparseVec& x) const
{
    LinearMap r(acting.field, module_dim, module_dim);
    bool first = true;
    for (const auto& [i, c] : x) {
        r = first ? scale(ops[i], c) : add(r, scale(ops[i], c));
        first = false;
    }
    return r;
}

SparseVec flatten(const LinearMap& m)
{
    SparseVec r(m.field(), m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, c] : m.column(j))
            r.add(i * m.cols() + j, c);
    return r;
}

Representation regular_action(const HopfData& h, Side side)
{
    Representation r;
    r.recipe = side == Side::Left ? "regular-left" : "regular-right";
    r.side = side;
    r.acting = algebra_part(h);
    r.module_dim = h.dim();
    r.module_basis = h.basis;
    for (std::size_t i = 0; i < h.dim(); ++i)
        r.ops.push_back(side == Side::Left ? left_multiplication(h, h.basis_vector(i))
                                           : right_multiplication(h, h.basis_vector(i)));
    return r;
}

// R*_x delta^q = sum_a c_{a,x}^q delta^a
LinearMap r_star(const HopfData& h, const SparseVec& x)
{
    const std::size_t n = h.dim();
    std::vector<SparseVec> cols(n, SparseVec(h.field, n));
    for (const auto& [xi, cx] : x)
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& [q, c] : h.product(a, xi))
                cols[q].add(a, cx * c);
    return from_columns(h.field, n, std::move(cols));
}

// L*_x delta^q = sum_a c_{x,a}^q delta^a
LinearMap l_star(const HopfData& h, const SparseVec& x)
{
    const std::size_t n = h.dim();
    std::vector<SparseVec> cols(n, SparseVec(h.field, n));
    for (const auto& [xi, cx] : x)
        for (std::size_t a = 0; a < n; ++a)
            for (const auto& [q, c] : h.product(xi, a))
                cols[q].add(a, cx * c);
    return from_columns(h.field, n, std::move(cols));
}

Representation adjoint_action(const HopfData& h, AdjointVariant variant, int k)
{
    auto power = antipode_power(h, k);
    bool odd = k % 2 != 0;
    Representation r;
    bool rstar = variant == AdjointVariant::RStar;
    r.recipe = std::string(rstar ? "adjoint-R*" : "adjoint-L*") + " k=" + std::to_string(k);
    // R* even and L* odd act from the left; the other two from the right.
    r.side = (rstar != odd) ? Side::Left : Side::Right;
    r.acting = algebra_part(h);
    r.module_dim = h.dim();
    for (const auto& name : dual_hopf(h).basis)
        r.module_basis.push_back(name);
    for (std::size_t x = 0; x < h.dim(); ++x)
        r.ops.push_back(rstar ? r_star(h, power.column(x)) : l_star(h, power.column(x)));
    return r;
}

Scalar canonical_pairing(const HopfData& h, const SparseVec& u, const SparseVec& x)
{
    auto w = r_star(h, x).apply(u);
    Scalar s = h.field.zero();
    for (const auto& [i, c] : w)
        s += c * h.unit.coeff(i);
    return s;
}

VerificationReport check_representation(const Representation& rho)
{
    const auto& a = rho.acting;
    const std::size_t n = a.dim();
    std::vector<std::vector<std::string>> out{rho.module_basis, rho.module_basis};

    auto unit = IdentitySweep{
        "representation-unit",
        {1},
        nullptr,
        [&](std::span<const std::size_t>) {
            return std::pair{flatten(rho.act(a.unit)),
                             flatten(LinearMap::identity(a.field, rho.module_dim))};
        },
        {{"1"}},
        out}
                    .run();

    auto mult = IdentitySweep{
        rho.side == Side::Left ? "representation-left" : "representation-right",
        {n, n},
        mixed_admit({&a, &a}),
        [&](std::span<const std::size_t> t) {
            auto lhs = rho.act(a.product(t[0], t[1]));
            auto rhs = rho.side == Side::Left ? compose(rho.ops[t[0]], rho.ops[t[1]])
                                              : compose(rho.ops[t[1]], rho.ops[t[0]]);
            return std::pair{flatten(lhs), flatten(rhs)};
        },
        {a.basis, a.basis},
        out}
                    .run();

    std::vector<VerificationReport> parts{unit, mult};
    auto r = merge_reports("representation " + rho.recipe, parts);
    return r;
}

VerificationReport check_commutation(const Representation& rho1, const Representation& rho2)
{
    if (rho1.module_dim != rho2.module_dim)
        throw Error(ErrorKind::DimensionMismatch, "commutation check on different module spaces");
    return IdentitySweep{
        "commutation " + rho1.recipe + " / " + rho2.recipe,
        {rho1.acting.dim(), rho2.acting.dim()},
        mixed_admit({&rho1.acting, &rho2.acting}),
        [&](std::span<const std::size_t> t) {
            return std::pair{flatten(compose(rho1.ops[t[0]], rho2.ops[t[1]])),
                             flatten(compose(rho2.ops[t[1]], rho1.ops[t[0]]))};
        },
        {rho1.acting.basis, rho2.acting.basis},
        {rho1.module_basis, rho1.module_basis}}
        .run();
}

VerificationReport check_milnor(const Representation& rho, const Algebra& module, const HopfData& over)
{
    if (over.dim() != rho.acting.dim() || module.dim() != rho.module_dim || rho.ops.size() != over.dim())
        throw Error(ErrorKind::DimensionMismatch, "Milnor check: acting algebra, module and action disagree in size");
    const std::size_t n = over.dim(), m = module.dim();
    return IdentitySweep{
        "milnor " + rho.recipe,
        {n, m, m},
        mixed_admit({&over, &module, &module}),
        [&](std::span<const std::size_t> t) {
            auto lhs = rho.ops[t[0]].apply(module.product(t[1], t[2]));
            SparseVec rhs = module.zero();
            for (const auto& [flat, c] : over.comult[t[0]]) {
                const auto& a = rho.ops[flat / n].column(t[1]);
                const auto& b = rho.ops[flat % n].column(t[2]);
                if (!a.is_zero() && !b.is_zero())
                    rhs.axpy(c, module.multiply(a, b));
            }
            return std::pair{lhs, rhs};
        },
        {over.basis, module.basis, module.basis},
        {module.basis}}
        .run();
}

VerificationReport check_milnor(const ModuleAlgebra& m, const HopfData& over)
{
    return check_milnor(m.action, m.algebra, over);
}

Representation product_action(const Representation& rho1, const Representation& rho2, const HopfData& a,
                              const HopfData& b)
{
    if (rho1.module_dim != rho2.module_dim)
        throw Error(ErrorKind::DimensionMismatch, "product action on different module spaces");
    Representation r;
    r.recipe = "product(" + rho1.recipe + ", " + rho2.recipe + ")";
    r.side = rho1.side;
    r.acting = algebra_part(tensor_hopf(a, b));
    r.module_dim = rho1.module_dim;
    r.module_basis = rho1.module_basis;
    for (const auto& [i, j] : tensor_basis_pairs(a, b))
        r.ops.push_back(compose(rho1.ops[i], rho2.ops[j]));
    return r;
}

std::vector<VerificationReport> verify_lemma1(const HopfData& x, int k)
{
    const int even = 2 * k, odd = 2 * k + 1;
    auto dual = dual_hopf(x);
    const Algebra& module = dual;
    auto xt = coopposite(x);

    auto clause = [&](const std::string& name, AdjointVariant v, int power, const HopfData& over) {
        auto rho = adjoint_action(x, v, power);
        std::vector<VerificationReport> parts{check_representation(rho), check_milnor(rho, module, over)};
        return merge_reports(name, parts);
    };

    std::vector<VerificationReport> out;
    out.push_back(clause("lemma1(a) R*_{" + power_label(even) + "} left Milnor over X", AdjointVariant::RStar,
                         even, x));
    out.push_back(clause("lemma1(b) L*_{" + power_label(even) + "} right Milnor over X", AdjointVariant::LStar,
                         even, x));
    out.push_back(clause("lemma1(c) L*_{" + power_label(odd) + "} left Milnor over X^t", AdjointVariant::LStar,
                         odd, xt));
    out.push_back(clause("lemma1(d) R*_{" + power_label(odd) + "} right Milnor over X^t", AdjointVariant::RStar,
                         odd, xt));

    auto r = adjoint_action(x, AdjointVariant::RStar, even);
    auto l = adjoint_action(x, AdjointVariant::LStar, odd);
    auto both = product_action(r, l, x, xt);
    std::vector<VerificationReport> parts{check_commutation(r, l), check_representation(both),
                                          check_milnor(both, module, tensor_hopf(x, xt))};
    out.push_back(merge_reports("lemma1(e) X* left Milnor over X (x) X^t", parts));
    return out;
}

Representation ad_action(const Representation& rho1, const Representation& rho2, const HopfData& x)
{
    auto comm = check_commutation(rho1, rho2);
    if (!comm.passed)
        throw Error(ErrorKind::NonCommutingFactors, describe(comm));
    const std::size_t n = x.dim();
    Representation r;
    r.recipe = "ad-module(" + rho1.recipe + ", " + rho2.recipe + ")";
    r.side = Side::Left;
    r.acting = algebra_part(x);
    r.module_dim = rho1.module_dim;
    r.module_basis = rho1.module_basis;
    for (std::size_t i = 0; i < n; ++i) {
        LinearMap op(x.field, r.module_dim, r.module_dim);
        for (const auto& [flat, c] : x.comult[i])
            op = add(op, scale(compose(rho1.ops[flat / n], rho2.ops[flat % n]), c));
        r.ops.push_back(std::move(op));
    }
    return r;
}

VerificationReport check_ad_leibniz(const Representation& rho1, const Representation& rho2, const HopfData& x,
                                    const Algebra& module)
{
    auto rho = ad_action(rho1, rho2, x);
    const std::size_t n = x.dim(), m = module.dim();
    std::vector<SparseVec> d2;
    for (std::size_t i = 0; i < n; ++i)
        d2.push_back(delta_square(x, x.basis_vector(i)));
    return IdentitySweep{
        "ad-leibniz " + rho.recipe,
        {n, m, m},
        mixed_admit({&x, &module, &module}),
        [&](std::span<const std::size_t> t) {
            auto lhs = rho.ops[t[0]].apply(module.product(t[1], t[2]));
            SparseVec rhs = module.zero();
            for (const auto& [flat, c] : d2[t[0]]) {
                std::size_t a = flat / (n * n), b = (flat / n) % n, d = flat % n;
                auto left = rho1.ops[a].apply(rho2.ops[d].column(t[1]));
                const auto& right = rho.ops[b].column(t[2]);
                if (!left.is_zero() && !right.is_zero())
                    rhs.axpy(c, module.multiply(left, right));
            }
            return std::pair{lhs, rhs};
        },
        {x.basis, module.basis, module.basis},
        {module.basis}}
        .run();
}

}  // namespace hopfdoubles
