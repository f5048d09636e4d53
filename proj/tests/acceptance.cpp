// One PASS/FAIL line per acceptance criterion, each with its time budget.
// Usage: acceptance <path to the hopfdoubles executable> <scratch dir>

#include "hopfdoubles/cli.hpp"
#include "series_oracle.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hopfdoubles;

namespace {

std::string cli_path, scratch;

struct Outcome {
    bool ok = true;
    std::vector<std::string> problems;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            problems.push_back(what);
        }
    }
    void all(const std::vector<VerificationReport>& rs, const std::string& ctx)
    {
        for (const auto& r : rs)
            require(r.passed, ctx + ": " + describe(r));
    }
};

int run_criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < budget_s, "over the time budget");
    std::printf("%s criterion %d: %s (%.2f s, budget %.0f s)\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                budget_s);
    for (const auto& p : out.problems)
        std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
    return out.ok ? 0 : 1;
}

int shell(const std::string& args)
{
    std::string cmd = "\"" + cli_path + "\" " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text)
{
    std::ofstream(path, std::ios::binary) << text;
}

ModuleAlgebra dual_module(const HopfData& x)
{
    return {dual_hopf(x), adjoint_action(x, AdjointVariant::RStar, 0)};
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::cerr << "usage: acceptance <hopfdoubles executable> <scratch dir>\n";
        return 2;
    }
    cli_path = argv[1];
    scratch = argv[2];
    std::filesystem::create_directories(scratch);
    int failures = 0;

    failures += run_criterion(1, "Hopf axioms on the instance zoo", 10, [](Outcome& o) {
        for (const auto& name : instance_names())
            o.all(check_hopf_axioms(instance_by_name(name)), name);
    });

    failures += run_criterion(2, "Lemma 1 (parity contract, Milnor, commuting pair)", 30, [](Outcome& o) {
        for (const auto& name : {"group:S3", "sweedler"})
            for (int k : {-1, 0, 1})
                o.all(verify_lemma1(instance_by_name(name), k), name + std::string(" k=") + std::to_string(k));
        auto ln = landweber_novikov_pair(5).x;
        for (int k : {0, 1})
            o.all(verify_lemma1(ln, k), "landweber-novikov:N=5 k=" + std::to_string(k));
        auto sw = sweedler();
        o.require(adjoint_action(sw, AdjointVariant::RStar, 0).ops != adjoint_action(sw, AdjointVariant::RStar, 2).ops,
                  "Sweedler k=0 and k=1 actions coincide");
    });

    failures += run_criterion(3, "Drinfeld double against the group oracle; D(Sweedler) bialgebra", 30, [](Outcome& o) {
        for (auto [name, g] : {std::pair{"C2", CayleyTable::cyclic(2)}, std::pair{"C3", CayleyTable::cyclic(3)},
                               std::pair{"C2xC2", CayleyTable::klein_four()}, std::pair{"S3", CayleyTable::symmetric3()}}) {
            auto d = build_drinfeld_double(group_algebra(g));
            auto cmp = compare_multiplication(name, d, oracle_group_double(g));
            o.all({cmp}, name);
            o.require(cmp.cases == d.dim() * d.dim(), std::string(name) + ": not every product compared");
        }
        auto d = build_drinfeld_double(sweedler());
        auto axioms = check_drinfeld_axioms(d);
        o.all(axioms, "D(sweedler)");
        for (const auto& r : axioms)
            if (r.name == "associativity")
                o.require(r.cases == 16 * 16 * 16, "D(sweedler) associativity sweep incomplete");
    });

    failures += run_criterion(4, "Lemma 2 and Psi*(1) = R", 60, [](Outcome& o) {
        for (const auto& name : {"group:C2", "group:C3", "sweedler", "binomial:gradedN=3"}) {
            auto r = verify_lemma2(instance_by_name(name));
            o.all({r}, name);
            bool unit = false;
            for (const auto& n : r.notes)
                unit = unit || n == "lemma2 Psi*(1) = R: pass";
            o.require(unit, std::string(name) + ": Psi*(1) = R not confirmed");
        }
    });

    failures += run_criterion(5, "R = exp(p (x) x) over F_5", 1, [](Outcome& o) {
        auto r = run_suite("r-exponential", "binomial:p=5");
        o.all(r.checks, "binomial:p=5");
        auto b = binomial_modular(5);
        auto dual = dual_hopf(b);
        std::vector<SparseVec> ps{dual.unit};
        for (int i = 1; i < 5; ++i)
            ps.push_back(dual.multiply(ps.back(), dual.basis_vector(1)));
        auto rp = canonical_R_in(b, ps, {"1", "p", "p^2", "p^3", "p^4"});
        o.require(rp.tensor.coeff(2 * 5 + 2) == b.field.from_int(3), "coefficient of p^2 (x) x^2 is not 3");
        o.require(rp.tensor.nnz() == 5, "off-diagonal coefficients present");
    });

    failures += run_criterion(6, "Lemma 3 both clauses; parity negative control", 20, [](Outcome& o) {
        for (const auto& name : {"group:C3", "sweedler"})
            for (int k : {0, 1})
                o.all({verify_lemma3(instance_by_name(name), k)}, name + std::string(" k=") + std::to_string(k));
        for (int k : {0, 1}) {
            auto control = lemma3_parity_control(sweedler(), k);
            o.require(!control.passed && control.witness.has_value(), "parity control did not fail with a witness");
        }
    });

    failures += run_criterion(7, "Lemma 4 arrows and Theorem 1", 60, [](Outcome& o) {
        struct T {
            int m, l, k, n;
        };
        for (const auto& name : {"sweedler", "group:C3"}) {
            auto x = instance_by_name(name);
            for (auto t : {T{0, -1, 1, 0}, T{-1, -1, 0, 0}, T{-1, 0, 0, -1}, T{1, 0, 1, -2}}) {
                auto a = lemma4_antihom(x, t.m, t.l, t.k, t.n, t.n - (t.l + t.m));
                o.all({a.first.verified, a.second.verified}, name);
            }
            auto th = theorem1_maps(x);
            o.all(th.reports(), name);
            o.require(compose(th.a_backward.matrix, th.a_forward.matrix).is_identity() &&
                          compose(th.b_second.matrix, th.b_first.matrix).is_identity(),
                      std::string(name) + ": composites are not identity matrices");
            o.require(is_invertible(th.c.matrix), std::string(name) + ": part (c) not invertible");
        }
    });

    failures += run_criterion(8, "O-double refuses non-Milnor input; forced build is non-associative", 10, [](Outcome& o) {
        auto x = sweedler();
        auto corrupt = dual_module(x);
        corrupt.action.ops[1] = LinearMap::identity(x.field, 4);
        bool refused = false;
        try {
            build_o_double(corrupt, x, Side::Left);
        } catch (const Error& e) {
            refused = e.kind() == ErrorKind::MilnorCheckFailed;
        }
        o.require(refused, "corrupted action was not refused");
        auto assoc = check_associativity(build_o_double(corrupt, x, Side::Left, {.force = true}));
        o.require(!assoc.passed && assoc.witness.has_value(), "forced build did not fail associativity");
        o.all({check_associativity(build_o_double(dual_module(x), x, Side::Left))}, "uncorrupted");
    });

    failures += run_criterion(9, "Landweber-Novikov pair at N=5", 120, [](Outcome& o) {
        using namespace series_oracle;
        auto pair = landweber_novikov_pair(5);
        std::mt19937 rng(5);
        for (int trial = 0; trial < 8; ++trial) {
            auto f = random_series(rng, 5), g = random_series(rng, 5);
            o.require(coproduct_mismatches(pair, f, g) == 0, "coproduct disagrees with series composition");
            o.require(antipode_mismatches(pair, f) == 0, "antipode disagrees with compositional inverse");
        }
        o.all(check_hopf_axioms(pair.dual_x), "dual_x");
        o.all(check_hopf_axioms(pair.x), "x");
        ModuleAlgebra m{pair.dual_x, pair.action};
        o.all({check_representation(pair.action), check_milnor(m, pair.x)}, "R* action");
        o.all({check_associativity(build_o_double(m, pair.x, Side::Left))}, "A^U model");
    });

    failures += run_criterion(10, "Multiplicative elements", 5, [](Outcome& o) {
        for (const auto& name : {"binomial:p=5", "group:C2", "sweedler", "binomial:gradedN=4"})
            o.all(run_suite("multiplicative", name).checks, name);
        auto c2 = group_algebra(CayleyTable::cyclic(2));
        auto d = build_o_double(dual_module(c2), c2, Side::Left);
        auto reps = standard_reps(d, c2);
        o.all({check_multiplicative(reps.p_rep.act(d.embed_second(c2.basis_vector(1))), dual_hopf(c2))},
              "group-like of the C2 double");
    });

    failures += run_criterion(11, "Command-line interface", 10, [](Outcome& o) {
        struct Call {
            std::string args;
            int expected;
        };
        std::vector<Call> calls{
            {"verify axioms --instance group:C2", 0},
            {"verify lemma1 --instance sweedler", 0},
            {"verify lemma2 --instance group:C2", 0},
            {"verify lemma3 --instance sweedler --k 0", 0},
            {"verify lemma4 --instance sweedler --m 0 --l -1 --k 1 --n 0", 0},
            {"verify theorem1 --instance group:C3", 0},
            {"verify double-oracle --instance group:S3", 0},
            {"verify r-exponential --instance binomial:p=5", 0},
            {"verify milnor --instance landweber-novikov:N=5", 0},
            {"verify multiplicative --instance binomial:p=5", 0},
            {"verify lemma4 --instance group:C3 --m 0 --l 0 --k 0 --n 0", 2},
            {"verify no-such-suite --instance sweedler", 2},
            {"verify axioms --instance group:Q8", 2},
            {"export o-double-lstar --instance sweedler -o " + scratch + "/refused.json", 1},
            {"list-instances", 0},
        };
        for (const auto& c : calls) {
            int code = shell(c.args);
            o.require(code == c.expected, "'" + c.args + "' exited " + std::to_string(code) + ", expected " +
                                              std::to_string(c.expected));
        }

        spit(scratch + "/broken.json", "{\n  \"format_version\": 1,\n  \"kind\": \"hopf\",\n");
        o.require(shell("verify axioms --instance " + scratch + "/broken.json") == 3, "parse error is not exit 3");
        auto wrong = serialize_algebra(sweedler());
        wrong.replace(wrong.find("[2, 1, 2, \"1\"]"), 14, "[2, 0, 2, \"1\"]");
        spit(scratch + "/wrong.json", wrong);
        o.require(shell("verify axioms --skip-axioms --instance " + scratch + "/wrong.json") == 1,
                  "failing verification is not exit 1");

        // JSON report round-trip through the executable
        auto json_path = scratch + "/report.json";
        o.require(shell("verify lemma3 --instance sweedler --k 0 --json " + json_path) == 0, "lemma3 run failed");
        auto text = slurp(json_path);
        auto report = report_from_json(text);
        o.require(report_to_json(report) == text && report.passed(), "report JSON does not round-trip");

        // algebra files, through the executable and in process
        for (const auto& name : instance_names()) {
            auto file = serialize_algebra(instance_by_name(name));
            o.require(serialize_algebra(parse_algebra_file(file)) == file, name + ": file does not round-trip");
        }
        auto path = scratch + "/sweedler.json";
        spit(path, serialize_algebra(sweedler()));
        o.require(shell("verify axioms --instance " + path) == 0, "saved algebra file does not verify");
        auto dpath = scratch + "/dc2.json";
        o.require(shell("export drinfeld --instance group:C2 -o " + dpath) == 0, "export failed");
        auto dtext = slurp(dpath);
        o.require(serialize_double(parse_double_file(dtext)) == dtext, "exported double does not round-trip");
    });

    std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
