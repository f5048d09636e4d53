#include "hopfdoubles/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace hopfdoubles;

namespace {

std::size_t max_dim_from_env()
{
    const char* v = std::getenv("HOPFDOUBLES_MAX_DIM");
    if (!v || !*v)
        return 64;
    char* end = nullptr;
    unsigned long n = std::strtoul(v, &end, 10);
    if (*end != '\0' || n == 0)
        throw Error(ErrorKind::ConstraintViolated, std::string("bad HOPFDOUBLES_MAX_DIM '") + v + "'");
    return n;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error(ErrorKind::ConstraintViolated, "cannot write " + path);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of Hopf algebra doubles"};
    app.require_subcommand(1);

    std::string suite, instance, json_out, recipe, out_path;
    SuiteParams params;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--instance", instance, "instance name or algebra file")->required();
    verify->add_option("--k", params.k);
    verify->add_option("--m", params.m);
    verify->add_option("--l", params.l);
    verify->add_option("--n", params.n);
    verify->add_option("--k1", params.k1);
    verify->add_option("--cutoff", params.cutoff);
    verify->add_option("--json", json_out, "write the machine-readable report here");
    verify->add_flag("--skip-axioms", params.skip_axioms, "do not run the axiom checks when loading a file");

    auto* exp = app.add_subcommand("export", "write a double as an algebra file");
    exp->add_option("recipe", recipe, "one of o-double, o-double-lstar, full-double, drinfeld")->required();
    exp->add_option("--instance", instance)->required();
    exp->add_option("--cutoff", params.cutoff);
    exp->add_option("-o,--output", out_path)->required();

    auto* list = app.add_subcommand("list-instances", "print the registered instance names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        params.max_dim = max_dim_from_env();
        if (list->parsed()) {
            for (const auto& name : instance_names())
                std::cout << name << "\n";
            return 0;
        }
        if (exp->parsed()) {
            auto d = build_export(recipe, instance, params);
            write_file(out_path, serialize_double(d));
            std::cout << "wrote " << d.recipe << " (" << d.dim() << "-dim) to " << out_path << "\n";
            return 0;
        }
        auto report = run_suite(suite, instance, params);
        std::cout << format_report(report);
        if (!json_out.empty())
            write_file(json_out, report_to_json(report));
        return report.passed() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}
