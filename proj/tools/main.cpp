// qloop: exact verification driver.  Exit status 0 when every hard check
// passes, 1 when one fails, 2 on usage errors.
#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for snake modules, rational R-matrices, finite-lattice density matrices and the snail operator"};
    app.require_subcommand(1);

    cli::Options o;
    std::string json_path, scenario_path;
    int n = 0, l = 0, k = 0, m = 0, L = 0, N = 0, snake_l = 0, max_l = 0, max_k = 0, shift = 0;
    unsigned long seed = 0;
    std::string parity;

    const std::map<std::string, std::string> about{
        {"qchar", "fundamental and snake q-characters"},
        {"census", "dominant monomials of alternating products, composition factors"},
        {"tsystem", "extended T-system identities and the KR T-system"},
        {"rmatrix", "Yang-Baxter, unitarity, crossing, special points, invariance"},
        {"lattice", "finite-lattice density matrix properties"},
        {"rqkz", "finite-lattice difference equations"},
        {"pole", "pole order of the snail prefactor at the merged point"},
        {"snail", "fusion ranks, exchange, snail well-formedness, exploratory residuals"},
        {"all", "every check at its defaults"}};
    for (auto& name : cli::command_names()) app.add_subcommand(name, about.at(name))->fallthrough();
    auto* on = app.add_option("--n", n, "rank n of sl(n+1)");
    auto* ol = app.add_option("--l", l, "snake length / pole index");
    auto* ok = app.add_option("--k", k, "KR level or snail loop parameter");
    auto* om = app.add_option("--m", m, "density-matrix window");
    auto* oL = app.add_option("--L", L, "chain length");
    auto* oN = app.add_option("--N", N, "number of horizontal line pairs");
    auto* osl = app.add_option("--snake-l", snake_l, "print the snake character of this length");
    auto* oml = app.add_option("--max-l", max_l, "upper bound for l ranges");
    auto* omk = app.add_option("--max-k", max_k, "upper bound for k ranges");
    auto* op = app.add_option("--parity", parity, "even or odd");
    auto* os = app.add_option("--shift", shift, "spectral shift of characters");
    auto* oseed = app.add_option("--seed", seed, "seed for rational parameters");
    app.add_option("--json", json_path, "write the JSON report array here ('-' for standard output)");
    app.add_option("--scenario", scenario_path, "key=value file supplying defaults for the flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto set = [](auto* opt, auto& field, auto v) {
        if (opt->count()) field = v;
    };
    set(on, o.n, n);
    set(ol, o.l, l);
    set(ok, o.k, k);
    set(om, o.m, m);
    set(oL, o.L, L);
    set(oN, o.N, N);
    set(osl, o.snake_l, snake_l);
    set(oml, o.max_l, max_l);
    set(omk, o.max_k, max_k);
    set(op, o.parity, parity);
    set(os, o.shift, shift);
    set(oseed, o.seed, seed);

    const std::string cmd = app.get_subcommands().front()->get_name();
    const bool json_stdout = json_path == "-";
    std::ostream& human = json_stdout ? std::cerr : std::cout;
    cli::Reports rs;
    try {
        if (!scenario_path.empty()) o = o.merged_over(cli::read_scenario(scenario_path));
        rs = cli::run_command(cmd, o, human);
    } catch (const cli::UsageError& e) {
        std::cerr << "qloop: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qloop: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qloop: " << cmd << " aborted: " << e.what() << "\n";
        return 1;
    }
    cli::canonicalize(rs);
    cli::print_summary(rs, human);

    if (!json_path.empty()) {
        const std::string text = cli::to_json(rs).dump(2) + "\n";
        if (json_stdout) {
            std::cout << text;
        } else {
            std::ofstream f(json_path);
            if (!f) {
                std::cerr << "qloop: cannot write " << json_path << "\n";
                return 2;
            }
            f << text;
        }
    }
    return cli::exit_code(rs);
}
