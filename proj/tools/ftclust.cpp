#include <ftclust/ftclust.hpp>
#include <ftclust/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kResourceLimit = 3,
    kBoundViolated = 4,
};

std::uint64_t oracle_cap_from_env() {
    const char* raw = std::getenv("FTCLUST_ORACLE_CAP");
    if (!raw || !*raw) {
        return ftclust::kDefaultOracleCap;
    }
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        throw CLI::ValidationError("FTCLUST_ORACLE_CAP", std::string("not an integer: ") + raw);
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw ftclust::ParseError("cannot write '" + out_path + "'", 0);
    }
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fault-tolerant k-center / k-median clustering"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Run the fault-tolerant algorithm on one instance");
    std::string problem = "ftc";
    std::size_t k = 0;
    std::size_t ell = 0;
    std::string points_path;
    std::string matrix_path;
    bool oracle = false;
    std::size_t seed_point = 0;
    double eps = 0.01;
    double norm = 2.0;
    std::string out_path;
    solve->add_option("--problem", problem, "ftc or ftm")->check(CLI::IsMember({"ftc", "ftm"}));
    solve->add_option("--k", k, "Number of centers")->required();
    solve->add_option("--ell", ell, "Fault-tolerance parameter")->required();
    auto* points_opt = solve->add_option("--points", points_path, "CSV of coordinates, one point per row");
    auto* matrix_opt = solve->add_option("--matrix", matrix_path, "CSV n x n distance matrix");
    points_opt->excludes(matrix_opt);
    solve->add_flag("--oracle", oracle, "Also compute the exact optimum and the approximation ratio");
    solve->add_option("--seed-point", seed_point, "First Gonzalez center (ftc)");
    solve->add_option("--eps", eps, "Local search improvement threshold (ftm)")->check(CLI::PositiveNumber);
    solve->add_option("--norm", norm, "l_p exponent for --points (inf allowed)");
    solve->add_option("--out", out_path, "Write the report here instead of stdout");

    // bench
    auto* bench = app.add_subcommand("bench", "Approximation-ratio experiment on random unit-square instances");
    ftclust::BenchConfig bench_cfg;
    bench->add_option("--trials", bench_cfg.trials)->required();
    bench->add_option("--n", bench_cfg.n)->required();
    bench->add_option("--k-max", bench_cfg.k_max)->required();
    bench->add_option("--rng-seed", bench_cfg.rng_seed);
    bench->add_option("--eps", bench_cfg.eps)->check(CLI::PositiveNumber);

    // validate
    auto* check = app.add_subcommand("validate", "Check a distance matrix for metric violations");
    std::string check_path;
    bool triangle = false;
    double tol = 1e-9;
    check->add_option("--matrix", check_path)->required();
    check->add_flag("--triangle", triangle, "Also check the triangle inequality (O(n^3))");
    check->add_option("--tol", tol, "Triangle slack");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) {
            if (points_path.empty() == matrix_path.empty()) {
                std::cerr << "error: exactly one of --points or --matrix is required\n";
                return kUsage;
            }
            const ftclust::Instance inst =
                points_path.empty() ? ftclust::load_matrix(matrix_path) : ftclust::load_points(points_path, norm);

            ftclust::RunConfig cfg;
            cfg.problem = problem == "ftc" ? ftclust::Problem::Center : ftclust::Problem::Median;
            cfg.k = k;
            cfg.ell = ell;
            cfg.seed_point = seed_point;
            cfg.eps = eps;
            cfg.oracle = oracle;
            cfg.oracle_cap = oracle_cap_from_env();
            ftclust::FtParams::make(k, ell, inst.size());
            if (seed_point >= inst.size()) {
                throw std::invalid_argument("--seed-point out of range");
            }
            emit(ftclust::solve_report(inst, cfg).dump(2) + "\n", out_path);
            return kOk;
        }
        if (*bench) {
            bench_cfg.oracle_cap = oracle_cap_from_env();
            const auto summary = ftclust::run_bench(bench_cfg);
            std::cout << summary.table();
            return summary.pass() ? kOk : kBoundViolated;
        }
        if (*check) {
            std::ifstream in(check_path);
            if (!in) {
                throw ftclust::ParseError("cannot open '" + check_path + "'", 0);
            }
            try {
                ftclust::read_matrix(in, triangle, tol);
            } catch (const ftclust::ValidationError& e) {
                for (const auto& d : e.diagnostics()) {
                    std::cout << d.describe() << '\n';
                }
                return kParse;
            }
            std::cout << "ok\n";
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ftclust::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const ftclust::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kParse;
    } catch (const ftclust::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    }
    return kOk;
}
