#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpcut/gen.hpp"
#include "lpcut/oracle.hpp"
#include "lpcut/problem_io.hpp"
#include "lpcut/reduction.hpp"
#include "lpcut/submodular.hpp"

namespace {

using json = nlohmann::ordered_json;

// Exit code contract (also in README):
//   0 success / all edges certified
//   1 unexpected internal error
//   2 usage error (bad flags, p < 1)
//   3 problem file parse or validation error
//   4 certification failure (uncertified or non-submodular edges)
//   5 size guard (exhaustive scan refused)
//   6 numeric range error
constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_usage = 2;
constexpr int exit_parse = 3;
constexpr int exit_certification = 4;
constexpr int exit_size = 5;
constexpr int exit_numeric = 6;

bool structured_output = false;

std::string label_string(const lpcut::Labeling& x) {
    std::string s;
    s.reserve(x.size());
    for (auto v : x)
        s.push_back(v ? '1' : '0');
    return s;
}

std::vector<std::string> raster_rows(const lpcut::Labeling& x, const lpcut::GridShape& g) {
    std::vector<std::string> rows;
    rows.reserve(g.height);
    for (int r = 0; r < g.height; ++r) {
        std::string row;
        row.reserve(g.width);
        for (int c = 0; c < g.width; ++c)
            row.push_back(x[static_cast<std::size_t>(r) * g.width + c] ? '#' : '.');
        rows.push_back(std::move(row));
    }
    return rows;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json solution_json(const lpcut::Solution& s, const std::optional<lpcut::GridShape>& grid,
                   double ms) {
    json j{{"p", s.p},
           {"labeling", label_string(s.labeling)},
           {"powered_energy", s.powered_energy},
           {"lp_value", s.lp_value},
           {"max_term", s.max_term},
           {"flow_value", s.flow_value},
           {"offset", s.offset},
           {"wall_time_ms", ms}};
    if (grid)
        j["raster"] = raster_rows(s.labeling, *grid);
    return j;
}

void print_solution_text(const lpcut::Solution& s,
                         const std::optional<lpcut::GridShape>& grid, double ms) {
    std::cout << std::setprecision(12);
    std::cout << "  p              " << s.p << "\n"
              << "  labeling       " << label_string(s.labeling) << "\n"
              << "  powered energy " << s.powered_energy << "\n"
              << "  lp value       " << s.lp_value << "\n"
              << "  max term       " << s.max_term << "\n"
              << "  flow           " << s.flow_value << "\n"
              << "  offset         " << s.offset << "\n"
              << "  wall time      " << ms << " ms\n";
    if (grid) {
        std::cout << "  raster\n";
        for (const auto& row : raster_rows(s.labeling, *grid))
            std::cout << "    " << row << "\n";
    }
}

lpcut::SolvePolicy to_policy(const std::string& name) {
    return name == "per-p" ? lpcut::SolvePolicy::allow_per_p_check
                           : lpcut::SolvePolicy::require_certified;
}

int cmd_check(const std::string& file) {
    lpcut::ProblemFile problem = lpcut::read_problem_file(file);
    const auto& edges = problem.energy.topology.edges;

    int counts[3] = {0, 0, 0};
    json issue_list = json::array();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        lpcut::Certificate cert = lpcut::certify_all_p(problem.energy.pairwise[k]);
        ++counts[static_cast<int>(cert.status)];
        if (cert.status != lpcut::CertStatus::certified_all_p)
            issue_list.push_back({{"edge", k},
                                  {"i", edges[k].first},
                                  {"j", edges[k].second},
                                  {"status", lpcut::to_string(cert.status)}});
    }
    bool all_certified = issue_list.empty();

    if (structured_output) {
        json out{{"command", "check"},
                 {"edge_count", edges.size()},
                 {"certified_all_p", counts[0]},
                 {"submodular_uncertified", counts[1]},
                 {"not_submodular", counts[2]},
                 {"issues", issue_list},
                 {"all_certified", all_certified}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "edges checked           " << edges.size() << "\n"
                  << "certified for all p     " << counts[0] << "\n"
                  << "submodular, uncertified " << counts[1] << "\n"
                  << "not submodular          " << counts[2] << "\n";
        for (const auto& issue : issue_list)
            std::cout << "edge " << issue["edge"] << " (" << issue["i"] << ","
                      << issue["j"] << "): " << issue["status"].get<std::string>()
                      << "\n";
        std::cout << (all_certified ? "all edges certified for every p >= 1"
                                    : "certification incomplete")
                  << "\n";
    }
    return all_certified ? exit_ok : exit_certification;
}

int cmd_solve(const std::string& file, double p, const std::string& policy) {
    lpcut::ProblemFile problem = lpcut::read_problem_file(file);
    Timer timer;
    lpcut::Solution s = lpcut::solve(problem.energy, p, to_policy(policy));
    double ms = timer.ms();
    if (structured_output) {
        json out{{"command", "solve"}, {"policy", policy}};
        out.update(solution_json(s, problem.grid, ms));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "solution (policy " << policy << ")\n";
        print_solution_text(s, problem.grid, ms);
    }
    return exit_ok;
}

int cmd_sweep(const std::string& file, std::vector<double> ps, const std::string& policy) {
    lpcut::ProblemFile problem = lpcut::read_problem_file(file);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    json rows = json::array();
    for (double p : ps) {
        Timer timer;
        lpcut::Solution s = lpcut::solve(problem.energy, p, to_policy(policy));
        rows.push_back(solution_json(s, problem.grid, timer.ms()));
    }

    if (structured_output) {
        json out{{"command", "sweep"}, {"policy", policy}, {"rows", rows}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << std::setprecision(12) << "sweep (policy " << policy << ")\n"
                  << std::setw(6) << "p" << " " << std::setw(17) << "powered_energy"
                  << " " << std::setw(17) << "lp_value" << " " << std::setw(13)
                  << "max_term" << " " << std::setw(19) << "flow" << " "
                  << std::setw(19) << "offset" << "  labeling\n";
        for (const auto& row : rows)
            std::cout << std::setw(6) << row["p"].get<double>() << " " << std::setw(17)
                      << row["powered_energy"].get<double>() << " " << std::setw(17)
                      << row["lp_value"].get<double>() << " " << std::setw(13)
                      << row["max_term"].get<double>() << " " << std::setw(19)
                      << row["flow_value"].get<double>() << " " << std::setw(19)
                      << row["offset"].get<double>() << "  "
                      << row["labeling"].get<std::string>() << "\n";
    }
    return exit_ok;
}

int cmd_oracle(const std::string& file, double p) {
    lpcut::ProblemFile problem = lpcut::read_problem_file(file);
    Timer timer;
    lpcut::OracleResult result = lpcut::brute_force_min(problem.energy, p);
    double ms = timer.ms();

    if (structured_output) {
        json minimizers = json::array();
        for (const auto& x : result.minimizers)
            minimizers.push_back(label_string(x));
        json out{{"command", "oracle"},
                 {"p", p},
                 {"min_value", result.min_value},
                 {"minimizers", minimizers},
                 {"wall_time_ms", ms}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << std::setprecision(12) << "exhaustive minimum at p = " << p
                  << ": " << result.min_value << "\n"
                  << "minimizers (" << result.minimizers.size() << "):\n";
        for (const auto& x : result.minimizers)
            std::cout << "  " << label_string(x) << "\n";
    }
    return exit_ok;
}

struct GenOptions {
    std::string kind;
    std::string out_file;
    std::uint64_t seed = 1;
    // grid_denoise
    int width = 8;
    int height = 8;
    double noise = 0.1;
    double data_weight = 1.0;
    double smoothness = 1.0;
    // random
    int n = 8;
    double edge_factor = 2.0;
    std::string term_policy = "certified";
};

int cmd_gen(const GenOptions& opt) {
    lpcut::ProblemFile problem;
    if (opt.kind == "grid_denoise") {
        lpcut::GridDenoiseParams params;
        params.width = opt.width;
        params.height = opt.height;
        params.noise_rate = opt.noise;
        params.data_weight = opt.data_weight;
        params.smoothness = opt.smoothness;
        params.seed = opt.seed;
        lpcut::GridInstance grid = lpcut::grid_denoise_instance(params);
        problem.energy = std::move(grid.energy);
        problem.grid = lpcut::GridShape{opt.width, opt.height};
    } else {
        lpcut::TermPolicy policy = lpcut::TermPolicy::certified;
        if (opt.term_policy == "any")
            policy = lpcut::TermPolicy::any;
        else if (opt.term_policy == "submodular")
            policy = lpcut::TermPolicy::submodular;
        problem.energy = lpcut::random_instance(opt.n, opt.edge_factor, policy, opt.seed);
    }
    lpcut::write_problem_file(problem, opt.out_file);

    if (structured_output) {
        json out{{"command", "gen"},
                 {"kind", opt.kind},
                 {"out", opt.out_file},
                 {"vertex_count", problem.energy.topology.vertex_count},
                 {"edge_count", problem.energy.topology.edges.size()},
                 {"seed", opt.seed}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "wrote " << opt.out_file << " ("
                  << problem.energy.topology.vertex_count << " vertices, "
                  << problem.energy.topology.edges.size() << " edges, seed "
                  << opt.seed << ")\n";
    }
    return exit_ok;
}

template <class Fn>
int run_guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const lpcut::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_parse;
    } catch (const lpcut::CertificationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_certification;
    } catch (const lpcut::ReductionError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_certification;
    } catch (const lpcut::SizeError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_size;
    } catch (const lpcut::NumericRangeError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_numeric;
    } catch (const lpcut::DomainError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return exit_usage;
    } catch (const lpcut::InputError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return exit_usage;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return exit_internal;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lpcut — exact l_p-norm binary labeling via graph cuts"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    std::string file;
    double p = 1.0;
    std::vector<double> p_list;
    std::string policy = "certified";

    auto* check = app.add_subcommand("check", "certify every pairwise term");
    check->add_option("file", file, "problem file")->required();

    auto* solve = app.add_subcommand("solve", "minimize the powered energy exactly");
    solve->add_option("file", file, "problem file")->required();
    solve->add_option("--p", p, "exponent (>= 1)")->required();
    solve->add_option("--policy", policy, "submodularity policy")
        ->check(CLI::IsMember({"certified", "per-p"}))
        ->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "solve across a list of exponents");
    sweep->add_option("file", file, "problem file")->required();
    sweep->add_option("--p", p_list, "comma-separated exponents (>= 1)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--policy", policy, "submodularity policy")
        ->check(CLI::IsMember({"certified", "per-p"}))
        ->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "exhaustive minimum (<= 20 vertices)");
    oracle->add_option("file", file, "problem file")->required();
    oracle->add_option("--p", p, "exponent (>= 1)")->required();

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a problem file");
    gen->add_option("kind", gen_opt.kind, "instance kind")
        ->required()
        ->check(CLI::IsMember({"grid_denoise", "random"}));
    gen->add_option("--out", gen_opt.out_file, "output problem file")->required();
    gen->add_option("--seed", gen_opt.seed, "generator seed")->capture_default_str();
    gen->add_option("--width", gen_opt.width, "grid width")->capture_default_str();
    gen->add_option("--height", gen_opt.height, "grid height")->capture_default_str();
    gen->add_option("--noise", gen_opt.noise, "pixel flip probability")
        ->capture_default_str();
    gen->add_option("--data-weight", gen_opt.data_weight, "unary disagreement cost")
        ->capture_default_str();
    gen->add_option("--smoothness", gen_opt.smoothness, "pairwise disagreement cost")
        ->capture_default_str();
    gen->add_option("--n", gen_opt.n, "vertex count (random)")->capture_default_str();
    gen->add_option("--edge-factor", gen_opt.edge_factor,
                    "target edges = floor(edge_factor * n)")
        ->capture_default_str();
    gen->add_option("--term-policy", gen_opt.term_policy, "pairwise table policy")
        ->check(CLI::IsMember({"any", "submodular", "certified"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    structured_output = format == "structured";

    return run_guarded([&]() -> int {
        if (check->parsed())
            return cmd_check(file);
        if (solve->parsed())
            return cmd_solve(file, p, policy);
        if (sweep->parsed())
            return cmd_sweep(file, p_list, policy);
        if (oracle->parsed())
            return cmd_oracle(file, p);
        return cmd_gen(gen_opt);
    });
}
