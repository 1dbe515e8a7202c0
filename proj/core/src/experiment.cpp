#include "fdsurr/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <thread>

#include "fdsurr/accelerated_solver.hpp"
#include "fdsurr/base_solver.hpp"
#include "fdsurr/errors.hpp"
#include "fdsurr/nn_model.hpp"
#include "fdsurr/problems.hpp"
#include "fdsurr/rbf_model.hpp"

namespace fdsurr {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto item = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
        if (!item.empty()) out.push_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value, int line) {
    T out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("line " + std::to_string(line) + ": bad value '" + value + "' for '" +
                          key + "'");
    }
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<TestProblem> select_problems(const ExperimentConfig& cfg) {
    if (cfg.problems.empty()) {
        return standard_suite();
    }
    std::vector<TestProblem> out;
    for (const auto& name : cfg.problems) {
        auto p = find_problem(name);
        if (!p) throw ConfigError("unknown problem '" + name + "'");
        out.push_back(std::move(*p));
    }
    return out;
}

RunRecord run_cell(const TestProblem& problem, const std::string& solver,
                   const ExperimentConfig& cfg, std::uint64_t seed) {
    SolverConfig sc = cfg.solver;
    sc.cap_F = static_cast<std::size_t>(cfg.cap_f_factor * (problem.n + 1));
    Oracle oracle(problem.objective, problem.n,
                  static_cast<std::int64_t>(cfg.budget_simplex) * (problem.n + 1));
    SolverResult res;
    if (solver == "base") {
        res = solve_base(oracle, problem.x0, sc);
    } else {
        const bool sobolev = solver.ends_with("-sobolev");
        const auto family = solver.starts_with("rbf")
                                ? SurrogateFamily::rbf(RbfKernel::from_name(cfg.kernel))
                                : SurrogateFamily::nn(Activation::from_name(cfg.activation));
        res = solve_accelerated(oracle, problem.x0, sc, family, sobolev, seed);
    }
    return {problem.name, solver, problem.n, std::move(res.trace), oracle.history()};
}

}  // namespace

void ExperimentConfig::validate() const {
    if (solvers.empty()) {
        throw ConfigError("no solvers selected");
    }
    for (const auto& s : solvers) {
        if (std::find(known_solvers().begin(), known_solvers().end(), s) == known_solvers().end()) {
            throw ConfigError("unknown solver '" + s + "'");
        }
    }
    if (budget_simplex < 1) throw ConfigError("budget_simplex must be positive");
    if (!(tau > 0.0 && tau < 1.0)) throw ConfigError("tau must lie in (0, 1)");
    if (cap_f_factor < 1) throw ConfigError("cap_f_factor must be positive");
    (void)RbfKernel::from_name(kernel);
    (void)Activation::from_name(activation);
    for (const auto& p : problems) {
        if (!find_problem(p)) throw ConfigError("unknown problem '" + p + "'");
    }
    try {
        solver.validate();
    } catch (const NonPositiveInput& e) {
        throw ConfigError(e.what());
    }
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key == "problems") {
            cfg.problems = value == "all" ? std::vector<std::string>{} : split_list(value);
        } else if (key == "solvers") {
            cfg.solvers = split_list(value);
        } else if (key == "budget_simplex") {
            cfg.budget_simplex = parse_number<int>(key, value, line_no);
        } else if (key == "seed") {
            cfg.seed = parse_number<std::uint64_t>(key, value, line_no);
        } else if (key == "tau") {
            cfg.tau = parse_number<double>(key, value, line_no);
        } else if (key == "kernel") {
            cfg.kernel = value;
        } else if (key == "activation") {
            cfg.activation = value;
        } else if (key == "sigma0") {
            cfg.solver.sigma0 = parse_number<double>(key, value, line_no);
        } else if (key == "sigma_min") {
            cfg.solver.sigma_min = parse_number<double>(key, value, line_no);
        } else if (key == "epsilon") {
            cfg.solver.epsilon = parse_number<double>(key, value, line_no);
        } else if (key == "rho") {
            cfg.solver.rho = parse_number<double>(key, value, line_no);
        } else if (key == "gamma") {
            cfg.solver.gamma = parse_number<double>(key, value, line_no);
        } else if (key == "lambda") {
            cfg.solver.lambda = parse_number<double>(key, value, line_no);
        } else if (key == "cap_f_factor") {
            cfg.cap_f_factor = parse_number<long>(key, value, line_no);
        } else if (key == "cap_g") {
            cfg.solver.cap_G = parse_number<std::size_t>(key, value, line_no);
        } else if (key == "max_inner_halvings") {
            cfg.solver.max_inner_halvings = parse_number<int>(key, value, line_no);
        } else if (key == "threads") {
            cfg.threads = parse_number<int>(key, value, line_no);
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    return parse_config(in);
}

GainDistribution gain_distribution(const std::vector<const SolverTrace*>& traces) {
    GainDistribution d;
    for (const SolverTrace* t : traces) {
        if (t == nullptr || t->iterations.empty()) continue;
        d.etas.push_back(surrogate_gain(*t, t->n));
    }
    d.summary = box_summary(d.etas);
    return d;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::vector<TestProblem> problems = select_problems(cfg);
    const std::size_t S = cfg.solvers.size();
    const std::size_t cells = problems.size() * S;

    std::vector<std::optional<RunRecord>> slots(cells);
    std::vector<std::exception_ptr> errors(cells);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next++; c < cells; c = next++) {
            const std::size_t p = c / S;
            try {
                slots[c] = run_cell(problems[p], cfg.solvers[c % S], cfg, mix_seed(cfg.seed, p));
            } catch (...) {
                errors[c] = std::current_exception();
            }
        }
    };
    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::max(1U, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(std::max<std::size_t>(cells, 1)));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    ExperimentResult result;
    std::vector<std::string> names;
    std::vector<long> dims;
    std::vector<std::vector<std::vector<double>>> histories(problems.size());
    for (std::size_t p = 0; p < problems.size(); ++p) {
        names.push_back(problems[p].name);
        dims.push_back(problems[p].n);
        for (std::size_t s = 0; s < S; ++s) {
            RunRecord& r = *slots[p * S + s];
            histories[p].push_back(r.history);
            result.runs.push_back(std::move(r));
        }
    }
    result.table = build_profile_table(std::move(names), std::move(dims), cfg.solvers, histories,
                                       cfg.tau);
    result.curves = data_profile(result.table, cfg.budget_simplex);

    for (const auto& solver : cfg.solvers) {
        if (solver == "base") continue;
        std::vector<const SolverTrace*> traces;
        for (const auto& r : result.runs) {
            if (r.solver != solver) continue;
            traces.push_back(&r.trace);
            if (!r.trace.iterations.empty()) {
                const double S_avg = average_surrogate_steps(r.trace);
                result.gains.push_back({r.problem, solver, S_avg, surrogate_gain_of(S_avg, r.n)});
            }
        }
        result.gain_by_solver[solver] = gain_distribution(traces);
    }
    return result;
}

void write_profile_svg(std::ostream& out, const std::vector<ProfileCurve>& curves,
                       double budget_simplex) {
    constexpr double W = 640.0, H = 400.0, M = 50.0;
    static const char* colors[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"};
    auto px = [&](double a) { return M + (W - 2 * M) * a / budget_simplex; };
    auto py = [&](double f) { return H - M - (H - 2 * M) * f; };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\">\n";
    out << "<rect x=\"" << M << "\" y=\"" << M << "\" width=\"" << W - 2 * M << "\" height=\""
        << H - 2 * M << "\" fill=\"none\" stroke=\"#888\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"" << H - 10
        << "\" text-anchor=\"middle\" font-size=\"12\">simplex gradients</text>\n";
    out << "<text x=\"12\" y=\"" << H / 2
        << "\" font-size=\"12\" transform=\"rotate(-90 12 " << H / 2
        << ")\" text-anchor=\"middle\">fraction solved</text>\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const char* color = colors[c % std::size(colors)];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        double prev = 0.0;
        bool first = true;
        for (const auto& [a, f] : curves[c].points) {
            if (!first) out << ' ' << format_double(px(a)) << ',' << format_double(py(prev));
            out << (first ? "" : " ") << format_double(px(a)) << ',' << format_double(py(f));
            prev = f;
            first = false;
        }
        out << "\"/>\n";
        out << "<text x=\"" << W - M + 4 - 150 << "\" y=\"" << M + 16 + 14 * static_cast<double>(c)
            << "\" font-size=\"11\" fill=\"" << color << "\">" << curves[c].solver << "</text>\n";
    }
    out << "</svg>\n";
}

void write_artifacts(const ExperimentResult& result, const ExperimentConfig& cfg,
                     const std::filesystem::path& out) {
    namespace fs = std::filesystem;
    fs::create_directories(out / "traces");
    auto open = [](const fs::path& p) {
        std::ofstream f(p);
        if (!f) throw Error("cannot write '" + p.string() + "'");
        return f;
    };
    for (const auto& r : result.runs) {
        auto f = open(out / "traces" / (r.problem + "_" + r.solver + ".csv"));
        write_trace_csv(f, r.trace);
    }
    {
        auto f = open(out / "profiles.csv");
        f << "solver,alpha,fraction\n";
        for (const auto& c : result.curves) {
            for (const auto& [a, frac] : c.points) {
                f << c.solver << ',' << format_double(a) << ',' << format_double(frac) << '\n';
            }
        }
    }
    {
        auto f = open(out / "gains.csv");
        f << "problem,solver,S,eta\n";
        for (const auto& g : result.gains) {
            f << g.problem << ',' << g.solver << ',' << format_double(g.S) << ','
              << format_double(g.eta) << '\n';
        }
    }
    {
        auto f = open(out / "gain_summary.csv");
        f << "solver,count,min,whisker_low,q1,median,q3,whisker_high,max\n";
        for (const auto& solver : cfg.solvers) {
            const auto it = result.gain_by_solver.find(solver);
            if (it == result.gain_by_solver.end()) continue;
            const BoxSummary& b = it->second.summary;
            f << solver << ',' << b.count << ',' << format_double(b.min) << ','
              << format_double(b.whisker_low) << ',' << format_double(b.q1) << ','
              << format_double(b.median) << ',' << format_double(b.q3) << ','
              << format_double(b.whisker_high) << ',' << format_double(b.max) << '\n';
        }
    }
    {
        auto f = open(out / "convergence.csv");
        f << "problem,n,solver,evals_to_converge,f_best,f_final,status\n";
        const auto& t = result.table;
        std::size_t r = 0;
        for (std::size_t p = 0; p < t.problems.size(); ++p) {
            for (std::size_t s = 0; s < t.solvers.size(); ++s, ++r) {
                const auto& e = t.evals[p][s];
                f << t.problems[p] << ',' << t.dims[p] << ',' << t.solvers[s] << ','
                  << (e ? std::to_string(*e) : std::string("inf")) << ','
                  << format_double(t.f_best[p]) << ',' << format_double(result.runs[r].trace.f_final)
                  << ',' << to_string(result.runs[r].trace.status) << '\n';
            }
        }
    }
    {
        auto f = open(out / "profiles.svg");
        write_profile_svg(f, result.curves, cfg.budget_simplex);
    }
}

}  // namespace fdsurr
