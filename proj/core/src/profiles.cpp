#include "fdsurr/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fdsurr/errors.hpp"

namespace fdsurr {

bool converged(double f_x0, double f_x, double f_best, double tau) {
    return f_x0 - f_x >= (1.0 - tau) * (f_x0 - f_best);
}

ProfileTable build_profile_table(std::vector<std::string> problems, std::vector<long> dims,
                                 std::vector<std::string> solvers,
                                 const std::vector<std::vector<std::vector<double>>>& histories,
                                 double tau) {
    if (problems.size() != dims.size() || histories.size() != problems.size()) {
        throw MismatchedProblemSets("problem names, dimensions and histories differ in length");
    }
    ProfileTable t;
    t.problems = std::move(problems);
    t.dims = std::move(dims);
    t.solvers = std::move(solvers);
    for (const auto& row : histories) {
        if (row.size() != t.solvers.size()) {
            throw MismatchedProblemSets("history row does not cover every solver");
        }
        double f_best = std::numeric_limits<double>::infinity();
        for (const auto& h : row) {
            for (double v : h) f_best = std::min(f_best, v);
        }
        std::vector<std::optional<std::int64_t>> evals(row.size());
        for (std::size_t s = 0; s < row.size(); ++s) {
            const auto& h = row[s];
            if (h.empty()) continue;
            const double f_x0 = h.front();
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < h.size(); ++i) {
                best = std::min(best, h[i]);
                if (converged(f_x0, best, f_best, tau)) {
                    evals[s] = static_cast<std::int64_t>(i + 1);
                    break;
                }
            }
        }
        t.evals.push_back(std::move(evals));
        t.f_best.push_back(f_best);
    }
    return t;
}

ProfileTable merge_tables(const ProfileTable& a, const ProfileTable& b) {
    if (a.problems != b.problems || a.dims != b.dims) {
        throw MismatchedProblemSets("profile tables cover different problems");
    }
    ProfileTable out = a;
    out.solvers.insert(out.solvers.end(), b.solvers.begin(), b.solvers.end());
    for (std::size_t p = 0; p < out.evals.size(); ++p) {
        out.evals[p].insert(out.evals[p].end(), b.evals[p].begin(), b.evals[p].end());
        out.f_best[p] = std::min(a.f_best[p], b.f_best[p]);
    }
    return out;
}

double ProfileCurve::at(double alpha) const {
    double frac = 0.0;
    for (const auto& [a, f] : points) {
        if (a > alpha) break;
        frac = f;
    }
    return frac;
}

std::vector<ProfileCurve> data_profile(const ProfileTable& table, double budget_simplex) {
    const std::size_t P = table.problems.size();
    if (table.dims.size() != P || table.evals.size() != P) {
        throw MismatchedProblemSets("profile table rows are inconsistent");
    }
    for (const auto& row : table.evals) {
        if (row.size() != table.solvers.size()) {
            throw MismatchedProblemSets("profile table row does not cover every solver");
        }
    }
    std::vector<ProfileCurve> curves;
    for (std::size_t s = 0; s < table.solvers.size(); ++s) {
        std::vector<double> ratios;
        for (std::size_t p = 0; p < P; ++p) {
            if (const auto& e = table.evals[p][s]) {
                const double r = static_cast<double>(*e) / static_cast<double>(table.dims[p] + 1);
                if (r <= budget_simplex) ratios.push_back(r);
            }
        }
        std::sort(ratios.begin(), ratios.end());
        ProfileCurve c;
        c.solver = table.solvers[s];
        std::vector<double> alphas{0.0};
        alphas.insert(alphas.end(), ratios.begin(), ratios.end());
        alphas.push_back(budget_simplex);
        alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
        for (double a : alphas) {
            const auto solved = std::upper_bound(ratios.begin(), ratios.end(), a) - ratios.begin();
            const double frac = P == 0 ? 0.0 : static_cast<double>(solved) / static_cast<double>(P);
            c.points.emplace_back(a, frac);
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

double quantile(std::vector<double> values, double p) {
    if (values.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    std::sort(values.begin(), values.end());
    const double pos = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

BoxSummary box_summary(std::vector<double> values) {
    BoxSummary b;
    b.count = values.size();
    if (values.empty()) {
        return b;
    }
    std::sort(values.begin(), values.end());
    b.min = values.front();
    b.max = values.back();
    b.q1 = quantile(values, 0.25);
    b.median = quantile(values, 0.5);
    b.q3 = quantile(values, 0.75);
    const double iqr = b.q3 - b.q1;
    const double lo_fence = b.q1 - 1.5 * iqr;
    const double hi_fence = b.q3 + 1.5 * iqr;
    b.whisker_low = *std::find_if(values.begin(), values.end(), [&](double v) { return v >= lo_fence; });
    b.whisker_high = *std::find_if(values.rbegin(), values.rend(), [&](double v) { return v <= hi_fence; });
    return b;
}

}  // namespace fdsurr
