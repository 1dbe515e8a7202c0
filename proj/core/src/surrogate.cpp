#include "fdsurr/surrogate.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "fdsurr/errors.hpp"
#include "fdsurr/trace.hpp"

namespace fdsurr {

void write_pack(std::ostream& out, const ParameterPack& pack) {
    out << "family " << pack.family << "\nshape";
    for (long d : pack.shape) {
        out << ' ' << d;
    }
    out << "\nvalues";
    for (double v : pack.values) {
        out << ' ' << format_double(v);
    }
    out << '\n';
}

namespace {

std::istringstream expect_line(std::istream& in, const std::string& key) {
    std::string line;
    if (!std::getline(in, line)) {
        throw Error("parameter pack: missing '" + key + "' line");
    }
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head != key) {
        throw Error("parameter pack: expected '" + key + "', got '" + head + "'");
    }
    return ls;
}

}  // namespace

ParameterPack read_pack(std::istream& in) {
    ParameterPack pack;
    {
        auto ls = expect_line(in, "family");
        ls >> pack.family;
    }
    {
        auto ls = expect_line(in, "shape");
        long d = 0;
        while (ls >> d) {
            pack.shape.push_back(d);
        }
        if (!ls.eof()) {
            throw Error("parameter pack: bad shape entry");
        }
    }
    auto ls = expect_line(in, "values");
    std::string token;
    while (ls >> token) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw Error("parameter pack: bad number '" + token + "'");
        }
        pack.values.push_back(v);
    }
    return pack;
}

double loss(const SurrogateModel& model, const TrainingProblem& problem) {
    if (problem.values.empty()) {
        throw EmptyValueDataset();
    }
    double value_term = 0.0;
    for (const auto& e : problem.values.entries()) {
        const double r = model.value(e.point) - e.value;
        value_term += r * r;
    }
    value_term /= static_cast<double>(problem.values.size());

    double grad_term = 0.0;
    if (problem.sobolev && !problem.grads.empty()) {
        for (const auto& e : problem.grads.entries()) {
            grad_term += (model.spatial_gradient(e.point) - e.grad).squaredNorm();
        }
        grad_term /= static_cast<double>(problem.grads.size());
    }
    return value_term + grad_term + problem.lambda * model.parameters().squaredNorm();
}

}  // namespace fdsurr
