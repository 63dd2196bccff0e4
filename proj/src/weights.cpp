#include "wspec/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wspec {

double WeightFunction::eval(double x, double y) const {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("weight function arguments must be positive");
    return fn(x, y);
}

std::string WeightFunction::display_name() const {
    std::ostringstream out;
    out << name;
    if (alpha) out << "(alpha=" << *alpha << ")";
    if (p) out << "(p=" << *p << ")";
    return out.str();
}

namespace {
WeightFunction make(std::string name, std::function<double(double, double)> fn,
                    bool restricted) {
    WeightFunction f;
    f.name = std::move(name);
    f.fn = std::move(fn);
    f.increasing = true;
    f.convex = true;
    f.restricted = restricted;
    return f;
}
}  // namespace

WeightFunction first_zagreb() {
    return make("first_zagreb", [](double x, double y) { return x + y; }, true);
}

WeightFunction first_hyper_zagreb() {
    return make("first_hyper_zagreb",
                [](double x, double y) { return (x + y) * (x + y); }, true);
}

WeightFunction general_sum_connectivity(double alpha) {
    if (!(alpha >= 1.0))
        throw std::invalid_argument("general_sum_connectivity needs alpha >= 1");
    auto f = make("general_sum_connectivity",
                  [alpha](double x, double y) { return std::pow(x + y, alpha); }, true);
    f.alpha = alpha;
    return f;
}

WeightFunction forgotten() {
    return make("forgotten", [](double x, double y) { return x * x + y * y; }, true);
}

WeightFunction sombor() {
    return make("sombor", [](double x, double y) { return std::sqrt(x * x + y * y); },
                true);
}

WeightFunction p_sombor(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("p_sombor needs p >= 1");
    auto f = make("p_sombor",
                  [p](double x, double y) {
                      return std::pow(std::pow(x, p) + std::pow(y, p), 1.0 / p);
                  },
                  true);
    f.p = p;
    return f;
}

WeightFunction second_zagreb() {
    return make("second_zagreb", [](double x, double y) { return x * y; }, false);
}

WeightFunction second_hyper_zagreb() {
    return make("second_hyper_zagreb",
                [](double x, double y) { return x * y * x * y; }, false);
}

WeightFunction first_gourava() {
    return make("first_gourava", [](double x, double y) { return x + y + x * y; }, false);
}

WeightFunction second_gourava() {
    return make("second_gourava", [](double x, double y) { return (x + y) * x * y; },
                false);
}

WeightFunction first_hyper_gourava() {
    return make("first_hyper_gourava",
                [](double x, double y) {
                    double g = x + y + x * y;
                    return g * g;
                },
                false);
}

WeightFunction unit_weight() {
    return make("unit", [](double, double) { return 1.0; }, true);
}

std::vector<WeightFunction> catalog() {
    return {first_zagreb(),
            first_hyper_zagreb(),
            general_sum_connectivity(2.0),
            forgotten(),
            sombor(),
            p_sombor(2.0),
            second_zagreb(),
            second_hyper_zagreb(),
            first_gourava(),
            second_gourava(),
            first_hyper_gourava()};
}

std::string PropertyVerdict::describe() const {
    if (pass) return "pass";
    std::ostringstream out;
    out << "fail(" << a.x << "," << a.y;
    if (has_pair) out << "|" << b.x << "," << b.y;
    out << ")";
    return out.str();
}

PropertyVerdict check_symmetric(const WeightFunction& f, int delta) {
    if (delta < 2) throw std::invalid_argument("check_symmetric needs delta >= 2");
    for (int x = 1; x <= delta; ++x)
        for (int y = 1; y <= delta; ++y) {
            double a = f.eval(x, y), b = f.eval(y, x);
            if (std::abs(a - b) > 1e-14 * std::max(1.0, std::abs(a)))
                return {false, {x, y}, {}, false};
        }
    return {};
}

PropertyVerdict check_increasing(const WeightFunction& f, int delta) {
    if (delta < 2) throw std::invalid_argument("check_increasing needs delta >= 2");
    for (int x = 1; x < delta; ++x)
        for (int y = 1; y <= delta; ++y)
            if (f.eval(x + 1, y) < f.eval(x, y) - kPropertyTol)
                return {false, {x, y}, {}, false};
    return {};
}

PropertyVerdict check_convex(const WeightFunction& f, int delta) {
    if (delta < 3) throw std::invalid_argument("check_convex needs delta >= 3");
    for (int x = 2; x <= delta - 1; ++x)
        for (int y = 1; y <= delta; ++y) {
            double dd = f.eval(x + 1, y) - 2.0 * f.eval(x, y) + f.eval(x - 1, y);
            if (dd < -kPropertyTol) return {false, {x, y}, {}, false};
        }
    return {};
}

namespace {

// Shared scan for the restriction and for property P. Splits (x, s-x) of a
// fixed sum s get more balanced as x grows toward s/2, so for i < j the split
// at i is the more imbalanced one and must not be smaller (strictly larger
// for property P).
PropertyVerdict check_splits(const WeightFunction& f, int delta, bool strict) {
    if (delta < 3) throw std::invalid_argument("split checkers need delta >= 3");
    for (int s = 2; s <= 2 * delta; ++s) {
        int half = s / 2;
        std::vector<double> val(static_cast<std::size_t>(half) + 1);
        for (int x = 1; x <= half; ++x) val[x] = f.eval(x, s - x);
        for (int i = 1; i <= half; ++i)
            for (int j = i + 1; j <= half; ++j) {
                bool bad = strict ? !(val[i] - val[j] > kPropertyTol)
                                  : (val[i] < val[j] - kPropertyTol);
                if (bad) return {false, {i, s - i}, {j, s - j}, true};
            }
    }
    return {};
}

}  // namespace

PropertyVerdict check_restricted(const WeightFunction& f, int delta) {
    return check_splits(f, delta, false);
}

PropertyVerdict check_property_p(const WeightFunction& f, int delta) {
    return check_splits(f, delta, true);
}

double topological_index(const Graph& g, const WeightFunction& f) {
    double sum = 0.0;
    for (const auto& [u, v] : g.edges()) sum += f.eval(g.degree(u), g.degree(v));
    return sum;
}

}  // namespace wspec
