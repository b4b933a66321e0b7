#include "squidopt/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace squidopt {

namespace {

std::string describe_non_finite(const Point& position, double value) {
    std::ostringstream os;
    os.precision(17);
    os << "objective returned " << value << " at (";
    for (std::size_t k = 0; k < position.size(); ++k) {
        if (k) os << ", ";
        os << position[k];
    }
    os << ')';
    return os.str();
}

}  // namespace

NonFiniteObjective::NonFiniteObjective(Point position, double value)
    : std::runtime_error(describe_non_finite(position, value)),
      position_(std::move(position)),
      value_(value) {}

SearchSpace::SearchSpace(Point lower, Point upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) throw DimensionError("search space needs at least one axis");
    if (lower_.size() != upper_.size())
        throw DimensionError("lower and upper bounds differ in length");
    for (std::size_t k = 0; k < lower_.size(); ++k) {
        if (!(lower_[k] < upper_[k]))
            throw ParameterError("axis " + std::to_string(k) + ": lower bound must be below upper bound");
    }
}

SearchSpace SearchSpace::cube(std::size_t dim, double lo, double hi) {
    return SearchSpace(Point(dim, lo), Point(dim, hi));
}

double SearchSpace::mean_width() const noexcept {
    double total = 0.0;
    for (std::size_t k = 0; k < dim(); ++k) total += upper_[k] - lower_[k];
    return total / static_cast<double>(dim());
}

bool SearchSpace::contains(std::span<const double> point) const noexcept {
    if (point.size() != dim()) return false;
    for (std::size_t k = 0; k < dim(); ++k) {
        if (!(point[k] >= lower_[k] && point[k] <= upper_[k])) return false;
    }
    return true;
}

Point clamp(std::span<const double> point, const SearchSpace& space) {
    Point out(point.begin(), point.end());
    clamp_in_place(out, space);
    return out;
}

void clamp_in_place(std::span<double> point, const SearchSpace& space) {
    if (point.size() != space.dim())
        throw DimensionError("point has " + std::to_string(point.size()) + " components, space has " +
                             std::to_string(space.dim()));
    for (std::size_t k = 0; k < point.size(); ++k)
        point[k] = std::clamp(point[k], space.lower()[k], space.upper()[k]);
}

Point uniform_point(const SearchSpace& space, RngStream& rng) {
    Point p(space.dim());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = rng.uniform(space.lower()[k], space.upper()[k]);
    return p;
}

Objective::Objective(std::string name, SearchSpace space, ObjectiveFn fn, std::optional<KnownOptimum> optimum)
    : name_(std::move(name)), space_(std::move(space)), fn_(std::move(fn)), optimum_(std::move(optimum)) {
    if (!fn_) throw ParameterError("objective function is empty");
    if (optimum_ && !space_.contains(optimum_->position))
        throw ParameterError("known optimum of '" + name_ + "' lies outside its search space");
}

void Budget::validate() const {
    if (max_generations == 0) throw ParameterError("max_generations must be positive");
    if (max_evaluations && *max_evaluations == 0) throw ParameterError("max_evaluations must be positive");
    if (max_seconds && !(*max_seconds > 0.0)) throw ParameterError("max_seconds must be positive");
}

Evaluator::Evaluator(const Objective& objective, const Budget& budget)
    : objective_(objective),
      budget_(budget),
      best_fitness_(std::numeric_limits<double>::infinity()),
      start_(std::chrono::steady_clock::now()) {
    budget_.validate();
}

bool Evaluator::exhausted() const {
    if (budget_.max_evaluations && count_ >= *budget_.max_evaluations) return true;
    if (budget_.max_seconds) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed.count() >= *budget_.max_seconds) return true;
    }
    return false;
}

bool Evaluator::target_reached() const noexcept {
    return budget_.target_fitness && has_incumbent() && best_fitness_ <= *budget_.target_fitness;
}

double Evaluator::evaluate(std::span<const double> x) {
    if (budget_.max_evaluations && count_ >= *budget_.max_evaluations)
        throw std::logic_error("evaluation requested past the evaluation budget");
    const double value = objective_(x);
    ++count_;
    if (!std::isfinite(value)) throw NonFiniteObjective(Point(x.begin(), x.end()), value);
    if (!has_incumbent() || value < best_fitness_) {
        best_fitness_ = value;
        best_position_.assign(x.begin(), x.end());
    }
    return value;
}

const char* to_string(SwarmTag tag) noexcept {
    switch (tag) {
        case SwarmTag::primary: return "primary";
        case SwarmTag::secondary: return "secondary";
        case SwarmTag::none: return "none";
    }
    return "none";
}

}  // namespace squidopt
