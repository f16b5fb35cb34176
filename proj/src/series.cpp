#include "gasvol/series.hpp"

#include "gasvol/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gasvol {

ReturnSeries::ReturnSeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < kMinLength) {
        throw DataError("return series needs at least " + std::to_string(kMinLength) +
                        " observations, got " + std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DataError("non-finite return at index " + std::to_string(i));
        }
    }
}

double ReturnSeries::mean() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0) /
           static_cast<double>(values_.size());
}

double ReturnSeries::stddev() const {
    const double m = mean();
    double ss = 0.0;
    for (double v : values_) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<double>(values_.size() - 1));
}

DesignPairs::DesignPairs(const ReturnSeries& series) {
    const auto v = series.values();
    regressor_.reserve(v.size() - 1);
    response_.reserve(v.size() - 1);
    for (std::size_t t = 1; t < v.size(); ++t) {
        regressor_.push_back(v[t - 1]);
        response_.push_back(v[t] * v[t]);
    }
    build_sorted();
}

DesignPairs::DesignPairs(std::vector<double> regressor, std::vector<double> response)
    : regressor_(std::move(regressor)), response_(std::move(response)) {
    if (regressor_.size() != response_.size()) {
        throw DataError("design columns differ in length");
    }
    if (regressor_.empty()) throw DataError("empty design");
    for (std::size_t i = 0; i < regressor_.size(); ++i) {
        if (!std::isfinite(regressor_[i]) || !std::isfinite(response_[i])) {
            throw DataError("non-finite design pair at index " + std::to_string(i));
        }
    }
    build_sorted();
}

void DesignPairs::build_sorted() {
    order_.resize(regressor_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
        return regressor_[a] < regressor_[b];
    });
    sorted_x_.resize(order_.size());
    sorted_y_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
        sorted_x_[i] = regressor_[order_[i]];
        sorted_y_[i] = response_[order_[i]];
    }
}

std::pair<std::size_t, std::size_t> DesignPairs::sorted_range(double lo, double hi) const {
    const auto first = std::lower_bound(sorted_x_.begin(), sorted_x_.end(), lo);
    const auto last = std::upper_bound(first, sorted_x_.end(), hi);
    return {static_cast<std::size_t>(first - sorted_x_.begin()),
            static_cast<std::size_t>(last - sorted_x_.begin())};
}

std::size_t DesignPairs::count_in(double lo, double hi) const {
    const auto [first, last] = sorted_range(lo, hi);
    return last - first;
}

double DesignPairs::regressor_quantile(double p) const {
    p = std::clamp(p, 0.0, 1.0);
    const double pos = p * static_cast<double>(sorted_x_.size() - 1);
    const auto i = static_cast<std::size_t>(std::floor(pos));
    if (i + 1 >= sorted_x_.size()) return sorted_x_.back();
    const double frac = pos - static_cast<double>(i);
    return sorted_x_[i] + frac * (sorted_x_[i + 1] - sorted_x_[i]);
}

double DesignPairs::regressor_stddev() const {
    const double n = static_cast<double>(regressor_.size());
    const double m = std::accumulate(regressor_.begin(), regressor_.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : regressor_) ss += (v - m) * (v - m);
    return std::sqrt(ss / std::max(1.0, n - 1.0));
}

}  // namespace gasvol
