#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gasvol {

/// Ordered, finite return series with at least 30 observations.
class ReturnSeries {
public:
    static constexpr std::size_t kMinLength = 30;

    explicit ReturnSeries(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    double mean() const;
    /// Sample standard deviation (n-1 denominator).
    double stddev() const;

private:
    std::vector<double> values_;
};

/// Lagged design (X_{t-1}, X_t^2), t = 2..n.
///
/// Keeps the pairs in their original order and a copy sorted by regressor so
/// that windowed sums only touch the points inside the window.
class DesignPairs {
public:
    explicit DesignPairs(const ReturnSeries& series);
    /// Direct construction from regressor/response columns (response >= 0 not
    /// required here so that synthetic designs can be built in tests).
    DesignPairs(std::vector<double> regressor, std::vector<double> response);

    std::size_t size() const noexcept { return regressor_.size(); }
    std::span<const double> regressor() const noexcept { return regressor_; }
    std::span<const double> response() const noexcept { return response_; }

    std::span<const double> sorted_regressor() const noexcept { return sorted_x_; }
    std::span<const double> sorted_response() const noexcept { return sorted_y_; }
    /// Original index of the i-th sorted pair.
    std::span<const std::size_t> sorted_index() const noexcept { return order_; }

    /// Half-open range [first, last) of sorted positions with lo <= x <= hi.
    std::pair<std::size_t, std::size_t> sorted_range(double lo, double hi) const;
    std::size_t count_in(double lo, double hi) const;

    double min_regressor() const { return sorted_x_.front(); }
    double max_regressor() const { return sorted_x_.back(); }
    /// Empirical quantile of the regressor (linear interpolation, type 7).
    double regressor_quantile(double p) const;
    double regressor_stddev() const;

private:
    void build_sorted();

    std::vector<double> regressor_;
    std::vector<double> response_;
    std::vector<double> sorted_x_;
    std::vector<double> sorted_y_;
    std::vector<std::size_t> order_;
};

}  // namespace gasvol
