#pragma once

#include "gasvol/inference.hpp"
#include "gasvol/series.hpp"

#include <concepts>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <span>
#include <utility>
#include <vector>

namespace gasvol {

/// Reads one numeric column of a comma-separated file. A first row that does
/// not parse as numbers is taken as the header. `column` selects by header
/// name; without it the first column is read. Throws ParseError (with the
/// 1-based line) on malformed rows and on input without data rows.
std::vector<double> read_csv_column(std::istream& in, const std::optional<std::string>& column = {});
std::vector<double> read_csv_column(const std::filesystem::path& path,
                                    const std::optional<std::string>& column = {});

ReturnSeries read_series_csv(const std::filesystem::path& path,
                             const std::optional<std::string>& column = {});

/// Single column with header `name`; values in shortest round-trip form.
void write_series_csv(std::ostream& out, std::span<const double> values, const std::string& name = "x");

/// x,estimate,bias_correction,center,half_width,lower,upper,h,error
void write_band_csv(std::ostream& out, const VolatilityCurve& curve);

/// x,t_stat,sigma2_pos,sigma2_neg,h_pos,h_neg,v_pos,v_neg,exceeds,critical_value,reject
void write_symmetry_csv(std::ostream& out, const SymmetryTestResult& result);

/// Shortest decimal string that reads back to the same double.
std::string format_number(double v);

/// Ordered key=value run manifest.
class Manifest {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value) { set(key, format_number(value)); }
    void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
    template <std::integral T>
        requires(!std::same_as<T, bool>)
    void set(const std::string& key, T value) {
        set(key, std::to_string(value));
    }
    void set(const std::string& key, const char* value) { set(key, std::string(value)); }

    const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }
    std::optional<std::string> get(const std::string& key) const;

    void write(std::ostream& out) const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Opens `path` for writing, creating parent directories; throws Error on failure.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace gasvol
