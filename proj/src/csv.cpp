#include "gasvol/csv.hpp"

#include "gasvol/error.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>


namespace gasvol {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::optional<double> parse_number(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

}  // namespace

std::vector<double> read_csv_column(std::istream& in, const std::optional<std::string>& column) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    std::size_t col = 0;
    bool first_content = true;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        const auto fields = split_fields(line);

        if (first_content) {
            first_content = false;
            bool numeric = true;
            for (auto f : fields) numeric = numeric && parse_number(f).has_value();
            if (!numeric) {
                if (column) {
                    std::size_t i = 0;
                    while (i < fields.size() && fields[i] != *column) ++i;
                    if (i == fields.size()) throw ParseError("column '" + *column + "' not in header", line_no);
                    col = i;
                }
                continue;
            }
            if (column) throw ParseError("column '" + *column + "' requested but file has no header", line_no);
        }

        if (col >= fields.size()) throw ParseError("missing field", line_no);
        const auto v = parse_number(fields[col]);
        if (!v) throw ParseError("not a number: '" + std::string(fields[col]) + "'", line_no);
        if (!std::isfinite(*v)) throw ParseError("non-finite value", line_no);
        values.push_back(*v);
    }
    if (values.empty()) throw ParseError("no data rows", line_no);
    return values;
}

std::vector<double> read_csv_column(const std::filesystem::path& path, const std::optional<std::string>& column) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    return read_csv_column(in, column);
}

ReturnSeries read_series_csv(const std::filesystem::path& path, const std::optional<std::string>& column) {
    return ReturnSeries(read_csv_column(path, column));
}

std::string format_number(double v) { return fmt::format("{}", v); }

void write_series_csv(std::ostream& out, std::span<const double> values, const std::string& name) {
    out << name << '\n';
    for (double v : values) out << format_number(v) << '\n';
}

void write_band_csv(std::ostream& out, const VolatilityCurve& curve) {
    out << "x,estimate,bias_correction,center,half_width,lower,upper,h,error\n";
    for (const auto& p : curve.points) {
        if (!p.ok()) {
            out << format_number(p.x) << ",,,,,,,,\"" << p.error << "\"\n";
            continue;
        }
        out << fmt::format("{},{},{},{},{},{},{},{},\n", format_number(p.x), format_number(p.estimate),
                           format_number(p.bias_correction), format_number(p.center),
                           format_number(p.half_width), format_number(p.lower), format_number(p.upper),
                           format_number(p.h));
    }
}

void write_symmetry_csv(std::ostream& out, const SymmetryTestResult& result) {
    out << "x,t_stat,sigma2_pos,sigma2_neg,h_pos,h_neg,v_pos,v_neg,exceeds,critical_value,reject\n";
    for (const auto& p : result.pairs) {
        out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", format_number(p.x), format_number(p.t_stat),
                           format_number(p.sigma2_pos), format_number(p.sigma2_neg), format_number(p.h_pos),
                           format_number(p.h_neg), format_number(p.v_pos), format_number(p.v_neg),
                           p.exceeds ? 1 : 0, format_number(result.critical_value), result.reject ? 1 : 0);
    }
}

void Manifest::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    entries_.emplace_back(key, value);
}

std::optional<std::string> Manifest::get(const std::string& key) const {
    for (const auto& [k, v] : entries_) {
        if (k == key) return v;
    }
    return std::nullopt;
}

void Manifest::write(std::ostream& out) const {
    for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
}

void Manifest::write(const std::filesystem::path& path) const {
    auto out = open_output(path);
    write(out);
}

std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    return out;
}

}  // namespace gasvol
