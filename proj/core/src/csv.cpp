#include "tanherf/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tanherf/reffuncs.hpp"

namespace tanherf {

std::string format_double(double v) {
    char buf[40];
    // Shortest form that parses back to the same double.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void atomic_write_file(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename " + tmp + " -> " + path + " failed");
}

std::string CsvTable::serialize() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << '\n';
    }
    return out.str();
}

CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (first) {
            t.header = std::move(fields);
            first = false;
        } else {
            t.rows.push_back(std::move(fields));
        }
    }
    return t;
}

CsvTable series_to_csv(const TanhSeries& series) {
    CsvTable t;
    t.header = {"lambda", "alpha", "k", "c_k"};
    for (int k = 0; k < series.order(); ++k)
        t.rows.push_back({std::to_string(series.order()), format_double(series.alpha()),
                          std::to_string(k), format_double(series.coeffs()[k])});
    return t;
}

CsvTable tune_reports_to_csv(std::span<const TuneReport> reports) {
    CsvTable t;
    t.header = {"lambda", "alpha_opt", "max_err"};
    for (const auto& r : reports)
        t.rows.push_back({std::to_string(r.lambda), format_double(r.alpha_opt),
                          format_double(r.max_err)});
    return t;
}

CsvTable error_curve_to_csv(const TuneReport& report) {
    CsvTable t;
    t.header = {"x", "err"};
    for (const auto& [x, err] : report.error_curve)
        t.rows.push_back({format_double(x), format_double(err)});
    return t;
}

CsvTable histogram_to_csv(const Histogram& h) {
    CsvTable t;
    t.header = {"bin_center", "count"};
    for (std::size_t i = 0; i < h.centers.size(); ++i)
        t.rows.push_back({format_double(h.centers[i]), format_double(h.counts[i])});
    return t;
}

CsvTable gaussian_sum_to_csv(const GaussianSum& g) {
    CsvTable t;
    t.header = {"i", "a_i", "sigma_i"};
    int i = 0;
    for (const auto& c : g.components())
        t.rows.push_back({std::to_string(i++), format_double(c.amplitude),
                          format_double(c.width)});
    return t;
}

CsvTable dawson_curve_to_csv(const SegmentedDawson& seg, std::span<const double> grid) {
    CsvTable t;
    t.header = {"x", "F_ref", "F_approx", "delta"};
    for (double x : grid) {
        const double ref = static_cast<double>(dawson_ref(x));
        const double approx = seg.value(x);
        t.rows.push_back({format_double(x), format_double(ref), format_double(approx),
                          format_double(ref - approx)});
    }
    return t;
}

}  // namespace tanherf
