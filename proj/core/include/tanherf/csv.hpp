#pragma once

#include <string>
#include <vector>

#include "tanherf/dawson_approx.hpp"
#include "tanherf/sampler.hpp"
#include "tanherf/tanh_series.hpp"
#include "tanherf/tuner.hpp"

namespace tanherf {

// Shortest round-tripping decimal form ("%.17g" trimmed); parsing and
// re-serializing a written file reproduces it byte for byte.
std::string format_double(double v);

// Write via a temp file in the same directory plus rename, so readers never
// observe a partial file.
void atomic_write_file(const std::string& path, const std::string& contents);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string serialize() const;  // comma-separated, '\n' terminators
};

CsvTable parse_csv(const std::string& text);

CsvTable series_to_csv(const TanhSeries& series);                    // lambda,alpha,k,c_k
CsvTable tune_reports_to_csv(std::span<const TuneReport> reports);   // lambda,alpha_opt,max_err
CsvTable error_curve_to_csv(const TuneReport& report);               // x,err
CsvTable histogram_to_csv(const Histogram& h);                       // bin_center,count
CsvTable gaussian_sum_to_csv(const GaussianSum& g);                  // i,a_i,sigma_i

// x,F_ref,F_approx,delta over the grid for a segmented approximant.
CsvTable dawson_curve_to_csv(const SegmentedDawson& seg, std::span<const double> grid);

}  // namespace tanherf
