// Command-line front end: tuning, table generation, sampling, histogram
// fitting, Dawson approximation, ladder verification and micro-benchmarks.
// Data commands are byte-reproducible for fixed flags and seed.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <future>
#include <iostream>
#include <sstream>

#include "tanherf/csv.hpp"
#include "tanherf/ladder.hpp"
#include "tanherf/reffuncs.hpp"
#include "tanherf/sampler.hpp"

namespace {

using namespace tanherf;

constexpr int kTableOrders[] = {1, 2, 3, 4, 5, 7, 10, 15, 20, 30};

void emit(const std::string& out_path, const std::string& contents) {
    if (out_path.empty())
        std::fputs(contents.c_str(), stdout);
    else
        atomic_write_file(out_path, contents);
}

struct CommonFlags {
    int lambda = 0;
    double alpha = 0.0;
    std::string preset;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    int bins = 200;
    std::string out;
    std::string format = "csv";
    int max_n = 20;
    int grid_points = 4001;
    double bracket_lo = 0.05;
    double bracket_hi = 2.0;
    double tol = 1e-6;
};

TanhSeries series_from_flags(const CommonFlags& f) {
    if (!f.preset.empty()) {
        const SamplerPreset p = preset_by_name(f.preset);
        return TanhSeries::build(p.lambda, p.alpha);
    }
    if (f.lambda <= 0 || !(f.alpha > 0.0))
        throw argument_error("need --preset or both --lambda and --alpha");
    return TanhSeries::build(f.lambda, f.alpha);
}

int cmd_tune(const CommonFlags& f) {
    if (f.lambda <= 0) throw argument_error("tune: --lambda is required");
    TuneOptions opts;
    opts.bracket_lo = f.bracket_lo;
    opts.bracket_hi = f.bracket_hi;
    opts.tol = f.tol;
    opts.grid_points = f.grid_points;
    const TuneReport rep = tune_alpha(f.lambda, opts);
    if (f.format == "text") {
        std::ostringstream os;
        os << "lambda " << rep.lambda << "\nalpha_opt " << format_double(rep.alpha_opt)
           << "\nmax_err " << format_double(rep.max_err)
           << "\niterations " << rep.iterations << "\npeaks";
        for (double p : rep.peak_locations) os << ' ' << format_double(p);
        os << '\n';
        emit(f.out, os.str());
    } else {
        emit(f.out, tune_reports_to_csv({&rep, 1}).serialize());
    }
    return 0;
}

int cmd_table1(const CommonFlags& f) {
    std::vector<std::future<TuneReport>> jobs;
    TuneOptions opts;
    opts.grid_points = f.grid_points;
    opts.tol = f.tol;
    for (int lambda : kTableOrders)
        jobs.push_back(std::async(std::launch::async,
                                  [lambda, opts] { return tune_alpha(lambda, opts); }));
    std::vector<TuneReport> reports;
    reports.reserve(jobs.size());
    for (auto& j : jobs) reports.push_back(j.get());
    emit(f.out, tune_reports_to_csv(reports).serialize());
    return 0;
}

int cmd_errcurve(const CommonFlags& f) {
    if (f.lambda <= 0) throw argument_error("errcurve: --lambda is required");
    TuneReport rep;
    if (f.alpha > 0.0) {
        rep.lambda = f.lambda;
        rep.alpha_opt = f.alpha;
        const TanhSeries s = TanhSeries::build(f.lambda, f.alpha);
        for (double x : uniform_grid(0.0, 8.0, f.grid_points))
            rep.error_curve.emplace_back(
                x, static_cast<double>(erf_ref(x) - static_cast<long double>(s.value(x))));
    } else {
        TuneOptions opts;
        opts.grid_points = f.grid_points;
        rep = tune_alpha(f.lambda, opts);
    }
    emit(f.out, error_curve_to_csv(rep).serialize());
    return 0;
}

int cmd_sample(const CommonFlags& f) {
    if (f.n == 0) throw argument_error("sample: --n is required");
    SamplerStream stream(series_from_flags(f), f.seed);
    std::string buf;
    buf.reserve(f.n * 20);
    for (std::uint64_t i = 0; i < f.n; ++i) {
        buf += format_double(stream.sample());
        buf += '\n';
    }
    emit(f.out, buf);
    return 0;
}

int cmd_histfit(const CommonFlags& f) {
    if (f.n == 0) throw argument_error("histfit: --n is required");
    SamplerStream stream(series_from_flags(f), f.seed);
    const std::vector<double> samples = stream.sample_n(f.n);
    const Histogram hist = make_histogram(samples, f.bins, -4.0, 4.0);
    const HistogramFit fit = fit_histogram(samples, f.bins, -4.0, 4.0);

    std::ostringstream os;
    if (f.format == "text") {
        os << "mean " << format_double(fit.mean) << "\nsigma " << format_double(fit.sigma)
           << "\nn_samples " << fit.n_samples << "\nbin_width "
           << format_double(fit.bin_width) << "\nchi2_per_dof "
           << format_double(fit.chi2_per_dof) << '\n';
    } else {
        os << "mean,sigma,n_samples,bin_width,chi2_per_dof\n"
           << format_double(fit.mean) << ',' << format_double(fit.sigma) << ','
           << fit.n_samples << ',' << format_double(fit.bin_width) << ','
           << format_double(fit.chi2_per_dof) << '\n';
    }
    std::fputs(os.str().c_str(), stdout);
    if (!f.out.empty()) atomic_write_file(f.out, histogram_to_csv(hist).serialize());
    return 0;
}

int cmd_dawson_fit(const CommonFlags& f) {
    const int n = f.n ? static_cast<int>(f.n) : 3;
    auto [sum, rep] = fit_gaussian_sum(n);
    emit(f.out, gaussian_sum_to_csv(sum).serialize());
    std::ostringstream os;
    os << "crossover " << format_double(rep.crossover)
       << "\nmax_err_inner " << format_double(rep.max_err_inner)
       << "\nrms_err_inner " << format_double(rep.rms_err_inner)
       << "\nmax_err_segmented " << format_double(rep.max_err_segmented)
       << "\nrms_err_segmented " << format_double(rep.rms_err_segmented)
       << "\nconverged " << (rep.converged ? 1 : 0) << '\n';
    std::fputs(os.str().c_str(), stderr);
    return rep.converged ? 0 : 1;
}

int cmd_dawson_eval(const CommonFlags& f) {
    const SegmentedDawson seg{builtin_g3(), 2.397};
    const auto grid = uniform_grid(-10.0, 10.0, f.grid_points);
    emit(f.out, dawson_curve_to_csv(seg, grid).serialize());
    return 0;
}

int cmd_ladder_verify(const CommonFlags& f) {
    std::ostringstream os;
    bool all_pass = true;
    for (int n = 0; n <= f.max_n; ++n) {
        os << "n=" << n;
        if (n >= 1) {
            const LadderCheck down = ladder_down_identity(n);
            all_pass = all_pass && down.pass;
            os << " down=" << (down.pass ? "PASS" : "FAIL")
               << " |residual|=" << down.residual.max_abs_coeff().str();
        }
        if (n + 1 <= kMaxHermiteOrder) {
            const LadderCheck up = ladder_up_identity(n);
            all_pass = all_pass && up.pass;
            os << " up=" << (up.pass ? "PASS" : "FAIL")
               << " |residual|=" << up.residual.max_abs_coeff().str();
        }
        os << '\n';
    }
    os << (all_pass ? "ALL PASS\n" : "FAILURES PRESENT\n");
    emit(f.out, os.str());
    return all_pass ? 0 : 1;
}

template <typename F>
double evals_per_second(F&& fn, std::uint64_t iters) {
    volatile double sink = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < iters; ++i) sink = sink + fn(i);
    const auto t1 = std::chrono::steady_clock::now();
    (void)sink;
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    return static_cast<double>(iters) / std::max(secs, 1e-12);
}

int cmd_bench(const CommonFlags& f) {
    const std::uint64_t iters = f.n ? f.n : 2'000'000;
    const auto grid = default_error_grid();
    const auto arg = [&](std::uint64_t i) {
        return -6.0 + 12.0 * static_cast<double>(i % 4096) / 4095.0;
    };

    const double ref_rate =
        evals_per_second([&](std::uint64_t i) { return static_cast<double>(erf_ref(arg(i))); },
                         iters / 4);

    std::ostringstream os;
    os << "name,evals_per_sec,ratio_vs_erf_ref,max_err\n";
    os << "erf_ref," << format_double(ref_rate) << ",1,0\n";
    for (int lambda : {1, 2, 5, 10, 30}) {
        const TuneReport rep = tune_alpha(lambda);
        const TanhSeries s = TanhSeries::build(lambda, rep.alpha_opt);
        const double rate =
            evals_per_second([&](std::uint64_t i) { return s.value(arg(i)); }, iters);
        os << "erf_series_" << lambda << ',' << format_double(rate) << ','
           << format_double(rate / ref_rate) << ','
           << format_double(max_abs_error(s, grid).err) << '\n';
    }
    for (const char* name : {"bassett", "opt1", "opt2"}) {
        const SamplerPreset p = preset_by_name(name);
        SamplerStream stream(TanhSeries::build(p.lambda, p.alpha), 1);
        const double rate =
            evals_per_second([&](std::uint64_t) { return stream.sample(); }, iters / 4);
        os << "sampler_" << name << ',' << format_double(rate) << ','
           << format_double(rate / ref_rate) << ",\n";
    }
    emit(f.out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite tanh-series erf approximants, a Gaussian sampler built on them, "
                 "and Gaussian-sum Dawson approximations"};
    app.require_subcommand(1);

    CommonFlags f;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", f.lambda, "series order");
        cmd->add_option("--alpha", f.alpha, "argument scale");
        cmd->add_option("--preset", f.preset, "bassett | opt1 | opt2");
        cmd->add_option("--seed", f.seed, "random seed");
        cmd->add_option("--n", f.n, "count (samples, iterations or components)");
        cmd->add_option("--bins", f.bins, "histogram bins");
        cmd->add_option("--out", f.out, "output file (stdout when omitted)");
        cmd->add_option("--format", f.format, "csv | text")
            ->check(CLI::IsMember({"csv", "text"}));
        cmd->add_option("--max-n", f.max_n, "highest ladder order to verify");
        cmd->add_option("--grid-points", f.grid_points, "scan grid resolution");
        cmd->add_option("--bracket-lo", f.bracket_lo, "lower alpha bracket");
        cmd->add_option("--bracket-hi", f.bracket_hi, "upper alpha bracket");
        cmd->add_option("--tol", f.tol, "tuning tolerance on alpha");
    };

    struct Entry {
        CLI::App* cmd;
        int (*run)(const CommonFlags&);
    };
    std::vector<Entry> entries = {
        {app.add_subcommand("tune", "minimize the worst-case erf deviation over alpha"), cmd_tune},
        {app.add_subcommand("table1", "tuned alpha and max error for the standard order set"), cmd_table1},
        {app.add_subcommand("errcurve", "erf minus series over a grid"), cmd_errcurve},
        {app.add_subcommand("sample", "draw from the inverse-CDF generator"), cmd_sample},
        {app.add_subcommand("histfit", "sample, histogram and fit a Gaussian"), cmd_histfit},
        {app.add_subcommand("dawson-fit", "fit a Gaussian sum to Dawson's function"), cmd_dawson_fit},
        {app.add_subcommand("dawson-eval", "segmented Dawson approximation vs reference"), cmd_dawson_eval},
        {app.add_subcommand("ladder-verify", "exact ladder identities up to --max-n"), cmd_ladder_verify},
        {app.add_subcommand("bench", "throughput of the evaluators and the sampler"), cmd_bench},
    };
    for (auto& e : entries) add_common(e.cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        for (auto& e : entries)
            if (e.cmd->parsed()) return e.run(f);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
