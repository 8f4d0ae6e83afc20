#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zetapair/bounds.hpp"
#include "zetapair/kernels.hpp"
#include "zetapair/pair_sums.hpp"
#include "zetapair/quadrature.hpp"
#include "zetapair/verify.hpp"
#include "zetapair/zero_file.hpp"
#include "zetapair/zeta_zeros.hpp"

namespace {

namespace fs = std::filesystem;
using namespace zetapair;

constexpr const char* kVersion = "1";
constexpr int kExitFailure = 2;
constexpr int kExitCountWarning = 3;

// 17 significant digits, '.' decimal point, no separators.
std::string num(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << v;
    return os.str();
}

kernels::KernelId parse_kernel(const std::string& name) {
    if (name == "fejer") return kernels::KernelId::Fejer;
    if (name == "mt") return kernels::KernelId::MontgomeryTaylor;
    throw CLI::ValidationError("--kernel must be 'fejer' or 'mt'");
}

// "lo:hi:step", endpoints inclusive (within half a step).
std::vector<double> parse_grid(const std::string& text) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0.0 || hi < lo)
        throw CLI::ValidationError("grid must be lo:hi:step with step > 0");
    std::vector<double> g;
    for (double v = lo; v <= hi + step * 0.5; v += step) g.push_back(v);
    return g;
}

quad::QuadratureConfig default_cfg(double abs_tol, double rel_tol) {
    quad::QuadratureConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.rel_tol = rel_tol;
    cfg.max_panels = 40000;
    return cfg;
}

void emit_bound_rows(const std::vector<bounds::BoundRow>& rows,
                     const std::string& format, std::ostream& out) {
    const auto clamp = [](double v) { return v < 0.0 ? 0.0 : v; };
    if (format == "json") {
        out << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            out << "  {\"b\": " << num(r.b) << ", \"c_b\": " << num(r.c_b)
                << ", \"simple\": " << num(clamp(r.simple_coeff))
                << ", \"critical\": " << num(clamp(r.critical_coeff))
                << ", \"simple_critical\": " << num(clamp(r.simple_critical_coeff))
                << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        out << "]\n";
    } else {
        out << "b,c_b,simple,critical,simple_critical\n";
        for (const auto& r : rows)
            out << num(r.b) << "," << num(r.c_b) << "," << num(clamp(r.simple_coeff))
                << "," << num(clamp(r.critical_coeff)) << ","
                << num(clamp(r.simple_critical_coeff)) << "\n";
    }
}

fs::path cache_dir_from_env(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ZETAPAIR_CACHE_DIR")) return env;
    return fs::current_path() / "zero-cache";
}

int run_zeros(double t_min, double t_max, const std::string& cache_flag,
              const std::string& out_path) {
    const fs::path dir = cache_dir_from_env(cache_flag);
    fs::create_directories(dir);
    std::ostringstream name;
    name << "zeros_" << num(t_min) << "_" << num(t_max) << "_g6_v" << kVersion
         << ".txt";
    const fs::path cache = dir / name.str();

    zeros::ZeroDataset ds;
    if (fs::exists(cache)) {
        ds = io::parse_zero_file(cache);
        std::cout << "cache hit: " << cache.string() << "\n";
    } else {
        ds = zeros::compute_zeros(t_min, t_max, default_cfg(1e-10, 1e-10));
        io::write_zero_file(cache, ds);
        std::cout << "cache write: " << cache.string() << "\n";
    }
    if (!out_path.empty()) io::write_zero_file(out_path, ds);

    const double expected = zeros::n_of_T(t_max) - zeros::n_of_T(t_min);
    const double diff = std::abs(static_cast<double>(ds.size()) - expected);
    const double slack = 2.0 + std::log(t_max);
    std::cout << "count: " << ds.size() << "\n";
    std::cout << "N(T) main-term difference: " << num(expected)
              << " (|delta| = " << num(diff) << ", allowed " << num(slack)
              << ")\n";
    if (ds.count_warning || diff > slack) {
        std::cout << "WARNING: zero count disagrees with the counting term\n";
        return kExitCountWarning;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pair-correlation toolkit for zeros of the zeta function"};
    app.require_subcommand(1);

    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    app.add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
    app.add_option("--rel-tol", rel_tol, "quadrature relative tolerance");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "lower-bound coefficients");
    std::string kernel_name = "mt";
    double b_value = -1.0;
    std::string b_grid;
    std::string format = "csv";
    bool thresholds = false;
    cmd_bounds->add_option("--kernel", kernel_name, "fejer or mt");
    cmd_bounds->add_option("--b", b_value, "single box width b >= 0");
    cmd_bounds->add_option("--grid", b_grid, "b grid lo:hi:step");
    cmd_bounds->add_option("--format", format, "csv or json");
    cmd_bounds->add_flag("--thresholds", thresholds,
                         "also print the failure thresholds in b");

    // kernel-eval
    auto* cmd_kernel = app.add_subcommand("kernel-eval", "evaluate kernels");
    std::string ke_kernel = "mt";
    double ke_b = 0.0;
    std::vector<double> ke_alpha, ke_t;
    std::vector<double> ke_z;
    cmd_kernel->add_option("--kernel", ke_kernel, "fejer or mt");
    cmd_kernel->add_option("--b", ke_b, "Tsang parameter b >= 0");
    cmd_kernel->add_option("--alpha", ke_alpha, "evaluate j(alpha)");
    cmd_kernel->add_option("--t", ke_t, "evaluate the Fourier transform at t");
    cmd_kernel->add_option("--z", ke_z, "evaluate K_b at z = re im")
        ->expected(2);

    // zeros
    auto* cmd_zeros = app.add_subcommand("zeros", "compute critical-line zeros");
    double t_min = 10.0, t_max = 100.0;
    std::string cache_flag, zeros_out;
    cmd_zeros->add_option("--t-min", t_min, "window start (>= 10)");
    cmd_zeros->add_option("--t-max", t_max, "window end");
    cmd_zeros->add_option("--cache-dir", cache_flag,
                          "cache directory (env ZETAPAIR_CACHE_DIR)");
    cmd_zeros->add_option("--out", zeros_out, "also write ordinates here");

    // paircorr
    auto* cmd_pc = app.add_subcommand("paircorr", "pair-correlation sums");
    std::string pc_zeros;
    double pc_T = 0.0;
    double pc_x = -1.0;
    std::string pc_window, pc_alpha_grid;
    double pc_trunc = 0.0;
    cmd_pc->add_option("--zeros", pc_zeros, "zero file")->required();
    cmd_pc->add_option("--T", pc_T, "window (T, 2T] for the form factor");
    cmd_pc->add_option("--x", pc_x, "single pair sum at this x (> 0)");
    cmd_pc->add_option("--window", pc_window, "height window lo:hi for --x");
    cmd_pc->add_option("--alpha-grid", pc_alpha_grid, "alpha grid lo:hi:step");
    cmd_pc->add_option("--trunc", pc_trunc, "truncation gap (>= 10)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
    std::vector<std::string> only;
    double tol_override = 0.0;
    cmd_verify->add_option("--only", only,
                           "restrict to groups (kernels bounds paircorr zeros)");
    cmd_verify->add_option("--tolerance", tol_override,
                           "override every check tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto cfg = default_cfg(abs_tol, rel_tol);

        if (*cmd_bounds) {
            const auto kernel = parse_kernel(kernel_name);
            std::vector<double> bs;
            if (!b_grid.empty())
                bs = parse_grid(b_grid);
            else if (b_value >= 0.0)
                bs.push_back(b_value);
            else
                throw CLI::ValidationError("bounds: give --b >= 0 or --grid");
            emit_bound_rows(bounds::table(kernel, bs, cfg), format, std::cout);
            if (thresholds) {
                std::cout << "threshold_simple,"
                          << num(bounds::failure_threshold(
                                 kernel, bounds::BoundKind::Simple, cfg))
                          << "\n";
                std::cout << "threshold_simple_critical,"
                          << num(bounds::failure_threshold(
                                 kernel, bounds::BoundKind::SimpleCritical, cfg))
                          << "\n";
            }
            return 0;
        }

        if (*cmd_kernel) {
            const auto kernel = parse_kernel(ke_kernel);
            for (const double a : ke_alpha)
                std::cout << "j(" << num(a) << ") = "
                          << num(kernels::kernel(kernel, a)) << "\n";
            for (const double t : ke_t)
                std::cout << "jhat(" << num(t) << ") = "
                          << num(kernels::kernel_hat(kernel, t)) << "\n";
            if (ke_z.size() == 2) {
                const auto v = kernels::tsang_K({ke_b, kernel},
                                                {ke_z[0], ke_z[1]}, cfg);
                std::cout << "K_b(" << num(ke_z[0]) << " + " << num(ke_z[1])
                          << "i) = " << num(v.real()) << " + " << num(v.imag())
                          << "i\n";
            }
            return 0;
        }

        if (*cmd_zeros) return run_zeros(t_min, t_max, cache_flag, zeros_out);

        if (*cmd_pc) {
            const auto ds = io::parse_zero_file(pc_zeros);
            if (!pc_alpha_grid.empty()) {
                if (!(pc_T > 0.0))
                    throw CLI::ValidationError("--alpha-grid requires --T");
                const auto curve =
                    pairsum::form_factor_curve(ds, pc_T, parse_grid(pc_alpha_grid));
                std::cout << "alpha,empirical,theory\n";
                for (const auto& p : curve)
                    std::cout << num(p.alpha) << "," << num(p.empirical) << ","
                              << num(p.theory) << "\n";
                return 0;
            }
            if (!(pc_x > 0.0))
                throw CLI::ValidationError("paircorr: x > 0 required");
            pairsum::PairSumSpec spec;
            spec.x = pc_x;
            if (!pc_window.empty()) {
                double lo = 0.0, hi = 0.0;
                char c = 0;
                std::istringstream in(pc_window);
                if (!(in >> lo >> c >> hi) || c != ':' || !(lo < hi))
                    throw CLI::ValidationError("--window must be lo:hi with lo < hi");
                spec.t_lo = lo;
                spec.t_hi = hi;
            } else {
                spec.t_lo = ds.t_min - 1.0;
                spec.t_hi = ds.t_max;
            }
            if (pc_trunc > 0.0) spec.truncation_gap = pc_trunc;
            const auto res = pairsum::F_pair_sum(ds, spec);
            std::cout << "{\"x\": " << num(spec.x)
                      << ", \"T\": " << num(spec.t_hi)
                      << ", \"value_re\": " << num(res.value.real())
                      << ", \"value_im\": " << num(res.value.imag())
                      << ", \"n_zeros\": " << res.n_zeros
                      << ", \"n_pairs\": " << res.n_pairs_evaluated
                      << ", \"trunc_bound\": " << num(res.truncation_error_bound)
                      << "}\n";
            return 0;
        }

        if (*cmd_verify) {
            verify::VerifyOptions opts;
            opts.groups = only;
            if (cmd_verify->count("--tolerance") > 0)
                opts.tolerance_override = tol_override;
            const auto results = verify::run_verify(opts);
            bool all_ok = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.group << "/"
                          << r.name << " (" << r.detail << ")\n";
                all_ok = all_ok && r.passed;
            }
            std::cout << (all_ok ? "verify: all properties passed\n"
                                 : "verify: FAILURES present\n");
            return all_ok ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
