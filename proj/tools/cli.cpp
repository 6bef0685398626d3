#include "cli.hpp"

#include "report.hpp"

#include "ek/euler_bernoulli.hpp"
#include "ek/kernel.hpp"
#include "ek/polytope_mc.hpp"
#include "ek/zeta.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>

namespace ek::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Status overall(bool all_ok) { return all_ok ? Status::Pass : Status::Fail; }

RunReport kernel_show(unsigned n) {
    const PiecewiseKernel& k = closed_form(n);
    RunReport r{"kernel show"};
    r.parameters = {{"n", n}, {"split", k.split_line()}};
    const bool diag = k.split() == Split::Diagonal;
    r.results.push_back({{"branch", "branch_le"},
                         {"region", diag ? "u - v <= 0" : "u + v - 1 <= 0"},
                         {"polynomial", k.branch_le().to_string()}});
    r.results.push_back({{"branch", "branch_ge"},
                         {"region", diag ? "u - v >= 0" : "u + v - 1 >= 0"},
                         {"polynomial", k.branch_ge().to_string()}});
    return r;
}

RunReport kernel_verify(unsigned max_n) {
    RunReport r{"kernel verify"};
    r.parameters = {{"max_n", max_n}};
    bool all_ok = true;
    for (unsigned n = 1; n < max_n; ++n) {
        const auto start = Clock::now();
        const bool ok = recurrence_step(closed_form(n)) == closed_form(n + 1);
        all_ok = all_ok && ok;
        r.results.push_back({{"n", n},
                             {"check", "step(K_" + std::to_string(n) + ") = K_" + std::to_string(n + 1)},
                             {"result", verdict(ok)},
                             {"seconds", number(seconds_since(start))}});
    }
    r.status = overall(all_ok);
    return r;
}

RunReport identities() {
    RunReport r{"identities"};
    bool all_ok = true;
    auto add = [&](const std::vector<IdentityCheck>& checks) {
        for (const auto& c : checks) {
            all_ok = all_ok && c.pass;
            r.results.push_back({{"identity", c.name},
                                 {"range", std::to_string(c.first) + ".." + std::to_string(c.last)},
                                 {"result", verdict(c.pass)},
                                 {"detail", c.detail}});
        }
    };
    add(euler_identity_suite());
    add(kernel_identity_suite());
    r.status = overall(all_ok);
    return r;
}

RunReport delta_table(unsigned max_n) {
    constexpr double kTol = 1e-10;
    RunReport r{"delta"};
    r.parameters = {{"max_n", max_n}, {"tolerance", kTol}};
    bool all_ok = true;
    for (unsigned n = 2; n <= max_n; ++n) {
        const Rational by_trace = delta(n, DeltaMethod::Trace);
        const bool routes_agree = by_trace == delta(n, DeltaMethod::Closed);
        const double value = by_trace.to_double();
        const double from_series = series_S(n) * std::pow(2.0 / std::numbers::pi, n);
        const double error = std::abs(from_series - value);
        const bool ok = routes_agree && error < kTol;
        all_ok = all_ok && ok;
        r.results.push_back({{"n", n},
                             {"delta", by_trace.to_string()},
                             {"numeric", number(value)},
                             {"trace_eq_closed", verdict(routes_agree)},
                             {"series", number(from_series)},
                             {"abs_error", number(error)},
                             {"result", verdict(ok)}});
    }
    r.status = overall(all_ok);
    return r;
}

RunReport s_table(unsigned max_n) {
    const SeriesConfig series;
    const double tol = 2.0 * series.tolerance;
    RunReport r{"s"};
    r.parameters = {{"max_n", max_n}, {"tolerance", tol}};
    bool all_ok = true;
    for (unsigned n = 2; n <= max_n; ++n) {
        const ExactConstant s = s_value(n);
        const double value = s.numeric();
        const double from_series = series_S(n, series);
        const double error = std::abs(from_series - value);
        const bool ok = error < tol;
        all_ok = all_ok && ok;
        r.results.push_back({{"n", n},
                             {"rational_part", s.rational_part.to_string()},
                             {"pi_power", s.pi_power},
                             {"numeric", number(value)},
                             {"series", number(from_series)},
                             {"abs_error", number(error)},
                             {"result", verdict(ok)}});
    }
    r.status = overall(all_ok);
    return r;
}

std::vector<unsigned> indices(const std::optional<unsigned>& n, const std::optional<unsigned>& max_n,
                              unsigned first) {
    if (n && max_n) {
        throw std::invalid_argument("give either <n> or --max-n, not both");
    }
    if (n) {
        return {*n};
    }
    if (!max_n) {
        throw std::invalid_argument("missing <n> or --max-n");
    }
    std::vector<unsigned> out;
    for (unsigned k = first; k <= *max_n; ++k) {
        out.push_back(k);
    }
    return out;
}

RunReport zeta_even_table(const std::vector<unsigned>& ns) {
    constexpr double kTol = 1e-12;
    RunReport r{"zeta even"};
    r.parameters = {{"n", ns}, {"tolerance", kTol}};
    bool all_ok = true;
    for (const unsigned n : ns) {
        const ExactConstant z = zeta_even(n);
        // S(2n) = (1 - 2^{-2n}) zeta(2n)
        const bool linked =
            s_value(2 * n).rational_part == (Rational(1) - Rational::pow2(-2L * n)) * z.rational_part;
        const double value = z.numeric();
        const double from_series = series_zeta(2 * n);
        const double error = std::abs(from_series - value);
        const bool ok = linked && error < kTol;
        all_ok = all_ok && ok;
        r.results.push_back({{"n", n},
                             {"s", 2 * n},
                             {"rational_part", z.rational_part.to_string()},
                             {"pi_power", z.pi_power},
                             {"numeric", number(value)},
                             {"series", number(from_series)},
                             {"abs_error", number(error)},
                             {"volume_link", verdict(linked)},
                             {"result", verdict(ok)}});
    }
    r.status = overall(all_ok);
    return r;
}

struct OddOptions {
    std::string method = "formula";
    QuadratureConfig quadrature;
};

RunReport zeta_odd_table(const std::vector<unsigned>& ns, const OddOptions& opt) {
    RunReport r{"zeta odd"};
    bool all_ok = true;
    if (opt.method == "formula") {
        // Exact Euler formula for S(2n+1) = beta(2n+1).
        constexpr double kTol = 1e-10;
        r.parameters = {{"n", ns}, {"method", opt.method}, {"tolerance", kTol}};
        for (const unsigned n : ns) {
            const ExactConstant s = s_odd(n);
            const bool in_range = s_odd_in_volume_range(n);
            const bool linked = !in_range || s_value(2 * n + 1) == s;
            const double value = s.numeric();
            const double from_series = series_beta(2 * n + 1);
            const double error = std::abs(from_series - value);
            const bool ok = linked && error < kTol;
            all_ok = all_ok && ok;
            r.results.push_back({{"n", n},
                                 {"s", 2 * n + 1},
                                 {"quantity", "S(" + std::to_string(2 * n + 1) + ")"},
                                 {"rational_part", s.rational_part.to_string()},
                                 {"pi_power", s.pi_power},
                                 {"numeric", number(value)},
                                 {"series", number(from_series)},
                                 {"abs_error", number(error)},
                                 {"result", verdict(ok)},
                                 {"note", in_range ? "" : "outside polytope range n >= 2"}});
        }
        r.status = overall(all_ok);
        return r;
    }

    std::function<double(unsigned)> route;
    double tol = 0.0;
    if (opt.method == "quadrature") {
        route = [&](unsigned n) { return zeta_odd_quadrature(n, opt.quadrature); };
        tol = 1e-10;
    } else if (opt.method == "logtan") {
        route = [&](unsigned n) { return zeta_odd_logtan(n, opt.quadrature); };
        tol = 1e-8;
    } else {
        route = [](unsigned n) { return series_zeta(2 * n + 1); };
    }
    r.parameters = {{"n", ns}, {"method", opt.method}};
    if (tol > 0.0) {
        r.parameters["tolerance"] = tol;
        r.parameters["panels"] = opt.quadrature.panels;
        r.parameters["nodes_per_panel"] = opt.quadrature.nodes_per_panel;
    }
    for (const unsigned n : ns) {
        if (n < 1) {
            throw std::invalid_argument("zeta odd: n must be >= 1 for method " + opt.method);
        }
        const double value = route(n);
        Json row = {{"n", n}, {"s", 2 * n + 1}, {"value", number(value)}};
        if (tol > 0.0) {
            const double from_series = series_zeta(2 * n + 1);
            const double error = std::abs(value - from_series);
            const bool ok = error < tol;
            all_ok = all_ok && ok;
            row["series"] = number(from_series);
            row["abs_error"] = number(error);
            row["result"] = verdict(ok);
        }
        r.results.push_back(std::move(row));
    }
    r.status = tol > 0.0 ? overall(all_ok) : Status::Info;
    return r;
}

Json mc_row(const McEstimate& e, unsigned dimension, double reference) {
    return {{"dimension", dimension},
            {"samples", e.samples},
            {"seed", e.seed},
            {"mean", number(e.mean)},
            {"stderr", number(e.std_error)},
            {"ci95_low", number(e.ci95_low())},
            {"ci95_high", number(e.ci95_high())},
            {"reference", number(reference)},
            {"z_score", number(e.z_score(reference))},
            {"guard_hits", e.guard_hits}};
}

struct McOptions {
    unsigned n = 2;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t chunk = 1 << 16;
    unsigned workers = 0;
};

RunReport mc_volume_cmd(const McOptions& o) {
    McConfig cfg{o.n, o.samples, o.seed, o.chunk};
    RunReport r{"mc volume"};
    r.parameters = {{"n", o.n}, {"samples", o.samples}, {"seed", o.seed}, {"chunk", o.chunk}};
    const McEstimate e = mc_volume(cfg, o.workers);
    r.results.push_back(mc_row(e, o.n, delta(o.n).to_double()));
    return r;
}

RunReport mc_zeta_odd_cmd(const McOptions& o) {
    McConfig cfg{2 * o.n, o.samples, o.seed, o.chunk};
    RunReport r{"mc zeta-odd"};
    r.parameters = {{"n", o.n}, {"samples", o.samples}, {"seed", o.seed}, {"chunk", o.chunk}};
    const McEstimate e = mc_zeta_odd(o.n, cfg, o.workers);
    r.results.push_back(mc_row(e, 2 * o.n, series_zeta(2 * o.n + 1)));
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Euler-polynomial kernels, polytope volumes and zeta values", "eulerkernel"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "table";
    if (const char* env = std::getenv(kFormatEnv); env != nullptr && parse_format(env)) {
        format_name = env;
    }
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    std::function<RunReport()> action;

    auto* kernel = app.add_subcommand("kernel", "Closed-form kernels and the recurrence oracle");
    kernel->require_subcommand(1);
    unsigned show_n = 0;
    auto* show = kernel->add_subcommand("show", "Print both polynomial pieces of K_n");
    show->add_option("n", show_n, "Kernel order")->required()->check(CLI::Range(1u, 64u));
    show->callback([&] { action = [&] { return kernel_show(show_n); }; });
    unsigned verify_max = 12;
    auto* verify = kernel->add_subcommand("verify", "Check step(K_n) = K_{n+1} for n < max-n");
    verify->add_option("--max-n", verify_max, "Highest order checked")->check(CLI::Range(2u, 40u));
    verify->callback([&] { action = [&] { return kernel_verify(verify_max); }; });

    auto* ids = app.add_subcommand("identities", "Exact Euler-polynomial and kernel identities");
    ids->callback([&] { action = [] { return identities(); }; });

    unsigned delta_max = 12;
    auto* delta_cmd = app.add_subcommand("delta", "Exact polytope volumes");
    delta_cmd->add_option("--max-n", delta_max, "Largest dimension")->check(CLI::Range(2u, 40u));
    delta_cmd->callback([&] { action = [&] { return delta_table(delta_max); }; });

    unsigned s_max = 12;
    auto* s_cmd = app.add_subcommand("s", "Exact S(n) = (pi/2)^n delta_n");
    s_cmd->add_option("--max-n", s_max, "Largest n")->check(CLI::Range(2u, 40u));
    s_cmd->callback([&] { action = [&] { return s_table(s_max); }; });

    auto* zeta = app.add_subcommand("zeta", "Zeta values at even and odd integers");
    zeta->require_subcommand(1);
    std::optional<unsigned> even_n;
    std::optional<unsigned> even_max;
    auto* even = zeta->add_subcommand("even", "zeta(2n) from Bernoulli numbers");
    even->add_option("n", even_n, "Index (argument 2n)")->check(CLI::Range(1u, 30u));
    even->add_option("--max-n", even_max, "Table for n = 1..max-n")->check(CLI::Range(1u, 30u));
    even->callback([&] { action = [&] { return zeta_even_table(indices(even_n, even_max, 1)); }; });

    std::optional<unsigned> odd_n;
    std::optional<unsigned> odd_max;
    OddOptions odd_opt;
    std::string endpoint = "open";
    auto* odd = zeta->add_subcommand("odd", "zeta(2n+1) by quadrature, or S(2n+1) by formula");
    odd->add_option("n", odd_n, "Index (argument 2n+1)")->check(CLI::Range(0u, 30u));
    odd->add_option("--max-n", odd_max, "Table for n = 1..max-n")->check(CLI::Range(1u, 30u));
    odd->add_option("--method", odd_opt.method, "formula | quadrature | logtan | series")
        ->check(CLI::IsMember({"formula", "quadrature", "logtan", "series"}));
    odd->add_option("--panels", odd_opt.quadrature.panels, "Quadrature panels")->check(CLI::Range(1u, 4096u));
    odd->add_option("--nodes", odd_opt.quadrature.nodes_per_panel, "Nodes per panel")
        ->check(CLI::Range(2u, 200u));
    odd->add_option("--endpoint", endpoint, "open | limit")->check(CLI::IsMember({"open", "limit"}));
    odd->callback([&] {
        odd_opt.quadrature.endpoint_handling =
            endpoint == "limit" ? EndpointHandling::LimitValue : EndpointHandling::OpenShifted;
        action = [&] { return zeta_odd_table(indices(odd_n, odd_max, 1), odd_opt); };
    });

    auto* mc = app.add_subcommand("mc", "Seeded Monte Carlo estimates");
    mc->require_subcommand(1);
    McOptions mc_opt;
    auto add_mc_options = [&](CLI::App* sub, const char* n_help, unsigned min_n) {
        sub->add_option("n", mc_opt.n, n_help)->required()->check(CLI::Range(min_n, 64u));
        sub->add_option("--samples", mc_opt.samples, "Number of samples")->check(CLI::PositiveNumber);
        sub->add_option("--seed", mc_opt.seed, "64-bit seed");
        sub->add_option("--chunk", mc_opt.chunk, "Samples per work unit")->check(CLI::PositiveNumber);
        sub->add_option("--workers", mc_opt.workers, "Threads (0 = all cores)");
    };
    auto* volume = mc->add_subcommand("volume", "Volume of the cyclic polytope in dimension n");
    add_mc_options(volume, "Dimension", 2u);
    volume->callback([&] { action = [&] { return mc_volume_cmd(mc_opt); }; });
    auto* zeta_odd_mc = mc->add_subcommand("zeta-odd", "zeta(2n+1) from the log-tan integral over the 2n-polytope");
    add_mc_options(zeta_odd_mc, "Index (dimension 2n)", 1u);
    zeta_odd_mc->callback([&] { action = [&] { return mc_zeta_odd_cmd(mc_opt); }; });

    std::vector<const char*> argv{"eulerkernel"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto format = parse_format(format_name).value_or(OutputFormat::Table);
    try {
        const auto start = Clock::now();
        RunReport report = action();
        report.elapsed_s = seconds_since(start);
        render(report, format, out);
        return report.exit_code();
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ek::cli
