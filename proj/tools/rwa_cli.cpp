// Command-line front end for the randomly-weighted-average toolkit.
//
// Subcommands: verify-moments, vandermonde, simulate, ks-test, density-table.
// Exit codes: 0 all checks passed, 1 a mathematical or statistical check or
// I/O operation failed, 2 usage/config error.

#include "rwa/report_json.hpp"
#include "rwa/rwa.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using nlohmann::json;

// Config/usage problems detected after flag parsing; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, sep)) out.push_back(token);
    return out;
}

std::vector<rwa::Rational> parse_rational_list(const std::string& text) {
    std::vector<rwa::Rational> out;
    for (const auto& tok : split(text, ',')) out.push_back(rwa::parse_rational(tok));
    if (out.empty()) throw UsageError("expected a non-empty comma-separated list of rationals");
    return out;
}

std::vector<rwa::BetaParams> parse_components(const std::string& text) {
    std::vector<rwa::BetaParams> out;
    for (const auto& pair : split(text, ';')) {
        const auto nm = split(pair, ',');
        if (nm.size() != 2) throw UsageError("component '" + pair + "' must be written as 'n,m'");
        out.emplace_back(rwa::parse_rational(nm[0]), rwa::parse_rational(nm[1]));
    }
    if (out.empty()) throw UsageError("expected at least one 'n,m' component");
    return out;
}

std::string join_rationals(const std::vector<rwa::Rational>& qs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) out += sep;
        out += rwa::to_string(qs[i]);
    }
    return out;
}

std::string describe_spec(const rwa::RwaSpec& spec) {
    std::string d = "components=";
    for (std::size_t j = 0; j < spec.size(); ++j) {
        if (j) d += ';';
        d += rwa::to_string(spec.components()[j].n) + ',' + rwa::to_string(spec.components()[j].m);
    }
    d += " alpha=" + join_rationals(spec.weights().alpha, ',');
    return d;
}

struct SpecChoice {
    rwa::RwaSpec spec;
    std::string description;
    bool semicircle;  // corollary2: results live on (-a, a) through t = 2aZ - a
};

SpecChoice resolve_spec(const std::string& preset, const std::string& components,
                        const std::string& alpha_weights, unsigned r) {
    if (!preset.empty() && !components.empty())
        throw UsageError("--preset and --components are mutually exclusive");

    if (!preset.empty()) {
        if (!alpha_weights.empty()) throw UsageError("--alpha-weights cannot override a preset");
        if (r == 0) throw UsageError("--preset requires --r (number of components, >= 1)");
        if (preset == "corollary1")
            return {rwa::corollary1_spec(r), "preset=corollary1 r=" + std::to_string(r), false};
        if (preset == "corollary2")
            return {rwa::corollary2_spec(r), "preset=corollary2 r=" + std::to_string(r), true};
        throw UsageError("unknown preset '" + preset + "' (expected corollary1 or corollary2)");
    }

    if (components.empty()) throw UsageError("one of --preset or --components is required");
    auto parts = parse_components(components);
    if (r != 0 && r != parts.size())
        throw UsageError("--r disagrees with the number of --components entries");

    if (alpha_weights.empty()) {
        rwa::RwaSpec spec = rwa::RwaSpec::theorem(std::move(parts));
        std::string desc = describe_spec(spec);
        return {std::move(spec), std::move(desc), false};
    }
    rwa::DirichletParams weights(parse_rational_list(alpha_weights));
    rwa::RwaSpec spec(std::move(parts), std::move(weights));
    std::string desc = describe_spec(spec);
    return {std::move(spec), std::move(desc), false};
}

// Splices a flat key=value config file into the argument list as '--key
// value' pairs, at the position where --config appeared. Keys already given
// on the command line are skipped, so explicit flags override file values.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file path");
            path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + i);
        } else {
            continue;
        }

        std::set<std::string> given;
        for (const auto& arg : args) given.insert(arg.substr(0, arg.find('=')));

        std::ifstream file(path);
        if (!file) throw UsageError("cannot read config file '" + path + "'");
        const auto trim = [](const std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::vector<std::string> spliced;
        std::string line;
        while (std::getline(file, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos || trim(line.substr(0, eq)).empty())
                throw UsageError("config line '" + line + "' is not key=value");
            const std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
                value.back() == value.front())
                value = value.substr(1, value.size() - 2);
            if (given.count("--" + key)) continue;
            spliced.push_back("--" + key);
            spliced.push_back(value);
        }
        args.insert(args.begin() + i, spliced.begin(), spliced.end());
        break;  // one config per invocation
    }
    return args;
}

// Runs the writer against stdout or --out; returns 0, or 1 on I/O failure.
int with_output(const std::string& out_path, const std::function<void(std::ostream&)>& write) {
    if (out_path.empty()) {
        write(std::cout);
        return std::cout ? 0 : 1;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return 1;
    }
    write(file);
    file.flush();
    if (!file) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return 1;
    }
    return 0;
}

struct VerifyOpts {
    std::string preset, components, alpha_weights, out;
    std::string format = "json";
    unsigned r = 0;
    unsigned kmax = 12;
};

int run_verify(const VerifyOpts& o) {
    SpecChoice choice = resolve_spec(o.preset, o.components, o.alpha_weights, o.r);
    rwa::MomentReport report;
    try {
        report = rwa::verify_theorem(choice.spec, o.kmax);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const int io = with_output(o.out, [&](std::ostream& os) {
        if (o.format == "json") {
            json j = report;
            j["spec"] = choice.description;
            os << j.dump(2) << '\n';
        } else {
            os << "# spec: " << choice.description << '\n';
            os << "k,direct,closed_form,equal\n";
            for (unsigned k = 0; k <= report.k_max; ++k)
                os << k << ',' << rwa::to_string(report.direct[k]) << ','
                   << rwa::to_string(report.closed_form[k]) << ',' << (report.equal[k] ? 1 : 0)
                   << '\n';
        }
    });
    if (io != 0) return io;
    return report.overall_pass ? 0 : 1;
}

struct VandermondeOpts {
    std::string shapes, out;
    std::string format = "json";
    unsigned kmax = 12;
};

int run_vandermonde(const VandermondeOpts& o) {
    const auto shapes = parse_rational_list(o.shapes);
    std::vector<bool> equal;
    bool all = true;
    for (unsigned k = 0; k <= o.kmax; ++k) {
        bool ok = false;
        try {
            ok = rwa::vandermonde_check(shapes, k);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        equal.push_back(ok);
        all = all && ok;
    }

    std::vector<std::string> shape_strings;
    for (const auto& s : shapes) shape_strings.push_back(rwa::to_string(s));
    const int io = with_output(o.out, [&](std::ostream& os) {
        if (o.format == "json") {
            const json j = {{"shapes", shape_strings},
                            {"k_max", o.kmax},
                            {"equal", equal},
                            {"overall_pass", all}};
            os << j.dump(2) << '\n';
        } else {
            os << "# shapes: " << join_rationals(shapes, ',') << '\n';
            os << "k,equal\n";
            for (unsigned k = 0; k <= o.kmax; ++k) os << k << ',' << (equal[k] ? 1 : 0) << '\n';
        }
    });
    if (io != 0) return io;
    return all ? 0 : 1;
}

struct SimulateOpts {
    std::string preset, components, alpha_weights, out;
    std::string format = "csv";
    unsigned r = 0;
    double a = 1.0;
    bool a_given = false;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    unsigned bins = 0;
};

int run_simulate(const SimulateOpts& o) {
    if (o.format != "csv") throw UsageError("simulate emits csv only");
    if (o.n == 0) throw UsageError("--n must be >= 1");
    SpecChoice choice = resolve_spec(o.preset, o.components, o.alpha_weights, o.r);
    if (o.a_given && !choice.semicircle)
        throw UsageError("--a applies only to the corollary2 preset");

    const rwa::RngStream base(o.seed);
    rwa::SampleBatch batch =
        rwa::sample_rwa_batch(choice.spec, static_cast<std::size_t>(o.n), base, choice.description);

    double lo = 0.0;
    double hi = 1.0;
    if (choice.semicircle) {
        for (double& v : batch.values) v = 2.0 * o.a * v - o.a;
        batch.description += " a=" + rwa::format_double(o.a) + " transform=2aZ-a";
        lo = -o.a;
        hi = o.a;
    }

    return with_output(o.out, [&](std::ostream& os) {
        if (o.bins > 0)
            rwa::write_histogram_csv(os, rwa::histogram(batch.values, o.bins, lo, hi),
                                     batch.description);
        else
            rwa::write_batch_csv(os, batch);
    });
}

struct KsOpts {
    std::string preset, components, alpha_weights, target_beta, out;
    std::string format = "json";
    unsigned r = 0;
    double a = 1.0;
    bool a_given = false;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    double alpha = 0.001;
};

int run_ks(const KsOpts& o) {
    if (o.n < 1000) throw UsageError("ks-test requires --n >= 1000");
    SpecChoice choice = resolve_spec(o.preset, o.components, o.alpha_weights, o.r);
    if (o.a_given && !choice.semicircle)
        throw UsageError("--a applies only to the corollary2 preset");

    const rwa::RngStream base(o.seed);
    rwa::SampleBatch batch =
        rwa::sample_rwa_batch(choice.spec, static_cast<std::size_t>(o.n), base, choice.description);

    std::function<double(double)> cdf;
    std::string target;
    if (!o.target_beta.empty()) {
        const auto nm = parse_rational_list(o.target_beta);
        if (nm.size() != 2) throw UsageError("--target-beta expects 'n,m'");
        if (nm[0] <= 0 || nm[1] <= 0) throw UsageError("--target-beta shapes must be positive");
        const double tn = rwa::to_double(nm[0]);
        const double tm = rwa::to_double(nm[1]);
        cdf = [tn, tm](double x) { return rwa::beta_cdf(tn, tm, x); };
        target = "beta(" + rwa::to_string(nm[0]) + "," + rwa::to_string(nm[1]) + ")";
    } else if (choice.semicircle) {
        for (double& v : batch.values) v = 2.0 * o.a * v - o.a;
        const auto ps = rwa::PowerSemicircleParams::for_components(choice.spec.size(), o.a);
        cdf = [ps](double x) { return rwa::power_semicircle_cdf(ps, x); };
        target = "power-semicircle(lambda=" + rwa::format_double(ps.lambda) +
                 ",a=" + rwa::format_double(ps.a) + ")";
        choice.description += " a=" + rwa::format_double(o.a) + " transform=2aZ-a";
    } else {
        if (!choice.spec.theorem_mode())
            throw UsageError("decoupled weights have no closed-form target; pass --target-beta");
        const rwa::Rational tn = choice.spec.total_n();
        const rwa::Rational tm = choice.spec.total_m();
        const double dn = rwa::to_double(tn);
        const double dm = rwa::to_double(tm);
        cdf = [dn, dm](double x) { return rwa::beta_cdf(dn, dm, x); };
        target = "beta(" + rwa::to_string(tn) + "," + rwa::to_string(tm) + ")";
    }

    const rwa::KsResult result = rwa::ks_test(batch.values, cdf, o.alpha);
    const int io = with_output(o.out, [&](std::ostream& os) {
        if (o.format == "json") {
            json j = result;
            j["spec"] = choice.description;
            j["target"] = target;
            j["n"] = o.n;
            j["seed"] = o.seed;
            os << j.dump(2) << '\n';
        } else {
            os << "# spec: " << choice.description << '\n';
            os << "# target: " << target << '\n';
            os << "statistic,n_effective,p_value,alpha,pass\n";
            os << rwa::format_double(result.statistic) << ','
               << rwa::format_double(result.n_effective) << ','
               << rwa::format_double(result.p_value) << ',' << rwa::format_double(result.alpha)
               << ',' << (result.pass ? 1 : 0) << '\n';
        }
    });
    if (io != 0) return io;
    return result.pass ? 0 : 1;
}

struct DensityOpts {
    std::string components, out;
    std::string format = "csv";
    double lambda = 0.0;
    bool lambda_given = false;
    unsigned r = 0;
    double a = 1.0;
    std::uint64_t n = 101;
};

int run_density_table(const DensityOpts& o) {
    if (o.format != "csv") throw UsageError("density-table emits csv only");
    if (o.n == 0) throw UsageError("--n must be >= 1");
    if (!o.components.empty() && (o.lambda_given || o.r != 0))
        throw UsageError("--components excludes --lambda/--r");

    const auto count = static_cast<std::size_t>(o.n);
    std::vector<double> xs(count), pdfs(count), cdfs(count);
    std::string desc;

    if (!o.components.empty()) {
        const auto parts = parse_components(o.components);
        if (parts.size() != 1) throw UsageError("density-table takes a single 'n,m' component");
        const double bn = rwa::to_double(parts[0].n);
        const double bm = rwa::to_double(parts[0].m);
        for (std::size_t i = 0; i < count; ++i) {
            xs[i] = static_cast<double>(i + 1) / static_cast<double>(count + 1);
            pdfs[i] = rwa::beta_pdf(bn, bm, xs[i]);
            cdfs[i] = rwa::beta_cdf(bn, bm, xs[i]);
        }
        desc = "beta(" + rwa::to_string(parts[0].n) + "," + rwa::to_string(parts[0].m) + ")";
    } else {
        double lambda = o.lambda;
        if (!o.lambda_given) {
            if (o.r == 0) throw UsageError("provide --lambda, --r, or --components");
            lambda = (static_cast<double>(o.r) - 1.0) / 2.0;
        }
        rwa::PowerSemicircleParams ps(lambda, o.a);
        const double width = 2.0 * ps.a;
        for (std::size_t i = 0; i < count; ++i) {
            xs[i] = -ps.a + static_cast<double>(i + 1) * width / static_cast<double>(count + 1);
            pdfs[i] = rwa::power_semicircle_pdf(ps, xs[i]);
            cdfs[i] = rwa::power_semicircle_cdf(ps, xs[i]);
        }
        desc = "power-semicircle(lambda=" + rwa::format_double(ps.lambda) +
               ",a=" + rwa::format_double(ps.a) + ")";
    }

    return with_output(o.out,
                       [&](std::ostream& os) { rwa::write_density_table_csv(os, desc, xs, pdfs, cdfs); });
}

void add_spec_options(CLI::App* cmd, std::string& preset, std::string& components,
                      std::string& alpha_weights, unsigned& r) {
    cmd->add_option("--preset", preset, "corollary1 or corollary2");
    cmd->add_option("--components", components, "semicolon-separated 'n,m' rational shape pairs");
    cmd->add_option("--alpha-weights", alpha_weights,
                    "comma-separated Dirichlet alphas (default: n_j + m_j)");
    cmd->add_option("--r", r, "number of components for a preset")->check(CLI::PositiveNumber);
}

// --config is consumed before CLI11 parsing (see apply_config); registering
// it here only documents the flag in --help.
void add_config_option(CLI::App* cmd, std::string& sink) {
    cmd->add_option("--config", sink,
                    "flat key=value file mirroring the long flags; explicit flags win");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomly weighted averages: exact moments, sampling, goodness of fit"};
    app.require_subcommand(1);

    int rc = 0;
    std::string config_doc;

    VerifyOpts vo;
    auto* verify = app.add_subcommand(
        "verify-moments", "compare composition-sum moments against the closed-form Beta target");
    add_spec_options(verify, vo.preset, vo.components, vo.alpha_weights, vo.r);
    verify->add_option("--kmax", vo.kmax, "highest moment order checked");
    verify->add_option("--out", vo.out, "output path (default stdout)");
    verify->add_option("--format", vo.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_config_option(verify, config_doc);
    verify->callback([&] { rc = run_verify(vo); });

    VandermondeOpts vd;
    auto* vandermonde =
        app.add_subcommand("vandermonde", "check the multivariate Vandermonde identity");
    vandermonde->add_option("--shapes", vd.shapes, "comma-separated positive rational shapes")
        ->required();
    vandermonde->add_option("--kmax", vd.kmax, "highest order checked");
    vandermonde->add_option("--out", vd.out, "output path (default stdout)");
    vandermonde->add_option("--format", vd.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_config_option(vandermonde, config_doc);
    vandermonde->callback([&] { rc = run_vandermonde(vd); });

    SimulateOpts so;
    auto* simulate = app.add_subcommand("simulate", "draw a sample batch and emit CSV");
    add_spec_options(simulate, so.preset, so.components, so.alpha_weights, so.r);
    auto* sim_a = simulate->add_option("--a", so.a, "half-width of (-a, a) for corollary2")
                      ->check(CLI::PositiveNumber);
    simulate->add_option("--n", so.n, "sample size")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--seed", so.seed, "rng seed");
    simulate->add_option("--bins", so.bins, "emit a histogram with this many bins instead of raw values");
    simulate->add_option("--out", so.out, "output path (default stdout)");
    simulate->add_option("--format", so.format, "csv")->check(CLI::IsMember({"csv", "json"}));
    add_config_option(simulate, config_doc);
    simulate->callback([&] {
        so.a_given = sim_a->count() > 0;
        rc = run_simulate(so);
    });

    KsOpts ko;
    auto* ks = app.add_subcommand("ks-test", "Kolmogorov-Smirnov test against the closed-form target");
    add_spec_options(ks, ko.preset, ko.components, ko.alpha_weights, ko.r);
    auto* ks_a = ks->add_option("--a", ko.a, "half-width of (-a, a) for corollary2")
                     ->check(CLI::PositiveNumber);
    ks->add_option("--n", ko.n, "sample size (>= 1000)")->required();
    ks->add_option("--seed", ko.seed, "rng seed");
    ks->add_option("--alpha", ko.alpha, "significance level")->check(CLI::Range(0.0, 1.0));
    ks->add_option("--target-beta", ko.target_beta,
                   "test against Beta('n,m') instead of the closed-form target");
    ks->add_option("--out", ko.out, "output path (default stdout)");
    ks->add_option("--format", ko.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    add_config_option(ks, config_doc);
    ks->callback([&] {
        ko.a_given = ks_a->count() > 0;
        rc = run_ks(ko);
    });

    DensityOpts dd;
    auto* density = app.add_subcommand("density-table", "x/pdf/cdf table on an interior grid");
    auto* dt_lambda = density->add_option("--lambda", dd.lambda, "power semicircle exponent")
                          ->check(CLI::NonNegativeNumber);
    density->add_option("--r", dd.r, "component count; lambda = (r - 1) / 2")
        ->check(CLI::PositiveNumber);
    density->add_option("--a", dd.a, "half-width of the support (-a, a)");
    density->add_option("--components", dd.components, "single 'n,m' pair for a Beta table");
    density->add_option("--n", dd.n, "number of grid points")->check(CLI::PositiveNumber);
    density->add_option("--out", dd.out, "output path (default stdout)");
    density->add_option("--format", dd.format, "csv")->check(CLI::IsMember({"csv", "json"}));
    add_config_option(density, config_doc);
    density->callback([&] {
        dd.lambda_given = dt_lambda->count() > 0;
        rc = run_density_table(dd);
    });

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = apply_config(std::move(args));
        std::reverse(args.begin(), args.end());  // CLI11 takes the vector back to front
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
