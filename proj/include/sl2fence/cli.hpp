#pragma once

// Command dispatch for the sl2fence tool.  Kept in a header so tests can run
// commands in-process and compare output bytes.
//
// Exit codes: 0 = all checks pass (flagged convention notes allowed),
// 1 = an exact identity failed, 2 = usage or configuration error.

#include <sl2fence/fences.hpp>
#include <sl2fence/fusion.hpp>
#include <sl2fence/json_io.hpp>
#include <sl2fence/modules.hpp>
#include <sl2fence/translation.hpp>
#include <sl2fence/verify.hpp>
#include <sl2fence/verma.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace sl2fence {

namespace cli_detail {

inline int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw CLI::ValidationError("sign must be one of +, -, +1, -1");
}

inline bool emit(const std::string& text, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return true;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "cannot open output path: " << out_path << "\n";
        return false;
    }
    f << text;
    if (!f) {
        err << "write failed: " << out_path << "\n";
        return false;
    }
    return true;
}

inline long pieri_closed_form(long m, long n, long k) {
    return (k >= std::labs(m - n) && k <= m + n && (m + n - k) % 2 == 0) ? 1 : 0;
}

// Memoizing wrapper around the Casimir-spectral multiplicity.
class PieriCache {
public:
    long operator()(long m, long n, long k) {
        const auto key = std::make_tuple(m, n, k);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const long v = tensor_multiplicity(static_cast<int>(m), static_cast<int>(n), static_cast<int>(k));
        cache_.emplace(key, v);
        return v;
    }

private:
    std::map<std::tuple<long, long, long>, long> cache_;
};

}  // namespace cli_detail

struct RunConfig {
    std::string command;
    std::string model;
    std::string suite = "all";
    std::string mode = "bruteforce";
    std::string format = "json";
    std::string out_path;
    long m = 0, n = 0, k = 0, ell = 0;
    long a = 0, b = 0, c = 0;
    std::string lambda1 = "1", lambda2 = "1", lambda3 = "1", nu = "0";
    int delta = 1, eps = 1;
    long window = 12, max = 25;
    long lambda3_int = 3;
    std::string quantity = "c";
    std::string chambers_format = "csv";
    int samples = 100;
    std::uint64_t seed = 2025;
    int truncation = 40;
    int margin = 0;
};

// [V_{l-1} : C_nu] through the module, not the closed form.
inline long su2_weight_multiplicity(long lambda, long nu) {
    const WeightModule v = finite_irrep(static_cast<int>(lambda) - 1);
    return weight_space_dim(v, Rational(nu));
}

// [Pi_lambda : C_nu] through a truncated module large enough for the window.
inline long ktype_multiplicity_model(long lambda, long nu, int truncation) {
    const WeightModule l = truncated_lowest_weight(Rational(lambda), truncation);
    return weight_space_dim(l, Rational(nu));
}

inline std::string gl1_chamber_name(long lambda, long nu) {
    return to_string(classify_xi(GaussianRational(Rational(lambda)), GaussianRational(Rational(nu)),
                                 GaussianRational(1), GaussianRational(0)));
}

// Nonzero points of a scan as CSV rows.
inline std::string region_scan_csv(const RegionScan& scan) {
    std::ostringstream csv;
    const bool verma = (scan.oracle == "verma");
    csv << (verma ? "a,b,c,value\n" : "lambda1,lambda2,lambda3,value\n");
    const long lo = verma ? -scan.window : 1;
    for (long a = lo; a <= scan.window; ++a)
        for (long b = lo; b <= scan.window; ++b)
            for (long c = lo; c <= scan.window; ++c) {
                const int v = verma ? verma_hom_dim(a, b, c) : fusion_lw_hom_dim(a, b, c);
                if (v > 0) csv << a << "," << b << "," << c << "," << v << "\n";
            }
    return csv.str();
}

inline MultiplicityReport sweep_report(const std::string& model, long lambda3, long max_window, int truncation) {
    cli_detail::PieriCache pieri;
    if (model == "pieri") {
        MultiplicityReport rep = stability_sweep(
            [&](long x, long y) { return pieri(x - 1, y - 1, lambda3 - 1); },
            [&](long x, long y) { return std::string(to_string(fusion_chamber_of(x, y, lambda3))); },
            Window{1, max_window, 1, max_window}, "pieri");
        rep.metadata.push_back({"identity", "tensor multiplicity [V(x)V:V] per fusion chamber"});
        rep.metadata.push_back({"lambda3", std::to_string(lambda3)});
        return rep;
    }
    if (model == "weights") {
        std::map<long, WeightModule> cache;
        MultiplicityReport rep = stability_sweep(
            [&](long x, long y) {
                auto it = cache.find(x);
                if (it == cache.end()) it = cache.emplace(x, finite_irrep(static_cast<int>(x) - 1)).first;
                return static_cast<long>(weight_space_dim(it->second, Rational(y)));
            },
            [&](long x, long y) { return gl1_chamber_name(x, y); },
            Window{1, max_window, -max_window, max_window}, "weights");
        rep.metadata.push_back({"identity", "weight multiplicity of the finite irreducibles per chamber"});
        return rep;
    }
    if (model == "ktypes") {
        const int cut = std::max(truncation, static_cast<int>(max_window) + 4);
        std::map<long, WeightModule> cache;
        MultiplicityReport rep = stability_sweep(
            [&](long x, long y) {
                auto it = cache.find(x);
                if (it == cache.end()) it = cache.emplace(x, truncated_lowest_weight(Rational(x), cut)).first;
                return static_cast<long>(weight_space_dim(it->second, Rational(y)));
            },
            [&](long x, long y) { return gl1_chamber_name(x, y); },
            Window{1, max_window, -max_window, max_window}, "ktypes");
        rep.metadata.push_back({"identity", "K-type multiplicity of the lowest-weight models per chamber"});
        rep.metadata.push_back({"truncation", std::to_string(cut)});
        rep.metadata.push_back({"margin", "1"});
        return rep;
    }
    throw CLI::ValidationError("unknown sweep model: " + model);
}

inline int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    using cli_detail::emit;
    std::string text;
    int exit_code = 0;

    if (cfg.command == "decompose") {
        if (cfg.m < 0 || cfg.n < 0) {
            err << "decompose: m and n must be nonnegative\n";
            return 2;
        }
        Json j;
        j["command"] = "decompose";
        j["m"] = cfg.m;
        j["n"] = cfg.n;
        j["components"] = Json::array();
        bool match = true;
        long dim_sum = 0;
        std::ostringstream csv;
        csv << "k,multiplicity,closed_form\n";
        for (long k = 0; k <= cfg.m + cfg.n; ++k) {
            const long mult = tensor_multiplicity(static_cast<int>(cfg.m), static_cast<int>(cfg.n), static_cast<int>(k));
            const long closed = cli_detail::pieri_closed_form(cfg.m, cfg.n, k);
            if (mult != closed) match = false;
            dim_sum += mult * (k + 1);
            j["components"].push_back(Json{{"k", k}, {"multiplicity", mult}, {"closed_form", closed}});
            csv << k << "," << mult << "," << closed << "\n";
        }
        const bool dim_ok = dim_sum == (cfg.m + 1) * (cfg.n + 1);
        j["closed_form_matches"] = match;
        j["dimension_identity"] = dim_ok;
        if (!match || !dim_ok) exit_code = 1;
        text = (cfg.format == "csv") ? csv.str() : j.dump(2) + "\n";
    } else if (cfg.command == "multiplicity") {
        Json j;
        j["command"] = "multiplicity";
        j["model"] = cfg.model;
        if (cfg.model == "pieri") {
            j["m"] = cfg.m;
            j["n"] = cfg.n;
            j["k"] = cfg.k;
            j["value"] = tensor_multiplicity(static_cast<int>(cfg.m), static_cast<int>(cfg.n), static_cast<int>(cfg.k));
        } else if (cfg.model == "weights") {
            const long lambda = to_long(rat_from_string(cfg.lambda1)), nu = to_long(rat_from_string(cfg.nu));
            j["lambda"] = lambda;
            j["nu"] = nu;
            j["value"] = su2_weight_multiplicity(lambda, nu);
        } else if (cfg.model == "ktypes") {
            const long lambda = to_long(rat_from_string(cfg.lambda1)), nu = to_long(rat_from_string(cfg.nu));
            j["lambda"] = lambda;
            j["nu"] = nu;
            j["value"] = ktype_multiplicity_discrete(lambda, nu);
        } else if (cfg.model == "verma") {
            j["a"] = cfg.a;
            j["b"] = cfg.b;
            j["c"] = cfg.c;
            j["value"] = verma_hom_dim(cfg.a, cfg.b, cfg.c);
        } else if (cfg.model == "fusion") {
            const long l1 = to_long(rat_from_string(cfg.lambda1));
            const long l2 = to_long(rat_from_string(cfg.lambda2));
            const long l3 = to_long(rat_from_string(cfg.lambda3));
            j["lambda1"] = l1;
            j["lambda2"] = l2;
            j["lambda3"] = l3;
            j["value"] = fusion_lw_hom_dim(l1, l2, l3);
        } else {
            err << "unknown multiplicity model: " << cfg.model << "\n";
            return 2;
        }
        text = j.dump(2) + "\n";
    } else if (cfg.command == "verify") {
        VerifyOptions opt;
        opt.samples = cfg.samples;
        opt.seed = cfg.seed;
        opt.truncation = cfg.truncation;
        if (cfg.margin > 0) {
            opt.margin_c2 = std::max(cfg.margin, 1);
            opt.margin_c3 = std::max(cfg.margin, 2);
        }
        std::vector<SuiteReport> suites;
        try {
            suites = run_suites(cfg.suite, opt);
        } catch (const std::invalid_argument& e) {
            err << e.what() << "\n";
            return 2;
        }
        long pass = 0, fail = 0, flagged = 0;
        for (const auto& s : suites) {
            pass += s.count(CheckStatus::Pass);
            fail += s.count(CheckStatus::Fail);
            flagged += s.count(CheckStatus::Flagged);
        }
        Json j;
        j["command"] = "verify";
        j["suite"] = cfg.suite;
        j["suites"] = to_json(suites);
        j["summary"] = Json{{"pass", pass}, {"fail", fail}, {"flagged", flagged}};
        exit_code = (fail > 0) ? 1 : 0;
        j["exit"] = exit_code;
        text = j.dump(2) + "\n";
    } else if (cfg.command == "sweep") {
        const MultiplicityReport rep = sweep_report(cfg.model, cfg.lambda3_int, cfg.max, cfg.truncation);
        if (!rep.all_constant()) exit_code = 1;
        Json j;
        j["command"] = "sweep";
        j["report"] = to_json(rep);
        text = j.dump(2) + "\n";
    } else if (cfg.command == "chambers") {
        cli_detail::PieriCache pieri;
        std::ostringstream csv;
        csv << "lambda2\\lambda1";
        for (long x = 1; x <= cfg.max; ++x) csv << "," << x;
        csv << "\n";
        for (long y = cfg.max; y >= 1; --y) {
            csv << y;
            for (long x = 1; x <= cfg.max; ++x) {
                const FusionChamber c = fusion_chamber_of(x, y, cfg.lambda3_int);
                csv << "," << to_string(c) << ":" << pieri(x - 1, y - 1, cfg.lambda3_int - 1);
            }
            csv << "\n";
        }
        if (cfg.chambers_format == "json") {
            Json j;
            j["command"] = "chambers";
            j["lambda3"] = cfg.lambda3_int;
            j["max"] = cfg.max;
            j["grid_csv"] = csv.str();
            text = j.dump(2) + "\n";
        } else {
            text = csv.str();
        }
    } else if (cfg.command == "verma") {
        const RegionScan scan = region_scan_verma(cfg.window);
        if (!scan.observed_form_exact) exit_code = 1;
        if (cfg.format == "csv") {
            text = region_scan_csv(scan);
        } else {
            Json j;
            j["command"] = "verma";
            j["scan"] = to_json(scan);
            text = j.dump(2) + "\n";
        }
    } else if (cfg.command == "fusion-scan") {
        const RegionScan scan = region_scan_fusion(cfg.window);
        if (!scan.disagreement_points.empty()) exit_code = 1;
        if (cfg.format == "csv") {
            text = region_scan_csv(scan);
        } else {
            Json j;
            j["command"] = "fusion-scan";
            j["scan"] = to_json(scan);
            text = j.dump(2) + "\n";
        }
    } else if (cfg.command == "compute") {
        Json j;
        j["command"] = "compute";
        j["quantity"] = "c";
        j["mode"] = cfg.mode;
        j["delta"] = cfg.delta;
        j["eps"] = cfg.eps;
        if (cfg.mode == "bruteforce") {
            j["m"] = cfg.m;
            j["n"] = cfg.n;
            j["l"] = cfg.ell;
            j["value"] = to_string(c_bruteforce(static_cast<int>(cfg.m), static_cast<int>(cfg.n),
                                                static_cast<int>(cfg.ell), cfg.delta, cfg.eps));
        } else if (cfg.mode == "g") {
            j["m"] = cfg.m;
            j["n"] = cfg.n;
            j["l"] = cfg.ell;
            const long k = cfg.m + cfg.n - 2 * cfg.ell;
            j["k"] = k;
            j["value"] = to_string(Rational(g_function(cfg.m, cfg.n, k, cfg.delta, cfg.eps) /
                                            (Rational(8) * Rational(cfg.m + 1) * Rational(cfg.n + 1))));
        } else if (cfg.mode == "closed") {
            const GaussianRational l1(rat_from_string(cfg.lambda1));
            const GaussianRational l2(rat_from_string(cfg.lambda2));
            const GaussianRational l3(rat_from_string(cfg.lambda3));
            j["lambda1"] = to_string(l1.re);
            j["lambda2"] = to_string(l2.re);
            j["lambda3"] = to_string(l3.re);
            j["value"] = to_json(c_closed_form(l1, l2, l3, cfg.delta, cfg.eps));
        } else {
            err << "unknown compute mode: " << cfg.mode << "\n";
            return 2;
        }
        text = j.dump(2) + "\n";
    } else {
        err << "unknown command: " << cfg.command << "\n";
        return 2;
    }

    if (!emit(text, cfg.out_path, out, err)) return 2;
    return exit_code;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact sl2 branching multiplicities, translation identities, and chamber stability"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string delta_str = "+", eps_str = "+";

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_path, "write output to this path"); };

    CLI::App* dec = app.add_subcommand("decompose", "tensor product decomposition of two finite irreducibles");
    dec->add_option("--m", cfg.m)->required();
    dec->add_option("--n", cfg.n)->required();
    dec->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
    add_out(dec);

    CLI::App* mult = app.add_subcommand("multiplicity", "single multiplicity query");
    mult->add_option("--model", cfg.model, "pieri|weights|ktypes|verma|fusion")->required();
    mult->add_option("--m", cfg.m);
    mult->add_option("--n", cfg.n);
    mult->add_option("--k", cfg.k);
    mult->add_option("--a", cfg.a);
    mult->add_option("--b", cfg.b);
    mult->add_option("--c", cfg.c);
    mult->add_option("--lambda,--lambda1", cfg.lambda1);
    mult->add_option("--lambda2", cfg.lambda2);
    mult->add_option("--lambda3", cfg.lambda3);
    mult->add_option("--nu", cfg.nu);
    add_out(mult);

    CLI::App* ver = app.add_subcommand("verify", "run exact verification suites");
    ver->add_option("suite", cfg.suite, "translation-c2|translation-c3|fusion|weights|ktypes|o4o3|all");
    ver->add_option("--samples", cfg.samples);
    ver->add_option("--seed", cfg.seed);
    ver->add_option("--truncation", cfg.truncation);
    ver->add_option("--margin", cfg.margin);
    add_out(ver);

    CLI::App* sweep = app.add_subcommand("sweep", "stability sweep over a parameter window");
    sweep->add_option("--model", cfg.model, "pieri|weights|ktypes")->required();
    sweep->add_option("--lambda3", cfg.lambda3_int);
    sweep->add_option("--max,--window", cfg.max);
    sweep->add_option("--truncation", cfg.truncation);
    add_out(sweep);

    CLI::App* ch = app.add_subcommand("chambers", "chamber grid for fixed lambda3");
    ch->add_option("--lambda3", cfg.lambda3_int)->required();
    ch->add_option("--max,--window", cfg.max);
    ch->add_option("--format", cfg.chambers_format)->check(CLI::IsMember({"json", "csv"}));
    add_out(ch);

    CLI::App* verma = app.add_subcommand("verma", "Verma tensor multiplicity scan");
    verma->add_option("--window", cfg.window);
    verma->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
    add_out(verma);

    CLI::App* fscan = app.add_subcommand("fusion-scan", "lowest-weight fusion rule scan");
    fscan->add_option("--window", cfg.window)->required();
    fscan->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
    add_out(fscan);

    CLI::App* comp = app.add_subcommand("compute", "compute a fusion constant");
    comp->add_option("quantity", cfg.quantity, "must be 'c'")->required();
    comp->add_option("--mode", cfg.mode)->check(CLI::IsMember({"bruteforce", "closed", "g"}));
    comp->add_option("--m", cfg.m);
    comp->add_option("--n", cfg.n);
    comp->add_option("--l", cfg.ell);
    comp->add_option("--lambda1", cfg.lambda1);
    comp->add_option("--lambda2", cfg.lambda2);
    comp->add_option("--lambda3", cfg.lambda3);
    comp->add_option("--delta", delta_str);
    comp->add_option("--eps", eps_str);
    add_out(comp);

    std::vector<const char*> argv;
    argv.push_back("sl2fence");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        cfg.delta = cli_detail::parse_sign(delta_str);
        cfg.eps = cli_detail::parse_sign(eps_str);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    }
    if (comp->parsed() && cfg.quantity != "c") {
        err << "compute: only the quantity 'c' is supported\n";
        return 2;
    }

    for (CLI::App* sub : {dec, mult, ver, sweep, ch, verma, fscan, comp})
        if (sub->parsed()) cfg.command = sub->get_name();

    try {
        return run_config(cfg, out, err);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sl2fence
