// manin: count varieties with a rational point in a family, compute the
// predicted log-power exponent, and evaluate the analytic constants behind it.
//
// Subcommands: count, delta, euler, landau, verify.  Exit codes: 0 success,
// 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "manin/analytic.hpp"
#include "manin/count.hpp"
#include "manin/model.hpp"
#include "manin/verify.hpp"

namespace {

using namespace manin;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<u128> parse_checkpoints(const std::string& s) {
    std::vector<u128> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        u128 v = 0;
        for (char c : tok) {
            if (c == '_' || c == '\'') continue;
            if (c < '0' || c > '9') throw std::invalid_argument("bad checkpoint list: " + s);
            v = v * 10 + u128(c - '0');
        }
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty checkpoint list");
    return out;
}

int worker_count(int flag_value) {
    if (const char* env = std::getenv("WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return flag_value;
}

std::string describe_family(const model::FamilySpec& fam) {
    if (std::holds_alternative<model::NormFormFamily>(fam.v)) {
        const auto& nf = std::get<model::NormFormFamily>(fam.v);
        std::string s = "norm-form family, E = Q[w]/(" + nf.field.min_poly.str("w") + ")";
        if (!nf.twists.empty()) {
            s += ", twists:";
            for (const auto& tw : nf.twists) {
                s += " degree " + std::to_string(tw.degree);
                if (tw.disc) s += " (disc " + std::to_string(*tw.disc) + ")";
            }
        }
        return s;
    }
    if (std::holds_alternative<model::ConicBundle>(fam.v)) {
        const auto& cb = std::get<model::ConicBundle>(fam.v);
        return "conic bundle (" + cb.f0.str() + ") x0^2 + (" + cb.f1.str() + ") x1^2 + (" +
               cb.f2.str() + ") x2^2 = 0";
    }
    return "diagonal conics a x^2 + b y^2 + c z^2 = 0 over (a : b : c)";
}

// Experiment config: either a bare family spec (top-level "variant") or an
// envelope {"family": {...}, "height": "anticanonical"|"naive",
// "checkpoints": [...], "workers": N, "output": path, "seed": S}.
struct ExperimentConfig {
    model::FamilySpec family;
    bool naive = false;
    std::vector<u128> checkpoints;
    int workers = 1;
    std::string output;
    u64 seed = 1;  // reserved for the randomized suites
};

ExperimentConfig load_experiment(const std::string& path) {
    std::string text = read_file(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
    }
    ExperimentConfig cfg;
    if (j.is_object() && j.contains("family")) {
        cfg.family = model::family_from_json(j["family"].dump());
        if (j.contains("height")) {
            std::string h = j["height"].get<std::string>();
            if (h == "naive") cfg.naive = true;
            else if (h != "anticanonical")
                throw std::invalid_argument("config: height must be \"naive\" or \"anticanonical\"");
        }
        if (j.contains("checkpoints")) {
            for (const auto& c : j["checkpoints"]) {
                if (!c.is_number_integer() || c.get<long long>() < 1)
                    throw std::invalid_argument("config: checkpoints must be positive integers");
                cfg.checkpoints.push_back(u128(c.get<long long>()));
            }
        }
        if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
        if (j.contains("output")) cfg.output = j["output"].get<std::string>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<u64>();
    } else {
        cfg.family = model::family_from_json(text);
    }
    return cfg;
}

int cmd_count(const std::string& spec_path, const std::string& checkpoints_arg, bool naive_flag,
              int workers_flag, bool workers_given, const std::string& out_flag) {
    ExperimentConfig cfg = load_experiment(spec_path);
    if (!checkpoints_arg.empty()) cfg.checkpoints = parse_checkpoints(checkpoints_arg);
    if (cfg.checkpoints.empty())
        throw std::invalid_argument("no checkpoints given (config \"checkpoints\" or --checkpoints)");
    if (naive_flag) cfg.naive = true;
    if (workers_given) cfg.workers = workers_flag;
    if (!out_flag.empty()) cfg.output = out_flag;
    bool naive_height = cfg.naive;
    const std::string& out_path = cfg.output;

    model::Model mdl = model::build_model(cfg.family);
    count::CountJob job;
    int dim = cfg.family.base_dim();
    job.height = naive_height ? heights::HeightSpec::naive() : heights::HeightSpec::anticanonical(dim);
    job.family = std::move(cfg.family);
    job.checkpoints = std::move(cfg.checkpoints);
    job.workers = worker_count(cfg.workers);

    count::CountSeries series = count::run_count(job);
    double predicted = mdl.predicted_exponent.to_double();

    std::ostringstream csv;
    count::write_csv(csv, series, predicted);
    if (out_path.empty() || out_path == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << csv.str();
    }

    const count::CountRow& last = series.rows.back();
    std::cout << "family: " << describe_family(job.family) << "\n";
    std::cout << "height convention: " << (naive_height ? "naive" : "anticanonical") << "\n";
    std::cout << "final N = " << last.N << " of baseline " << last.baseline << " at B = "
              << to_string_u128(last.B) << "\n";
    std::cout << "predicted theta = " << mdl.predicted_exponent.str()
              << (mdl.conjectural ? " (conjectural)" : "") << "\n";
    try {
        count::FitResult fit = count::fit_log_power(series);
        std::cout << "fitted theta = " << fit.theta << " (residual " << fit.residual << ")\n";
    } catch (const std::exception& e) {
        std::cout << "fitted theta unavailable: " << e.what() << "\n";
    }
    if (!out_path.empty() && out_path != "-") std::cout << "csv written to " << out_path << "\n";
    return 0;
}

int cmd_delta(const std::string& spec_path) {
    model::FamilySpec fam = model::family_from_json(read_file(spec_path));
    model::Model mdl = model::build_model(fam);
    std::cout << "family: " << describe_family(fam) << "\n";
    std::cout << "divisor table (label, residue order, component degree):\n";
    for (const auto& d : mdl.divisors)
        std::cout << "  " << d.label << "  order " << d.residue_order << "  degree "
                  << d.component_degree << "\n";
    if (mdl.divisors.empty()) std::cout << "  (no contributing divisors)\n";
    std::cout << "rho = " << mdl.rho << "\n";
    std::cout << "Delta = " << mdl.delta.str() << "\n";
    std::cout << "rho_B = " << mdl.rho_B.str() << "\n";
    std::cout << "predicted exponent = " << mdl.predicted_exponent.str()
              << (mdl.conjectural ? " (conjectural: only bounds are known here)" : "") << "\n";
    bool evaluable = true;
    if (std::holds_alternative<model::NormFormFamily>(fam.v))
        for (const auto& tw : std::get<model::NormFormFamily>(fam.v).twists)
            if (tw.degree > 2) evaluable = false;
    if (!evaluable)
        std::cout << "note: twists of degree > 2 are symbolic only; point evaluation unavailable\n";
    return 0;
}

analytic::CharacterGroup group_from_arg(const std::string& arg) {
    if (arg.empty()) return analytic::CharacterGroup::trivial();
    std::vector<i64> discs;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        discs.push_back(std::stoll(tok));
    }
    return analytic::CharacterGroup::generated_by(discs);
}

int cmd_euler(const std::string& group_arg, i64 chi_disc, const std::string& s_arg, bool limit_mode,
              const std::string& cutoffs_arg) {
    analytic::CharacterGroup R = group_from_arg(group_arg);
    analytic::QuadCharacter chi = chi_disc == 0 ? analytic::QuadCharacter::principal_char()
                                                : analytic::QuadCharacter::kronecker_char(chi_disc);
    std::cout << "R = {";
    for (size_t i = 0; i < R.members.size(); ++i)
        std::cout << (i ? ", " : "") << R.members[i].str();
    std::cout << "}, chi = " << chi.str() << "\n";

    if (limit_mode) {
        if (!R.contains(chi))
            throw std::invalid_argument("singular limit needs chi to be a member of R");
        analytic::SingularLimit lim = analytic::singular_limit(R, chi);
        std::cout << "singular-limit ladder (s, estimate of c):\n";
        for (auto& [s, c] : lim.trace) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "  s = 1 + %.3e   c ~ %.12f", s - 1.0, c);
            std::cout << buf << "\n";
        }
        std::cout << "ladder-end estimate by prime cutoff:\n";
        for (auto& [P, c] : lim.cutoff_trace) std::cout << "  P = " << P << "   c ~ " << c << "\n";
        std::cout << "c = " << lim.c << "  (omega = " << lim.omega.str() << ", "
                  << (lim.converged ? "stabilized to 1e-3 relative" : "NOT converged") << ")\n";
        return lim.converged ? 0 : 1;
    }

    std::vector<u64> cutoffs;
    for (u128 c : parse_checkpoints(cutoffs_arg)) cutoffs.push_back(u64(c));
    std::vector<double> svals;
    {
        std::stringstream ss(s_arg);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) svals.push_back(std::stod(tok));
    }
    if (svals.empty()) throw std::invalid_argument("no s values given");
    for (double s : svals) {
        for (u64 P : cutoffs) {
            double v = analytic::partial_euler_product(R, chi, s, P);
            std::cout << "L_R(chi, s=" << s << "; P=" << P << ") = " << v << "\n";
        }
        if (cutoffs.size() >= 2) {
            auto [g1, g2] = analytic::factorization_check(R, chi, s, cutoffs[cutoffs.size() - 2],
                                                          cutoffs.back());
            std::cout << "G estimates at the last two cutoffs: " << g1 << "  " << g2 << "\n";
        }
    }
    return 0;
}

int cmd_landau(u64 x, const std::string& checkpoints_arg) {
    std::vector<u64> cps;
    if (!checkpoints_arg.empty())
        for (u128 c : parse_checkpoints(checkpoints_arg)) cps.push_back(u64(c));
    if (cps.empty() || cps.back() != x) cps.push_back(x);
    std::vector<u64> counts = count::landau_counts(cps);
    double K = analytic::landau_ramanujan();
    std::cout << "sums of two squares up to checkpoints:\n";
    for (size_t i = 0; i < cps.size(); ++i) {
        double ratio = double(counts[i]) * std::sqrt(std::log(double(cps[i]))) / double(cps[i]);
        std::cout << "  N(" << cps[i] << ") = " << counts[i] << "   N sqrt(log x)/x = " << ratio
                  << "\n";
    }
    std::cout << "Landau-Ramanujan K = " << K << "\n";
    std::cout << "Delange route: g(1) = K sqrt(pi) gives g(1)/Gamma(1/2) = "
              << analytic::delange_constant(K * std::sqrt(M_PI), Rat(1, 2)) << "\n";
    return 0;
}

int cmd_verify(u64 seed, bool corrupt) {
    auto results = verify::run_all(seed, corrupt);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "verification passed" : "verification FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded-height counting over families with Brauer-class solubility tests"};
    app.require_subcommand(1);

    auto* count_cmd = app.add_subcommand("count", "run a counting experiment, emit CSV + summary");
    std::string spec_path, checkpoints, out_path;
    bool naive = false;
    int workers = 1;
    count_cmd->add_option("spec", spec_path, "family spec or experiment config JSON file")->required();
    count_cmd->add_option("--checkpoints", checkpoints, "comma-separated height bounds");
    count_cmd->add_flag("--naive", naive, "use the naive height (default: anticanonical)");
    auto* workers_opt =
        count_cmd->add_option("--workers", workers, "worker threads (WORKERS env overrides)");
    count_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");

    auto* delta_cmd = app.add_subcommand("delta", "divisor table and predicted exponent");
    std::string delta_spec;
    delta_cmd->add_option("spec", delta_spec, "family spec JSON file")->required();

    auto* euler_cmd = app.add_subcommand("euler", "partial Euler products / singular limits");
    std::string group_arg, s_arg = "1.1", euler_cutoffs = "10000,100000";
    i64 chi_disc = 0;
    bool limit_mode = false;
    euler_cmd->add_option("--group", group_arg, "generator discriminants of R, e.g. -4 or -4,8");
    euler_cmd->add_option("--chi", chi_disc, "character discriminant (0 = principal)");
    euler_cmd->add_option("--s", s_arg, "comma-separated s values > 1");
    euler_cmd->add_option("--cutoffs", euler_cutoffs, "prime cutoffs");
    euler_cmd->add_flag("--limit", limit_mode, "singular-limit ladder for chi as a member of R");

    auto* landau_cmd = app.add_subcommand("landau", "sum-of-two-squares counts and the Landau constant");
    u64 landau_x = 100000000;
    std::string landau_cps;
    landau_cmd->add_option("--x", landau_x, "upper bound (<= 1e9)");
    landau_cmd->add_option("--checkpoints", landau_cps, "intermediate checkpoints");

    auto* verify_cmd = app.add_subcommand("verify", "run the self-verification oracle suites");
    u64 seed = 1;
    bool corrupt = false;
    verify_cmd->add_option("--seed", seed, "seed for the randomized suites");
    verify_cmd->add_flag("--corrupt-symbols", corrupt,
                         "negative control: inject a wrong symbol, the suite must fail");

    try {
        app.parse(argc, argv);
        if (*count_cmd)
            return cmd_count(spec_path, checkpoints, naive, workers, workers_opt->count() > 0,
                             out_path);
        if (*delta_cmd) return cmd_delta(delta_spec);
        if (*euler_cmd) return cmd_euler(group_arg, chi_disc, s_arg, limit_mode, euler_cutoffs);
        if (*landau_cmd) return cmd_landau(landau_x, landau_cps);
        if (*verify_cmd) return cmd_verify(seed, corrupt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
