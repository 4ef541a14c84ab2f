// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Each criterion pins its tolerances in code; run `acceptance --list` for the
// roster or `--only 1,5,11` for a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "manin/analytic.hpp"
#include "manin/brauer.hpp"
#include "manin/count.hpp"
#include "manin/heights.hpp"
#include "manin/model.hpp"
#include "manin/verify.hpp"

using namespace manin;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

model::FamilySpec cor_family() {
    return model::FamilySpec::norm_form(
        arith::NormFormSpec::make(poly::IPoly::from({-2, 0, 1})),
        {model::CyclicTwist{2, 3}}, true);
}

// shared state for criteria 9/10
struct CorRun {
    count::CountSeries series;
    std::string csv_wn, csv_w1;
    bool done = false;
};
CorRun g_cor;

void run_cor_experiment(int workers_hint) {
    if (g_cor.done) return;
    count::CountJob job;
    job.family = cor_family();
    job.height = heights::HeightSpec::anticanonical(1);
    for (u64 t : {500, 1000, 2000, 4000, 8000}) job.checkpoints.push_back(u128(t) * t);
    job.workers = workers_hint;
    g_cor.series = count::run_count(job);
    std::ostringstream cn;
    count::write_csv(cn, g_cor.series, -0.5);
    g_cor.csv_wn = cn.str();
    job.workers = 1;
    count::CountSeries s1 = count::run_count(job);
    std::ostringstream c1;
    count::write_csv(c1, s1, -0.5);
    g_cor.csv_w1 = c1.str();
    g_cor.done = true;
}

Outcome criterion_1() {
    verify::SuiteResult r = verify::suite_hilbert_oracle(50, false);
    return {r.pass, r.detail};
}

Outcome criterion_2() {
    verify::SuiteResult r = verify::suite_product_formula(20240817, 10000);
    return {r.pass, r.detail};
}

Outcome criterion_3() {
    verify::SuiteResult r = verify::suite_holzer(20240817, 500);
    return {r.pass, r.detail};
}

Outcome criterion_4() {
    const std::vector<u64> cps{10'000, 100'000, 1'000'000, 10'000'000, 100'000'000};
    std::vector<u64> counts = count::landau_counts(cps);
    // independent brute force at the 1e4 prefix must agree exactly
    const u64 X = 10'000;
    std::vector<char> is_sum(X + 1, 0);
    for (u64 a = 0; a * a <= X; ++a)
        for (u64 b = a; a * a + b * b <= X; ++b) is_sum[a * a + b * b] = 1;
    u64 brute = 0;
    for (u64 n = 1; n <= X; ++n) brute += is_sum[n];
    if (brute != counts[0])
        return {false, "sieve " + std::to_string(counts[0]) + " != brute force " +
                           std::to_string(brute) + " at 1e4"};
    double K = analytic::landau_ramanujan();
    std::vector<double> ratios;
    for (size_t i = 0; i < cps.size(); ++i)
        ratios.push_back(double(counts[i]) * std::sqrt(std::log(double(cps[i]))) /
                         double(cps[i]));
    double final_err = std::abs(ratios.back() - K) / K;
    if (final_err > 0.08)
        return {false, "ratio at 1e8 off K by " + std::to_string(100 * final_err) + "%"};
    for (size_t i = 1; i < ratios.size(); ++i)
        if (!(std::abs(ratios[i] - K) < std::abs(ratios[i - 1] - K)))
            return {false, "ratio sequence not monotonically trending toward K at step " +
                               std::to_string(i)};
    std::ostringstream os;
    os << "N(1e8) = " << counts.back() << ", ratio " << ratios.back() << " vs K " << K << " ("
       << 100 * final_err << "% off), trend monotone";
    return {true, os.str()};
}

Outcome criterion_5() {
    double K = analytic::landau_ramanujan();
    double direct = analytic::landau_ramanujan_direct(10'000'000);
    double diff = std::abs(K - direct);
    std::ostringstream os;
    os << "K = " << K << ", direct(1e7) = " << direct << ", |diff| = " << diff;
    // 8 significant digits against the independently known expansion head,
    // >= 4 decimals against the direct partial product
    if (std::abs(K - 0.76422365358922) > 5e-9)
        return {false, "doubling recursion drifted: " + os.str()};
    return {diff < 1e-4, os.str()};
}

Outcome criterion_6() {
    struct NF {
        std::vector<model::CyclicTwist> twists;
        Rat delta;
    };
    std::vector<NF> nf_cases = {
        {{model::CyclicTwist{2, 3}}, Rat(1, 2)},
        {{model::CyclicTwist{2, 3}, model::CyclicTwist{2, 5}}, Rat(3, 4)},
        {{model::CyclicTwist{2, -1}, model::CyclicTwist{2, 3}, model::CyclicTwist{2, 5}}, Rat(7, 8)},
        {{}, Rat(0)},
    };
    auto field = [] { return arith::NormFormSpec::make(poly::IPoly::from({-2, 0, 1})); };
    for (const NF& c : nf_cases) {
        model::Model m = model::build_model(model::FamilySpec::norm_form(field(), c.twists, true));
        i128 order = 1;
        for (auto& tw : c.twists) order *= tw.degree;
        if (m.delta != c.delta || m.delta != Rat(1) - Rat(1, order))
            return {false, "norm-form Delta mismatch at r = " + std::to_string(c.twists.size())};
        if (m.predicted_exponent != m.rho_B - Rat(1) || m.rho_B != Rat(m.rho) - m.delta)
            return {false, "exponent bookkeeping broken"};
    }
    model::Model cubic = model::build_model(model::FamilySpec::norm_form(
        arith::NormFormSpec::make(poly::IPoly::from({-2, 0, 0, 1})),
        {model::CyclicTwist{3, std::nullopt}}, true));
    if (cubic.delta != Rat(2, 3)) return {false, "cubic twist Delta != 2/3"};

    struct CB {
        poly::IPoly f0, f1, f2;
        int m;
    };
    std::vector<CB> cb_cases = {
        {poly::IPoly::from({1}), poly::IPoly::from({1}), poly::IPoly::from({-2, 0, 1}), 1},
        {poly::IPoly::from({1}), poly::IPoly::from({-2, 0, 1}), poly::IPoly::from({-3, 0, 1}), 2},
        {poly::IPoly::from({0, 1}), poly::IPoly::from({-1, 1}), poly::IPoly::from({1, 1}), 3},
        {poly::IPoly::from({1}), poly::IPoly::from({1}), poly::IPoly::from({-1}), 0},
    };
    for (const CB& c : cb_cases) {
        model::Model m = model::build_model(model::FamilySpec::conic_bundle(c.f0, c.f1, c.f2));
        if (m.delta != Rat(c.m, 2))
            return {false, "conic-bundle Delta != m/2 at m = " + std::to_string(c.m)};
        if (c.m == 0 && m.predicted_exponent != Rat(m.rho - 1))
            return {false, "empty set does not reduce to the rho - 1 baseline"};
    }
    return {true, "norm-form, conic-bundle and baseline exponents exact in rational arithmetic"};
}

Outcome criterion_7() {
    analytic::QuadCharacter one = analytic::QuadCharacter::principal_char();
    int checked = 0;
    for (i64 d : {-4, 8, -8, 5}) {
        std::vector<i64> gens{d};
        analytic::CharacterGroup R = analytic::CharacterGroup::generated_by(gens);
        for (double s : {1.05, 1.1, 1.5, 2.0}) {
            auto [a, b] = analytic::factorization_check(R, one, s, 10'000, 100'000);
            auto [b2, c] = analytic::factorization_check(R, one, s, 100'000, 1'000'000);
            (void)b2;
            if (!(std::abs(c - b) < std::abs(b - a)))
                return {false, "G gaps do not shrink at d = " + std::to_string(d) +
                                   ", s = " + std::to_string(s)};
            if (!(std::abs(c) >= 1e-3))
                return {false, "G not bounded away from 0 at d = " + std::to_string(d)};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " (d, s) pairs Cauchy-trending, |G| >= 1e-3"};
}

Outcome criterion_8() {
    std::vector<i64> gens{-4};
    analytic::CharacterGroup R = analytic::CharacterGroup::generated_by(gens);
    analytic::SingularLimit lim =
        analytic::singular_limit(R, analytic::QuadCharacter::principal_char());
    std::ostringstream os;
    os << "c = " << lim.c << " (ladder end s - 1 = 2^-20, "
       << (lim.converged ? "stabilized to 1e-3 relative" : "NOT stabilized") << ")";
    return {lim.converged && lim.c != 0.0, os.str()};
}

Outcome criterion_9(int workers) {
    run_cor_experiment(workers);
    count::FitResult fit = count::fit_log_power(g_cor.series);
    std::vector<double> ratios;
    for (const count::CountRow& r : g_cor.series.rows) {
        double B = double((long double)r.B);
        ratios.push_back(double(r.N) * std::sqrt(std::log(B)) / B);
    }
    double top = *std::max_element(ratios.end() - 3, ratios.end());
    double bot = *std::min_element(ratios.end() - 3, ratios.end());
    double spread = (top - bot) / top;
    std::ostringstream os;
    os << "fitted theta = " << fit.theta << " (predicted -0.5), top-3 ratio spread = "
       << 100 * spread << "%, N(6.4e7) = " << g_cor.series.rows.back().N;
    bool pass = fit.theta > -0.80 && fit.theta < -0.25 && spread < 0.25;
    return {pass, os.str()};
}

Outcome criterion_10(int workers) {
    run_cor_experiment(workers);
    if (g_cor.csv_w1 == g_cor.csv_wn)
        return {true, "1-worker and " + std::to_string(workers) + "-worker CSVs byte-identical (" +
                          std::to_string(g_cor.csv_w1.size()) + " bytes)"};
    return {false, "CSV outputs differ between worker counts"};
}

Outcome criterion_11() {
    verify::SuiteResult r = verify::suite_synthetic_fits();
    return {r.pass, r.detail};
}

Outcome criterion_12() {
    verify::SuiteResult r = verify::suite_enumeration(200, 200);
    return {r.pass, r.detail};
}

}  // namespace

int main(int argc, char** argv) {
    int workers = 8;
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) {
            workers = std::atoi(argv[++i]);
        } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) only.insert(std::atoi(tok.c_str()));
        } else if (std::strcmp(argv[i], "--list") == 0) {
            std::cout << "criteria 1..12\n";
            return 0;
        }
    }

    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "Hilbert symbol vs exhaustive local-solubility oracle", criterion_1},
        {2, "product formula over ramified places, 1e4 random pairs", criterion_2},
        {3, "conic Hasse local test vs Holzer-bounded search, 500 conics", criterion_3},
        {4, "Landau calibration: sieve, brute-force prefix, ratio trend", criterion_4},
        {5, "Landau-Ramanujan constant: doubling vs direct product", criterion_5},
        {6, "Delta calculator: exact rational exponents", criterion_6},
        {7, "partial-Euler-product factorization: Cauchy-trending G", criterion_7},
        {8, "singular-limit ladder: stabilized nonzero constant", criterion_8},
        {9, "norm-form exponent fit to T = 8000", [&] { return criterion_9(workers); }},
        {10, "worker-count determinism: byte-identical CSV", [&] { return criterion_10(workers); }},
        {11, "synthetic fit recovery at three exponents", criterion_11},
        {12, "enumeration completeness vs brute force, T <= 200", criterion_12},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%2d] %s  %s (%s; %.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        all = all && o.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES above");
    return all ? 0 : 1;
}
