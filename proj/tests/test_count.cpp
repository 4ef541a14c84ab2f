#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "manin/brauer.hpp"
#include "manin/count.hpp"
#include "manin/verify.hpp"

using namespace manin;
using namespace manin::count;
using doctest::Approx;

namespace {

model::FamilySpec cor_family() {
    return model::FamilySpec::norm_form(
        arith::NormFormSpec::make(poly::IPoly::from({-2, 0, 1})),
        {model::CyclicTwist{2, 3}}, true);
}

CountJob cor_job(std::vector<u128> checkpoints, int workers = 1) {
    CountJob job;
    job.family = cor_family();
    job.height = heights::HeightSpec::anticanonical(1);
    job.checkpoints = std::move(checkpoints);
    job.workers = workers;
    return job;
}

}  // namespace

TEST_CASE("run_count: trivially soluble bundle has N = baseline") {
    CountJob job;
    job.family = model::FamilySpec::conic_bundle(poly::IPoly::from({1}), poly::IPoly::from({1}),
                                                 poly::IPoly::from({-1}));
    job.height = heights::HeightSpec::anticanonical(1);
    job.checkpoints = {1, 4, 100};
    CountSeries s = run_count(job);
    REQUIRE(s.rows.size() == 3);
    for (const CountRow& r : s.rows) CHECK(r.N == r.baseline);
    // T = 1: the three open-locus points (1,0), (1,1), (1,-1); (0,1) sits at infinity
    CHECK(s.rows[0].baseline == 3);
    // monotone rows
    CHECK(s.rows[0].N <= s.rows[1].N);
    CHECK(s.rows[1].N <= s.rows[2].N);
}

TEST_CASE("run_count: identity fibre is counted from the first checkpoint") {
    CountSeries s = run_count(cor_job({1, 9}));
    // t = 0 is the point (1 : 0), height 1, norm value 1: always soluble
    CHECK(s.rows[0].N >= 1);
    CHECK(s.rows[0].N <= s.rows[1].N);
    for (const CountRow& r : s.rows) CHECK(r.N <= r.baseline);
}

TEST_CASE("run_count: worker independence (1 vs 8)") {
    CountSeries one = run_count(cor_job({25, 400, 2500}, 1));
    CountSeries eight = run_count(cor_job({25, 400, 2500}, 8));
    REQUIRE(one.rows.size() == eight.rows.size());
    for (size_t i = 0; i < one.rows.size(); ++i) {
        CHECK(one.rows[i].N == eight.rows[i].N);
        CHECK(one.rows[i].baseline == eight.rows[i].baseline);
    }
}

TEST_CASE("run_count: naive vs anticanonical checkpoint conventions agree") {
    CountJob naive = cor_job({50});
    naive.height = heights::HeightSpec::naive();
    CountSeries a = run_count(naive);
    CountSeries b = run_count(cor_job({2500}));
    CHECK(a.rows[0].N == b.rows[0].N);
    CHECK(a.rows[0].baseline == b.rows[0].baseline);
}

TEST_CASE("run_count: validation") {
    CHECK_THROWS_AS(run_count(cor_job({})), std::invalid_argument);
    CHECK_THROWS_AS(run_count(cor_job({100, 100})), std::invalid_argument);
    CHECK_THROWS_AS(run_count(cor_job({u128(1) << 100})), std::invalid_argument);  // infeasible
    CountJob bad = cor_job({100});
    bad.workers = 0;
    CHECK_THROWS_AS(run_count(bad), std::invalid_argument);
    // diagonal conics at modest bounds work and respect N <= baseline
    CountJob dc;
    dc.family = model::FamilySpec::diagonal_conics();
    dc.height = heights::HeightSpec::anticanonical(2);
    dc.checkpoints = {27, 1000};
    CountSeries s = run_count(dc);
    CHECK(s.rows[1].N <= s.rows[1].baseline);
    CHECK(s.rows[1].N >= 1);  // (1, 1, -2) and friends
}

TEST_CASE("run_count: baseline matches the enumeration minus boundary") {
    // norm-form family over P^1: every point except (0:1) is in the open chart
    CountSeries s = run_count(cor_job({10000}));
    u64 pts = 0;
    heights::enumerate(1, 100, [&](std::span<const i64>) { ++pts; });
    CHECK(s.rows[0].baseline == pts - 1);
}

TEST_CASE("zero-locus spot check: counted points multiply into the zero-locus") {
    // B = {(t, 3)} on G_m: indicator(t1) = indicator(t2) = 1 implies
    // indicator(t1 t2) = 1; feed it points the counting loop accepted
    brauer::BrauerSet B{{brauer::SymbolClass::make(
        brauer::PolyRatio::of(mpoly::MPoly::var(1, 0)),
        brauer::PolyRatio::of(mpoly::MPoly::constant(1, 3)))}};
    std::vector<Rat> counted;
    model::FamilySpec fam = cor_family();
    for (i64 x0 = 1; x0 <= 60 && counted.size() < 60; ++x0)
        for (i64 x1 = -60; x1 <= 60; ++x1) {
            if (std::gcd(x0, std::abs(x1)) != 1) continue;
            std::vector<i64> c{x0, x1};
            if (model::fiber_status(fam, c) == model::FiberStatus::soluble) {
                // norm value of the counted point, as the G_m coordinate
                counted.push_back(Rat(i128(x0) * x0 - 2 * i128(x1) * x1, i128(x0) * x0));
            }
        }
    REQUIRE(counted.size() >= 30);
    std::mt19937_64 rng(57);
    for (int i = 0; i < 1000; ++i) {
        const Rat& t1 = counted[rng() % counted.size()];
        const Rat& t2 = counted[rng() % counted.size()];
        std::vector<Rat> probe{t1 * t2};
        CHECK(brauer::indicator(B, probe) == 1);
    }
}

TEST_CASE("landau_count: examples and brute force to 1e4") {
    CHECK(landau_count(1) == 1);
    CHECK(landau_count(10) == 7);  // {1,2,4,5,8,9,10}
    // brute force double loop
    const u64 X = 10000;
    std::vector<char> is_sum(X + 1, 0);
    for (u64 a = 0; a * a <= X; ++a)
        for (u64 b = a; a * a + b * b <= X; ++b) is_sum[a * a + b * b] = 1;
    u64 brute = 0;
    std::vector<u64> cps{100, 5000, X};
    std::vector<u64> got = landau_counts(cps);
    for (u64 n = 1; n <= X; ++n) {
        brute += is_sum[n];
        if (n == 100) CHECK(got[0] == brute);
        if (n == 5000) CHECK(got[1] == brute);
    }
    CHECK(got[2] == brute);
    CHECK(landau_count(100) == got[0]);
    CHECK_THROWS_AS(landau_count(2'000'000'000ull), std::invalid_argument);
}

TEST_CASE("fit_log_power: synthetic recoveries") {
    verify::SuiteResult r = verify::suite_synthetic_fits();
    INFO(r.detail);
    CHECK(r.pass);

    // exact N = B: theta 0, c 1, near-zero residual
    std::vector<std::pair<double, double>> rows;
    for (double B = 10; B <= 1e8; B *= 10) rows.push_back({B, B});
    FitResult f = fit_log_power(rows);
    CHECK(f.theta == Approx(0.0).epsilon(1e-12));
    CHECK(f.c == Approx(1.0).epsilon(1e-12));
    CHECK(f.residual < 1e-12);
    CHECK(f.local_exponents.size() == rows.size() - 1);

    // degenerate rows excluded with a warning count; all-zero rejected
    std::vector<std::pair<double, double>> with_zero = rows;
    with_zero.push_back({1e9, 0.0});
    FitResult g = fit_log_power(with_zero);
    CHECK(g.excluded_rows == 1);
    std::vector<std::pair<double, double>> zeros{{10, 0}, {100, 0}, {1000, 0}};
    CHECK_THROWS_AS(fit_log_power(zeros), std::invalid_argument);
    std::vector<std::pair<double, double>> few{{10, 10}, {100, 100}};
    CHECK_THROWS_AS(fit_log_power(few), std::invalid_argument);
}

TEST_CASE("landau series fit lands near -1/2") {
    std::vector<u64> cps{10000, 100000, 1000000, 10000000};
    std::vector<u64> counts = landau_counts(cps);
    std::vector<std::pair<double, double>> rows;
    for (size_t i = 0; i < cps.size(); ++i) rows.push_back({double(cps[i]), double(counts[i])});
    FitResult f = fit_log_power(rows);
    CHECK(f.theta > -0.62);
    CHECK(f.theta < -0.42);
}

TEST_CASE("CSV format: header, integers, 17-digit floats, LF only") {
    CountSeries s = run_count(cor_job({25, 2500}));
    std::ostringstream os;
    write_csv(os, s, -0.5);
    std::string text = os.str();
    CHECK(text.rfind("B,N,baseline,N_over_pred\n", 0) == 0);
    CHECK(text.find("\r") == std::string::npos);
    // three LF-terminated lines
    int newlines = 0;
    for (char ch : text)
        if (ch == '\n') ++newlines;
    CHECK(newlines == 3);
    // ratio column reproduces N / (B (log B)^theta) at 17 significant digits
    double ratio = double(s.rows[1].N) / (2500.0 * std::pow(std::log(2500.0), -0.5));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", ratio);
    CHECK(text.find(buf) != std::string::npos);
}

TEST_CASE("cor example stability: anticanonical checkpoints at modest size") {
    // small-scale version of the slow-convergence stability proxy
    std::vector<u128> cps;
    for (u64 t : {125, 250, 500, 1000, 2000}) cps.push_back(u128(t) * t);
    CountSeries s = run_count(cor_job(std::move(cps), 3));
    std::vector<double> ratio;
    for (const CountRow& r : s.rows) {
        double B = double((long double)r.B);
        ratio.push_back(double(r.N) * std::sqrt(std::log(B)) / B);
    }
    // positive counts, sane ratios, and the top three within a loose band
    for (double v : ratio) CHECK(v > 0);
    double top = *std::max_element(ratio.end() - 3, ratio.end());
    double bot = *std::min_element(ratio.end() - 3, ratio.end());
    CHECK((top - bot) / top < 0.25);
}
