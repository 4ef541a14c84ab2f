#ifndef MANIN_COUNT_HPP
#define MANIN_COUNT_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "manin/heights.hpp"
#include "manin/model.hpp"

namespace manin::count {

struct CountJob {
    model::FamilySpec family;
    heights::HeightSpec height;     // checkpoint convention (anticanonical default)
    std::vector<u128> checkpoints;  // strictly increasing height bounds
    int workers = 1;
};

struct CountRow {
    u128 B = 0;         // height bound
    u64 N = 0;          // soluble fibres with height <= B
    u64 baseline = 0;   // all open-locus base points with height <= B
};

struct CountSeries {
    std::vector<CountRow> rows;
};

// For each checkpoint B: N = #{canonical base points t, height(t) <= B, t in
// the open locus, fibre over t soluble}; baseline counts every open-locus
// point.  Deterministic and independent of the worker count (each worker owns
// a private per-height histogram; the merge is componentwise addition).
CountSeries run_count(const CountJob& job);

// Largest naive bound accepted for a P^dim enumeration (feasibility guard).
i64 enumeration_cap(int dim);

// --- Landau sieve -------------------------------------------------------------

// #{1 <= n <= x : n = a^2 + b^2}, by sieving the criterion that every prime
// p = 3 mod 4 divides n to even order.  x <= 10^9.
u64 landau_count(u64 x);
std::vector<u64> landau_counts(std::span<const u64> checkpoints);

// --- log-power fitting ----------------------------------------------------------

struct FitResult {
    double c = 0;       // multiplicative constant
    double theta = 0;   // exponent in N ~ c B (log B)^theta
    double residual = 0;
    std::vector<std::pair<double, double>> local_exponents;  // (B, finite-difference theta)
    int excluded_rows = 0;  // degenerate rows (N = 0) dropped with a warning
};

// Least squares of log(N/B) = log c + theta log log B.  Needs >= 3 usable
// rows with B >= 3.
FitResult fit_log_power(std::span<const std::pair<double, double>> rows);  // (B, N)
FitResult fit_log_power(const CountSeries& series);

// --- CSV ------------------------------------------------------------------------

// Header B,N,baseline,N_over_pred; integer counts, 17-significant-digit
// floats, LF line ends.  N_over_pred = N / (B (log B)^predicted_theta).
void write_csv(std::ostream& os, const CountSeries& series, double predicted_theta);

}  // namespace manin::count

#endif
