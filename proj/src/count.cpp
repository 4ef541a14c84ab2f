#include "manin/count.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "manin/sieve.hpp"

namespace manin::count {

i64 enumeration_cap(int dim) {
    switch (dim) {
        case 1: return 100'000;
        case 2: return 3'000;
        case 3: return 300;
        default: return 60;
    }
}

namespace {

// floor(B^(1/e)) exactly
i64 integer_root(u128 B, int e) {
    if (B == 0) return 0;
    i64 r = i64(std::pow((double)B, 1.0 / e));
    auto pw = [&](i64 x) {
        u128 v = 1;
        for (int i = 0; i < e; ++i) {
            if (x != 0 && v > ~u128(0) / u128(x)) return ~u128(0);
            v *= u128(x);
        }
        return v;
    };
    while (r > 0 && pw(r) > B) --r;
    while (pw(r + 1) <= B) ++r;
    return r;
}

struct Histograms {
    std::vector<u64> soluble;   // by naive height
    std::vector<u64> baseline;
};

}  // namespace

CountSeries run_count(const CountJob& job) {
    if (job.checkpoints.empty()) throw std::invalid_argument("count job: no checkpoints");
    for (size_t i = 1; i < job.checkpoints.size(); ++i)
        if (!(job.checkpoints[i - 1] < job.checkpoints[i]))
            throw std::invalid_argument("count job: checkpoints must be strictly increasing");
    if (job.workers < 1) throw std::invalid_argument("count job: workers must be >= 1");
    int dim = job.family.base_dim();
    bool anticanonical = job.height.mode == heights::HeightSpec::Mode::anticanonical;
    if (anticanonical && job.height.ambient_dim != dim)
        throw std::invalid_argument("count job: height ambient dimension does not match the base");
    int e = anticanonical ? dim + 1 : 1;
    i64 T = integer_root(job.checkpoints.back(), e);
    if (T < 1) throw std::invalid_argument("count job: final checkpoint below the first height");
    if (T > enumeration_cap(dim))
        throw std::invalid_argument("count job: infeasible checkpoint (naive bound " +
                                    std::to_string(T) + " exceeds the P^" + std::to_string(dim) +
                                    " cap " + std::to_string(enumeration_cap(dim)) + ")");

    small_sieve();  // build shared tables before spawning workers
    const model::FiberEvaluator evaluate(job.family);

    int W = job.workers;
    std::vector<Histograms> hists(W);
    auto work = [&](int w, i64 k_lo, i64 k_hi) {
        Histograms& h = hists[w];
        h.soluble.assign(size_t(T) + 1, 0);
        h.baseline.assign(size_t(T) + 1, 0);
        heights::enumerate_slices(dim, T, k_lo, k_hi, [&](std::span<const i64> coords) {
            u64 ht = 0;
            for (i64 c : coords) ht = std::max(ht, u64(c < 0 ? -c : c));
            model::FiberStatus st = evaluate(coords);
            if (st == model::FiberStatus::excluded) return;
            h.baseline[ht] += 1;
            if (st == model::FiberStatus::soluble) h.soluble[ht] += 1;
        });
    };

    if (W == 1) {
        work(0, 0, T);
    } else {
        i64 chunk = (T + 1 + W - 1) / W;
        std::vector<std::thread> threads;
        for (int w = 0; w < W; ++w) {
            i64 lo = i64(w) * chunk;
            i64 hi = std::min<i64>(T, lo + chunk - 1);
            threads.emplace_back(work, w, lo, hi);
        }
        for (auto& t : threads) t.join();
    }

    // componentwise merge, then prefix sums
    std::vector<u64> soluble(size_t(T) + 1, 0), baseline(size_t(T) + 1, 0);
    for (const Histograms& h : hists) {
        if (h.soluble.empty()) continue;
        for (size_t i = 0; i <= size_t(T); ++i) {
            soluble[i] += h.soluble[i];
            baseline[i] += h.baseline[i];
        }
    }
    for (size_t i = 1; i <= size_t(T); ++i) {
        soluble[i] += soluble[i - 1];
        baseline[i] += baseline[i - 1];
    }

    CountSeries out;
    for (u128 B : job.checkpoints) {
        i64 hb = integer_root(B, e);
        hb = std::min<i64>(hb, T);
        CountRow row;
        row.B = B;
        row.N = hb >= 0 ? soluble[size_t(hb)] : 0;
        row.baseline = hb >= 0 ? baseline[size_t(hb)] : 0;
        out.rows.push_back(row);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Landau sieve
// ---------------------------------------------------------------------------

namespace {

// bit vector over [0, x]: n is a sum of two squares
std::vector<u64> landau_bits(u64 x) {
    if (x < 1 || x > 1'000'000'000) throw std::invalid_argument("landau sieve: x must be in [1, 1e9]");
    size_t words = size_t(x / 64) + 1;
    std::vector<u64> good(words, ~u64(0));
    auto clear_bit = [&](u64 n) { good[n >> 6] &= ~(u64(1) << (n & 63)); };
    clear_bit(0);

    // odd-only primality sieve up to x
    u64 m = x >= 3 ? (x - 1) / 2 : 0;  // odd 2i+1 <= x
    std::vector<u64> comp((m >> 6) + 1, 0);
    auto comp_set = [&](u64 i) { comp[i >> 6] |= u64(1) << (i & 63); };
    auto comp_get = [&](u64 i) { return (comp[i >> 6] >> (i & 63)) & 1; };
    for (u64 i = 1; (2 * i + 1) * (2 * i + 1) <= x; ++i) {
        if (comp_get(i)) continue;
        u64 p = 2 * i + 1;
        for (u64 j = (p * p - 1) / 2; j <= m; j += p) comp_set(j);
    }

    // for each prime p = 3 mod 4 mark n with odd p-valuation
    for (u64 i = 1; i <= m; ++i) {
        if (comp_get(i)) continue;
        u64 p = 2 * i + 1;
        if (p % 4 != 3) continue;
        for (u64 q = p; q <= x; ) {
            // n = multiple of q with (n/q) not divisible by p: v_p(n) = v_p(q)
            for (u64 k = 1, n = q; n <= x; ++k, n += q)
                if (k % p != 0) clear_bit(n);
            // next odd power p^(k+2)
            if (q > x / p) break;
            u64 q2 = q * p;
            if (q2 > x / p) break;
            q = q2 * p;
        }
    }
    return good;
}

u64 popcount_prefix(const std::vector<u64>& bits, u64 upto) {
    u64 cnt = 0;
    u64 full_words = (upto + 1) / 64;
    for (u64 w = 0; w < full_words; ++w) cnt += u64(__builtin_popcountll(bits[w]));
    u64 rem = (upto + 1) % 64;
    if (rem) cnt += u64(__builtin_popcountll(bits[full_words] & ((u64(1) << rem) - 1)));
    return cnt;
}

}  // namespace

u64 landau_count(u64 x) {
    auto bits = landau_bits(x);
    return popcount_prefix(bits, x);
}

std::vector<u64> landau_counts(std::span<const u64> checkpoints) {
    if (checkpoints.empty()) return {};
    u64 x = *std::max_element(checkpoints.begin(), checkpoints.end());
    auto bits = landau_bits(x);
    std::vector<u64> out;
    out.reserve(checkpoints.size());
    for (u64 c : checkpoints) out.push_back(popcount_prefix(bits, c));
    return out;
}

// ---------------------------------------------------------------------------
// fitting
// ---------------------------------------------------------------------------

FitResult fit_log_power(std::span<const std::pair<double, double>> rows) {
    FitResult fr;
    std::vector<std::pair<double, double>> use;  // (loglogB, log(N/B)), with B kept
    std::vector<double> bs;
    for (auto& [B, N] : rows) {
        if (N <= 0) { ++fr.excluded_rows; continue; }
        if (B < 3) throw std::invalid_argument("fit_log_power: rows need B >= 3");
        use.push_back({std::log(std::log(B)), std::log(N / B)});
        bs.push_back(B);
    }
    if (use.empty()) throw std::invalid_argument("fit_log_power: all rows degenerate (N = 0)");
    if (use.size() < 3) throw std::invalid_argument("fit_log_power: need at least 3 usable rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = double(use.size());
    for (auto& [x, y] : use) { sx += x; sy += y; sxx += x * x; sxy += x * y; }
    double denom = n * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("fit_log_power: degenerate abscissae");
    fr.theta = (n * sxy - sx * sy) / denom;
    double logc = (sy - fr.theta * sx) / n;
    fr.c = std::exp(logc);
    double ss = 0;
    for (auto& [x, y] : use) {
        double r = y - (logc + fr.theta * x);
        ss += r * r;
    }
    fr.residual = std::sqrt(ss / n);
    for (size_t i = 1; i < use.size(); ++i) {
        double dx = use[i].first - use[i - 1].first;
        if (dx != 0)
            fr.local_exponents.push_back({bs[i], (use[i].second - use[i - 1].second) / dx});
    }
    return fr;
}

FitResult fit_log_power(const CountSeries& series) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(series.rows.size());
    for (const CountRow& r : series.rows)
        rows.push_back({double((long double)r.B), double(r.N)});
    return fit_log_power(rows);
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

void write_csv(std::ostream& os, const CountSeries& series, double predicted_theta) {
    os << "B,N,baseline,N_over_pred\n";
    char buf[64];
    for (const CountRow& r : series.rows) {
        double B = double((long double)r.B);
        double ratio = std::numeric_limits<double>::quiet_NaN();
        if (B > 1) ratio = double(r.N) / (B * std::pow(std::log(B), predicted_theta));
        std::snprintf(buf, sizeof buf, "%.17g", ratio);
        os << to_string_u128(r.B) << ',' << r.N << ',' << r.baseline << ',' << buf << '\n';
    }
}

}  // namespace manin::count
