// SPDX-License-Identifier: Apache-2.0
#include "starsec/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "starsec/fading_stats.hpp"
#include "starsec/numerics.hpp"

namespace starsec {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLog2e = 1.4426950408889634073599246810018921;
constexpr std::int64_t kBlockTrials = 4096;

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

double log2_1p(double x) { return std::log1p(x) * kLog2e; }

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed ^ (0xD1B54A32D192ED03ull * (stream + 0x9E3779B97F4A7C15ull));
    for (auto& w : s_) w = splitmix64(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x1ull;
}

std::uint64_t TrialRng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double TrialRng::uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double TrialRng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double TrialRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    // Marsaglia polar method.
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * f;
    has_spare_ = true;
    return u * f;
}

double TrialRng::gamma(double shape) {
    if (!(shape > 0.0)) throw std::domain_error("TrialRng::gamma: shape must be > 0");
    if (shape < 1.0) {
        const double boost = std::pow(uniform01(), 1.0 / shape);
        return gamma(shape + 1.0) * boost;
    }
    // Marsaglia-Tsang squeeze method.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double TrialRng::nakagami(double m, double omega) {
    if (!(m >= 0.5)) throw std::domain_error("TrialRng::nakagami: shape must be >= 0.5");
    if (!(omega > 0.0)) throw std::domain_error("TrialRng::nakagami: spread must be > 0");
    return std::sqrt(gamma(m) * (omega / m));
}

double TrialRng::von_mises(double kappa) {
    if (!(kappa >= 0.0)) throw std::domain_error("TrialRng::von_mises: kappa must be >= 0");
    if (kappa < 1e-8) return uniform(-kPi, kPi);
    // Best-Fisher wrapped-Cauchy envelope rejection.
    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    const double r = (1.0 + rho * rho) / (2.0 * rho);
    double f;
    for (;;) {
        const double z = std::cos(kPi * uniform01());
        f = (1.0 + r * z) / (r + z);
        const double c = kappa * (r - f);
        const double u2 = uniform01();
        if (c * (2.0 - c) - u2 > 0.0) break;
        if (std::log(c / u2) + 1.0 - c >= 0.0) break;
    }
    f = std::clamp(f, -1.0, 1.0);
    const double angle = std::acos(f);
    return uniform01() > 0.5 ? angle : -angle;
}

namespace {

// Per-block running sums; combined sequentially in block order so results
// are bit-identical for any worker count.
struct Accum {
    enum Quantity {
        kRateQ = 0, kRateQp, kRateEq, kRateEqp,
        kDiffQ, kDiffQp, kWssrPre,
        kGainA, kGainB, kGainCq, kGainCqp,
        kRateQSharedRs,
        kCount
    };
    double sum[kCount] = {};
    double sumsq[kCount] = {};

    void add(Quantity q, double v) {
        sum[q] += v;
        sumsq[q] += v * v;
    }
};

struct TrialParams {
    int elements;
    double m_ur, m_rs, omega, kappa;
    double sqrt_lambda_q, sqrt_lambda_qp;
    double rho_s_q, rho_s_qp, rho_e_q, rho_e_qp;
    double w1, w2;
};

void run_trial(const TrialParams& p, TrialRng& rng, Accum& acc) {
    double a_re = 0.0, a_im = 0.0;
    double b_re = 0.0, b_im = 0.0;
    double bs_re = 0.0, bs_im = 0.0;  // B with the surface->AP hop shared with A
    double cq_re = 0.0, cq_im = 0.0;
    double cqp_re = 0.0, cqp_im = 0.0;
    for (int m = 0; m < p.elements; ++m) {
        const double h_uq = rng.nakagami(p.m_ur, p.omega);
        const double h_rs_a = rng.nakagami(p.m_rs, p.omega);
        const double h_uqp = rng.nakagami(p.m_ur, p.omega);
        const double h_rs_b = rng.nakagami(p.m_rs, p.omega);
        const double h_e_q = rng.nakagami(p.m_rs, p.omega);   // hop R -> E_{q'}
        const double h_e_qp = rng.nakagami(p.m_rs, p.omega);  // hop R -> E_q
        const double th_a = rng.von_mises(p.kappa);
        const double th_b = rng.von_mises(p.kappa);
        const double ph_q = rng.uniform(-kPi, kPi);
        const double ph_qp = rng.uniform(-kPi, kPi);

        const double wa = h_uq * h_rs_a * p.sqrt_lambda_q;
        a_re += wa * std::cos(th_a);
        a_im += wa * std::sin(th_a);
        const double wb = h_uqp * h_rs_b * p.sqrt_lambda_qp;
        b_re += wb * std::cos(th_b);
        b_im += wb * std::sin(th_b);
        const double wbs = h_uqp * h_rs_a * p.sqrt_lambda_qp;
        bs_re += wbs * std::cos(th_b);
        bs_im += wbs * std::sin(th_b);
        const double wcq = h_uq * h_e_q * p.sqrt_lambda_qp;
        cq_re += wcq * std::cos(ph_q);
        cq_im += wcq * std::sin(ph_q);
        const double wcqp = h_uqp * h_e_qp * p.sqrt_lambda_q;
        cqp_re += wcqp * std::cos(ph_qp);
        cqp_im += wcqp * std::sin(ph_qp);
    }
    const double gain_a = a_re * a_re + a_im * a_im;
    const double gain_b = b_re * b_re + b_im * b_im;
    const double gain_bs = bs_re * bs_re + bs_im * bs_im;
    const double gain_cq = cq_re * cq_re + cq_im * cq_im;
    const double gain_cqp = cqp_re * cqp_re + cqp_im * cqp_im;

    const double rate_q = log2_1p(p.rho_s_q * gain_a / (p.rho_s_qp * gain_b + 1.0));
    const double rate_q_shared =
        log2_1p(p.rho_s_q * gain_a / (p.rho_s_qp * gain_bs + 1.0));
    const double rate_qp = log2_1p(p.rho_s_qp * gain_b);
    const double rate_eq = log2_1p(p.rho_e_q * gain_cq);
    const double rate_eqp = log2_1p(p.rho_e_qp * gain_cqp);

    if (!std::isfinite(rate_q) || !std::isfinite(rate_qp) || !std::isfinite(rate_eq) ||
        !std::isfinite(rate_eqp) || !std::isfinite(rate_q_shared))
        throw std::runtime_error("simulate_rates: non-finite rate in a trial");

    acc.add(Accum::kRateQ, rate_q);
    acc.add(Accum::kRateQp, rate_qp);
    acc.add(Accum::kRateEq, rate_eq);
    acc.add(Accum::kRateEqp, rate_eqp);
    acc.add(Accum::kDiffQ, rate_q - rate_eq);
    acc.add(Accum::kDiffQp, rate_qp - rate_eqp);
    acc.add(Accum::kWssrPre, p.w1 * (rate_q - rate_eq) + p.w2 * (rate_qp - rate_eqp));
    acc.add(Accum::kGainA, gain_a);
    acc.add(Accum::kGainB, gain_b);
    acc.add(Accum::kGainCq, gain_cq);
    acc.add(Accum::kGainCqp, gain_cqp);
    acc.add(Accum::kRateQSharedRs, rate_q_shared);
}

McEstimate make_estimate(double sum, double sumsq, std::int64_t n) {
    McEstimate e;
    e.trials = n;
    e.value = sum / static_cast<double>(n);
    if (n > 1) {
        const double var =
            std::max(0.0, (sumsq - sum * sum / static_cast<double>(n)) /
                              static_cast<double>(n - 1));
        e.std_error = std::sqrt(var / static_cast<double>(n));
    }
    return e;
}

// Runs fn(trial_index, rng) over [0, trials) in fixed-size blocks handed out
// to workers; per-block state is merged in block order afterwards.
template <typename BlockState, typename TrialFn>
std::vector<BlockState> run_blocks(std::int64_t trials, std::uint64_t seed, int workers,
                                   TrialFn&& fn) {
    const std::int64_t n_blocks = (trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<BlockState> blocks(static_cast<std::size_t>(n_blocks));
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;

    const auto worker = [&] {
        for (;;) {
            const std::int64_t b = next.fetch_add(1);
            if (b >= n_blocks || failed.load(std::memory_order_relaxed)) break;
            const std::int64_t lo = b * kBlockTrials;
            const std::int64_t hi = std::min(trials, lo + kBlockTrials);
            try {
                for (std::int64_t i = lo; i < hi; ++i) {
                    TrialRng rng(seed, static_cast<std::uint64_t>(i));
                    fn(i, rng, blocks[static_cast<std::size_t>(b)]);
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true))
                    first_error = std::string(e.what()) + " (block " + std::to_string(b) + ")";
            }
        }
    };

    const int n_workers = static_cast<int>(
        std::max<std::int64_t>(1, std::min<std::int64_t>(workers, n_blocks)));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw std::runtime_error(first_error);
    return blocks;
}

}  // namespace

McReport simulate_rates(const ScenarioConfig& s, const McSettings& mc) {
    require_valid(s);
    if (mc.trials < 1) throw std::invalid_argument("simulate_rates: trials must be >= 1");
    if (mc.workers < 1) throw std::invalid_argument("simulate_rates: workers must be >= 1");

    const Side q = s.decode_first;
    const Side qp = opposite(q);
    const LinkBudget lb = link_budget(s);
    TrialParams p{};
    p.elements = s.elements;
    p.m_ur = s.m_ur;
    p.m_rs = s.m_rs;
    p.omega = s.omega;
    p.kappa = s.kappa;
    p.sqrt_lambda_q = std::sqrt(lambda_of(s, q));
    p.sqrt_lambda_qp = std::sqrt(lambda_of(s, qp));
    p.rho_s_q = lb.rho_s_q;
    p.rho_s_qp = lb.rho_s_qp;
    p.rho_e_q = lb.rho_e_q;
    p.rho_e_qp = lb.rho_e_qp;
    p.w1 = s.w1;
    p.w2 = s.w2;

    const auto blocks = run_blocks<Accum>(
        mc.trials, mc.seed, mc.workers,
        [&p](std::int64_t, TrialRng& rng, Accum& acc) { run_trial(p, rng, acc); });

    Accum total;
    for (const auto& b : blocks)
        for (int k = 0; k < Accum::kCount; ++k) {
            total.sum[k] += b.sum[k];
            total.sumsq[k] += b.sumsq[k];
        }

    const std::int64_t n = mc.trials;
    const auto est = [&](Accum::Quantity k) {
        return make_estimate(total.sum[k], total.sumsq[k], n);
    };

    McReport rep;
    rep.c_q = est(Accum::kRateQ);
    rep.c_qp = est(Accum::kRateQp);
    rep.c_e_q = est(Accum::kRateEq);
    rep.c_e_qp = est(Accum::kRateEqp);
    const McEstimate diff_q = est(Accum::kDiffQ);
    const McEstimate diff_qp = est(Accum::kDiffQp);
    rep.r_sec_q = {std::max(diff_q.value, 0.0), diff_q.std_error, n};
    rep.r_sec_qp = {std::max(diff_qp.value, 0.0), diff_qp.std_error, n};
    const McEstimate wpre = est(Accum::kWssrPre);
    rep.wssr = {s.w1 * rep.r_sec_q.value + s.w2 * rep.r_sec_qp.value, wpre.std_error, n};
    rep.moments.mean_a = est(Accum::kGainA);
    rep.moments.mean_b = est(Accum::kGainB);
    rep.moments.mean_c_q = est(Accum::kGainCq);
    rep.moments.mean_c_qp = est(Accum::kGainCqp);
    rep.c_q_shared_rs = est(Accum::kRateQSharedRs);

    rep.rates.c_q = rep.c_q.value;
    rep.rates.c_qp = rep.c_qp.value;
    rep.rates.c_e_q = rep.c_e_q.value;
    rep.rates.c_e_qp = rep.c_e_qp.value;
    rep.rates.r_sec_q = rep.r_sec_q.value;
    rep.rates.r_sec_qp = rep.r_sec_qp.value;
    rep.rates.r_sum = rep.r_sec_q.value + rep.r_sec_qp.value;
    rep.rates.wssr = rep.wssr.value;
    rep.rates.method = RateMethod::monte_carlo;
    return rep;
}

std::vector<double> cascaded_gain_samples(const ScenarioConfig& s, Side side,
                                          std::int64_t count, std::uint64_t seed,
                                          int workers) {
    require_valid(s);
    if (count < 1)
        throw std::invalid_argument("cascaded_gain_samples: count must be >= 1");
    const double sqrt_lambda = std::sqrt(lambda_of(s, side));
    std::vector<double> out(static_cast<std::size_t>(count));

    struct Empty {};
    run_blocks<Empty>(count, seed, workers,
                      [&](std::int64_t i, TrialRng& rng, Empty&) {
                          double re = 0.0, im = 0.0;
                          for (int m = 0; m < s.elements; ++m) {
                              const double h1 = rng.nakagami(s.m_ur, s.omega);
                              const double h2 = rng.nakagami(s.m_rs, s.omega);
                              const double th = rng.von_mises(s.kappa);
                              const double w = h1 * h2 * sqrt_lambda;
                              re += w * std::cos(th);
                              im += w * std::sin(th);
                          }
                          out[static_cast<std::size_t>(i)] = re * re + im * im;
                      });
    return out;
}

double ks_distance_gamma(std::vector<double> sample, double shape, double mean) {
    if (sample.empty()) throw std::invalid_argument("ks_distance_gamma: empty sample");
    if (!(shape > 0.0) || !(mean > 0.0))
        throw std::domain_error("ks_distance_gamma: shape and mean must be > 0");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    const double rate = shape / mean;  // 1 / scale
    double sup = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double cdf = gamma_p(shape, sample[i] * rate);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        sup = std::max({sup, std::abs(cdf - lo), std::abs(cdf - hi)});
    }
    return sup;
}

}  // namespace starsec
