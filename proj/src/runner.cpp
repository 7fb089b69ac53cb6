#include "bellhda/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "bellhda/csv.hpp"
#include "bellhda/detection.hpp"
#include "bellhda/errors.hpp"
#include "bellhda/random.hpp"

namespace bellhda {

namespace {

enum Stream : std::uint64_t { kStreamA = 0, kStreamB = 1, kStreamOutcomes = 2 };

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

bool finite(double x) { return std::isfinite(x); }

std::pair<SettingSignal, SettingSignal> build_signals(const RunConfig& c) {
    const double start = -c.transient_tau;
    const double span = c.transient_tau + c.duration_tau;
    const ChshSettings& s = c.settings;
    switch (c.scenario) {
        case Scenario::static_blocks:
            return block_schedule(chsh_pairs(s), c.duration_tau);
        case Scenario::random_telegraph: {
            TelegraphConfig a{c.mu_tau, s.a0, s.a1, mix_seed(c.seed, kStreamA), span, start};
            TelegraphConfig b{c.mu_tau, s.b0, s.b1, mix_seed(c.seed, kStreamB), span, start};
            return {telegraph(a), telegraph(b)};
        }
        case Scenario::quasi_periodic: {
            // B lags A by half a period so that all four pairs get dwell.
            const double lead = 0.5 * c.qp_period_tau;
            QuasiPeriodicConfig a{c.qp_period_tau, c.qp_jitter, s.a0, s.a1,
                                  mix_seed(c.seed, kStreamA), span, start};
            QuasiPeriodicConfig b{c.qp_period_tau, c.qp_jitter, s.b0, s.b1,
                                  mix_seed(c.seed, kStreamB), span + lead, start - lead};
            return {quasi_periodic(a), quasi_periodic(b)};
        }
    }
    throw ConfigError("unknown scenario");
}

void accumulate_exact(const RunConfig& c, RunOutput& out, std::size_t first, PairLedger& ledger) {
    const auto pairs = chsh_pairs(c.settings);
    const auto& traj = out.trajectory;
    SignalCursor a(out.a_signal), b(out.b_signal);

    auto evaluate = [&pairs](double alpha, PairValues& e) {
        for (int p = 0; p < kNumPairs; ++p) e[p] = conditional_E(pairs[p].a, pairs[p].b, alpha);
    };
    PairValues left, right;
    evaluate(traj.samples[first], left);
    for (std::size_t k = first; k + 1 < traj.samples.size(); ++k) {
        const double t = traj.time_at(k);
        const int actual = pair_index(a.level_at(t), b.level_at(t));
        evaluate(traj.samples[k + 1], right);
        for (int p = 0; p < kNumPairs; ++p) {
            ledger.accumulate(p, p == actual ? Channel::factual : Channel::counterfactual,
                              0.5 * (left[p] + right[p]), traj.h);
        }
        left = right;
    }
}

void accumulate_sampled(const RunConfig& c, RunOutput& out, PairLedger& ledger) {
    const auto pairs = chsh_pairs(c.settings);
    const auto& traj = out.trajectory;
    SignalCursor a(out.a_signal), b(out.b_signal);
    Rng events(mix_seed(c.seed, kStreamOutcomes));

    const double spacing = 1.0 / c.rate_per_tau;
    const auto n_uniform = static_cast<std::uint64_t>(std::llround(c.rate_per_tau * c.duration_tau));
    double t = 0.0;
    for (std::uint64_t j = 0;; ++j) {
        if (c.event_spacing == EventSpacing::uniform) {
            if (j >= n_uniform) break;
            t = static_cast<double>(j) * spacing;
        } else {
            if (j > 0) t += exponential(events, spacing);
            if (t >= c.duration_tau) break;
        }
        const double alpha = alpha_at(traj, t);
        // Settings are seen on the integrator grid, as the dynamics see them.
        const auto g = static_cast<std::size_t>(std::floor((t - traj.t0) / traj.h + 1e-9));
        const double tg = traj.time_at(g);
        const int actual = pair_index(a.level_at(tg), b.level_at(tg));
        for (int p = 0; p < kNumPairs; ++p) {
            const Outcome o = sample_outcome(outcome_probs(pairs[p].a, pairs[p].b, alpha),
                                             uniform01(events));
            ledger.record(p, p == actual ? Channel::factual : Channel::counterfactual, o);
        }
    }
}

}  // namespace

void RunConfig::validate() const {
    require(finite(gamma) && gamma >= 0.0, "gamma must be finite and >= 0");
    require(finite(mu_tau) && mu_tau >= 0.0, "mu_tau must be finite and >= 0");
    require(finite(duration_tau) && finite(transient_tau), "durations must be finite");
    require(transient_tau >= 0.0, "transient_tau must be >= 0");
    require(duration_tau > transient_tau, "duration_tau must exceed transient_tau");
    require(finite(rate_per_tau) && rate_per_tau > 0.0, "rate_per_tau must be > 0");
    require(step_per_tau >= 8, "step_per_tau must be >= 8");
    require(finite(alpha_history), "alpha_history must be finite");
    require(finite(settings.a0) && finite(settings.a1) && finite(settings.b0) &&
                finite(settings.b1),
            "settings must be finite");
    require(finite(qp_period_tau) && qp_period_tau > 0.0, "qp_period_tau must be > 0");
    require(qp_jitter >= 0.0 && qp_jitter < 1.0, "qp_jitter must lie in [0, 1)");
    require(trace_decimation >= 1, "trace_decimation must be >= 1");
    if (mode == Mode::sampled && event_spacing == EventSpacing::uniform) {
        require(rate_per_tau * duration_tau < 9.0e15, "too many coincidence events");
    }
}

TrackingParams RunConfig::tracking() const {
    TrackingParams p;
    p.gamma = gamma;
    p.tau = 1.0;
    p.error_wrap = error_wrap;
    p.step_per_tau = step_per_tau;
    return p;
}

RunOutput run(const RunConfig& c) {
    c.validate();
    auto [a_signal, b_signal] = build_signals(c);
    AlphaTrajectory traj =
        integrate(c.tracking(), a_signal, -c.transient_tau, c.duration_tau, c.alpha_history);
    RunOutput out{Metrics{}, std::move(traj), std::move(a_signal), std::move(b_signal), {}};

    const auto first = static_cast<std::size_t>(
        std::ceil(c.transient_tau / out.trajectory.h - 1e-9));
    if (c.mode == Mode::exact) {
        accumulate_exact(c, out, first, out.ledger);
    } else {
        accumulate_sampled(c, out, out.ledger);
    }

    Metrics& m = out.metrics;
    m.mode = c.mode;
    m.seed = c.seed;
    m.gamma = c.gamma;
    m.mu_tau = c.mu_tau;
    m.duration_tau = c.duration_tau;
    summarize(out.ledger, m);
    return out;
}

std::vector<TraceRow> emit_trace(const RunOutput& out, int decimation) {
    if (decimation < 1) throw InvalidArgument("emit_trace: decimation must be >= 1");
    const auto& traj = out.trajectory;
    SignalCursor a(out.a_signal), b(out.b_signal);
    std::vector<TraceRow> rows;
    rows.reserve(traj.samples.size() / static_cast<std::size_t>(decimation) + 1);
    for (std::size_t k = 0; k < traj.samples.size(); k += static_cast<std::size_t>(decimation)) {
        const double t = traj.time_at(k);
        const double alpha = traj.samples[k];
        rows.push_back({t, alpha, wrap_report(alpha), a.value_at(t), b.value_at(t)});
    }
    return rows;
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
    std::ostringstream os;
    os << "t_over_tau,alpha,a,b\n";
    for (const auto& r : rows) {
        os << format_real(r.t_over_tau) << ',' << format_real(r.alpha_reported) << ','
           << format_real(r.a) << ',' << format_real(r.b) << '\n';
    }
    return os.str();
}

std::vector<Metrics> sweep_gamma(const RunConfig& base, const std::vector<double>& gammas,
                                 int replicates, int jobs) {
    if (gammas.empty()) throw ConfigError("sweep_gamma: empty gamma list");
    if (replicates < 1) throw ConfigError("sweep_gamma: replicates must be >= 1");
    const std::size_t total = gammas.size() * static_cast<std::size_t>(replicates);
    std::vector<Metrics> rows(total);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            RunConfig c = base;
            c.gamma = gammas[i / static_cast<std::size_t>(replicates)];
            c.seed = base.seed + i % static_cast<std::size_t>(replicates);
            try {
                rows[i] = run(c).metrics;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = total;
            }
        }
    };

    const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

const char* to_string(Scenario s) {
    switch (s) {
        case Scenario::static_blocks: return "static_blocks";
        case Scenario::random_telegraph: return "random_telegraph";
        case Scenario::quasi_periodic: return "quasi_periodic";
    }
    return "?";
}

const char* to_string(ErrorWrap w) { return w == ErrorWrap::half_pi ? "half_pi" : "none"; }

const char* to_string(EventSpacing e) {
    return e == EventSpacing::uniform ? "uniform" : "poisson";
}

}  // namespace bellhda
