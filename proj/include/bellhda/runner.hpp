#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bellhda/angles.hpp"
#include "bellhda/ledger.hpp"
#include "bellhda/scheduler.hpp"
#include "bellhda/tracking.hpp"

namespace bellhda {

enum class Scenario { static_blocks, random_telegraph, quasi_periodic };
enum class EventSpacing { uniform, poisson };

/// One simulated experiment. Times are in units of the delay tau.
struct RunConfig {
    Scenario scenario = Scenario::random_telegraph;
    double gamma = 1.0;
    double mu_tau = 0.25;
    double duration_tau = 2000.0;
    double transient_tau = 200.0;
    double rate_per_tau = 500.0;
    int step_per_tau = 64;
    std::uint64_t seed = 1;
    Mode mode = Mode::exact;
    ErrorWrap error_wrap = ErrorWrap::half_pi;
    ChshSettings settings;
    double alpha_history = 0.0;
    EventSpacing event_spacing = EventSpacing::uniform;
    double qp_period_tau = 4.0;
    double qp_jitter = 0.1;
    int trace_decimation = 1;

    /// Throws ConfigError.
    void validate() const;
    TrackingParams tracking() const;
};

struct RunOutput {
    Metrics metrics;
    AlphaTrajectory trajectory;  // covers [-transient, duration]
    SettingSignal a_signal;
    SettingSignal b_signal;
    PairLedger ledger;
};

/// Builds the setting signals, integrates alpha over the transient and the
/// measured span, drops the transient, and fills the pair ledger. Exact mode
/// integrates conditional_E by the trapezoid rule on the grid; sampled mode
/// draws one outcome per pair at every coincidence event.
RunOutput run(const RunConfig& config);

struct TraceRow {
    double t_over_tau = 0.0;
    double alpha_raw = 0.0;
    double alpha_reported = 0.0;
    double a = 0.0;
    double b = 0.0;
};

/// Every `decimation`-th grid point of the run, transient included.
std::vector<TraceRow> emit_trace(const RunOutput& out, int decimation = 1);

/// CSV with columns t_over_tau, alpha, a, b.
std::string trace_csv(const std::vector<TraceRow>& rows);

/// One run per (gamma, replicate), replicate k using seed base.seed + k.
/// Rows come back gamma-major in input order whatever `jobs` is.
std::vector<Metrics> sweep_gamma(const RunConfig& base, const std::vector<double>& gammas,
                                 int replicates = 1, int jobs = 1);

const char* to_string(Scenario s);
const char* to_string(ErrorWrap w);
const char* to_string(EventSpacing e);

}  // namespace bellhda
