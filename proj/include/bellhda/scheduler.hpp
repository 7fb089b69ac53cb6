#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "bellhda/angles.hpp"

namespace bellhda {

/// Piecewise-constant, right-continuous analyzer setting versus time.
///
/// Segment k starts at breakpoints[k] and holds angle values[k] and setting
/// level levels[k] (0 or 1, which of the station's two settings is active).
/// The first segment also covers every t before breakpoints[0], so it doubles
/// as the history for t < start. Lookups beyond domain_end are errors.
class SettingSignal {
public:
    SettingSignal(std::vector<double> breakpoints, std::vector<double> values,
                  std::vector<int> levels, double domain_end);

    /// Constant signal on (-inf, domain_end].
    static SettingSignal constant(double value, double domain_end, int level = 0);

    double value_at(double t) const;
    int level_at(double t) const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<int>& levels() const { return levels_; }
    double domain_end() const { return domain_end_; }
    std::size_t num_segments() const { return values_.size(); }
    /// Number of jumps, i.e. segments after the first.
    std::size_t num_jumps() const { return values_.size() - 1; }

    /// Index of the segment in force at t.
    std::size_t segment_at(double t) const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    std::vector<int> levels_;
    double domain_end_;
};

/// Amortized O(1) lookup for non-decreasing query times.
class SignalCursor {
public:
    explicit SignalCursor(const SettingSignal& signal) : signal_(&signal) {}

    std::size_t segment_at(double t);
    double value_at(double t) { return signal_->values()[segment_at(t)]; }
    int level_at(double t) { return signal_->levels()[segment_at(t)]; }

private:
    const SettingSignal* signal_;
    std::size_t seg_ = 0;
};

struct TelegraphConfig {
    double rate = 0.0;  // mean jumps per unit time
    double low = 0.0;
    double high = 0.0;
    std::uint64_t seed = 0;
    double duration = 1.0;
    double start = 0.0;
};

/// Random telegraph: starts at low (level 0), alternates low/high at the
/// arrival times of a Poisson process of the given rate.
SettingSignal telegraph(const TelegraphConfig& config);

/// Four consecutive equal quarters of [0, total], quarter k carrying pair k.
/// For t < 0 the signals hold pair 0.
std::pair<SettingSignal, SettingSignal> block_schedule(
    const std::array<SettingPair, kNumPairs>& pairs, double total);

struct QuasiPeriodicConfig {
    double period = 1.0;
    double jitter = 0.0;  // fraction in [0, 1)
    double low = 0.0;
    double high = 0.0;
    std::uint64_t seed = 0;
    double duration = 1.0;
    double start = 0.0;
};

/// Alternating signal whose inter-jump intervals are period * (1 + u),
/// u uniform in [-jitter, jitter].
SettingSignal quasi_periodic(const QuasiPeriodicConfig& config);

}  // namespace bellhda
