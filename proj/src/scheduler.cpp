#include "bellhda/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bellhda/errors.hpp"
#include "bellhda/random.hpp"

namespace bellhda {

SettingSignal::SettingSignal(std::vector<double> breakpoints, std::vector<double> values,
                             std::vector<int> levels, double domain_end)
    : breakpoints_(std::move(breakpoints)),
      values_(std::move(values)),
      levels_(std::move(levels)),
      domain_end_(domain_end) {
    if (breakpoints_.empty() || breakpoints_.size() != values_.size() ||
        values_.size() != levels_.size()) {
        throw InvalidArgument("SettingSignal: breakpoints, values and levels must be non-empty and equal length");
    }
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
        if (!(breakpoints_[k] > breakpoints_[k - 1])) {
            throw InvalidArgument("SettingSignal: breakpoints must be strictly increasing");
        }
    }
    if (!(domain_end_ >= breakpoints_.front())) {
        throw InvalidArgument("SettingSignal: domain_end precedes the first breakpoint");
    }
}

SettingSignal SettingSignal::constant(double value, double domain_end, int level) {
    return SettingSignal({std::min(0.0, domain_end)}, {value}, {level}, domain_end);
}

std::size_t SettingSignal::segment_at(double t) const {
    if (t > domain_end_) {
        throw OutOfDomain("SettingSignal: t=" + std::to_string(t) + " beyond domain end " +
                          std::to_string(domain_end_));
    }
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    if (it == breakpoints_.begin()) return 0;
    return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

double SettingSignal::value_at(double t) const { return values_[segment_at(t)]; }

int SettingSignal::level_at(double t) const { return levels_[segment_at(t)]; }

std::size_t SignalCursor::segment_at(double t) {
    if (t > signal_->domain_end()) {
        throw OutOfDomain("SignalCursor: t=" + std::to_string(t) + " beyond domain end");
    }
    const auto& bp = signal_->breakpoints();
    if (t < bp[seg_]) {
        seg_ = signal_->segment_at(t);  // query went backwards
        return seg_;
    }
    while (seg_ + 1 < bp.size() && bp[seg_ + 1] <= t) ++seg_;
    return seg_;
}

namespace {

SettingSignal alternating(double start, double end, double low, double high,
                          const std::vector<double>& jumps) {
    std::vector<double> bp{start};
    std::vector<double> values{low};
    std::vector<int> levels{0};
    bp.reserve(jumps.size() + 1);
    for (double t : jumps) {
        if (t <= bp.back()) continue;  // zero-length dwell
        const int level = 1 - levels.back();
        bp.push_back(t);
        levels.push_back(level);
        values.push_back(level == 0 ? low : high);
    }
    return SettingSignal(std::move(bp), std::move(values), std::move(levels), end);
}

}  // namespace

SettingSignal telegraph(const TelegraphConfig& c) {
    if (!(c.rate >= 0.0) || !std::isfinite(c.rate)) {
        throw InvalidArgument("telegraph: rate must be finite and >= 0");
    }
    if (!(c.duration > 0.0)) {
        throw InvalidArgument("telegraph: duration must be > 0");
    }
    const double end = c.start + c.duration;
    std::vector<double> jumps;
    if (c.rate > 0.0) {
        Rng rng(c.seed);
        const double mean = 1.0 / c.rate;
        double t = c.start;
        for (;;) {
            t += exponential(rng, mean);
            if (t > end) break;
            jumps.push_back(t);
        }
    }
    return alternating(c.start, end, c.low, c.high, jumps);
}

std::pair<SettingSignal, SettingSignal> block_schedule(
    const std::array<SettingPair, kNumPairs>& pairs, double total) {
    if (!(total > 0.0)) {
        throw InvalidArgument("block_schedule: total must be > 0");
    }
    std::vector<double> bp;
    std::vector<double> a_values, b_values;
    std::vector<int> a_levels, b_levels;
    for (int k = 0; k < kNumPairs; ++k) {
        bp.push_back(total * k / kNumPairs);
        a_values.push_back(pairs[k].a);
        b_values.push_back(pairs[k].b);
        a_levels.push_back(k / 2);
        b_levels.push_back(k % 2);
    }
    return {SettingSignal(bp, std::move(a_values), std::move(a_levels), total),
            SettingSignal(bp, std::move(b_values), std::move(b_levels), total)};
}

SettingSignal quasi_periodic(const QuasiPeriodicConfig& c) {
    if (!(c.period > 0.0)) {
        throw InvalidArgument("quasi_periodic: period must be > 0");
    }
    if (!(c.jitter >= 0.0 && c.jitter < 1.0)) {
        throw InvalidArgument("quasi_periodic: jitter must lie in [0, 1)");
    }
    if (!(c.duration > 0.0)) {
        throw InvalidArgument("quasi_periodic: duration must be > 0");
    }
    const double end = c.start + c.duration;
    Rng rng(c.seed);
    std::vector<double> jumps;
    double t = c.start;
    for (;;) {
        double u = 0.0;
        if (c.jitter > 0.0) u = c.jitter * (2.0 * uniform01(rng) - 1.0);
        t += c.period * (1.0 + u);
        if (t > end) break;
        jumps.push_back(t);
    }
    return alternating(c.start, end, c.low, c.high, jumps);
}

}  // namespace bellhda
