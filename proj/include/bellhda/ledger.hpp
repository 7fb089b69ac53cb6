#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bellhda/angles.hpp"
#include "bellhda/detection.hpp"

namespace bellhda {

using PairValues = std::array<double, kNumPairs>;

struct CoincidenceCounts {
    std::uint64_t pp = 0;
    std::uint64_t pm = 0;
    std::uint64_t mp = 0;
    std::uint64_t mm = 0;

    std::uint64_t total() const { return pp + pm + mp + mm; }
    void add(const Outcome& o);
};

/// (C++ + C-- - C+- - C-+) / total. Throws EmptyCounts when total is zero.
double expectation_from_counts(const CoincidenceCounts& c);

enum class Channel { factual, counterfactual };

/// Time- or count-weighted AB sums for the four setting pairs, kept separately
/// for the intervals where a pair was actually set (factual) and the intervals
/// where another pair was set (counterfactual).
class PairLedger {
public:
    struct Totals {
        double sum = 0.0;
        double weight = 0.0;
        CoincidenceCounts counts;
    };

    void accumulate(int pair, Channel channel, double ab_value, double weight);
    /// Sampled mode: one coincidence of unit weight.
    void record(int pair, Channel channel, const Outcome& outcome);

    const Totals& totals(int pair, Channel channel) const;

private:
    Totals& slot(int pair, Channel channel);

    std::array<Totals, kNumPairs> factual_{};
    std::array<Totals, kNumPairs> counterfactual_{};
};

struct PairMeans {
    PairValues factual{};
    PairValues counterfactual{};               // dwell-normalized
    std::array<bool, kNumPairs> cf_present{};  // false when cf weight is zero

    bool any_cf_absent() const;
};

/// Throws InsufficientDwell when a pair was never actually set.
PairMeans pair_means(const PairLedger& ledger);

/// |E00 - E01| + |E10 + E11|, index p = 2*i + j for (a_i, b_j).
double s_chsh(const PairValues& e);

/// |E00 + X00 - E01 - X01| + |E11 + X11 + E10 + X10| where X are the
/// counterfactual sums over the three complementary intervals.
double s8(const PairValues& e, const PairValues& cf_triple);

/// Counterfactual triple-interval sums from dwell-normalized means (3 * m).
PairValues triple_interval(const PairValues& cf_means);

/// Sum over pairs of |m_f - m_cf| / (|m_f| + |m_cf|). Terms whose denominator
/// is below 1e-9, or whose counterfactual is absent, contribute zero.
double delta(const PairMeans& means);

inline constexpr double kDeltaDenominatorFloor = 1e-9;

enum class Mode { exact, sampled };

const char* to_string(Mode mode);

struct Metrics {
    Mode mode = Mode::exact;
    std::uint64_t seed = 0;
    double gamma = 0.0;
    double mu_tau = 0.0;
    double duration_tau = 0.0;
    PairValues e{};
    PairValues e_cf{};
    double s_chsh = 0.0;
    double s8 = 0.0;
    double delta = 0.0;
    bool cf_absent = false;
    std::array<std::uint64_t, kNumPairs> factual_counts{};  // sampled mode
};

/// Fills the E, E_cf, s_chsh, s8, delta fields from a finished ledger.
void summarize(const PairLedger& ledger, Metrics& metrics);

std::string metrics_csv_header();
std::string metrics_csv_row(const Metrics& m);

}  // namespace bellhda
