#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "bellhda/ledger.hpp"
#include "bellhda/random.hpp"
#include "bellhda/scheduler.hpp"

namespace bellhda {

/// One value of the hidden variable: fixed +/-1 answers for each local setting.
struct DeterministicStrategy {
    std::array<int, 2> a_map{1, 1};
    std::array<int, 2> b_map{1, 1};

    int ab(int pair) const { return a_map[pair / 2] * b_map[pair % 2]; }
    PairValues correlations() const;
};

inline constexpr std::size_t kNumStrategies = 16;

/// All 16 strategies; bit k of the index set to 1 makes entry k equal -1,
/// entries ordered a0, a1, b0, b1.
std::array<DeterministicStrategy, kNumStrategies> all_strategies();

double strategy_chsh(const DeterministicStrategy& s);

/// Convex mixture of deterministic strategies.
struct LambdaModel {
    std::vector<DeterministicStrategy> strategies;
    std::vector<double> weights;

    void validate() const;
};

PairValues model_correlations(const LambdaModel& m);
double model_chsh(const LambdaModel& m);

/// Mixture over all 16 strategies with weights uniform on the simplex
/// (spacings of sorted uniforms).
LambdaModel random_mixture(Rng& rng);

/// Piecewise-constant choice of strategy versus time, right-continuous.
/// strategy[k] indexes LambdaModel::strategies from breakpoints[k] on.
struct StrategySchedule {
    std::vector<double> breakpoints;
    std::vector<std::size_t> strategy;
};

struct TimeSlicedResult {
    double s_eq1 = 0.0;  // CHSH from factual intervals only
    double s8 = 0.0;
    PairMeans means;
};

/// Evaluates a time-dependent deterministic model against a measurement
/// schedule on [t_begin, t_end): factual means come from the intervals where
/// each pair was set, counterfactual means from the rest.
TimeSlicedResult time_sliced_model_chsh(const LambdaModel& m, const SettingSignal& a_schedule,
                                        const SettingSignal& b_schedule,
                                        const StrategySchedule& lambda, double t_begin,
                                        double t_end);

/// Strategy schedule that, in each quarter of a block schedule over [0, total],
/// switches to the first strategy (by enumeration) answering that quarter's
/// pair with the sign that maximizes S. Indexes into all_strategies().
StrategySchedule lockstep_strategy_schedule(double total);

/// Uniform weights over all_strategies().
LambdaModel all_strategies_model();

/// Human-readable enumeration table, one strategy per line.
std::string enumeration_table();

}  // namespace bellhda
