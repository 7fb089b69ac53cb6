#include "bellhda/lr_oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <sstream>

#include "bellhda/errors.hpp"

namespace bellhda {

PairValues DeterministicStrategy::correlations() const {
    PairValues e;
    for (int p = 0; p < kNumPairs; ++p) e[p] = ab(p);
    return e;
}

std::array<DeterministicStrategy, kNumStrategies> all_strategies() {
    std::array<DeterministicStrategy, kNumStrategies> out;
    for (std::size_t k = 0; k < kNumStrategies; ++k) {
        auto bit = [k](int i) { return (k >> i) & 1U ? -1 : 1; };
        out[k].a_map = {bit(0), bit(1)};
        out[k].b_map = {bit(2), bit(3)};
    }
    return out;
}

double strategy_chsh(const DeterministicStrategy& s) { return s_chsh(s.correlations()); }

void LambdaModel::validate() const {
    if (strategies.empty() || strategies.size() != weights.size()) {
        throw InvalidArgument("LambdaModel: need one weight per strategy");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw InvalidArgument("LambdaModel: negative or NaN weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw InvalidArgument("LambdaModel: weights must sum to 1");
    }
}

PairValues model_correlations(const LambdaModel& m) {
    m.validate();
    PairValues e{};
    for (std::size_t k = 0; k < m.strategies.size(); ++k) {
        for (int p = 0; p < kNumPairs; ++p) e[p] += m.weights[k] * m.strategies[k].ab(p);
    }
    return e;
}

double model_chsh(const LambdaModel& m) { return s_chsh(model_correlations(m)); }

LambdaModel random_mixture(Rng& rng) {
    std::array<double, kNumStrategies + 1> cuts;
    cuts.front() = 0.0;
    cuts.back() = 1.0;
    for (std::size_t k = 1; k < kNumStrategies; ++k) cuts[k] = uniform01(rng);
    std::sort(cuts.begin() + 1, cuts.end() - 1);

    LambdaModel m;
    const auto strategies = all_strategies();
    m.strategies.assign(strategies.begin(), strategies.end());
    m.weights.resize(kNumStrategies);
    for (std::size_t k = 0; k < kNumStrategies; ++k) m.weights[k] = cuts[k + 1] - cuts[k];
    return m;
}

TimeSlicedResult time_sliced_model_chsh(const LambdaModel& m, const SettingSignal& a_schedule,
                                        const SettingSignal& b_schedule,
                                        const StrategySchedule& lambda, double t_begin,
                                        double t_end) {
    if (!(t_end > t_begin)) throw InvalidArgument("time_sliced_model_chsh: empty interval");
    if (lambda.breakpoints.empty() || lambda.breakpoints.size() != lambda.strategy.size()) {
        throw InvalidArgument("time_sliced_model_chsh: malformed strategy schedule");
    }
    for (std::size_t s : lambda.strategy) {
        if (s >= m.strategies.size()) {
            throw InvalidArgument("time_sliced_model_chsh: strategy index outside the model");
        }
    }

    std::vector<double> cuts{t_begin, t_end};
    for (const auto* bps : {&a_schedule.breakpoints(), &b_schedule.breakpoints(),
                            &lambda.breakpoints}) {
        for (double t : *bps) {
            if (t > t_begin && t < t_end) cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    PairLedger ledger;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double t = cuts[k];
        const double width = cuts[k + 1] - t;
        const int actual = pair_index(a_schedule.level_at(t), b_schedule.level_at(t));
        auto it = std::upper_bound(lambda.breakpoints.begin(), lambda.breakpoints.end(), t);
        const std::size_t seg =
            it == lambda.breakpoints.begin() ? 0 : static_cast<std::size_t>(it - lambda.breakpoints.begin()) - 1;
        const DeterministicStrategy& s = m.strategies[lambda.strategy[seg]];
        for (int p = 0; p < kNumPairs; ++p) {
            ledger.accumulate(p, p == actual ? Channel::factual : Channel::counterfactual,
                              s.ab(p), width);
        }
    }

    TimeSlicedResult out;
    out.means = pair_means(ledger);
    out.s_eq1 = s_chsh(out.means.factual);
    out.s8 = s8(out.means.factual, triple_interval(out.means.counterfactual));
    return out;
}

StrategySchedule lockstep_strategy_schedule(double total) {
    // Signs of the pair terms inside S: +E00 -E01 +E10 +E11.
    constexpr std::array<int, kNumPairs> wanted{+1, -1, +1, +1};
    const auto strategies = all_strategies();
    StrategySchedule out;
    for (int q = 0; q < kNumPairs; ++q) {
        std::size_t best = 0;
        for (std::size_t k = 0; k < kNumStrategies; ++k) {
            if (strategies[k].ab(q) * wanted[q] > strategies[best].ab(q) * wanted[q]) best = k;
        }
        out.breakpoints.push_back(total * q / kNumPairs);
        out.strategy.push_back(best);
    }
    return out;
}

LambdaModel all_strategies_model() {
    LambdaModel m;
    const auto strategies = all_strategies();
    m.strategies.assign(strategies.begin(), strategies.end());
    m.weights.assign(kNumStrategies, 1.0 / kNumStrategies);
    return m;
}

std::string enumeration_table() {
    std::ostringstream os;
    os << "index  A(a0) A(a1) B(b0) B(b1)  E00 E01 E10 E11  S\n";
    const auto strategies = all_strategies();
    double best = 0.0;
    for (std::size_t k = 0; k < kNumStrategies; ++k) {
        const auto& s = strategies[k];
        const PairValues e = s.correlations();
        const double value = strategy_chsh(s);
        best = std::max(best, value);
        char line[96];
        std::snprintf(line, sizeof line, "%5zu  %+5d %+5d %+5d %+5d  %+3.0f %+3.0f %+3.0f %+3.0f  %.0f\n", k,
                      s.a_map[0], s.a_map[1], s.b_map[0], s.b_map[1], e[0], e[1], e[2], e[3], value);
        os << line;
    }
    os << "max S = " << best << '\n';
    return os.str();
}

}  // namespace bellhda
