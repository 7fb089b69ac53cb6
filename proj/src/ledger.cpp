#include "bellhda/ledger.hpp"

#include <cmath>
#include <sstream>

#include "bellhda/csv.hpp"
#include "bellhda/errors.hpp"

namespace bellhda {

void CoincidenceCounts::add(const Outcome& o) {
    if (o.a_result > 0) {
        (o.b_result > 0 ? pp : pm) += 1;
    } else {
        (o.b_result > 0 ? mp : mm) += 1;
    }
}

double expectation_from_counts(const CoincidenceCounts& c) {
    const std::uint64_t total = c.total();
    if (total == 0) throw EmptyCounts("expectation_from_counts: no coincidences");
    const double same = static_cast<double>(c.pp + c.mm);
    const double diff = static_cast<double>(c.pm + c.mp);
    return (same - diff) / static_cast<double>(total);
}

namespace {

void check_pair(int pair) {
    if (pair < 0 || pair >= kNumPairs) {
        throw InvalidArgument("PairLedger: pair index " + std::to_string(pair) + " out of range");
    }
}

}  // namespace

PairLedger::Totals& PairLedger::slot(int pair, Channel channel) {
    check_pair(pair);
    return channel == Channel::factual ? factual_[pair] : counterfactual_[pair];
}

const PairLedger::Totals& PairLedger::totals(int pair, Channel channel) const {
    check_pair(pair);
    return channel == Channel::factual ? factual_[pair] : counterfactual_[pair];
}

void PairLedger::accumulate(int pair, Channel channel, double ab_value, double weight) {
    if (!(weight > 0.0)) throw InvalidArgument("PairLedger::accumulate: weight must be > 0");
    Totals& t = slot(pair, channel);
    t.sum += weight * ab_value;
    t.weight += weight;
}

void PairLedger::record(int pair, Channel channel, const Outcome& outcome) {
    accumulate(pair, channel, outcome.product(), 1.0);
    slot(pair, channel).counts.add(outcome);
}

bool PairMeans::any_cf_absent() const {
    for (bool present : cf_present) {
        if (!present) return true;
    }
    return false;
}

PairMeans pair_means(const PairLedger& ledger) {
    PairMeans out;
    for (int p = 0; p < kNumPairs; ++p) {
        const auto& f = ledger.totals(p, Channel::factual);
        if (!(f.weight > 0.0)) {
            throw InsufficientDwell("pair_means: pair " + std::to_string(p) +
                                        " has no factual dwell",
                                    p);
        }
        out.factual[p] = f.sum / f.weight;
        const auto& cf = ledger.totals(p, Channel::counterfactual);
        out.cf_present[p] = cf.weight > 0.0;
        out.counterfactual[p] = out.cf_present[p] ? cf.sum / cf.weight : 0.0;
    }
    return out;
}

double s_chsh(const PairValues& e) {
    return std::abs(e[0] - e[1]) + std::abs(e[2] + e[3]);
}

double s8(const PairValues& e, const PairValues& x) {
    return std::abs(e[0] + x[0] - e[1] - x[1]) + std::abs(e[3] + x[3] + e[2] + x[2]);
}

PairValues triple_interval(const PairValues& cf_means) {
    PairValues out;
    for (int p = 0; p < kNumPairs; ++p) out[p] = 3.0 * cf_means[p];
    return out;
}

double delta(const PairMeans& means) {
    double total = 0.0;
    for (int p = 0; p < kNumPairs; ++p) {
        if (!means.cf_present[p]) continue;
        const double f = means.factual[p];
        const double c = means.counterfactual[p];
        const double denom = std::abs(f) + std::abs(c);
        if (denom < kDeltaDenominatorFloor) continue;
        total += std::abs(f - c) / denom;
    }
    return total;
}

const char* to_string(Mode mode) { return mode == Mode::exact ? "exact" : "sampled"; }

void summarize(const PairLedger& ledger, Metrics& m) {
    const PairMeans means = pair_means(ledger);
    m.e = means.factual;
    m.e_cf = means.counterfactual;
    m.cf_absent = means.any_cf_absent();
    m.s_chsh = s_chsh(m.e);
    m.s8 = s8(m.e, triple_interval(m.e_cf));
    m.delta = delta(means);
    for (int p = 0; p < kNumPairs; ++p) {
        m.factual_counts[p] = ledger.totals(p, Channel::factual).counts.total();
    }
}

std::string metrics_csv_header() {
    return "mode,seed,gamma,mu_tau,duration_tau,E00,E01,E10,E11,Ecf00,Ecf01,Ecf10,Ecf11,"
           "s_chsh,s8,delta";
}

std::string metrics_csv_row(const Metrics& m) {
    std::ostringstream os;
    os << to_string(m.mode) << ',' << m.seed << ',' << format_real(m.gamma) << ','
       << format_real(m.mu_tau) << ',' << format_real(m.duration_tau);
    for (double v : m.e) os << ',' << format_real(v);
    for (double v : m.e_cf) os << ',' << format_real(v);
    os << ',' << format_real(m.s_chsh) << ',' << format_real(m.s8) << ','
       << format_real(m.delta);
    return os.str();
}

}  // namespace bellhda
