#include "bellhda/detection.hpp"

#include <cmath>

namespace bellhda {

double p_plus_plus(double a, double b, double alpha) {
    const double ca = std::cos(a - alpha), sa = std::sin(a - alpha);
    const double cb = std::cos(b - alpha), sb = std::sin(b - alpha);
    return 0.5 * (ca * ca * cb * cb + sa * sa * sb * sb);
}

OutcomeProbs outcome_probs(double a, double b, double alpha) {
    const double pp = p_plus_plus(a, b, alpha);
    const double pm = 0.5 - pp;
    return {pp, pm, pm, pp};
}

double conditional_E(double a, double b, double alpha) {
    return 4.0 * p_plus_plus(a, b, alpha) - 1.0;
}

Outcome sample_outcome(const OutcomeProbs& p, double draw) {
    double edge = p.pp;
    if (draw < edge) return {+1, +1};
    edge += p.pm;
    if (draw < edge) return {+1, -1};
    edge += p.mp;
    if (draw < edge) return {-1, +1};
    return {-1, -1};
}

}  // namespace bellhda
