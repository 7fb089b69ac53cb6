#pragma once

namespace bellhda {

/// Joint outcome probabilities of one coincidence, order (++, +-, -+, --).
struct OutcomeProbs {
    double pp = 0.0;
    double pm = 0.0;
    double mp = 0.0;
    double mm = 0.0;
};

struct Outcome {
    int a_result = 1;  // +1 transmitted, -1 reflected
    int b_result = 1;

    int product() const { return a_result * b_result; }
};

/// Coincidence probability of both photons passing, for pairs polarized
/// parallel or orthogonal to alpha with equal weight.
double p_plus_plus(double a, double b, double alpha);

OutcomeProbs outcome_probs(double a, double b, double alpha);

/// Expected AB product, 4*P++ - 1 = cos(2(a-alpha)) * cos(2(b-alpha)).
double conditional_E(double a, double b, double alpha);

/// Inverse-CDF sampling in the fixed order ++, +-, -+, --. `draw` in [0, 1).
Outcome sample_outcome(const OutcomeProbs& probs, double draw);

}  // namespace bellhda
