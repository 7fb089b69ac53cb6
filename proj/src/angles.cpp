#include "bellhda/angles.hpp"

#include <cmath>

#include "bellhda/errors.hpp"

namespace bellhda {

namespace {

// Reduces x into [lo, lo + period); the final corrections absorb rounding in
// the floor quotient near the interval edges.
double reduce(double x, double lo, double period, const char* who) {
    if (!std::isfinite(x)) {
        throw InvalidArgument(std::string(who) + ": non-finite angle");
    }
    double r = x - period * std::floor((x - lo) / period);
    if (r >= lo + period) r -= period;
    if (r < lo) r += period;
    return r;
}

}  // namespace

double wrap_diff(double x) { return reduce(x, -kPi / 4, kPi / 2, "wrap_diff"); }

double wrap_report(double x) { return reduce(x, -kPi / 4, 3 * kPi / 4, "wrap_report"); }

std::array<SettingPair, kNumPairs> chsh_pairs(const ChshSettings& s) {
    return {{{s.a0, s.b0}, {s.a0, s.b1}, {s.a1, s.b0}, {s.a1, s.b1}}};
}

}  // namespace bellhda
