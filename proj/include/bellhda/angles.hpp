#pragma once

#include <array>
#include <numbers>

namespace bellhda {

inline constexpr double kPi = std::numbers::pi;

/// Reduces x modulo pi/2 into [-pi/4, pi/4). This is the period of the
/// two-photon mixture in its hidden angle, so it is the one used by dynamics.
double wrap_diff(double x);

/// Reduces x modulo 3*pi/4 into [-pi/4, pi/2). Display only.
double wrap_report(double x);

struct SettingPair {
    double a = 0.0;
    double b = 0.0;
};

/// Analyzer angles of both stations. Pair index p = 2*i + j selects (a_i, b_j).
struct ChshSettings {
    double a0 = 0.0;
    double a1 = kPi / 4;
    double b0 = kPi / 8;
    double b1 = 3 * kPi / 8;

    double a(int i) const { return i == 0 ? a0 : a1; }
    double b(int j) const { return j == 0 ? b0 : b1; }
};

inline constexpr int kNumPairs = 4;

inline constexpr int pair_index(int a_level, int b_level) { return 2 * a_level + b_level; }

/// (a0,b0), (a0,b1), (a1,b0), (a1,b1).
std::array<SettingPair, kNumPairs> chsh_pairs(const ChshSettings& settings);

}  // namespace bellhda
