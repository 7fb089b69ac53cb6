#pragma once

#include <string>
#include <vector>

#include "bellhda/scheduler.hpp"

namespace bellhda {

enum class ErrorWrap { half_pi, none };

struct TrackingParams {
    double gamma = 1.0;    // dimensionless tracking strength
    double tau = 1.0;      // delay; the simulation time unit
    ErrorWrap error_wrap = ErrorWrap::half_pi;
    int step_per_tau = 64;

    void validate() const;
    double step() const { return tau / step_per_tau; }
};

/// Hidden polarization angle sampled on a uniform grid t0 + k*h.
struct AlphaTrajectory {
    double t0 = 0.0;
    double h = 0.0;
    std::vector<double> samples;

    double time_at(std::size_t k) const { return t0 + static_cast<double>(k) * h; }
    double t_end() const { return time_at(samples.size() - 1); }
};

/// Fixed-step explicit Euler for
///     d alpha/dt = -(gamma/tau) * e(t),   e(t) = alpha(t - tau) - a(t),
/// with e wrapped into [-pi/4, pi/4) when params.error_wrap is half_pi.
/// alpha(t - tau) is read exactly on-grid from a ring buffer of step_per_tau
/// samples; alpha is alpha_history on [t_start - tau, t_start].
/// a(t) is evaluated right-continuously at each grid point. The trajectory
/// ends on the first grid point at or after t_end.
AlphaTrajectory integrate(const TrackingParams& params, const SettingSignal& a_signal,
                          double t_start, double t_end, double alpha_history);

/// Linear interpolation between grid samples.
double alpha_at(const AlphaTrajectory& traj, double t);

/// CSV with columns t_over_tau, alpha_raw, alpha_reported.
std::string trajectory_csv(const AlphaTrajectory& traj, double tau = 1.0);

}  // namespace bellhda
