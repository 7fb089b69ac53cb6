#include "bellhda/tracking.hpp"

#include <cmath>
#include <sstream>

#include "bellhda/angles.hpp"
#include "bellhda/csv.hpp"
#include "bellhda/errors.hpp"

namespace bellhda {

void TrackingParams::validate() const {
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        throw InvalidArgument("tracking: gamma must be finite and >= 0");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw InvalidArgument("tracking: tau must be finite and > 0");
    }
    if (step_per_tau < 8) {
        throw InvalidArgument("tracking: step_per_tau must be >= 8");
    }
}

AlphaTrajectory integrate(const TrackingParams& params, const SettingSignal& a_signal,
                          double t_start, double t_end, double alpha_history) {
    params.validate();
    if (!(t_end > t_start)) {
        throw InvalidArgument("integrate: t_end must exceed t_start");
    }
    if (!std::isfinite(alpha_history)) {
        throw InvalidArgument("integrate: alpha_history must be finite");
    }
    const double h = params.step();
    const auto steps = static_cast<std::size_t>(std::ceil((t_end - t_start) / h - 1e-9));
    // a(t) is read at t_start + k*h for k < steps, all below t_end; the last
    // sample lands on the first grid point at or after t_end.
    if (a_signal.domain_end() < t_end - 1e-9 * h) {
        throw OutOfDomain("integrate: setting signal ends at " +
                          std::to_string(a_signal.domain_end()) + ", integration needs " +
                          std::to_string(t_end));
    }

    AlphaTrajectory traj;
    traj.t0 = t_start;
    traj.h = h;
    traj.samples.resize(steps + 1);

    const std::size_t lag = static_cast<std::size_t>(params.step_per_tau);
    std::vector<double> delayed(lag, alpha_history);
    const double gain = params.gamma / params.tau * h;
    const bool wrap = params.error_wrap == ErrorWrap::half_pi;

    SignalCursor a(a_signal);
    double alpha = alpha_history;
    traj.samples[0] = alpha;
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = traj.time_at(k);
        double& slot = delayed[k % lag];
        double err = slot - a.value_at(t);
        if (wrap) err = wrap_diff(err);
        slot = alpha;
        alpha -= gain * err;
        if (!std::isfinite(alpha)) {
            throw NumericFailure("integrate: alpha became non-finite", traj.time_at(k + 1));
        }
        traj.samples[k + 1] = alpha;
    }
    return traj;
}

double alpha_at(const AlphaTrajectory& traj, double t) {
    const double span = traj.t_end() - traj.t0;
    const double x = (t - traj.t0) / traj.h;
    const double last = static_cast<double>(traj.samples.size() - 1);
    if (!(x >= -1e-9) || !(x <= last + 1e-9) || traj.samples.empty()) {
        throw OutOfDomain("alpha_at: t=" + std::to_string(t) + " outside [" +
                          std::to_string(traj.t0) + ", " + std::to_string(traj.t0 + span) + "]");
    }
    if (x <= 0.0) return traj.samples.front();
    if (x >= last) return traj.samples.back();
    const auto k = static_cast<std::size_t>(x);
    const double frac = x - static_cast<double>(k);
    if (frac == 0.0) return traj.samples[k];
    return traj.samples[k] + frac * (traj.samples[k + 1] - traj.samples[k]);
}

std::string trajectory_csv(const AlphaTrajectory& traj, double tau) {
    std::ostringstream os;
    os << "t_over_tau,alpha_raw,alpha_reported\n";
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const double alpha = traj.samples[k];
        os << format_real(traj.time_at(k) / tau) << ',' << format_real(alpha) << ','
           << format_real(wrap_report(alpha)) << '\n';
    }
    return os.str();
}

}  // namespace bellhda
