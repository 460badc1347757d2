#include "seaplan/risk.hpp"

namespace seaplan {

namespace {
constexpr double kDegenerateSpeed = 1e-6;  // m/s
}

double tcpa(const RelativeKinematics& rk) {
    const double v2 = rk.v_ab.norm_sq();
    if (v2 < kDegenerateSpeed * kDegenerateSpeed) return 0.0;
    return rk.p_ab.dot(rk.v_ab) / v2;
}

double dcpa(const RelativeKinematics& rk) {
    const double t = std::max(tcpa(rk), 0.0);
    return (rk.p_ab - rk.v_ab * t).norm();
}

bool is_active_threat(const RelativeKinematics& rk, const RiskThresholds& th) {
    if (rk.p_ab.norm() <= th.dcpa_max_m) return true;
    const double t = tcpa(rk);
    return t >= 0.0 && t <= th.tcpa_max_s && dcpa(rk) <= th.dcpa_max_m;
}

}  // namespace seaplan
