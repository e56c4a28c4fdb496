#include "causet/geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace causet {

namespace {
constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;
}

bool is_finite(const Event& e) {
    return std::isfinite(e.t) && std::isfinite(e.x);
}

LightconePoint to_lightcone(const Event& e) {
    return {(e.t - e.x) / std::numbers::sqrt2, (e.x + e.t) / std::numbers::sqrt2};
}

Event from_lightcone(const LightconePoint& p) {
    // 45-degree rotation of (u_minus, u_plus) back to (t, x).
    return {(p.u_minus + p.u_plus) * kHalfSqrt2, (p.u_plus - p.u_minus) * kHalfSqrt2};
}

double interval_squared(const Event& e1, const Event& e2) {
    const double dt = e2.t - e1.t;
    const double dx = e2.x - e1.x;
    return -dt * dt + dx * dx;
}

IntervalClass classify_interval(const Event& e1, const Event& e2) {
    const double dt = e2.t - e1.t;
    const double dx = e2.x - e1.x;
    if (dt == 0.0 && dx == 0.0) return IntervalClass::Coincident;
    const double s = dt * dt - dx * dx;
    if (s > lightcone_tolerance) {
        return dt > 0.0 ? IntervalClass::FutureTimelike : IntervalClass::PastTimelike;
    }
    if (s < -lightcone_tolerance) return IntervalClass::Spacelike;
    // On the lightcone within tolerance. A degenerate dt == 0 pair has no
    // time direction and is kept spacelike.
    if (dt > 0.0) return IntervalClass::FutureLightlike;
    if (dt < 0.0) return IntervalClass::PastLightlike;
    return IntervalClass::Spacelike;
}

IntervalClass time_reverse(IntervalClass c) {
    switch (c) {
        case IntervalClass::FutureTimelike: return IntervalClass::PastTimelike;
        case IntervalClass::PastTimelike: return IntervalClass::FutureTimelike;
        case IntervalClass::FutureLightlike: return IntervalClass::PastLightlike;
        case IntervalClass::PastLightlike: return IntervalClass::FutureLightlike;
        case IntervalClass::Spacelike: return IntervalClass::Spacelike;
        case IntervalClass::Coincident: return IntervalClass::Coincident;
    }
    return IntervalClass::Spacelike;
}

const char* to_string(IntervalClass c) {
    switch (c) {
        case IntervalClass::FutureTimelike: return "future-timelike";
        case IntervalClass::PastTimelike: return "past-timelike";
        case IntervalClass::FutureLightlike: return "future-lightlike";
        case IntervalClass::PastLightlike: return "past-lightlike";
        case IntervalClass::Spacelike: return "spacelike";
        case IntervalClass::Coincident: return "coincident";
    }
    return "spacelike";
}

bool precedes(const Event& e1, const Event& e2) {
    const IntervalClass c = classify_interval(e1, e2);
    return c == IntervalClass::FutureTimelike || c == IntervalClass::FutureLightlike;
}

Event boost(const Event& e, double beta) {
    if (!(std::abs(beta) < 1.0)) {
        throw std::domain_error("superluminal boost: |beta| must be < 1");
    }
    const double gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
    return {gamma * (e.t - beta * e.x), gamma * (e.x - beta * e.t)};
}

}
