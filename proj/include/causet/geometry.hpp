#pragma once

#include <cmath>

namespace causet {

/// A spacetime event in (1+1)-dimensional Minkowski coordinates, c = 1.
struct Event {
    double t = 0.0;
    double x = 0.0;

    friend bool operator==(const Event&, const Event&) = default;
};

/// The same event in lightcone (null) coordinates:
/// u_minus = (t - x)/sqrt(2), u_plus = (x + t)/sqrt(2).
struct LightconePoint {
    double u_minus = 0.0;
    double u_plus = 0.0;

    friend bool operator==(const LightconePoint&, const LightconePoint&) = default;
};

enum class IntervalClass {
    FutureTimelike,
    PastTimelike,
    FutureLightlike,
    PastLightlike,
    Spacelike,
    Coincident,
};

/// Absolute tolerance on dt^2 - dx^2 for calling a pair lightlike.
inline constexpr double lightcone_tolerance = 1e-12;

bool is_finite(const Event& e);

LightconePoint to_lightcone(const Event& e);
Event from_lightcone(const LightconePoint& p);

/// ds^2 = -(t2-t1)^2 + (x2-x1)^2.
double interval_squared(const Event& e1, const Event& e2);

IntervalClass classify_interval(const Event& e1, const Event& e2);
IntervalClass time_reverse(IntervalClass c);
const char* to_string(IntervalClass c);

/// Causal precedence: e1 is in the causal past of e2 (lightlike included).
/// Equivalent to both lightcone coordinates being non-decreasing.
bool precedes(const Event& e1, const Event& e2);

/// Lorentz boost with velocity beta. Throws std::domain_error for |beta| >= 1.
Event boost(const Event& e, double beta);

/// Canonical order: ascending t, ties broken by ascending x.
inline bool event_less(const Event& a, const Event& b) {
    return a.t < b.t || (a.t == b.t && a.x < b.x);
}

}
