#pragma once

#include <span>
#include <vector>

#include "causet/geometry.hpp"

namespace causet {

/// Radar light-flash exchange between a resting and a moving observer.
///
/// A flash leaves the home worldline at time T, meets the moving observer,
/// is reflected, and returns at time k^2 T. Everything here comes from line
/// intersections and the radar constructions built on them:
///   t1 = (T + return time)/2      time the home frame assigns to reception
///   t2 = sqrt(T * return time)    proper time of the moving clock there
struct FlashExchange {
    double emission_time = 0.0;  ///< T
    double speed = 0.0;          ///< v
    double light_speed = 1.0;    ///< c
    Event emission;              ///< (T, 0)
    Event reception;             ///< flash meets the moving observer
    Event return_event;          ///< (k^2 T, 0)
    double t1 = 0.0;
    double t2 = 0.0;
    double k = 1.0;              ///< Bondi factor, sqrt(return/T)
};

/// Result of measuring a moving ruler of rest length L0.
struct RulerMeasurement {
    double rest_length = 0.0;  ///< L0
    double speed = 0.0;        ///< v
    double length = 0.0;       ///< L <= L0
};

/// Runs the flash exchange. Throws std::domain_error for v >= c and
/// std::invalid_argument for T <= 0, v < 0 or c <= 0.
FlashExchange simulate_flash(double T, double v, double c = 1.0);

/// t1/t2 of the exchange; equals 1/sqrt(1 - v^2/c^2).
double dilation_ratio(const FlashExchange& exchange);

/// L = L0 * sqrt(1 - v^2/c^2).
RulerMeasurement contracted_length(double L0, double v, double c = 1.0);

struct SweepRow {
    double beta = 0.0;
    double k = 1.0;
    double t1_over_t2 = 1.0;
    double gamma_closed_form = 1.0;
    double length_ratio = 1.0;  ///< L/L0
};

/// One row per beta: simulated k and t1/t2 next to the closed forms.
std::vector<SweepRow> relativity_sweep(std::span<const double> betas, double c = 1.0);

}
