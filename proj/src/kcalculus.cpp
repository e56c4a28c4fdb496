#include "causet/kcalculus.hpp"

#include <cmath>
#include <stdexcept>

namespace causet {

namespace {

// worldline x = slope * t + intercept
struct Line {
    double slope;
    double intercept;
};

Event intersect(const Line& a, const Line& b) {
    const double t = (b.intercept - a.intercept) / (a.slope - b.slope);
    return {t, a.slope * t + a.intercept};
}

}  // namespace

FlashExchange simulate_flash(double T, double v, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("simulate_flash: c must be positive");
    if (v < 0.0) throw std::invalid_argument("simulate_flash: v must be non-negative");
    if (v >= c) throw std::domain_error("simulate_flash: superluminal observer (v >= c)");
    if (!(T > 0.0)) throw std::invalid_argument("simulate_flash: T must be positive");

    const Line outbound_flash{c, -c * T};  // x = c (t - T)
    const Line moving_observer{v, 0.0};    // x = v t
    const Line home{0.0, 0.0};             // x = 0

    FlashExchange ex;
    ex.emission_time = T;
    ex.speed = v;
    ex.light_speed = c;
    ex.emission = {T, 0.0};
    ex.reception = intersect(outbound_flash, moving_observer);

    const Line return_flash{-c, ex.reception.x + c * ex.reception.t};
    ex.return_event = intersect(return_flash, home);

    const double t_return = ex.return_event.t;
    ex.k = std::sqrt(t_return / T);
    ex.t1 = 0.5 * (T + t_return);       // foot of the radar mid-perpendicular
    ex.t2 = std::sqrt(T * t_return);    // radar proper time at reception
    return ex;
}

double dilation_ratio(const FlashExchange& exchange) {
    return exchange.t1 / exchange.t2;
}

RulerMeasurement contracted_length(double L0, double v, double c) {
    if (!(L0 > 0.0)) throw std::invalid_argument("contracted_length: L0 must be positive");
    if (!(c > 0.0)) throw std::invalid_argument("contracted_length: c must be positive");
    if (v < 0.0) throw std::invalid_argument("contracted_length: v must be non-negative");
    if (v >= c) throw std::domain_error("contracted_length: superluminal speed (v >= c)");
    const double beta = v / c;
    return {L0, v, L0 * std::sqrt((1.0 - beta) * (1.0 + beta))};
}

std::vector<SweepRow> relativity_sweep(std::span<const double> betas, double c) {
    std::vector<SweepRow> rows;
    rows.reserve(betas.size());
    for (double beta : betas) {
        SweepRow row;
        row.beta = beta;
        const FlashExchange ex = simulate_flash(1.0, beta * c, c);
        row.k = ex.k;
        row.t1_over_t2 = dilation_ratio(ex);
        row.gamma_closed_form = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
        row.length_ratio = contracted_length(1.0, beta * c, c).length;
        rows.push_back(row);
    }
    return rows;
}

}
