#include "causet/schwartz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace causet {

namespace {

struct StencilTerm {
    int offset;
    double coefficient;
};

struct Stencil {
    std::span<const StencilTerm> terms;
    int radius;
    double scale;  // divide by scale * h^order
};

// 4th-order-accurate central differences.
constexpr std::array<StencilTerm, 4> kD1{{{-2, 1}, {-1, -8}, {1, 8}, {2, -1}}};
constexpr std::array<StencilTerm, 5> kD2{{{-2, -1}, {-1, 16}, {0, -30}, {1, 16}, {2, -1}}};
constexpr std::array<StencilTerm, 6> kD3{{{-3, -1}, {-2, 8}, {-1, -13}, {1, 13}, {2, -8}, {3, 1}}};
constexpr std::array<StencilTerm, 7> kD4{
    {{-3, -1}, {-2, 12}, {-1, -39}, {0, 56}, {1, -39}, {2, 12}, {3, -1}}};

Stencil stencil_for(unsigned beta) {
    switch (beta) {
        case 1: return {kD1, 2, 12.0};
        case 2: return {kD2, 2, 12.0};
        case 3: return {kD3, 3, 8.0};
        case 4: return {kD4, 3, 6.0};
        default: throw std::invalid_argument("seminorm: unsupported derivative order");
    }
}

double int_pow(double x, unsigned p) {
    double r = 1.0;
    for (unsigned i = 0; i < p; ++i) r *= x;
    return r;
}

// Max of the cubic through samples at unit-spaced nodes {-1, 0, 1, 2}
// relative to `base`, restricted to u in (ulo, uhi). The bracket endpoints
// are grid nodes, so only interior stationary points can beat the grid max.
double cubic_peak(const std::vector<double>& mag, std::size_t base, double ulo, double uhi) {
    const double ym = mag[base - 1];
    const double y0 = mag[base];
    const double y1 = mag[base + 1];
    const double y2 = mag[base + 2];
    const double d1 = y0 - ym;
    const double d2 = y1 - 2.0 * y0 + ym;
    const double d3 = y2 - 3.0 * y1 + 3.0 * y0 - ym;
    // p(u) = y0 + B u + C u^2 + D u^3
    const double B = d1 + 0.5 * d2 - d3 / 6.0;
    const double C = 0.5 * d2;
    const double D = d3 / 6.0;

    const auto value = [&](double u) { return y0 + u * (B + u * (C + u * D)); };

    double best = 0.0;
    const double tiny = 1e-14 * (std::abs(B) + std::abs(C) + std::abs(D));
    if (std::abs(D) <= tiny) {
        if (C != 0.0) {
            const double u = -B / (2.0 * C);
            if (u > ulo && u < uhi) best = std::max(best, value(u));
        }
    } else {
        const double disc = 4.0 * C * C - 12.0 * D * B;
        if (disc >= 0.0) {
            const double root = std::sqrt(disc);
            for (double u : {(-2.0 * C + root) / (6.0 * D), (-2.0 * C - root) / (6.0 * D)}) {
                if (u > ulo && u < uhi) best = std::max(best, value(u));
            }
        }
    }
    return best;
}

// Composite Simpson; an odd interval count ends with the 3/8 rule.
double integrate(const std::vector<double>& y, double h) {
    const std::size_t m = y.size() - 1;
    if (m == 0) return 0.0;
    if (m == 1) return 0.5 * h * (y[0] + y[1]);

    double total = 0.0;
    std::size_t simpson_end = m;  // intervals covered by plain Simpson
    if (m % 2 != 0) {
        if (m < 3) return 0.5 * h * (y[0] + y[1]);  // unreachable for m >= 2
        simpson_end = m - 3;
        total += 3.0 * h / 8.0 *
                 (y[m - 3] + 3.0 * y[m - 2] + 3.0 * y[m - 1] + y[m]);
    }
    if (simpson_end > 0) {
        double acc = y[0] + y[simpson_end];
        for (std::size_t i = 1; i < simpson_end; i += 2) acc += 4.0 * y[i];
        for (std::size_t i = 2; i < simpson_end; i += 2) acc += 2.0 * y[i];
        total += h / 3.0 * acc;
    }
    return total;
}

}  // namespace

TestFunction::TestFunction(double half_width, std::vector<std::complex<double>> values)
    : half_width_(half_width), values_(std::move(values)) {
    if (!(half_width_ > 0.0) || !std::isfinite(half_width_)) {
        throw std::invalid_argument("TestFunction: half-width must be positive and finite");
    }
    if (values_.size() < 2) {
        throw std::invalid_argument("TestFunction: need at least two samples");
    }
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("TestFunction: samples must be finite");
        }
    }
    spacing_ = 2.0 * half_width_ / static_cast<double>(values_.size() - 1);
}

TestFunction TestFunction::sampled(const std::function<std::complex<double>(double)>& f,
                                   double half_width, double spacing) {
    if (!(spacing > 0.0) || !(half_width > 0.0)) {
        throw std::invalid_argument("TestFunction::sampled: grid parameters must be positive");
    }
    const auto intervals = static_cast<std::size_t>(std::llround(2.0 * half_width / spacing));
    if (intervals < 1) throw std::invalid_argument("TestFunction::sampled: spacing too wide");
    const double h = 2.0 * half_width / static_cast<double>(intervals);
    std::vector<std::complex<double>> values(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        values[i] = f(-half_width + static_cast<double>(i) * h);
    }
    return TestFunction(half_width, std::move(values));
}

TestFunction TestFunction::gaussian(double center, double width, double half_width,
                                    double spacing) {
    if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(center)) {
        throw std::invalid_argument("TestFunction::gaussian: bad center/width");
    }
    return sampled(
        [=](double x) {
            const double z = (x - center) / width;
            return std::complex<double>(std::exp(-z * z), 0.0);
        },
        half_width, spacing);
}

double TestFunction::max_magnitude() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool TestFunction::rapidly_decaying() const {
    const double peak = max_magnitude();
    const double boundary = std::max(std::abs(values_.front()), std::abs(values_.back()));
    return boundary <= 1e-10 * peak;
}

bool TestFunction::same_grid(const TestFunction& other) const {
    return half_width_ == other.half_width_ && values_.size() == other.values_.size();
}

double seminorm(const TestFunction& f, SeminormIndex idx) {
    if (idx.alpha > 4 || idx.beta > 4) {
        throw std::invalid_argument("seminorm: alpha and beta must be <= 4");
    }
    const std::size_t n = f.size();
    const double h = f.spacing();
    const auto samples = f.values();

    std::size_t radius = 0;
    std::vector<std::complex<double>> derived;
    if (idx.beta == 0) {
        derived.assign(samples.begin(), samples.end());
    } else {
        const Stencil st = stencil_for(idx.beta);
        radius = static_cast<std::size_t>(st.radius);
        if (n < 2 * radius + 2) throw std::invalid_argument("seminorm: grid too coarse for stencil");
        derived.assign(n, {0.0, 0.0});
        const double denom = st.scale * int_pow(h, idx.beta);
        for (std::size_t i = radius; i + radius < n; ++i) {
            std::complex<double> acc{0.0, 0.0};
            for (const StencilTerm& term : st.terms) {
                acc += term.coefficient *
                       samples[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + term.offset)];
            }
            derived[i] = acc / denom;
        }
    }

    const std::size_t lo = radius;
    const std::size_t hi = n - 1 - radius;
    std::vector<double> mag(n, 0.0);
    double grid_max = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
        mag[i] = std::abs(int_pow(f.x(i), idx.alpha) * derived[i]);
        grid_max = std::max(grid_max, mag[i]);
    }
    if (grid_max == 0.0) return 0.0;

    // sharpen each interior peak with local cubics through 4 samples,
    // fitted on both sides of the peak
    double best = grid_max;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        const bool peak = mag[i] >= mag[i - 1] && mag[i] >= mag[i + 1] &&
                          (mag[i] > mag[i - 1] || mag[i] > mag[i + 1]);
        if (!peak) continue;
        if (i >= lo + 1 && i + 2 <= hi) {
            best = std::max(best, cubic_peak(mag, i, -1.0, 1.0));
        }
        if (i >= lo + 2 && i + 1 <= hi) {
            best = std::max(best, cubic_peak(mag, i - 1, 0.0, 2.0));
        }
    }
    return best;
}

double expectation(const TestFunction& f) {
    const std::size_t n = f.size();
    std::vector<double> density(n);
    std::vector<double> weighted(n);
    for (std::size_t i = 0; i < n; ++i) {
        density[i] = std::norm(f.values()[i]);
        weighted[i] = f.x(i) * density[i];
    }
    const double norm_sq = integrate(density, f.spacing());
    if (!(norm_sq > 1e-30)) {
        throw std::domain_error("expectation undefined on zero vector");
    }
    return integrate(weighted, f.spacing()) / norm_sq;
}

bool in_preimage(const TestFunction& f, OpenWindow window) {
    if (!(window.lo < window.hi)) throw std::invalid_argument("in_preimage: window must have lo < hi");
    const double q = expectation(f);
    return window.lo < q && q < window.hi;
}

TestFunction superpose(std::span<const TestFunction> fs,
                       std::span<const std::complex<double>> coefficients) {
    if (fs.empty() || fs.size() != coefficients.size()) {
        throw std::invalid_argument("superpose: need matching non-empty functions and coefficients");
    }
    for (const TestFunction& f : fs) {
        if (!f.same_grid(fs.front())) throw std::invalid_argument("superpose: grid mismatch");
    }
    std::vector<std::complex<double>> combined(fs.front().size(), {0.0, 0.0});
    for (std::size_t k = 0; k < fs.size(); ++k) {
        const auto vals = fs[k].values();
        for (std::size_t i = 0; i < combined.size(); ++i) combined[i] += coefficients[k] * vals[i];
    }
    return TestFunction(fs.front().half_width(), std::move(combined));
}

}
