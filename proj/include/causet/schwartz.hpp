#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace causet {

inline constexpr double default_half_width = 10.0;
inline constexpr double default_spacing = 1.0 / 256.0;

/// A rapidly decaying function sampled on a uniform grid over [-R, R].
/// Grid point i sits at x_i = -R + i*h with h = 2R/(samples-1).
class TestFunction {
public:
    TestFunction(double half_width, std::vector<std::complex<double>> values);

    static TestFunction sampled(const std::function<std::complex<double>(double)>& f,
                                double half_width = default_half_width,
                                double spacing = default_spacing);
    /// exp(-((x-center)/width)^2)
    static TestFunction gaussian(double center, double width = 1.0,
                                 double half_width = default_half_width,
                                 double spacing = default_spacing);

    double half_width() const { return half_width_; }
    double spacing() const { return spacing_; }
    std::size_t size() const { return values_.size(); }
    double x(std::size_t i) const { return -half_width_ + static_cast<double>(i) * spacing_; }
    std::span<const std::complex<double>> values() const { return values_; }

    double max_magnitude() const;
    /// Boundary samples below 1e-10 of the peak (the rapid-decay proxy).
    bool rapidly_decaying() const;
    bool same_grid(const TestFunction& other) const;

private:
    double half_width_;
    double spacing_;
    std::vector<std::complex<double>> values_;
};

/// Seminorm index: |x^alpha * (d/dx)^beta f|. Finite differences support
/// derivative orders up to 4.
struct SeminormIndex {
    unsigned alpha = 0;
    unsigned beta = 0;
};

struct OpenWindow {
    double lo = 0.0;
    double hi = 0.0;
};

/// sup over the grid of |x^alpha D_beta f(x)|, with D_beta a 4th-order
/// central difference and the peak sharpened by a local cubic fit through
/// the four samples around each grid maximum. Zero iff the sampled
/// magnitudes all vanish. Throws std::invalid_argument for alpha or beta
/// above 4 or a grid too coarse for the stencil.
double seminorm(const TestFunction& f, SeminormIndex idx);

/// Position expectation value int x|f|^2 dx / int |f|^2 dx by composite
/// Simpson quadrature. Throws std::domain_error when ||f||^2 <= 1e-30.
double expectation(const TestFunction& f);

/// True iff expectation(f) lies strictly inside the open window.
bool in_preimage(const TestFunction& f, OpenWindow window);

/// Pointwise linear combination; all functions must share one grid.
TestFunction superpose(std::span<const TestFunction> fs,
                       std::span<const std::complex<double>> coefficients);

}
