#include "causet/svg.hpp"

#include <cstdio>
#include <numbers>

namespace causet::svg {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 48.0;
constexpr double kRadius = 1.6;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string diamond_scatter(const Sprinkle& sprinkle) {
    const double half = sprinkle.config.edge * std::numbers::sqrt2 / 2.0;
    const double scale = (kCanvas - 2.0 * kMargin) / (2.0 * half);
    const auto sx = [&](double x) { return kMargin + (x + half) * scale; };
    const auto sy = [&](double t) { return kMargin + (half - t) * scale; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\"/>\n";

    // axes through the origin
    out += "  <line x1=\"" + fmt(sx(-half)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" +
           fmt(sx(half)) + "\" y2=\"" + fmt(sy(0)) + "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    out += "  <line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(-half)) + "\" x2=\"" + fmt(sx(0)) +
           "\" y2=\"" + fmt(sy(half)) + "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    out += "  <text x=\"" + fmt(sx(half) + 6) + "\" y=\"" + fmt(sy(0) + 4) +
           "\" font-size=\"14\">x</text>\n";
    out += "  <text x=\"" + fmt(sx(0) - 4) + "\" y=\"" + fmt(sy(half) - 8) +
           "\" font-size=\"14\">t</text>\n";

    // diamond outline
    out += "  <polygon points=\"";
    out += fmt(sx(0)) + "," + fmt(sy(half)) + " ";
    out += fmt(sx(half)) + "," + fmt(sy(0)) + " ";
    out += fmt(sx(0)) + "," + fmt(sy(-half)) + " ";
    out += fmt(sx(-half)) + "," + fmt(sy(0));
    out += "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";

    for (const Event& e : sprinkle.events) {
        out += "  <circle cx=\"" + fmt(sx(e.x)) + "\" cy=\"" + fmt(sy(e.t)) + "\" r=\"" +
               fmt(kRadius) + "\" fill=\"#1660a8\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}
