#pragma once

#include <string>

#include "causet/sprinkle.hpp"

namespace causet::svg {

/// Square scatter plot of a sprinkle: x horizontal, t vertical (up), the
/// diamond outline drawn, one circle per event. Canvas 640x640, margin 48,
/// point radius 1.6.
std::string diamond_scatter(const Sprinkle& sprinkle);

}
