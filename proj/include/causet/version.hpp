#pragma once

namespace causet {

inline constexpr const char* version = "0.1.0";

}
