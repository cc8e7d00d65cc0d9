#pragma once

#include <string_view>

#ifndef PENTA_VERSION
#define PENTA_VERSION "0.1.0"
#endif

namespace penta {
inline constexpr std::string_view kVersion = PENTA_VERSION;
}
