#pragma once

#include <optional>
#include <string_view>

#include "twofold/twofold.hpp"

namespace twofold {

// Process-wide backend used by the public exp/log surface. Defaults to the
// fused backend when it was compiled in.
Backend active_backend() noexcept;

// Throws std::invalid_argument when asked for Backend::fma in a build
// without it.
void set_backend(Backend backend);

std::string_view backend_name(Backend backend) noexcept;
std::optional<Backend> parse_backend(std::string_view name) noexcept;

// Throws std::runtime_error unless the floating-point environment rounds
// to nearest-even.
void ensure_round_to_nearest();

}  // namespace twofold
