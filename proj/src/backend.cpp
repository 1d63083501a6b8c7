#include "twofold/backend.hpp"

#include <atomic>
#include <cfenv>
#include <stdexcept>

namespace twofold {

namespace {

std::atomic<Backend> g_backend{kDefaultBackend};

}  // namespace

Backend active_backend() noexcept {
  return g_backend.load(std::memory_order_relaxed);
}

void set_backend(Backend backend) {
  if (backend == Backend::fma && !kFmaCompiled) {
    throw std::invalid_argument("fma backend not compiled into this build");
  }
  g_backend.store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) noexcept {
  return backend == Backend::fma ? "fma" : "dv";
}

std::optional<Backend> parse_backend(std::string_view name) noexcept {
  if (name == "fma") return Backend::fma;
  if (name == "dv") return Backend::dekker_veltkamp;
  return std::nullopt;
}

void ensure_round_to_nearest() {
  if (std::fegetround() != FE_TONEAREST) {
    throw std::runtime_error(
        "twofold: rounding mode must be round-to-nearest-even");
  }
}

}  // namespace twofold
