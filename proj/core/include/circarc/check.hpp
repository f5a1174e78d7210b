#pragma once

#include <string>
#include <utility>

namespace circarc {

// Outcome of a verifier: either success or a human-readable reason.
struct Check {
  bool ok = true;
  std::string reason;

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return ok; }
};

}  // namespace circarc
