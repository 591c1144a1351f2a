#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace hornkit {

// Bounds for brute-force subroutines (subset scans, quasiclosure).
struct Limits {
  std::size_t max_exhaustive = 20;

  // HORNKIT_MAX_EXHAUSTIVE, when set to a positive integer, replaces the default.
  static Limits from_env() {
    Limits l;
    if (const char* v = std::getenv("HORNKIT_MAX_EXHAUSTIVE")) {
      try {
        long n = std::stol(v);
        if (n > 0) l.max_exhaustive = static_cast<std::size_t>(n);
      } catch (...) {
      }
    }
    return l;
  }
};

}  // namespace hornkit
