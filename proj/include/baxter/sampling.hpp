#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "baxter/scalar.hpp"

namespace baxter {

/// Deterministic per-cell seed: master seed mixed with the cell key
/// (family, check, trial). Independent of execution order.
std::uint64_t cell_seed(std::uint64_t master, std::string_view family, std::string_view check,
                        std::uint64_t trial);

/// Seeded source of small rationals: numerator in [-9, 9] \ {0},
/// denominator in [1, 9].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : eng_(seed) {}

  Scalar small_rational();
  /// Draws until pred accepts, up to a bounded number of rejections.
  template <typename Pred>
  Scalar small_rational_where(Pred pred) {
    for (int tries = 0; tries < 1000; ++tries) {
      Scalar s = small_rational();
      if (pred(s)) return s;
    }
    throw std::runtime_error("rational sampler: rejection bound exceeded");
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace baxter
