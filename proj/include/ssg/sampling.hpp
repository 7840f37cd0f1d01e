#pragma once

#include <cstdint>
#include <random>

#include "ssg/word.hpp"

namespace ssg {

/// Platform-independent draws (std distributions are implementation-defined).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Length uniform in [min_length, max_length], letters uniform over the
  /// generators (and their inverses when allowed).
  Word word(std::size_t generators, std::size_t min_length, std::size_t max_length,
            bool inverses = true);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ssg
