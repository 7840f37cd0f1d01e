#include "ssg/sampling.hpp"

#include <limits>

namespace ssg {

std::uint64_t Sampler::below(std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

Word Sampler::word(std::size_t generators, std::size_t min_length, std::size_t max_length,
                   bool inverses) {
  const std::size_t length = min_length + below(max_length - min_length + 1);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint64_t code = below(generators * (inverses ? 2 : 1));
    letters.push_back(inverses ? Letter{static_cast<std::uint32_t>(code / 2), code % 2 == 1}
                               : Letter{static_cast<std::uint32_t>(code), false});
  }
  return Word(std::move(letters));
}

}  // namespace ssg
