#include "ssg/permutation.hpp"

#include <numeric>

#include "ssg/errors.hpp"

namespace ssg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p])
      throw DefinitionError("not a permutation: images must be a bijection");
    seen[p] = true;
  }
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t point : cycle) {
      if (point < 1 || point > degree)
        throw DefinitionError("cycle point " + std::to_string(point) +
                              " out of range 1.." + std::to_string(degree));
      if (used[point - 1])
        throw DefinitionError("point " + std::to_string(point) +
                              " repeated in cycle notation (non-bijective permutation)");
      used[point - 1] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      result.images_[cycle[k] - 1] = static_cast<Point>(cycle[(k + 1) % cycle.size()] - 1);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, std::uint64_t{c.size()});
  return result;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p + 1);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation perm_compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree())
    throw DegreeMismatch("perm_compose: degrees " + std::to_string(s.degree()) + " and " +
                         std::to_string(t.degree()));
  std::vector<Permutation::Point> images(s.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = s(t(static_cast<Permutation::Point>(i)));
  return Permutation::from_images(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace ssg
