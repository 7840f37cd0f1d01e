#pragma once

#include <cstddef>
#include <vector>

#include "ssg/permutation.hpp"
#include "ssg/word.hpp"

namespace ssg {

/// <w_1, ..., w_d> perm: an element of the permutational wreath product.
struct WreathElement {
  std::vector<Word> sections;
  Permutation perm;

  static WreathElement identity(std::size_t degree);
  std::size_t degree() const { return perm.degree(); }

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Left action, right factor first: perm = u.perm o v.perm and entry i is
/// u.sections[v.perm(i)] * v.sections[i]. Throws DegreeMismatch.
WreathElement wreath_multiply(const WreathElement& u, const WreathElement& v);

/// Sections are formally inverted; entry j is u.sections[u.perm^-1(j)]^-1.
WreathElement wreath_invert(const WreathElement& u);

}  // namespace ssg
