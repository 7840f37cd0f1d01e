#include "ssg/wreath.hpp"

#include <string>

#include "ssg/errors.hpp"

namespace ssg {

WreathElement WreathElement::identity(std::size_t degree) {
  return WreathElement{std::vector<Word>(degree), Permutation(degree)};
}

WreathElement wreath_multiply(const WreathElement& u, const WreathElement& v) {
  if (u.degree() != v.degree())
    throw DegreeMismatch("wreath_multiply: degrees " + std::to_string(u.degree()) + " and " +
                         std::to_string(v.degree()));
  WreathElement result;
  result.perm = perm_compose(u.perm, v.perm);
  result.sections.reserve(v.degree());
  for (std::size_t i = 0; i < v.degree(); ++i)
    result.sections.push_back(u.sections[v.perm(static_cast<Permutation::Point>(i))] *
                              v.sections[i]);
  return result;
}

WreathElement wreath_invert(const WreathElement& u) {
  WreathElement result;
  result.perm = u.perm.inverse();
  result.sections.reserve(u.degree());
  for (std::size_t j = 0; j < u.degree(); ++j)
    result.sections.push_back(
        u.sections[result.perm(static_cast<Permutation::Point>(j))].inverse());
  return result;
}

}  // namespace ssg
