#include "ssg/finite_groups.hpp"

#include <algorithm>
#include <numeric>

#include "ssg/errors.hpp"

namespace ssg {

CayleyTableGroup::CayleyTableGroup(std::vector<std::vector<Element>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  const std::size_t n = table_.size();
  if (n == 0) throw DefinitionError(name_ + ": empty table");
  for (std::size_t x = 0; x < n; ++x) {
    if (table_[x].size() != n) throw DefinitionError(name_ + ": table is not square");
    if (table_[0][x] != x || table_[x][0] != x)
      throw DefinitionError(name_ + ": element 0 is not the identity");
  }
  inverses_.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (table_[x][y] >= n) throw DefinitionError(name_ + ": entry out of range");
    for (std::size_t y = 0; y < n; ++y)
      if (table_[x][y] == 0 && table_[y][x] == 0) inverses_[x] = y;
    if (inverses_[x] == n) throw DefinitionError(name_ + ": element without inverse");
  }
  // exhaustive for small tables, a deterministic stride otherwise
  const std::size_t stride = n <= 64 ? 1 : n / 31 + 1;
  for (std::size_t x = 0; x < n; x += stride)
    for (std::size_t y = 0; y < n; y += stride)
      for (std::size_t z = 0; z < n; z += stride)
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]])
          throw DefinitionError(name_ + ": table is not associative");
}

std::shared_ptr<const CayleyTableGroup> CayleyTableGroup::cyclic(std::size_t n) {
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x][y] = (x + y) % n;
  return std::make_shared<CayleyTableGroup>(std::move(table), "C" + std::to_string(n));
}

std::shared_ptr<const CayleyTableGroup> CayleyTableGroup::klein_four() {
  std::vector<std::vector<Element>> table(4, std::vector<Element>(4));
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) table[x][y] = x ^ y;
  return std::make_shared<CayleyTableGroup>(std::move(table), "C2xC2");
}

SymmetricGroup::SymmetricGroup(std::size_t degree) : degree_(degree) {
  if (degree < 1 || degree > 8) throw DefinitionError("Sym(d) supported for 1 <= d <= 8");
  std::vector<Permutation::Point> images(degree);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  do {
    elements_.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

FiniteGroup::Element SymmetricGroup::index_of(const Permutation& p) const {
  // Lehmer code rank in lexicographic order
  Element rank = 0;
  auto img = p.images();
  for (std::size_t i = 0; i < degree_; ++i) {
    Element smaller = 0;
    for (std::size_t j = i + 1; j < degree_; ++j)
      if (img[j] < img[i]) ++smaller;
    Element fact = 1;
    for (std::size_t k = 2; k < degree_ - i; ++k) fact *= k;
    rank += smaller * fact;
  }
  return rank;
}

FiniteGroup::Element SymmetricGroup::multiply(Element x, Element y) const {
  return index_of(perm_compose(elements_[x], elements_[y]));
}

FiniteGroup::Element SymmetricGroup::inverse(Element x) const {
  return index_of(elements_[x].inverse());
}

IteratedWreathGroup::IteratedWreathGroup(std::size_t degree, int level)
    : degree_(degree), level_(level) {
  if (degree < 2) throw DefinitionError("iterated wreath product needs d >= 2");
  if (level < -1) throw DefinitionError("iterated wreath product level must be >= -1");
  if (level == -1) {
    sym_ = std::make_shared<SymmetricGroup>(degree);
    size_ = sym_->size();
    return;
  }
  base_ = std::make_shared<IteratedWreathGroup>(degree, level - 1);
  top_ = std::make_shared<SymmetricGroup>(degree - 1);
  std::uint64_t s = 1;
  for (std::size_t k = 0; k + 1 < degree; ++k) {
    if (s > (std::uint64_t{1} << 40) / base_->size())
      throw ResourceLimit("iterated wreath product too large");
    s *= base_->size();
  }
  size_ = s * top_->size();
}

std::string IteratedWreathGroup::describe() const {
  if (level_ == -1) return sym_->describe();
  return "Sigma_" + std::to_string(level_) + "(" + std::to_string(degree_) + ")";
}

IteratedWreathGroup::Parts IteratedWreathGroup::decode(Element x) const {
  Parts parts;
  parts.top = x % top_->size();
  x /= top_->size();
  parts.entries.assign(degree_ - 1, 0);
  for (std::size_t j = degree_ - 1; j-- > 0;) {
    parts.entries[j] = x % base_->size();
    x /= base_->size();
  }
  return parts;
}

FiniteGroup::Element IteratedWreathGroup::encode(const Parts& parts) const {
  Element x = 0;
  for (Element e : parts.entries) x = x * base_->size() + e;
  return x * top_->size() + parts.top;
}

Permutation IteratedWreathGroup::top_permutation(Element x) const {
  const Permutation& tau = top_->element(decode(x).top);
  std::vector<Permutation::Point> images(tau.images().begin(), tau.images().end());
  images.push_back(static_cast<Permutation::Point>(degree_ - 1));
  return Permutation::from_images(std::move(images));
}

FiniteGroup::Element IteratedWreathGroup::multiply(Element x, Element y) const {
  if (level_ == -1) return sym_->multiply(x, y);
  Parts a = decode(x), b = decode(y);
  const Permutation& rho = top_->element(b.top);
  Parts c;
  c.entries.resize(degree_ - 1);
  for (std::size_t j = 0; j + 1 < degree_; ++j)
    c.entries[j] = base_->multiply(a.entries[rho(static_cast<Permutation::Point>(j))], b.entries[j]);
  c.top = top_->multiply(a.top, b.top);
  return encode(c);
}

FiniteGroup::Element IteratedWreathGroup::inverse(Element x) const {
  if (level_ == -1) return sym_->inverse(x);
  Parts a = decode(x);
  Element inv_top = top_->inverse(a.top);
  const Permutation& tinv = top_->element(inv_top);
  Parts c;
  c.entries.resize(degree_ - 1);
  for (std::size_t j = 0; j + 1 < degree_; ++j)
    c.entries[j] = base_->inverse(a.entries[tinv(static_cast<Permutation::Point>(j))]);
  c.top = inv_top;
  return encode(c);
}

}  // namespace ssg
