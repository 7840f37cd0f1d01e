#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssg/permutation.hpp"

namespace ssg {

/// A finite group on element indices 0..size()-1, with 0 the identity.
class FiniteGroup {
 public:
  using Element = std::uint64_t;

  virtual ~FiniteGroup() = default;
  virtual std::uint64_t size() const = 0;
  virtual Element multiply(Element x, Element y) const = 0;
  virtual Element inverse(Element x) const = 0;
  virtual std::string describe() const = 0;
};

/// Group given by its multiplication table. The constructor checks identity
/// at index 0, inverses, and associativity on all triples up to size 64
/// (spot checks beyond).
class CayleyTableGroup : public FiniteGroup {
 public:
  CayleyTableGroup(std::vector<std::vector<Element>> table, std::string name);

  static std::shared_ptr<const CayleyTableGroup> cyclic(std::size_t n);
  /// Elements 1, x, y, xy in that order.
  static std::shared_ptr<const CayleyTableGroup> klein_four();

  std::uint64_t size() const override { return table_.size(); }
  Element multiply(Element x, Element y) const override { return table_[x][y]; }
  Element inverse(Element x) const override { return inverses_[x]; }
  std::string describe() const override { return name_; }

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverses_;
  std::string name_;
};

/// Sym(d) with elements in lexicographic order of their image lists
/// (identity first); the product is perm_compose.
class SymmetricGroup : public FiniteGroup {
 public:
  explicit SymmetricGroup(std::size_t degree);

  std::uint64_t size() const override { return elements_.size(); }
  Element multiply(Element x, Element y) const override;
  Element inverse(Element x) const override;
  std::string describe() const override { return "Sym(" + std::to_string(degree_) + ")"; }

  std::size_t degree() const { return degree_; }
  const Permutation& element(Element x) const { return elements_[x]; }
  Element index_of(const Permutation& p) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> elements_;
};

/// Sigma_{-1} = Sym(d), Sigma_i = Sigma_{i-1} wr Sym(d-1). Elements of
/// Sigma_i (i >= 0) are <f_1, ..., f_{d-1}> tau, indexed lexicographically
/// on (f_1, ..., f_{d-1}, tau). The product follows the wreath convention of
/// wreath_multiply.
class IteratedWreathGroup : public FiniteGroup {
 public:
  struct Parts {
    std::vector<Element> entries;  // d-1 elements of the previous factor
    Element top = 0;               // element of Sym(d-1)
  };

  /// level -1 is Sym(d) itself.
  IteratedWreathGroup(std::size_t degree, int level);

  std::uint64_t size() const override { return size_; }
  Element multiply(Element x, Element y) const override;
  Element inverse(Element x) const override;
  std::string describe() const override;

  int level() const { return level_; }
  std::size_t degree() const { return degree_; }
  const FiniteGroup& base() const { return *base_; }
  const SymmetricGroup& top_group() const { return *top_; }
  const SymmetricGroup& symmetric() const { return *sym_; }

  Parts decode(Element x) const;
  Element encode(const Parts& parts) const;
  /// tau extended to Sym(d) by fixing the last point.
  Permutation top_permutation(Element x) const;

 private:
  std::size_t degree_;
  int level_;
  std::uint64_t size_ = 0;
  std::shared_ptr<const SymmetricGroup> sym_;       // level -1 only
  std::shared_ptr<const SymmetricGroup> top_;       // Sym(d-1)
  std::shared_ptr<const IteratedWreathGroup> base_;  // level >= 0
};

}  // namespace ssg
