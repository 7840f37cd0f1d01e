#include "ssg/word.hpp"

#include <algorithm>

namespace ssg {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverted());
  return Word(std::move(out));
}

Word Word::freely_reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    if (!out.empty() && out.back() == l.inverted())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::power(std::size_t k) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) h = (h ^ l.code()) * 1099511628211ull;
  return h;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += names[w[i].generator];
    if (w[i].inverse) out += '\'';
  }
  return out;
}

std::weak_ordering WordOrder::compare(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i].generator != b[i].generator) {
      int c = names_[a[i].generator].compare(names_[b[i].generator]);
      if (c != 0) return c <=> 0;
      return a[i].generator <=> b[i].generator;
    }
    return a[i].inverse <=> b[i].inverse;
  }
  return std::weak_ordering::equivalent;
}

}  // namespace ssg
