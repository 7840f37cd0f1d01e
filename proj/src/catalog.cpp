#include "ssg/catalog.hpp"

#include <memory>

#include "ssg/errors.hpp"
#include "ssg/finite_groups.hpp"

namespace ssg {

OmegaSequence OmegaSequence::parse(std::string_view text) {
  OmegaSequence omega;
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close != text.size() - 1 ||
      close < open)
    throw DefinitionError("omega must look like PRE(PERIOD), e.g. \"(012)\"");
  omega.preperiod = std::string(text.substr(0, open));
  omega.period = std::string(text.substr(open + 1, close - open - 1));
  if (omega.period.empty()) throw DefinitionError("omega period must be nonempty");
  for (char c : omega.preperiod + omega.period)
    if (c < '0' || c > '2') throw DefinitionError("omega symbols must be 0, 1 or 2");
  return omega;
}

int OmegaSequence::symbol(std::size_t n) const {
  if (n < preperiod.size()) return preperiod[n] - '0';
  return period[(n - preperiod.size()) % period.size()] - '0';
}

std::string OmegaSequence::to_string() const { return preperiod + "(" + period + ")"; }

bool OmegaSequence::all_symbols_recur() const {
  return period.find('0') != std::string::npos && period.find('1') != std::string::npos &&
         period.find('2') != std::string::npos;
}

std::array<bool, 3> omega_epimorphism(int symbol) {
  switch (symbol) {
    case 0: return {true, true, false};
    case 1: return {true, false, true};
    case 2: return {false, true, true};
  }
  throw DefinitionError("omega symbol must be 0, 1 or 2");
}

std::string factor_generator_name(int level, std::uint64_t element) {
  if (level < 0) return "s" + std::to_string(element);
  return "g" + std::to_string(level) + "_" + std::to_string(element);
}

namespace {

Word letter(std::uint32_t g) { return Word::letter(g); }

long long param(const BuiltinParams& p, std::size_t i, long long fallback) {
  return i < p.integers.size() ? p.integers[i] : fallback;
}

void expect_params(const BuiltinParams& p, std::size_t max, std::string_view name) {
  if (p.integers.size() > max)
    throw DefinitionError(std::string(name) + " takes at most " + std::to_string(max) +
                          " parameters");
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

GroupDefinition grigorchuk(const BuiltinParams& p) {
  expect_params(p, 0, "grigorchuk");
  // a b c d = 0 1 2 3
  LevelRecursion r;
  r.degree = 2;
  r.images = {
      {{Word{}, Word{}}, Permutation::from_cycles(2, {{1, 2}})},
      {{letter(0), letter(2)}, Permutation(2)},
      {{letter(0), letter(3)}, Permutation(2)},
      {{Word{}, letter(1)}, Permutation(2)},
  };
  return GroupDefinition::self_similar({"a", "b", "c", "d"}, std::move(r));
}

GroupDefinition grigorchuk_omega(const BuiltinParams& p) {
  expect_params(p, 0, "grigorchuk_omega");
  OmegaSequence omega = p.omega.value_or(OmegaSequence{});
  auto level_for = [](int symbol) {
    auto kills = omega_epimorphism(symbol);
    LevelRecursion r;
    r.degree = 2;
    r.images.push_back({{Word{}, Word{}}, Permutation::from_cycles(2, {{1, 2}})});
    for (std::uint32_t x = 1; x <= 3; ++x)
      r.images.push_back({{kills[x - 1] ? letter(0) : Word{}, letter(x)}, Permutation(2)});
    return r;
  };
  std::vector<LevelRecursion> blocks;
  for (char c : omega.preperiod + omega.period) blocks.push_back(level_for(c - '0'));
  return GroupDefinition::similar({"a", "b", "c", "d"}, std::move(blocks), omega.preperiod.size());
}

GroupDefinition gupta_sidki(const BuiltinParams& params) {
  expect_params(params, 1, "gupta_sidki");
  long long p = param(params, 0, 3);
  if (p < 3 || !is_prime(p) || p > 97) throw DefinitionError("gupta_sidki needs a prime 3 <= p <= 97");
  const auto d = static_cast<std::size_t>(p);
  std::vector<std::size_t> cycle(d);
  for (std::size_t i = 0; i < d; ++i) cycle[i] = i + 1;
  LevelRecursion r;
  r.degree = d;
  r.images.push_back({std::vector<Word>(d), Permutation::from_cycles(d, {cycle})});
  std::vector<Word> t(d);
  t[0] = letter(0);
  t[1] = Word::letter(0, true);
  t[d - 1] = letter(1);
  r.images.push_back({std::move(t), Permutation(d)});
  return GroupDefinition::self_similar({"a", "t"}, std::move(r));
}

GroupDefinition adding_machine(const BuiltinParams& params) {
  expect_params(params, 1, "adding_machine");
  long long dd = param(params, 0, 2);
  if (dd < 2 || dd > 64) throw DefinitionError("adding_machine needs 2 <= d <= 64");
  const auto d = static_cast<std::size_t>(dd);
  std::vector<std::size_t> cycle(d);
  for (std::size_t i = 0; i < d; ++i) cycle[i] = i + 1;
  std::vector<Word> s(d);
  s[d - 1] = letter(0);
  LevelRecursion r{d, {{std::move(s), Permutation::from_cycles(d, {cycle})}}};
  return GroupDefinition::self_similar({"a"}, std::move(r));
}

GroupDefinition diagonal(const BuiltinParams& params) {
  expect_params(params, 1, "diagonal");
  long long dd = param(params, 0, 2);
  if (dd < 2 || dd > 64) throw DefinitionError("diagonal needs 2 <= d <= 64");
  const auto d = static_cast<std::size_t>(dd);
  LevelRecursion r{d, {{std::vector<Word>(d, letter(0)), Permutation(d)}}};
  return GroupDefinition::self_similar({"g"}, std::move(r));
}

/// Sigma_{-1} * Sigma_0 * ... * Sigma_e, each factor element (identity
/// omitted) a generator.
GroupDefinition sigma_tower(long long dd, long long e, std::string_view name) {
  if (dd < 2 || dd > 6) throw DefinitionError(std::string(name) + " needs 2 <= d <= 6");
  if (e < 0 || e > 4) throw DefinitionError(std::string(name) + " needs 0 <= e <= 4");
  const auto d = static_cast<std::size_t>(dd);
  std::vector<std::shared_ptr<const IteratedWreathGroup>> factors;
  std::size_t total = 0;
  for (int level = -1; level <= e; ++level) {
    std::shared_ptr<const IteratedWreathGroup> f;
    try {
      f = std::make_shared<IteratedWreathGroup>(d, level);
    } catch (const ResourceLimit&) {
      throw DefinitionError(std::string(name) + ": factor expansion exceeds " +
                            std::to_string(max_expanded_generators) + " generators");
    }
    total += f->size() - 1;
    if (total > max_expanded_generators)
      throw DefinitionError(std::string(name) + ": factor expansion exceeds " +
                            std::to_string(max_expanded_generators) + " generators");
    factors.push_back(std::move(f));
  }
  std::vector<std::size_t> offset;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    offset.push_back(names.size());
    for (std::uint64_t x = 1; x < factors[k]->size(); ++x)
      names.push_back(factor_generator_name(static_cast<int>(k) - 1, x));
  }
  auto gen_of = [&](std::size_t k, std::uint64_t x) -> Word {
    if (x == 0) return Word{};
    return letter(static_cast<std::uint32_t>(offset[k] + x - 1));
  };
  LevelRecursion r;
  r.degree = d;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = *factors[k];
    for (std::uint64_t x = 1; x < f.size(); ++x) {
      if (k == 0) {
        r.images.push_back({std::vector<Word>(d), f.symmetric().element(x)});
        continue;
      }
      auto parts = f.decode(x);
      std::vector<Word> sections;
      for (auto entry : parts.entries) sections.push_back(gen_of(k - 1, entry));
      sections.push_back(gen_of(k, x));
      r.images.push_back({std::move(sections), f.top_permutation(x)});
    }
  }
  return GroupDefinition::self_similar(std::move(names), std::move(r));
}

GroupDefinition mother_bounded(const BuiltinParams& p) {
  expect_params(p, 1, "mother_bounded");
  return sigma_tower(param(p, 0, 3), 0, "mother_bounded");
}

GroupDefinition pde(const BuiltinParams& p) {
  expect_params(p, 2, "pde");
  return sigma_tower(param(p, 0, 3), param(p, 1, 0), "pde");
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"grigorchuk", "none", grigorchuk},
      {"grigorchuk_omega", "--omega PRE(PERIOD) over {0,1,2}, default (012)", grigorchuk_omega},
      {"gupta_sidki", "p (prime >= 3, default 3)", gupta_sidki},
      {"mother_bounded", "d (2..6, default 3)", mother_bounded},
      {"pde", "d (2..6, default 3), e (0..4, default 0)", pde},
      {"adding_machine", "d (default 2)", adding_machine},
      {"diagonal", "d (default 2)", diagonal},
  };
  return entries;
}

GroupDefinition builtin(std::string_view name, const BuiltinParams& params) {
  for (const auto& entry : catalog())
    if (entry.name == name) {
      if (params.omega && name != "grigorchuk_omega")
        throw DefinitionError("omega applies to grigorchuk_omega only");
      return entry.construct(params);
    }
  throw DefinitionError("unknown builtin '" + std::string(name) + "'");
}

}  // namespace ssg
