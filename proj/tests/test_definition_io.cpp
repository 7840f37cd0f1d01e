#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ssg/errors.hpp"
#include "ssg/sampling.hpp"
#include "ssg/wreath.hpp"
#include "support.hpp"

using namespace ssg;
using namespace ssg::test;

namespace {

const char* kGrigorchukFile = R"(selfsimilar
degree 2
# the first Grigorchuk group
gen a = (1 2)
gen b = <a, c>
gen c = <a, d>
gen d = <1, b>
)";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Permutation random_perm(Sampler& rng, std::size_t d) {
  std::vector<Permutation::Point> images(d);
  for (std::size_t i = 0; i < d; ++i) images[i] = static_cast<Permutation::Point>(i);
  for (std::size_t i = d; i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
  return Permutation::from_images(images);
}

LevelRecursion random_level(Sampler& rng, std::size_t generators) {
  LevelRecursion r;
  r.degree = 2 + rng.below(3);
  for (std::size_t k = 0; k < generators; ++k) {
    WreathElement e;
    e.perm = random_perm(rng, r.degree);
    for (std::size_t i = 0; i < r.degree; ++i) e.sections.push_back(rng.word(generators, 0, 3));
    r.images.push_back(std::move(e));
  }
  return r;
}

GroupDefinition random_definition(Sampler& rng) {
  const std::vector<std::string> pool{"a", "b", "x1", "y_2", "Tz"};
  const std::size_t n = 1 + rng.below(pool.size());
  std::vector<std::string> names(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
  if (rng.below(2) == 0) return GroupDefinition::self_similar(names, random_level(rng, n));
  std::vector<LevelRecursion> blocks;
  const std::size_t count = 1 + rng.below(3);
  // similar sequences keep one degree per level; blocks may differ
  for (std::size_t b = 0; b < count; ++b) blocks.push_back(random_level(rng, n));
  return GroupDefinition::similar(names, std::move(blocks), rng.below(count));
}

}  // namespace

TEST_CASE("parse the Grigorchuk file") {
  const GroupDefinition g = parse_definition(kGrigorchukFile);
  CHECK(g.kind() == GroupKind::self_similar);
  CHECK(g.degree(0) == 2);
  CHECK(g.generators() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(decompose(g, w(g, "b")) == WreathElement{{w(g, "a"), w(g, "c")}, Permutation(2)});
  CHECK(g == grigorchuk());
}

TEST_CASE("parse the adding machine") {
  const GroupDefinition g = parse_definition("selfsimilar\ndegree 2\ngen a = <1, a> (1 2)");
  CHECK(g.generator_count() == 1);
  CHECK(g == builtin("adding_machine"));
}

TEST_CASE("parse errors") {
  auto message = [](const std::string& text) {
    try {
      parse_definition(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    } catch (const Error& e) {
      return std::string("other: ") + e.what();
    }
    return std::string("accepted");
  };
  CHECK(message("selfsimilar\ndegree 2\ngen a = <1, z>").find("unknown generator") != std::string::npos);
  CHECK(message("selfsimilar\ndegree 2\ngen a = <1, z>").rfind("line 3", 0) == 0);
  CHECK(message("selfsimilar\ndegree 2\n").find("no generators") != std::string::npos);
  CHECK(message("selfsimilar\ndegree 2\ngen a = <1, 1, 1>") != "accepted");
  CHECK(message("selfsimilar\ndegree 2\ngen a = (1 3)") != "accepted");
  CHECK(message("selfsimilar\ndegree 3\ngen a = (1 2 1)") != "accepted");
  CHECK(message("selfsimilar\ndegree 2\ngen a =") != "accepted");
  CHECK(message("selfsimilar\ndegree 2\ngen a = (1 2)\ngen a = (1 2)") != "accepted");
  CHECK(message("selfsimilar\ndegree 1\ngen a = <a>") != "accepted");
  CHECK(message("similar\nlevel 0:\ndegree 2\ngen a = (1 2)") != "accepted");
  CHECK(message("nonsense") != "accepted");
  CHECK(message("") != "accepted");
}

TEST_CASE("serialize is canonical") {
  const std::string text = serialize_definition(grigorchuk());
  CHECK(text == read_file(SSG_GOLDEN_DIR "/grigorchuk.def"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(serialize_definition(parse_definition(kGrigorchukFile)) == text);
}

TEST_CASE("empty generator set is rejected") {
  CHECK_THROWS_AS(GroupDefinition::self_similar({}, LevelRecursion{2, {}}), DefinitionError);
}

TEST_CASE("builtins round-trip") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const GroupDefinition g = builtin(entry.name);
    CHECK(parse_definition(serialize_definition(g)) == g);
  }
  const GroupDefinition o = omega("20(1201)");
  CHECK(parse_definition(serialize_definition(o)) == o);
}

TEST_CASE("random definitions round-trip") {
  Sampler rng(2024);
  for (int i = 0; i < 100; ++i) {
    const GroupDefinition g = random_definition(rng);
    const std::string text = serialize_definition(g);
    CAPTURE(text);
    const GroupDefinition back = parse_definition(text);
    CHECK(back == g);
    CHECK(serialize_definition(back) == text);
  }
}

TEST_CASE("builtin catalog") {
  const auto gs = gupta_sidki();
  CHECK(gs.degree(0) == 3);
  CHECK(decompose(gs, w(gs, "a")) ==
        WreathElement{{Word{}, Word{}, Word{}}, Permutation::from_cycles(3, {{1, 2, 3}})});
  CHECK(decompose(gs, w(gs, "t")) == WreathElement{{w(gs, "a"), w(gs, "a'"), w(gs, "t")}, Permutation(3)});
  const auto gs5 = gupta_sidki(5);
  CHECK(decompose(gs5, w(gs5, "t")).sections ==
        std::vector<Word>{w(gs5, "a"), w(gs5, "a'"), Word{}, Word{}, w(gs5, "t")});
  CHECK_THROWS_AS(gupta_sidki(4), DefinitionError);
  CHECK_THROWS_AS(gupta_sidki(2), DefinitionError);
  CHECK_THROWS_AS(builtin("nope"), DefinitionError);

  // pde(3, 0) is the mother group of degree 3
  CHECK(builtin("pde", {{3, 0}, {}}) == builtin("mother_bounded", {{3}, {}}));
  const auto m = builtin("mother_bounded");
  CHECK(m.generator_count() == 6 + 72 - 2);
  CHECK(m.generators().front() == factor_generator_name(-1, 1));

  const auto diag = builtin("diagonal");
  CHECK(decompose(diag, w(diag, "g")) == WreathElement{{w(diag, "g"), w(diag, "g")}, Permutation(2)});
}

TEST_CASE("mother group recursion shape") {
  // g = <f_1, ..., f_{d-1}, g> tau with f_i in Sym(d) and tau fixing d
  const auto m = builtin("mother_bounded", {{3}, {}});
  const std::size_t d = 3;
  for (std::uint32_t k = 0; k < m.generator_count(); ++k) {
    const std::string& name = m.generators()[k];
    const WreathElement& e = m.image(0, Letter{k, false});
    if (name[0] == 's') {
      CHECK(e.perm.degree() == d);
      for (const Word& s : e.sections) CHECK(s.empty());
    } else {
      CHECK(e.perm(d - 1) == d - 1);
      CHECK((e.sections.back() == Word::letter(k)));
      for (std::size_t i = 0; i + 1 < d; ++i)
        CHECK((e.sections[i].empty() || m.generators()[e.sections[i][0].generator][0] == 's'));
    }
  }
}

TEST_CASE("factor expansion is capped") {
  // Sigma_0 for d = 4 has 24^3 * 6 elements
  CHECK_THROWS(builtin("mother_bounded", {{4}, {}}));
  CHECK(builtin("mother_bounded", {{2}, {}}).generator_count() == 1 + 2 - 1);
}

TEST_CASE("omega epimorphisms") {
  CHECK(omega_epimorphism(0) == std::array<bool, 3>{true, true, false});
  CHECK(omega_epimorphism(1) == std::array<bool, 3>{true, false, true});
  CHECK(omega_epimorphism(2) == std::array<bool, 3>{false, true, true});
  CHECK_THROWS(OmegaSequence::parse("(013)"));
  CHECK_THROWS(OmegaSequence::parse("01"));
  CHECK_THROWS(OmegaSequence::parse("0()"));
  CHECK(OmegaSequence::parse("0(12)").symbol(4) == 2);
  CHECK(OmegaSequence::parse("0(12)").to_string() == "0(12)");
  CHECK(OmegaSequence::parse("(012)").all_symbols_recur());
  CHECK_FALSE(OmegaSequence::parse("012(01)").all_symbols_recur());
}

TEST_CASE("grigorchuk_omega has the G_omega shape at every level") {
  for (const char* text : {"(012)", "1(20)", "0012(1)", "(2)"}) {
    const OmegaSequence om = OmegaSequence::parse(text);
    const GroupDefinition g = omega(text);
    for (std::size_t n = 0; n < 12; ++n) {
      CHECK(decompose(g, w(g, "a"), n) ==
            WreathElement{{Word{}, Word{}}, Permutation::from_cycles(2, {{1, 2}})});
      const auto image = omega_epimorphism(om.symbol(n));
      for (std::uint32_t x = 1; x <= 3; ++x) {
        const WreathElement e = decompose(g, Word::letter(x), n);
        CHECK(e.perm.is_identity());
        CHECK((e.sections[0] == (image[x - 1] ? w(g, "a") : Word{})));
        CHECK((e.sections[1] == Word::letter(x)));
      }
    }
  }
  // with omega = (012) the sequence differs from the self-similar group only in labels
  CHECK(omega("(012)").kind() == GroupKind::similar_sequence);
}

TEST_CASE("callback-backed similar sequences") {
  const GroupDefinition g = GroupDefinition::similar({"x"}, [](std::size_t n) {
    LevelRecursion r;
    r.degree = 2 + n % 2;
    WreathElement e = WreathElement::identity(r.degree);
    e.perm = Permutation::from_cycles(r.degree, {{1, 2}});
    e.sections.back() = Word::letter(0);
    r.images.push_back(e);
    return r;
  });
  CHECK_FALSE(g.eventually_periodic());
  CHECK(g.degree(5) == 3);
  CHECK(act(g, Word::letter(0), v("1111")) == v("2111"));
  CHECK(act(g, Word::letter(0), v("2313")) == v("1323"));
  CHECK_THROWS_AS(serialize_definition(g), DefinitionError);
}
