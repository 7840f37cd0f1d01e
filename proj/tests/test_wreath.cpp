#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "ssg/errors.hpp"
#include "ssg/wreath.hpp"
#include "support.hpp"

using namespace ssg;
using namespace ssg::test;

namespace {

Permutation cyc(std::size_t d, std::vector<std::vector<std::size_t>> c) {
  return Permutation::from_cycles(d, c);
}

// Action of a wreath element on a vertex, sections evaluated by act().
Vertex wreath_act(const GroupDefinition& g, const WreathElement& e, const Vertex& x) {
  if (x.path.empty()) return x;
  Vertex rest{{x.path.begin() + 1, x.path.end()}};
  Vertex image = act(g, e.sections[x.path[0]], rest, 1);
  image.path.insert(image.path.begin(), e.perm(x.path[0]));
  return image;
}

}  // namespace

TEST_CASE("permutation parsing and printing") {
  CHECK(cyc(3, {{1, 2, 3}}).to_string() == "(1 2 3)");
  CHECK(Permutation(4).to_string() == "()");
  CHECK(cyc(4, {{3, 4}, {1, 2}}).to_string() == "(1 2)(3 4)");
  CHECK(cyc(4, {{2, 4, 3}}).cycles() == std::vector<std::vector<std::size_t>>{{2, 4, 3}});
  CHECK(cyc(5, {{1, 2}, {3, 4, 5}}).order() == 6);
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), DefinitionError);
  CHECK_THROWS_AS(cyc(3, {{1, 4}}), DefinitionError);
  CHECK_THROWS_AS(cyc(3, {{1, 2, 1}}), DefinitionError);
}

TEST_CASE("perm_compose applies the right factor first") {
  const Permutation id(2), s = cyc(2, {{1, 2}});
  CHECK(perm_compose(s, id) == s);
  CHECK(perm_compose(s, s).is_identity());
  // frozen from the table below: 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
  CHECK(perm_compose(cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2}})) == cyc(3, {{1, 3}}));
}

TEST_CASE("perm_compose agrees with the Sym(3) table") {
  std::vector<std::vector<Permutation::Point>> all;
  std::vector<Permutation::Point> p{0, 1, 2};
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  REQUIRE(all.size() == 6);
  for (const auto& s : all)
    for (const auto& t : all) {
      std::vector<Permutation::Point> expected(3);
      for (std::size_t i = 0; i < 3; ++i) expected[i] = s[t[i]];
      const Permutation st = perm_compose(Permutation::from_images(s), Permutation::from_images(t));
      CHECK(std::equal(expected.begin(), expected.end(), st.images().begin()));
      CHECK(perm_compose(st, perm_compose(Permutation::from_images(t).inverse(),
                                          Permutation::from_images(s).inverse()))
                .is_identity());
    }
}

TEST_CASE("words") {
  const auto g = grigorchuk();
  CHECK(w(g, "1").empty());
  CHECK(format_word(w(g, "a*b'*c"), g.generators()) == "a*b'*c");
  CHECK(format_word(Word{}, g.generators()) == "1");
  CHECK(w(g, "a*b").inverse() == w(g, "b'*a'"));
  CHECK(w(g, "a*b*b'*a'*c").freely_reduced() == w(g, "c"));
  CHECK(w(g, "a*d").power(3) == w(g, "a*d*a*d*a*d"));
  const WordOrder order(g.generators());
  CHECK(order(w(g, "d"), w(g, "a*a")));
  CHECK(order(w(g, "a"), w(g, "a'")));
  CHECK(order(w(g, "a'"), w(g, "b")));
  CHECK_FALSE(order(w(g, "b"), w(g, "b")));
  CHECK_THROWS_AS(w(g, "a*e"), ParseError);
  CHECK_THROWS_AS(w(g, "a**b"), ParseError);
}

TEST_CASE("wreath_multiply") {
  const auto g = grigorchuk();
  const WreathElement u{{Word{}, Word{}}, cyc(2, {{1, 2}})};
  const WreathElement v{{w(g, "a"), w(g, "c")}, Permutation(2)};
  const WreathElement uv = wreath_multiply(u, v);
  CHECK(uv == WreathElement{{w(g, "a"), w(g, "c")}, cyc(2, {{1, 2}})});
  const WreathElement vu = wreath_multiply(v, u);
  CHECK(vu == WreathElement{{w(g, "c"), w(g, "a")}, cyc(2, {{1, 2}})});
  CHECK(wreath_multiply(uv, WreathElement::identity(2)) == uv);
  CHECK_THROWS_AS(wreath_multiply(u, WreathElement::identity(3)), DegreeMismatch);

  // oracle: the products act on depth-2 vertices as a*b and b*a do
  for (const Vertex& x : vertices_up_to(g, 3)) {
    CHECK(wreath_act(g, uv, x) == act(g, w(g, "a*b"), x));
    CHECK(wreath_act(g, vu, x) == act(g, w(g, "b*a"), x));
  }
}

TEST_CASE("wreath_invert") {
  const auto g = grigorchuk();
  const WreathElement swap{{Word{}, Word{}}, cyc(2, {{1, 2}})};
  CHECK(wreath_invert(swap) == swap);
  CHECK(wreath_invert(WreathElement{{w(g, "a"), w(g, "c")}, Permutation(2)}) ==
        WreathElement{{w(g, "a'"), w(g, "c'")}, Permutation(2)});
  const WreathElement x{{Word{}, w(g, "a")}, cyc(2, {{1, 2}})};
  const WreathElement xi = wreath_invert(x);
  CHECK(xi == WreathElement{{w(g, "a'"), Word{}}, cyc(2, {{1, 2}})});
  const WreathElement product = wreath_multiply(xi, x);
  CHECK(product.perm.is_identity());
  for (const auto& s : product.sections) CHECK(s.freely_reduced().empty());
}

TEST_CASE("decompose") {
  const auto g = grigorchuk();
  CHECK(decompose(g, w(g, "d")) == WreathElement{{Word{}, w(g, "b")}, Permutation(2)});
  CHECK(decompose(g, w(g, "a*d")) == WreathElement{{Word{}, w(g, "b")}, cyc(2, {{1, 2}})});
  CHECK(decompose(g, Word{}) == WreathElement::identity(2));
  const auto gs = gupta_sidki();
  CHECK(decompose(gs, w(gs, "t")) == WreathElement{{w(gs, "a"), w(gs, "a'"), w(gs, "t")}, Permutation(3)});
  CHECK(decompose(gs, w(gs, "a")).perm == cyc(3, {{1, 2, 3}}));
}

TEST_CASE("iterate") {
  const auto g = grigorchuk();
  Portrait p1 = iterate(g, w(g, "b"), 1);
  CHECK(p1.root.perm.is_identity());
  CHECK(p1.leaves() == std::vector<Word>{w(g, "a"), w(g, "c")});

  Portrait p2 = iterate(g, w(g, "b"), 2);
  CHECK(p2.root.perm.is_identity());
  REQUIRE(p2.root.children.size() == 2);
  CHECK(p2.root.children[0].perm == cyc(2, {{1, 2}}));
  CHECK(p2.root.children[1].perm.is_identity());
  CHECK(p2.leaves() == std::vector<Word>{Word{}, Word{}, w(g, "a"), w(g, "d")});

  Portrait p0 = iterate(g, w(g, "a*b*c"), 0);
  CHECK(p0.root.children.empty());
  CHECK(p0.leaves() == std::vector<Word>{w(g, "a*b*c")});

  CHECK_THROWS_AS(iterate(g, w(g, "a"), 30, 0, TreeLimits{1000}), ResourceLimit);
}

TEST_CASE("act") {
  const auto g = grigorchuk();
  CHECK(act(g, w(g, "a"), v("112")) == v("212"));
  CHECK(act(g, w(g, "b"), v("11")) == v("12"));
  CHECK(act(g, w(g, "d"), v("212")) == v("211"));
  CHECK(act(g, Word{}, v("1221")) == v("1221"));
  CHECK(act(g, w(g, "a"), Vertex{}) == Vertex{});
  // cross-check with the level-3 portrait of d
  Portrait p = iterate(g, w(g, "d"), 3);
  CHECK(p.root.children[1].children[0].perm == cyc(2, {{1, 2}}));
}

TEST_CASE("vertices") {
  CHECK(format_vertex(v("121")) == "121");
  CHECK(format_vertex(Vertex{}) == "");
  CHECK(format_vertex(v("1.10.3"), true) == "1.10.3");
  CHECK(v("1.10.3").path == std::vector<std::uint32_t>{0, 9, 2});
  CHECK_THROWS(parse_vertex("102"));
  const auto gs = gupta_sidki();
  CHECK(level_size(gs, 3) == 27);
  for (std::size_t i = 0; i < 27; ++i) CHECK(vertex_index(gs, vertex_at(gs, 3, i)) == i);
  CHECK(vertex_at(gs, 2, 5) == v("23"));
}

TEST_CASE("level_permutation matches act") {
  const auto g = grigorchuk();
  for (const char* text : {"a", "b", "a*b*a*c", "d*a'"}) {
    const Word word = w(g, text);
    const Permutation p = level_permutation(g, word, 3);
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(vertex_at(g, 3, p(static_cast<Permutation::Point>(i))) == act(g, word, vertex_at(g, 3, i)));
  }
}
