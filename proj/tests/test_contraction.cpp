#include <set>

#include "doctest.h"
#include "ssg/contraction.hpp"
#include "ssg/errors.hpp"
#include "ssg/level_action.hpp"
#include "support.hpp"

using namespace ssg;
using namespace ssg::test;

namespace {

Nucleus nucleus_of(const GroupDefinition& g) {
  auto r = nucleus_compute(g);
  REQUIRE(std::holds_alternative<Nucleus>(r));
  return std::get<Nucleus>(std::move(r));
}

std::vector<std::string> state_names(const StateAutomaton& a) {
  std::vector<std::string> names;
  for (StateId s = 0; s < a.size(); ++s) names.push_back(a.state_name(s));
  return names;
}

StateAutomaton two_letter_automaton() {
  // 1, a = <1,1>(1 2), a copy of a, and b = <a, copy>
  StateAutomaton a;
  a.generator_names = {"a", "b", "x"};
  a.layers = {{2, 0, 0}};
  const Permutation swap = Permutation::from_cycles(2, {{1, 2}});
  a.add_state(0, Word{}, Permutation(2));
  a.add_state(0, Word::letter(0), swap);
  a.add_state(0, Word::letter(2), swap);
  a.add_state(0, Word::letter(1), Permutation(2));
  a.transitions = {{0, 0}, {0, 0}, {0, 0}, {1, 2}};
  return a;
}

}  // namespace

TEST_CASE("minimize") {
  const StateAutomaton dup = two_letter_automaton();
  dup.check_invariants();
  const Minimization m = minimize(dup);
  CHECK(m.automaton.size() == 3);
  CHECK(m.class_of[1] == m.class_of[2]);
  CHECK(m.class_of[0] == 0);
  CHECK(m.automaton.transitions[m.class_of[3]] == std::vector<StateId>{m.class_of[1], m.class_of[1]});

  StateAutomaton trivial;
  trivial.generator_names = {"e"};
  trivial.layers = {{3, 0, 0}};
  trivial.add_state(0, Word{}, Permutation(3));
  trivial.transitions = {{0, 0, 0}};
  CHECK(minimize(trivial).automaton.size() == 1);
  CHECK(minimize(trivial).rounds == 0);

  // the Grigorchuk letters: inverses merge with the letters, c and d split in round 2
  const auto g = grigorchuk();
  const LetterAutomaton letters = letter_automaton(g, 1000);
  CHECK(letters.automaton.size() == 9);
  const Minimization gm = minimize(letters.automaton);
  CHECK(state_names(gm.automaton) == std::vector<std::string>{"1", "a", "b", "c", "d"});
  const Minimization again = minimize(gm.automaton);
  CHECK(again.automaton.size() == 5);
  CHECK(again.rounds == 2);
  for (StateId s = 0; s < 5; ++s) CHECK(again.class_of[s] == s);
}

TEST_CASE("recurrent_closure") {
  const auto gs = gupta_sidki();
  const LetterAutomaton la = minimal_letter_automaton(gs, 1000);
  const auto rec = recurrent_closure(la.automaton);
  CHECK(rec.size() == la.automaton.size());
  const StateAutomaton dup = two_letter_automaton();
  // only the identity lies on a cycle
  CHECK(recurrent_closure(dup) == std::vector<StateId>{0});
}

TEST_CASE("sequence helpers") {
  const auto g = grigorchuk();
  const LetterAutomaton la = minimal_letter_automaton(g, 1000);
  const StateId a = la.letter_state[0][0], b = la.letter_state[0][2], d = la.letter_state[0][6];
  // a*d = <1, b>(1 2): section 1 of (a, d) is the section of d at 1 under a
  const StateSequence ad{a, d};
  CHECK(sequence_perm(la.automaton, ad) == Permutation::from_cycles(2, {{1, 2}}));
  CHECK(sequence_section(la.automaton, ad, 0).empty());
  CHECK(sequence_section(la.automaton, ad, 1) == StateSequence{b});
  const std::vector<StateSequence> seeds{ad};
  const SequenceClosure c = close_sequences(la.automaton, seeds, 100);
  CHECK(c.automaton.size() == la.automaton.size() + 1);
  CHECK(c.find(ad, 0) == la.automaton.size());
  CHECK(c.find(StateSequence{b}, 0) == b);
  CHECK_THROWS_AS(close_sequences(la.automaton, seeds, 0), ResourceLimit);
}

TEST_CASE("nucleus of the Grigorchuk group") {
  const Nucleus n = nucleus_of(grigorchuk());
  CHECK(state_names(n.automaton) == std::vector<std::string>{"1", "a", "b", "c", "d"});
  CHECK(n.separation_depth == 2);
  CHECK(n.certificate_depth() <= 6);
  CHECK(n.certificate.size() == 16);
  n.automaton.check_invariants();
}

TEST_CASE("nucleus of the Gupta-Sidki group") {
  const auto gs = gupta_sidki();
  const Nucleus n = nucleus_of(gs);
  CHECK(state_names(n.automaton) == std::vector<std::string>{"1", "a", "a'", "t", "t'"});
  CHECK(n.certificate_depth() <= 6);
  // a' and t' represent a^2 and t^2
  CHECK(are_equal(n, w(gs, "a'"), w(gs, "a*a")));
  CHECK(are_equal(n, w(gs, "t'"), w(gs, "t*t")));
  // hand-folded: t*t = <a*a, a'*a', t*t> and a'*a' = a
  const WreathElement tt = decompose(gs, w(gs, "t*t"));
  CHECK(tt.perm.is_identity());
  CHECK(tt.sections == std::vector<Word>{w(gs, "a*a"), w(gs, "a'*a'"), w(gs, "t*t")});
  CHECK(are_equal(n, tt.sections[1], w(gs, "a")));
}

TEST_CASE("nucleus of small examples") {
  const Nucleus odometer = nucleus_of(builtin("adding_machine"));
  CHECK(state_names(odometer.automaton) == std::vector<std::string>{"1", "a", "a'"});
  CHECK(odometer.separation_depth == 1);

  // g = <g, g> acts trivially, so the faithful quotient is trivial
  const Nucleus diag = nucleus_of(builtin("diagonal"));
  CHECK(diag.automaton.size() == 1);
  CHECK(is_trivial(diag, Word::letter(0)));

  const Nucleus mother = nucleus_of(builtin("mother_bounded"));
  CHECK(mother.automaton.size() == 77);
  CHECK(mother.certificate_depth() <= 6);
}

TEST_CASE("non-contracting input is reported, not asserted") {
  auto r = nucleus_compute(builtin("pde", {{3, 1}, {}}));
  REQUIRE(std::holds_alternative<NotContractingReport>(r));
  const auto& rep = std::get<NotContractingReport>(r);
  CHECK_FALSE(rep.reason.empty());
  CHECK_FALSE(rep.growth_trace.empty());
  CHECK(rep.growth_trace.back() > 4096);

  // the same group fits when the state cap allows it; only the nucleus is missing
  ContractionLimits small;
  small.max_states = 2;
  auto g = nucleus_compute(grigorchuk(), small);
  CHECK(std::holds_alternative<NotContractingReport>(g));
}

TEST_CASE("certified nucleus soundness, checked on sections directly") {
  const auto g = grigorchuk();
  const Nucleus n = nucleus_of(g);
  const auto& a = n.automaton;
  for (const PairCertificate& p : n.certificate) {
    const Word xy = a.words[p.x] * a.words[p.y];
    for (std::size_t depth = p.depth; depth <= p.depth + 3; ++depth)
      for (const Word& leaf : iterate(g, xy, depth).leaves()) {
        bool found = false;
        for (StateId s = 0; s < a.size() && !found; ++s) found = are_equal(n, leaf, a.words[s]);
        CHECK(found);
      }
  }
}

TEST_CASE("verify_contraction") {
  const auto g = grigorchuk();
  auto words = [&](std::initializer_list<const char*> list) {
    std::vector<Word> out;
    for (const char* s : list) out.push_back(w(g, s));
    return out;
  };
  const ContractionCheck ok = verify_contraction(g, words({"1", "a", "b", "c", "d"}), 24);
  CHECK(ok.certified);
  CHECK(ok.failures.empty());
  CHECK(ok.pairs.size() == 16);
  for (const auto& p : ok.pairs) CHECK(p.depth <= 5);

  const ContractionCheck bad = verify_contraction(g, words({"1", "a"}), 24);
  CHECK_FALSE(bad.certified);
  CHECK_FALSE(bad.failures.empty());

  const ContractionCheck no_identity = verify_contraction(g, words({"a", "b", "c", "d"}), 24);
  CHECK_FALSE(no_identity.certified);

  // finitary generators: closed at once, products certified at depth <= 1
  const GroupDefinition f = parse_definition("selfsimilar\ndegree 3\ngen s = (1 2)\ngen t = (2 3)\n");
  const ContractionCheck fin = verify_contraction(f, {Word{}, w(f, "s"), w(f, "t")}, 24);
  CHECK(fin.certified);
  for (const auto& p : fin.pairs) CHECK(p.depth <= 1);
}

TEST_CASE("word problem") {
  const auto g = grigorchuk();
  const Nucleus n = nucleus_of(g);
  for (const char* t : {"a*a", "b*b", "c*c", "d*d", "b*c*d", "a*d*a*d*a*d*a*d", "1", "a*b*a'*b'*b*a*b'*a'"})
    CHECK_MESSAGE(is_trivial(n, w(g, t)), t);
  for (const char* t : {"a*b", "b", "a*d*a*d", "a*b*a*b*a*b*a*b*a*b*a*b*a*b*a*b*a*b*a*b"})
    CHECK_MESSAGE(!is_trivial(n, w(g, t)), t);
  CHECK(is_trivial(n, w(g, "a*b").power(16)));
  CHECK_FALSE(is_trivial(n, w(g, "a*b").power(8)));

  const auto gs = gupta_sidki();
  const Nucleus ngs = nucleus_of(gs);
  CHECK(is_trivial(ngs, w(gs, "t*t*t")));
  CHECK(is_trivial(ngs, w(gs, "a*a*a")));
  CHECK_FALSE(is_trivial(ngs, w(gs, "a*t")));
}

TEST_CASE("are_equal") {
  const auto g = grigorchuk();
  const Nucleus n = nucleus_of(g);
  CHECK(are_equal(n, w(g, "b*c"), w(g, "d")));
  CHECK_FALSE(are_equal(n, w(g, "b"), w(g, "c")));
  CHECK(are_equal(n, w(g, "a*b*a*c"), w(g, "a*b*a*c")));
  CHECK(are_equal(n, w(g, "b'"), w(g, "b")));
}

TEST_CASE("element_order") {
  const auto g = grigorchuk();
  const Nucleus n = nucleus_of(g);
  CHECK(element_order(g, *n.model, w(g, "a"), 256) == 2u);
  CHECK(element_order(g, *n.model, w(g, "a*d"), 256) == 4u);
  CHECK(element_order(g, *n.model, w(g, "a*b"), 256) == 16u);
  CHECK(element_order(g, *n.model, Word{}, 256) == 1u);
  CHECK(element_order(g, *n.model, w(g, "a*b"), 8) == std::nullopt);

  const auto odo = builtin("adding_machine");
  const Nucleus no = nucleus_of(odo);
  CHECK(element_order(odo, *no.model, w(odo, "a"), 256) == std::nullopt);

  const auto gs = gupta_sidki();
  const Nucleus ngs = nucleus_of(gs);
  CHECK(element_order(gs, *ngs.model, w(gs, "a*a"), 243) == 3u);
  CHECK(element_order(gs, *ngs.model, w(gs, "a*t"), 243) == 9u);
  // lower bound from the action on level 3
  CHECK(level_permutation(gs, w(gs, "a*t"), 3).order() == 9);
}

TEST_CASE("orbits and Schreier graphs") {
  const auto g = grigorchuk();
  CHECK(orbit(g, v("11")).size() == 4);
  const auto odo = builtin("adding_machine");
  for (std::size_t n = 1; n <= 10; ++n) {
    Vertex x;
    x.path.assign(n, 0);
    CHECK(orbit(odo, x).size() == (std::size_t{1} << n));
  }
  const auto diag = builtin("diagonal");
  CHECK(orbit(diag, v("2121")) == std::vector<Vertex>{v("2121")});

  const SchreierGraph s = schreier_graph(g, 1);
  CHECK(s.vertices.size() == 2);
  CHECK(s.edges.size() == 8);
  CHECK(s.edges[0].to == 1);  // a moves 1 to 2
  for (std::size_t e = 1; e < 4; ++e) CHECK(s.edges[e].to == 0);
}

TEST_CASE("level quotient orders") {
  const auto g = grigorchuk();
  CHECK(level_quotient_order(g, 0) == 1);
  CHECK(level_quotient_order(g, 1) == 2);
  CHECK(level_quotient_order(g, 2) == 8);
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(BigInt(level_quotient_order_bfs(g, n)) == level_quotient_order(g, n));
  // level 2 images: a = (11 21)(12 22), b = c = (11 12), d = id
  const auto gens = level_generators(g, 2);
  CHECK(gens[0] == Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
  CHECK(gens[1] == Permutation::from_cycles(4, {{1, 2}}));
  CHECK(gens[2] == gens[1]);
  CHECK(gens[3].is_identity());

  CHECK(permutation_group_order({Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}),
                                 Permutation::from_cycles(5, {{1, 2}})}) == 120);
  CHECK(permutation_group_order({Permutation::from_cycles(6, {{1, 2, 3}}),
                                 Permutation::from_cycles(6, {{4, 5, 6}})}) == 9);
  LevelLimits tiny;
  tiny.max_elements = 100;
  CHECK_THROWS_AS(level_quotient_order_bfs(g, 4, tiny), ResourceLimit);
}

TEST_CASE("levelwise nucleus of G_omega") {
  const auto g = omega("(012)");
  auto r = similar_nucleus(g);
  REQUIRE(std::holds_alternative<SimilarNucleus>(r));
  const auto& n = std::get<SimilarNucleus>(r);
  CHECK(n.automaton.layers.size() == 3);
  for (std::size_t layer = 0; layer < 3; ++layer) {
    std::set<std::string> names;
    for (StateId s = 0; s < n.automaton.size(); ++s)
      if (n.automaton.layer_of[s] == layer) names.insert(n.automaton.state_name(s));
    CHECK(names == std::set<std::string>{"1", "a", "b", "c", "d"});
  }
  for (std::size_t level = 0; level < 4; ++level) {
    for (const char* t : {"a*a", "b*b", "c*c", "d*d", "b*c*d"}) CHECK(is_trivial(n, w(g, t), level));
    CHECK_FALSE(is_trivial(n, w(g, "a*b"), level));
  }
  CHECK(element_order(g, *n.model, w(g, "a*b"), 256) == 16u);

  // candidates per block, as a caller would supply them
  const std::vector<std::vector<Word>> candidates(
      3, std::vector<Word>{Word{}, w(g, "a"), w(g, "b"), w(g, "c"), w(g, "d")});
  auto supplied = similar_nucleus(g, {}, &candidates);
  REQUIRE(std::holds_alternative<SimilarNucleus>(supplied));
  CHECK(std::get<SimilarNucleus>(supplied).automaton.size() == 15);

  const std::vector<std::vector<Word>> short_set(3, std::vector<Word>{Word{}, w(g, "a")});
  CHECK(std::holds_alternative<NotContractingReport>(similar_nucleus(g, {}, &short_set)));
}
