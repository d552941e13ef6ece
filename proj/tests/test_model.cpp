#include "doctest.h"

#include "polita/errors.hpp"
#include "polita/model.hpp"

#include <random>

using namespace polita;

namespace {

PolITA a0() { return load_model(POLITA_DATA_DIR "/a0.json"); }

Rational q(long p, long r = 1) {
  Rational out(p, r);
  out.canonicalize();
  return out;
}

std::size_t transition(const PolITA& a, const std::string& label) {
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    if (a.transitions[i].label == label) return i;
  FAIL("no transition labeled " << label);
  return 0;
}

// A one-transition automaton built from a JSON fragment for the transition.
std::string two_state_model(int from_level, int to_level, const std::string& transition_fields) {
  return R"({"clocks": 2, "states": [{"name": "p", "level": )" + std::to_string(from_level) +
         R"(, "initial": true}, {"name": "r", "level": )" + std::to_string(to_level) +
         R"(}], "transitions": [{"from": "p", "to": "r", "label": "t", )" + transition_fields + "}]}";
}

std::vector<std::string> issues_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ValidationError& e) {
    return e.issues();
  }
  return {};
}

bool zero_above_level(const PolITA& a, const Configuration& c) {
  for (int i = a.level(c.state); i < a.clocks; ++i)
    if (sgn(c.valuation[static_cast<std::size_t>(i)]) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("the sample automaton") {
  const PolITA a = a0();
  CHECK(validate(a).empty());
  CHECK(a.clocks == 2);
  REQUIRE(a.states.size() == 3);
  CHECK(a.level(*a.find_state("q0")) == 1);
  CHECK(a.level(*a.find_state("q1")) == 2);
  CHECK(a.level(*a.find_state("q2")) == 2);
  CHECK(a.initial == *a.find_state("q0"));
  CHECK(a.states[static_cast<std::size_t>(*a.find_state("q2"))].final);
  CHECK(a.alphabet() == std::vector<std::string>{"a", "a'", "b", "c"});

  // Default updates follow the level change.
  const auto ua = effective_update(a, a.transitions[transition(a, "a")]);
  CHECK(ua == std::vector<Poly>{Poly::variable(1), Poly()});
  const auto ureset = effective_update(a, a.transitions[transition(a, "a'")]);
  CHECK(ureset == std::vector<Poly>{Poly(), Poly()});
  const auto uc = effective_update(a, a.transitions[transition(a, "c")]);
  CHECK(uc == std::vector<Poly>{Poly::variable(1), Poly::variable(2)});

  // The serialized form parses back to the same automaton.
  const PolITA back = parse_model(model_to_json(a));
  CHECK(model_to_json(back) == model_to_json(a));
}

TEST_CASE("validation errors") {
  // Guard above the source level.
  auto issues = issues_of(two_state_model(1, 2, R"("guard": [{"poly": "x2 - 1", "rel": "<"}])"));
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].find("above the source level") != std::string::npos);
  CHECK(issues[0].find("transition 0 (p -> r, t)") != std::string::npos);

  // A level-decreasing transition must reset the clocks above the target level.
  issues = issues_of(two_state_model(2, 1, R"("update": {"x2": "x1"})"));
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].find("resets x2") != std::string::npos);

  // The active clock may only receive a polynomial in lower clocks.
  issues = issues_of(two_state_model(2, 2, R"("update": {"x2": "x2 + 1"})"));
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].find("x1..x1") != std::string::npos);
  CHECK(issues_of(two_state_model(2, 2, R"("update": {"x2": "x1^2 + 3"})")).empty());
  CHECK(issues_of(two_state_model(2, 2, R"("update": {"x2": "x2"})")).empty());
  CHECK(issues_of(two_state_model(1, 2, R"("update": {"x1": "x1 + 1"})")).size() == 1);
  // Lower clocks are kept and higher clocks reset.
  CHECK(issues_of(two_state_model(2, 2, R"("update": {"x1": "0"})")).size() == 1);
  CHECK(issues_of(two_state_model(1, 1, R"("update": {"x2": "1"})")).size() == 1);

  // Unknown names.
  CHECK(issues_of(two_state_model(1, 2, R"("update": {"x3": "0"})")).size() == 1);
  CHECK(issues_of(two_state_model(1, 2, R"("update": {"y": "0"})")).size() == 1);
  CHECK(issues_of(two_state_model(1, 2, R"("guard": [{"poly": "x3", "rel": "<"}])")).size() == 2);
  issues = issues_of(R"({"clocks": 1, "states": [{"name": "p", "level": 1, "initial": true}],
                         "transitions": [{"from": "p", "to": "nowhere"}]})");
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].find("unknown state 'nowhere'") != std::string::npos);

  // Duplicate names, bad levels, no initial state.
  CHECK(issues_of(R"({"clocks": 1, "states": [{"name": "p", "level": 1, "initial": true}, {"name": "p", "level": 1}]})")
            .size() == 1);
  CHECK(issues_of(R"({"clocks": 1, "states": [{"name": "p", "level": 2, "initial": true}]})").size() == 1);
  CHECK(issues_of(R"({"clocks": 1, "states": [{"name": "p", "level": 1}]})").size() == 1);

  // Malformed documents are parse errors.
  CHECK_THROWS_AS(parse_model("{"), ParseError);
  CHECK_THROWS_AS(parse_model(R"({"states": []})"), ParseError);
  CHECK_THROWS_AS(parse_model(two_state_model(1, 2, R"("guard": [{"poly": "x1", "rel": "~"}])")), ParseError);
  CHECK_THROWS_AS(parse_model(two_state_model(1, 2, R"("guard": [{"poly": "x1 +", "rel": "<"}])")), ParseError);
}

TEST_CASE("relations") {
  CHECK(parse_relation("<=") == Relation::LessEq);
  CHECK(parse_relation("==") == Relation::Equal);
  for (Relation r : {Relation::Less, Relation::LessEq, Relation::Equal, Relation::GreaterEq, Relation::Greater})
    CHECK(parse_relation(to_string(r)) == r);
  CHECK(holds(Relation::LessEq, 0));
  CHECK_FALSE(holds(Relation::Less, 0));
  CHECK(holds(Relation::Greater, 1));
  CHECK_FALSE(holds(Relation::GreaterEq, -1));
}

TEST_CASE("time steps") {
  const PolITA a = a0();
  const int q0 = *a.find_state("q0"), q1 = *a.find_state("q1");
  CHECK(time_step(a, {q0, {q(0), q(0)}}, q(6, 5)) == Configuration{q0, {q(6, 5), q(0)}});
  CHECK(time_step(a, {q1, {q(6, 5), q(0)}}, q(11, 10)) == Configuration{q1, {q(6, 5), q(11, 10)}});
  const Configuration c{q1, {q(3, 7), q(2)}};
  CHECK(time_step(a, c, q(0)) == c);
  CHECK_THROWS_AS(time_step(a, c, q(-1, 3)), DomainError);
}

TEST_CASE("discrete steps") {
  const PolITA a = a0();
  const int q0 = *a.find_state("q0"), q1 = *a.find_state("q1"), q2 = *a.find_state("q2");

  // x1 = 6/5: 36/25 <= 11/5.
  auto step = discrete_step(a, {q0, {q(6, 5), q(0)}}, transition(a, "a"));
  REQUIRE(step.fired());
  CHECK(*step.next == Configuration{q1, {q(6, 5), q(0)}});

  // (2*6/5 - 1)*(11/10)^2 = 847/500 > 1.
  const Poly b = a.transitions[transition(a, "b")].guard[0].poly + Poly(1L);
  CHECK(b.evaluate(std::vector<Rational>{q(6, 5), q(11, 10)}) == q(847, 500));
  step = discrete_step(a, {q1, {q(6, 5), q(11, 10)}}, transition(a, "b"));
  REQUIRE(step.fired());
  CHECK(*step.next == Configuration{q2, {q(6, 5), q(11, 10)}});

  // x1 = 2: 4 > 3, so a is refused on its only conjunct and a' fires.
  step = discrete_step(a, {q0, {q(2), q(0)}}, transition(a, "a"));
  CHECK_FALSE(step.fired());
  CHECK(step.failed_conjunct == std::size_t{0});
  step = discrete_step(a, {q0, {q(2), q(0)}}, transition(a, "a'"));
  REQUIRE(step.fired());
  CHECK(*step.next == Configuration{q0, {q(0), q(0)}});

  CHECK_THROWS_AS(discrete_step(a, {q1, {q(0), q(0)}}, transition(a, "a")), DomainError);
}

TEST_CASE("updates are simultaneous") {
  const std::vector<Poly> swap{Poly(), Poly::variable(1)};  // x1 := 0, x2 := x1
  CHECK(apply_update(swap, {q(5, 2), q(7)}) == std::vector<Rational>{q(0), q(5, 2)});
  // Sequential reading would give x2 = 0.
  const PolITA a = parse_model(two_state_model(2, 2, R"("update": {"x2": "x1^2 - 1"})"));
  const auto step = discrete_step(a, {0, {q(3), q(9, 4)}}, 0);
  REQUIRE(step.fired());
  CHECK(step.next->valuation == std::vector<Rational>{q(3), q(8)});
}

TEST_CASE("timed words") {
  const PolITA a = a0();
  const auto word = parse_timed_word("(a,6/5)(b,23/10)(c,13/5)(b,33/10)(c,39/10)(b,51/10)");
  REQUIRE(word.size() == 6);
  CHECK(word[1] == TimedLetter{"b", q(23, 10)});
  CHECK(parse_timed_word("(a,1.2) (b,2.3)") == std::vector<TimedLetter>{{"a", q(6, 5)}, {"b", q(23, 10)}});
  CHECK(to_string(word) == "(a,6/5)(b,23/10)(c,13/5)(b,33/10)(c,39/10)(b,51/10)");

  const auto accepted = run_timed_word(a, word);
  CHECK(accepted.accepted);
  CHECK_FALSE(accepted.truncated);
  REQUIRE_FALSE(accepted.run.empty());
  CHECK(accepted.run.back().state == *a.find_state("q2"));
  CHECK(accepted.run.back().valuation == std::vector<Rational>{q(6, 5), q(39, 10)});
  for (const auto& c : accepted.run) CHECK(zero_above_level(a, c));

  CHECK_FALSE(run_timed_word(a, parse_timed_word("(a,2)")).accepted);
  CHECK_FALSE(run_timed_word(a, {}).accepted);
  // Leaving too late for c: x2 = 4.5 > 5 - 36/25.
  CHECK_FALSE(run_timed_word(a, parse_timed_word("(a,6/5)(b,23/10)(c,57/10)(b,6)")).accepted);
  // a' resets x1, after which a is possible again.
  CHECK(run_timed_word(a, parse_timed_word("(a',2)(a,3)(b,5)")).accepted);

  CHECK_THROWS_AS(run_timed_word(a, parse_timed_word("(a,2)(b,1)")), DomainError);
  CHECK_THROWS_AS(parse_timed_word("(a 2)"), ParseError);
  CHECK_THROWS_AS(parse_timed_word("a,2"), ParseError);
  CHECK_THROWS_AS(parse_timed_word("(,2)"), ParseError);
}

TEST_CASE("silent moves") {
  // p --eps, x1 >= 1--> r --eps--> s(final); the word is empty.
  const PolITA a = parse_model(R"({"clocks": 1, "states": [
      {"name": "p", "level": 1, "initial": true}, {"name": "r", "level": 1}, {"name": "s", "level": 1, "final": true}],
    "transitions": [
      {"from": "p", "to": "r", "guard": [{"poly": "x1 - 1", "rel": ">="}]},
      {"from": "r", "to": "s"},
      {"from": "s", "to": "p", "label": "z"}]})");
  CHECK_FALSE(run_timed_word(a, {}).accepted);
  // At time 0 the guard blocks the silent moves, so z cannot be read.
  CHECK_FALSE(run_timed_word(a, parse_timed_word("(z,0)")).accepted);
  // At time 1 the silent moves reach s, z leads back to p, and the silent moves reach s again.
  const auto late = run_timed_word(a, parse_timed_word("(z,1)"));
  CHECK(late.accepted);
  REQUIRE(late.run.size() >= 5);
  CHECK(late.run.back().state == *a.find_state("s"));

  // A silent self-loop terminates thanks to the visited set.
  const PolITA loop = parse_model(R"({"clocks": 1, "states": [{"name": "p", "level": 1, "initial": true, "final": true}],
    "transitions": [{"from": "p", "to": "p"}]})");
  const auto r = run_timed_word(loop, parse_timed_word("(z,1)"));
  CHECK_FALSE(r.accepted);
  CHECK_FALSE(r.truncated);
  CHECK(run_timed_word(loop, {}).accepted);

  // Branching silent moves exceed a tiny expansion bound.
  const PolITA fan = parse_model(R"({"clocks": 1, "states": [
      {"name": "p", "level": 1, "initial": true}, {"name": "r", "level": 1}, {"name": "s", "level": 1}],
    "transitions": [{"from": "p", "to": "r"}, {"from": "p", "to": "s"}, {"from": "r", "to": "s", "update": {"x1": "1"}}]})");
  const auto bounded = run_timed_word(fan, {}, {.max_expansions = 2});
  CHECK_FALSE(bounded.accepted);
  CHECK(bounded.truncated);
  const auto unbounded = run_timed_word(fan, {});
  CHECK_FALSE(unbounded.truncated);
  CHECK(unbounded.expansions == 4);
}

TEST_CASE("property: additivity and the zero-above-level invariant") {
  const PolITA a = a0();
  std::mt19937 rng(73);
  std::uniform_int_distribution<int> num(0, 40), den(1, 12);
  for (int run = 0; run < 200; ++run) {
    Configuration c = initial_configuration(a);
    for (int step = 0; step < 12; ++step) {
      const Rational d1 = q(num(rng), den(rng)), d2 = q(num(rng), den(rng));
      const Rational d = d1 + d2;
      CHECK(time_step(a, c, d) == time_step(a, time_step(a, c, d1), d2));
      c = time_step(a, c, d1);
      CHECK(zero_above_level(a, c));
      std::vector<Configuration> next;
      for (std::size_t t : a.outgoing(c.state)) {
        const auto s = discrete_step(a, c, t);
        if (!s.fired()) continue;
        CHECK(satisfies(a.transitions[t].guard, c.valuation));
        next.push_back(*s.next);
      }
      if (next.empty()) continue;
      c = next[rng() % next.size()];
      CHECK(zero_above_level(a, c));
    }
  }
}
