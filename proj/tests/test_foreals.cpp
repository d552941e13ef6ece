#include "doctest.h"
#include "oracles.hpp"
#include "random_poly.hpp"

#include "polita/decide.hpp"
#include "polita/errors.hpp"

#include <chrono>
#include <random>

using namespace polita;
using namespace polita::oracles;

namespace {

bool decide_text(const std::string& s) { return decide(parse_sentence(s)); }

const char* const kRelText[] = {"<", "=", ">", "<=", ">=", "!="};

// A random single-variable sentence "exists x1 . and_i p_i rel_i 0" with its oracle verdict.
std::pair<std::string, bool> random_univariate_sentence(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 3), rel(0, 5), deg(1, 4), root(-4, 4), shape(0, 2);
  std::vector<Dense> dense;
  std::vector<int> rels;
  std::string text = "exists x1 . ";
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Poly p;
    if (shape(rng) == 0) {
      p = polita::testing::random_poly_exact(rng, 1, deg(rng), 0, 4);
    } else {
      // Products of linear factors give sentences whose truth hinges on roots.
      p = Poly(1L);
      const int d = deg(rng);
      for (int j = 0; j < d; ++j) p *= Poly::variable(1) - Poly(Rational(root(rng), 1 + static_cast<int>(rng() % 2)));
      if (shape(rng) == 0) p = -p;
    }
    const int r = rel(rng);
    dense.push_back(to_dense(p));
    // Oracle relation codes: -1 <, 0 =, 1 >, 2 <=, 3 >=, 4 !=.
    static const int kCode[] = {-1, 0, 1, 2, 3, 4};
    rels.push_back(kCode[r]);
    if (i) text += " and ";
    text += "(" + p.to_string() + ") " + kRelText[r] + " 0";
  }
  return {text, exists_univariate(dense, rels)};
}

}  // namespace

TEST_CASE("parsing and renaming apart") {
  const FoPtr f = parse_sentence("exists x . (x > 0 and exists x . x < 0)");
  CHECK(is_sentence(f));
  CHECK(decide(f));
  CHECK(to_string(to_prenex(f)) == "exists x1 . exists x2 . (-x1 < 0) and (x2 < 0)");
  CHECK_THROWS_AS(parse_sentence("exists x . x + y = 0"), ParseError);
  CHECK_THROWS_AS(parse_sentence("exists x . x +"), ParseError);
  CHECK_THROWS_AS(parse_sentence("exists . x = 0"), ParseError);
  CHECK_THROWS_AS(parse_sentence("exists x . x = 0 )"), ParseError);
  CHECK(decide_text("forall a, b . (a - b)^2 >= 0"));
  CHECK(decide_text("exists x . ((x + 1)*(x - 1) = 0 and x > 0)"));
  CHECK(decide_text("exists x . (x = 2) -> false") == true);
  CHECK_FALSE(decide_text("forall x . x = 2 -> false"));
  CHECK(decide_text("true"));
  CHECK_FALSE(decide_text("1 > 2"));
}

TEST_CASE("prenex transformation") {
  // not exists x . phi  ->  forall x . not phi
  const FoPtr neg = to_prenex(parse_sentence("not exists x . x*x < 2"));
  CHECK(neg->kind == FoKind::Forall);
  CHECK(neg->args[0]->kind == FoKind::Not);
  // Already prenex input is unchanged.
  const FoPtr pre = parse_sentence("forall x1 . exists x2 . x1*x2 - 1 = 0 or x1 = 0");
  CHECK(is_prenex(pre));
  CHECK(to_string(to_prenex(pre)) == to_string(pre));
  // (exists x . phi) and psi  ->  exists x . (phi and psi)
  const FoPtr scoped = to_prenex(parse_sentence("forall y . ((exists x . x*x = y) and y >= 0)"));
  CHECK(is_prenex(scoped));
  CHECK(scoped->kind == FoKind::Forall);
  CHECK(scoped->args[0]->kind == FoKind::Exists);
  CHECK(scoped->args[0]->args[0]->kind == FoKind::And);
  CHECK_FALSE(is_prenex(parse_sentence("forall y . ((exists x . x*x = y) and y >= 0)")));
}

TEST_CASE("decide goldens") {
  CHECK(decide_text("exists x . x*x - 2 = 0"));
  CHECK(decide_text("forall x . (not (x*x + 1 < 0) and not (x*x + 1 = 0))"));
  const auto start = std::chrono::steady_clock::now();
  CHECK_FALSE(decide_text("exists x1 . exists x2 . exists x3 . (x1^2 + x2^2 + x3^2 - 1 = 0 and not (x1 < 2))"));
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 30.0);
  CHECK(decide_text("exists x1 . exists x2 . exists x3 . (x1^2 + x2^2 + x3^2 - 1 = 0 and x1 = 1)"));
  CHECK_FALSE(decide_text("exists x . x*x + 1 = 0"));
  CHECK(decide_text("forall x . exists y . y*y = x*x"));
  CHECK_FALSE(decide_text("forall x . exists y . y*y = x"));
  CHECK(decide_text("forall x . exists y . y*y*y = x"));
  CHECK(decide_text("exists x . forall y . x*y^2 >= 0"));
}

TEST_CASE("property: single-variable sentences agree with root isolation") {
  std::mt19937 rng(61);
  int agreed = 0, truths = 0;
  for (int i = 0; i < 50; ++i) {
    const auto [text, expected] = random_univariate_sentence(rng);
    INFO(text);
    const bool got = decide_text(text);
    CHECK(got == expected);
    agreed += got == expected;
    truths += expected;
  }
  CHECK(agreed == 50);
  // Both verdicts are exercised.
  CHECK(truths > 5);
  CHECK(truths < 45);
}

TEST_CASE("property: negation and excluded middle") {
  std::mt19937 rng(67);
  int truths = 0;
  for (int i = 0; i < 16; ++i) {
    // Quadratic in x2 with coefficients linear in x1 keeps the doubled sentences tractable.
    const Poly p = polita::testing::random_poly_exact(rng, 2, 2, 1, 3);
    const Poly q = polita::testing::random_poly(rng, 2, 1, 3);
    const std::string quant = i % 2 ? "forall x1 . exists x2 . " : "exists x1 . forall x2 . ";
    const std::string body = "(" + p.to_string() + " < 0 or " + q.to_string() + " = 0)";
    INFO(body);
    const bool phi = decide_text(quant + body);
    truths += phi;
    CHECK(decide_text("not (" + quant + body + ")") == !phi);
    CHECK_FALSE(decide_text("(" + quant + body + ") and not (" + quant + body + ")"));
    CHECK(decide_text("(" + quant + body + ") or not (" + quant + body + ")"));
  }
  CHECK(truths > 0);
  CHECK(truths < 16);
}
