#include "polita/formula.hpp"

#include "polita/errors.hpp"
#include "polita/lexer.hpp"

#include <map>
#include <set>

namespace polita {

FoPtr FoFormula::constant(bool value) {
  auto f = std::make_shared<FoFormula>();
  f->kind = value ? FoKind::True : FoKind::False;
  return f;
}

FoPtr FoFormula::less(Poly p) {
  auto f = std::make_shared<FoFormula>();
  f->kind = FoKind::Less;
  f->poly = std::move(p);
  return f;
}

FoPtr FoFormula::equal(Poly p) {
  auto f = std::make_shared<FoFormula>();
  f->kind = FoKind::Equal;
  f->poly = std::move(p);
  return f;
}

FoPtr FoFormula::negation(FoPtr g) {
  auto f = std::make_shared<FoFormula>();
  f->kind = FoKind::Not;
  f->args.push_back(std::move(g));
  return f;
}

namespace {

FoPtr junction(FoKind kind, std::vector<FoPtr> fs) {
  if (fs.empty()) return FoFormula::constant(kind == FoKind::And);
  if (fs.size() == 1) return fs.front();
  auto f = std::make_shared<FoFormula>();
  f->kind = kind;
  f->args = std::move(fs);
  return f;
}

}  // namespace

FoPtr FoFormula::conjunction(std::vector<FoPtr> fs) { return junction(FoKind::And, std::move(fs)); }
FoPtr FoFormula::disjunction(std::vector<FoPtr> fs) { return junction(FoKind::Or, std::move(fs)); }

FoPtr FoFormula::quantified(FoKind q, int var, FoPtr body) {
  if (q != FoKind::Exists && q != FoKind::Forall) throw DomainError("quantified: not a quantifier");
  if (var < 1) throw DomainError("quantified: variable index must be positive");
  auto f = std::make_shared<FoFormula>();
  f->kind = q;
  f->var = var;
  f->args.push_back(std::move(body));
  return f;
}

FoPtr comparison(const Poly& lhs, std::string_view rel, const Poly& rhs) {
  const Poly d = lhs - rhs;
  if (rel == "<") return FoFormula::less(d);
  if (rel == ">") return FoFormula::less(-d);
  if (rel == "=" || rel == "==") return FoFormula::equal(d);
  if (rel == "<=") return FoFormula::disjunction({FoFormula::less(d), FoFormula::equal(d)});
  if (rel == ">=") return FoFormula::negation(FoFormula::less(d));
  if (rel == "!=" || rel == "<>") return FoFormula::negation(FoFormula::equal(d));
  throw ParseError("unknown relation '" + std::string(rel) + "'");
}

// ============================================================================
// Parser
// ============================================================================

namespace {

const std::set<std::string> kKeywords{"exists", "forall", "and", "or", "not", "true", "false", "implies"};

class SentenceParser {
 public:
  explicit SentenceParser(std::string_view text)
      : ts_(text, [this](const std::string& name) { return resolve(name); }) {}

  FoPtr parse() {
    FoPtr f = formula();
    if (!ts_.at_end()) ts_.fail("unexpected trailing input");
    return f;
  }

 private:
  int resolve(const std::string& name) {
    if (kKeywords.count(name)) throw ParseError("keyword '" + name + "' used as a variable");
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return it->second;
    throw ParseError("free variable '" + name + "' (sentences must be closed)");
  }

  FoPtr formula() {
    if (ts_.peek().text == "exists" || ts_.peek().text == "forall") return quantifier();
    return implication();
  }

  FoPtr quantifier() {
    const FoKind q = ts_.next().text == "exists" ? FoKind::Exists : FoKind::Forall;
    std::vector<int> vars;
    while (ts_.peek().kind == Token::Kind::Ident && !kKeywords.count(ts_.peek().text)) {
      const std::string name = ts_.next().text;
      const int id = ++counter_;
      scope_.emplace_back(name, id);
      vars.push_back(id);
      ts_.accept(",");
    }
    if (vars.empty()) ts_.fail("expected a variable name after quantifier");
    ts_.expect(".");
    FoPtr body = formula();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      body = FoFormula::quantified(q, *it, body);
      scope_.pop_back();
    }
    return body;
  }

  FoPtr implication() {
    FoPtr lhs = disjunction();
    if (ts_.accept("->") || ts_.accept("implies")) {
      FoPtr rhs = ts_.peek().text == "exists" || ts_.peek().text == "forall" ? quantifier() : implication();
      return FoFormula::disjunction({FoFormula::negation(lhs), rhs});
    }
    return lhs;
  }

  FoPtr disjunction() {
    std::vector<FoPtr> parts{conjunction()};
    while (ts_.accept("or") || ts_.accept("||")) parts.push_back(conjunction());
    return FoFormula::disjunction(std::move(parts));
  }

  FoPtr conjunction() {
    std::vector<FoPtr> parts{unary()};
    while (ts_.accept("and") || ts_.accept("&&")) parts.push_back(unary());
    return FoFormula::conjunction(std::move(parts));
  }

  FoPtr unary() {
    if (ts_.accept("not") || ts_.accept("!")) return FoFormula::negation(unary());
    if (ts_.peek().text == "exists" || ts_.peek().text == "forall") return quantifier();
    if (ts_.accept("true")) return FoFormula::constant(true);
    if (ts_.accept("false")) return FoFormula::constant(false);
    const std::size_t start = ts_.pos();
    if (ts_.peek().text == "(") {
      // Either a parenthesized formula or an expression starting with '('.
      try {
        return atom();
      } catch (const ParseError&) {
        ts_.set_pos(start);
      }
      ts_.expect("(");
      FoPtr inner = formula();
      ts_.expect(")");
      return inner;
    }
    return atom();
  }

  FoPtr atom() {
    const Poly lhs = ts_.parse_expression();
    if (ts_.peek().text == "<" && ts_.peek(1).text == ">") {
      ts_.next();
      ts_.next();
      return comparison(lhs, "<>", ts_.parse_expression());
    }
    static const char* const kRelations[] = {"<=", ">=", "==", "!=", "<", ">", "="};
    for (const char* rel : kRelations)
      if (ts_.accept(rel)) return comparison(lhs, rel, ts_.parse_expression());
    ts_.fail("expected a comparison operator");
  }

  TokenStream ts_;
  std::vector<std::pair<std::string, int>> scope_;
  int counter_ = 0;
};

}  // namespace

FoPtr parse_sentence(std::string_view text) { return SentenceParser(text).parse(); }

// ============================================================================
// Structure
// ============================================================================

namespace {

bool occurs(const Poly& p, int v) {
  if (p.main_var() < v) return false;
  if (p.main_var() == v) return true;
  for (const auto& c : p.raw_coeffs())
    if (occurs(c, v)) return true;
  return false;
}

bool closed_under(const FoPtr& f, std::set<int>& bound) {
  switch (f->kind) {
    case FoKind::True:
    case FoKind::False:
      return true;
    case FoKind::Less:
    case FoKind::Equal:
      for (int v = 1; v <= f->poly.main_var(); ++v)
        if (occurs(f->poly, v) && !bound.count(v)) return false;
      return true;
    case FoKind::Exists:
    case FoKind::Forall: {
      const bool fresh = bound.insert(f->var).second;
      const bool ok = closed_under(f->args[0], bound);
      if (fresh) bound.erase(f->var);
      return ok;
    }
    default:
      for (const auto& a : f->args)
        if (!closed_under(a, bound)) return false;
      return true;
  }
}

bool quantifier_free(const FoPtr& f) {
  if (f->is_quantifier()) return false;
  for (const auto& a : f->args)
    if (!quantifier_free(a)) return false;
  return true;
}

struct Prenex {
  std::vector<std::pair<FoKind, int>> prefix;
  FoPtr matrix;
};

FoKind dual(FoKind q) { return q == FoKind::Exists ? FoKind::Forall : FoKind::Exists; }

Prenex pull(const FoPtr& f) {
  switch (f->kind) {
    case FoKind::Exists:
    case FoKind::Forall: {
      Prenex inner = pull(f->args[0]);
      inner.prefix.insert(inner.prefix.begin(), {f->kind, f->var});
      return inner;
    }
    case FoKind::Not: {
      Prenex inner = pull(f->args[0]);
      for (auto& [q, v] : inner.prefix) q = dual(q);
      inner.matrix = FoFormula::negation(inner.matrix);
      return inner;
    }
    case FoKind::And:
    case FoKind::Or: {
      Prenex out;
      std::vector<FoPtr> matrices;
      for (const auto& a : f->args) {
        Prenex inner = pull(a);
        out.prefix.insert(out.prefix.end(), inner.prefix.begin(), inner.prefix.end());
        matrices.push_back(inner.matrix);
      }
      out.matrix = f->kind == FoKind::And ? FoFormula::conjunction(std::move(matrices))
                                          : FoFormula::disjunction(std::move(matrices));
      return out;
    }
    default:
      return {{}, f};
  }
}

FoPtr rename_matrix(const FoPtr& f, const std::vector<int>& mapping) {
  switch (f->kind) {
    case FoKind::Less:
      return FoFormula::less(f->poly.rename(mapping));
    case FoKind::Equal:
      return FoFormula::equal(f->poly.rename(mapping));
    case FoKind::Not:
      return FoFormula::negation(rename_matrix(f->args[0], mapping));
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoPtr> args;
      for (const auto& a : f->args) args.push_back(rename_matrix(a, mapping));
      return f->kind == FoKind::And ? FoFormula::conjunction(std::move(args)) : FoFormula::disjunction(std::move(args));
    }
    default:
      return f;
  }
}

int max_index(const FoPtr& f) {
  int m = f->var;
  if (f->kind == FoKind::Less || f->kind == FoKind::Equal) m = std::max(m, f->poly.main_var());
  for (const auto& a : f->args) m = std::max(m, max_index(a));
  return m;
}

}  // namespace

bool is_sentence(const FoPtr& f) {
  std::set<int> bound;
  return closed_under(f, bound);
}

bool is_prenex(const FoPtr& f) {
  const FoFormula* g = f.get();
  while (g->is_quantifier()) g = g->args[0].get();
  return quantifier_free(std::shared_ptr<const FoFormula>(f, g));
}

FoPtr to_prenex(const FoPtr& f) {
  Prenex p = pull(f);
  std::set<int> seen;
  for (const auto& [q, v] : p.prefix)
    if (!seen.insert(v).second) throw DomainError("to_prenex: quantifier index " + std::to_string(v) + " bound twice");
  std::vector<int> mapping(static_cast<std::size_t>(max_index(f)) + 1, 0);
  for (std::size_t i = 0; i < mapping.size(); ++i) mapping[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < p.prefix.size(); ++i) mapping[static_cast<std::size_t>(p.prefix[i].second)] = static_cast<int>(i) + 1;
  FoPtr out = rename_matrix(p.matrix, mapping);
  for (std::size_t i = p.prefix.size(); i-- > 0;) out = FoFormula::quantified(p.prefix[i].first, static_cast<int>(i) + 1, out);
  return out;
}

std::string to_string(const FoPtr& f) {
  switch (f->kind) {
    case FoKind::True:
      return "true";
    case FoKind::False:
      return "false";
    case FoKind::Less:
      return f->poly.to_string() + " < 0";
    case FoKind::Equal:
      return f->poly.to_string() + " = 0";
    case FoKind::Not:
      return "not (" + to_string(f->args[0]) + ")";
    case FoKind::And:
    case FoKind::Or: {
      std::string out;
      for (const auto& a : f->args) {
        if (!out.empty()) out += f->kind == FoKind::And ? " and " : " or ";
        out += "(" + to_string(a) + ")";
      }
      return out;
    }
    case FoKind::Exists:
    case FoKind::Forall:
      return std::string(f->kind == FoKind::Exists ? "exists" : "forall") + " x" + std::to_string(f->var) + " . " +
             to_string(f->args[0]);
  }
  return "";
}

}  // namespace polita
