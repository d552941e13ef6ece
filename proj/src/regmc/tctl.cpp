#include "polita/tctl.hpp"

#include "polita/errors.hpp"
#include "polita/lexer.hpp"

#include <set>

namespace polita {

namespace {

std::shared_ptr<TctlFormula> make(TctlKind kind) {
  auto f = std::make_shared<TctlFormula>();
  f->kind = kind;
  return f;
}

TctlPtr junction(TctlKind kind, std::vector<TctlPtr> fs) {
  if (fs.empty()) return TctlFormula::constant(kind == TctlKind::And);
  if (fs.size() == 1) return fs.front();
  auto f = make(kind);
  f->args = std::move(fs);
  return f;
}

TctlPtr until(TctlKind kind, TctlPtr hold, TctlPtr goal) {
  auto f = make(kind);
  f->args = {std::move(hold), std::move(goal)};
  return f;
}

}  // namespace

TctlPtr TctlFormula::constant(bool value) { return make(value ? TctlKind::True : TctlKind::False); }

TctlPtr TctlFormula::proposition(std::string name) {
  auto f = make(TctlKind::Prop);
  f->prop = std::move(name);
  return f;
}

TctlPtr TctlFormula::constraint(Constraint c) {
  auto f = make(TctlKind::Atom);
  f->atom = std::move(c);
  return f;
}

TctlPtr TctlFormula::negation(TctlPtr g) {
  auto f = make(TctlKind::Not);
  f->args.push_back(std::move(g));
  return f;
}

TctlPtr TctlFormula::conjunction(std::vector<TctlPtr> fs) { return junction(TctlKind::And, std::move(fs)); }
TctlPtr TctlFormula::disjunction(std::vector<TctlPtr> fs) { return junction(TctlKind::Or, std::move(fs)); }
TctlPtr TctlFormula::exists_until(TctlPtr hold, TctlPtr goal) {
  return until(TctlKind::ExistsUntil, std::move(hold), std::move(goal));
}
TctlPtr TctlFormula::all_until(TctlPtr hold, TctlPtr goal) {
  return until(TctlKind::AllUntil, std::move(hold), std::move(goal));
}

TctlPtr exists_finally(TctlPtr f) { return TctlFormula::exists_until(TctlFormula::constant(true), std::move(f)); }
TctlPtr all_finally(TctlPtr f) { return TctlFormula::all_until(TctlFormula::constant(true), std::move(f)); }
TctlPtr exists_globally(TctlPtr f) {
  return TctlFormula::negation(all_finally(TctlFormula::negation(std::move(f))));
}
TctlPtr all_globally(TctlPtr f) {
  return TctlFormula::negation(exists_finally(TctlFormula::negation(std::move(f))));
}

// ============================================================================
// Parser
// ============================================================================

namespace {

const std::set<std::string> kKeywords{"not", "and", "or", "true", "false", "EF", "AF", "EG", "AG", "U"};

bool is_clock(const std::string& name) {
  try {
    resolve_indexed_variable(name);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

class TctlParser {
 public:
  explicit TctlParser(std::string_view text) : ts_(text, resolve_indexed_variable) {}

  TctlPtr parse() {
    TctlPtr f = formula();
    if (!ts_.at_end()) ts_.fail("unexpected trailing input");
    return f;
  }

 private:
  TctlPtr formula() {
    TctlPtr lhs = disjunction();
    if (ts_.accept("->")) return TctlFormula::disjunction({TctlFormula::negation(lhs), formula()});
    return lhs;
  }

  TctlPtr disjunction() {
    std::vector<TctlPtr> parts{conjunction()};
    while (ts_.accept("or") || ts_.accept("||")) parts.push_back(conjunction());
    return TctlFormula::disjunction(std::move(parts));
  }

  TctlPtr conjunction() {
    std::vector<TctlPtr> parts{unary()};
    while (ts_.accept("and") || ts_.accept("&&")) parts.push_back(unary());
    return TctlFormula::conjunction(std::move(parts));
  }

  TctlPtr unary() {
    const Token& t = ts_.peek();
    if (ts_.accept("not") || ts_.accept("!")) return TctlFormula::negation(unary());
    if (t.kind == Token::Kind::Ident) {
      if (ts_.accept("EF")) return exists_finally(unary());
      if (ts_.accept("AF")) return all_finally(unary());
      if (ts_.accept("EG")) return exists_globally(unary());
      if (ts_.accept("AG")) return all_globally(unary());
      if ((t.text == "E" || t.text == "A") && ts_.peek(1).text == "[") {
        const bool exists = ts_.next().text == "E";
        ts_.expect("[");
        TctlPtr hold = formula();
        ts_.expect("U");
        TctlPtr goal = formula();
        ts_.expect("]");
        return exists ? TctlFormula::exists_until(hold, goal) : TctlFormula::all_until(hold, goal);
      }
      if (ts_.accept("true")) return TctlFormula::constant(true);
      if (ts_.accept("false")) return TctlFormula::constant(false);
      if (!is_clock(t.text)) {
        if (kKeywords.count(t.text)) ts_.fail("unexpected keyword");
        return TctlFormula::proposition(ts_.next().text);
      }
    }
    if (t.text == "(") {
      // Either a parenthesized formula or a constraint starting with '('.
      const std::size_t start = ts_.pos();
      try {
        return atom();
      } catch (const ParseError&) {
        ts_.set_pos(start);
      }
      ts_.expect("(");
      TctlPtr inner = formula();
      ts_.expect(")");
      return inner;
    }
    return atom();
  }

  TctlPtr atom() {
    const Poly lhs = ts_.parse_expression();
    static const char* const kRelations[] = {"<=", ">=", "==", "!=", "<", ">", "="};
    for (const char* rel : kRelations) {
      if (!ts_.accept(rel)) continue;
      const Poly d = lhs - ts_.parse_expression();
      if (std::string_view(rel) == "!=")
        return TctlFormula::negation(TctlFormula::constraint({d, Relation::Equal}));
      return TctlFormula::constraint({d, parse_relation(rel)});
    }
    ts_.fail("expected a comparison operator");
  }

  TokenStream ts_;
};

void collect_atoms(const TctlPtr& f, std::vector<Poly>& out) {
  if (f->kind == TctlKind::Atom) out.push_back(f->atom.poly);
  for (const auto& a : f->args) collect_atoms(a, out);
}

}  // namespace

TctlPtr parse_tctl(std::string_view text) { return TctlParser(text).parse(); }

std::string to_string(const TctlPtr& f) {
  switch (f->kind) {
    case TctlKind::True:
      return "true";
    case TctlKind::False:
      return "false";
    case TctlKind::Prop:
      return f->prop;
    case TctlKind::Atom:
      return f->atom.poly.to_string() + " " + to_string(f->atom.rel) + " 0";
    case TctlKind::Not:
      return "not (" + to_string(f->args[0]) + ")";
    case TctlKind::And:
    case TctlKind::Or: {
      std::string out;
      for (const auto& a : f->args) {
        if (!out.empty()) out += f->kind == TctlKind::And ? " and " : " or ";
        out += "(" + to_string(a) + ")";
      }
      return out;
    }
    case TctlKind::ExistsUntil:
    case TctlKind::AllUntil:
      return std::string(f->kind == TctlKind::ExistsUntil ? "E" : "A") + " [" + to_string(f->args[0]) + " U " +
             to_string(f->args[1]) + "]";
  }
  return "";
}

bool well_scoped(const TctlPtr& f, int clocks) {
  for (const Poly& p : atom_polynomials(f))
    if (p.main_var() > clocks) return false;
  return true;
}

std::vector<Poly> atom_polynomials(const TctlPtr& f) {
  std::vector<Poly> out;
  collect_atoms(f, out);
  return out;
}

}  // namespace polita
