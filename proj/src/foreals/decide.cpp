#include "polita/decide.hpp"

#include "polita/cad.hpp"
#include "polita/errors.hpp"

#include <unordered_map>

namespace polita {

namespace {

void collect_atoms(const FoPtr& f, std::vector<const FoFormula*>& out) {
  if (f->kind == FoKind::Less || f->kind == FoKind::Equal) out.push_back(f.get());
  for (const auto& a : f->args) collect_atoms(a, out);
}

class Checker {
 public:
  Checker(const FoPtr& prenex, int n) : n_(n) {
    const FoFormula* g = prenex.get();
    while (g->is_quantifier()) {
      quantifiers_.push_back(g->kind);
      g = g->args[0].get();
    }
    matrix_ = g;

    std::vector<const FoFormula*> atoms;
    collect_atoms(std::shared_ptr<const FoFormula>(prenex, matrix_), atoms);
    PolyFamily family(n_);
    for (const auto* a : atoms) family.insert(a->poly);
    cad_ = std::make_unique<Cad>(eliminate_all(family));
    for (const auto* a : atoms)
      if (!a->poly.is_constant()) refs_.emplace(a, cad_->family().find(a->poly).value());
  }

  bool run() { return check(Cad::kRoot, 0); }
  const Cad& cad() const { return *cad_; }

 private:
  bool check(NodeId cell, int level) {
    if (level == n_) return eval(matrix_, cell);
    const bool exists = quantifiers_[static_cast<std::size_t>(level)] == FoKind::Exists;
    const auto kids = cad_->children(cell);
    for (NodeId c : kids) {
      const bool v = check(c, level + 1);
      if (v == exists) return v;
    }
    return !exists;
  }

  int atom_sign(const FoFormula* a, NodeId cell) const {
    if (a->poly.is_constant()) return sign(a->poly.constant_value());
    return cad_->sign(cell, refs_.at(a));
  }

  bool eval(const FoFormula* f, NodeId cell) const {
    switch (f->kind) {
      case FoKind::True:
        return true;
      case FoKind::False:
        return false;
      case FoKind::Less:
        return atom_sign(f, cell) < 0;
      case FoKind::Equal:
        return atom_sign(f, cell) == 0;
      case FoKind::Not:
        return !eval(f->args[0].get(), cell);
      case FoKind::And:
        for (const auto& a : f->args)
          if (!eval(a.get(), cell)) return false;
        return true;
      case FoKind::Or:
        for (const auto& a : f->args)
          if (eval(a.get(), cell)) return true;
        return false;
      default:
        throw InternalError("decide: quantifier inside the matrix");
    }
  }

  int n_;
  std::vector<FoKind> quantifiers_;
  const FoFormula* matrix_ = nullptr;
  std::unique_ptr<Cad> cad_;
  std::unordered_map<const FoFormula*, FamilyRef> refs_;
};

}  // namespace

bool decide(const FoPtr& sentence, DecideStats* stats) {
  if (!is_sentence(sentence)) throw DomainError("decide: the formula has free variables");
  const FoPtr prenex = to_prenex(sentence);
  int n = 0;
  for (const FoFormula* g = prenex.get(); g->is_quantifier(); g = g->args[0].get()) ++n;
  Checker checker(prenex, n);
  const bool result = checker.run();
  if (stats) {
    stats->family_size = checker.cad().family().total_size();
    stats->cells = checker.cad().constructed_cells();
  }
  return result;
}

}  // namespace polita
