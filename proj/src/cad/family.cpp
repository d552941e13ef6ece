#include "polita/family.hpp"

#include "polita/errors.hpp"

namespace polita {

PolyFamily::PolyFamily(int dimension)
    : levels_(static_cast<std::size_t>(dimension)), index_(static_cast<std::size_t>(dimension)) {}

std::size_t PolyFamily::total_size() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

std::optional<FamilyRef> PolyFamily::insert(const Poly& p) {
  if (p.is_constant()) return std::nullopt;
  return insert_at(p.main_var(), p);
}

std::optional<FamilyRef> PolyFamily::insert_at(int level, const Poly& p) {
  if (p.is_constant()) return std::nullopt;
  if (level < p.main_var() || level > dimension())
    throw DomainError("family insert: level " + std::to_string(level) + " invalid for " + p.to_string() +
                      " in dimension " + std::to_string(dimension()));
  const auto slot = static_cast<std::size_t>(level - 1);
  Poly key = p.sign_normalized();
  auto it = index_[slot].find(key);
  int idx = 0;
  if (it == index_[slot].end()) {
    idx = static_cast<int>(levels_[slot].size());
    levels_[slot].push_back(p.primitive());
    index_[slot].emplace(std::move(key), idx);
  } else {
    idx = it->second;
  }
  const int scale = p.leading_sign() * levels_[slot][static_cast<std::size_t>(idx)].leading_sign();
  return FamilyRef{level, idx, scale};
}

std::optional<FamilyRef> PolyFamily::find(const Poly& p) const {
  if (p.is_constant()) return std::nullopt;
  const Poly key = p.sign_normalized();
  for (int level = p.main_var(); level <= dimension(); ++level) {
    const auto slot = static_cast<std::size_t>(level - 1);
    auto it = index_[slot].find(key);
    if (it == index_[slot].end()) continue;
    const int scale = p.leading_sign() * levels_[slot][static_cast<std::size_t>(it->second)].leading_sign();
    return FamilyRef{level, it->second, scale};
  }
  return std::nullopt;
}

}  // namespace polita
