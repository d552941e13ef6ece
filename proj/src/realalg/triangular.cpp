#include "polita/triangular.hpp"

#include "polita/errors.hpp"

#include <sstream>

namespace polita {

TriangularSystem TriangularSystem::prefix(int l) const {
  if (l < 0 || l > level()) throw DomainError("prefix length out of range");
  return TriangularSystem(std::vector<TriangularEntry>(entries_.begin(), entries_.begin() + l));
}

TriangularSystem TriangularSystem::extended(TriangularEntry e) const {
  auto copy = entries_;
  copy.push_back(std::move(e));
  return TriangularSystem(std::move(copy));
}

TriangularSystem TriangularSystem::from_rational_point(const std::vector<Rational>& point) {
  std::vector<TriangularEntry> entries;
  for (std::size_t i = 0; i < point.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    entries.push_back({1, Poly::variable(k) - Poly(point[i]), 1});
  }
  return TriangularSystem(std::move(entries));
}

std::size_t TriangularSystem::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& e : entries_) {
    h = (h ^ static_cast<std::size_t>(e.root_index)) * 0x100000001b3ULL;
    h = (h ^ e.poly.hash()) * 0x100000001b3ULL;
  }
  return h;
}

std::string TriangularSystem::to_string() const {
  if (entries_.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ' ';
    os << '(' << entries_[i].root_index << ", " << entries_[i].poly.to_string() << ", " << entries_[i].degree << ')';
  }
  return os.str();
}

}  // namespace polita
