#include "polita/errors.hpp"
#include "polita/family.hpp"
#include "polita/subresultant.hpp"

#include <unordered_set>

namespace polita {

std::vector<Poly> truncations(const Poly& p, int k) {
  const auto coeffs = p.coeffs_in(k);
  std::vector<Poly> out;
  for (std::size_t r = coeffs.size(); r-- > 0;) {
    if (coeffs[r].is_zero()) continue;
    out.push_back(Poly::from_coeffs(k, std::vector<Poly>(coeffs.begin(), coeffs.begin() + static_cast<long>(r) + 1)));
    if (coeffs[r].is_constant()) break;
  }
  return out;
}

namespace {

class ProjectionSet {
 public:
  void add(const Poly& p) {
    if (p.is_constant()) return;
    if (seen_.insert(p.sign_normalized()).second) out_.push_back(p.primitive());
  }
  void add_all(const SubresultantSequence& seq) {
    for (const auto& c : seq.coefficients) add(c);
  }
  std::vector<Poly> take() { return std::move(out_); }

 private:
  std::unordered_set<Poly, PolyHash> seen_;
  std::vector<Poly> out_;
};

}  // namespace

std::vector<Poly> eliminate(int k, const std::vector<Poly>& polys) {
  std::vector<std::vector<Poly>> tru;
  tru.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.main_var() > k) throw DomainError("eliminate: " + p.to_string() + " is not in Q[X1..X" + std::to_string(k) + "]");
    tru.push_back(truncations(p, k));
  }
  ProjectionSet out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& r : tru[i]) {
      const Degree dr = r.degree_in(k);
      out.add(r.lcof_in(k));
      if (dr >= 2) out.add_all(subresultants(r, r.derivative(k), k));
      for (std::size_t j = 0; j < polys.size(); ++j) {
        for (const auto& t : tru[j]) {
          if (t.degree_in(k) > dr || t == r) continue;
          out.add_all(subresultants(r, t, k));
        }
      }
    }
  }
  return out.take();
}

PolyFamily eliminate_all(const PolyFamily& family) {
  const int n = family.dimension();
  PolyFamily out(n);
  if (n == 0) return out;
  for (const auto& p : family.level(n)) out.insert_at(n, p);
  for (int i = n; i >= 2; --i) {
    for (const auto& p : family.level(i - 1)) out.insert_at(i - 1, p);
    for (const auto& p : eliminate(i, out.level(i))) out.insert_at(i - 1, p);
  }
  return out;
}

}  // namespace polita
