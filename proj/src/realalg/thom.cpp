#include "polita/thom.hpp"

#include "polita/errors.hpp"

namespace polita {

int thom_compare(const ThomEncoding& a, const ThomEncoding& b) {
  if (a.signs.size() != b.signs.size()) throw DomainError("thom_compare: encodings of different lengths");
  std::size_t k = a.signs.size();
  while (k-- > 0) {
    if (a.signs[k] != b.signs[k]) break;
  }
  if (k == static_cast<std::size_t>(-1)) return 0;
  if (k + 1 >= a.signs.size()) throw DomainError("thom_compare: encodings differ on the last derivative");
  const int guide = a.signs[k + 1];
  if (guide == 0) throw DomainError("thom_compare: encodings do not come from the same polynomial");
  const bool less = guide > 0 ? a.signs[k] < b.signs[k] : a.signs[k] > b.signs[k];
  return less ? -1 : 1;
}

std::string to_string(const ThomEncoding& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.signs.size(); ++i) {
    if (i) out += ',';
    out += e.signs[i] > 0 ? "+1" : (e.signs[i] < 0 ? "-1" : "0");
  }
  return out + ")";
}

}  // namespace polita
