#pragma once

#include <string>
#include <vector>

namespace polita {

// Signs of (Q, Q', ..., Q^(q)) at a point, each in {-1, 0, 1}.
struct ThomEncoding {
  std::vector<int> signs;

  friend bool operator==(const ThomEncoding&, const ThomEncoding&) = default;
};

// Orders the points behind two encodings of the same polynomial:
// -1 if the first point is smaller, 0 if the encodings coincide, 1 otherwise.
// Throws DomainError on encodings of different lengths.
int thom_compare(const ThomEncoding& a, const ThomEncoding& b);

// Compact form such as "(-1,0,+1)".
std::string to_string(const ThomEncoding& e);

}  // namespace polita
