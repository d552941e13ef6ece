#pragma once

#include "polita/rational.hpp"

#include <vector>

namespace polita {

// A realizable sign condition on a family (Q_1, ..., Q_m), entries in {-1, 0, 1}.
using SignVector = std::vector<int>;
// Exponents (e_1, ..., e_m) in {0, 1, 2}, naming the product Q_1^e_1 ... Q_m^e_m.
using ExponentVector = std::vector<int>;

// prod_j s_j^(a_j) with 0^0 = 1: the entry of the m-fold tensor power of
// [[1,1,1],[-1,0,1],[1,0,1]] at row a and column s.
int sign_matrix_entry(const ExponentVector& a, const SignVector& s);

// Exact solution of the square system m * x = rhs by fraction-free elimination.
// Throws InternalError when the matrix is singular.
std::vector<Rational> solve_exact(const std::vector<std::vector<Integer>>& m, const std::vector<Integer>& rhs);

// Indices of the first `count` rows (in order) that are linearly independent
// of the rows already chosen. Throws InternalError when fewer exist.
std::vector<std::size_t> first_independent_rows(const std::vector<std::vector<Integer>>& rows, std::size_t count);

// The adapted family A(Sigma) of exponent vectors, defined recursively on the
// number of polynomials, returned in lexicographic order.
std::vector<ExponentVector> adapted_set(const std::vector<SignVector>& sigma);

}  // namespace polita
