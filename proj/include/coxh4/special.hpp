#ifndef COXH4_SPECIAL_HPP
#define COXH4_SPECIAL_HPP

#include <array>
#include <vector>

#include "coxh4/polynomial.hpp"

namespace coxh4 {

// partition with at most four parts, weakly decreasing
using Partition = std::array<int, 4>;

// Monomial symmetric polynomial M_lambda of (x1^2, x2^2, x3^2, x4^2):
// the sum of x^(2 mu) over all distinct permutations mu of lambda.
Polynomial monomial_symmetric(const Partition& lambda);

// Fundamental alternating polynomial of (x1^2,..,x4^2):
//   delta4 = prod_{i<j} (x_i^2 - x_j^2), degree 12 in x.
Polynomial alternating_delta4();

// Generalized Laguerre polynomial L_n^{(alpha)}(z) with polynomial alpha
// and argument, via the three-term recurrence. Exact coefficients.
Polynomial laguerre(int n, const Polynomial& alpha, const Polynomial& z);

// r^2 = x1^2 + .. + x4^2
Polynomial radius_squared();

// distinct permutations of a partition (deterministic order)
std::vector<std::array<int, 4>> distinct_permutations(const Partition& lambda);

// p with x1 and x2 exchanged
Polynomial swap_first_two(const Polynomial& p);

// Split an even-exponent polynomial as  p = sym + delta4 * alt  with both
// parts symmetric under coordinate permutations (the shape of every H4
// invariant); throws NotDivisible when p is not of this shape.
struct AlternationSplit {
    Polynomial sym;
    Polynomial alt;  // the quotient by delta4
};
AlternationSplit split_by_alternation(const Polynomial& p);

// expansion of a symmetric even-exponent polynomial over the M_lambda basis
std::vector<std::pair<Partition, Scalar>> monomial_symmetric_expand(const Polynomial& p);

}  // namespace coxh4

#endif
