#ifndef PUREPOW_MOMENTS_HPP
#define PUREPOW_MOMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "purepow/newton.hpp"
#include "purepow/polyring.hpp"

namespace purepow {

/// (sum_k a_k k^r) for r = 0..r_max, with the convention 0^0 = 1 so the
/// r = 0 entry is p(1).
std::vector<Int> power_moments(const IntPolynomial& p, std::size_t r_max);

/// (sum_k a_k (k)_r) for r = 0..r_max, falling factorials; entry r is the
/// r-th derivative of p at 1.
std::vector<Int> factorial_moments(const IntPolynomial& p, std::size_t r_max);

/// Largest n such that the power moments vanish for r = 0..n-1. Agrees with
/// multiplicity_at_one on every input (cross-validated in the test suite).
std::size_t vanishing_order_by_moments(const IntPolynomial& p);

/// Coefficient indices split by sign: x holds k with a_k > 0 (multiplicity
/// a_k), y holds k with a_k < 0 (multiplicity |a_k|).
struct SignedSplit {
  IntMultiset x;
  IntMultiset y;
};
SignedSplit signed_split(const IntPolynomial& p);

struct L2BoundReport {
  std::size_t n = 0;  // vanishing order at z = 1, computed internally
  Int l1;
  Int l2_squared;
  bool l1_ok = false;      // l1 >= 2n
  bool l2_ok = false;      // l2_squared >= 2n
  bool degenerate = false; // n == 0: the bounds are vacuous
};

/// Checks sum|a_k|^2 >= 2n and sum|a_k| >= 2n with n = multiplicity_at_one(p).
/// Both must hold for every nonzero integer polynomial.
L2BoundReport verify_l2_bound(const IntPolynomial& p);

/// Exponents of the +1 and -1 coefficients of a {-1,0,+1} polynomial whose
/// power sums agree for k = 0..agreement_order-1.
struct PTEWitness {
  std::vector<std::int64_t> a_list;  // coefficient +1
  std::vector<std::int64_t> b_list;  // coefficient -1
  std::size_t agreement_order = 0;
  std::size_t r = 0;  // common size of the two lists; always r >= agreement_order
};

struct PTERejection {
  std::string reason;
  std::optional<std::size_t> offending_index;
  Int offending_coefficient;
};

/// Witness extraction for polynomials with all coefficients in {-1, 0, +1}
/// and a zero at z = 1; anything else gets the typed rejection.
std::variant<PTEWitness, PTERejection> pte_witness(const IntPolynomial& p);

}  // namespace purepow

#endif
