#ifndef PUREPOW_POLYRING_HPP
#define PUREPOW_POLYRING_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "purepow/bigint.hpp"

namespace purepow {

/// Canonical multiset of product exponents s_1 <= s_2 <= ... <= s_n, all >= 1.
/// The empty sequence (n = 0) is permitted and stands for the empty product;
/// theorem-level checks reject it as degenerate.
class ExponentSequence {
 public:
  ExponentSequence() = default;
  // Sorts into canonical order; throws std::invalid_argument on any s < 1.
  explicit ExponentSequence(std::vector<std::int64_t> exponents);

  const std::vector<std::int64_t>& exponents() const { return exps_; }
  std::size_t n() const { return exps_.size(); }
  bool empty() const { return exps_.empty(); }
  std::int64_t degree_sum() const;
  std::int64_t gcd() const;  // 0 for the empty sequence
  ExponentSequence primitive() const;
  ExponentSequence scaled(std::int64_t c) const;

  friend bool operator==(const ExponentSequence&, const ExponentSequence&) = default;
  friend auto operator<=>(const ExponentSequence&, const ExponentSequence&) = default;

 private:
  std::vector<std::int64_t> exps_;
};

/// Dense exact integer coefficient vector indexed by the power of z.
/// Normal form: the top coefficient is nonzero; the zero polynomial is the
/// single coefficient 0 (is_zero() distinguishes it, its degree is not
/// meaningful for divisibility queries).
class IntPolynomial {
 public:
  IntPolynomial() : c_{Int(0)} {}
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial one() { return IntPolynomial({Int(1)}); }

  const std::vector<Int>& coeffs() const { return c_; }
  const Int& coeff(std::size_t k) const;  // 0 beyond the degree
  std::size_t degree() const { return c_.size() - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
  Int eval_at_one() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Int> c_;
};

/// prod_{j=1}^{n} (1 - z^{s_j}), expanded exactly. Empty sequence -> constant 1.
IntPolynomial expand_product(const ExponentSequence& s);

/// p(z) * (1 - z^s); the incremental factor update c'[k] = c[k] - c[k-s].
IntPolynomial mul_one_minus_pow(const IntPolynomial& p, std::int64_t s);

/// Exact synthetic division by (1 - z). Returns {quotient, true} when
/// divisible, {p, false} otherwise.
std::pair<IntPolynomial, bool> divide_by_one_minus_z(const IntPolynomial& p);

/// Exact division by (1 - z^s); nullopt when not divisible.
std::optional<IntPolynomial> divide_by_one_minus_pow(const IntPolynomial& p, std::int64_t s);

/// Largest n with (1-z)^n | p, by repeated exact division. p must be nonzero.
std::size_t multiplicity_at_one(const IntPolynomial& p);

/// If p is exactly a pure power product, returns its exponent sequence;
/// nullopt otherwise. Greedy peel: the smallest nonzero exponent of a pure
/// product is always one of its s_j, so repeated exact division by
/// (1 - z^{s_min}) is a complete recognizer.
std::optional<ExponentSequence> recover_exponents(const IntPolynomial& p);

}  // namespace purepow

#endif
