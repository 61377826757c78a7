#ifndef PUREPOW_NEWTON_HPP
#define PUREPOW_NEWTON_HPP

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "purepow/bigint.hpp"

namespace purepow {

/// Integer multiset: value -> multiplicity >= 1. Multiplicities are exact
/// Ints because they come from polynomial coefficients (up to 2^n).
class IntMultiset {
 public:
  IntMultiset() = default;
  explicit IntMultiset(const std::vector<std::int64_t>& values);

  void insert(std::int64_t value, Int multiplicity = 1);
  const std::map<std::int64_t, Int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Int size() const;  // total with multiplicity

  friend bool operator==(const IntMultiset&, const IntMultiset&) = default;

 private:
  std::map<std::int64_t, Int> entries_;
};

/// p_1 .. p_m, exact.
struct PowerSums {
  std::vector<Int> values;
  std::size_t m() const { return values.size(); }
};

/// e_1 .. e_m (e_0 = 1 implicit), exact.
struct ElementarySymmetric {
  std::vector<Int> values;
  std::size_t m() const { return values.size(); }
};

/// Typed rejection: the input is not the power-sum vector of any integer
/// multiset, or is out of the supported factoring range.
enum class RealizabilityFailure {
  non_integral_elementary,
  non_integer_root,
  too_large_to_factor,
};
const char* to_string(RealizabilityFailure f);

/// (p_1, ..., p_{r_max}) with p_r = sum x^r counted with multiplicity.
PowerSums power_sums(const IntMultiset& x, std::size_t r_max);

/// Newton recursion e_r = (p_r - e_1 p_{r-1} + ... + (-1)^{r-1} e_{r-1} p_1)/r,
/// exact; a non-integral e_r is the typed rejection (the recursion doubles as
/// a realizability test).
std::variant<ElementarySymmetric, RealizabilityFailure> elementary_from_power(
    const PowerSums& ps);

/// The unique integer multiset with these power sums, when one exists: builds
/// the monic polynomial t^m - e_1 t^{m-1} + ... + (-1)^m e_m, strips zero
/// roots, then trial-divides integer divisors of the trailing coefficient
/// with repeated synthetic division for multiplicity. Trailing coefficients
/// beyond 2^63 in absolute value are rejected as too_large_to_factor.
std::variant<IntMultiset, RealizabilityFailure> reconstruct_multiset(const PowerSums& ps);

/// True iff p_r(x) = p_r(y) for r = 1..m; throws on size mismatch.
bool equal_by_power_sums(const IntMultiset& x, const IntMultiset& y);

}  // namespace purepow

#endif
