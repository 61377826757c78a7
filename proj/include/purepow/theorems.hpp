#ifndef PUREPOW_THEOREMS_HPP
#define PUREPOW_THEOREMS_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "purepow/moments.hpp"
#include "purepow/norms.hpp"

namespace purepow {

/// End-to-end verification record for one product: the exact l2 bound, the
/// certified sup-norm enclosure, and the implied lower bounds 2*sqrt(n) and
/// sqrt(2*l2^2). consistent means every inequality that must hold, holds.
struct BoundReport {
  ExponentSequence s;
  std::size_t n = 0;
  Int l1;
  Int l2_squared;
  SupNormEnclosure enclosure;
  double bound_2sqrt_n = 0.0;
  double bound_sqrt_2_l2 = 0.0;
  double slack = 0.0;  // enclosure.lower - 2*sqrt(n), recorded for study
  bool consistent = false;
};

BoundReport verify_main_bound(const ExponentSequence& s, std::size_t M);

/// sup^2 >= 2 * sum|a_k|^2 for polynomials with all zeros on the unit circle.
/// hypothesis_guaranteed is true when p is verifiably a pure power product;
/// otherwise the report is still computed but carries the warning flag.
struct ORReport {
  double rms_sq = 0.0;  // mean square of |p| on the grid
  Int l2_squared;
  SupNormEnclosure enclosure;
  bool upper_ok = false;      // enclosure.upper^2 >= 2*l2_squared
  double lower_slack = 0.0;   // enclosure.lower^2 - 2*l2_squared
  bool hypothesis_guaranteed = false;
};

ORReport verify_or_inequality(const ExponentSequence& s, std::size_t M);
ORReport verify_or_inequality(const IntPolynomial& p, std::size_t M);

/// All canonical sequences with 1 <= n <= n_max and exponents in [1, s_max].
struct ExhaustiveFamily {
  std::size_t n_max = 1;
  std::int64_t s_max = 1;
};

/// count sequences of fixed size n, exponents drawn uniformly from [1, s_max]
/// and canonicalized; reproducible from the seed.
struct RandomFamily {
  std::size_t count = 0;
  std::size_t n = 1;
  std::int64_t s_max = 1;
  std::uint64_t seed = 1;
};

using FamilySpec = std::variant<ExhaustiveFamily, RandomFamily>;

/// Family members in deterministic enumeration order (duplicates kept:
/// every drawn sequence is verified, gcd reduction is only a dedup key for
/// reporting).
std::vector<ExponentSequence> family_members(const FamilySpec& family);

struct BatchSummary {
  std::size_t count = 0;
  std::size_t distinct_primitive = 0;
  std::vector<BoundReport> reports;    // enumeration order, independent of jobs
  std::vector<std::size_t> failures;   // indices with consistent == false
};

BatchSummary batch_verify(const FamilySpec& family, std::size_t M, unsigned jobs = 1);

}  // namespace purepow

#endif
