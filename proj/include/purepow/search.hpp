#ifndef PUREPOW_SEARCH_HPP
#define PUREPOW_SEARCH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "purepow/theorems.hpp"

namespace purepow {

struct SearchParams {
  std::int64_t s_max = 8;
  std::size_t grid_size = std::size_t{1} << 14;
  std::string strategy;  // "exhaustive" or "local"
  std::uint64_t seed = 0;
};

/// Best sequence found for one n. objective is the certified upper bound of
/// the winner, so it is a sound upper estimate of f(n) restricted to
/// exponents <= s_max. wall_time is informational and deliberately excluded
/// from JSON output (records must be byte-stable across runs).
struct SearchRecord {
  std::size_t n = 0;
  ExponentSequence best_s;
  SupNormEnclosure enclosure;
  double objective = 0.0;
  std::uint64_t searched = 0;
  SearchParams params;
  double wall_time = 0.0;
};

class SearchSpaceTooLarge : public std::runtime_error {
 public:
  explicit SearchSpaceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// C(s_max + n - 1, n), saturating at uint64 max.
std::uint64_t canonical_candidate_count(std::size_t n, std::int64_t s_max);

/// Enumerates all primitive (gcd = 1) canonical sequences in [1, s_max]^n and
/// minimizes the certified upper bound at grid size M. Ties break by smaller
/// lower bound, then lexicographically smaller sequence. Two-stage: coarse
/// grid (2^10) first, fine grid only where the coarse lower bound cannot rule
/// the candidate out against the incumbent's fine upper bound. Throws
/// SearchSpaceTooLarge when the canonical count exceeds candidate_cap.
SearchRecord exhaustive_search(std::size_t n, std::int64_t s_max, std::size_t M,
                               unsigned jobs = 1,
                               std::uint64_t candidate_cap = 10000000);

/// Seeded hill descent: single-exponent perturbations (+-1 or resample),
/// strict-improvement acceptance, restart on stagnation. Sequential and fully
/// reproducible from the seed; the result is never worse than the start.
SearchRecord local_search(std::size_t n, std::int64_t s_max, std::size_t M,
                          std::uint64_t seed, std::size_t iters);

struct SweepRow {
  SearchRecord record;
  double ratio_to_2sqrt_n = 0.0;
  double nth_root = 0.0;
};

struct SweepParams {
  std::int64_t s_max = 8;
  std::size_t grid_size = std::size_t{1} << 14;
  std::uint64_t seed = 1;
  std::size_t iters = 2000;
  std::uint64_t candidate_cap = 10000000;
  unsigned jobs = 1;
  std::string cache_path;  // empty disables the JSONL result cache
};

/// One record per n in [n_lo, n_hi]: exhaustive where the space fits the cap,
/// local search otherwise (seed + n). Cached records are reused when a cache
/// path is configured.
std::vector<SweepRow> sweep(std::size_t n_lo, std::size_t n_hi, const SweepParams& params);

}  // namespace purepow

#endif
