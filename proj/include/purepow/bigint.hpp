#ifndef PUREPOW_BIGINT_HPP
#define PUREPOW_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace purepow {

// Exact arbitrary-precision integer. Every coefficient, norm and moment in
// this library is an Int; nothing is ever rounded except at the documented
// floating-point evaluation boundary in norms.hpp.
using Int = mpz_class;

inline std::string to_decimal(const Int& v) { return v.get_str(); }

Int int_from_decimal(const std::string& s);

// Number of bits in |v| (0 for v == 0).
std::size_t bit_length(const Int& v);

// Smallest double >= v.
double to_double_round_up(const Int& v);

// Exact two-term split v == hi + lo with both parts representable as
// doubles. Valid for |v| < 2^106; beyond that the conversion cannot stay
// exact and we throw std::overflow_error rather than lose bits silently.
struct SplitDouble {
  double hi = 0.0;
  double lo = 0.0;
};
SplitDouble split_double_exact(const Int& v);

}  // namespace purepow

#endif
