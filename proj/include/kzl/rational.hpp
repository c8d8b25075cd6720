#ifndef KZL_RATIONAL_HPP
#define KZL_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace kzl {

// Exact coefficient arithmetic. All ideal-theoretic answers in this library
// are yes/no or symbolic, so coefficients must never round.
using Rational = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when the S-pair budget (KOSZUL_GB_LIMIT) is exhausted.
struct GbLimitExceeded : Error {
  explicit GbLimitExceeded(const std::string& msg) : Error(msg) {}
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace kzl

#endif
