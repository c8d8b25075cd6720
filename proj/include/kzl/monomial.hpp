#ifndef KZL_MONOMIAL_HPP
#define KZL_MONOMIAL_HPP

#include <utility>
#include <vector>

#include "kzl/ring.hpp"

namespace kzl {

// Sparse power product: (variable index, exponent) pairs sorted by variable,
// exponents strictly positive. Total degree is cached. A monomial does not
// own a ring reference; polynomials supply the ring context.
class Monomial {
 public:
  Monomial() = default;
  // Pairs need not be sorted; zero exponents are dropped, duplicates add up.
  explicit Monomial(std::vector<std::pair<int, int>> exps);
  static Monomial one() { return Monomial(); }
  static Monomial variable(int var) { return Monomial({{var, 1}}); }

  const std::vector<std::pair<int, int>>& factors() const { return exps_; }
  bool is_one() const { return exps_.empty(); }
  int degree() const { return degree_; }
  int exponent(int var) const;
  int max_variable() const { return exps_.empty() ? -1 : exps_.back().first; }
  std::vector<int> support() const;

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& into) const;
  // Quotient this / by; caller guarantees divisibility.
  Monomial divided_by(const Monomial& by) const;
  bool divisible_by_variable(int var) const { return exponent(var) > 0; }

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }
  bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }

  std::string to_string(const Ring& ring) const;

 private:
  std::vector<std::pair<int, int>> exps_;
  int degree_ = 0;
};

// Fixed ring-order comparator used for canonical term storage and printing:
// higher total degree first, ties by exponent vector scanned from variable 0
// (larger exponent first). Independent of any monomial order.
bool storage_before(const Monomial& a, const Monomial& b);

}  // namespace kzl

#endif
