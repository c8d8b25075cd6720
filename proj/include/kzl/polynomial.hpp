#ifndef KZL_POLYNOMIAL_HPP
#define KZL_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "kzl/order.hpp"

namespace kzl {

struct Term {
  Rational coeff;
  Monomial mono;
  bool operator==(const Term& rhs) const {
    return coeff == rhs.coeff && mono == rhs.mono;
  }
};

// Exact multivariate polynomial. Terms are kept sorted under the fixed
// storage order (see storage_before) with no zero coefficients and no
// duplicate monomials, so equality is term-wise and printing is canonical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial variable(RingPtr ring, int var);
  static Polynomial monomial(RingPtr ring, Monomial m, Rational c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  // Maximal total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Rational& c, const Monomial& m) const;
  // Exact quotient by a variable; throws unless every term is divisible.
  Polynomial divided_by_variable(int var) const;
  bool every_term_divisible_by(int var) const;

  // Largest term under ord; throws on the zero polynomial.
  const Term& leading_term(const MonomialOrder& ord) const;
  const Monomial& leading_monomial(const MonomialOrder& ord) const;
  Polynomial monic(const MonomialOrder& ord) const;

  // Image in `target` under the variable-name-preserving map; every variable
  // in the support must exist in the target ring.
  Polynomial mapped_to(const RingPtr& target) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }
  // Storage-order lexicographic comparison, for canonical sorting only.
  static bool canonical_before(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;
  static Polynomial parse(const RingPtr& ring, const std::string& text);

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace kzl

#endif
