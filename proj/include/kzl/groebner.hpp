#ifndef KZL_GROEBNER_HPP
#define KZL_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kzl/linalg.hpp"
#include "kzl/polynomial.hpp"

namespace kzl {

struct GroebnerBasis {
  std::vector<Polynomial> elements;  // ascending by leading monomial
  MonomialOrder order;
  bool reduced = false;

  bool is_zero_ideal() const { return elements.empty(); }
  int max_degree() const;
  std::string key() const;  // canonical text form of the element list
};

// Cap on processed S-pairs per Buchberger run; 0 means unlimited. The CLI
// seeds this from KOSZUL_GB_LIMIT. Exceeding throws GbLimitExceeded.
void set_spair_limit(long long limit);
long long spair_limit();

// Deterministic full normal form: repeatedly rewrite the largest reducible
// monomial, scanning divisors in list order. Zero divisors are rejected.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                  const MonomialOrder& ord, bool* changed = nullptr);

struct ReduceWithCofactors {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // f = sum cofactor[i]*divisor[i] + remainder
  bool changed = false;
};
ReduceWithCofactors reduce_with_cofactors(const Polynomial& f,
                                          std::span<const Polynomial> divisors,
                                          const MonomialOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord);

// Buchberger with the normal selection strategy (S-pairs by increasing lcm),
// the coprime-lead and chain criteria, and final interreduction. Output is
// the reduced basis, canonical for the ideal and order.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord);

// Check that every S-pair reduces to zero against the basis (test hook).
bool is_groebner_basis(const GroebnerBasis& gb);

// Generator list plus a per-order cache of reduced bases. Handles share
// state on copy; the cache fills at most once per order (concurrent fills
// may duplicate work but always agree, so first insert wins).
class IdealHandle {
 public:
  IdealHandle();  // empty handle without a ring; assign before use
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return state_->ring; }
  const std::vector<Polynomial>& generators() const { return state_->gens; }
  std::shared_ptr<const GroebnerBasis> groebner(const MonomialOrder& ord) const;

  bool is_zero(const MonomialOrder& ord) const { return groebner(ord)->is_zero_ideal(); }

 private:
  struct State {
    RingPtr ring;
    std::vector<Polynomial> gens;
    mutable std::mutex mutex;
    mutable std::map<std::string, std::shared_ptr<const GroebnerBasis>> cache;
  };
  std::shared_ptr<State> state_;
};

Polynomial normal_form(const Polynomial& f, const IdealHandle& ideal,
                       const MonomialOrder& ord);
bool contains(const IdealHandle& ideal, const Polynomial& f, const MonomialOrder& ord);
bool ideal_equal(const IdealHandle& a, const IdealHandle& b, const MonomialOrder& ord);
bool ideal_subset(const IdealHandle& sub, const IdealHandle& super, const MonomialOrder& ord);

IdealHandle initial_ideal(const IdealHandle& ideal, const MonomialOrder& ord);
bool is_quadratic_gb(const IdealHandle& ideal, const MonomialOrder& ord);

// Handle generated by gens(I) plus the listed variables.
IdealHandle with_variables(const IdealHandle& ideal, std::span<const int> vars);
IdealHandle sum(const IdealHandle& a, std::span<const Polynomial> more);

// Divide-the-variable-out Gröbner basis of I : v for the least variable v of
// a reduced basis under a single-block reverse lexicographic order: elements
// not divisible by v are kept, the rest are divided by v exactly. Valid for
// homogeneous input (checked).
GroebnerBasis colon_by_last_variable(const GroebnerBasis& gb);

// General colon I : f = (1/f)(I cap (f)), with the intersection computed by
// eliminating a fresh scalar t from t*I + (1-t)*(f).
IdealHandle colon_general(const IdealHandle& ideal, const Polynomial& f);
IdealHandle colon_by_ideal(const IdealHandle& ideal, const IdealHandle& by);
IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);

// I cap K[vars outside block]; the returned handle lives in the subring.
IdealHandle eliminate(const IdealHandle& ideal, std::span<const int> block);

// Toric kernel of x_k -> images[k]: eliminate the target variables from
// (x_k - images[k]). The result lives in a fresh ring with one variable per
// image (named stem1..stemN).
IdealHandle kernel_of_monomial_map(const RingPtr& target,
                                   std::span<const Monomial> images,
                                   const std::string& var_stem = "x");

// Basis (reduced echelon, deterministic) of the linear forms contained in
// the ideal, obtained by solving normal_form(sum a_k var_k) = 0 exactly.
std::vector<Polynomial> degree_one_part(const IdealHandle& ideal,
                                        const MonomialOrder& ord);

// True iff sup = base + (degree_one_part(sup)); requires base subset sup.
bool is_linearly_generated_mod(const IdealHandle& base, const IdealHandle& sup,
                               const MonomialOrder& ord);

// Linear quotients for a variable sequence v1,v2,... (divided out in that
// order): every colon (I, v1..v_j-1) : v_j must be generated modulo I by
// linear forms.
bool sequence_has_linear_quotients(const IdealHandle& ideal,
                                   std::span<const int> sequence,
                                   const MonomialOrder& ord);

// Coefficient row of a linear form over the ring's variables.
RatRow linear_form_row(const Polynomial& f);
Polynomial row_to_linear_form(const RingPtr& ring, const RatRow& row);

}  // namespace kzl

#endif
