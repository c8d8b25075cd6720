#ifndef KZL_KOSZUL_HPP
#define KZL_KOSZUL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kzl/groebner.hpp"
#include "kzl/parallel.hpp"

namespace kzl {

class QuotientRing;
using HostPtr = std::shared_ptr<const QuotientRing>;

// R = S/I_def with a fixed working order. The defining ideal must be
// homogeneous and generated in degrees >= 2, so ideals of linear forms have
// their degree-one part spanned by the given forms. Colon computations by a
// linear form are memoized per host.
class QuotientRing {
 public:
  static HostPtr make(RingPtr ring, IdealHandle defining, MonomialOrder order);

  const RingPtr& ring() const { return ring_; }
  const IdealHandle& defining() const { return defining_; }
  const MonomialOrder& order() const { return order_; }
  const std::string& defining_key() const { return defining_key_; }
  std::string host_key() const;

  // ((I_def + around) : ell); `around_key` identifies the ideal for the memo.
  IdealHandle colon(const IdealHandle& around, const std::string& around_key,
                    const Polynomial& ell) const;

 private:
  QuotientRing(RingPtr ring, IdealHandle defining, MonomialOrder order);
  RingPtr ring_;
  IdealHandle defining_;
  MonomialOrder order_;
  std::string defining_key_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<std::string, std::string>, IdealHandle> colon_memo_;
};

bool same_host(const HostPtr& a, const HostPtr& b);

// Ideal of R generated by linear forms, with a presentation-independent key
// (the reduced basis of I_def + forms under the host order).
class LinearIdeal {
 public:
  LinearIdeal(HostPtr host, std::vector<Polynomial> forms);

  const HostPtr& host() const { return host_; }
  const std::vector<Polynomial>& generators() const { return forms_; }
  // Reduced echelon basis of the degree-one part, deterministic.
  const std::vector<Polynomial>& span() const { return span_; }
  int dim() const { return static_cast<int>(span_.size()); }
  const IdealHandle& handle() const { return handle_; }
  const std::string& key() const { return key_; }
  bool is_zero() const { return span_.empty(); }

  std::string display() const;  // comma-joined span, "0" for the zero ideal

 private:
  HostPtr host_;
  std::vector<Polynomial> forms_;
  std::vector<Polynomial> span_;
  IdealHandle handle_;
  std::string key_;
};

LinearIdeal zero_ideal(const HostPtr& host);
LinearIdeal maximal_ideal(const HostPtr& host);

// Membership of every generator of inner in (I_def + outer-gens).
bool contains(const LinearIdeal& outer, const LinearIdeal& inner);

// I/J for J subset I: zero-cyclic when equal, otherwise cyclic iff the
// degree-one gap is one-dimensional; `ell` then spans the gap.
struct CyclicWitness {
  bool equal = false;
  std::optional<Polynomial> ell;
};
CyclicWitness cyclic_over(const LinearIdeal& ideal, const LinearIdeal& sub);

// (J : J + (ell)) computed as an element colon in S. `linear` reports
// whether the result is again generated modulo I_def by linear forms;
// offending_degree is the degree of a reduced-basis witness when not.
struct ColonResult {
  IdealHandle ideal;
  std::string key;
  bool linear = false;
  std::optional<LinearIdeal> as_linear;
  int offending_degree = 0;
};
ColonResult colon_over(const LinearIdeal& sub, const Polynomial& ell);

struct FiltrationCertificate {
  std::string witness_key;
  Polynomial ell;
  std::string colon_key;
};

// Finite family of linear-form ideals keyed canonically, with optional
// builder-supplied certificates.
class Filtration {
 public:
  explicit Filtration(HostPtr host) : host_(std::move(host)) {}

  // Deduplicates by key; returns the canonical key.
  const std::string& add(LinearIdeal ideal);
  const std::string& add(LinearIdeal ideal, FiltrationCertificate cert);

  const HostPtr& host() const { return host_; }
  const std::map<std::string, LinearIdeal>& members() const { return members_; }
  const std::map<std::string, FiltrationCertificate>& certificates() const {
    return certs_;
  }
  bool has_member(const std::string& key) const { return members_.count(key) > 0; }
  std::size_t size() const { return members_.size(); }

 private:
  HostPtr host_;
  std::map<std::string, LinearIdeal> members_;
  std::map<std::string, FiltrationCertificate> certs_;
};

struct MemberOutcome {
  std::string member_key;
  std::string display;
  bool ok = false;
  bool via_supplied = false;
  FiltrationCertificate used;
  std::string witness_display;  // span of the witness member, for reports
  std::string colon_display;
  std::string failure;
};

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> failures;      // human-readable reasons
  std::vector<MemberOutcome> outcomes;    // sorted by member key
};

// Koszul filtration check: 0 and the maximal ideal must be members, and
// every nonzero member needs a member J below it with cyclic quotient whose
// colon is again a member. Supplied certificates are validated as-is
// (unless force_search); missing ones are searched, candidates ordered by
// decreasing dimension then key.
VerifyReport verify(const Filtration& f, Exec exec = default_exec(),
                    bool force_search = false);

// Totally ordered by inclusion, dimensions exactly 0..n, all step colons in
// the family. Requires a passing report.
bool is_flag(const Filtration& f, const VerifyReport& report);

// Member union; hosts must agree. Certificates are merged (left wins).
Filtration filtration_union(const Filtration& a, const Filtration& b);

struct MinimalityReport {
  std::vector<std::string> removable;      // keys whose removal still verifies
  std::optional<bool> fully_minimal;       // only when the family is small
};
MinimalityReport minimality_probe(const Filtration& f, Exec exec = default_exec(),
                                  std::size_t exhaustive_limit = 12);

}  // namespace kzl

#endif
