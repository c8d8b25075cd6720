#ifndef KZL_LATTICE_HPP
#define KZL_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kzl/koszul.hpp"

namespace kzl {

// Finite poset with named elements; the order matrix is the
// reflexive-transitive closure of the given covers.
class Poset {
 public:
  Poset(std::vector<std::string> names,
        const std::vector<std::pair<int, int>>& covers);  // a < b pairs

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;
  bool leq(int a, int b) const { return leq_[a][b]; }
  std::vector<std::pair<int, int>> cover_relations() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
};

// Subsets of lattice/poset elements as bitmasks (sizes stay <= 20 here).
using Subset = std::uint32_t;

// Finite distributive lattice. Explicit constructions validate the lattice
// axioms and distributivity exhaustively; the Birkhoff construction is
// distributive by design.
class DistributiveLattice {
 public:
  // Lattice of poset ideals of p, ordered by inclusion (union/intersection).
  static DistributiveLattice from_poset(const Poset& p, int max_poset_size = 6);
  // Explicit element/cover description; checked for distributivity.
  static DistributiveLattice from_order(std::vector<std::string> names,
                                        const std::vector<std::pair<int, int>>& covers);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;
  bool leq(int a, int b) const { return leq_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }
  int bottom() const;
  int top() const;

  DistributiveLattice reversed() const;
  std::vector<std::pair<int, int>> incomparable_pairs() const;  // a < b index
  std::vector<std::pair<int, int>> cover_relations() const;
  std::vector<int> join_irreducibles() const;
  // The canonical map a -> {join-irreducibles below a} into the Birkhoff
  // lattice of the join-irreducible subposet; used for the round-trip check.
  Subset irreducibles_below(int a) const;

 private:
  DistributiveLattice() = default;
  void finish_from_order();  // derive meet/join from leq_, validate
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_, join_;
};

// --- Join-meet (Hibi) machinery ------------------------------------------

RingPtr lattice_ring(const DistributiveLattice& l);
// Generated by a*b - (a^b)*(a v b) over incomparable pairs.
IdealHandle join_meet_ideal(const DistributiveLattice& l, const RingPtr& ring);

// Reverse lexicographic order whose variable priority is a linear extension
// of the reversed lattice order (larger lattice elements first), ties broken
// by element name; optionally refined so that variables outside `inside`
// precede those inside.
MonomialOrder hibi_order(const DistributiveLattice& l, const RingPtr& ring,
                         std::optional<Subset> inside = std::nullopt);

// R = K[L]/I_L under hibi_order.
HostPtr hibi_host(const DistributiveLattice& l);

// All downsets of l, sorted by (size, mask); throws past the cap.
std::vector<Subset> poset_ideals(const DistributiveLattice& l,
                                 std::size_t cap = 5000);
bool is_poset_ideal(const DistributiveLattice& l, Subset s);
// {b : b >= a fails}; always a poset ideal.
Subset cogenerated_ideal(const DistributiveLattice& l, int a);
// The literal "not strictly above" reading {b : b > a fails} = above + {a};
// kept for the regression test pinning the strict reading.
Subset cogenerated_ideal_including(const DistributiveLattice& l, int a);

std::string subset_display(const DistributiveLattice& l, Subset s);
Subset parse_subset(const DistributiveLattice& l, const std::string& text);

LinearIdeal subset_member(const HostPtr& host, const DistributiveLattice& l, Subset s);

// Certified colon for a covering pair I < J of poset ideals with J\I = {a}:
// (I-image : a-image) must equal the image of the co-generated ideal of a.
struct CoverColon {
  int added = 0;          // the element a
  Subset cogenerated = 0;  // H
  bool certified = false;
  IdealHandle groebner_colon;
};
CoverColon colon_cover(const HostPtr& host, const DistributiveLattice& l, Subset i,
                       Subset j);

// Koszul filtration made of all poset ideals of L, certificates by removing
// a maximal element and pointing the colon at the co-generated member.
Filtration hibi_koszul_filtration(const HostPtr& host, const DistributiveLattice& l);
// Same construction on upsets (downsets of the reversed order).
Filtration upset_filtration(const HostPtr& host, const DistributiveLattice& l);

// Conditions for a subfamily of poset ideals to remain a Koszul filtration:
// every co-generated ideal and L itself present, and every nonempty member
// reachable by removing one element inside the family. When they hold the
// induced filtration is verified outright.
struct ReducedFamilyReport {
  bool conditions_ok = false;
  std::string failure;
  std::optional<VerifyReport> verify_report;
};
ReducedFamilyReport reduced_family_check(const HostPtr& host,
                                         const DistributiveLattice& l,
                                         const std::vector<Subset>& family,
                                         Exec exec = default_exec());

// ini(I_L) under the Hibi order equals the incomparable-products ideal.
bool initial_ideal_is_incomparable_products(const DistributiveLattice& l,
                                            const HostPtr& host);

}  // namespace kzl

#endif
