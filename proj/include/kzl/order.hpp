#ifndef KZL_ORDER_HPP
#define KZL_ORDER_HPP

#include <string>
#include <vector>

#include "kzl/monomial.hpp"

namespace kzl {

enum class OrderKind {
  Lex,     // pure lexicographic
  RevLex,  // degree first, then reverse lexicographic
};

// A block of the order: variables listed by decreasing priority.
struct OrderBlock {
  OrderKind kind;
  std::vector<int> vars;
};

// Total multiplicative monomial order on a fixed ring, possibly composed of
// elimination blocks (earlier blocks dominate). Every variable of the ring
// appears in exactly one block.
class MonomialOrder {
 public:
  static MonomialOrder lex(RingPtr ring, std::vector<int> priority);
  static MonomialOrder revlex(RingPtr ring, std::vector<int> priority);
  // revlex over the ring's own variable listing
  static MonomialOrder revlex_default(RingPtr ring);
  static MonomialOrder lex_default(RingPtr ring);
  // Block order eliminating `block` (compared first, graded revlex within),
  // then `tail` on the remaining variables.
  static MonomialOrder elimination(RingPtr ring, std::vector<int> block,
                                   const MonomialOrder& tail);
  static MonomialOrder elimination(RingPtr ring, std::vector<int> block);

  MonomialOrder(RingPtr ring, std::vector<OrderBlock> blocks);

  const RingPtr& ring() const { return ring_; }
  const std::vector<OrderBlock>& blocks() const { return blocks_; }

  // -1, 0 or +1 as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool is_single_revlex() const {
    return blocks_.size() == 1 && blocks_[0].kind == OrderKind::RevLex;
  }
  // Least-priority variable of the last block.
  int least_variable() const { return blocks_.back().vars.back(); }
  // Priority sequence flattened across blocks, largest variable first.
  std::vector<int> priority() const;

  // Canonical text form, e.g. "revlex:y1>y2>x1>x2" or
  // "elim:{t}:then:revlex:x>y". Parses back via parse_order_spec.
  std::string spec_string() const;

  bool operator==(const MonomialOrder& rhs) const;

 private:
  RingPtr ring_;
  std::vector<OrderBlock> blocks_;
  std::vector<int> block_of_;  // per variable
  std::vector<int> rank_of_;   // position inside its block (0 = highest)
};

// Order spec grammar: "lex:<v>...", "revlex:<v>...", or
// "elim:{a,b}:then:<spec>". Variable lists are '>'-separated; a token like
// "x1..x4" expands to x1>x2>x3>x4.
MonomialOrder parse_order_spec(const RingPtr& ring, const std::string& spec);

}  // namespace kzl

#endif
