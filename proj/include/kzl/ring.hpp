#ifndef KZL_RING_HPP
#define KZL_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kzl/rational.hpp"

namespace kzl {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A polynomial ring is just its ordered list of variable names. Rings are
// immutable and compared by value, so a ring reconstructed after an
// elimination step is interchangeable with the original.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int var) const { return names_.at(var); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> find(const std::string& name) const;
  int index_of(const std::string& name) const;  // throws on unknown name
  bool has(const std::string& name) const { return find(name).has_value(); }

  bool operator==(const Ring& other) const { return names_ == other.names_; }
  bool operator!=(const Ring& other) const { return !(*this == other); }

  // Ring with `extra` appended (names must be fresh).
  RingPtr extended(const std::vector<std::string>& extra) const;
  // Ring keeping only the listed variables, in their current order.
  RingPtr restricted(const std::vector<int>& keep) const;
  // A variable name not already used in this ring, derived from `stem`.
  std::string fresh_name(const std::string& stem) const;

 private:
  explicit Ring(std::vector<std::string> names);
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace kzl

#endif
