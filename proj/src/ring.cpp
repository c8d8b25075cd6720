#include "kzl/ring.hpp"

#include <cctype>

namespace kzl {

namespace {
bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}
}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!valid_identifier(names_[i]))
      throw Error("invalid variable name: '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw Error("duplicate variable name: '" + names_[i] + "'");
  }
}

RingPtr Ring::make(std::vector<std::string> names) {
  return RingPtr(new Ring(std::move(names)));
}

std::optional<int> Ring::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Ring::index_of(const std::string& name) const {
  auto v = find(name);
  if (!v) throw Error("unknown variable '" + name + "'");
  return *v;
}

RingPtr Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = names_;
  for (const auto& n : extra) names.push_back(n);
  return make(std::move(names));
}

RingPtr Ring::restricted(const std::vector<int>& keep) const {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (int v : keep) names.push_back(name(v));
  return make(std::move(names));
}

std::string Ring::fresh_name(const std::string& stem) const {
  if (!has(stem)) return stem;
  for (int k = 0;; ++k) {
    std::string cand = stem + "_" + std::to_string(k);
    if (!has(cand)) return cand;
  }
}

}  // namespace kzl
