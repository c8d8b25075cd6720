#include "kzl/monomial.hpp"

#include <algorithm>

namespace kzl {

Monomial::Monomial(std::vector<std::pair<int, int>> exps) : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end());
  // merge duplicates, drop zeros
  std::vector<std::pair<int, int>> merged;
  for (const auto& [v, e] : exps_) {
    if (e < 0) throw Error("negative exponent");
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  exps_ = std::move(merged);
  degree_ = 0;
  for (const auto& [v, e] : exps_) degree_ += e;
}

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : exps_) {
    if (v == var) return e;
    if (v > var) break;
  }
  return 0;
}

std::vector<int> Monomial::support() const {
  std::vector<int> vars;
  vars.reserve(exps_.size());
  for (const auto& [v, e] : exps_) vars.push_back(v);
  return vars;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.exps_.reserve(exps_.size() + rhs.exps_.size());
  auto a = exps_.begin(), b = rhs.exps_.begin();
  while (a != exps_.end() || b != rhs.exps_.end()) {
    if (b == rhs.exps_.end() || (a != exps_.end() && a->first < b->first))
      out.exps_.push_back(*a++);
    else if (a == exps_.end() || b->first < a->first)
      out.exps_.push_back(*b++);
    else {
      out.exps_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  out.degree_ = degree_ + rhs.degree_;
  return out;
}

bool Monomial::divides(const Monomial& into) const {
  auto a = exps_.begin();
  auto b = into.exps_.begin();
  while (a != exps_.end()) {
    while (b != into.exps_.end() && b->first < a->first) ++b;
    if (b == into.exps_.end() || b->first != a->first || b->second < a->second)
      return false;
    ++a;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& by) const {
  Monomial out;
  auto b = by.exps_.begin();
  for (const auto& [v, e] : exps_) {
    int sub = 0;
    if (b != by.exps_.end() && b->first == v) {
      sub = b->second;
      ++b;
    }
    if (e < sub) throw Error("monomial division is not exact");
    if (e > sub) out.exps_.emplace_back(v, e - sub);
  }
  if (b != by.exps_.end()) throw Error("monomial division is not exact");
  out.degree_ = degree_ - by.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first))
      out.exps_.push_back(*i++);
    else if (i == a.exps_.end() || j->first < i->first)
      out.exps_.push_back(*j++);
    else {
      out.exps_.emplace_back(i->first, std::max(i->second, j->second));
      ++i, ++j;
    }
  }
  for (const auto& [v, e] : out.exps_) out.degree_ += e;
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() && j != b.exps_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else {
      out.exps_.emplace_back(i->first, std::min(i->second, j->second));
      ++i, ++j;
    }
  }
  for (const auto& [v, e] : out.exps_) out.degree_ += e;
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() && j != b.exps_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else
      return false;
  }
  return true;
}

std::string Monomial::to_string(const Ring& ring) const {
  if (is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : exps_) {
    if (!out.empty()) out += "*";
    out += ring.name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool storage_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& ea = a.factors();
  const auto& eb = b.factors();
  auto i = ea.begin(), j = eb.begin();
  while (i != ea.end() && j != eb.end()) {
    if (i->first != j->first) return i->first < j->first;
    if (i->second != j->second) return i->second > j->second;
    ++i, ++j;
  }
  return false;  // equal (sizes must match once prefixes agree and degrees tie)
}

}  // namespace kzl
