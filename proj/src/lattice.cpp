#include "kzl/lattice.hpp"

#include <algorithm>
#include <bit>

namespace kzl {

namespace {

std::vector<std::vector<bool>> closure_from_covers(
    int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error("cover index out of range");
    leq[a][b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i]) throw Error("order relation has a cycle");
  return leq;
}

std::vector<std::pair<int, int>> covers_of(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return covers;
}

}  // namespace

Poset::Poset(std::vector<std::string> names,
             const std::vector<std::pair<int, int>>& covers)
    : names_(std::move(names)) {
  leq_ = closure_from_covers(size(), covers);
}

int Poset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw Error("unknown poset element '" + name + "'");
}

std::vector<std::pair<int, int>> Poset::cover_relations() const { return covers_of(leq_); }

void DistributiveLattice::finish_from_order() {
  const int n = size();
  meet_.assign(n, std::vector<int>(n, -1));
  join_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int meet = -1, join = -1;
      for (int c = 0; c < n; ++c) {
        if (leq_[c][a] && leq_[c][b]) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (leq_[d][a] && leq_[d][b] && !leq_[d][c]) greatest = false;
          if (greatest) meet = c;
        }
        if (leq_[a][c] && leq_[b][c]) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (leq_[a][d] && leq_[b][d] && !leq_[c][d]) least = false;
          if (least) join = c;
        }
      }
      if (meet < 0 || join < 0) throw Error("order is not a lattice");
      meet_[a][b] = meet;
      join_[a][b] = join;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet_[a][join_[b][c]] != join_[meet_[a][b]][meet_[a][c]])
          throw Error("lattice is not distributive");
}

DistributiveLattice DistributiveLattice::from_order(
    std::vector<std::string> names, const std::vector<std::pair<int, int>>& covers) {
  DistributiveLattice l;
  l.names_ = std::move(names);
  l.leq_ = closure_from_covers(l.size(), covers);
  l.finish_from_order();
  return l;
}

DistributiveLattice DistributiveLattice::from_poset(const Poset& p, int max_poset_size) {
  if (p.size() > max_poset_size)
    throw Error("poset too large for the ideal-lattice construction");
  const int n = p.size();
  // enumerate downsets of p
  std::vector<Subset> downs;
  for (Subset s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) {
      if (!((s >> b) & 1)) continue;
      for (int a = 0; a < n && ok; ++a)
        if (p.leq(a, b) && !((s >> a) & 1)) ok = false;
    }
    if (ok) downs.push_back(s);
  }
  std::sort(downs.begin(), downs.end(), [](Subset a, Subset b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  DistributiveLattice l;
  for (Subset s : downs) {
    std::string name = "e";
    if (s == 0) name += "0";
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1) name += std::to_string(i + 1);
    l.names_.push_back(name);
  }
  const int m = static_cast<int>(downs.size());
  l.leq_.assign(m, std::vector<bool>(m, false));
  l.meet_.assign(m, std::vector<int>(m, -1));
  l.join_.assign(m, std::vector<int>(m, -1));
  auto position = [&](Subset s) {
    auto it = std::find(downs.begin(), downs.end(), s);
    return static_cast<int>(it - downs.begin());
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      l.leq_[a][b] = (downs[a] & ~downs[b]) == 0;
      l.meet_[a][b] = position(downs[a] & downs[b]);
      l.join_[a][b] = position(downs[a] | downs[b]);
    }
  return l;
}

int DistributiveLattice::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw Error("unknown lattice element '" + name + "'");
}

int DistributiveLattice::bottom() const {
  for (int c = 0; c < size(); ++c) {
    bool least = true;
    for (int d = 0; d < size() && least; ++d)
      if (!leq_[c][d]) least = false;
    if (least) return c;
  }
  throw Error("lattice has no bottom");
}

int DistributiveLattice::top() const {
  for (int c = 0; c < size(); ++c) {
    bool greatest = true;
    for (int d = 0; d < size() && greatest; ++d)
      if (!leq_[d][c]) greatest = false;
    if (greatest) return c;
  }
  throw Error("lattice has no top");
}

DistributiveLattice DistributiveLattice::reversed() const {
  DistributiveLattice l;
  l.names_ = names_;
  const int n = size();
  l.leq_.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) l.leq_[a][b] = leq_[b][a];
  l.meet_ = join_;
  l.join_ = meet_;
  return l;
}

std::vector<std::pair<int, int>> DistributiveLattice::incomparable_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (!leq_[a][b] && !leq_[b][a]) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> DistributiveLattice::cover_relations() const {
  return covers_of(leq_);
}

std::vector<int> DistributiveLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    int lower_covers = 0;
    for (auto [x, y] : cover_relations())
      if (y == a) ++lower_covers;
    if (lower_covers == 1) out.push_back(a);
  }
  return out;
}

Subset DistributiveLattice::irreducibles_below(int a) const {
  auto irr = join_irreducibles();
  Subset s = 0;
  for (std::size_t k = 0; k < irr.size(); ++k)
    if (leq_[irr[k]][a]) s |= 1u << k;
  return s;
}

RingPtr lattice_ring(const DistributiveLattice& l) { return Ring::make(l.names()); }

IdealHandle join_meet_ideal(const DistributiveLattice& l, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (auto [a, b] : l.incomparable_pairs()) {
    Polynomial pa = Polynomial::variable(ring, a);
    Polynomial pb = Polynomial::variable(ring, b);
    Polynomial pm = Polynomial::variable(ring, l.meet(a, b));
    Polynomial pj = Polynomial::variable(ring, l.join(a, b));
    gens.push_back(pa * pb - pm * pj);
  }
  return IdealHandle(ring, std::move(gens));
}

MonomialOrder hibi_order(const DistributiveLattice& l, const RingPtr& ring,
                         std::optional<Subset> inside) {
  const int n = l.size();
  std::vector<bool> placed(n, false);
  std::vector<int> priority;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int c = 0; c < n; ++c) {
      if (placed[c]) continue;
      bool maximal = true;  // among the remaining elements
      for (int d = 0; d < n && maximal; ++d)
        if (!placed[d] && d != c && l.leq(c, d)) maximal = false;
      if (!maximal) continue;
      if (pick < 0) {
        pick = c;
        continue;
      }
      bool c_in = inside && ((*inside >> c) & 1);
      bool p_in = inside && ((*inside >> pick) & 1);
      if (c_in != p_in) {
        if (!c_in) pick = c;  // outside elements first
      } else if (l.name(c) < l.name(pick)) {
        pick = c;
      }
    }
    placed[pick] = true;
    priority.push_back(pick);
  }
  return MonomialOrder::revlex(ring, priority);
}

HostPtr hibi_host(const DistributiveLattice& l) {
  RingPtr ring = lattice_ring(l);
  return QuotientRing::make(ring, join_meet_ideal(l, ring), hibi_order(l, ring));
}

bool is_poset_ideal(const DistributiveLattice& l, Subset s) {
  for (int b = 0; b < l.size(); ++b) {
    if (!((s >> b) & 1)) continue;
    for (int a = 0; a < l.size(); ++a)
      if (l.leq(a, b) && !((s >> a) & 1)) return false;
  }
  return true;
}

std::vector<Subset> poset_ideals(const DistributiveLattice& l, std::size_t cap) {
  const int n = l.size();
  if (n > 20) throw Error("lattice too large for downset enumeration");
  // extend elements topologically, then branch include/exclude
  std::vector<int> topo;
  {
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      for (int c = 0; c < n; ++c) {
        if (placed[c]) continue;
        bool minimal = true;
        for (int d = 0; d < n && minimal; ++d)
          if (!placed[d] && d != c && l.leq(d, c)) minimal = false;
        if (minimal) {
          placed[c] = true;
          topo.push_back(c);
          break;
        }
      }
    }
  }
  std::vector<Subset> out;
  std::vector<std::pair<Subset, int>> stack{{0u, 0}};
  while (!stack.empty()) {
    auto [mask, idx] = stack.back();
    stack.pop_back();
    if (idx == n) {
      out.push_back(mask);
      if (out.size() > cap) throw Error("too many poset ideals");
      continue;
    }
    int e = topo[idx];
    stack.emplace_back(mask, idx + 1);  // exclude e
    bool can_include = true;
    for (int d = 0; d < n && can_include; ++d)
      if (d != e && l.leq(d, e) && !((mask >> d) & 1)) can_include = false;
    if (can_include) stack.emplace_back(mask | (1u << e), idx + 1);
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

Subset cogenerated_ideal(const DistributiveLattice& l, int a) {
  Subset s = 0;
  for (int b = 0; b < l.size(); ++b)
    if (!l.leq(a, b)) s |= 1u << b;
  return s;
}

Subset cogenerated_ideal_including(const DistributiveLattice& l, int a) {
  return cogenerated_ideal(l, a) | (1u << a);
}

std::string subset_display(const DistributiveLattice& l, Subset s) {
  if (s == 0) return "0";
  std::string out;
  for (int i = 0; i < l.size(); ++i)
    if ((s >> i) & 1) {
      if (!out.empty()) out += ",";
      out += l.name(i);
    }
  return out;
}

Subset parse_subset(const DistributiveLattice& l, const std::string& text) {
  if (text == "0" || text == "-" || text.empty()) return 0;
  Subset s = 0;
  std::string cur;
  auto flush = [&] {
    // trim spaces
    size_t b = cur.find_first_not_of(' ');
    size_t e = cur.find_last_not_of(' ');
    if (b == std::string::npos) throw Error("empty element name in subset");
    s |= 1u << l.index_of(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return s;
}

LinearIdeal subset_member(const HostPtr& host, const DistributiveLattice& l, Subset s) {
  std::vector<Polynomial> forms;
  for (int i = 0; i < l.size(); ++i)
    if ((s >> i) & 1) forms.push_back(Polynomial::variable(host->ring(), i));
  return LinearIdeal(host, std::move(forms));
}

CoverColon colon_cover(const HostPtr& host, const DistributiveLattice& l, Subset i,
                       Subset j) {
  if (!is_poset_ideal(l, i) || !is_poset_ideal(l, j))
    throw Error("colon_cover arguments must be poset ideals");
  Subset diff = j & ~i;
  if ((i & ~j) != 0 || std::popcount(diff) != 1)
    throw Error("colon_cover needs a covering pair (one added element)");
  CoverColon out;
  out.added = std::countr_zero(diff);
  out.cogenerated = cogenerated_ideal(l, out.added);
  LinearIdeal lower = subset_member(host, l, i);
  Polynomial a = Polynomial::variable(host->ring(), out.added);
  out.groebner_colon = host->colon(lower.handle(), lower.key(), a);
  LinearIdeal expected = subset_member(host, l, out.cogenerated);
  out.certified = ideal_equal(out.groebner_colon, expected.handle(), host->order());
  return out;
}

namespace {

int chosen_maximal(const DistributiveLattice& l, Subset s) {
  for (int c = 0; c < l.size(); ++c) {
    if (!((s >> c) & 1)) continue;
    bool maximal = true;
    for (int d = 0; d < l.size() && maximal; ++d)
      if (d != c && ((s >> d) & 1) && l.leq(c, d)) maximal = false;
    if (maximal) return c;
  }
  throw Error("empty subset has no maximal element");
}

Filtration downset_family_filtration(const HostPtr& host, const DistributiveLattice& l,
                                     const std::vector<Subset>& family) {
  Filtration f(host);
  std::vector<LinearIdeal> members;
  members.reserve(family.size());
  std::vector<std::string> keys(family.size());
  for (std::size_t k = 0; k < family.size(); ++k) {
    members.push_back(subset_member(host, l, family[k]));
    keys[k] = members.back().key();
  }
  auto key_of = [&](Subset s) -> const std::string* {
    for (std::size_t k = 0; k < family.size(); ++k)
      if (family[k] == s) return &keys[k];
    return nullptr;
  };
  for (std::size_t k = 0; k < family.size(); ++k) {
    Subset s = family[k];
    if (s == 0) {
      f.add(members[k]);
      continue;
    }
    // witness: drop a maximal element whose truncation stays in the family
    bool added = false;
    for (int c = 0; c < l.size() && !added; ++c) {
      if (!((s >> c) & 1)) continue;
      bool maximal = true;
      for (int d = 0; d < l.size() && maximal; ++d)
        if (d != c && ((s >> d) & 1) && l.leq(c, d)) maximal = false;
      if (!maximal) continue;
      const std::string* witness = key_of(s & ~(1u << c));
      const std::string* colon = key_of(cogenerated_ideal(l, c));
      if (!witness || !colon) continue;
      f.add(members[k],
            FiltrationCertificate{*witness, Polynomial::variable(host->ring(), c), *colon});
      added = true;
    }
    if (!added) f.add(members[k]);  // leave it to the search
  }
  return f;
}

}  // namespace

Filtration hibi_koszul_filtration(const HostPtr& host, const DistributiveLattice& l) {
  return downset_family_filtration(host, l, poset_ideals(l));
}

Filtration upset_filtration(const HostPtr& host, const DistributiveLattice& l) {
  DistributiveLattice rev = l.reversed();
  std::vector<Subset> upsets = poset_ideals(rev);
  Filtration f(host);
  for (Subset u : upsets) {
    if (u == 0) {
      f.add(subset_member(host, l, 0));
      continue;
    }
    // remove a minimal element of the upset
    int c = chosen_maximal(rev, u);
    LinearIdeal member = subset_member(host, l, u);
    LinearIdeal witness = subset_member(host, l, u & ~(1u << c));
    Subset colon_set = cogenerated_ideal(rev, c);  // {b : b <= c fails}
    LinearIdeal colon = subset_member(host, l, colon_set);
    f.add(member, FiltrationCertificate{witness.key(),
                                        Polynomial::variable(host->ring(), c),
                                        colon.key()});
  }
  return f;
}

ReducedFamilyReport reduced_family_check(const HostPtr& host,
                                         const DistributiveLattice& l,
                                         const std::vector<Subset>& family,
                                         Exec exec) {
  ReducedFamilyReport out;
  for (Subset s : family)
    if (!is_poset_ideal(l, s)) {
      out.failure = "family member " + subset_display(l, s) + " is not a poset ideal";
      return out;
    }
  auto present = [&](Subset s) {
    return std::find(family.begin(), family.end(), s) != family.end();
  };
  Subset everything = l.size() >= 32 ? ~0u : ((1u << l.size()) - 1);
  if (!present(everything)) {
    out.failure = "the whole lattice is missing";
    return out;
  }
  for (int a = 0; a < l.size(); ++a)
    if (!present(cogenerated_ideal(l, a))) {
      out.failure = "co-generated ideal of " + l.name(a) + " is missing";
      return out;
    }
  for (Subset s : family) {
    if (s == 0) continue;
    bool has_step = false;
    for (int c = 0; c < l.size() && !has_step; ++c)
      if (((s >> c) & 1) && present(s & ~(1u << c)) && is_poset_ideal(l, s & ~(1u << c)))
        has_step = true;
    if (!has_step) {
      out.failure = "no one-element step below " + subset_display(l, s);
      return out;
    }
  }
  out.conditions_ok = true;
  out.verify_report = verify(downset_family_filtration(host, l, family), exec);
  return out;
}

bool initial_ideal_is_incomparable_products(const DistributiveLattice& l,
                                            const HostPtr& host) {
  IdealHandle ini = initial_ideal(host->defining(), host->order());
  std::vector<Polynomial> products;
  for (auto [a, b] : l.incomparable_pairs())
    products.push_back(Polynomial::monomial(
        host->ring(), Monomial::variable(a) * Monomial::variable(b)));
  IdealHandle expected(host->ring(), std::move(products));
  return ideal_equal(ini, expected, host->order());
}

}  // namespace kzl
