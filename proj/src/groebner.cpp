#include "kzl/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>

namespace kzl {

namespace {

std::atomic<long long> g_spair_limit{0};

struct SpairBudget {
  long long used = 0;
  void tick() {
    long long limit = g_spair_limit.load(std::memory_order_relaxed);
    if (limit > 0 && ++used > limit)
      throw GbLimitExceeded("S-pair limit of " + std::to_string(limit) + " exceeded");
  }
};

}  // namespace

void set_spair_limit(long long limit) { g_spair_limit.store(limit); }
long long spair_limit() { return g_spair_limit.load(); }

int GroebnerBasis::max_degree() const {
  int d = 0;
  for (const auto& g : elements) d = std::max(d, g.degree());
  return d;
}

std::string GroebnerBasis::key() const {
  std::string out;
  for (const auto& g : elements) {
    if (!out.empty()) out += "; ";
    out += g.to_string();
  }
  return out;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                  const MonomialOrder& ord, bool* changed) {
  auto res = [&] {
    Polynomial r = f;
    bool did = false;
    std::vector<const Monomial*> leads;
    leads.reserve(divisors.size());
    for (const auto& d : divisors) {
      if (d.is_zero()) throw Error("zero divisor in reduction");
      leads.push_back(&d.leading_monomial(ord));
    }
    for (;;) {
      // largest reducible monomial of r, first matching divisor
      const Term* target = nullptr;
      int divisor = -1;
      for (const auto& t : r.terms()) {
        if (target && !ord.greater(t.mono, target->mono)) continue;
        for (size_t k = 0; k < leads.size(); ++k) {
          if (leads[k]->divides(t.mono)) {
            target = &t;
            divisor = static_cast<int>(k);
            break;
          }
        }
      }
      if (!target) break;
      const Polynomial& d = divisors[divisor];
      Rational factor = target->coeff / d.leading_term(ord).coeff;
      Monomial shift = target->mono.divided_by(*leads[divisor]);
      r -= d.times_monomial(factor, shift);
      did = true;
    }
    return std::pair<Polynomial, bool>(std::move(r), did);
  }();
  if (changed) *changed = res.second;
  return std::move(res.first);
}

ReduceWithCofactors reduce_with_cofactors(const Polynomial& f,
                                          std::span<const Polynomial> divisors,
                                          const MonomialOrder& ord) {
  ReduceWithCofactors out;
  out.remainder = f;
  out.cofactors.assign(divisors.size(), Polynomial::zero(f.ring()));
  std::vector<const Monomial*> leads;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw Error("zero divisor in reduction");
    leads.push_back(&d.leading_monomial(ord));
  }
  for (;;) {
    const Term* target = nullptr;
    int divisor = -1;
    for (const auto& t : out.remainder.terms()) {
      if (target && !ord.greater(t.mono, target->mono)) continue;
      for (size_t k = 0; k < leads.size(); ++k) {
        if (leads[k]->divides(t.mono)) {
          target = &t;
          divisor = static_cast<int>(k);
          break;
        }
      }
    }
    if (!target) break;
    const Polynomial& d = divisors[divisor];
    Rational factor = target->coeff / d.leading_term(ord).coeff;
    Monomial shift = target->mono.divided_by(*leads[divisor]);
    out.remainder -= d.times_monomial(factor, shift);
    out.cofactors[divisor] += Polynomial::monomial(f.ring(), shift, factor);
    out.changed = true;
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord) {
  const Term& tf = f.leading_term(ord);
  const Term& tg = g.leading_term(ord);
  Monomial l = lcm(tf.mono, tg.mono);
  Polynomial a = f.times_monomial(Rational(1) / tf.coeff, l.divided_by(tf.mono));
  Polynomial b = g.times_monomial(Rational(1) / tg.coeff, l.divided_by(tg.mono));
  return a - b;
}

namespace {

// Minimalize + tail-reduce + normalize; input must generate the ideal and be
// a Groebner basis already.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis,
                                    const MonomialOrder& ord) {
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const Polynomial& p) { return p.is_zero(); }),
              basis.end());
  for (auto& g : basis) g = g.monic(ord);
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    int c = ord.compare(a.leading_monomial(ord), b.leading_monomial(ord));
    if (c != 0) return c < 0;
    return Polynomial::canonical_before(a, b);
  });
  // keep only elements whose lead is not divisible by an earlier kept lead
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    const Monomial& lm = g.leading_monomial(ord);
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial(ord).divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  // tail-reduce each against the rest
  std::vector<Polynomial> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(reduce(minimal[i], others, ord).monic(ord));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  return out;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  std::vector<Polynomial> g;
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    if (!same_ring(p.ring(), ord.ring())) throw Error("generator outside the order's ring");
    g.push_back(p.monic(ord));
  }

  struct Pair {
    Monomial l;
    int i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    int c = ord.compare(a.l, b.l);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<int, int>> pending_idx;
  auto push_pairs = [&](int upto) {
    for (int i = 0; i < upto; ++i) {
      pending.insert(Pair{lcm(g[i].leading_monomial(ord), g[upto].leading_monomial(ord)),
                          i, upto});
      pending_idx.emplace(i, upto);
    }
  };
  for (int j = 1; j < static_cast<int>(g.size()); ++j) push_pairs(j);

  auto pending_has = [&](int i, int j) {
    return pending_idx.count(i < j ? std::make_pair(i, j) : std::make_pair(j, i)) > 0;
  };

  SpairBudget budget;
  while (!pending.empty()) {
    Pair p = *pending.begin();
    pending.erase(pending.begin());
    pending_idx.erase({p.i, p.j});
    const Monomial& li = g[p.i].leading_monomial(ord);
    const Monomial& lj = g[p.j].leading_monomial(ord);
    if (coprime(li, lj)) continue;  // product criterion
    // chain criterion: some other basis element divides the lcm and both
    // companion pairs were already treated
    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!g[k].leading_monomial(ord).divides(p.l)) continue;
      if (!pending_has(p.i, k) && !pending_has(p.j, k)) skip = true;
    }
    if (skip) continue;
    budget.tick();
    Polynomial s = s_polynomial(g[p.i], g[p.j], ord);
    Polynomial r = reduce(s, g, ord);
    if (!r.is_zero()) {
      g.push_back(r.monic(ord));
      push_pairs(static_cast<int>(g.size()) - 1);
    }
  }

  GroebnerBasis out{interreduce(std::move(g), ord), ord, true};
  return out;
}

bool is_groebner_basis(const GroebnerBasis& gb) {
  const auto& g = gb.elements;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) {
      Polynomial s = s_polynomial(g[i], g[j], gb.order);
      if (!reduce(s, g, gb.order).is_zero()) return false;
    }
  return true;
}

IdealHandle::IdealHandle() : state_(std::make_shared<State>()) {}

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens)
    : state_(std::make_shared<State>()) {
  state_->ring = std::move(ring);
  for (auto& p : gens) {
    if (!same_ring(p.ring(), state_->ring)) throw Error("generator outside handle ring");
    if (!p.is_zero()) state_->gens.push_back(std::move(p));
  }
}

namespace {
bool paranoid_cache_checks() {
  const char* env = std::getenv("KOSZUL_GB_PARANOID");
  return env && env[0] == '1';
}
}  // namespace

std::shared_ptr<const GroebnerBasis> IdealHandle::groebner(const MonomialOrder& ord) const {
  if (!same_ring(ord.ring(), state_->ring)) throw Error("order ring mismatch");
  const std::string key = ord.spec_string();
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->cache.find(key);
    if (it != state_->cache.end()) {
      if (paranoid_cache_checks() &&
          it->second->elements != buchberger(state_->gens, ord).elements)
        throw Error("cached basis diverges from a recomputation");
      return it->second;
    }
  }
  auto gb = std::make_shared<GroebnerBasis>(buchberger(state_->gens, ord));
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto [it, inserted] = state_->cache.emplace(key, gb);
  return it->second;  // first insert wins; duplicates agree by determinism
}

Polynomial normal_form(const Polynomial& f, const IdealHandle& ideal,
                       const MonomialOrder& ord) {
  auto gb = ideal.groebner(ord);
  return reduce(f, gb->elements, ord);
}

bool contains(const IdealHandle& ideal, const Polynomial& f, const MonomialOrder& ord) {
  return normal_form(f, ideal, ord).is_zero();
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b, const MonomialOrder& ord) {
  auto ga = a.groebner(ord);
  auto gb = b.groebner(ord);
  return ga->elements == gb->elements;
}

bool ideal_subset(const IdealHandle& sub, const IdealHandle& super,
                  const MonomialOrder& ord) {
  for (const auto& g : sub.generators())
    if (!contains(super, g, ord)) return false;
  return true;
}

IdealHandle initial_ideal(const IdealHandle& ideal, const MonomialOrder& ord) {
  auto gb = ideal.groebner(ord);
  std::vector<Polynomial> lead;
  lead.reserve(gb->elements.size());
  for (const auto& g : gb->elements)
    lead.push_back(Polynomial::monomial(ideal.ring(), g.leading_monomial(ord)));
  return IdealHandle(ideal.ring(), std::move(lead));
}

bool is_quadratic_gb(const IdealHandle& ideal, const MonomialOrder& ord) {
  return ideal.groebner(ord)->max_degree() <= 2;
}

IdealHandle with_variables(const IdealHandle& ideal, std::span<const int> vars) {
  std::vector<Polynomial> gens = ideal.generators();
  for (int v : vars) gens.push_back(Polynomial::variable(ideal.ring(), v));
  return IdealHandle(ideal.ring(), std::move(gens));
}

IdealHandle sum(const IdealHandle& a, std::span<const Polynomial> more) {
  std::vector<Polynomial> gens = a.generators();
  for (const auto& p : more) gens.push_back(p);
  return IdealHandle(a.ring(), std::move(gens));
}

GroebnerBasis colon_by_last_variable(const GroebnerBasis& gb) {
  if (!gb.reduced) throw Error("colon_by_last_variable needs a reduced basis");
  if (!gb.order.is_single_revlex())
    throw Error("colon_by_last_variable needs a plain reverse lexicographic order");
  for (const auto& g : gb.elements)
    if (!g.is_homogeneous())
      throw Error("colon_by_last_variable needs a homogeneous basis");
  const int v = gb.order.least_variable();
  std::vector<Polynomial> out;
  out.reserve(gb.elements.size());
  for (const auto& g : gb.elements) {
    if (g.every_term_divisible_by(v))
      out.push_back(g.divided_by_variable(v));
    else
      out.push_back(g);
  }
  return GroebnerBasis{std::move(out), gb.order, false};
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error("intersection ring mismatch");
  const RingPtr& ring = a.ring();
  std::string tname = ring->fresh_name("t");
  RingPtr ext = ring->extended({tname});
  const int tvar = ext->size() - 1;
  Polynomial t = Polynomial::variable(ext, tvar);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.mapped_to(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.mapped_to(ext));
  IdealHandle mix(ext, std::move(gens));
  std::vector<int> block{tvar};
  IdealHandle cut = eliminate(mix, block);
  // map back into the caller's ring object
  std::vector<Polynomial> back;
  for (const auto& g : cut.generators()) back.push_back(g.mapped_to(ring));
  return IdealHandle(ring, std::move(back));
}

IdealHandle colon_general(const IdealHandle& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error("colon by zero");
  const RingPtr& ring = ideal.ring();
  // shrink the generator set first; the reduced basis is canonical anyway
  auto base = ideal.groebner(MonomialOrder::revlex_default(ring));
  if (!base->elements.empty() && base->elements.front().degree() == 0)
    return IdealHandle(ring, {Polynomial::constant(ring, 1)});  // unit ideal
  IdealHandle reduced_ideal(ring, base->elements);
  IdealHandle cut = intersect(reduced_ideal, IdealHandle(ring, {f}));
  MonomialOrder ord = MonomialOrder::revlex_default(ring);
  std::vector<Polynomial> divisor{f};
  std::vector<Polynomial> quotients;
  for (const auto& g : cut.generators()) {
    auto div = reduce_with_cofactors(g, divisor, ord);
    if (!div.remainder.is_zero())
      throw Error("intersection element not divisible in colon computation");
    quotients.push_back(div.cofactors[0]);
  }
  return IdealHandle(ring, std::move(quotients));
}

IdealHandle colon_by_ideal(const IdealHandle& ideal, const IdealHandle& by) {
  if (!same_ring(ideal.ring(), by.ring())) throw Error("colon ring mismatch");
  if (by.generators().empty()) throw Error("colon by the zero ideal");
  bool first = true;
  IdealHandle acc;
  for (const auto& g : by.generators()) {
    IdealHandle c = colon_general(ideal, g);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

IdealHandle eliminate(const IdealHandle& ideal, std::span<const int> block) {
  const RingPtr& ring = ideal.ring();
  if (block.empty()) return ideal;
  std::vector<bool> gone(ring->size(), false);
  for (int v : block) {
    if (v < 0 || v >= ring->size()) throw Error("eliminated variable outside ring");
    gone[v] = true;
  }
  MonomialOrder ord = MonomialOrder::elimination(
      ring, std::vector<int>(block.begin(), block.end()));
  auto gb = ideal.groebner(ord);
  std::vector<int> keep;
  for (int v = 0; v < ring->size(); ++v)
    if (!gone[v]) keep.push_back(v);
  RingPtr sub = ring->restricted(keep);
  std::vector<Polynomial> out;
  for (const auto& g : gb->elements) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (const auto& [v, e] : t.mono.factors())
        if (gone[v]) {
          pure = false;
          break;
        }
    if (pure) out.push_back(g.mapped_to(sub));
  }
  return IdealHandle(sub, std::move(out));
}

IdealHandle kernel_of_monomial_map(const RingPtr& target,
                                   std::span<const Monomial> images,
                                   const std::string& var_stem) {
  if (images.empty()) throw Error("kernel of an empty monomial map");
  std::string stem = var_stem;
  for (;;) {
    bool clash = false;
    for (size_t k = 1; k <= images.size() && !clash; ++k)
      clash = target->has(stem + std::to_string(k));
    if (!clash) break;
    stem = "z_" + stem;
  }
  std::vector<std::string> names = target->names();
  for (size_t k = 1; k <= images.size(); ++k) names.push_back(stem + std::to_string(k));
  RingPtr combined = Ring::make(names);
  std::vector<Polynomial> gens;
  std::vector<int> block;
  for (int v = 0; v < target->size(); ++v) block.push_back(v);
  for (size_t k = 0; k < images.size(); ++k) {
    Polynomial xk = Polynomial::variable(combined, target->size() + static_cast<int>(k));
    Polynomial img = Polynomial::monomial(target, images[k]).mapped_to(combined);
    gens.push_back(xk - img);
  }
  IdealHandle graph_ideal(combined, std::move(gens));
  return eliminate(graph_ideal, block);
}

RatRow linear_form_row(const Polynomial& f) {
  RatRow row(f.ring()->size(), Rational(0));
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != 1) throw Error("not a linear form: " + f.to_string());
    row[t.mono.factors()[0].first] = t.coeff;
  }
  return row;
}

Polynomial row_to_linear_form(const RingPtr& ring, const RatRow& row) {
  Polynomial out = Polynomial::zero(ring);
  for (int v = 0; v < ring->size(); ++v)
    if (row[v] != 0)
      out += Polynomial::variable(ring, v).scaled(row[v]);
  return out;
}

std::vector<Polynomial> degree_one_part(const IdealHandle& ideal,
                                        const MonomialOrder& ord) {
  const RingPtr& ring = ideal.ring();
  const int n = ring->size();
  std::vector<Polynomial> nf(n, Polynomial::zero(ring));
  for (int v = 0; v < n; ++v)
    nf[v] = normal_form(Polynomial::variable(ring, v), ideal, ord);
  // rows indexed by every monomial appearing in some normal form
  std::vector<Monomial> monos;
  for (const auto& f : nf)
    for (const auto& t : f.terms()) monos.push_back(t.mono);
  std::sort(monos.begin(), monos.end(), storage_before);
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  RatMatrix m(monos.size(), RatRow(n, Rational(0)));
  for (int v = 0; v < n; ++v)
    for (const auto& t : nf[v].terms()) {
      auto it = std::lower_bound(monos.begin(), monos.end(), t.mono, storage_before);
      m[it - monos.begin()][v] = t.coeff;
    }
  auto basis = kernel_basis(std::move(m), n);
  // canonical: reduced echelon of the kernel
  RatMatrix b(basis.begin(), basis.end());
  rref(b);
  std::vector<Polynomial> out;
  for (const auto& row : b) out.push_back(row_to_linear_form(ring, row));
  return out;
}

bool is_linearly_generated_mod(const IdealHandle& base, const IdealHandle& sup,
                               const MonomialOrder& ord) {
  if (!ideal_subset(base, sup, ord))
    throw Error("is_linearly_generated_mod: base is not contained in the ideal");
  auto linear = degree_one_part(sup, ord);
  IdealHandle candidate = sum(base, linear);
  return ideal_equal(candidate, sup, ord);
}

bool sequence_has_linear_quotients(const IdealHandle& ideal,
                                   std::span<const int> sequence,
                                   const MonomialOrder& ord) {
  std::vector<int> earlier;
  for (int v : sequence) {
    IdealHandle truncated = with_variables(ideal, earlier);
    IdealHandle colon = colon_general(truncated, Polynomial::variable(ideal.ring(), v));
    if (!is_linearly_generated_mod(ideal, colon, ord)) return false;
    earlier.push_back(v);
  }
  return true;
}

}  // namespace kzl
