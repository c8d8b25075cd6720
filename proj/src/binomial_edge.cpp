#include "kzl/binomial_edge.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace kzl {

Polynomial EdgeRingContext::edge_binomial(int i, int j) const {
  if (i > j) std::swap(i, j);
  Polynomial xi = xvar(i), xj = xvar(j), yi = yvar(i), yj = yvar(j);
  return xi * yj - xj * yi;
}

EdgeRingContext build_context(const Graph& g) {
  const int n = g.size();
  if (n < 1) throw Error("edge ring needs at least one vertex");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  RingPtr ring = Ring::make(names);

  std::vector<int> revlex_priority, lex_priority;
  for (int i = 1; i <= n; ++i) revlex_priority.push_back(n + i - 1);  // y1..yn
  for (int i = 1; i <= n; ++i) revlex_priority.push_back(i - 1);      // x1..xn
  for (int i = 0; i < 2 * n; ++i) lex_priority.push_back(i);

  EdgeRingContext ctx{g,
                      ring,
                      IdealHandle(),
                      MonomialOrder::revlex(ring, revlex_priority),
                      MonomialOrder::lex(ring, lex_priority),
                      nullptr};
  std::vector<Polynomial> gens;
  for (auto [i, j] : g.edges()) gens.push_back(ctx.edge_binomial(i, j));
  ctx.edge_ideal = IdealHandle(ring, std::move(gens));
  ctx.host = QuotientRing::make(ring, ctx.edge_ideal, ctx.revlex_yx);
  return ctx;
}

std::pair<bool, bool> closed_iff_quadratic(const EdgeRingContext& ctx) {
  bool closed = is_closed_labeling(ctx.graph).closed;
  bool quadratic = is_quadratic_gb(ctx.edge_ideal, ctx.revlex_yx);
  return {closed, quadratic};
}

namespace {

std::vector<int> x_tail_vars(const EdgeRingContext& ctx, int from) {
  // x_n, x_{n-1}, ..., x_from
  std::vector<int> vars;
  for (int v = ctx.graph.size(); v >= from; --v) vars.push_back(ctx.x(v));
  return vars;
}

std::vector<int> y_range_vars(const EdgeRingContext& ctx, int lo, int hi) {
  std::vector<int> vars;
  for (int v = lo; v <= hi; ++v) vars.push_back(ctx.y(v));
  return vars;
}

}  // namespace

SequenceColon colon_x_sequence(const EdgeRingContext& ctx, int i) {
  const int n = ctx.graph.size();
  if (i < 1 || i > n) throw Error("vertex out of range");
  SequenceColon out;
  out.closed = is_closed_labeling(ctx.graph).closed;

  IdealHandle truncated = with_variables(ctx.edge_ideal, x_tail_vars(ctx, i + 1));
  out.colon = colon_general(truncated, ctx.xvar(i));
  out.linear = is_linearly_generated_mod(ctx.edge_ideal, out.colon, ctx.revlex_yx);

  out.formula_vars = x_tail_vars(ctx, i + 1);
  for (int j = i + 1; j <= n; ++j)
    if (ctx.graph.adjacent(i, j)) out.formula_vars.push_back(ctx.y(j));
  IdealHandle formula = with_variables(ctx.edge_ideal, out.formula_vars);
  out.formula_matches = ideal_equal(formula, out.colon, ctx.revlex_yx);
  return out;
}

bool has_linear_quotients_x(const EdgeRingContext& ctx) {
  std::vector<int> sequence = x_tail_vars(ctx, 1);  // x_n, ..., x_1
  return sequence_has_linear_quotients(ctx.edge_ideal, sequence, ctx.revlex_yx);
}

YStepColon colon_y_step(const EdgeRingContext& ctx, int k) {
  const int n = ctx.graph.size();
  if (k < 1 || k > n - 1) throw Error("k out of range");
  if (!is_closed_labeling(ctx.graph).closed) throw Error("labeling is not closed");
  NeighborIntervals nb = neighbor_intervals(ctx.graph, k);
  if (nb.above.empty() || !nb.above_is_interval)
    throw Error("N^>(k) is not a nonempty interval");
  if (nb.min_below_next == 0) throw Error("N^<(k+1) is empty");
  YStepColon out;
  out.ell = nb.max_above;
  out.i = nb.min_below_next;

  std::vector<int> lhs_vars = x_tail_vars(ctx, k + 1);
  for (int v : y_range_vars(ctx, k + 2, out.ell)) lhs_vars.push_back(v);
  IdealHandle lhs_base = with_variables(ctx.edge_ideal, lhs_vars);
  out.lhs_colon = colon_general(lhs_base, ctx.yvar(k + 1));

  std::vector<int> rhs_vars = x_tail_vars(ctx, out.i);
  for (int v : y_range_vars(ctx, k + 2, out.ell)) rhs_vars.push_back(v);
  out.rhs = with_variables(ctx.edge_ideal, rhs_vars);

  out.certified = ideal_equal(out.lhs_colon, out.rhs, ctx.revlex_yx);
  return out;
}

bool y_step_regular(const EdgeRingContext& ctx, int k, int s) {
  const int n = ctx.graph.size();
  if (k < 1 || k > n - 1) throw Error("k out of range");
  if (!is_closed_labeling(ctx.graph).closed) throw Error("labeling is not closed");
  NeighborIntervals nb = neighbor_intervals(ctx.graph, k);
  if (nb.above.empty() || nb.min_below_next == 0)
    throw Error("neighbor intervals degenerate");
  const int ell = nb.max_above;
  if (s < k + 2 || s > ell) throw Error("s out of range");
  std::vector<int> vars = x_tail_vars(ctx, nb.min_below_next);
  for (int v : y_range_vars(ctx, s + 1, ell)) vars.push_back(v);
  IdealHandle base = with_variables(ctx.edge_ideal, vars);
  IdealHandle colon = colon_general(base, ctx.yvar(s));
  return ideal_equal(colon, base, ctx.revlex_yx);
}

Filtration koszul_filtration(const EdgeRingContext& ctx) {
  if (!is_closed_labeling(ctx.graph).closed)
    throw Error("Koszul filtration construction needs a closed labeling");
  const int n = ctx.graph.size();
  const bool connected = is_connected(ctx.graph);
  const HostPtr& host = ctx.host;

  auto linear_member = [&](const std::vector<int>& vars) {
    std::vector<Polynomial> forms;
    for (int v : vars) forms.push_back(Polynomial::variable(ctx.ring, v));
    return LinearIdeal(host, std::move(forms));
  };

  Filtration f(host);
  LinearIdeal zero = zero_ideal(host);
  std::string zero_key = zero.key();
  f.add(zero);

  // interval data: l[k] = max N^>(k), mu[v] = min N^<(v)
  std::vector<int> ell(n + 1, 0), mu(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    NeighborIntervals nb = neighbor_intervals(ctx.graph, v);
    ell[v] = nb.max_above;
    mu[v] = nb.below.empty() ? 0 : nb.below.front();
  }

  // x-chain members (x_n..x_m) and full-x-plus-y-tail members
  std::vector<std::string> xchain_key(n + 2);
  xchain_key[n + 1] = zero_key;
  for (int m = n; m >= 1; --m)
    xchain_key[m] = f.add(linear_member(x_tail_vars(ctx, m)));
  std::vector<std::string> ytail_key(n + 2);
  ytail_key[n + 1] = xchain_key[1];
  for (int k = n; k >= 1; --k) {
    std::vector<int> vars = x_tail_vars(ctx, 1);
    for (int v : y_range_vars(ctx, k, n)) vars.push_back(v);
    ytail_key[k] = f.add(linear_member(vars));
  }

  // Mixed members (x_n..x_m, y_s..y_t). Peeling y_s off such an ideal has
  // colon (x_n..x_m', y_{s+1}..y_t) with m' = min(m, min N^<(s)), so the
  // family must be closed under shrinking the x-range along the peel: the
  // plain two-per-k list leaves the shorter chains without a witness when
  // the intervals ell[k] jump upward.
  std::map<std::tuple<int, int, int>, std::string> mixed;
  auto mixed_member = [&](int m, int s, int t) -> std::string {
    if (s > t) return xchain_key[m];
    std::vector<int> vars = x_tail_vars(ctx, m);
    for (int v : y_range_vars(ctx, s, t)) vars.push_back(v);
    return f.add(linear_member(vars));
  };
  // worklist of chains (m, s..t)
  std::vector<std::tuple<int, int, int>> todo;
  for (int k = 1; k <= n - 1; ++k)
    if (ell[k] >= k + 1) todo.emplace_back(k + 1, k + 1, ell[k]);
  while (!todo.empty()) {
    auto [m, s0, t] = todo.back();
    todo.pop_back();
    for (int s = s0; s <= t; ++s) {
      auto key = std::make_tuple(m, s, t);
      if (mixed.count(key)) break;  // the rest of the chain exists already
      mixed[key] = mixed_member(m, s, t);
      int shrunk = (mu[s] > 0) ? std::min(m, mu[s]) : m;
      if (shrunk < m) todo.emplace_back(shrunk, s + 1, t);
    }
  }

  if (!connected) return f;  // members only; certificates are searched

  // Certificates mirror the colon identities (valid once neighbor sets are
  // intervals, which connectedness guarantees for a closed labeling).
  auto member_of = [&](const std::string& key) -> const LinearIdeal& {
    return f.members().at(key);
  };
  auto mixed_key = [&](int m, int s, int t) -> const std::string& {
    if (s > t) return xchain_key[m];
    return mixed.at(std::make_tuple(m, s, t));
  };
  Filtration certified(host);
  certified.add(zero);
  // x-chain: (x_n..x_k) over (x_n..x_{k+1}); the colon adds y_{N^>(k)}
  for (int k = n; k >= 1; --k) {
    std::string colon;
    if (k == n)
      colon = zero_key;  // x_n is regular on R
    else if (ell[k] == 0)
      colon = xchain_key[k + 1];
    else
      colon = mixed_key(k + 1, k + 1, ell[k]);
    certified.add(member_of(xchain_key[k]),
                  FiltrationCertificate{xchain_key[k + 1], ctx.xvar(k), colon});
  }
  // full-x plus y-tail: y_k is regular modulo the previous member
  for (int k = n; k >= 1; --k)
    certified.add(member_of(ytail_key[k]),
                  FiltrationCertificate{ytail_key[k + 1], ctx.yvar(k), ytail_key[k + 1]});
  // mixed chains: peel the leading y
  for (const auto& [pos, key] : mixed) {
    auto [m, s, t] = pos;
    int shrunk = (mu[s] > 0) ? std::min(m, mu[s]) : m;
    certified.add(member_of(key),
                  FiltrationCertificate{mixed_key(m, s + 1, t), ctx.yvar(s),
                                        mixed_key(shrunk, s + 1, t)});
  }
  return certified;
}

CUniversalReport c_universal_necessary(const EdgeRingContext& ctx) {
  const int n = ctx.graph.size();
  CUniversalReport out;
  out.colon_family_ok = true;
  for (int i = 1; i <= n && out.colon_family_ok; ++i) {
    IdealHandle colon = colon_general(ctx.edge_ideal, ctx.xvar(i));
    std::vector<int> inside;
    for (int v = 0; v < ctx.ring->size(); ++v)
      if (contains(colon, Polynomial::variable(ctx.ring, v), ctx.revlex_yx))
        inside.push_back(v);
    IdealHandle candidate = with_variables(ctx.edge_ideal, inside);
    if (!ideal_equal(candidate, colon, ctx.revlex_yx)) {
      out.colon_family_ok = false;
      out.failing_vertex = i;
      // the classical witness: j,k adjacent to i with {j,k} missing
      for (int j = 1; j <= n && !out.witness; ++j) {
        if (!ctx.graph.adjacent(i, j)) continue;
        for (int k = j + 1; k <= n; ++k) {
          if (!ctx.graph.adjacent(i, k) || ctx.graph.adjacent(j, k)) continue;
          out.witness = ctx.xvar(j) * ctx.yvar(k) - ctx.xvar(k) * ctx.yvar(j);
          break;
        }
      }
    }
  }
  if (n <= 3) {
    // exhaustive: all ideals generated by subsets of the variables
    Filtration family(ctx.host);
    const int vars = ctx.ring->size();
    for (int mask = 0; mask < (1 << vars); ++mask) {
      std::vector<Polynomial> forms;
      for (int v = 0; v < vars; ++v)
        if ((mask >> v) & 1) forms.push_back(Polynomial::variable(ctx.ring, v));
      family.add(LinearIdeal(ctx.host, std::move(forms)));
    }
    out.full_family_ok = verify(family).ok;
  }
  return out;
}

std::vector<int> multidegree(const EdgeRingContext& ctx, const Monomial& m) {
  const int n = ctx.graph.size();
  std::vector<int> deg(n, 0);
  for (const auto& [v, e] : m.factors()) deg[v % n] += e;
  return deg;
}

bool is_multihomogeneous(const EdgeRingContext& ctx, const Polynomial& f) {
  if (f.is_zero()) return true;
  auto first = multidegree(ctx, f.terms().front().mono);
  for (const auto& t : f.terms())
    if (multidegree(ctx, t.mono) != first) return false;
  return true;
}

}  // namespace kzl
