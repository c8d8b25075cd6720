#include "kzl/koszul.hpp"

#include <algorithm>

namespace kzl {

QuotientRing::QuotientRing(RingPtr ring, IdealHandle defining, MonomialOrder order)
    : ring_(std::move(ring)), defining_(std::move(defining)), order_(std::move(order)) {
  if (!same_ring(ring_, defining_.ring()) || !same_ring(ring_, order_.ring()))
    throw Error("quotient ring pieces live in different rings");
  for (const auto& g : defining_.generators()) {
    if (!g.is_homogeneous() || g.degree() < 2)
      throw Error("defining ideal must be homogeneous in degrees >= 2");
  }
  defining_key_ = defining_.groebner(order_)->key();
}

HostPtr QuotientRing::make(RingPtr ring, IdealHandle defining, MonomialOrder order) {
  return HostPtr(new QuotientRing(std::move(ring), std::move(defining), std::move(order)));
}

std::string QuotientRing::host_key() const {
  std::string out;
  for (const auto& n : ring_->names()) out += n + ",";
  out += "/" + defining_key_ + "/" + order_.spec_string();
  return out;
}

IdealHandle QuotientRing::colon(const IdealHandle& around, const std::string& around_key,
                                const Polynomial& ell) const {
  const auto memo_key = std::make_pair(around_key, ell.to_string());
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = colon_memo_.find(memo_key);
    if (it != colon_memo_.end()) return it->second;
  }
  IdealHandle result = colon_general(around, ell);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto [it, inserted] = colon_memo_.emplace(memo_key, result);
  return it->second;
}

bool same_host(const HostPtr& a, const HostPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->host_key() == b->host_key();
}

LinearIdeal::LinearIdeal(HostPtr host, std::vector<Polynomial> forms)
    : host_(std::move(host)), forms_(std::move(forms)) {
  RatMatrix rows;
  for (const auto& f : forms_) {
    if (f.is_zero()) continue;
    if (f.degree() != 1 || !f.is_homogeneous())
      throw Error("linear ideal generator of degree != 1: " + f.to_string());
    rows.push_back(linear_form_row(f));
  }
  rref(rows);
  for (const auto& row : rows)
    span_.push_back(row_to_linear_form(host_->ring(), row));
  std::vector<Polynomial> gens = host_->defining().generators();
  for (const auto& f : span_) gens.push_back(f);
  handle_ = IdealHandle(host_->ring(), std::move(gens));
  key_ = handle_.groebner(host_->order())->key();
}

std::string LinearIdeal::display() const {
  if (span_.empty()) return "0";
  std::string out;
  for (const auto& f : span_) {
    if (!out.empty()) out += ", ";
    out += f.to_string();
  }
  return out;
}

LinearIdeal zero_ideal(const HostPtr& host) { return LinearIdeal(host, {}); }

LinearIdeal maximal_ideal(const HostPtr& host) {
  std::vector<Polynomial> vars;
  for (int v = 0; v < host->ring()->size(); ++v)
    vars.push_back(Polynomial::variable(host->ring(), v));
  return LinearIdeal(host, std::move(vars));
}

bool contains(const LinearIdeal& outer, const LinearIdeal& inner) {
  if (!same_host(outer.host(), inner.host())) throw Error("host mismatch");
  for (const auto& f : inner.span())
    if (!kzl::contains(outer.handle(), f, outer.host()->order())) return false;
  return true;
}

CyclicWitness cyclic_over(const LinearIdeal& ideal, const LinearIdeal& sub) {
  if (!contains(ideal, sub)) throw Error("cyclic_over: not a subideal");
  if (ideal.key() == sub.key()) return CyclicWitness{true, std::nullopt};
  if (ideal.dim() - sub.dim() != 1) return CyclicWitness{false, std::nullopt};
  RatMatrix sub_rows;
  for (const auto& f : sub.span()) sub_rows.push_back(linear_form_row(f));
  for (const auto& f : ideal.span())
    if (!span_contains(sub_rows, linear_form_row(f)))
      return CyclicWitness{false, f};
  throw Error("cyclic_over: degree-one spans are inconsistent");
}

ColonResult colon_over(const LinearIdeal& sub, const Polynomial& ell) {
  const HostPtr& host = sub.host();
  ColonResult out{host->colon(sub.handle(), sub.key(), ell), "", false, std::nullopt, 0};
  out.key = out.ideal.groebner(host->order())->key();
  auto linear = degree_one_part(out.ideal, host->order());
  IdealHandle candidate = sum(host->defining(), linear);
  if (ideal_equal(candidate, out.ideal, host->order())) {
    out.linear = true;
    out.as_linear = LinearIdeal(host, std::move(linear));
  } else {
    // degree of a reduced-basis element outside the linear candidate
    for (const auto& g : out.ideal.groebner(host->order())->elements)
      if (!kzl::contains(candidate, g, host->order())) {
        out.offending_degree = g.degree();
        break;
      }
  }
  return out;
}

const std::string& Filtration::add(LinearIdeal ideal) {
  if (!same_host(ideal.host(), host_)) throw Error("filtration host mismatch");
  std::string key = ideal.key();
  auto [it, inserted] = members_.emplace(std::move(key), std::move(ideal));
  return it->first;
}

const std::string& Filtration::add(LinearIdeal ideal, FiltrationCertificate cert) {
  const std::string& key = add(std::move(ideal));
  certs_.emplace(key, std::move(cert));
  return key;
}

namespace {

// ell must lie in the span of `ideal` and outside the span of `sub`, and
// close the one-dimensional gap.
bool witness_spans_gap(const LinearIdeal& ideal, const LinearIdeal& sub,
                       const Polynomial& ell) {
  if (ideal.dim() - sub.dim() != 1) return false;
  RatMatrix ideal_rows, sub_rows;
  for (const auto& f : ideal.span()) ideal_rows.push_back(linear_form_row(f));
  for (const auto& f : sub.span()) sub_rows.push_back(linear_form_row(f));
  RatRow er = linear_form_row(ell);
  return span_contains(ideal_rows, er) && !span_contains(sub_rows, er);
}

MemberOutcome certify_member(const Filtration& f, const LinearIdeal& member,
                             const FiltrationCertificate* supplied) {
  MemberOutcome out;
  out.member_key = member.key();
  out.display = member.display();

  if (supplied) {
    out.via_supplied = true;
    out.used = *supplied;
    auto it = f.members().find(supplied->witness_key);
    if (it == f.members().end()) {
      out.failure = "supplied witness is not a member";
      return out;
    }
    const LinearIdeal& sub = it->second;
    if (!contains(member, sub) || member.key() == sub.key()) {
      out.failure = "supplied witness is not a proper subideal";
      return out;
    }
    if (!witness_spans_gap(member, sub, supplied->ell)) {
      out.failure = "supplied cyclic witness does not span the quotient";
      return out;
    }
    ColonResult colon = colon_over(sub, supplied->ell);
    if (colon.key != supplied->colon_key) {
      out.failure = "certified colon differs from the computed one";
      return out;
    }
    if (!colon.linear) {
      out.failure = "colon has a minimal generator of degree " +
                    std::to_string(colon.offending_degree);
      return out;
    }
    if (!f.has_member(colon.key)) {
      out.failure = "colon is not a member";
      return out;
    }
    out.ok = true;
    return out;
  }

  // search candidates: dimension one less, ordered by key (all candidates
  // share the same dimension, so decreasing-dimension order reduces to this)
  for (const auto& [key, sub] : f.members()) {
    if (sub.dim() != member.dim() - 1) continue;
    if (!contains(member, sub)) continue;
    CyclicWitness cyc = cyclic_over(member, sub);
    if (!cyc.ell) continue;
    ColonResult colon = colon_over(sub, *cyc.ell);
    if (!colon.linear || !f.has_member(colon.key)) continue;
    out.ok = true;
    out.used = FiltrationCertificate{sub.key(), *cyc.ell, colon.key};
    return out;
  }
  out.failure = "no member below certifies the quotient";
  return out;
}

}  // namespace

VerifyReport verify(const Filtration& f, Exec exec, bool force_search) {
  VerifyReport report;
  const std::string zero_key = zero_ideal(f.host()).key();
  const std::string max_key = maximal_ideal(f.host()).key();
  if (!f.has_member(zero_key)) report.failures.push_back("zero ideal absent");
  if (!f.has_member(max_key)) report.failures.push_back("maximal ideal absent");

  std::vector<const LinearIdeal*> todo;
  for (const auto& [key, member] : f.members())
    if (key != zero_key) todo.push_back(&member);

  std::vector<MemberOutcome> outcomes(todo.size());
  parallel_for(todo.size(), exec, [&](std::size_t i) {
    const LinearIdeal& member = *todo[i];
    const FiltrationCertificate* supplied = nullptr;
    if (!force_search) {
      auto it = f.certificates().find(member.key());
      if (it != f.certificates().end()) supplied = &it->second;
    }
    outcomes[i] = certify_member(f, member, supplied);
    if (outcomes[i].ok) {
      auto wit = f.members().find(outcomes[i].used.witness_key);
      if (wit != f.members().end()) outcomes[i].witness_display = wit->second.display();
      auto col = f.members().find(outcomes[i].used.colon_key);
      if (col != f.members().end()) outcomes[i].colon_display = col->second.display();
    }
  });

  std::sort(outcomes.begin(), outcomes.end(),
            [](const MemberOutcome& a, const MemberOutcome& b) {
              return a.member_key < b.member_key;
            });
  for (const auto& o : outcomes)
    if (!o.ok)
      report.failures.push_back("member (" + o.display + "): " + o.failure);
  report.outcomes = std::move(outcomes);
  report.ok = report.failures.empty();
  return report;
}

bool is_flag(const Filtration& f, const VerifyReport& report) {
  if (!report.ok) throw Error("is_flag requires a verified filtration");
  const int n = f.host()->ring()->size();
  if (static_cast<int>(f.size()) != n + 1) return false;
  std::vector<const LinearIdeal*> chain(n + 1, nullptr);
  for (const auto& [key, member] : f.members()) {
    int d = member.dim();
    if (d < 0 || d > n || chain[d]) return false;
    chain[d] = &member;
  }
  for (int d = 0; d < n; ++d)
    if (!contains(*chain[d + 1], *chain[d])) return false;
  for (int d = 0; d < n; ++d) {
    CyclicWitness cyc = cyclic_over(*chain[d + 1], *chain[d]);
    if (!cyc.ell) return false;
    ColonResult colon = colon_over(*chain[d], *cyc.ell);
    if (!colon.linear || !f.has_member(colon.key)) return false;
  }
  return true;
}

Filtration filtration_union(const Filtration& a, const Filtration& b) {
  if (!same_host(a.host(), b.host())) throw Error("union of filtrations over different hosts");
  Filtration out(a.host());
  for (const auto& [key, member] : a.members()) {
    auto cert = a.certificates().find(key);
    if (cert != a.certificates().end())
      out.add(member, cert->second);
    else
      out.add(member);
  }
  for (const auto& [key, member] : b.members()) {
    auto cert = b.certificates().find(key);
    if (cert != b.certificates().end() && !out.has_member(key))
      out.add(member, cert->second);
    else
      out.add(member);
  }
  return out;
}

MinimalityReport minimality_probe(const Filtration& f, Exec exec,
                                  std::size_t exhaustive_limit) {
  VerifyReport base = verify(f, exec, false);
  if (!base.ok) throw Error("minimality_probe requires a verified filtration");

  // precompute every (sub, ideal) colon with a one-dimensional gap
  std::vector<const LinearIdeal*> members;
  for (const auto& [key, m] : f.members()) members.push_back(&m);
  const std::size_t n = members.size();
  struct PairCert {
    std::size_t sub, ideal;
    std::string colon_key;
  };
  std::vector<std::vector<PairCert>> parents(n);  // by ideal index
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (members[j]->dim() != members[i]->dim() - 1) continue;
      if (!contains(*members[i], *members[j])) continue;
      candidates.emplace_back(j, i);
    }
  std::vector<std::optional<PairCert>> computed(candidates.size());
  parallel_for(candidates.size(), exec, [&](std::size_t c) {
    auto [j, i] = candidates[c];
    CyclicWitness cyc = cyclic_over(*members[i], *members[j]);
    if (!cyc.ell) return;
    ColonResult colon = colon_over(*members[j], *cyc.ell);
    if (!colon.linear) return;
    computed[c] = PairCert{j, i, colon.key};
  });
  for (auto& pc : computed)
    if (pc) parents[pc->ideal].push_back(*pc);

  const std::string zero_key = zero_ideal(f.host()).key();
  const std::string max_key = maximal_ideal(f.host()).key();
  auto subset_verifies = [&](const std::vector<bool>& in) {
    std::map<std::string, bool> present;
    for (std::size_t i = 0; i < n; ++i)
      if (in[i]) present[members[i]->key()] = true;
    if (!present.count(zero_key) || !present.count(max_key)) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in[i] || members[i]->key() == zero_key) continue;
      bool okay = false;
      for (const auto& pc : parents[i])
        if (in[pc.sub] && present.count(pc.colon_key)) {
          okay = true;
          break;
        }
      if (!okay) return false;
    }
    return true;
  };

  MinimalityReport out;
  for (std::size_t drop = 0; drop < n; ++drop) {
    std::vector<bool> in(n, true);
    in[drop] = false;
    if (subset_verifies(in)) out.removable.push_back(members[drop]->key());
  }
  if (n <= exhaustive_limit) {
    bool any_proper = false;
    for (std::uint64_t mask = 0; mask + 1 < (1ull << n) && !any_proper; ++mask) {
      std::vector<bool> in(n);
      for (std::size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1;
      if (subset_verifies(in)) any_proper = true;
    }
    out.fully_minimal = !any_proper;
  }
  return out;
}

}  // namespace kzl
