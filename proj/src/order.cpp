#include "kzl/order.hpp"

#include <algorithm>
#include <numeric>

namespace kzl {

MonomialOrder::MonomialOrder(RingPtr ring, std::vector<OrderBlock> blocks)
    : ring_(std::move(ring)), blocks_(std::move(blocks)) {
  const int n = ring_->size();
  block_of_.assign(n, -1);
  rank_of_.assign(n, -1);
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    const auto& vars = blocks_[b].vars;
    if (vars.empty()) throw Error("empty order block");
    for (int r = 0; r < static_cast<int>(vars.size()); ++r) {
      int v = vars[r];
      if (v < 0 || v >= n) throw Error("order references variable outside ring");
      if (block_of_[v] != -1) throw Error("variable listed twice in order");
      block_of_[v] = b;
      rank_of_[v] = r;
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of_[v] == -1)
      throw Error("order does not cover variable '" + ring_->name(v) + "'");
}

MonomialOrder MonomialOrder::lex(RingPtr ring, std::vector<int> priority) {
  return MonomialOrder(std::move(ring), {OrderBlock{OrderKind::Lex, std::move(priority)}});
}

MonomialOrder MonomialOrder::revlex(RingPtr ring, std::vector<int> priority) {
  return MonomialOrder(std::move(ring), {OrderBlock{OrderKind::RevLex, std::move(priority)}});
}

MonomialOrder MonomialOrder::revlex_default(RingPtr ring) {
  std::vector<int> p(ring->size());
  std::iota(p.begin(), p.end(), 0);
  return revlex(std::move(ring), std::move(p));
}

MonomialOrder MonomialOrder::lex_default(RingPtr ring) {
  std::vector<int> p(ring->size());
  std::iota(p.begin(), p.end(), 0);
  return lex(std::move(ring), std::move(p));
}

MonomialOrder MonomialOrder::elimination(RingPtr ring, std::vector<int> block,
                                         const MonomialOrder& tail) {
  if (!same_ring(ring, tail.ring()))
    throw Error("elimination tail order lives in a different ring");
  std::vector<bool> in_block(ring->size(), false);
  for (int v : block) in_block.at(v) = true;
  std::vector<OrderBlock> blocks;
  blocks.push_back(OrderBlock{OrderKind::RevLex, block});
  for (const auto& tb : tail.blocks()) {
    OrderBlock nb{tb.kind, {}};
    for (int v : tb.vars)
      if (!in_block[v]) nb.vars.push_back(v);
    if (!nb.vars.empty()) blocks.push_back(std::move(nb));
  }
  return MonomialOrder(std::move(ring), std::move(blocks));
}

MonomialOrder MonomialOrder::elimination(RingPtr ring, std::vector<int> block) {
  auto tail = revlex_default(ring);
  return elimination(std::move(ring), std::move(block), tail);
}

std::vector<int> MonomialOrder::priority() const {
  std::vector<int> out;
  for (const auto& b : blocks_)
    for (int v : b.vars) out.push_back(v);
  return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a == b) return 0;
  const int nb = static_cast<int>(blocks_.size());
  // Per block: restricted degree difference, and the extreme-rank nonzero
  // exponent difference needed for the tie-break.
  constexpr int kMaxBlocks = 8;
  int degdiff[kMaxBlocks] = {0};
  int lex_rank[kMaxBlocks];
  int lex_sign[kMaxBlocks] = {0};
  int rev_rank[kMaxBlocks];
  int rev_sign[kMaxBlocks] = {0};
  if (nb > kMaxBlocks) throw Error("too many order blocks");
  for (int i = 0; i < nb; ++i) {
    lex_rank[i] = 1 << 30;
    rev_rank[i] = -1;
  }

  const auto& ea = a.factors();
  const auto& eb = b.factors();
  auto i = ea.begin();
  auto j = eb.begin();
  auto note = [&](int var, int diff) {
    int blk = block_of_[var];
    int rank = rank_of_[var];
    degdiff[blk] += diff;
    if (rank < lex_rank[blk]) {
      lex_rank[blk] = rank;
      lex_sign[blk] = diff;
    }
    if (rank > rev_rank[blk]) {
      rev_rank[blk] = rank;
      rev_sign[blk] = diff;
    }
  };
  while (i != ea.end() || j != eb.end()) {
    if (j == eb.end() || (i != ea.end() && i->first < j->first)) {
      note(i->first, i->second);
      ++i;
    } else if (i == ea.end() || j->first < i->first) {
      note(j->first, -j->second);
      ++j;
    } else {
      if (i->second != j->second) note(i->first, i->second - j->second);
      ++i, ++j;
    }
  }

  for (int blk = 0; blk < nb; ++blk) {
    switch (blocks_[blk].kind) {
      case OrderKind::RevLex:
        if (degdiff[blk] != 0) return degdiff[blk] > 0 ? 1 : -1;
        // equal block degree: the monomial with the negative last (least
        // priority) nonzero exponent difference is the larger one
        if (rev_rank[blk] >= 0) return rev_sign[blk] < 0 ? 1 : -1;
        break;
      case OrderKind::Lex:
        if (lex_rank[blk] < (1 << 30)) return lex_sign[blk] > 0 ? 1 : -1;
        break;
    }
  }
  return 0;
}

bool MonomialOrder::operator==(const MonomialOrder& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) return false;
  if (blocks_.size() != rhs.blocks_.size()) return false;
  for (size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].kind != rhs.blocks_[i].kind || blocks_[i].vars != rhs.blocks_[i].vars)
      return false;
  return true;
}

std::string MonomialOrder::spec_string() const {
  auto block_body = [&](const OrderBlock& b) {
    std::string out = b.kind == OrderKind::Lex ? "lex:" : "revlex:";
    for (size_t i = 0; i < b.vars.size(); ++i) {
      if (i) out += ">";
      out += ring_->name(b.vars[i]);
    }
    return out;
  };
  if (blocks_.size() == 1) return block_body(blocks_[0]);
  std::string out;
  for (size_t i = 0; i + 1 < blocks_.size(); ++i) {
    out += "elim:{";
    for (size_t k = 0; k < blocks_[i].vars.size(); ++k) {
      if (k) out += ",";
      out += ring_->name(blocks_[i].vars[k]);
    }
    out += "}:then:";
  }
  out += block_body(blocks_.back());
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// Expand a '>'-separated priority list; tokens may be ranges like "x1..x4".
std::vector<int> parse_priority(const Ring& ring, const std::string& body) {
  std::vector<int> vars;
  for (const auto& tok : split(body, '>')) {
    if (tok.empty()) throw Error("empty variable token in order spec");
    auto dots = tok.find("..");
    if (dots == std::string::npos) {
      vars.push_back(ring.index_of(tok));
      continue;
    }
    std::string lo = tok.substr(0, dots), hi = tok.substr(dots + 2);
    auto stem_of = [](const std::string& s) {
      size_t p = s.size();
      while (p > 0 && std::isdigit(static_cast<unsigned char>(s[p - 1]))) --p;
      return std::pair<std::string, int>(s.substr(0, p),
                                         p == s.size() ? -1 : std::stoi(s.substr(p)));
    };
    auto [stem_lo, a] = stem_of(lo);
    auto [stem_hi, b] = stem_of(hi);
    if (stem_lo != stem_hi || a < 0 || b < a)
      throw Error("bad variable range '" + tok + "'");
    for (int k = a; k <= b; ++k)
      vars.push_back(ring.index_of(stem_lo + std::to_string(k)));
  }
  return vars;
}

// Parse into raw blocks without the full-coverage check (elimination tails
// list only the surviving variables).
std::vector<OrderBlock> parse_blocks(const RingPtr& ring, const std::string& spec) {
  if (spec.rfind("lex:", 0) == 0)
    return {OrderBlock{OrderKind::Lex, parse_priority(*ring, spec.substr(4))}};
  if (spec.rfind("revlex:", 0) == 0)
    return {OrderBlock{OrderKind::RevLex, parse_priority(*ring, spec.substr(7))}};
  if (spec.rfind("elim:{", 0) == 0) {
    auto close = spec.find('}');
    if (close == std::string::npos) throw Error("unterminated elimination block");
    std::vector<int> block;
    for (const auto& tok : split(spec.substr(6, close - 6), ','))
      block.push_back(ring->index_of(tok));
    std::string rest = spec.substr(close + 1);
    const std::string kThen = ":then:";
    if (rest.rfind(kThen, 0) != 0) throw Error("expected ':then:' after elimination block");
    auto blocks = parse_blocks(ring, rest.substr(kThen.size()));
    blocks.insert(blocks.begin(), OrderBlock{OrderKind::RevLex, std::move(block)});
    return blocks;
  }
  throw Error("unrecognized order spec '" + spec + "'");
}

}  // namespace

MonomialOrder parse_order_spec(const RingPtr& ring, const std::string& spec) {
  return MonomialOrder(ring, parse_blocks(ring, spec));
}

}  // namespace kzl
