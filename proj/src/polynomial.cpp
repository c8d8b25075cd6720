#include "kzl/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace kzl {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono.factors())
      if (v >= ring_->size()) throw Error("monomial uses variable outside ring");
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return storage_before(a.mono, b.mono);
  });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
    if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  }
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back(Term{std::move(c), Monomial::one()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
  if (var < 0 || var >= ring->size()) throw Error("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back(Term{Rational(1), Monomial::variable(var)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rational c) {
  Polynomial p(std::move(ring), {Term{std::move(c), std::move(m)}});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Rational(0);
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (!same_ring(ring_, rhs.ring_)) throw Error("ring mismatch in addition");
  // merge two storage-sorted term lists
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() ||
        (a != terms_.end() && storage_before(a->mono, b->mono))) {
      out.push_back(*a++);
    } else if (a == terms_.end() || storage_before(b->mono, a->mono)) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back(Term{std::move(c), a->mono});
      ++a, ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  *this += -rhs;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) throw Error("ring mismatch in multiplication");
  Polynomial acc(ring_);
  for (const auto& t : rhs.terms_) acc += times_monomial(t.coeff, t.mono);
  return acc;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::times_monomial(const Rational& c, const Monomial& m) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.coeff * c, t.mono * m});
  // multiplying by a fixed monomial preserves the storage order
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return storage_before(a.mono, b.mono); });
  return out;
}

bool Polynomial::every_term_divisible_by(int var) const {
  for (const auto& t : terms_)
    if (!t.mono.divisible_by_variable(var)) return false;
  return true;
}

Polynomial Polynomial::divided_by_variable(int var) const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  Monomial v = Monomial::variable(var);
  for (const auto& t : terms_)
    out.terms_.push_back(Term{t.coeff, t.mono.divided_by(v)});
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return storage_before(a.mono, b.mono); });
  return out;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (ord.greater(t.mono, best->mono)) best = &t;
  return *best;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& ord) const {
  return leading_term(ord).mono;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  Rational lc = leading_term(ord).coeff;
  return scaled(Rational(1) / lc);
}

Polynomial Polynomial::mapped_to(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Polynomial out = *this;
    out.ring_ = target;
    return out;
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::pair<int, int>> exps;
    for (const auto& [v, e] : t.mono.factors())
      exps.emplace_back(target->index_of(ring_->name(v)), e);
    terms.push_back(Term{t.coeff, Monomial(std::move(exps))});
  }
  return Polynomial(target, std::move(terms));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return same_ring(ring_, rhs.ring_) && terms_ == rhs.terms_;
}

bool Polynomial::canonical_before(const Polynomial& a, const Polynomial& b) {
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (i->mono != j->mono) return storage_before(i->mono, j->mono);
    if (i->coeff != j->coeff) return i->coeff < j->coeff;
    ++i, ++j;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += kzl::to_string(c);
    } else {
      if (c != 1) out += kzl::to_string(c) + "*";
      out += t.mono.to_string(*ring_);
    }
  }
  return out;
}

namespace {

struct Parser {
  const Ring& ring;
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error("parse error at column " + std::to_string(pos + 1) + ": " + what +
                " in '" + text + "'");
  }

  Rational integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    Rational num(text.substr(start, pos - start));
    if (peek() == '/') {
      ++pos;
      skip_ws();
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (dstart == pos) fail("expected denominator");
      Rational den(text.substr(dstart, pos - dstart));
      if (den == 0) fail("zero denominator");
      num /= den;
    }
    return num;
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      fail("expected variable name");
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  // term := [integer] factor* with '*' optional between factors
  Term term() {
    Term t{Rational(1), Monomial::one()};
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = integer();
      saw_anything = true;
    }
    std::vector<std::pair<int, int>> exps;
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
          t.coeff *= integer();
          continue;
        }
      } else if (!std::isalpha(static_cast<unsigned char>(c))) {
        break;
      }
      std::string name = identifier();
      auto var = ring.find(name);
      if (!var) fail("unknown variable '" + name + "'");
      int exp = 1;
      if (peek() == '^') {
        ++pos;
        Rational e = integer();
        if (e.get_den() != 1 || e < 0) fail("bad exponent");
        exp = static_cast<int>(e.get_num().get_si());
      }
      exps.emplace_back(*var, exp);
      saw_anything = true;
    }
    if (!saw_anything) fail("expected term");
    t.mono = Monomial(std::move(exps));
    return t;
  }
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text) {
  Parser p{*ring, text};
  std::vector<Term> terms;
  if (p.eof()) throw Error("empty polynomial text");
  bool neg = false;
  if (p.peek() == '-') {
    neg = true;
    ++p.pos;
  } else if (p.peek() == '+') {
    ++p.pos;
  }
  for (;;) {
    Term t = p.term();
    if (neg) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    if (p.eof()) break;
    char c = p.peek();
    if (c == '+')
      neg = false;
    else if (c == '-')
      neg = true;
    else
      p.fail("expected '+' or '-'");
    ++p.pos;
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace kzl
