#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kzl/polynomial.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kzl;
using kzl::testing::all_normal_forms;
using kzl::testing::monomials_up_to;

namespace {

RingPtr ring3() { return Ring::make({"x1", "x2", "x3"}); }

Monomial mono(const RingPtr& ring, const std::string& text) {
  Polynomial p = Polynomial::parse(ring, text);
  REQUIRE(p.term_count() == 1);
  return p.terms()[0].mono;
}

// Pairwise-enumeration comparator oracle: decide a <> b by the definitional
// rules, spelled out independently of MonomialOrder::compare.
int revlex_oracle(const std::vector<int>& priority, const Monomial& a,
                  const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
    int d = a.exponent(*it) - b.exponent(*it);
    if (d != 0) return d < 0 ? 1 : -1;  // negative last entry wins
  }
  return 0;
}

}  // namespace

TEST_CASE("revlex comparisons from the worked colon example") {
  auto ring = ring3();
  auto ord = MonomialOrder::revlex_default(ring);
  CHECK(ord.compare(mono(ring, "x1*x3"), mono(ring, "x2*x3")) > 0);
  CHECK(ord.compare(mono(ring, "x2^2"), mono(ring, "x1*x3")) > 0);
  Monomial m = mono(ring, "x1*x2^2");
  CHECK(ord.compare(m, m) == 0);
}

TEST_CASE("revlex agrees with the pairwise enumeration oracle") {
  auto ring = ring3();
  auto ord = MonomialOrder::revlex_default(ring);
  std::vector<int> priority{0, 1, 2};
  auto monos = monomials_up_to(3, 3);
  for (const auto& a : monos)
    for (const auto& b : monos)
      CHECK(ord.compare(a, b) == revlex_oracle(priority, a, b));
}

TEST_CASE("order axioms hold exhaustively up to degree 4 in 4 variables") {
  auto ring = Ring::make({"x1", "x2", "x3", "x4"});
  std::vector<MonomialOrder> orders{
      MonomialOrder::revlex_default(ring),
      MonomialOrder::lex_default(ring),
      MonomialOrder::revlex(ring, {2, 0, 3, 1}),
      MonomialOrder::elimination(ring, {1, 3}),
  };
  auto monos = monomials_up_to(4, 4);
  Monomial one = Monomial::one();
  for (const auto& ord : orders) {
    for (const auto& a : monos) {
      CHECK(ord.compare(a, a) == 0);
      if (!(a == one)) CHECK(ord.greater(a, one));  // 1 is minimal
      for (const auto& b : monos) {
        int ab = ord.compare(a, b);
        CHECK(ab == -ord.compare(b, a));  // antisymmetric
        if (!(a == b)) CHECK(ab != 0);    // total
      }
    }
    // multiplicativity on the degree <= 2 slice (the full cube is 70^3)
    auto quads = monomials_up_to(4, 2);
    for (const auto& a : quads)
      for (const auto& b : quads) {
        if (!ord.less(a, b)) continue;
        for (const auto& w : quads) CHECK(ord.less(a * w, b * w));
      }
  }
}

TEST_CASE("leading terms under the edge-ring and colon orders") {
  auto ring = Ring::make({"x1", "x2", "y1", "y2"});
  auto ord = MonomialOrder::revlex(ring, {2, 3, 0, 1});  // y1>y2>x1>x2
  Polynomial f = Polynomial::parse(ring, "x1*y2 - x2*y1");
  const Term& lead = f.leading_term(ord);
  CHECK(lead.coeff == 1);
  CHECK(lead.mono == mono(ring, "x1*y2"));
  // enumeration oracle over the two support monomials
  CHECK(ord.greater(mono(ring, "x1*y2"), mono(ring, "x2*y1")));

  auto r3 = ring3();
  auto o3 = MonomialOrder::revlex_default(r3);
  Polynomial g = Polynomial::parse(r3, "x1*x3 - x2*x3");
  CHECK(g.leading_term(o3).coeff == 1);
  CHECK(g.leading_term(o3).mono == mono(r3, "x1*x3"));

  Polynomial c = Polynomial::parse(r3, "5*x2^2");
  CHECK(c.leading_term(o3).coeff == 5);
  CHECK(c.leading_term(o3).mono == mono(r3, "x2^2"));

  CHECK_THROWS_AS(Polynomial::zero(r3).leading_term(o3), Error);
}

TEST_CASE("reduction follows the largest-reducible-first contract") {
  auto ring = Ring::make({"x1", "x2", "y1", "y2"});
  auto ord = MonomialOrder::revlex(ring, {2, 3, 0, 1});
  std::vector<Polynomial> divisors{Polynomial::parse(ring, "x1*y2 - x2*y1")};
  bool changed = false;
  Polynomial r = reduce(Polynomial::parse(ring, "x1*y2"), divisors, ord, &changed);
  CHECK(changed);
  CHECK(r == Polynomial::parse(ring, "x2*y1"));

  Polynomial untouched = Polynomial::parse(ring, "x2*y1 + x1");
  r = reduce(untouched, {}, ord, &changed);
  CHECK_FALSE(changed);
  CHECK(r == untouched);

  CHECK(reduce(Polynomial::zero(ring), divisors, ord).is_zero());
}

TEST_CASE("normal form against a path edge ideal matches the rewrite closure") {
  auto ring = Ring::make({"x1", "x2", "x3", "y1", "y2", "y3"});
  auto ord = MonomialOrder::revlex(ring, {3, 4, 5, 0, 1, 2});
  std::vector<Polynomial> gens{Polynomial::parse(ring, "x1*y2 - x2*y1"),
                               Polynomial::parse(ring, "x2*y3 - x3*y2")};
  Polynomial f = Polynomial::parse(ring, "x1*y2*y3");
  Polynomial r = reduce(f, gens, ord);
  auto closure = all_normal_forms(f, gens, ord);
  REQUIRE(closure.size() == 1);  // confluent on this input
  CHECK(*closure.begin() == r.to_string());
}

TEST_CASE("ring axioms on random polynomials, exact equality") {
  auto ring = Ring::make({"x1", "x2", "x3", "x4"});
  kzl::testing::Rng rng(20240817);
  auto random_poly = [&](int terms) {
    std::vector<Term> ts;
    std::uniform_int_distribution<int> cd(-5, 5), dd(0, 3);
    for (int t = 0; t < terms; ++t)
      ts.push_back(Term{Rational(cd(rng)), kzl::testing::random_monomial(rng, 4, dd(rng))});
    return Polynomial(ring, ts);
  };
  for (int round = 0; round < 60; ++round) {
    Polynomial a = random_poly(3), b = random_poly(3), c = random_poly(2);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial::constant(ring, 1) == a);
    CHECK((a * Polynomial::zero(ring)).is_zero());
  }
}

TEST_CASE("reduction is idempotent and leaves an exact divisor combination") {
  auto ring = ring3();
  auto ord = MonomialOrder::revlex_default(ring);
  kzl::testing::Rng rng(7);
  for (int round = 0; round < 40; ++round) {
    std::vector<Polynomial> divisors{kzl::testing::random_quadric(rng, ring),
                                     kzl::testing::random_quadric(rng, ring)};
    divisors.erase(std::remove_if(divisors.begin(), divisors.end(),
                                  [](const Polynomial& p) { return p.is_zero(); }),
                   divisors.end());
    if (divisors.empty()) continue;
    std::vector<Term> ts;
    std::uniform_int_distribution<int> cd(-3, 3), dd(0, 4);
    for (int t = 0; t < 4; ++t)
      ts.push_back(Term{Rational(cd(rng)), kzl::testing::random_monomial(rng, 3, dd(rng))});
    Polynomial f(ring, ts);

    auto first = reduce_with_cofactors(f, divisors, ord);
    Polynomial again = reduce(first.remainder, divisors, ord);
    CHECK(again == first.remainder);

    Polynomial recombined = first.remainder;
    for (size_t k = 0; k < divisors.size(); ++k)
      recombined += first.cofactors[k] * divisors[k];
    CHECK(recombined == f);
  }
}

TEST_CASE("polynomial text grammar round-trips bit-exactly") {
  auto ring = Ring::make({"x1", "x2", "y1", "y2"});
  for (const std::string text : {"x1*y2 - x2*y1", "x1^2 + 2*x1*x2 - 3", "0", "y1",
                                 "x1^3 - x2^3", "2*x1*y1^2 + x2 - 1"}) {
    Polynomial p = Polynomial::parse(ring, text);
    CHECK(p.to_string() == text);
    CHECK(Polynomial::parse(ring, p.to_string()) == p);
  }
  // liberal inputs normalize
  CHECK(Polynomial::parse(ring, "y2*x1 - y1*x2").to_string() == "x1*y2 - x2*y1");
  CHECK(Polynomial::parse(ring, "x1 + x1").to_string() == "2*x1");
  CHECK(Polynomial::parse(ring, "x1 - x1").to_string() == "0");
  CHECK(Polynomial::parse(ring, "3x1").to_string() == "3*x1");
  CHECK(Polynomial::parse(ring, " - x1 + x2 ").to_string() == "-x1 + x2");

  CHECK_THROWS_AS(Polynomial::parse(ring, "z1 + x1"), Error);
  CHECK_THROWS_AS(Polynomial::parse(ring, "x1 + + x2"), Error);
  CHECK_THROWS_AS(Polynomial::parse(ring, ""), Error);
}

TEST_CASE("monomial helpers: divisibility, lcm, gcd, coprimality") {
  auto ring = ring3();
  Monomial a = mono(ring, "x1*x2^2");
  Monomial b = mono(ring, "x2*x3");
  CHECK(lcm(a, b) == mono(ring, "x1*x2^2*x3"));
  CHECK(gcd(a, b) == mono(ring, "x2"));
  CHECK_FALSE(coprime(a, b));
  CHECK(coprime(mono(ring, "x1"), mono(ring, "x2*x3")));
  CHECK(mono(ring, "x2").divides(a));
  CHECK_FALSE(mono(ring, "x3").divides(a));
  CHECK(a.divided_by(mono(ring, "x2")) == mono(ring, "x1*x2"));
  CHECK_THROWS_AS(a.divided_by(b), Error);
  CHECK(a.degree() == 3);
}

TEST_CASE("order spec strings parse and print canonically") {
  auto ring = Ring::make({"t", "x1", "x2", "y1", "y2"});
  auto ord = parse_order_spec(ring, "revlex:y1>y2>x1>x2>t");
  CHECK(ord.spec_string() == "revlex:y1>y2>x1>x2>t");
  auto ord2 = parse_order_spec(ring, "revlex:y1..y2>x1..x2>t");
  CHECK(ord2 == ord);
  auto elim = parse_order_spec(ring, "elim:{t}:then:revlex:x1>x2>y1>y2");
  CHECK(elim.spec_string() == "elim:{t}:then:revlex:x1>x2>y1>y2");
  CHECK(parse_order_spec(ring, elim.spec_string()) == elim);
  auto lex = parse_order_spec(ring, "lex:x1>x2>y1>y2>t");
  CHECK(lex.spec_string() == "lex:x1>x2>y1>y2>t");
  CHECK_THROWS_AS(parse_order_spec(ring, "revlex:x1>x2"), Error);  // misses vars
  CHECK_THROWS_AS(parse_order_spec(ring, "weird:x1"), Error);
  // elimination property: anything containing t beats anything without
  auto monos = monomials_up_to(5, 3);
  for (const auto& a : monos)
    for (const auto& b : monos)
      if (a.exponent(0) > 0 && b.exponent(0) == 0) CHECK(elim.greater(a, b));
}
