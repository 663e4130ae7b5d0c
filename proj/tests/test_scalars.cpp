#include "doctest.h"
#include "superquant/errors.hpp"
#include "superquant/laurent.hpp"
#include "superquant/ratfunc.hpp"

using namespace superquant;

namespace {
Laurent qp(long e, long L = 1) { return Laurent::monomial(Rat(1), e, L); }
}

TEST_CASE("laurent ring operations") {
  Laurent a = qp(1) - qp(-1);  // q - q^-1
  Laurent b = qp(1) + qp(-1);
  CHECK(a * b == qp(2) - qp(-2));
  CHECK((a - a).is_zero());
  CHECK(-a == qp(-1) - qp(1));
  CHECK(a.min_exp() == -1);
  CHECK(a.max_exp() == 1);
  CHECK(a.coeff(-1) == Rat(-1));
  CHECK(a.coeff(5) == Rat(0));
  CHECK(a.leading_coeff() == Rat(1));
  CHECK(a.shifted(1) == qp(2) - Laurent::one());
  CHECK(a.scaled(Rat(3)) == qp(1).scaled(Rat(3)) - qp(-1).scaled(Rat(3)));
}

TEST_CASE("laurent zero coefficients are dropped") {
  Laurent a = qp(3);
  a.set(3, Rat(0));
  CHECK(a.is_zero());
  CHECK((qp(2) - qp(2)).term_count() == 0);
}

TEST_CASE("laurent eval at one and palindromes") {
  Laurent a = qp(2) + qp(0).scaled(Rat(3)) + qp(-2);
  CHECK(a.eval_one() == Rat(5));
  CHECK(a.is_palindromic());
  CHECK_FALSE((qp(2) + Laurent::one()).is_palindromic());
  CHECK((qp(1) + qp(-1)).is_palindromic());
}

TEST_CASE("laurent content carries the leading sign") {
  Laurent a = qp(3).scaled(Rat(2)) + qp(1).scaled(Rat(4));
  CHECK(a.content() == Rat(2));
  CHECK((-a).content() == Rat(-2));
  Laurent halves = qp(1).scaled(rat(1, 2)) + qp(0).scaled(rat(3, 2));
  CHECK(halves.content() == rat(1, 2));
}

TEST_CASE("laurent rescaling to a finer root of q") {
  Laurent a = qp(1) + qp(-2);
  Laurent b = a.rescaled(3);
  CHECK(b.unit_L() == 3);
  CHECK(b == qp(3, 3) + qp(-6, 3));
  CHECK_THROWS_AS(a.rescaled(3).rescaled(2), std::logic_error);
}

TEST_CASE("mixed unit_L operands align") {
  // q + q^{1/2} built from operands declared over different roots.
  Laurent sum = qp(1, 1) + qp(1, 2);
  CHECK(sum.unit_L() == 2);
  CHECK(sum == qp(2, 2) + qp(1, 2));
}

TEST_CASE("laurent gcd, lcm, exact division") {
  Laurent q2m1 = qp(2) - Laurent::one();          // q^2 - 1
  Laurent q3mq = qp(3) - qp(1);                   // q(q^2 - 1)
  CHECK(laurent_gcd(q2m1, q3mq) == q2m1);
  CHECK(laurent_gcd(Laurent::zero(), q3mq) == q2m1);  // normalized: shift and content out
  CHECK(laurent_gcd(Laurent::zero(), Laurent::zero()).is_zero());
  CHECK(div_exact(q3mq, q2m1) == qp(1));
  CHECK(div_exact(q2m1 * q2m1, q2m1) == q2m1);
  CHECK_THROWS_AS(div_exact(q2m1, Laurent::zero()), DivisionByZero);
  CHECK_THROWS_AS(div_exact(qp(1) + Laurent::one(), q2m1), std::logic_error);
  CHECK(laurent_lcm(q2m1, q3mq) == q2m1);  // q-power shifts are units
}

TEST_CASE("ratfunc canonical form") {
  Laurent q2m1 = qp(2) - Laurent::one();
  Laurent qm1 = qp(1) - Laurent::one();
  RatFunc f(q2m1, qm1);
  CHECK(f.is_polynomial());
  CHECK(f.num() == qp(1) + Laurent::one());
  CHECK(f == RatFunc(qp(1) + Laurent::one()));

  // 1/(q - q^-1): denominator is shifted to min_exp 0.
  RatFunc g = RatFunc(Rat(1)) / RatFunc(qp(1) - qp(-1));
  CHECK(g.num() == qp(1));
  CHECK(g.den() == q2m1);
}

TEST_CASE("ratfunc field identities") {
  RatFunc x(qp(2) - qp(-1), qp(1) + Laurent::one());
  CHECK((x - x).is_zero());
  CHECK((x * x.inverse()).is_one());
  CHECK(x + RatFunc(Rat(0)) == x);
  CHECK(x / x == RatFunc(Rat(1)));
  CHECK(-(-x) == x);
  RatFunc y(qp(1) - qp(-1));
  CHECK((x + y) - y == x);
  CHECK((x * y) / y == x);
  CHECK_THROWS_AS(RatFunc(Rat(0)).inverse(), DivisionByZero);
  CHECK_THROWS_AS(x / RatFunc(Rat(0)), DivisionByZero);
}

TEST_CASE("ratfunc value at q = 1") {
  RatFunc f(qp(2) - Laurent::one(), qp(1) - Laurent::one());  // q + 1
  CHECK(f.specialize_q1() == Rat(2));
  CHECK(RatFunc::q_power(7).specialize_q1() == Rat(1));
  RatFunc pole = RatFunc(Rat(1)) / RatFunc(qp(1) - Laurent::one());
  CHECK_THROWS_AS(pole.specialize_q1(), PoleAtOne);
  // Removable singularity: (q^2-1)/(q-1) reduces before evaluation.
  CHECK(RatFunc(qp(2) - Laurent::one(), qp(1) - Laurent::one()).specialize_q1() == Rat(2));
}

TEST_CASE("ratfunc rendering") {
  CHECK(RatFunc(Rat(0)).to_string() == "0");
  CHECK(RatFunc::q_power(-2).to_string() == "q^(-2)");
  RatFunc g = RatFunc(Rat(1)) / RatFunc(qp(1) - qp(-1));
  CHECK(g.to_string() == "q^1 / (q^2 - 1)");
}
