#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mforge/grouplaw.hpp"
#include "mforge/quotient.hpp"
#include "mforge/verify.hpp"  // Rng

using namespace mforge;

namespace {

IntRowVec random_vector(Rng& rng, int d, int bound) {
  IntRowVec v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.uniform(-bound, bound);
  return v;
}

// A commuting pair: random powers of the commuting generator family.
std::pair<IntMatrix, IntMatrix> random_commuting_pair(const QuotientAlgebra& q, Rng& rng) {
  IntMatrix t = identity_matrix(q.dim());
  IntMatrix u = identity_matrix(q.dim());
  for (int i = 1; i <= q.n(); ++i) {
    const IntMatrix ti = regular_rep(q, i);
    t = IntMatrix(t * matrix_power(ti, static_cast<unsigned long>(rng.uniform(0, 2))));
    u = IntMatrix(u * matrix_power(ti, static_cast<unsigned long>(rng.uniform(0, 2))));
  }
  return {t, u};
}

}  // namespace

TEST_CASE("malcev word recursion") {
  CHECK(malcev_words(1).alpha == "xy");
  CHECK(malcev_words(1).beta == "yx");
  CHECK(malcev_words(2).alpha == "xyyx");
  CHECK(malcev_words(2).beta == "yxxy");
  CHECK(malcev_words(3).alpha == "xyyxyxxy");
  for (int c = 1; c <= 12; ++c) {
    const MalcevPair words = malcev_words(c);
    CHECK(words.alpha.size() == (1UL << c));
    CHECK(words.beta.size() == (1UL << c));
    CHECK(words.alpha != words.beta);
    CHECK(words.alpha.front() == 'x');
    CHECK(words.beta.front() == 'y');
  }
  CHECK_THROWS_AS(malcev_words(0), std::invalid_argument);
}

TEST_CASE("semidirect product multiplication") {
  const QuotientAlgebra q(3, 3);
  const int d = q.dim();
  Rng rng(5);
  const IntRowVec a = random_vector(rng, d, 9);
  const IntRowVec b = random_vector(rng, d, 9);
  const IntMatrix t = regular_rep(q, 1);
  const IntMatrix u = regular_rep(q, 2);

  // A_n is abelian: (1,a)(1,b) = (1, a+b).
  GroupElement ga{identity_matrix(d), a}, gb{identity_matrix(d), b};
  CHECK(group_mul(ga, gb) == GroupElement{identity_matrix(d), IntRowVec(a + b)});
  // (t,0)(1,b) = (t,b).
  CHECK(group_mul(GroupElement{t, zero_vector(d)}, gb) == GroupElement{t, b});
  // (1,a)(u,0) = (u, a*u): the defining conjugation action.
  CHECK(group_mul(ga, GroupElement{u, zero_vector(d)}) == GroupElement{u, IntRowVec(a * u)});
}

TEST_CASE("group axioms on random triples") {
  const QuotientAlgebra q(3, 3);
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto [t, u] = random_commuting_pair(q, rng);
    GroupElement g{t, random_vector(rng, q.dim(), 9)};
    GroupElement h{u, random_vector(rng, q.dim(), 9)};
    GroupElement k{regular_rep(q, 3), random_vector(rng, q.dim(), 9)};
    CHECK(group_mul(group_mul(g, h), k) == group_mul(g, group_mul(h, k)));
    const GroupElement e = GroupElement::identity(q.dim());
    CHECK(group_mul(g, e) == g);
    CHECK(group_mul(e, g) == g);
    CHECK(group_mul(g, group_inverse(g)) == e);
    CHECK(group_mul(group_inverse(g), g) == e);
  }
}

TEST_CASE("eval_word") {
  const QuotientAlgebra q(3, 3);
  const int d = q.dim();
  Rng rng(29);
  GroupElement g{regular_rep(q, 1), random_vector(rng, d, 9)};
  GroupElement h{regular_rep(q, 2), random_vector(rng, d, 9)};
  const GroupElement e = GroupElement::identity(d);
  CHECK(eval_word("xy", g, e) == g);
  CHECK_THROWS_AS(eval_word("xz", g, h), std::invalid_argument);

  // M_1 separates exactly the non-commuting pairs.
  CHECK((eval_word("xy", g, h) == eval_word("yx", g, h)) ==
        (group_mul(g, h) == group_mul(h, g)));
}

TEST_CASE("matrix part of alpha_c is t^{2^{c-1}} u^{2^{c-1}} for commuting parts") {
  const QuotientAlgebra q(3, 3);
  Rng rng(37);
  for (int c = 1; c <= 4; ++c) {
    auto [t, u] = random_commuting_pair(q, rng);
    GroupElement g{t, random_vector(rng, q.dim(), 5)};
    GroupElement h{u, random_vector(rng, q.dim(), 5)};
    const GroupElement val = eval_word(malcev_words(c).alpha, g, h);
    const unsigned long half = 1UL << (c - 1);
    CHECK(val.t == IntMatrix(matrix_power(t, half) * matrix_power(u, half)));
  }
}

TEST_CASE("check_malcev trivial substitutions") {
  const QuotientAlgebra q(3, 3);
  const int d = q.dim();
  Rng rng(41);
  // Both elements in A_n: commuting, so every M_c holds.
  GroupElement ga{identity_matrix(d), random_vector(rng, d, 9)};
  GroupElement gb{identity_matrix(d), random_vector(rng, d, 9)};
  for (int c = 1; c <= 4; ++c) CHECK(check_malcev(c, ga, gb));
  // x = y always satisfies the law.
  GroupElement g{regular_rep(q, 1), random_vector(rng, d, 9)};
  for (int c = 1; c <= 4; ++c) CHECK(check_malcev(c, g, g));
}

TEST_CASE("endo_eval") {
  const QuotientAlgebra q(3, 3);
  const int d = q.dim();
  const IntMatrix t1 = regular_rep(q, 1);
  const Polynomial x = Polynomial::variable(1, 0);
  const Polynomial one = Polynomial::constant(1, 1);

  // (X - 1) at a unipotent matrix is nilpotent.
  const IntMatrix nil = endo_eval(x - one, t1);
  CHECK(is_zero(matrix_power(nil, static_cast<unsigned long>(d))));
  // (X - 1)^c vanishes at t_i by construction of the quotient.
  CHECK(is_zero(endo_eval(poly_pow(x - one, 3), t1)));
  // Constants become scalar matrices.
  CHECK(endo_eval(Polynomial::constant(1, 7), t1) == IntMatrix(7 * identity_matrix(d)));
  // A genuinely bivariate polynomial needs a second matrix.
  CHECK_THROWS_AS(endo_eval(build_f_c(2), t1), std::invalid_argument);
}

TEST_CASE("lemma identity: direct evaluation matches the f_c criterion") {
  const QuotientAlgebra q(3, 3);
  const int d = q.dim();
  Rng rng(43);

  // c = 1 reads a(u - 1) = b(t - 1).
  {
    auto [t, u] = random_commuting_pair(q, rng);
    const IntRowVec a = random_vector(rng, d, 9);
    const IntRowVec b = random_vector(rng, d, 9);
    const bool direct = check_malcev(1, GroupElement{t, a}, GroupElement{u, b});
    const bool formula =
        IntRowVec(a * (u - identity_matrix(d))) == IntRowVec(b * (t - identity_matrix(d)));
    CHECK(direct == formula);
  }

  // a = b = 0 on commuting parts: both sides trivially agree.
  {
    auto [t, u] = random_commuting_pair(q, rng);
    CHECK(check_malcev(3, GroupElement{t, zero_vector(d)}, GroupElement{u, zero_vector(d)}));
    CHECK(lemma_identity_check(3, t, u, zero_vector(d), zero_vector(d)));
  }

  for (int trial = 0; trial < 100; ++trial) {
    auto [t, u] = random_commuting_pair(q, rng);
    CHECK(lemma_identity_check(3, t, u, random_vector(rng, d, 9), random_vector(rng, d, 9)));
  }

  // Non-commuting parts are rejected.
  IntMatrix s = identity_matrix(2), v = identity_matrix(2);
  s(0, 1) = 1;
  IntMatrix vt = s.transpose();
  CHECK_THROWS_AS(lemma_identity_check(2, s, vt, zero_vector(2), zero_vector(2)),
                  std::invalid_argument);
}

TEST_CASE("direct comparison agrees with the inversion-based w_c check") {
  const QuotientAlgebra q(3, 3);
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    auto [t, u] = random_commuting_pair(q, rng);
    GroupElement g{t, random_vector(rng, q.dim(), 9)};
    GroupElement h{u, random_vector(rng, q.dim(), 9)};
    const MalcevPair words = malcev_words(3);
    const GroupElement alpha = eval_word(words.alpha, g, h);
    const GroupElement beta = eval_word(words.beta, g, h);
    const GroupElement w = group_mul(group_inverse(beta), alpha);
    CHECK((alpha == beta) == w.is_identity());
  }
}

TEST_CASE("nilpotency class") {
  // One variable, c = 3: (t-1)^2 != 0, (t-1)^3 = 0.
  const QuotientAlgebra q1(1, 3);
  CHECK(nilpotency_class({regular_rep(q1, 1)}, q1.dim()) == 3);

  // Identity family: abelian, class 1.
  CHECK(nilpotency_class({identity_matrix(4), identity_matrix(4)}, 4) == 1);

  const QuotientAlgebra q(3, 3);
  auto family = regular_rep_family(q);
  const int cls = nilpotency_class(family, q.dim());
  CHECK(cls >= 1);
  CHECK(cls <= q.dim());
  // Invariant under permuting the generators.
  std::swap(family[0], family[2]);
  CHECK(nilpotency_class(family, q.dim()) == cls);
}

TEST_CASE("injectivity probe") {
  const QuotientAlgebra q(3, 3);
  const int d = q.dim();
  const Polynomial x = Polynomial::variable(1, 0);
  const Polynomial one = Polynomial::constant(1, 1);
  const IntMatrix t1 = regular_rep(q, 1);

  CHECK(injectivity_probe(x + one, t1));        // det = 2^d
  CHECK_FALSE(injectivity_probe(x - one, t1));  // det = 0

  // g_3 = X + 1 at t = t_1 t_2 t_3 acts injectively.
  IntMatrix t = IntMatrix(IntMatrix(t1 * regular_rep(q, 2)) * regular_rep(q, 3));
  CHECK(injectivity_probe(x + one, t));
  // det p(t) = p(1)^d for unipotent t.
  Int det = determinant(endo_eval(x + one, t));
  Int expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(d));
  CHECK(det == expected);
}

TEST_CASE("vector line format round-trips") {
  Rng rng(53);
  IntRowVec v = random_vector(rng, 7, 1000);
  v(3) = Int("-123456789012345678901234567890");
  CHECK(parse_vector(format_vector(v)) == v);
}
