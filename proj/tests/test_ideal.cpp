#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mforge/ideal.hpp"
#include "mforge/verify.hpp"  // Rng

using namespace mforge;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// Brute-force membership oracle against the full, non-minimalized list of
// degree-c monomials with a squared variable.
bool contains_oracle(int n, int c, const Monomial& m) {
  for (const auto& g : monomials_of_degree(n, c)) {
    const bool has_square =
        std::any_of(g.exponents.begin(), g.exponents.end(), [](int e) { return e >= 2; });
    if (has_square && mono_divides(g, m)) return true;
  }
  return false;
}

// Direct enumeration of standard monomials up to the cap.
std::vector<Monomial> standard_oracle(int n, int c, int cap) {
  std::vector<Monomial> result;
  for (int deg = 0; deg <= cap; ++deg)
    for (const auto& m : monomials_of_degree(n, deg))
      if (!contains_oracle(n, c, m)) result.push_back(m);
  return result;
}

int count_nonsquarefree_below(int n, int c) {
  int count = 0;
  for (int deg = 0; deg < c; ++deg)
    for (const auto& m : monomials_of_degree(n, deg))
      if (std::any_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e >= 2; }))
        ++count;
  return count;
}

Polynomial random_poly(Rng& rng, int n, int max_terms, int max_exp, int coeff_bound) {
  Polynomial p(n);
  const int terms = static_cast<int>(rng.uniform(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>(rng.uniform(0, max_exp));
    p.add_term(Monomial(std::move(e)), rng.uniform(-coeff_bound, coeff_bound));
  }
  return p;
}

}  // namespace

TEST_CASE("build_ideal_c generators") {
  CHECK(build_ideal_c(1, 3).generators() == std::vector<Monomial>{mono({3})});

  const auto g23 = build_ideal_c(2, 3).generators();
  CHECK(g23.size() == 4);  // X1^3, X1^2 X2, X1 X2^2, X2^3
  for (const auto& want : {mono({3, 0}), mono({2, 1}), mono({1, 2}), mono({0, 3})})
    CHECK(std::find(g23.begin(), g23.end(), want) != g23.end());

  // 10 degree-3 monomials in 3 variables minus the squarefree X1X2X3.
  CHECK(build_ideal_c(3, 3).generators().size() == 9);
  CHECK_THROWS_AS(build_ideal_c(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_ideal_c(3, 0), std::invalid_argument);
  CHECK(build_ideal_c(3, 2).below_construction_range());
  CHECK_FALSE(build_ideal_c(3, 3).below_construction_range());
}

TEST_CASE("contains_monomial") {
  const MonomialIdeal ideal = build_ideal_c(3, 3);
  CHECK(contains_monomial(ideal, mono({2, 1, 0})));        // a generator itself
  CHECK_FALSE(contains_monomial(ideal, mono({1, 1, 1})));  // X1X2X3 stays out
  CHECK_FALSE(contains_monomial(ideal, mono({0, 0, 0})));
  CHECK_THROWS_AS(contains_monomial(ideal, mono({1, 1})), std::invalid_argument);
}

TEST_CASE("contains_monomial agrees with the brute-force oracle") {
  for (int n : {2, 3, 4})
    for (int c : {3, 4}) {
      const MonomialIdeal ideal = build_ideal_c(n, c);
      for (int deg = 0; deg <= n + 2; ++deg)
        for (const auto& m : monomials_of_degree(n, deg))
          CHECK(ideal.contains(m) == contains_oracle(n, c, m));
    }
}

TEST_CASE("normal_form deletes exactly the ideal terms") {
  const MonomialIdeal ideal = build_ideal_c(3, 3);
  Polynomial p = Polynomial::term(mono({3, 0, 0}), 1) + Polynomial::term(mono({1, 1, 1}), 1);
  CHECK(normal_form(ideal, p) == Polynomial::term(mono({1, 1, 1}), 1));

  Polynomial untouched = Polynomial::term(mono({1, 0, 0}), 2) + Polynomial::term(mono({0, 1, 1}), -5);
  CHECK(normal_form(ideal, untouched) == untouched);

  // NF(((X1+1)(X2+1)(X3+1) - 1)^3) = 6 X1X2X3
  const Polynomial one = Polynomial::constant(3, 1);
  Polynomial base = one;
  for (int i = 0; i < 3; ++i) base = base * (Polynomial::variable(3, i) + one);
  CHECK(normal_form(ideal, poly_pow(base - one, 3)) == Polynomial::term(mono({1, 1, 1}), 6));
}

TEST_CASE("membership and normal form are consistent on random polynomials") {
  Rng rng(31);
  const MonomialIdeal ideal = build_ideal_c(3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_poly(rng, 3, 8, 4, 9);
    Polynomial nf = normal_form(ideal, p);
    for (const auto& [m, coeff] : nf.terms()) CHECK_FALSE(ideal.contains(m));
    const Polynomial removed = p - nf;
    for (const auto& [m, coeff] : removed.terms()) CHECK(ideal.contains(m));
  }
}

TEST_CASE("standard monomial enumeration") {
  CHECK(standard_monomials(build_ideal_c(1, 3), 2) ==
        std::vector<Monomial>{mono({0}), mono({1}), mono({2})});
  CHECK(standard_monomials(build_ideal_c(3, 3), 3).size() == 11);
  CHECK(standard_monomials(build_ideal_c(4, 3), 4).size() == 20);
  // Finiteness guard: a too-small cap is rejected.
  CHECK_THROWS_AS(standard_monomials(build_ideal_c(3, 3), 1), std::runtime_error);
}

TEST_CASE("standard monomial count is 2^n plus non-squarefree below degree c") {
  for (int n = 3; n <= 8; ++n) {
    const int c = 3;
    const auto basis = standard_monomials(build_ideal_c(n, c), n);
    CHECK(static_cast<int>(basis.size()) == (1 << n) + count_nonsquarefree_below(n, c));
    const auto oracle = standard_oracle(n, c, n);
    CHECK(basis.size() == oracle.size());
    CHECK(std::equal(basis.begin(), basis.end(), oracle.begin()));
  }
}

TEST_CASE("shift maps the generators of a onto the generators of b") {
  for (int n : {3, 4})
    for (int c : {3, 4}) {
      const auto as = a_generators(n, c);
      const auto bs = b_generators(n, c);
      REQUIRE(as.size() == bs.size());
      for (size_t k = 0; k < as.size(); ++k) CHECK(shift_substitute(as[k]) == bs[k]);
    }
}

TEST_CASE("b is contained in c precisely when c >= 3") {
  CHECK(check_b_subset_c(3, 3).contained);
  CHECK(check_b_subset_c(4, 3).contained);
  const ContainmentReport broken = check_b_subset_c(3, 2);
  CHECK_FALSE(broken.contained);
  REQUIRE(broken.failing_generator.has_value());
  REQUIRE(broken.surviving_monomial.has_value());
  // The surviving monomial really is outside c(3, 2).
  CHECK_FALSE(build_ideal_c(3, 2).contains(*broken.surviving_monomial));
}

TEST_CASE("m^{n+1} is contained in c") {
  CHECK(check_m_power_subset(3, 3));
  CHECK(check_m_power_subset(4, 3));
  CHECK(check_m_power_subset(4, 4));
}

TEST_CASE("the congruence ((prod (X_i+1)^e) - 1)^n = e^n n! X_1...X_n mod c") {
  CHECK(check_congruence(3, 3, 1));
  CHECK(check_congruence(3, 3, 2));
  CHECK(check_congruence(4, 3, 1));

  // Frozen coefficients, recomputed from the full expansion.
  const MonomialIdeal ideal33 = build_ideal_c(3, 3);
  const Polynomial one3 = Polynomial::constant(3, 1);
  for (int e : {1, 2}) {
    Polynomial prod = one3;
    for (int i = 0; i < 3; ++i)
      prod = prod * poly_pow(Polynomial::variable(3, i) + one3, static_cast<unsigned>(e));
    const Polynomial nf = normal_form(ideal33, poly_pow(prod - one3, 3));
    CHECK(nf == Polynomial::term(mono({1, 1, 1}), e == 1 ? 6 : 48));
  }
  const MonomialIdeal ideal43 = build_ideal_c(4, 3);
  const Polynomial one4 = Polynomial::constant(4, 1);
  Polynomial prod = one4;
  for (int i = 0; i < 4; ++i) prod = prod * (Polynomial::variable(4, i) + one4);
  CHECK(normal_form(ideal43, poly_pow(prod - one4, 4)) ==
        Polynomial::term(mono({1, 1, 1, 1}), 24));
}

TEST_CASE("ideal serialization lists generators in graded-lex order") {
  CHECK(build_ideal_c(1, 3).serialize() == "X1^3\n");
  const std::string s = build_ideal_c(2, 3).serialize();
  CHECK(s == "X2^3\nX1*X2^2\nX1^2*X2\nX1^3\n");
}
