#include "mforge/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace mforge {

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
  if (n < 1) throw std::invalid_argument("MonomialIdeal: need n >= 1");
  for (const auto& g : generators)
    if (g.vars() != n) throw std::invalid_argument("MonomialIdeal: generator has wrong variable count");
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) { return GradedLexLess{}(a, b); });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Minimalize: drop any generator divisible by another.
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : generators_)
      if (mono_divides(h, g)) { redundant = true; break; }
    if (!redundant) generators_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.vars() != n_) throw std::invalid_argument("contains_monomial: ambient variable counts differ");
  for (const auto& g : generators_)
    if (mono_divides(g, m)) return true;
  return false;
}

std::string MonomialIdeal::serialize() const {
  std::string out;
  const auto names = default_names(n_);
  for (const auto& g : generators_) {
    out += to_string(g, names);
    out += '\n';
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  std::vector<Monomial> result;
  std::vector<int> e(n, 0);
  // Enumerate compositions of `degree` into n parts.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      e[var] = remaining;
      result.push_back(Monomial(e));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(result.begin(), result.end(),
            [](const Monomial& a, const Monomial& b) { return GradedLexLess{}(a, b); });
  return result;
}

MonomialIdeal build_ideal_c(int n, int c) {
  if (n <= 0 || c <= 0) throw std::invalid_argument("build_ideal_c: need n >= 1 and c >= 1");
  std::vector<Monomial> gens;
  for (const auto& m : monomials_of_degree(n, c)) {
    const bool has_square = std::any_of(m.exponents.begin(), m.exponents.end(),
                                        [](int e) { return e >= 2; });
    if (has_square) gens.push_back(m);
  }
  MonomialIdeal ideal(n, std::move(gens));
  ideal.below_construction_range_ = (c < 3);
  return ideal;
}

Polynomial normal_form(const MonomialIdeal& ideal, const Polynomial& p) {
  if (p.vars() != ideal.vars())
    throw std::invalid_argument("normal_form: ambient variable counts differ");
  Polynomial r(p.vars());
  for (const auto& [m, c] : p.terms())
    if (!ideal.contains(m)) r.add_term(m, c);
  return r;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("standard_monomials: negative degree cap");
  for (const auto& m : monomials_of_degree(ideal.vars(), degree_cap + 1))
    if (!ideal.contains(m))
      throw std::runtime_error("standard_monomials: quotient not finite-dimensional at this cap");
  std::vector<Monomial> basis;
  for (int deg = 0; deg <= degree_cap; ++deg)
    for (const auto& m : monomials_of_degree(ideal.vars(), deg))
      if (!ideal.contains(m)) basis.push_back(m);
  return basis;
}

std::vector<Polynomial> a_generators(int n, int c) {
  if (n < 1 || c < 1) throw std::invalid_argument("a_generators: need n >= 1, c >= 1");
  std::vector<Polynomial> gens;
  const Polynomial one = Polynomial::constant(n, 1);
  for (int i = 0; i < n; ++i)
    gens.push_back(poly_pow(Polynomial::variable(n, i) - one, static_cast<unsigned int>(c)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Polynomial xi = Polynomial::variable(n, i);
      const Polynomial xj = Polynomial::variable(n, j);
      gens.push_back((xi - one) * poly_pow(xi * xj - one, static_cast<unsigned int>(c - 1)));
    }
  return gens;
}

std::vector<Polynomial> b_generators(int n, int c) {
  if (n < 1 || c < 1) throw std::invalid_argument("b_generators: need n >= 1, c >= 1");
  std::vector<Polynomial> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(poly_pow(Polynomial::variable(n, i), static_cast<unsigned int>(c)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Polynomial xi = Polynomial::variable(n, i);
      const Polynomial xj = Polynomial::variable(n, j);
      gens.push_back(xi * poly_pow(xi + xj + xi * xj, static_cast<unsigned int>(c - 1)));
    }
  return gens;
}

ContainmentReport check_b_subset_c(int n, int c) {
  const MonomialIdeal ideal = build_ideal_c(n, c);
  ContainmentReport report;
  for (const auto& g : b_generators(n, c)) {
    const Polynomial rem = normal_form(ideal, g);
    if (!rem.is_zero()) {
      report.contained = false;
      report.failing_generator = g;
      report.surviving_monomial = rem.terms().begin()->first;
      return report;
    }
  }
  return report;
}

bool check_m_power_subset(int n, int c) {
  const MonomialIdeal ideal = build_ideal_c(n, c);
  for (const auto& m : monomials_of_degree(n, n + 1))
    if (!ideal.contains(m)) return false;
  return true;
}

Polynomial nf_pow(const MonomialIdeal& ideal, const Polynomial& p, unsigned int k) {
  Polynomial result = normal_form(ideal, Polynomial::constant(p.vars(), 1));
  const Polynomial base = normal_form(ideal, p);
  for (unsigned int j = 0; j < k; ++j) result = normal_form(ideal, result * base);
  return result;
}

bool check_congruence(int n, int c, int e) {
  if (e < 1) throw std::invalid_argument("check_congruence: need e >= 1");
  const MonomialIdeal ideal = build_ideal_c(n, c);
  const Polynomial one = Polynomial::constant(n, 1);
  Polynomial product = one;
  for (int i = 0; i < n; ++i)
    product = product * poly_pow(Polynomial::variable(n, i) + one, static_cast<unsigned int>(e));
  const Polynomial lhs = nf_pow(ideal, product - one, static_cast<unsigned int>(n));

  Monomial squarefree = Monomial(std::vector<int>(n, 1));
  if (ideal.contains(squarefree)) return false;  // X_1...X_n must survive
  Int coeff;  // e^n * n!
  mpz_ui_pow_ui(coeff.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(n));
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  coeff *= fact;
  return lhs == Polynomial::term(squarefree, coeff);
}

}  // namespace mforge
