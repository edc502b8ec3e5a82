#include "mforge/verify.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace mforge {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<long>(r % span);
}

const CheckResult* GnCertificate::find_check(const std::string& name) const {
  for (const auto& check : checks)
    if (check.name == name) return &check;
  return nullptr;
}

namespace {

IntRowVec random_vector(int d, Rng& rng, int bound) {
  IntRowVec v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.uniform(-bound, bound);
  return v;
}

}  // namespace

GroupElement random_group_element(const GnCertificate& cert, Rng& rng, int bound) {
  IntMatrix t = identity_matrix(cert.d);
  for (const auto& ti : cert.matrices) {
    const long k = rng.uniform(0, 3);
    t = mat_mul(t, matrix_power(ti, static_cast<unsigned long>(k)));
  }
  return GroupElement{t, random_vector(cert.d, rng, bound)};
}

GroupElement random_T_element(const GnCertificate& cert, Rng& rng, int bound) {
  const long pick = rng.uniform(0, cert.n);  // 0 = identity coset
  IntMatrix t = (pick == 0) ? identity_matrix(cert.d) : cert.matrices[pick - 1];
  return GroupElement{std::move(t), random_vector(cert.d, rng, bound)};
}

bool in_T(const GnCertificate& cert, const GroupElement& g) {
  if (g.t == identity_matrix(cert.d)) return true;
  for (const auto& ti : cert.matrices)
    if (g.t == ti) return true;
  return false;
}

MalcevOnTReport malcev_on_T(const GnCertificate& cert, int trials, std::uint64_t seed,
                            int bound) {
  MalcevOnTReport report;
  report.trials = trials;
  report.seed = seed;

  // Complete criterion: f_c(t, u) annihilates A for every pair of coset
  // representatives.
  const Polynomial f = build_f_c(cert.c);
  std::vector<IntMatrix> reps{identity_matrix(cert.d)};
  reps.insert(reps.end(), cert.matrices.begin(), cert.matrices.end());
  report.exhaustive_pass = true;
  for (const auto& t : reps)
    for (const auto& u : reps)
      if (!is_zero(endo_eval(f, t, u))) {
        report.exhaustive_pass = false;
        break;
      }

  Rng rng(seed);
  report.randomized_pass = true;
  for (int k = 0; k < trials; ++k) {
    GroupElement gx = random_T_element(cert, rng, bound);
    GroupElement gy = random_T_element(cert, rng, bound);
    if (!check_malcev(cert.c, gx, gy)) {
      report.randomized_pass = false;
      report.counterexample = std::make_pair(std::move(gx), std::move(gy));
      break;
    }
  }
  return report;
}

MalcevFailureWitness find_Mn_failure_witness(const GnCertificate& cert, int e) {
  if (e < 1) throw std::invalid_argument("find_Mn_failure_witness: need e >= 1");
  IntMatrix t = identity_matrix(cert.d);
  for (const auto& ti : cert.matrices) t = mat_mul(t, ti);
  t = matrix_power(t, static_cast<unsigned long>(e));

  // F = f_n(t, t); nonzero whenever (t - 1)^n != 0 because the cofactor
  // h_n acts injectively on a unipotent matrix.
  const Polynomial f = build_f_c(cert.n);
  const IntMatrix F = endo_eval(f, t, t);

  MalcevFailureWitness witness;
  witness.e = e;
  witness.b = zero_vector(cert.d);
  bool found = false;
  for (int r = 0; r < cert.d; ++r) {
    IntRowVec basis_vec = zero_vector(cert.d);
    basis_vec(r) = 1;
    if (!is_zero(vec_mat_mul(basis_vec, F))) {
      witness.a = std::move(basis_vec);
      found = true;
      break;
    }
  }
  if (!found) throw std::runtime_error("find_Mn_failure_witness: no basis vector separates; F = 0");

  const MalcevPair words = malcev_words(cert.n);
  const GroupElement gx{t, witness.a};
  const GroupElement gy{t, witness.b};
  witness.alpha_value = eval_word(words.alpha, gx, gy);
  witness.beta_value = eval_word(words.beta, gx, gy);
  if (witness.alpha_value == witness.beta_value)
    throw std::runtime_error("find_Mn_failure_witness: direct evaluation did not separate");
  return witness;
}

GnCertificate build_Gn(int c, int n, const std::vector<int>& e_list, const BuildOptions& options) {
  if (c < 3) throw std::invalid_argument("build_Gn: need c >= 3");
  if (n < c) throw std::invalid_argument("build_Gn: need n >= c");
  for (int e : e_list)
    if (e < 1) throw std::invalid_argument("build_Gn: each e must be >= 1");

  GnCertificate cert;
  cert.c = c;
  cert.n = n;
  cert.e_list = e_list;
  cert.seed = options.seed;

  const QuotientAlgebra q = build_quotient(n, c);
  cert.d = q.dim();
  cert.matrices = regular_rep_family(q);

  auto record = [&cert](const std::string& name, bool pass, std::string detail) {
    cert.checks.push_back(CheckResult{name, pass, std::move(detail)});
    if (!pass && cert.failing_stage.empty()) cert.failing_stage = name;
  };

  bool unitriangular = true;
  for (const auto& t : cert.matrices) unitriangular = unitriangular && is_unitriangular_01(t);
  record("unitriangular_01", unitriangular, "all t_i upper unitriangular with 0/1 entries");

  record("commuting", verify_commuting_family(q), "t_i t_j = t_j t_i for all pairs");

  const Polynomial x = Polynomial::variable(1, 0);
  const Polynomial one1 = Polynomial::constant(1, 1);
  bool cond_i = true;
  for (const auto& t : cert.matrices)
    cond_i = cond_i && is_zero(endo_eval(poly_pow(x - one1, static_cast<unsigned int>(c)), t));
  record("cond_i", cond_i, "(t_i - 1)^c = 0 for all i");

  const Polynomial fx = Polynomial::variable(2, 0);
  const Polynomial fy = Polynomial::variable(2, 1);
  const Polynomial one2 = Polynomial::constant(2, 1);
  const Polynomial pair_poly =
      (fx - one2) * poly_pow(fx * fy - one2, static_cast<unsigned int>(c - 1));
  bool cond_ii = true;
  for (int i = 0; i < n && cond_ii; ++i)
    for (int j = 0; j < n && cond_ii; ++j) {
      if (i == j) continue;
      cond_ii = is_zero(endo_eval(pair_poly, cert.matrices[i], cert.matrices[j]));
    }
  record("cond_ii", cond_ii, "(t_i - 1)(t_i t_j - 1)^{c-1} = 0 for all i != j");

  IntMatrix t_all = identity_matrix(cert.d);
  for (const auto& t : cert.matrices) t_all = mat_mul(t_all, t);
  {
    bool cond_iii = true;
    std::string detail;
    for (int e : e_list) {
      const IntMatrix te = matrix_power(t_all, static_cast<unsigned long>(e));
      const bool nonzero =
          !is_zero(endo_eval(poly_pow(x - one1, static_cast<unsigned int>(n)), te));
      cond_iii = cond_iii && nonzero;
      if (!detail.empty()) detail += "; ";
      detail += "e=" + std::to_string(e) + (nonzero ? ": (t^e - 1)^n != 0" : ": VANISHED");
    }
    record("cond_iii", cond_iii, detail);
  }

  {
    const ContainmentReport bc = check_b_subset_c(n, c);
    std::string detail = "all generators of b reduce to 0 mod c";
    if (!bc.contained)
      detail = "survivor " + to_string(*bc.surviving_monomial, default_names(n)) + " in generator " +
               to_string(*bc.failing_generator, default_names(n));
    record("b_subset_c", bc.contained, detail);
  }

  record("m_power", check_m_power_subset(n, c), "every degree-(n+1) monomial lies in c");

  {
    bool congruence = true;
    std::string detail;
    for (int e : e_list) {
      const bool ok = check_congruence(n, c, e);
      congruence = congruence && ok;
      if (!detail.empty()) detail += "; ";
      detail += "e=" + std::to_string(e) + (ok ? ": ok" : ": FAILED");
    }
    record("congruence", congruence, detail);
  }

  {
    const MalcevOnTReport law = malcev_on_T(cert, options.trials, options.seed, options.bound);
    record("malcev_on_T", law.exhaustive_pass && law.randomized_pass,
           "exhaustive f_c(t,u)=0 on all pairs; trials=" + std::to_string(law.trials) +
               " seed=" + std::to_string(law.seed));
  }

  {
    const int cls = nilpotency_class(cert.matrices, cert.d);
    record("nilpotency_class", cls >= 1 && cls <= cert.d, "class=" + std::to_string(cls));
  }

  cert.valid = cert.failing_stage.empty();
  if (cert.valid && !e_list.empty()) cert.witness = find_Mn_failure_witness(cert, e_list.front());
  return cert;
}

RestrictedProductElement product_mul(const RestrictedProductElement& g,
                                     const RestrictedProductElement& h) {
  RestrictedProductElement result = g;
  for (const auto& [index, component] : h.components) {
    auto it = result.components.find(index);
    if (it == result.components.end()) {
      result.components.emplace(index, component);
    } else {
      if (it->second.dim() != component.dim())
        throw std::invalid_argument("product_mul: dimension mismatch at index " +
                                    std::to_string(index));
      it->second = group_mul(it->second, component);
      if (it->second.is_identity()) result.components.erase(it);
    }
  }
  return result;
}

ClosureReport T_membership_and_closure_check(const std::vector<GnCertificate>& certs,
                                             int samples, std::uint64_t seed, int bound) {
  if (certs.empty()) throw std::invalid_argument("T_membership_and_closure_check: no certificates");
  Rng rng(seed);
  ClosureReport report;
  report.samples = samples;
  report.membership_pass = true;
  report.normality_pass = true;
  report.commutator_closure_pass = true;
  report.cross_component_pass = true;

  for (const auto& cert : certs) {
    for (int k = 0; k < samples; ++k) {
      const GroupElement s = random_T_element(cert, rng, bound);
      if (!in_T(cert, s)) report.membership_pass = false;

      const GroupElement g = random_group_element(cert, rng, bound);
      if (!in_T(cert, group_conjugate(s, g))) report.normality_pass = false;

      const GroupElement s2 = random_T_element(cert, rng, bound);
      const GroupElement comm = group_commutator(s, s2);
      // [s, s'] must fall into A_n, i.e. have identity matrix part.
      if (comm.t != identity_matrix(cert.d) || !in_T(cert, comm))
        report.commutator_closure_pass = false;
    }
  }

  // Elements supported at different indices commute in the restricted product.
  if (certs.size() >= 2) {
    for (int k = 0; k < samples; ++k) {
      const size_t i = static_cast<size_t>(rng.uniform(0, static_cast<long>(certs.size()) - 1));
      size_t j = static_cast<size_t>(rng.uniform(0, static_cast<long>(certs.size()) - 2));
      if (j >= i) ++j;
      RestrictedProductElement gi, gj;
      gi.components.emplace(certs[i].n, random_T_element(certs[i], rng, bound));
      gj.components.emplace(certs[j].n, random_T_element(certs[j], rng, bound));
      const RestrictedProductElement ab = product_mul(gi, gj);
      const RestrictedProductElement ba = product_mul(gj, gi);
      if (ab.components.size() != ba.components.size()) report.cross_component_pass = false;
      for (const auto& [index, component] : ab.components) {
        auto it = ba.components.find(index);
        if (it == ba.components.end() || it->second != component)
          report.cross_component_pass = false;
      }
    }
  }
  return report;
}

int separate_in_p_quotient(const GroupElement& g, long p) {
  if (p < 2) throw std::invalid_argument("separate_in_p_quotient: p must be a prime >= 2");
  if (g.is_identity()) throw std::invalid_argument("separate_in_p_quotient: g is the identity");
  const Eigen::Index d = g.dim();
  Int modulus(p);
  for (int k = 1;; ++k) {
    for (Eigen::Index i = 0; i < d; ++i) {
      if (g.a(i) % modulus != 0) return k;
      for (Eigen::Index j = 0; j < d; ++j) {
        const Int delta = g.t(i, j) - (i == j ? 1 : 0);
        if (delta % modulus != 0) return k;
      }
    }
    modulus *= p;
  }
}

namespace {

nlohmann::ordered_json group_element_json(const GroupElement& g, int n, int c) {
  return nlohmann::ordered_json{{"t", format_matrix(g.t, n, c, 0)}, {"a", format_vector(g.a)}};
}

}  // namespace

std::string certificate_to_json(const GnCertificate& cert) {
  nlohmann::ordered_json j;
  j["c"] = cert.c;
  j["n"] = cert.n;
  j["d"] = cert.d;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& check : cert.checks)
    j["checks"].push_back(
        {{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
  j["matrices"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < cert.matrices.size(); ++i)
    j["matrices"].push_back(format_matrix(cert.matrices[i], cert.n, cert.c, static_cast<int>(i + 1)));
  if (cert.witness) {
    j["witness"] = {{"e", cert.witness->e},
                    {"a", format_vector(cert.witness->a)},
                    {"b", format_vector(cert.witness->b)},
                    {"alpha_val", group_element_json(cert.witness->alpha_value, cert.n, cert.c)},
                    {"beta_val", group_element_json(cert.witness->beta_value, cert.n, cert.c)}};
  } else {
    j["witness"] = nullptr;
  }
  j["seed"] = cert.seed;
  j["valid"] = cert.valid;
  if (!cert.failing_stage.empty()) j["failing_stage"] = cert.failing_stage;
  return j.dump(2) + "\n";
}

}  // namespace mforge
