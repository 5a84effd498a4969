#include "glinf/sweep.hpp"

#include "glinf/casimir.hpp"
#include "glinf/charmat.hpp"
#include "glinf/tensor.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

namespace glinf {

namespace {

struct CriterionInfo {
  const char* title;
  double budget_seconds;
};

// Titles and wall-clock budgets of the acceptance criteria.
constexpr CriterionInfo kInfo[] = {
    {"formula cross-validation: closed == recursion == GT oracle at n = k, k+1, k+2", 120},
    {"second-order consistency: chi(I_2) == (Lambda, Lambda + 2 rho)", 30},
    {"gl(k) invariant formula vs trace of A^m on V_k(Lambda)", 60},
    {"characteristic identity prod (A - alpha_i) = 0 at n = k+1 and k+2", 180},
    {"reduced identities (A-1)(A+k), (A+1)(A-k), (A-p)(A+k-q)(A+k+l)", 60},
    {"generalized identity for A_Lambda and its reduced form", 180},
    {"commutator identity for A^m and tail stabilization (A^m)_ii = I_{m-1}", 120},
    {"oracle integrity: commutation relations and mutation detection", 60},
    {"tensor layer: dimension audits, stability, Pieri", 30},
};

std::string show(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "}";
}

std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool is_sub_multiset(std::vector<Rational> sub, std::vector<Rational> all) {
  std::sort(sub.begin(), sub.end());
  std::sort(all.begin(), all.end());
  return std::includes(all.begin(), all.end(), sub.begin(), sub.end());
}

HighestWeight hw(std::initializer_list<long> parts) { return make_highest_weight(parts); }

bool has_duplicates(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

Sweep::Sweep(SweepOptions options) : options_(options) {}

std::string Sweep::title(int id) { return id >= 1 && id <= kCriteria ? kInfo[id - 1].title : "unknown criterion"; }

const ModuleRep& Sweep::module(const HighestWeight& lambda, std::size_t n) {
  auto key = std::make_pair(lambda, n);
  auto it = modules_.find(key);
  if (it != modules_.end()) return *it->second;
  ModuleRep rep = build_module(lambda, n, Validation::Never);
  if (options_.inject_mutation && n >= 2 && rep.dim() >= 1)
    rep = rep.with_perturbed_entry(1, 2, rep.hwv_index(), rep.hwv_index(), Rational(1));
  return *modules_.emplace(key, std::make_unique<ModuleRep>(std::move(rep))).first->second;
}

CriterionResult Sweep::run(int id) {
  CriterionResult r;
  r.id = id;
  r.title = title(id);
  r.budget_seconds = id >= 1 && id <= kCriteria ? kInfo[id - 1].budget_seconds : 0;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    switch (id) {
      case 1: ok = c1_formula_cross_validation(r.detail); break;
      case 2: ok = c2_second_order(r.detail); break;
      case 3: ok = c3_glk_formula(r.detail); break;
      case 4: ok = c4_identity(r.detail); break;
      case 5: ok = c5_reduced(r.detail); break;
      case 6: ok = c6_generalized_identity(r.detail); break;
      case 7: ok = c7_commutator_and_tail(r.detail); break;
      case 8: ok = c8_oracle_integrity(r.detail); break;
      case 9: ok = c9_tensor(r.detail); break;
      default: r.detail = "no such criterion"; break;
    }
  } catch (const std::exception& e) {
    ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = ok && r.seconds <= r.budget_seconds;
  if (ok && !r.passed) r.detail += " (over the " + std::to_string(static_cast<int>(r.budget_seconds)) + " s budget)";
  return r;
}

std::vector<CriterionResult> Sweep::run_all(const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run(id));
    if (report) report(out.back());
  }
  return out;
}

bool Sweep::c1_formula_cross_validation(std::string& detail) {
  const unsigned m_max = std::min(6u, options_.m_max);
  std::size_t checks = 0;
  for (const auto& lambda : partitions_up_to(6, 3)) {
    std::vector<Rational> closed;
    for (unsigned m = 1; m <= m_max; ++m) {
      closed.push_back(casimir_eigenvalue_closed(lambda, m));
      const Rational rec = casimir_eigenvalue_recursive(lambda, m);
      if (closed.back() != rec) {
        detail = "Lambda=" + to_string(lambda) + " m=" + std::to_string(m) + ": closed " + to_string(closed.back()) +
                 " != recursive " + to_string(rec);
        return false;
      }
    }
    for (std::size_t n = lambda.k(); n <= lambda.k() + 2; ++n) {
      const auto oracle = invariant_scalars(module(lambda, n), m_max);
      for (unsigned m = 1; m <= m_max; ++m) {
        ++checks;
        if (oracle[m - 1] != closed[m - 1]) {
          detail = "Lambda=" + to_string(lambda) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   ": oracle " + to_string(oracle[m - 1]) + " != closed " + to_string(closed[m - 1]);
          return false;
        }
      }
    }
  }
  detail = std::to_string(checks) + " oracle comparisons, m <= " + std::to_string(m_max);
  return true;
}

bool Sweep::c2_second_order(std::string& detail) {
  std::size_t checks = 0;
  for (const auto& lambda : partitions_up_to(6, 3)) {
    const Rational by_form = c2_form(lambda);
    const Rational termwise = inner_product(lambda.as_weight(), lambda.as_weight()) + 2 * rho_pairing(lambda.as_weight());
    for (const Rational& v : {casimir_eigenvalue_closed(lambda, 2), casimir_eigenvalue_recursive(lambda, 2)}) {
      ++checks;
      if (v != by_form || by_form != termwise) {
        detail = "Lambda=" + to_string(lambda) + ": chi(I_2)=" + to_string(v) + " vs (Lambda,Lambda+2rho)=" +
                 to_string(by_form) + " / " + to_string(termwise);
        return false;
      }
    }
  }
  detail = std::to_string(checks) + " comparisons";
  return true;
}

bool Sweep::c3_glk_formula(std::string& detail) {
  const unsigned m_max = std::min(4u, options_.m_max);
  std::size_t checks = 0;
  for (const auto& lambda : partitions_up_to(5, 3)) {
    if (lambda.k() == 0) continue;
    const ModuleRep& rep = module(lambda, lambda.k());
    const BlockOperator a = char_matrix(rep);
    BlockOperator power = a;
    for (unsigned m = 1; m <= m_max; ++m) {
      if (m > 1) power = a * power;
      ++checks;
      const auto trace = power.diagonal_sum().scalar_value();
      const Rational formula = glk_invariant_eigenvalue(lambda, m);
      if (!trace || *trace != formula) {
        detail = "Lambda=" + to_string(lambda) + " m=" + std::to_string(m) + ": trace " +
                 (trace ? to_string(*trace) : std::string("not scalar")) + " != formula " + to_string(formula);
        return false;
      }
    }
  }
  detail = std::to_string(checks) + " comparisons, m <= " + std::to_string(m_max);
  return true;
}

bool Sweep::c4_identity(std::string& detail) {
  const std::vector<HighestWeight> cases = {hw({1}), hw({2}), hw({1, 1}), hw({2, 1}), hw({2, 2}), hw({3, 1, 1})};
  for (const auto& lambda : cases) {
    const auto lo = verify_theorem5(lambda, lambda.k() + 1);
    const auto hi = verify_theorem5(lambda, lambda.k() + 2);
    if (!lo.residual_is_zero || !hi.residual_is_zero || lo.roots != hi.roots) {
      detail = "Lambda=" + to_string(lambda) + ": residual zero at n=k+1: " + (lo.residual_is_zero ? "yes" : "no") +
               ", at n=k+2: " + (hi.residual_is_zero ? "yes" : "no") + ", roots " + show(lo.roots) + " vs " +
               show(hi.roots);
      return false;
    }
  }
  detail = std::to_string(cases.size()) + " weights at two ranks";
  return true;
}

bool Sweep::c5_reduced(std::string& detail) {
  struct Case {
    std::string label;
    HighestWeight lambda;
    std::vector<Rational> stated;  // roots as written in the reduced identity
    bool same_as_full;
  };
  std::vector<Case> cases;
  for (long k = 1; k <= 3; ++k) {
    std::vector<long> ones(static_cast<std::size_t>(k), 1);
    cases.push_back({"(A-1)(A+" + std::to_string(k) + ")", make_highest_weight(ones), {Rational(1), Rational(-k)}, false});
  }
  for (long k = 1; k <= 3; ++k)
    cases.push_back({"(A+1)(A-" + std::to_string(k) + ")", hw({k}), {Rational(-1), Rational(k)}, true});
  // p^k q^l with k = l = 1 and q < p
  for (auto [p, q] : {std::pair<long, long>{2, 1}, {3, 1}}) {
    const long k = 1, l = 1;
    cases.push_back({"(A-" + std::to_string(p) + ")(A+k-" + std::to_string(q) + ")(A+k+l)", hw({p, q}),
                     {Rational(p), Rational(q - k), Rational(-(k + l))}, false});
  }
  for (const auto& c : cases) {
    const auto prefix = c.label + " for Lambda=" + to_string(c.lambda) + ": ";
    const auto derived = reduced_theorem5_roots(c.lambda);
    if (sorted(derived) != sorted(c.stated)) {
      detail = prefix + "stated roots " + show(c.stated) + " differ from admissible-summand roots " + show(derived);
      return false;
    }
    const ModuleRep rep = build_module(c.lambda, c.lambda.k() + 1);
    const SparseMatrix a = char_matrix(rep).flatten();
    if (!annihilation_residual(a, c.stated).is_zero()) {
      detail = prefix + "does not annihilate";
      return false;
    }
    const auto needed = factor_needed(a, c.stated);
    if (has_duplicates(c.stated) || std::find(needed.begin(), needed.end(), false) != needed.end()) {
      detail = prefix + "a factor is redundant or roots coincide";
      return false;
    }
    const auto full = alpha_roots(c.lambda, c.lambda.k() + 1);
    if (c.same_as_full && sorted(full) != sorted(c.stated)) {
      detail = prefix + "reduced identity differs from the full one " + show(full);
      return false;
    }
  }
  detail = std::to_string(cases.size()) + " reduced identities";
  return true;
}

bool Sweep::c6_generalized_identity(std::string& detail) {
  const std::vector<std::pair<HighestWeight, HighestWeight>> cases = {
      {hw({1}), hw({2, 1})}, {hw({1, 1}), hw({1})}, {hw({1, 1}), hw({2})}};
  for (const auto& [lambda, mu] : cases) {
    const auto prefix = "Lambda=" + to_string(lambda) + " mu=" + to_string(mu) + ": ";
    const auto full = verify_theorem6(lambda, mu);
    if (!full.residual_is_zero) {
      detail = prefix + "prod over " + show(full.roots) + " is nonzero";
      return false;
    }
    const auto reduced = verify_reduced_theorem6(lambda, mu);
    if (!is_sub_multiset(reduced.roots, full.roots)) {
      detail = prefix + "reduced roots " + show(reduced.roots) + " not contained in " + show(full.roots);
      return false;
    }
    if (!reduced.residual_is_zero) {
      detail = prefix + "reduced product over " + show(reduced.roots) + " is nonzero";
      return false;
    }
    const ModuleRep left = build_module(lambda, full.n_used);
    const ModuleRep right = build_module(mu, full.n_used);
    const auto needed = factor_needed(split_casimir(left, right).flatten(), reduced.roots);
    if (has_duplicates(reduced.roots) || std::find(needed.begin(), needed.end(), false) != needed.end()) {
      detail = prefix + "reduced identity has a redundant or coincident root " + show(reduced.roots);
      return false;
    }
  }
  detail = std::to_string(cases.size()) + " pairs";
  return true;
}

bool Sweep::c7_commutator_and_tail(std::string& detail) {
  const std::vector<HighestWeight> cases = {hw({1}), hw({1, 1}), hw({2})};
  const unsigned m1 = std::min(3u, options_.m_max);
  std::size_t tuples = 0;
  for (const auto& lambda : cases) {
    for (std::size_t n = lambda.k(); n <= 3; ++n) {
      const ModuleRep& rep = module(lambda, n);
      const BlockOperator a = char_matrix(rep);
      const auto sample = prop1_samples(n, options_.seed);
      BlockOperator power = a;
      for (unsigned m = 1; m <= m1; ++m) {
        if (m > 1) power = a * power;
        tuples += sample.size();
        if (!verify_prop1(rep, power, sample)) {
          detail = "commutator identity fails for Lambda=" + to_string(lambda) + " n=" + std::to_string(n) +
                   " m=" + std::to_string(m);
          return false;
        }
      }
    }
    const std::size_t big = lambda.k() + 3;
    for (unsigned m = 2; m <= std::min(3u, options_.m_max); ++m) {
      if (!verify_prop2(module(lambda, big), m)) {
        detail = "tail stabilization fails for Lambda=" + to_string(lambda) + " N=" + std::to_string(big) +
                 " m=" + std::to_string(m);
        return false;
      }
    }
  }
  if (options_.m_max >= 2) {
    // (A^2)_ii v = I_1 v = v for the highest weight vector of V_3(1), i = 2, 3.
    const ModuleRep& rep = module(hw({1}), 3);
    const BlockOperator sq = op_power(char_matrix(rep), 2);
    for (std::size_t i = 2; i <= 3; ++i) {
      const auto col = sq.block(i, i).column(rep.hwv_index());
      if (col.size() != 1 || col[0].col != rep.hwv_index() || col[0].value != 1) {
        detail = "(A^2)_ii v != v on the highest weight vector of V_3(1), i=" + std::to_string(i);
        return false;
      }
    }
  }
  detail = std::to_string(tuples) + " commutator tuples";
  return true;
}

bool Sweep::c8_oracle_integrity(std::string& detail) {
  std::size_t validated = 0;
  double worst = 0;
  for (const auto& [key, rep] : modules_) {
    if (rep->dim() > kAutoValidateMaxDim) continue;
    const auto start = std::chrono::steady_clock::now();
    const auto check = verify_commutation(*rep);
    const bool hwv = verify_highest_weight_vector(*rep);
    const bool dim = weyl_dimension(rep->lambda(), rep->n()) == rep->dim();
    worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    if (!check || !hwv || !dim) {
      detail = "V_" + std::to_string(rep->n()) + to_string(rep->lambda()) + ": " +
               (!check ? check.counterexample : !hwv ? "highest weight vector" : "dimension");
      return false;
    }
    ++validated;
  }
  if (worst > 10) {
    detail = "a single module took " + std::to_string(worst) + " s to validate";
    return false;
  }
  std::size_t mutations = 0;
  for (const auto& [lambda, n] : std::vector<std::pair<HighestWeight, std::size_t>>{
           {hw({1}), 2}, {hw({1}), 3}, {hw({2, 1}), 3}, {hw({1, 1}), 3}, {hw({2}), 4}}) {
    const ModuleRep rep = build_module(lambda, n, Validation::Never);
    const std::size_t last = rep.dim() - 1;
    const auto variants = {rep.with_perturbed_entry(1, 2, rep.hwv_index(), rep.hwv_index(), Rational(1)),
                           rep.with_perturbed_entry(n, 1, last, 0, Rational(1)),
                           rep.with_perturbed_entry(1, 1, 0, 0, Rational(1, 2))};
    for (const auto& bad : variants) {
      ++mutations;
      if (verify_commutation(bad)) {
        detail = "perturbed V_" + std::to_string(n) + to_string(lambda) + " still passes the commutation check";
        return false;
      }
    }
  }
  if (validated == 0) {
    detail = "no modules were built before this criterion";
    return false;
  }
  detail = std::to_string(validated) + " modules validated, " + std::to_string(mutations) + " mutations caught";
  return true;
}

bool Sweep::c9_tensor(std::string& detail) {
  const std::vector<HighestWeight> set = {hw({1}), hw({2}), hw({1, 1}), hw({2, 1})};
  for (const auto& lambda : set) {
    for (const auto& mu : set) {
      const auto prefix = to_string(lambda) + " x " + to_string(mu) + ": ";
      const auto dec = lr_decompose(lambda, mu);
      if (!dimension_audit(dec, lambda.k() + mu.k())) {
        detail = prefix + "dimension audit fails";
        return false;
      }
      if (!stability_check(lambda, mu)) {
        detail = prefix + "decomposition is not stable from n=k+l to k+l+1";
        return false;
      }
      if (!dec.same_summands(lr_decompose(mu, lambda))) {
        detail = prefix + "not commutative";
        return false;
      }
      for (const auto& s : dec.summands)
        if (s.nu.k() > lambda.k() + mu.k()) {
          detail = prefix + "summand " + to_string(s.nu) + " has more than k+l parts";
          return false;
        }
    }
  }
  const auto one = hw({1});
  std::size_t pieri = 0;
  for (const auto& lambda : partitions_up_to(6, 4)) {
    ++pieri;
    if (!pieri_vector(lambda).same_summands(lr_decompose(one, lambda))) {
      detail = "Pieri rule disagrees with Littlewood-Richardson for " + to_string(lambda);
      return false;
    }
  }
  detail = std::to_string(set.size() * set.size()) + " pairs, " + std::to_string(pieri) + " Pieri checks";
  return true;
}

}  // namespace glinf
