#include "cli.hpp"

#include "glinf/casimir.hpp"
#include "glinf/charmat.hpp"
#include "glinf/gt_oracle.hpp"
#include "glinf/json_io.hpp"
#include "glinf/sweep.hpp"
#include "glinf/tensor.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace glinf::cli {

namespace {

std::string csv_weight(const HighestWeight& w) { return "\"" + to_json(w).dump() + "\""; }

// One formatted result in all three shapes; only the requested one is used.
struct Output {
  Json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string table;
};

void write(const RunConfig& cfg, const Output& o, std::ostream& out) {
  std::ostringstream s;
  switch (cfg.format) {
    case Format::Json: s << o.json.dump() << '\n'; break;
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) s << (i ? "," : "") << fields[i];
        s << '\n';
      };
      line(o.csv_header);
      for (const auto& r : o.csv_rows) line(r);
      break;
    }
    case Format::Table: s << o.table; break;
  }
  if (cfg.output.empty()) {
    out << s.str();
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + cfg.output + "'");
  f << s.str();
}

std::size_t rank_or(const RunConfig& cfg, std::size_t fallback) { return cfg.n_override.value_or(fallback); }

ExitCode cmd_eigenvalues(const RunConfig& cfg, Output& o, std::ostream& diag) {
  const HighestWeight& lambda = *cfg.lambda;
  std::vector<Rational> oracle;
  std::size_t n = 0;
  if (cfg.validate) {
    n = rank_or(cfg, lambda.k() + 1);
    oracle = invariant_scalars(build_module(lambda, n), cfg.m_max);
  }
  bool all_agree = true;
  o.json = Json::array();
  o.csv_header = {"lambda", "m", "closed", "recursive", "oracle", "agree"};
  std::ostringstream t;
  t << "Casimir eigenvalues for Lambda=" << to_string(lambda);
  if (cfg.validate) t << " (oracle at n=" << n << ")";
  t << "\n  m  closed  recursive" << (cfg.validate ? "  oracle" : "") << "  agree\n";
  for (unsigned m = 1; m <= cfg.m_max; ++m) {
    EigenvalueReport r = eigenvalue_report(lambda, m);
    Json j = to_json(r);
    std::string oracle_text;
    if (cfg.validate) {
      oracle_text = to_string(oracle[m - 1]);
      r.agree = r.agree && oracle[m - 1] == r.value_closed;
      j.erase("agree");
      j["oracle"] = oracle_text;
      j["agree"] = r.agree;
    }
    if (!r.agree) diag << "eigenvalues: methods disagree at m=" << m << '\n';
    all_agree = all_agree && r.agree;
    o.json.push_back(std::move(j));
    o.csv_rows.push_back({csv_weight(lambda), std::to_string(m), to_string(r.value_closed),
                          to_string(r.value_recursive), oracle_text, r.agree ? "true" : "false"});
    t << std::setw(3) << m << "  " << to_string(r.value_closed) << "  " << to_string(r.value_recursive);
    if (cfg.validate) t << "  " << oracle_text;
    t << "  " << (r.agree ? "yes" : "NO") << '\n';
  }
  o.table = t.str();
  return all_agree ? ExitCode::Ok : ExitCode::Violation;
}

ExitCode cmd_verify_identity(const RunConfig& cfg, Output& o) {
  const HighestWeight& lambda = *cfg.lambda;
  IdentityCertificate cert;
  if (cfg.mu) {
    cert = cfg.reduced ? verify_reduced_theorem6(lambda, *cfg.mu, cfg.n_override)
                       : verify_theorem6(lambda, *cfg.mu, cfg.n_override);
  } else {
    cert = cfg.reduced ? verify_reduced_theorem5(lambda, cfg.n_override) : verify_theorem5(lambda, cfg.n_override);
  }
  o.json = to_json(cert);
  o.csv_header = {"lambda", "mu", "n", "factor", "root", "kernel_dim", "residual_zero"};
  std::ostringstream t;
  t << (cfg.reduced ? "reduced " : "") << "identity for " << (cfg.mu ? "A_Lambda, Lambda=" : "A, Lambda=")
    << to_string(lambda);
  if (cfg.mu) t << ", mu=" << to_string(*cfg.mu);
  t << ", n=" << cert.n_used << ", space dim " << cert.space_dim << "\n  factor  root  kernel dim\n";
  for (std::size_t i = 0; i < cert.roots.size(); ++i) {
    o.csv_rows.push_back({csv_weight(lambda), cfg.mu ? csv_weight(*cfg.mu) : "", std::to_string(cert.n_used),
                          std::to_string(i + 1), to_string(cert.roots[i]),
                          std::to_string(cert.per_root_kernel_dims[i]), cert.residual_is_zero ? "true" : "false"});
    t << std::setw(8) << i + 1 << "  " << to_string(cert.roots[i]) << "  " << cert.per_root_kernel_dims[i] << '\n';
  }
  t << "  residual " << (cert.residual_is_zero ? "is exactly zero" : "is NONZERO") << '\n';
  o.table = t.str();
  return cert.residual_is_zero ? ExitCode::Ok : ExitCode::Violation;
}

ExitCode cmd_verify_invariants(const RunConfig& cfg, Output& o) {
  const HighestWeight& lambda = *cfg.lambda;
  const std::size_t n = rank_or(cfg, lambda.k() + 2);
  const ModuleRep rep = build_module(lambda, n, cfg.validate ? Validation::Always : Validation::Auto);
  const auto oracle = invariant_scalars(rep, cfg.m_max);
  const auto sample = prop1_samples(n, cfg.seed);
  const bool tail_applies = n >= lambda.k() + 2;
  const BlockOperator a = char_matrix(rep);
  BlockOperator power = a;
  bool ok = true;
  o.json = Json::array();
  o.csv_header = {"lambda", "n", "m", "oracle", "closed", "agree", "commutator", "tail"};
  std::ostringstream t;
  t << "invariants on V_" << n << to_string(lambda) << " (dim " << rep.dim() << ")\n"
    << "  m  oracle  closed  agree  commutator  tail\n";
  for (unsigned m = 1; m <= cfg.m_max; ++m) {
    if (m > 1) power = a * power;
    const Rational closed = casimir_eigenvalue_closed(lambda, m);
    const bool agree = closed == oracle[m - 1];
    const bool commutes = verify_prop1(rep, power, sample);
    std::optional<bool> tail_ok;
    if (m >= 2 && tail_applies) tail_ok = verify_prop2(rep, m);
    ok = ok && agree && commutes && tail_ok.value_or(true);
    Json j;
    j["lambda"] = to_json(lambda);
    j["n"] = n;
    j["m"] = m;
    j["oracle"] = to_string(oracle[m - 1]);
    j["closed"] = to_string(closed);
    j["agree"] = agree;
    j["commutator"] = commutes;
    j["tail"] = tail_ok ? Json(*tail_ok) : Json(nullptr);
    o.json.push_back(std::move(j));
    const std::string tail = tail_ok ? (*tail_ok ? "true" : "false") : "";
    o.csv_rows.push_back({csv_weight(lambda), std::to_string(n), std::to_string(m), to_string(oracle[m - 1]),
                          to_string(closed), agree ? "true" : "false", commutes ? "true" : "false", tail});
    t << std::setw(3) << m << "  " << to_string(oracle[m - 1]) << "  " << to_string(closed) << "  "
      << (agree ? "yes" : "NO") << "  " << (commutes ? "holds" : "FAILS") << "  "
      << (tail_ok ? (*tail_ok ? "holds" : "FAILS") : "-") << '\n';
  }
  o.table = t.str();
  return ok ? ExitCode::Ok : ExitCode::Violation;
}

ExitCode cmd_decompose(const RunConfig& cfg, Output& o) {
  const HighestWeight& lambda = *cfg.lambda;
  const HighestWeight& mu = *cfg.mu;
  const Decomposition dec = lr_decompose(lambda, mu);
  bool ok = true;
  std::string checks;
  if (cfg.validate) {
    const std::size_t n = rank_or(cfg, lambda.k() + mu.k());
    const bool audit = dimension_audit(dec, lambda.k() + mu.k());
    const bool stable = stability_check(lambda, mu);
    const bool chars = dec.same_summands(decompose_by_characters(lambda, mu, n)) || n < lambda.k() + mu.k();
    ok = audit && stable && chars;
    checks = std::string("dimension audit ") + (audit ? "ok" : "FAILS") + ", stability " + (stable ? "ok" : "FAILS") +
             ", character route " + (chars ? "ok" : "FAILS") + "\n";
  }
  o.json = to_json(dec);
  o.csv_header = {"lambda", "mu", "nu", "mult"};
  std::ostringstream t;
  t << to_string(lambda) << " x " << to_string(mu) << " =\n";
  for (const auto& s : dec.summands) {
    o.csv_rows.push_back({csv_weight(lambda), csv_weight(mu), csv_weight(s.nu), std::to_string(s.mult)});
    t << "  " << s.mult << " x " << to_string(s.nu) << '\n';
  }
  t << checks;
  o.table = t.str();
  return ok ? ExitCode::Ok : ExitCode::Violation;
}

ExitCode cmd_oracle_check(const RunConfig& cfg, Output& o) {
  const HighestWeight& lambda = *cfg.lambda;
  const std::size_t n = rank_or(cfg, lambda.k() + 1);
  ModuleRep rep = build_module(lambda, n, Validation::Never);
  if (cfg.inject_mutation && n >= 2) rep = rep.with_perturbed_entry(1, 2, rep.hwv_index(), rep.hwv_index(), 1);
  const std::size_t weyl = weyl_dimension(lambda, n);
  const auto comm = verify_commutation(rep);
  const bool hwv = verify_highest_weight_vector(rep);
  const bool ok = comm.ok && hwv && weyl == rep.dim();
  if (!cfg.fixture.empty()) {
    std::ofstream f(cfg.fixture, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open fixture file '" + cfg.fixture + "'");
    f << module_fixture(rep).dump() << '\n';
  }
  o.json = Json::object();
  o.json["lambda"] = to_json(lambda);
  o.json["n"] = n;
  o.json["dim"] = rep.dim();
  o.json["weyl_dim"] = weyl;
  o.json["hwv_index"] = rep.hwv_index();
  o.json["commutation"] = comm.ok;
  o.json["highest_weight_vector"] = hwv;
  o.json["counterexample"] = comm.counterexample;
  o.csv_header = {"lambda", "n", "dim", "weyl_dim", "commutation", "highest_weight_vector"};
  o.csv_rows.push_back({csv_weight(lambda), std::to_string(n), std::to_string(rep.dim()), std::to_string(weyl),
                        comm.ok ? "true" : "false", hwv ? "true" : "false"});
  std::ostringstream t;
  t << "V_" << n << to_string(lambda) << ": dim " << rep.dim() << " (Weyl " << weyl << ")\n"
    << "  commutation relations: " << (comm.ok ? "hold" : "FAIL, " + comm.counterexample) << '\n'
    << "  highest weight vector: " << (hwv ? "ok" : "FAILS") << '\n';
  o.table = t.str();
  return ok ? ExitCode::Ok : ExitCode::Violation;
}

ExitCode cmd_sweep(const RunConfig& cfg, Output& o, std::ostream& progress) {
  SweepOptions opts;
  opts.m_max = cfg.m_max;
  opts.seed = cfg.seed;
  opts.inject_mutation = cfg.inject_mutation;
  Sweep sweep(opts);
  const auto results = sweep.run_all([&](const CriterionResult& r) {
    if (cfg.format == Format::Table && cfg.output.empty()) return;
    progress << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << '\n';
  });
  bool ok = true;
  o.json = Json::array();
  o.csv_header = {"criterion", "passed", "seconds", "detail"};
  std::ostringstream t;
  for (const auto& r : results) {
    ok = ok && r.passed;
    Json j;
    j["criterion"] = r.id;
    j["title"] = r.title;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    o.json.push_back(std::move(j));
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    o.csv_rows.push_back({std::to_string(r.id), r.passed ? "true" : "false", secs.str(), "\"" + r.detail + "\""});
    t << "[" << (r.passed ? "PASS" : "FAIL") << "] " << std::setw(2) << r.id << "  " << r.title << "  ("
      << secs.str() << " s)\n       " << r.detail << '\n';
  }
  t << (ok ? "all criteria pass\n" : "SWEEP FAILED\n");
  o.table = t.str();
  return ok ? ExitCode::Ok : ExitCode::Violation;
}

std::optional<HighestWeight> weight_option(const std::string& text) {
  return make_highest_weight(parse_parts(text));
}

}  // namespace

void validate_config(const RunConfig& cfg) {
  const unsigned cap = order_cap();
  if (cfg.m_max < 1 || cfg.m_max > cap)
    throw std::invalid_argument("--m-max must be in 1.." + std::to_string(cap) + " (GLINF_M_CAP)");
  const bool needs_lambda = cfg.command != "sweep";
  if (needs_lambda && !cfg.lambda) throw std::invalid_argument(cfg.command + " needs --lambda");
  if (cfg.command == "decompose" && !cfg.mu) throw std::invalid_argument("decompose needs --mu");
  if (cfg.n_override && cfg.lambda && *cfg.n_override < cfg.lambda->k())
    throw std::invalid_argument("--n must be at least the number of nonzero parts of lambda");
  if (cfg.n_override && cfg.mu && *cfg.n_override < cfg.mu->k())
    throw std::invalid_argument("--n must be at least the number of nonzero parts of mu");
  if (cfg.command == "verify-identity" && !cfg.mu && cfg.n_override && *cfg.n_override < cfg.lambda->k() + 1)
    throw std::invalid_argument("--n must be at least k+1 for the characteristic identity");
}

ExitCode execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_config(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::Usage;
  }
  try {
    Output o;
    ExitCode code = ExitCode::Usage;
    if (cfg.command == "eigenvalues") code = cmd_eigenvalues(cfg, o, err);
    else if (cfg.command == "verify-identity") code = cmd_verify_identity(cfg, o);
    else if (cfg.command == "verify-invariants") code = cmd_verify_invariants(cfg, o);
    else if (cfg.command == "decompose") code = cmd_decompose(cfg, o);
    else if (cfg.command == "oracle-check") code = cmd_oracle_check(cfg, o);
    else if (cfg.command == "sweep") code = cmd_sweep(cfg, o, err);
    else {
      err << "error: unknown command '" << cfg.command << "'\n";
      return ExitCode::Usage;
    }
    write(cfg, o, out);
    if (code == ExitCode::Violation) err << cfg.command << ": mathematical check failed\n";
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::Usage;
  } catch (const std::exception& e) {
    err << "violation: " << e.what() << '\n';
    return ExitCode::Violation;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir eigenvalues and characteristic identities for gl(infinity), in exact arithmetic"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string lambda_text, mu_text, format_text = "table";
  std::size_t n_value = 0;

  auto common = [&](CLI::App* sub, bool with_mu) {
    sub->add_option("--lambda", lambda_text, "highest weight as comma-separated parts, e.g. \"2,1\"");
    if (with_mu) sub->add_option("--mu", mu_text, "second highest weight, e.g. \"1\"");
    sub->add_option("--m-max", cfg.m_max, "largest invariant order")->capture_default_str();
    sub->add_option("--n", n_value, "rank of the gl(n) truncation");
    sub->add_option("--format", format_text, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.output, "write the result to this file");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
    sub->add_flag("--validate", cfg.validate, "cross-check against the explicit gl(n) module");
  };

  auto* eig = app.add_subcommand("eigenvalues", "eigenvalues chi(I_m) for m = 1..m-max");
  common(eig, false);
  auto* ident = app.add_subcommand("verify-identity", "certify the characteristic identity");
  common(ident, true);
  ident->add_flag("--reduced", cfg.reduced, "use only the roots of summands that occur");
  auto* inv = app.add_subcommand("verify-invariants", "invariants as operators on V_n(lambda)");
  common(inv, false);
  auto* dec = app.add_subcommand("decompose", "tensor product decomposition");
  common(dec, true);
  auto* oracle = app.add_subcommand("oracle-check", "build and validate V_n(lambda)");
  common(oracle, false);
  oracle->add_option("--fixture", cfg.fixture, "dump basis and generator matrices as JSON");
  oracle->add_flag("--inject-mutation", cfg.inject_mutation, "perturb one generator entry (self-test)");
  auto* sweep = app.add_subcommand("sweep", "run the full verification matrix");
  common(sweep, false);
  sweep->add_flag("--inject-mutation", cfg.inject_mutation, "perturb every module (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    if (sub->count("--n") > 0) cfg.n_override = n_value;
    try {
      if (sub->count("--lambda") > 0) cfg.lambda = weight_option(lambda_text);
      if (sub->get_option_no_throw("--mu") && sub->count("--mu") > 0) cfg.mu = weight_option(mu_text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return static_cast<int>(ExitCode::Usage);
    }
  }
  cfg.format = format_text == "json" ? Format::Json : format_text == "csv" ? Format::Csv : Format::Table;
  return static_cast<int>(execute(cfg, out, err));
}

}  // namespace glinf::cli
