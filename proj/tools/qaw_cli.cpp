// Command-line front end: identity sweeps, recurrence tables, structure-relation
// fits, Pearson checks and quartic-based parameter recovery. All reports go to
// stdout (JSON by default, CSV for tabular subcommands); diagnostics to stderr.
//
// Exit codes: 0 = PASS/EXACT, 1 = FAIL/NO_SOLUTION, 2 = input error.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qaw/familyspec.hpp"
#include "qaw/prng.hpp"
#include "qaw/qops.hpp"
#include "qaw/quartic.hpp"
#include "qaw/structrel.hpp"

using nlohmann::json;
using namespace qaw;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

json poly_json(const XPoly& p) { return xpoly_to_json(p); }

std::string rstr(const Rational& r) { return to_string(r); }

// Materializes the TTRR of any family type up to horizon N.
RecurrencePair family_recurrence(const FamilySpec& spec, int N) {
  std::vector<Rational> B, C;
  if (const auto* rec = std::get_if<RecurrencePair>(&spec.family)) {
    if (rec->horizon() < N || rec->c_count() < N)
      throw SpecError("recurrence arrays shorter than the requested horizon");
    return *rec;
  }
  if (const auto* aw = std::get_if<AWParams>(&spec.family)) {
    for (int n = 0; n <= N; ++n) {
      auto [Bn, Cn1] = aw_recurrence(*aw, n);
      B.push_back(Bn);
      if (n < N) C.push_back(Cn1);
    }
    return RecurrencePair(std::move(B), std::move(C));
  }
  if (const auto* cor = std::get_if<CorollaryInput>(&spec.family)) {
    return corollary_family(cor->B0, cor->B1, spec.qp, cor->k, N, cor->C1).rec;
  }
  const auto& pp = std::get<PearsonPair>(spec.family);
  for (int n = 0; n <= N; ++n) {
    auto [Bn, Cn1] = pearson_recurrence(pp, spec.qp, n);
    B.push_back(Bn);
    if (n < N) C.push_back(Cn1);
  }
  return RecurrencePair(std::move(B), std::move(C));
}

// The Pearson pair naturally attached to a family (corollary: derived pair;
// askey-wilson: Ismail pair with monic psi; pearson: as given).
PearsonPair family_pearson(const FamilySpec& spec, int N) {
  if (const auto* pp = std::get_if<PearsonPair>(&spec.family)) return *pp;
  if (const auto* aw = std::get_if<AWParams>(&spec.family)) {
    IsmailCoeffs ic = ismail_coeffs(*aw);
    return PearsonPair(ic.phi, ic.psi).monic_psi();
  }
  if (const auto* cor = std::get_if<CorollaryInput>(&spec.family))
    return corollary_family(cor->B0, cor->B1, spec.qp, cor->k, N, cor->C1).pearson;
  throw SpecError("subcommand needs a family with a Pearson pair "
                  "(types pearson, corollary or askey-wilson)");
}

const CorollaryInput& require_corollary(const FamilySpec& spec) {
  const auto* cor = std::get_if<CorollaryInput>(&spec.family);
  if (!cor) throw SpecError("subcommand requires a family of type \"corollary\"");
  return *cor;
}

void emit(const json& report, const std::string& format,
          const std::vector<std::string>& csv_columns = {}) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  if (csv_columns.empty()) throw SpecError("csv output is only available for tabular commands");
  std::string header;
  for (const auto& c : csv_columns) header += (header.empty() ? "" : ",") + c;
  std::cout << header << "\n";
  for (const auto& row : report.at("rows")) {
    std::string line;
    for (const auto& c : csv_columns) {
      const json& v = row.at(c);
      line += (line.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::cout << line << "\n";
  }
}

// ---------------------------------------------------------------------------
// identities: seeded sweep of the operator axioms and degree laws.

json run_rule(const std::string& name, int cases,
              const std::function<bool(SplitMix64&)>& one, SplitMix64& rng, bool& all_pass) {
  int failed_case = -1;
  for (int i = 0; i < cases && failed_case < 0; ++i)
    if (!one(rng)) failed_case = i;
  if (failed_case >= 0) all_pass = false;
  json r = {{"rule", name}, {"cases", cases}, {"pass", failed_case < 0}};
  if (failed_case >= 0) r["first_failing_case"] = failed_case;
  return r;
}

int cmd_identities(const QParam& qp, int horizon, std::uint64_t seed,
                   const std::string& format) {
  Timer timer;
  SplitMix64 rng(seed);
  const int max_deg = std::min(horizon, 8);
  bool all_pass = true;
  json rules = json::array();

  rules.push_back(run_rule(
      "product-rule-dq", 100,
      [&](SplitMix64& g) {
        const XPoly f = g.xpoly(max_deg), h = g.xpoly(max_deg);
        return dq(f * h, qp) == dq(f, qp) * sq(h, qp) + sq(f, qp) * dq(h, qp);
      },
      rng, all_pass));
  rules.push_back(run_rule(
      "product-rule-sq", 100,
      [&](SplitMix64& g) {
        const XPoly f = g.xpoly(max_deg), h = g.xpoly(max_deg);
        return sq(f * h, qp) == dq(f, qp) * dq(h, qp) * aux_u2(qp) + sq(f, qp) * sq(h, qp);
      },
      rng, all_pass));
  rules.push_back(run_rule(
      "expansion-f-dq-g", 100,
      [&](SplitMix64& g) {
        const XPoly f = g.xpoly(max_deg), h = g.xpoly(max_deg);
        const Rational inv_alpha = Rational(1) / qp.alpha;
        const XPoly inner = (sq(f, qp) - aux_u1(qp).scale(inv_alpha) * dq(f, qp)) * h;
        return f * dq(h, qp) == dq(inner, qp) - sq(h * dq(f, qp), qp).scale(inv_alpha);
      },
      rng, all_pass));
  {
    bool ok = true;
    for (int n = 0; n <= 12 && ok; ++n) {
      const XPoly xn = XPoly::monomial(n);
      const XPoly d = dq(xn, qp), s = sq(xn, qp);
      ok = d.coeff(n - 1) == gamma_n(qp, n) && s.coeff(n) == alpha_n(qp, n) &&
           is_zero(d.coeff(n - 2)) && is_zero(s.coeff(n - 1));
    }
    if (!ok) all_pass = false;
    rules.push_back({{"rule", "degree-laws"}, {"cases", 13}, {"pass", ok}});
  }

  json report = {{"command", "identities"},
                 {"t", rstr(qp.t)},
                 {"n", horizon},
                 {"seed", seed},
                 {"results", rules},
                 {"verdict", all_pass ? "PASS" : "FAIL"},
                 {"wall_ms", timer.ms()}};
  emit(report, format);
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Tabular commands.

int cmd_table(const char* command, const FamilySpec& spec, int N, const std::string& format,
              bool pearson_route) {
  Timer timer;
  json rows = json::array();
  if (pearson_route) {
    const PearsonPair pp = family_pearson(spec, N);
    for (int n = 0; n <= N; ++n) {
      auto [Bn, Cn1] = pearson_recurrence(pp, spec.qp, n);
      rows.push_back({{"n", n}, {"B_n", rstr(Bn)}, {"C_{n+1}", rstr(Cn1)}});
    }
  } else {
    const auto* aw = std::get_if<AWParams>(&spec.family);
    if (!aw) throw SpecError("aw-table requires a family of type \"askey-wilson\"");
    for (int n = 0; n <= N; ++n) {
      auto [Bn, Cn1] = aw_recurrence(*aw, n);
      rows.push_back({{"n", n}, {"B_n", rstr(Bn)}, {"C_{n+1}", rstr(Cn1)}});
    }
  }
  json report = {{"command", command}, {"t", rstr(spec.qp.t)}, {"n", N},
                 {"rows", rows},       {"verdict", "PASS"},    {"wall_ms", timer.ms()}};
  emit(report, format, {"n", "B_n", "C_{n+1}"});
  return 0;
}

// ---------------------------------------------------------------------------
// fit / conditions / pearson-check / second-order / recover.

int cmd_fit(const FamilySpec& spec, int N, const std::string& format) {
  Timer timer;
  const RecurrencePair rec = family_recurrence(spec, N + 2);
  const MonicOPS ops = generate_ops(rec, N + 1);
  const StructureFit fit = fit_structure(ops, spec.qp, N);
  const bool exact = fit.verdict == StructureFit::Verdict::EXACT;
  json report = {{"command", "fit"},
                 {"t", rstr(spec.qp.t)},
                 {"n", N},
                 {"verdict", exact ? "EXACT" : "NO_SOLUTION"},
                 {"wall_ms", timer.ms()}};
  if (exact) {
    report["abc"] = {rstr(fit.a), rstr(fit.b), rstr(fit.c)};
    json an = json::array(), bn = json::array(), cn = json::array();
    for (const auto& v : fit.an) an.push_back(rstr(v));
    for (const auto& v : fit.bn) bn.push_back(rstr(v));
    for (const auto& v : fit.cn) cn.push_back(rstr(v));
    report["a_n"] = an;
    report["b_n"] = bn;
    report["c_n"] = cn;
    report["c_n_nonzero"] = fit.cn_nonzero;
  } else {
    report["witness_n"] = fit.witness_n;
  }
  emit(report, format);
  return exact ? 0 : 1;
}

int cmd_conditions(const FamilySpec& spec, const std::string& format) {
  Timer timer;
  const auto& cor = require_corollary(spec);
  const CorollaryFamily fam = corollary_family(cor.B0, cor.B1, spec.qp, cor.k, 6, cor.C1);
  const ConditionResiduals res =
      check_conditions(Rational(0), Rational(1), -fam.r, fam.rec, spec.qp, fam.bn[2], fam.cn[2],
                       fam.cn[3]);
  const bool pass = is_zero(res.res32) && is_zero(res.res33);
  json report = {{"command", "conditions"},
                 {"t", rstr(spec.qp.t)},
                 {"case", to_string(fam.kase)},
                 {"r", rstr(fam.r)},
                 {"res32", rstr(res.res32)},
                 {"res33", rstr(res.res33)},
                 {"verdict", pass ? "PASS" : "FAIL"},
                 {"wall_ms", timer.ms()}};
  emit(report, format);
  return pass ? 0 : 1;
}

int cmd_pearson_check(const FamilySpec& spec, int N, const std::string& format) {
  Timer timer;
  const PearsonPair pp = family_pearson(spec, N + 4);
  const RecurrencePair rec = family_recurrence(spec, N + 4);
  const MomentFunctional u = moments(rec, N + 2);
  const PearsonReport pr = pearson_check(pp, u, spec.qp, N);
  json residuals = json::array();
  int first_nonzero = -1;
  for (size_t i = 0; i < pr.residuals.size(); ++i) {
    residuals.push_back(rstr(pr.residuals[i]));
    if (first_nonzero < 0 && !is_zero(pr.residuals[i])) first_nonzero = static_cast<int>(i);
  }
  json report = {{"command", "pearson-check"},
                 {"t", rstr(spec.qp.t)},
                 {"n", N},
                 {"phi", poly_json(pp.phi)},
                 {"psi", poly_json(pp.psi)},
                 {"residuals", residuals},
                 {"verdict", pr.pass ? "PASS" : "FAIL"},
                 {"wall_ms", timer.ms()}};
  if (first_nonzero >= 0) report["first_nonzero_n"] = first_nonzero;
  emit(report, format);
  return pr.pass ? 0 : 1;
}

int cmd_second_order(const FamilySpec& spec, int N, const std::string& format) {
  Timer timer;
  const auto& cor = require_corollary(spec);
  const CorollaryFamily fam = corollary_family(cor.B0, cor.B1, spec.qp, cor.k, N + 2, cor.C1);
  const MonicOPS ops = generate_ops(fam.rec, N);
  const DerivedPearson dp = derived_phi_psi(Rational(0), fam.rec, spec.qp, fam.cn[3]);
  bool pass = true;
  json lambdas = json::array();
  int first_failing = -1;
  for (int n = 0; n <= N; ++n) {
    const Rational ln = dp.lambda(n);
    lambdas.push_back(rstr(ln));
    if (second_order_apply(dp.phi, dp.psi, ops.P(n), spec.qp) != ops.P(n).scale(ln)) {
      pass = false;
      if (first_failing < 0) first_failing = n;
    }
  }
  json report = {{"command", "second-order"},
                 {"t", rstr(spec.qp.t)},
                 {"n", N},
                 {"phi", poly_json(dp.phi)},
                 {"psi", poly_json(dp.psi)},
                 {"lambda", lambdas},
                 {"verdict", pass ? "PASS" : "FAIL"},
                 {"wall_ms", timer.ms()}};
  if (first_failing >= 0) report["first_failing_n"] = first_failing;
  emit(report, format);
  return pass ? 0 : 1;
}

int cmd_recover(const FamilySpec& spec, unsigned precision, const std::string& format) {
  Timer timer;
  const auto& cor = require_corollary(spec);
  const CorollaryFamily fam = corollary_family(cor.B0, cor.B1, spec.qp, cor.k, 6, cor.C1);
  const RecoveryReport rep = recover_params(fam, precision);
  json roots = json::array();
  for (const auto& r : rep.quartic.roots) roots.push_back({{"re", r.re}, {"im", r.im}});
  json recon = json::array();
  for (const auto& [name, resid] : rep.reconstruction)
    recon.push_back({{"identity", name}, {"residual", resid}});
  json report = {{"command", "recover"},
                 {"t", rstr(spec.qp.t)},
                 {"case", to_string(rep.kase)},
                 {"precision_bits", precision},
                 {"R", rstr(rep.triple.R)},
                 {"T", rstr(rep.triple.T)},
                 {"S", rstr(rep.triple.S)},
                 {"roots", roots},
                 {"vieta_residuals", rep.quartic.vieta_residuals},
                 {"vieta_ok", rep.quartic.vieta_ok},
                 {"reconstruction", recon},
                 {"verdict", rep.pass ? "PASS" : "FAIL"},
                 {"wall_ms", timer.ms()}};
  emit(report, format);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial calculus with the Askey-Wilson operators"};
  app.require_subcommand(1);

  std::string family_path;
  std::string t_str = "1/2";
  std::string format = "json";
  int horizon = 8;
  std::uint64_t seed = 7;
  unsigned precision = 256;

  auto add_common = [&](CLI::App* sub, bool with_family) {
    sub->add_option("--t", t_str, "lattice parameter t = q^{1/2} as num/den");
    sub->add_option("--n", horizon, "horizon");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    if (with_family)
      sub->add_option("--family", family_path, "family spec JSON file")->required();
  };

  CLI::App* identities = app.add_subcommand("identities", "operator axiom sweep");
  add_common(identities, false);
  identities->add_option("--seed", seed, "PRNG seed");

  CLI::App* aw_table = app.add_subcommand("aw-table", "Askey-Wilson recurrence table");
  add_common(aw_table, true);
  CLI::App* pearson_table = app.add_subcommand("pearson-table", "Pearson recurrence table");
  add_common(pearson_table, true);
  CLI::App* fit = app.add_subcommand("fit", "fit the structure relation");
  add_common(fit, true);
  CLI::App* conditions = app.add_subcommand("conditions", "admissibility condition residuals");
  add_common(conditions, true);
  CLI::App* pearson_chk = app.add_subcommand("pearson-check", "Pearson equation residuals");
  add_common(pearson_chk, true);
  CLI::App* second_order = app.add_subcommand("second-order", "second-order equation check");
  add_common(second_order, true);
  CLI::App* recover = app.add_subcommand("recover", "quartic parameter recovery");
  add_common(recover, true);
  recover->add_option("--precision", precision, "working precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (identities->parsed()) {
      if (format == "csv") throw SpecError("csv output is only available for tabular commands");
      return cmd_identities(QParam(parse_rational(t_str)), horizon, seed, format);
    }
    FamilySpec spec = load_family_spec(family_path);
    if (aw_table->parsed()) return cmd_table("aw-table", spec, horizon, format, false);
    if (pearson_table->parsed()) return cmd_table("pearson-table", spec, horizon, format, true);
    if (format == "csv") throw SpecError("csv output is only available for tabular commands");
    if (fit->parsed()) return cmd_fit(spec, horizon, format);
    if (conditions->parsed()) return cmd_conditions(spec, format);
    if (pearson_chk->parsed()) return cmd_pearson_check(spec, horizon, format);
    if (second_order->parsed()) return cmd_second_order(spec, horizon, format);
    if (recover->parsed()) return cmd_recover(spec, precision, format);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
