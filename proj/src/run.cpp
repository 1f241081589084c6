#include "veelocus/run.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "veelocus/catalog.hpp"
#include "veelocus/json_io.hpp"
#include "veelocus/locus.hpp"
#include "veelocus/scan.hpp"
#include "veelocus/vee.hpp"
#include "veelocus/wdvv.hpp"

namespace veelocus {

namespace {

constexpr const char* kSchemaVersion = "1";

bool looks_like_file(const std::string& target) {
  if (target == "-") return true;
  if (target.find('/') != std::string::npos) return true;
  const std::string suffix = ".json";
  return target.size() > suffix.size() &&
         target.compare(target.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Configuration resolve_target(const std::string& target, const Tolerance& tol) {
  if (looks_like_file(target)) return load_config(target, tol);
  return make_catalog(target, tol);
}

ScanResult dispatch_scan(const std::string& query, std::uint64_t seed, int samples,
                         const Tolerance& tol) {
  std::istringstream stream(query);
  std::string head;
  std::getline(stream, head, ':');
  std::map<std::string, std::string> fields;
  std::string part;
  while (std::getline(stream, part, ':')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw BadParameter("scan: expected key=value, got '" + part + "'");
    fields[part.substr(0, eq)] = part.substr(eq + 1);
  }
  const auto get_int = [&](const std::string& key, int fallback) {
    const auto it = fields.find(key);
    return it == fields.end() ? fallback : std::stoi(it->second);
  };
  if (head == "prop1")
    return solve_three_vector(get_int("m", 1), get_int("l", 1), get_int("k", 1), tol);
  if (head == "theorem1")
    return scan_theorem1(static_cast<std::size_t>(get_int("n", 3)), get_int("max_m", 3),
                         get_int("perturbations", 40), seed, tol);
  if (head == "prop2") {
    std::vector<std::size_t> n_range;
    const auto it = fields.find("n");
    if (it == fields.end()) {
      n_range = {3, 4};
    } else {
      std::istringstream ns(it->second);
      std::string item;
      while (std::getline(ns, item, ',')) n_range.push_back(std::stoul(item));
    }
    return scan_prop2(get_int("max_m", 3), n_range, seed, tol);
  }
  if (head == "prop3") return scan_prop3(get_int("samples", samples), seed, tol);
  throw BadParameter("scan: unknown query '" + head +
                     "' (expected prop1 | theorem1 | prop2 | prop3)");
}

std::string format_cplx(const cplx& v) {
  std::ostringstream out;
  out << std::setprecision(10) << v.real();
  if (std::abs(v.imag()) > 1e-12) out << (v.imag() < 0 ? "-" : "+")
                                      << std::abs(v.imag()) << "i";
  return out.str();
}

std::string scan_result_text(const ScanResult& result) {
  std::ostringstream out;
  out << result.query << "\n";
  for (const ThreeVectorSolution& s : result.solutions) {
    switch (s.kind) {
      case ThreeVectorSolution::Kind::coxeter:
        out << "  solution: coxeter (a2=b2=c2)\n";
        break;
      case ThreeVectorSolution::Kind::discrete:
        out << "  solution: (1, " << format_cplx(s.b2) << ", " << format_cplx(s.c2) << ")\n";
        break;
      case ThreeVectorSolution::Kind::isotropic_conic:
        out << "  solution: family a2+b2+c2=0\n";
        break;
    }
  }
  for (const ScanResult::Prop2Row& r : result.prop2_rows)
    out << "  n=" << r.n << " m=" << r.m << ": vee=" << (r.vee_pass ? "pass" : "fail")
        << " wdvv=" << (r.wdvv_pass ? "pass" : "fail")
        << " (residual " << std::scientific << std::setprecision(2) << r.wdvv_residual
        << ", expected " << (r.expected_pass ? "pass" : "fail") << ")\n";
  if (result.expected_pass + result.expected_fail > 0)
    out << "  pass " << result.observed_pass << "/" << result.expected_pass
        << ", fail " << result.observed_fail << "/" << result.expected_fail << "\n";
  out << "  counterexamples: " << result.counterexample_count
      << (result.ok ? " [OK]" : " [MISMATCH]") << "\n";
  return out.str();
}

// ------------------------------------------------------------------ reproduce

struct ReproduceRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool prop1_matches(const ScanResult& result,
                   const std::vector<ThreeVectorSolution>& expected) {
  if (result.solutions.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const ThreeVectorSolution& s : result.solutions) {
    bool matched = false;
    for (std::size_t i = 0; i < expected.size() && !matched; ++i) {
      if (used[i] || expected[i].kind != s.kind) continue;
      if (s.kind != ThreeVectorSolution::Kind::discrete ||
          (std::abs(s.b2 - expected[i].b2) <= 1e-8 &&
           std::abs(s.c2 - expected[i].c2) <= 1e-8)) {
        used[i] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

ThreeVectorSolution coxeter_solution() {
  ThreeVectorSolution s;
  s.kind = ThreeVectorSolution::Kind::coxeter;
  s.b2 = s.c2 = cplx{1.0, 0.0};
  return s;
}

ThreeVectorSolution discrete_solution(double b2, double c2) {
  ThreeVectorSolution s;
  s.kind = ThreeVectorSolution::Kind::discrete;
  s.b2 = cplx{b2, 0.0};
  s.c2 = cplx{c2, 0.0};
  return s;
}

ThreeVectorSolution conic_solution() {
  ThreeVectorSolution s;
  s.kind = ThreeVectorSolution::Kind::isotropic_conic;
  return s;
}

// G = (1+sum c)diag(c) - c(x)c and its inverse (1+sum c)^{-1}(diag(c)^{-1}+e(x)e)
double an_c_closed_form_error(const std::vector<double>& c, const Tolerance& tol) {
  const Configuration config = vee_An_c(c);
  const VeeContext ctx = build_context(config, tol);
  const std::size_t n = c.size();
  double sum = 0.0;
  for (double v : c) sum += v;
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double g = (i == j ? (1.0 + sum) * c[i] : 0.0) - c[i] * c[j];
      const double gi = ((i == j ? 1.0 / c[i] : 0.0) + 1.0) / (1.0 + sum);
      err = std::max(err, std::abs(ctx.G(i, j) - g));
      err = std::max(err, std::abs(ctx.G_inv(i, j) - gi));
    }
  return err;
}

std::vector<ReproduceRow> run_reproduce(std::uint64_t seed, const Tolerance& tol) {
  std::vector<ReproduceRow> rows;

  {  // three-vector classification
    struct Case {
      int m, l, k;
      std::vector<ThreeVectorSolution> expected;
    };
    const std::vector<Case> cases = {
        {1, 1, 1, {coxeter_solution(), conic_solution()}},
        {2, 1, 1, {discrete_solution(1, 2), discrete_solution(1, -3)}},
        {3, 1, 1, {discrete_solution(1, 3), discrete_solution(1, -4)}},
        {2, 2, 1, {}},
        {2, 2, 2, {coxeter_solution()}},
    };
    bool all = true;
    std::ostringstream detail;
    for (const Case& c : cases) {
      const ScanResult result = solve_three_vector(c.m, c.l, c.k, tol);
      const bool ok = prop1_matches(result, c.expected);
      if (!ok) all = false;
      detail << "(" << c.m << "," << c.l << "," << c.k << "):"
             << result.solutions.size() << (ok ? " ok " : " MISMATCH ");
    }
    rows.push_back({"Proposition 1: three-vector classification", all, detail.str()});
  }

  {  // A-type classification scans
    bool all = true;
    std::size_t perturb_fail = 0, perturb_total = 0;
    for (std::size_t n : {3, 4, 5}) {
      const int perturbations = n == 3 ? 34 : 33;
      const ScanResult r = scan_theorem1(n, 3, perturbations, seed, tol);
      if (!r.ok) all = false;
      perturb_fail += r.observed_fail;
      perturb_total += r.expected_fail;
    }
    std::ostringstream detail;
    detail << "perturbations failed " << perturb_fail << "/" << perturb_total;
    rows.push_back({"Theorem 1: five families pass, perturbations fail", all, detail.str()});
  }

  {  // new-family locus checks, ambient and restricted
    bool all = true;
    for (std::size_t n : {2, 3, 4})
      for (int m : {1, 2, 3}) {
        if (!check_locus(a_n2(n, m), 5, seed, tol).overall) all = false;
        const Configuration restricted = restrict_to_hyperplane(
            a_n2(n, m), an2_containing_hyperplane(n, m), tol);
        if (!check_locus(restricted, 5, seed, tol).overall) all = false;
      }
    rows.push_back({"Theorem 1 family (4): An2 locus (ambient + restricted)", all,
                    "n=2..4, m=1..3"});
  }

  {  // projected systems pass vee/wdvv iff m=1
    const ScanResult r = scan_prop2(3, {3, 4}, seed, tol);
    std::ostringstream detail;
    double min_violation = 1e300, max_true = 0.0;
    for (const auto& row : r.prop2_rows) {
      if (row.expected_pass)
        max_true = std::max(max_true, row.wdvv_residual);
      else
        min_violation = std::min(min_violation, row.wdvv_residual);
    }
    detail << "true residual <= " << std::scientific << std::setprecision(2) << max_true
           << ", violation residual >= " << min_violation;
    rows.push_back({"Proposition 2: projected An2 passes iff m=1", r.ok, detail.str()});
  }

  {  // A3-type discrimination
    const ScanResult r = scan_prop3(50, seed, tol);
    std::ostringstream detail;
    detail << r.observed_pass << "/50 satisfying pass, " << r.observed_fail
           << "/50 violating fail";
    rows.push_back({"Proposition 3: A3-type product condition", r.ok, detail.str()});
  }

  {  // Theorem 2 family
    bool all = true;
    double worst_closed_form = 0.0, worst_wdvv = 0.0;
    for (std::size_t n = 3; n <= 8; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        Rng rng(mix_seed(seed, 100 * n + trial));
        std::vector<double> c(n);
        for (double& v : c) v = 0.2 + 2.8 * rng.uniform();
        if (!check_vee(vee_An_c(c), tol).overall) all = false;
        worst_closed_form = std::max(worst_closed_form, an_c_closed_form_error(c, tol));
        if (trial < 3) {
          const WdvvReport w = check_wdvv(vee_An_c(c), 5, seed, tol);
          if (!w.overall) all = false;
          worst_wdvv = std::max(worst_wdvv, w.max_residual);
        }
      }
    }
    if (worst_closed_form > 1e-10) all = false;
    std::ostringstream detail;
    detail << "closed-form error " << std::scientific << std::setprecision(2)
           << worst_closed_form << ", wdvv residual " << worst_wdvv;
    rows.push_back({"Theorem 2: An(c) vee-system, closed forms, WDVV", all, detail.str()});
  }

  {  // B-type family
    bool all = true;
    double worst_wdvv = 0.0;
    for (std::size_t n = 3; n <= 5; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        Rng rng(mix_seed(seed, 4242 + 100 * n + trial));
        std::vector<double> c(n);
        for (double& v : c) v = 0.2 + 2.8 * rng.uniform();
        const double c0 = -0.15 + 2.0 * rng.uniform();
        if (!check_vee(vee_Bn_c(c0, c), tol).overall) all = false;
        if (trial < 3) {
          const WdvvReport w = check_wdvv(vee_Bn_c(c0, c), 5, seed, tol);
          if (!w.overall) all = false;
          worst_wdvv = std::max(worst_wdvv, w.max_residual);
        }
      }
    }
    std::ostringstream detail;
    detail << "wdvv residual " << std::scientific << std::setprecision(2) << worst_wdvv;
    rows.push_back({"Bn(c) family: vee-system and WDVV", all, detail.str()});
  }

  return rows;
}

}  // namespace

RunResult run(const RunSpec& spec) {
  RunResult result;
  Tolerance tol;
  if (spec.tol_override.has_value()) {
    if (*spec.tol_override <= 0.0) {
      result.exit_code = 2;
      result.text = "error: tolerance must be positive\n";
      result.report = {{"error", "tolerance must be positive"}};
      return result;
    }
    tol.rel_eps = *spec.tol_override;
  }

  nlohmann::json report{{"schema_version", kSchemaVersion},
                        {"command",
                         spec.command == Command::check_locus   ? "check-locus"
                         : spec.command == Command::check_vee   ? "check-vee"
                         : spec.command == Command::check_wdvv  ? "check-wdvv"
                         : spec.command == Command::scan        ? "scan"
                         : spec.command == Command::catalog_list ? "catalog-list"
                                                                 : "reproduce"},
                        {"target", spec.target},
                        {"seed", spec.seed},
                        {"samples", spec.samples},
                        {"tolerance", tol.rel_eps}};
  const auto start = std::chrono::steady_clock::now();

  try {
    bool verdict = true;
    std::ostringstream text;
    switch (spec.command) {
      case Command::check_locus: {
        const Configuration config = resolve_target(spec.target, tol);
        const LocusReport r = check_locus(config, spec.samples, spec.seed, tol);
        verdict = r.overall;
        report["verdict"] = verdict;
        report["details"] = locus_report_to_json(r);
        text << config.label << ": locus conditions "
             << (verdict ? "SATISFIED" : "VIOLATED") << " (" << r.plane_count
             << " planes, " << r.per_condition.size() << " conditions, "
             << r.oracle.size() << " oracle records)\n";
        break;
      }
      case Command::check_vee: {
        const Configuration config = resolve_target(spec.target, tol);
        const VeeReport r = check_vee(config, tol);
        verdict = r.overall;
        report["verdict"] = verdict;
        report["details"] = vee_report_to_json(r);
        text << config.label << ": vee conditions "
             << (verdict ? "SATISFIED" : "VIOLATED") << " (" << r.per_plane.size()
             << " planes, effective dimension " << r.effective_dim << ")\n";
        break;
      }
      case Command::check_wdvv: {
        const Configuration config = resolve_target(spec.target, tol);
        const WdvvReport r = check_wdvv(config, spec.samples, spec.seed, tol);
        verdict = r.overall;
        report["verdict"] = verdict;
        report["details"] = wdvv_report_to_json(r);
        text << config.label << ": WDVV equations "
             << (verdict ? "SATISFIED" : "VIOLATED") << " (max residual "
             << std::scientific << std::setprecision(3) << r.max_residual << " over "
             << r.checks << " checks at " << r.points << " points)\n";
        break;
      }
      case Command::scan: {
        const ScanResult r = dispatch_scan(spec.target, spec.seed, spec.samples, tol);
        verdict = r.ok;
        report["verdict"] = verdict;
        report["details"] = scan_result_to_json(r);
        text << scan_result_text(r);
        break;
      }
      case Command::catalog_list: {
        nlohmann::json patterns = nlohmann::json::array();
        for (const CatalogPattern& p : catalog_patterns()) {
          patterns.push_back({{"pattern", p.pattern}, {"description", p.description}});
          text << "  " << std::left << std::setw(34) << p.pattern << " " << p.description
               << "\n";
        }
        report["verdict"] = true;
        report["details"] = {{"patterns", std::move(patterns)}};
        break;
      }
      case Command::reproduce: {
        const std::vector<ReproduceRow> rows = run_reproduce(spec.seed, tol);
        nlohmann::json jrows = nlohmann::json::array();
        for (const ReproduceRow& row : rows) {
          if (!row.pass) verdict = false;
          jrows.push_back({{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
          text << (row.pass ? "PASS  " : "FAIL  ") << row.name << "  [" << row.detail
               << "]\n";
        }
        text << (verdict ? "all results reproduced\n" : "REPRODUCTION FAILURES\n");
        report["verdict"] = verdict;
        report["details"] = {{"rows", std::move(jrows)}};
        break;
      }
    }
    // reproduce output stays byte-stable for a fixed seed: no timing there
    if (spec.command != Command::reproduce) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    result.exit_code = verdict ? 0 : 1;
    result.text = text.str();
  } catch (const Error& e) {
    result.exit_code = 2;
    result.text = std::string("error: ") + e.what() + "\n";
    report["error"] = e.what();
  }
  result.report = std::move(report);
  return result;
}

}  // namespace veelocus
