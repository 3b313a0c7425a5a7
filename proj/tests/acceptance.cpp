// Acceptance runner. `acceptance c3` runs one criterion, no argument runs all.
// One line per criterion: PASS/FAIL, check counts, wall time against its limit.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "mlw/error.hpp"
#include "mlw/specfun.hpp"
#include "mlw/validation.hpp"

#ifndef MLW_CLI_PATH
#error "MLW_CLI_PATH must point at the mlw executable"
#endif

using namespace mlw;

namespace {

struct Tally {
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void add(std::vector<CheckResult> v) {
    for (auto& c : v) checks.push_back(std::move(c));
  }
  // expectation that is not a numeric comparison
  void expect(const std::string& id, bool ok) { add(make_check(id, "", ok ? 1.0 : 0.0, 1.0, 0.0)); }
};

void specfun_invariants(Tally& t) {
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> z(0.01, 50.0);
  for (int i = 0; i < 1000; ++i) {
    double v = z(rng);
    double psi = digamma(v);
    // |psi(z+1) - 1/z - psi(z)| <= 1e-13 (1 + |psi(z)|)
    t.add(make_check("digamma.recurrence." + std::to_string(i), "psi(z+1) = psi(z) + 1/z", digamma(v + 1) - 1 / v - psi, 0.0,
                     1e-13 * (1 + std::fabs(psi))));
  }
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 500; ++i) {
    double a = u(rng), x = u(rng);
    double s = incomplete_gamma(IncompleteGammaKind::Lower, a, x) + incomplete_gamma(IncompleteGammaKind::Upper, a, x);
    t.add(make_check("incgamma.complement." + std::to_string(i), "lower + upper = Gamma(a)", s, mlw::gamma(a), 1e-12));
  }
  for (int k = 1; k <= 8; ++k)
    for (double x : {0.5, 1.0, 3.0})
      t.add(make_check("incgamma.exp_polynomial.k" + std::to_string(k) + ".x" + std::to_string(x),
                       "Gamma(k, x) = (k-1)! e_{k-1}(x) e^-x", incomplete_gamma(IncompleteGammaKind::Upper, k, x),
                       mlw::gamma(k) * exp_polynomial(k - 1, x) * std::exp(-x), 1e-12));
  for (double x : {0.1, 1.0, 5.0})
    t.add(make_check("ein.e1." + std::to_string(x), "Ein = E1 + gamma + ln x", ein(x) - e1(x) - constants::euler_gamma - std::log(x),
                     0.0, 1e-12));
  for (double b : {0.5, 1.0, 1.5, 2.0})
    for (double x : {0.25, 1.0, 4.0}) {
      const double lo[1] = {b};
      double rhs = mlw::gamma(b) * std::pow(x, (1 - b) / 2) * bessel_i(b - 1, 2 * std::sqrt(x));
      t.add(make_check("0f1.bessel." + std::to_string(b) + "." + std::to_string(x), "0F1(;b;x) via I_{b-1}",
                       hypergeometric_pfq(std::span<const double>{}, lo, x), rhs, 1e-10));
    }
  std::uniform_real_distribution<double> p(0.1, 4.0), xs(-3.0, 3.0);
  std::uniform_int_distribution<int> np(0, 2), nq(1, 3);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> up(np(rng)), lo(nq(rng));
    for (double& a : up) a = p(rng);
    double prod = 1.0;
    for (double& b : lo) {
      b = p(rng);
      prod *= mlw::gamma(b);
    }
    double x = xs(rng);
    if (up.size() == lo.size() + 1) x = std::fmod(x, 0.9);
    t.add(make_check("pfq.regularized." + std::to_string(i), "regularized pFq times prod Gamma(b) = pFq",
                     hypergeometric_pfq(up, lo, x, true) * prod, hypergeometric_pfq(up, lo, x), 1e-12));
  }
}

void pole_limits(Tally& t) {
  double f = 1.0;
  for (int m = 0; m <= 6; ++m) {
    if (m > 0) f *= m;
    t.add(make_check("pole_limit.m" + std::to_string(m), "psi/Gamma at -m = (-1)^(m+1) m!", digamma_over_gamma(-m),
                     (m % 2 == 0) ? -f : f, 1e-10));
  }
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(MLW_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double field(const std::string& out, const std::string& name) {
  std::istringstream in(out);
  std::string key, value;
  while (in >> key && std::getline(in, value))
    if (key == name) return std::strtod(value.c_str(), nullptr);
  return NAN;
}

void cli_black_box(Tally& t) {
  Run e = run_cli("eval --fn E --alpha 1 --beta 1 --x 2");
  t.expect("cli.eval.exp.exit0", e.code == 0);
  t.add(make_check("cli.eval.exp.value", "E_{1,1}(2) = e^2", field(e.out, "value"), 7.389056098930650, 1e-15));

  Run w = run_cli("eval --fn Wi --wrt alpha --alpha 1 --beta 1 --x 1 --method closed");
  t.expect("cli.eval.closed.exit0", w.code == 0);
  t.add(make_check("cli.eval.closed.value", "-gamma - K0(2)", field(w.out, "value"), -0.6911095376510663, 1e-10));
  t.expect("cli.eval.closed.citation", w.out.find("citation") != std::string::npos);
  t.expect("cli.eval.domain.exit2", run_cli("eval --fn Ei --alpha 0 --beta 1 --x 1.5").code == 2);
  t.expect("cli.eval.badflag.exit2", run_cli("eval --fn Q --x 1").code == 2);
  t.expect("cli.eval.missing_x.exit2", run_cli("eval --fn E").code == 2);
  t.expect("cli.help.exit0", run_cli("--help").code == 0);

  Run g = run_cli("grid --fn E --alpha-lo 1 --alpha-hi 2 --alpha-count 2 --beta 1 --x-lo 0.5 --x-hi 1.5 --x-count 2");
  auto rows = parse_csv(g.out);
  t.expect("cli.grid.exit0", g.code == 0);
  t.expect("cli.grid.header", !rows.empty() && g.out.rfind("x,alpha,beta,value,abs_err_est,method\n", 0) == 0);
  t.expect("cli.grid.rows", rows.size() == 5);
  bool order = rows.size() == 5 && rows[1][1] == "1" && rows[2][1] == "1" && rows[3][1] == "2" && rows[1][0] == "0.5" &&
               rows[2][0] == "1.5";
  t.expect("cli.grid.row_major", order);
  if (rows.size() == 5) {
    for (int i = 1; i <= 2; ++i)
      t.add(make_check("cli.grid.exp." + std::to_string(i), "alpha = 1 row equals e^x", std::strtod(rows[i][3].c_str(), nullptr),
                       std::exp(std::strtod(rows[i][0].c_str(), nullptr)), 1e-15));
  }
  bool round_trip = rows.size() > 1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 6) {
      round_trip = false;
      continue;
    }
    for (int c = 0; c < 5; ++c) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", std::strtod(rows[i][c].c_str(), nullptr));
      round_trip = round_trip && rows[i][c] == buf;
    }
  }
  t.expect("cli.grid.round_trip", round_trip);
  t.expect("cli.grid.empty_range.exit2", run_cli("grid --fn E --x-lo 1 --x-hi 1 --x-count 5 --alpha 1").code == 2);
  t.expect("cli.grid.one_point.exit2", run_cli("grid --fn E --x-lo 0 --x-hi 1 --x-count 1 --alpha 1").code == 2);
  t.expect("cli.grid.out_of_domain.exit2", run_cli("grid --fn E --alpha 0 --x-lo 0.5 --x-hi 1.5 --x-count 3").code == 2);

  // decay across the default grid
  Run d = run_cli("grid --fn Ei --wrt alpha --beta 0");
  auto drows = parse_csv(d.out);
  t.expect("cli.grid.default.exit0", d.code == 0);
  t.expect("cli.grid.default.size", drows.size() == 1 + 50 * 100);
  if (drows.size() == 1 + 50 * 100) {
    bool finite = true, decays = true;
    for (std::size_t i = 1; i < drows.size(); ++i) finite = finite && std::isfinite(std::strtod(drows[i][3].c_str(), nullptr));
    for (int j = 0; j < 100; ++j) {
      double first = std::strtod(drows[1 + j][3].c_str(), nullptr);
      double last = std::strtod(drows[1 + 49 * 100 + j][3].c_str(), nullptr);
      decays = decays && std::fabs(last) < std::fabs(first);
    }
    t.expect("cli.grid.default.finite", finite);
    t.expect("cli.grid.default.decay", decays);
  }

  t.expect("cli.verify.sums.exit0", run_cli("verify --suite sums").code == 0);
  t.expect("cli.verify.bogus.exit2", run_cli("verify --suite bogus").code == 2);
  auto path = std::filesystem::temp_directory_path() / ("mlw_acceptance_" + std::to_string(::getpid()) + ".json");
  Run a = run_cli("verify --suite all --report " + path.string());
  bool exists = std::filesystem::exists(path);
  t.expect("cli.verify.all.report_exists", exists);
  if (exists) {
    std::ifstream in(path);
    auto doc = nlohmann::json::parse(in, nullptr, false);
    bool ok = !doc.is_discarded() && doc.contains("checks") && doc.contains("summary");
    if (ok) {
      std::size_t total = doc["checks"].size(), passed = 0;
      for (const auto& c : doc["checks"]) {
        passed += c.value("pass", false) ? 1 : 0;
        ok = ok && c.size() == 8;
        for (const char* f : {"id", "citation", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass"}) ok = ok && c.contains(f);
      }
      ok = ok && doc["summary"]["total"] == total && doc["summary"]["passed"] == passed &&
           doc["summary"]["failed"] == total - passed;
      t.expect("cli.verify.all.exit_matches", a.code == (passed == total ? 0 : 1));
    }
    t.expect("cli.verify.all.report_schema", ok);
    std::filesystem::remove(path);
  }
}

struct Criterion {
  const char* name;
  const char* what;
  double limit_seconds;
  std::function<void(Tally&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"c1", "specfun invariants", 5.0, specfun_invariants},
      {"c2", "eight series vs finite differences", 10.0, [](Tally& t) { t.add(checks::param_finite_difference(20)); }},
      {"c3", "integer-order reduction vs series", 2.0, [](Tally& t) { t.add(checks::integer_order_reduction()); }},
      {"c4", "general reductions vs series", 5.0, [](Tally& t) { t.add(checks::general_reductions()); }},
      {"c5", "closed-form registry vs series", 10.0, [](Tally& t) { t.add(checks::registry()); }},
      {"c6", "integral and differential relations", 10.0,
       [](Tally& t) {
         t.add(checks::integral_relations());
         t.add(checks::x_weighting());
         t.add(checks::interrelation());
         t.add(checks::log_case_quadrature());
       }},
      {"c7", "sum identities", 1.0, [](Tally& t) { t.add(checks::sum_identities()); }},
      {"c8", "large-alpha decay", 2.0, [](Tally& t) { t.add(checks::large_alpha_decay()); }},
      {"c9", "psi/Gamma pole limits", 1.0, pole_limits},
      {"c10", "CLI black box", 2.0, cli_black_box},
  };
  return list;
}

bool run_criterion(const Criterion& c) {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    c.run(t);
  } catch (const std::exception& e) {
    t.add(make_check(std::string(c.name) + ".exception", e.what(), NAN, NAN, 0.0));
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t failed = std::count_if(t.checks.begin(), t.checks.end(), [](const CheckResult& r) { return !r.pass; });
  bool in_time = seconds < c.limit_seconds;
  bool ok = failed == 0 && in_time && !t.checks.empty();
  std::printf("%s %-4s %-40s %zu/%zu checks  %.3f s (limit %.0f s)\n", ok ? "PASS" : "FAIL", c.name, c.what,
              t.checks.size() - failed, t.checks.size(), seconds, c.limit_seconds);
  int shown = 0;
  for (const CheckResult& r : t.checks)
    if (!r.pass && shown++ < 20)
      std::printf("    failed %s: lhs=%.17g rhs=%.17g tol=%.1e %s\n", r.id.c_str(), r.lhs, r.rhs, r.tol, r.citation.c_str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool all_ok = true;
  bool matched = false;
  for (const Criterion& c : criteria()) {
    if (argc > 1 && argv[1] != std::string(c.name)) continue;
    matched = true;
    all_ok = run_criterion(c) && all_ok;
  }
  if (!matched) {
    std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
    return 2;
  }
  return all_ok ? 0 : 1;
}
