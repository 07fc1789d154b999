// Acceptance gate: eight end-to-end checks, one line each, nonzero exit if
// any fails. Expects the path to the command-line binary as argv[1].
#include "ncspectra/angular.hpp"
#include "ncspectra/output.hpp"
#include "ncspectra/radial.hpp"
#include "ncspectra/spectrum.hpp"
#include "ncspectra/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using namespace ncspectra;

std::string g_cli;

struct Outcome {
  bool pass = false;
  std::string detail;
};

HalfInt h2(int twice) { return HalfInt::from_twice(twice); }

Outcome from_suite(const verify::SuiteResult& suite) {
  Outcome o;
  o.pass = suite.pass();
  double max_err = 0;
  std::string failing;
  for (const auto& c : suite.checks) {
    max_err = std::max(max_err, c.measured_error);
    if (!c.pass && failing.empty())
      failing = c.name;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu checks, max err %.3g",
                suite.checks.size(), max_err);
  o.detail = buf;
  if (!failing.empty())
    o.detail += ", first failure: " + failing;
  return o;
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd =
      "env -u NCSPECTRA_QUAD_NODES \"" + g_cli + "\" " + args + " 2>/dev/null";
  CliRun res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr)
    return res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    res.out.append(buf, got);
  const int rc = pclose(pipe);
  res.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

//------------------------------------------------------------------------------

Outcome criterion_coupling() { return from_suite(verify::run_cg()); }

Outcome criterion_radial() { return from_suite(verify::run_radial()); }

Outcome criterion_algebra() { return from_suite(verify::run_bopp()); }

Outcome criterion_oracle() { return from_suite(verify::run_oracle()); }

Outcome criterion_splitting() {
  Outcome o;
  const double theta = 1e-3;
  const auto rep = spectrum::lamb_split_report(theta);

  if (rep.s_shift_coeff != Rational(0) || rep.s_shift != 0.0) {
    o.detail = "s level acquired a first-order shift";
    return o;
  }
  if (rep.p_sublevels.size() != 2) {
    o.detail = "expected exactly two j=1/2 p sublevels";
    return o;
  }
  if (rep.p_sublevels[0].jz != h2(-1) ||
      rep.p_sublevels[0].shift_coeff != Rational(1, 144) ||
      rep.p_sublevels[1].jz != h2(1) ||
      rep.p_sublevels[1].shift_coeff != Rational(-1, 144)) {
    o.detail = "p sublevel coefficients are not -+1/144";
    return o;
  }
  if (rep.splitting_coeff != Rational(1, 72)) {
    o.detail = "splitting coefficient is not 1/72";
    return o;
  }
  const double expected = theta / 72;
  if (std::abs(rep.splitting - expected) > 1e-15 * expected) {
    o.detail = "splitting magnitude disagrees with theta/72";
    return o;
  }
  if (spectrum::lamb_split_report(-theta).splitting <= 0) {
    o.detail = "splitting must stay positive for negative theta_z";
    return o;
  }

  // the j=3/2 quartet: equally spaced by 1/144 per unit j_z step, zero mean
  Rational sum(0);
  for (int tjz = -3; tjz <= 3; tjz += 2) {
    const Rational c = spectrum::nc_shift_spinful_coeff(2, 1, h2(3), h2(tjz));
    sum += c;
    if (tjz < 3) {
      const Rational next =
          spectrum::nc_shift_spinful_coeff(2, 1, h2(3), h2(tjz + 2));
      if (c - next != Rational(1, 144)) {
        o.detail = "j=3/2 sublevels are not spaced by theta/144";
        return o;
      }
    }
  }
  if (sum != Rational(0)) {
    o.detail = "j=3/2 quartet mean shift is nonzero";
    return o;
  }
  o.pass = true;
  o.detail = "coefficients 0, -+1/144, splitting 1/72, quartet spacing 1/144";
  return o;
}

Outcome criterion_stretched() {
  Outcome o;
  int states = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int l = 1; l <= n - 1; ++l) {
      const HalfInt j = h2(2 * l + 1);
      for (const int sign : {1, -1}) {
        const Rational coupled = spectrum::nc_shift_spinful_coeff(
            n, l, j, sign > 0 ? j : -j);
        const Rational product =
            spectrum::nc_shift_spinless_coeff(n, l, sign * l);
        ++states;
        if (coupled != product) {
          o.detail = "mismatch at n=" + std::to_string(n) +
                     " l=" + std::to_string(l);
          return o;
        }
      }
    }
  }
  o.pass = true;
  o.detail = std::to_string(states) + " stretched states match exactly";
  return o;
}

Outcome criterion_traces() {
  Outcome o;
  int multiplets = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l <= n - 1; ++l) {
      Rational sum_m(0);
      for (int m = -l; m <= l; ++m)
        sum_m += spectrum::nc_shift_spinless_coeff(n, l, m);
      ++multiplets;
      if (sum_m != Rational(0)) {
        o.detail = "product-basis multiplet (n=" + std::to_string(n) +
                   ", l=" + std::to_string(l) + ") has nonzero trace";
        return o;
      }
      for (const int tj : {2 * l - 1, 2 * l + 1}) {
        if (tj < 1)
          continue;
        Rational sum_jz(0);
        for (int tjz = -tj; tjz <= tj; tjz += 2)
          sum_jz += spectrum::nc_shift_spinful_coeff(n, l, h2(tj), h2(tjz));
        ++multiplets;
        if (sum_jz != Rational(0)) {
          o.detail = "coupled multiplet (n=" + std::to_string(n) +
                     ", l=" + std::to_string(l) + ", 2j=" + std::to_string(tj) +
                     ") has nonzero trace";
          return o;
        }
      }
    }
  }
  o.pass = true;
  o.detail = std::to_string(multiplets) + " multiplets sum to zero exactly";
  return o;
}

Outcome criterion_cli() {
  Outcome o;

  const std::string cases[] = {
      "levels --nmax 4 --theta-x 1e-4 --theta-y -2e-4 --theta-z 3e-4 "
      "--mode spinful --format json",
      "levels --nmax 5 --theta-z 1e-3 --mode spinful --format csv",
      "levels --nmax 3 --theta-z 2.5e-3 --format table",
      "lamb --theta-z 1e-3 --format json",
  };
  for (const auto& args : cases) {
    const CliRun a = run_cli(args);
    const CliRun b = run_cli(args);
    if (a.code != 0 || b.code != 0) {
      o.detail = "nonzero exit for: " + args;
      return o;
    }
    if (a.out.empty() || a.out != b.out) {
      o.detail = "reruns are not byte-identical for: " + args;
      return o;
    }
  }

  // lossless json round trip through the record parser
  const std::string json_args =
      "levels --nmax 5 --theta-z 1e-3 --mode spinful --format json";
  const CliRun json = run_cli(json_args);
  std::vector<output::OutputRecord> records;
  try {
    records = output::from_json(json.out);
  } catch (const std::exception& e) {
    o.detail = std::string("json parse failed: ") + e.what();
    return o;
  }
  if (records.empty() || output::to_json(records) != json.out) {
    o.detail = "json round trip is not byte-identical";
    return o;
  }

  // csv carries the same numbers losslessly
  const CliRun csv =
      run_cli("levels --nmax 5 --theta-z 1e-3 --mode spinful --format csv");
  std::vector<std::string> lines;
  for (std::size_t start = 0; start < csv.out.size();) {
    const std::size_t nl = csv.out.find('\n', start);
    lines.push_back(csv.out.substr(start, nl - start));
    start = nl == std::string::npos ? csv.out.size() : nl + 1;
  }
  if (lines.size() != records.size() + 1) {
    o.detail = "csv row count disagrees with json";
    return o;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::vector<std::string> cells;
    const std::string& line = lines[i + 1];
    for (std::size_t start = 0, c = 0; c < 10; ++c) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      start = comma == std::string::npos ? line.size() : comma + 1;
    }
    const auto& r = records[i];
    const bool same =
        std::stoi(cells[0]) == r.n && std::stoi(cells[1]) == r.l &&
        cells[5] == r.term && std::stoll(cells[7]) == r.shift_coeff_num &&
        std::stoll(cells[8]) == r.shift_coeff_den &&
        std::strtod(cells[6].c_str(), nullptr) == r.e0_hartree &&
        std::strtod(cells[9].c_str(), nullptr) == r.delta_e_hartree;
    if (!same) {
      o.detail = "csv row " + std::to_string(i) + " loses information";
      return o;
    }
  }

  o.pass = true;
  o.detail = "byte-stable reruns, lossless json and csv";
  return o;
}

//------------------------------------------------------------------------------

bool run_criterion(int id, const std::string& title, double limit_s,
                   const std::function<Outcome()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (o.pass && limit_s > 0 && seconds > limit_s) {
    o.pass = false;
    o.detail += " [exceeded " + std::to_string(limit_s) + " s budget]";
  }
  std::printf("[%s] criterion %d: %s (%.2f s) -- %s\n",
              o.pass ? "PASS" : "FAIL", id, title.c_str(), seconds,
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli-binary>\n";
    return 2;
  }
  g_cli = argv[1];

  int failures = 0;
  failures += !run_criterion(
      1, "exact spin-orbit coupling table against the ladder oracle", 1.0,
      criterion_coupling);
  failures += !run_criterion(
      2, "closed-form <1/r^3> against numerical quadrature", 5.0,
      criterion_radial);
  failures += !run_criterion(
      3, "deformed-coordinate commutators and square-root identity", 1.0,
      criterion_algebra);
  failures += !run_criterion(
      4, "first-order shifts against the matrix perturbation oracle", 30.0,
      criterion_oracle);
  failures += !run_criterion(
      5, "n=2 splitting report with exact rational coefficients", 0,
      criterion_splitting);
  failures += !run_criterion(
      6, "stretched coupled states reduce to the product formula", 0,
      criterion_stretched);
  failures += !run_criterion(
      7, "every multiplet's first-order trace vanishes", 0, criterion_traces);
  failures += !run_criterion(
      8, "command-line output is deterministic and lossless", 0,
      criterion_cli);

  if (failures == 0) {
    std::printf("acceptance: all 8 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
