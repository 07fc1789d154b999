#include "ncspectra/angular.hpp"
#include "ncspectra/output.hpp"
#include "ncspectra/radial.hpp"
#include "ncspectra/spectrum.hpp"
#include "ncspectra/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace ncspectra;

int default_nodes() {
  const char* env = std::getenv("NCSPECTRA_QUAD_NODES");
  if (env == nullptr || *env == '\0')
    return 200;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1 || v > 100000)
    throw std::domain_error(
        "NCSPECTRA_QUAD_NODES must be a positive node count, got '" +
        std::string(env) + "'");
  return static_cast<int>(v);
}

std::string fmt_g(double v, int prec = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

int run_levels(int n_max, const spectrum::ThetaVector& theta,
               const std::string& mode, double mu, const std::string& format) {
  const spectrum::Mode md =
      mode == "spinful" ? spectrum::Mode::spinful : spectrum::Mode::spinless;
  const auto levels = spectrum::level_table(n_max, theta, md, mu);
  std::vector<output::OutputRecord> records;
  records.reserve(levels.size());
  for (const auto& lvl : levels)
    records.push_back(output::to_record(lvl));
  if (format == "json")
    std::cout << output::to_json(records);
  else if (format == "csv")
    std::cout << output::to_csv(records);
  else
    std::cout << output::to_table(records);
  return 0;
}

int run_cg(int l, int two_j, int two_jz, int two_sz) {
  const ExactCoeff c =
      angular::cg_half(l, HalfInt::from_twice(two_j), HalfInt::from_twice(two_jz),
                       HalfInt::from_twice(two_sz));
  std::cout << c.str() << " = " << fmt_g(c.value()) << "\n";
  return 0;
}

int run_verify(const std::string& which, int nodes) {
  std::vector<verify::SuiteResult> results;
  if (which == "all")
    results = verify::run_all(nodes);
  else if (which == "bopp")
    results = {verify::run_bopp()};
  else if (which == "cg")
    results = {verify::run_cg()};
  else if (which == "radial")
    results = {verify::run_radial(nodes)};
  else
    results = {verify::run_oracle(nodes)};

  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << r.report() << "\n";
    all_pass = all_pass && r.pass();
  }
  std::cout << (all_pass ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT")
            << "\n";
  return all_pass ? 0 : 1;
}

int run_lamb(double theta_z, const std::string& format) {
  const spectrum::LambReport rep = spectrum::lamb_split_report(theta_z);
  if (format == "json")
    std::cout << output::lamb_to_json(rep);
  else if (format == "csv")
    std::cout << output::lamb_to_csv(rep);
  else
    std::cout << output::lamb_to_table(rep);
  return 0;
}

int run_expect(int n, int l, int power, int nodes) {
  UncoupledState{n, l, 0}.validate();
  radial::QuadratureSpec spec;
  spec.node_count = nodes;

  std::cout << "<r^" << power << "> for n=" << n << " l=" << l << "\n";

  std::cout << "closed : ";
  if (power != -3) {
    std::cout << "n/a (closed form implemented for power -3 only)\n";
  } else if (l == 0) {
    std::cout << "excluded (l=0)\n";
  } else {
    const Rational closed = radial::expect_inv_r3_closed(n, l);
    std::cout << closed.str() << " = " << fmt_g(closed.to_double()) << "\n";
  }

  std::cout << "numeric: ";
  if (2 * l + 2 + power < 1) {
    std::cout << "excluded (integral diverges at the origin)\n";
  } else {
    const radial::RadialExpectation ex =
        radial::radial_expectation(n, l, power, spec);
    std::cout << fmt_g(ex.value) << " (" << nodes << " nodes)\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"hydrogen energy levels with first-order corrections from "
               "noncommuting coordinates"};
  app.require_subcommand(1);

  int nodes = 0; // 0 = take NCSPECTRA_QUAD_NODES or the built-in default

  // levels
  auto* levels = app.add_subcommand(
      "levels", "energy level table with first-order shifts");
  int n_max = 1;
  spectrum::ThetaVector theta;
  std::string mode = "spinless";
  std::string format = "table";
  double mu = 1.0;
  levels->add_option("--nmax", n_max, "largest principal quantum number")
      ->required();
  levels->add_option("--theta-x", theta.x, "theta x component, Bohr^2");
  levels->add_option("--theta-y", theta.y, "theta y component, Bohr^2");
  levels->add_option("--theta-z", theta.z, "theta z component, Bohr^2");
  levels->add_option("--mode", mode, "spinless or spinful basis")
      ->check(CLI::IsMember({"spinless", "spinful"}));
  levels->add_option("--mu", mu, "reduced mass in electron masses");
  levels->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // cg
  auto* cg = app.add_subcommand(
      "cg", "exact spin-orbit coupling coefficient <l,lz;1/2,sz|j,jz>");
  int cg_l = 0, cg_tj = 1, cg_tjz = 1, cg_tsz = 1;
  cg->add_option("--l", cg_l, "orbital angular momentum")->required();
  cg->add_option("--two-j", cg_tj, "doubled total j")->required();
  cg->add_option("--two-jz", cg_tjz, "doubled projection j_z")->required();
  cg->add_option("--two-sz", cg_tsz, "doubled spin projection s_z (+-1)")
      ->required();

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the self-checking suites");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"all", "bopp", "cg", "radial", "oracle"}));
  verify_cmd->add_option("--nodes", nodes, "quadrature node count");

  // lamb
  auto* lamb = app.add_subcommand(
      "lamb", "n=2 splitting report for the j=1/2 level pair");
  double lamb_theta = 0.0;
  std::string lamb_format = "table";
  lamb->add_option("--theta-z", lamb_theta, "theta_z, Bohr^2");
  lamb->add_option("--format", lamb_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  // expect
  auto* expect = app.add_subcommand(
      "expect", "radial expectation value <r^power>, closed and numeric");
  int ex_n = 1, ex_l = 0, ex_power = 0;
  expect->add_option("--n", ex_n, "principal quantum number")->required();
  expect->add_option("--l", ex_l, "orbital angular momentum")->required();
  expect->add_option("--power", ex_power, "power of r")->required();
  expect->add_option("--nodes", nodes, "quadrature node count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (nodes == 0)
      nodes = default_nodes();
    if (levels->parsed())
      return run_levels(n_max, theta, mode, mu, format);
    if (cg->parsed())
      return run_cg(cg_l, cg_tj, cg_tjz, cg_tsz);
    if (verify_cmd->parsed())
      return run_verify(suite, nodes);
    if (lamb->parsed())
      return run_lamb(lamb_theta, lamb_format);
    if (expect->parsed())
      return run_expect(ex_n, ex_l, ex_power, nodes);
  } catch (const std::overflow_error& e) {
    std::cerr << "numeric overflow: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
