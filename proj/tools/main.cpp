// lenscert: certified rank verification for lens-space torsion matrices.
#include "lenscert/certify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace lenscert;

namespace {

int write_output(const std::string& out, const std::string& payload) {
  if (out.empty() || out == "-") {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "error: cannot open " << out << " for writing\n";
    return 1;
  }
  f << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified rank verification for lens-space torsion matrices"};
  app.require_subcommand(1);

  long n = 0, k = 0, prec = default_precision_bits();
  long max_n = 12, max_k = 2, jobs = 0;
  std::string out, format = "json";

  auto* verify = app.add_subcommand("verify", "verify one (n, k) pair and emit a certificate");
  verify->add_option("--n", n, "order of the cyclic group")->required()->check(CLI::PositiveNumber);
  verify->add_option("--k", k, "weight parameter k >= 1")->required()->check(CLI::PositiveNumber);
  verify->add_option("--prec", prec, "target precision in bits");
  verify->add_option("--out", out, "output file (default stdout)");
  verify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* suite = app.add_subcommand("suite", "run the verification grid plus property suites");
  suite->add_option("--max-n", max_n, "largest n");
  suite->add_option("--max-k", max_k, "largest k");
  suite->add_option("--prec", prec, "target precision in bits");
  suite->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  auto* table = app.add_subcommand("table", "emit the matrix T for one (n, k) pair");
  table->add_option("--n", n, "order of the cyclic group")->required()->check(CLI::PositiveNumber);
  table->add_option("--k", k, "weight parameter k >= 1")->required()->check(CLI::PositiveNumber);
  table->add_option("--prec", prec, "target precision in bits");
  table->add_option("--out", out, "output file (default stdout)");
  table->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* chars = app.add_subcommand("chars", "emit the character table mod n");
  chars->add_option("--n", n, "modulus")->required()->check(CLI::PositiveNumber);
  chars->add_option("--out", out, "output file (default stdout)");

  auto* self = app.add_subcommand("selfcheck", "run the exact structural property suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      Certificate cert = run_verify(n, k, prec);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cerr << "verify n=" << n << " k=" << k << " took " << secs << "s\n";
      std::string payload = format == "csv"
                                ? "n,k,prec,status,rank_re,rank_im,expected,det_lower\n" +
                                      certificate_csv_row(cert) + "\n"
                                : certificate_to_json(cert).dump(2) + "\n";
      int werr = write_output(out, payload);
      if (werr) return werr;
      if (cert.undecided) return 2;
      return cert.pass ? 0 : 1;
    }
    if (suite->parsed()) {
      SuiteResult res = run_suite(max_n, max_k, prec, jobs, std::cout);
      return res.exit_code();
    }
    if (table->parsed()) {
      std::string payload = format == "csv" ? torsion_table_csv(n, k, prec)
                                            : torsion_table_json(n, k, prec).dump(2) + "\n";
      return write_output(out, payload);
    }
    if (chars->parsed()) {
      return write_output(out, character_table_json(n).dump(2) + "\n");
    }
    if (self->parsed()) {
      return selfcheck(std::cout) ? 0 : 1;
    }
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
