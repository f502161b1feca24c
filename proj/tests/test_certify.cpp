#include "lenscert/certify.hpp"

#include <doctest.h>

#include <sstream>

using namespace lenscert;

TEST_CASE("rank bookkeeping l_{k,n}") {
  CHECK(l_kn(1, 2) == 1);
  CHECK(l_kn(1, 1) == 0);
  CHECK(l_kn(3, 2) == 2);
  CHECK(l_kn(4, 1) == 1);
  CHECK(l_kn(24, 2) == 13);
  CHECK_THROWS(l_kn(0, 1));
}

TEST_CASE("representation counts (r, c)") {
  RepCounts r5 = rep_counts(5);
  CHECK(r5.r == 3);
  CHECK(r5.c == 2);
  RepCounts r6 = rep_counts(6);
  CHECK(r6.r == 4);
  CHECK(r6.c == 2);
  RepCounts r1 = rep_counts(1);
  CHECK(r1.r == 1);
  CHECK(r1.c == 0);
}

TEST_CASE("K-theory ranks in low degrees") {
  CHECK(k_theory_rank(3, 5) == 2);
  CHECK(k_theory_rank(3, 7) == 1);
  CHECK(k_theory_rank(7, 4) == 0);
  CHECK_THROWS(k_theory_rank(3, 1));
}

TEST_CASE("bookkeeping consistency across the grid") {
  CHECK(consistency_check(3, 2));
  CHECK(consistency_check(4, 1));
  CHECK(consistency_check(1, 1));
  for (long n = 1; n <= 100; ++n)
    for (long k = 1; k <= 10; ++k) CHECK(consistency_check(n, k));
}

TEST_CASE("run_verify produces passing certificates on known cases") {
  Certificate c22 = run_verify(2, 2, 128);
  CHECK(c22.pass);
  CHECK(c22.ranks.re.claimed_rank == 2);

  Certificate c31 = run_verify(3, 1, 128);
  CHECK(c31.pass);
  CHECK(c31.ranks.im.claimed_rank == 1);

  Certificate c122 = run_verify(12, 2, 128);
  CHECK(c122.pass);
  CHECK(c122.ranks.re.claimed_rank == 7);
  CHECK(c122.expected_l_kn == 7);
  CHECK(!c122.undecided);
  CHECK(c122.t_det_lower > 0);
}

TEST_CASE("certificate JSON carries the schema and verdicts") {
  Certificate c = run_verify(4, 1, 128);
  json j = certificate_to_json(c);
  CHECK(j["schema_version"] == 1);
  CHECK(j["n"] == 4);
  CHECK(j["k"] == 1);
  CHECK(j["pass"] == true);
  CHECK(j["verdicts"]["t_invertible"] == true);
  CHECK(j["verdicts"]["kubert_rows"] == true);
  CHECK(j["ranks"]["im"]["claimed_rank"] == 1);
  CHECK(j["characters"].size() == 2);
  for (const auto& rec : j["characters"]) {
    CHECK(rec["certified"] == true);
    CHECK(rec.contains("e_n_chi"));
    CHECK(rec.contains("l_value"));
    CHECK(rec.contains("c1"));
  }
}

TEST_CASE("certificates are deterministic byte-for-byte") {
  std::string a = certificate_to_json(run_verify(6, 2, 128)).dump(2);
  std::string b = certificate_to_json(run_verify(6, 2, 128)).dump(2);
  CHECK(a == b);
}

TEST_CASE("csv row summarizes the certificate") {
  Certificate c = run_verify(3, 1, 128);
  std::string row = certificate_csv_row(c);
  CHECK(row.rfind("3,1,128,pass,", 0) == 0);
}

TEST_CASE("selfcheck passes") {
  std::ostringstream sink;
  CHECK(selfcheck(sink));
  CHECK(sink.str().find("FAIL") == std::string::npos);
}

TEST_CASE("suite over a small grid") {
  std::ostringstream sink;
  SuiteResult res = run_suite(6, 2, 128, 2, sink);
  CHECK(res.exit_code() == 0);
  CHECK(res.all_pass);
  CHECK(!res.any_undecided);
  CHECK(res.certificates.size() == 12);
  // Results arrive in sorted (n, k) order.
  for (size_t i = 0; i < res.certificates.size(); ++i) {
    CHECK(res.certificates[i].n == static_cast<long>(i / 2) + 1);
    CHECK(res.certificates[i].k == static_cast<long>(i % 2) + 1);
  }
}

TEST_CASE("low-precision runs never make a wrong claim") {
  Certificate c = run_verify(6, 2, 53);
  if (!c.undecided) {
    CHECK(c.ranks.re.claimed_rank == l_kn(6, 2));
    CHECK(c.pass);
  } else {
    CHECK(c.escalation_history.size() > 1);
  }
}

TEST_CASE("character table export") {
  json j = character_table_json(4);
  CHECK(j["modulus"] == 4);
  CHECK(j["characters"].size() == 2);
  bool saw_aperiodic = false;
  for (const auto& c : j["characters"])
    if (c["aperiodic"] == true) {
      saw_aperiodic = true;
      CHECK(c["conductor"] == 4);
    }
  CHECK(saw_aperiodic);
}

TEST_CASE("torsion table export shapes") {
  json j = torsion_table_json(3, 1, 128);
  CHECK(j["entries"].size() == 9);
  CHECK(j["entries"][0]["a"] == 1);
  CHECK(j["entries"][0]["value"].contains("re"));
  std::string csv = torsion_table_csv(2, 1, 128);
  CHECK(csv.rfind("part,a,b,mid", 0) == 0);
}
