// Rank bookkeeping, certificate assembly, suite orchestration.
#pragma once

#include "lenscert/lfunctions.hpp"
#include "lenscert/torsion.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace lenscert {

using json = nlohmann::ordered_json;

// l_{k,n}: floor((n+2)/2) for even k, floor((n-1)/2) for odd k.
long l_kn(long n, long k);

struct RepCounts {
  long r;  // irreducible real representations of C_n
  long c;  // those of complex type
};
RepCounts rep_counts(long n);

// Rational K-group rank of Z[C_n] in degree i >= 2.
long k_theory_rank(long n, long i);

// l_kn(n,k) == k_theory_rank(n, 2k+1); a failure here is a bug, not a verdict.
bool consistency_check(long n, long k);

struct CharacterRecord {
  std::string label;
  long order;
  long conductor;
  bool aperiodic;
  ComplexBall e_value;
  double nonzero_margin;
  long nonzero_escalations;
  ComplexBall l_value;
  ComplexBall c1_value;
  bool factorization_pass;   // aperiodic chi only
  bool recursion_pass;       // non-aperiodic chi only
  bool certified;
};

struct Certificate {
  long n;
  long k;
  long precision_bits;
  long expected_l_kn;
  bool t_invertible;
  double t_det_lower;
  bool conjugation_pass;
  bool kubert_rows_pass;
  bool unit_submatrix_pass;
  double unit_submatrix_det_lower;
  RanksResult ranks;
  std::vector<CharacterRecord> characters;
  std::vector<long> escalation_history;  // working precisions attempted
  bool undecided;
  bool pass;
};

Certificate run_verify(long n, long k, long prec_bits);

json certificate_to_json(const Certificate& cert);
std::string certificate_csv_row(const Certificate& cert);

struct SuiteResult {
  std::vector<Certificate> certificates;
  bool all_pass;
  bool any_undecided;
  bool internal_inconsistency;
  int exit_code() const {
    if (internal_inconsistency) return 3;
    if (any_undecided) return 2;
    return all_pass ? 0 : 1;
  }
};

// Runs run_verify over the grid n in [1,max_n], k in [1,max_k], job-parallel,
// results in sorted (n,k) order, plus the module property suites.
SuiteResult run_suite(long max_n, long max_k, long prec_bits, long jobs,
                      std::ostream& log);

// All module property suites; prints one line per check.
bool selfcheck(std::ostream& log);

// Exports for the CLI.
json character_table_json(long n);
json torsion_table_json(long n, long k, long prec_bits);
std::string torsion_table_csv(long n, long k, long prec_bits);

json ball_to_json(const RealBall& b);
json ball_to_json(const ComplexBall& b);

}  // namespace lenscert
