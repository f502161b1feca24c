// Exact Dirichlet characters mod n, aperiodicity detection, and the
// character sums c(m, chi).
#pragma once

#include "lenscert/ball.hpp"
#include "lenscert/modular.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lenscert {

// chi(a) = zeta_order^{exp_of[a]} for units a; stored by exponents, never as
// floating values.
class DirichletCharacter {
 public:
  // From exponents on the unit-group generators: chi(g_i) = zeta_{d_i}^{c_i}.
  DirichletCharacter(const UnitGroup& group, std::vector<long> gen_exponents);
  // From an explicit value map over a common order (used for restrictions).
  DirichletCharacter(long modulus, long common_order,
                     std::vector<long> exponents_by_residue);

  long modulus() const { return modulus_; }
  long order() const { return order_; }
  // Exponent e with chi(a) = zeta_{order}^e; throws for non-units.
  long exponent_at(long a) const;
  RootOfUnity value(long a) const { return {exponent_at(a), order_}; }
  ComplexBall value_ball(long a, mpfr_prec_t prec) const;
  bool is_trivial() const { return order_ == 1; }
  // Exponent vector on the generating set used at construction (empty for
  // restriction-built characters); canonical order-independent label.
  const std::vector<long>& generator_exponents() const { return gen_exponents_; }
  std::string label() const;

  DirichletCharacter conjugate() const;
  DirichletCharacter pointwise_product(const DirichletCharacter& o) const;
  bool operator==(const DirichletCharacter& o) const;

 private:
  long modulus_;
  long order_;
  std::vector<long> exp_by_residue_;  // -1 for non-units
  std::vector<long> gen_exponents_;
  void normalize();
};

struct CharacterTable {
  long modulus;
  UnitGroup group;
  std::vector<DirichletCharacter> characters;  // sorted by generator exponents
};

CharacterTable enumerate_characters(long n);

struct PeriodInfo {
  long minimal_period;  // smallest q | n through which chi factors
  bool aperiodic;       // q == n
  std::optional<DirichletCharacter> restricted;  // chi' mod q when q < n
};

PeriodInfo minimal_period(const DirichletCharacter& chi);

// Lift of chi' (mod n') to modulus n, n' | n: chi = chi' o pi.
DirichletCharacter lift_character(const DirichletCharacter& chi_prime, long n);

// c(m, chi) = sum_{a in units} zeta_n^{ma} conj(chi)(a).
ComplexBall char_sum_c(const ModInt& m, const DirichletCharacter& chi,
                       mpfr_prec_t prec);

enum class VerdictStatus { Certified, Undecided };

struct TriangleVerdict {
  VerdictStatus status;
  bool pass;
  double c1_exclusion_margin;  // lower bound on |c(1,chi)|
};

// Checks the triangle structure for an aperiodic chi: c(m,chi) vanishes off
// units, translates by chi(m) on units, and c(1,chi) is certified nonzero.
TriangleVerdict triangle_check(const DirichletCharacter& chi, mpfr_prec_t prec);

struct CharMatrixRankResult {
  VerdictStatus status;
  long rank;                      // = phi(n) when certified
  std::vector<long> witness_rows; // values of m (1..n) of the certifying minor
  double det_margin;              // lower bound of |det|^2 of the minor
};

// Certifies that the n x phi(n) matrix (c(m, chi)) has rank phi(n) by
// exhibiting a minor whose ball determinant excludes zero.
CharMatrixRankResult char_sum_matrix_rank(long n, mpfr_prec_t prec);

}  // namespace lenscert
