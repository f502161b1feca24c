// Exact arithmetic on Z/n, its unit group, roots of unity as exponent pairs,
// and the combinatorial matrices S and E.
#pragma once

#include <Eigen/Dense>

#include <numeric>
#include <vector>

namespace lenscert {

long gcd_long(long a, long b);
bool is_prime(long p);
long mod_pow(long base, long exp, long mod);
long mod_inverse(long a, long n);  // throws if gcd(a, n) != 1

struct ModInt {
  long value;
  long modulus;

  ModInt(long v, long n);
  ModInt operator+(const ModInt& o) const;
  ModInt operator-(const ModInt& o) const;
  ModInt operator*(const ModInt& o) const;
  bool is_unit() const { return gcd_long(value, modulus) == 1; }
  bool operator==(const ModInt& o) const = default;
};

// zeta_order^exponent = e^{2 pi i exponent / order}, stored exactly.
struct RootOfUnity {
  long exponent;  // reduced to [0, order)
  long order;     // positive

  RootOfUnity(long a, long n);
  // Reduce to primitive form: zeta_n^a = zeta_{n/g}^{a/g}, g = gcd(a, n).
  RootOfUnity reduced() const;
  RootOfUnity conj() const { return {-exponent, order}; }
  RootOfUnity pow(long m) const;
  RootOfUnity operator*(const RootOfUnity& o) const;  // requires compatible orders
  bool operator==(const RootOfUnity& o) const;        // compares reduced forms
};

struct UnitGroup {
  long modulus;
  std::vector<long> elements;  // sorted units in [0, n)
  // Cyclic decomposition: each generator with its order; every unit is a
  // unique product of generator powers.
  std::vector<long> generators;
  std::vector<long> generator_orders;

  long phi() const { return static_cast<long>(elements.size()); }
  // Exponent vector of a unit on the generators (discrete log by table).
  std::vector<long> exponents_of(long unit) const;
  // Unit with the given exponent vector.
  long unit_from_exponents(const std::vector<long>& e) const;

 private:
  friend UnitGroup unit_group(long n);
  std::vector<long> dlog_flat_;  // index by residue, -1 for non-units
  std::vector<long> strides_;
};

UnitGroup unit_group(long n);

// S_{a,b} = 1 iff n | a+b, indices 1..n.
struct PermMatrixS {
  long n;
  Eigen::MatrixXi mat;
  long fixed_points;  // cycle structure of the involution b -> n-b
  long two_cycles;
};

PermMatrixS negation_perm(long n);
long rank_one_plus_minus_S(long n, int sign);

// E_{a, p a mod n'} = 1, indices 1..n'.
struct ShiftMatrixE {
  long n;  // size n'
  long p;
  Eigen::MatrixXi mat;
};

ShiftMatrixE shift_matrix(long n_prime, long p);

// Structural verification that every trajectory a -> p a mod n' is eventually
// periodic, so every eigenvalue of E is zero or a root of unity.
struct EigenClaimVerdict {
  bool all_trajectories_periodic;
  double spectral_radius_bound;  // always 1
  std::vector<std::vector<long>> trajectories;  // per starting index 1..n'
};

EigenClaimVerdict eigen_claim_E(const ShiftMatrixE& E);

// The monoid (Z, x*y = x+y-nxy) and its unit group found by exact search.
struct Pi0Monoid {
  long n;
  long search_bound;
  std::vector<long> units;  // invertible elements, sorted

  long product(long x, long y) const { return x + y - n * x * y; }
};

Pi0Monoid pi0_monoid(long n);

}  // namespace lenscert
