#include "lenscert/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace lenscert {

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod_pow(long base, long exp, long mod) {
  if (mod == 1) return 0;
  long r = 1;
  base = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return r;
}

long mod_inverse(long a, long n) {
  a = ((a % n) + n) % n;
  long t = 0, new_t = 1, r = n, new_r = a;
  while (new_r != 0) {
    long q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw std::domain_error("mod_inverse: not a unit");
  return ((t % n) + n) % n;
}

ModInt::ModInt(long v, long n) : modulus(n) {
  if (n < 1) throw std::invalid_argument("ModInt: modulus must be positive");
  value = ((v % n) + n) % n;
}

ModInt ModInt::operator+(const ModInt& o) const { return {value + o.value, modulus}; }
ModInt ModInt::operator-(const ModInt& o) const { return {value - o.value, modulus}; }
ModInt ModInt::operator*(const ModInt& o) const { return {value * o.value, modulus}; }

RootOfUnity::RootOfUnity(long a, long n) : order(n) {
  if (n < 1) throw std::invalid_argument("RootOfUnity: order must be positive");
  exponent = ((a % n) + n) % n;
}

RootOfUnity RootOfUnity::reduced() const {
  if (exponent == 0) return {0, 1};
  long g = gcd_long(exponent, order);
  return {exponent / g, order / g};
}

RootOfUnity RootOfUnity::pow(long m) const {
  long e = ((m % order) + order) % order;
  return {(exponent * e) % order, order};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  long g = gcd_long(order, o.order);
  long l = order / g * o.order;
  return {exponent * (l / order) + o.exponent * (l / o.order), l};
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
  RootOfUnity a = reduced(), b = o.reduced();
  return a.exponent == b.exponent && a.order == b.order;
}

namespace {

// Generators of (Z/p^e)* for a single prime power, as residues mod p^e.
struct FactorGens {
  long pe;
  std::vector<long> gens;
  std::vector<long> orders;
};

std::vector<long> prime_factors(long m) {
  std::vector<long> out;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

long primitive_root(long pe, long p) {
  long phi = pe / p * (p - 1);
  std::vector<long> qs = prime_factors(phi);
  for (long g = 2; g < pe; ++g) {
    if (gcd_long(g, pe) != 1) continue;
    bool ok = true;
    for (long q : qs)
      if (mod_pow(g, phi / q, pe) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

FactorGens factor_generators(long p, long e) {
  long pe = 1;
  for (long i = 0; i < e; ++i) pe *= p;
  if (p == 2) {
    if (e == 1) return {2, {}, {}};
    if (e == 2) return {4, {3}, {2}};
    return {pe, {pe - 1, 5}, {2, pe / 4}};  // <-1> x <5>
  }
  return {pe, {primitive_root(pe, p)}, {pe / p * (p - 1)}};
}

}  // namespace

UnitGroup unit_group(long n) {
  if (n < 1) throw std::invalid_argument("unit_group: n must be positive");
  UnitGroup g;
  g.modulus = n;
  // CRT over prime powers.
  long m = n;
  std::vector<FactorGens> factors;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      long e = 0;
      while (m % d == 0) { m /= d; ++e; }
      factors.push_back(factor_generators(d, e));
    }
  }
  if (m > 1) factors.push_back(factor_generators(m, 1));
  // Lift each factor generator to a residue mod n that is 1 in the other
  // factors.
  for (const auto& f : factors) {
    long other = n / f.pe;
    for (size_t i = 0; i < f.gens.size(); ++i) {
      long lifted;
      if (other == 1) {
        lifted = f.gens[i];
      } else {
        long inv = mod_inverse(other % f.pe, f.pe);
        // x = 1 + other*inv*(g-1) mod n satisfies x = g mod pe, x = 1 mod other.
        long diff = ((f.gens[i] - 1) % f.pe + f.pe) % f.pe;
        lifted = (1 + (other % n) * ((inv * diff) % f.pe)) % n;
      }
      g.generators.push_back(lifted);
      g.generator_orders.push_back(f.orders[i]);
    }
  }
  // Enumerate products of generator powers; build the discrete-log table.
  g.strides_.assign(g.generators.size(), 1);
  long total = 1;
  for (size_t i = 0; i < g.generators.size(); ++i) {
    g.strides_[i] = total;
    total *= g.generator_orders[i];
  }
  g.dlog_flat_.assign(static_cast<size_t>(n), -1);
  std::vector<long> expv(g.generators.size(), 0);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx, u = 1 % n;
    for (size_t i = 0; i < g.generators.size(); ++i) {
      long ei = (rem / g.strides_[i]) % g.generator_orders[i];
      u = (u * mod_pow(g.generators[i], ei, n)) % n;
    }
    (void)rem;
    if (g.dlog_flat_[static_cast<size_t>(u)] != -1)
      throw std::logic_error("unit_group: generator decomposition not free");
    g.dlog_flat_[static_cast<size_t>(u)] = idx;
    g.elements.push_back(u == 0 ? n : u);  // representatives 1..n
  }
  std::sort(g.elements.begin(), g.elements.end());
  // Cross-check against a plain gcd scan.
  long phi = 0;
  for (long a = 1; a <= n; ++a)
    if (gcd_long(a, n) == 1) ++phi;
  if (phi != g.phi()) throw std::logic_error("unit_group: phi mismatch");
  return g;
}

std::vector<long> UnitGroup::exponents_of(long unit) const {
  long u = ((unit % modulus) + modulus) % modulus;
  long idx = dlog_flat_[static_cast<size_t>(u)];
  if (idx < 0) throw std::domain_error("exponents_of: not a unit");
  std::vector<long> e(generators.size());
  for (size_t i = 0; i < generators.size(); ++i)
    e[i] = (idx / strides_[i]) % generator_orders[i];
  return e;
}

long UnitGroup::unit_from_exponents(const std::vector<long>& e) const {
  long u = 1 % modulus;
  for (size_t i = 0; i < generators.size(); ++i)
    u = (u * mod_pow(generators[i], ((e[i] % generator_orders[i]) + generator_orders[i]) % generator_orders[i], modulus)) % modulus;
  return u == 0 ? modulus : u;
}

PermMatrixS negation_perm(long n) {
  if (n < 1) throw std::invalid_argument("negation_perm: n must be positive");
  PermMatrixS s;
  s.n = n;
  s.mat = Eigen::MatrixXi::Zero(n, n);
  s.fixed_points = 0;
  s.two_cycles = 0;
  for (long a = 1; a <= n; ++a) {
    long b = n - a == 0 ? n : n - a;  // partner of a under b -> n-b, in 1..n
    s.mat(a - 1, b - 1) = 1;
    if (a == b) ++s.fixed_points;
    else if (a < b) ++s.two_cycles;
  }
  return s;
}

long rank_one_plus_minus_S(long n, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  PermMatrixS s = negation_perm(n);
  // rank(1+S) = fixed points + 2-cycles, rank(1-S) = 2-cycles.
  return sign == 1 ? s.fixed_points + s.two_cycles : s.two_cycles;
}

ShiftMatrixE shift_matrix(long n_prime, long p) {
  if (n_prime < 1) throw std::invalid_argument("shift_matrix: size must be positive");
  if (!is_prime(p)) throw std::invalid_argument("shift_matrix: p must be prime");
  ShiftMatrixE e;
  e.n = n_prime;
  e.p = p;
  e.mat = Eigen::MatrixXi::Zero(n_prime, n_prime);
  for (long a = 1; a <= n_prime; ++a) {
    long b = (a * p) % n_prime;
    if (b == 0) b = n_prime;
    e.mat(a - 1, b - 1) = 1;
  }
  return e;
}

EigenClaimVerdict eigen_claim_E(const ShiftMatrixE& E) {
  EigenClaimVerdict v;
  v.spectral_radius_bound = 1.0;
  v.all_trajectories_periodic = true;
  for (long a = 1; a <= E.n; ++a) {
    std::vector<long> traj{a};
    std::vector<char> seen(static_cast<size_t>(E.n) + 1, 0);
    seen[static_cast<size_t>(a)] = 1;
    long cur = a;
    bool periodic = false;
    for (long step = 0; step <= E.n; ++step) {
      long next = (cur * E.p) % E.n;
      if (next == 0) next = E.n;
      traj.push_back(next);
      if (seen[static_cast<size_t>(next)]) { periodic = true; break; }
      seen[static_cast<size_t>(next)] = 1;
      cur = next;
    }
    if (!periodic) v.all_trajectories_periodic = false;
    v.trajectories.push_back(std::move(traj));
  }
  return v;
}

Pi0Monoid pi0_monoid(long n) {
  if (n < 1) throw std::invalid_argument("pi0_monoid: n must be positive");
  Pi0Monoid m;
  m.n = n;
  // A nonzero inverse pair x*y = 0 forces y = x/(nx-1); for |x| > 4 and any
  // n >= 1 we have |nx-1| > |x| unless n = 1, x = 2, so no integer solution
  // escapes the window below. Bound documented with the search.
  m.search_bound = 4;
  for (long x = -m.search_bound; x <= m.search_bound; ++x) {
    long d = n * x - 1;
    if (d == 0 || x % d != 0) continue;  // d = 0 only for n = 1, x = 1: not a unit
    long y = x / d;
    if (m.product(x, y) == 0 && m.product(y, x) == 0) m.units.push_back(x);
  }
  std::sort(m.units.begin(), m.units.end());
  m.units.erase(std::unique(m.units.begin(), m.units.end()), m.units.end());
  return m;
}

}  // namespace lenscert
