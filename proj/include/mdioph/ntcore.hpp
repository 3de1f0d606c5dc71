#pragma once

// Exact number theory primitives over BigInt: primality, Lucas-Lehmer,
// integer square roots, factorization and the Mersenne prime value type.
//
// Primality (is_prime) is exact:
//   * n < 2^20: trial division by the small-prime table.
//   * n < 3,317,044,064,679,887,385,961,981: strong Miller-Rabin with the
//     first 13 prime bases, which has no pseudoprimes below that bound.
//   * larger n: Baillie-PSW (base-2 strong test + strong Lucas test with
//     Selfridge parameters). No BPSW pseudoprime is known; values this large
//     only reach is_prime through user-supplied l or a raised factoring cap.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdioph/bigint.hpp"

namespace mdioph {

/// Raised when a factorization request exceeds the configured effort bound.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = [] {
    constexpr std::uint32_t limit = 1u << 10;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint32_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return table;
}

/// Trial division bound squared: anything below this with no small factor is prime.
inline BigInt trial_square_bound() {
  const BigInt b = small_primes().back();
  return b * b;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

inline bool strong_probable_prime(const BigInt& n, const BigInt& base) {
  const BigInt n_minus_1 = n - 1;
  const auto s = boost::multiprecision::lsb(n_minus_1);
  const BigInt d = n_minus_1 >> s;
  BigInt x = boost::multiprecision::powm(base % n, d, n);
  if (x == 1 || x == n_minus_1) return true;
  for (std::size_t r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

/// Jacobi symbol (a/n) for odd positive n.
inline int jacobi(BigInt a, BigInt n) {
  a = mod_floor(a, n);
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n & 7);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline BigInt half_mod(const BigInt& v, const BigInt& n) {
  BigInt t = mod_floor(v, n);
  if ((t & 1) != 0) t += n;
  return t >> 1;
}

/// Strong Lucas probable-prime test, Selfridge method A parameters.
inline bool strong_lucas_probable_prime(const BigInt& n) {
  {
    BigInt r;
    boost::multiprecision::sqrt(n, r);
    if (r == 0) return false;
  }
  BigInt d_param = 5;
  for (;;) {
    const int j = jacobi(d_param, n);
    if (j == -1) break;
    if (j == 0 && boost::multiprecision::abs(d_param) != n) return false;
    d_param = d_param > 0 ? BigInt(-(d_param + 2)) : BigInt(-(d_param - 2));
  }
  const BigInt p_param = 1;
  const BigInt q_param = mod_floor((1 - d_param) / 4, n);

  BigInt d = n + 1;
  const auto s = boost::multiprecision::lsb(d);
  d >>= s;

  BigInt u = 1;
  BigInt v = p_param;
  BigInt qk = q_param;
  const auto top = boost::multiprecision::msb(d);
  for (std::size_t i = top; i-- > 0;) {
    u = (u * v) % n;
    v = mod_floor(v * v - 2 * qk, n);
    qk = (qk * qk) % n;
    if (boost::multiprecision::bit_test(d, i)) {
      const BigInt u2 = half_mod(p_param * u + v, n);
      const BigInt v2 = half_mod(d_param * u + p_param * v, n);
      u = u2;
      v = v2;
      qk = (qk * q_param) % n;
    }
  }
  if (u == 0 || v == 0) return true;
  for (std::size_t r = 1; r < s; ++r) {
    v = mod_floor(v * v - 2 * qk, n);
    qk = (qk * qk) % n;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace detail

/// Upper end of the range where 13-base Miller-Rabin is a proof of primality.
inline const BigInt& deterministic_mr_bound() {
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (std::uint32_t p : detail::small_primes()) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < detail::trial_square_bound()) return true;

  if (n < deterministic_mr_bound()) {
    static constexpr std::array<unsigned, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    return std::all_of(bases.begin(), bases.end(),
                       [&](unsigned a) { return detail::strong_probable_prime(n, a); });
  }
  return detail::strong_probable_prime(n, 2) && detail::strong_lucas_probable_prime(n);
}

/// Lucas-Lehmer test for 2^p - 1. Requires p prime and p >= 3.
inline bool lucas_lehmer(Exponent p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("lucas_lehmer requires a prime exponent p >= 3, got " + std::to_string(p));
  const BigInt m = pow2(p) - 1;
  BigInt s = 4;
  for (Exponent i = 0; i + 2 < p; ++i) {
    s = s * s - 2;
    if (s < 0) s += m;
    // s mod (2^p - 1) by folding the high bits onto the low ones.
    while (s > m) s = (s & m) + (s >> p);
    if (s == m) s = 0;
  }
  return s == 0;
}

struct SqrtResult {
  BigInt root;
  bool exact = false;
};

inline SqrtResult integer_sqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("integer_sqrt of negative value " + n.str());
  BigInt rem;
  BigInt root = boost::multiprecision::sqrt(n, rem);
  return {std::move(root), rem == 0};
}

inline unsigned mod4_residue(const BigInt& m) {
  if (m < 0) throw std::invalid_argument("mod4_residue of negative value " + m.str());
  return static_cast<unsigned>(m & 3);
}

struct PrimePower {
  BigInt prime;
  unsigned multiplicity = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  BigInt n;
  std::vector<PrimePower> factors;  // ascending by prime

  BigInt product() const {
    BigInt r = 1;
    for (const auto& f : factors) r *= boost::multiprecision::pow(f.prime, f.multiplicity);
    return r;
  }

  std::vector<BigInt> primes() const {
    std::vector<BigInt> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }
};

struct FactorLimits {
  /// Largest input factor() accepts.
  BigInt max_input = pow2(64);
};

namespace detail {

/// Brent's variant of Pollard rho with f(v) = v^2 + c. Returns a divisor of n,
/// possibly n itself when the cycle collapses for this c.
inline BigInt brent_rho(const BigInt& n, const BigInt& c) {
  constexpr unsigned batch = 64;
  auto f = [&](const BigInt& v) -> BigInt { return (v * v + c) % n; };
  BigInt y = 2, x, ys, g = 1, acc = 1;
  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t steps = std::min<std::uint64_t>(batch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        acc = (acc * boost::multiprecision::abs(x - y)) % n;
      }
      g = boost::multiprecision::gcd(acc, n);
      k += steps;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = boost::multiprecision::gcd(boost::multiprecision::abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

inline void split_composite(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  {
    BigInt rem;
    BigInt root = boost::multiprecision::sqrt(n, rem);
    if (rem == 0) {
      split_composite(root, out);
      split_composite(root, out);
      return;
    }
  }
  for (BigInt c = 1;; ++c) {
    BigInt d = brent_rho(n, c);
    if (d != n && d != 1) {
      split_composite(d, out);
      split_composite(n / d, out);
      return;
    }
  }
}

}  // namespace detail

/// Complete prime factorization: trial division by primes < 2^10, then Brent rho.
inline Factorization factor(const BigInt& n, const FactorLimits& limits = {}) {
  if (n < 2) throw std::invalid_argument("factor requires n >= 2, got " + n.str());
  if (n > limits.max_input)
    throw CapExceeded("factor: " + n.str() + " exceeds the factorization cap " + limits.max_input.str());

  std::vector<BigInt> primes;
  BigInt rest = n;
  for (std::uint32_t p : detail::small_primes()) {
    if (BigInt(p) * p > rest) break;
    while (rest % p == 0) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  detail::split_composite(rest, primes);
  std::sort(primes.begin(), primes.end());

  Factorization result{n, {}};
  for (const auto& p : primes) {
    if (!result.factors.empty() && result.factors.back().prime == p)
      ++result.factors.back().multiplicity;
    else
      result.factors.push_back({p, 1});
  }
  return result;
}

/// A prime of the form 2^p - 1 with p prime. Immutable once built.
class MersennePrime {
 public:
  /// Validates p; p = 2 is checked directly, p >= 3 through Lucas-Lehmer.
  static MersennePrime from_exponent(Exponent p) {
    if (!is_prime(p)) throw std::invalid_argument("exponent " + std::to_string(p) + " is not prime");
    const bool prime_value = p == 2 ? is_prime(3) : lucas_lehmer(p);
    if (!prime_value)
      throw std::invalid_argument("2^" + std::to_string(p) + " - 1 is not prime");
    return MersennePrime(p);
  }

  /// Back-solves the exponent from M = 2^p - 1.
  static MersennePrime from_value(const BigInt& value) {
    if (value < 3) throw std::invalid_argument(value.str() + " is not a Mersenne prime");
    const BigInt next = value + 1;
    const auto p = boost::multiprecision::msb(next);
    if (next != pow2(static_cast<Exponent>(p)))
      throw std::invalid_argument(value.str() + " is not of the form 2^p - 1");
    return from_exponent(static_cast<Exponent>(p));
  }

  Exponent exponent() const { return p_; }
  const BigInt& value() const { return value_; }

  friend bool operator==(const MersennePrime& a, const MersennePrime& b) { return a.p_ == b.p_; }

 private:
  explicit MersennePrime(Exponent p) : p_(p), value_(pow2(p) - 1) {}

  Exponent p_;
  BigInt value_;
};

/// Exponents p <= p_limit with 2^p - 1 prime, ascending.
inline std::vector<Exponent> mersenne_exponents(Exponent p_limit) {
  std::vector<Exponent> out;
  for (Exponent p = 2; p <= p_limit; ++p) {
    if (!is_prime(p)) continue;
    if (p == 2 || lucas_lehmer(p)) out.push_back(p);
  }
  return out;
}

}  // namespace mdioph
