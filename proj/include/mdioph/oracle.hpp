#pragma once

// Bounded exhaustive search, used as ground truth for the closed-form solver.
// Nothing here consults the solver's case analysis.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mdioph/bigint.hpp"
#include "mdioph/ntcore.hpp"
#include "mdioph/solver.hpp"

namespace mdioph {

struct SearchBounds {
  Exponent x_max = 12;
  Exponent y_max = 12;
  std::optional<BigInt> z_max;  // absent: z is whatever the square test yields

  void validate() const {
    if (z_max && *z_max < 1) throw std::invalid_argument("z_max must be >= 1 when given");
  }

  bool contains(const Solution& s) const {
    return s.x <= x_max && s.y <= y_max && (!z_max || s.z <= *z_max);
  }
};

/// Exact evaluation of M_p^x + (M_q + 1)^y == (l z)^2.
inline bool verify(const EquationInstance& instance, Exponent x, Exponent y, const BigInt& z) {
  if (z < 0) return false;
  const BigInt lhs = ipow(instance.mp().value(), x) + ipow(instance.second_base(), y);
  const BigInt lz = instance.l() * z;
  return lhs == lz * lz;
}

inline bool verify(const EquationInstance& instance, const Solution& s) { return verify(instance, s.x, s.y, s.z); }

namespace detail {

inline std::vector<Solution> search_x_slice(const EquationInstance& instance, const SearchBounds& bounds,
                                            Exponent x_begin, Exponent x_end) {
  std::vector<Solution> found;
  const BigInt& l = instance.l();
  const BigInt second = instance.second_base();
  BigInt first_pow = ipow(instance.mp().value(), x_begin);
  for (Exponent x = x_begin; x < x_end; ++x) {
    BigInt second_pow = 1;
    for (Exponent y = 0; y <= bounds.y_max; ++y) {
      const auto [root, exact] = integer_sqrt(first_pow + second_pow);
      if (exact && root % l == 0) {
        BigInt z = root / l;
        if (!bounds.z_max || z <= *bounds.z_max) found.push_back({x, y, std::move(z), CaseLabel::OracleSearch, {}});
      }
      second_pow *= second;
    }
    first_pow *= instance.mp().value();
  }
  return found;
}

}  // namespace detail

/// All (x, y, z) with x <= x_max, y <= y_max (and z <= z_max if given).
/// One integer square root per (x, y); the x-range is split across `workers`
/// threads and the merged result is sorted, so output does not depend on it.
inline SolutionSet brute_force(const EquationInstance& instance, const SearchBounds& bounds, unsigned workers = 1) {
  bounds.validate();
  const Exponent rows = bounds.x_max + 1;
  workers = std::clamp<unsigned>(workers, 1, rows);

  std::vector<std::vector<Solution>> parts(workers);
  if (workers == 1) {
    parts[0] = detail::search_x_slice(instance, bounds, 0, rows);
  } else {
    std::vector<std::thread> pool;
    const Exponent chunk = (rows + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const Exponent begin = std::min<Exponent>(w * chunk, rows);
      const Exponent end = std::min<Exponent>(begin + chunk, rows);
      pool.emplace_back([&, w, begin, end] { parts[w] = detail::search_x_slice(instance, bounds, begin, end); });
    }
    for (auto& t : pool) t.join();
  }

  SolutionSet out{instance, {}, {}};
  for (auto& part : parts)
    for (auto& s : part) out.solutions.push_back(std::move(s));
  detail::canonicalize(out.solutions);
  if (out.solutions.empty()) {
    std::string box = "no solution with x <= " + std::to_string(bounds.x_max) + ", y <= " + std::to_string(bounds.y_max);
    if (bounds.z_max) box += ", z <= " + bounds.z_max->str();
    out.nonexistence_reasons.push_back({ReasonKind::SearchExhausted, box});
  }
  return out;
}

/// The solutions of `set` that fall inside `bounds`.
inline std::vector<Solution> restrict_to(const SolutionSet& set, const SearchBounds& bounds) {
  std::vector<Solution> out;
  std::copy_if(set.solutions.begin(), set.solutions.end(), std::back_inserter(out),
               [&](const Solution& s) { return bounds.contains(s); });
  return out;
}

struct CatalanHit {
  std::uint64_t a, b;
  Exponent x, y;

  friend bool operator==(const CatalanHit&, const CatalanHit&) = default;
  friend auto operator<=>(const CatalanHit&, const CatalanHit&) = default;
};

/// All a^x - b^y = 1 with 2 <= a <= a_max, 2 <= b <= b_max, 2 <= x <= x_max, 2 <= y <= y_max.
inline std::vector<CatalanHit> catalan_search(std::uint64_t a_max, std::uint64_t b_max, Exponent x_max,
                                              Exponent y_max) {
  if (a_max < 2 || b_max < 2 || x_max < 2 || y_max < 2)
    throw std::invalid_argument("catalan_search bounds must all be >= 2");

  std::multimap<BigInt, std::pair<std::uint64_t, Exponent>> powers;
  for (std::uint64_t a = 2; a <= a_max; ++a) {
    BigInt v = BigInt(a) * a;
    for (Exponent x = 2; x <= x_max; ++x, v *= a) powers.emplace(v, std::make_pair(a, x));
  }

  std::vector<CatalanHit> hits;
  for (std::uint64_t b = 2; b <= b_max; ++b) {
    BigInt v = BigInt(b) * b;
    for (Exponent y = 2; y <= y_max; ++y, v *= b) {
      auto [lo, hi] = powers.equal_range(BigInt(v + 1));
      for (auto it = lo; it != hi; ++it) hits.push_back({it->second.first, b, it->second.second, y});
    }
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

}  // namespace mdioph
