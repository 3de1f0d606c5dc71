#pragma once

// Closed-form classification of M_p^x + (M_q + 1)^y = (l z)^2 over the
// non-negative integers.
//
// l = 2: the only solution is (x, y, z) = (1, 0, 1), and only for M_p = 3.
// l odd:
//   (a) (0, 1, 1) exactly when M_q = 7 and l = 3  (1 + 8 = 9);
//   (b) (2, (p + 2) / q, (2^p + 1) / l) exactly when q | p + 2 and l | 2^p + 1.
// The x, y >= 1 family is forced to x = 2k, (lz + M_p^k)(lz - M_p^k) = 2^(qy),
// which splits as 2^alpha * 2^beta with beta = 1, alpha = p + 1, k = 1.
// Every other branch is ruled out either by a residue mod 4 or by the
// Catalan/Mihailescu theorem (8 and 9 are the only consecutive perfect powers).

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mdioph/bigint.hpp"
#include "mdioph/ntcore.hpp"

namespace mdioph {

/// One equation M_p^x + (M_q + 1)^y = (l z)^2.
class EquationInstance {
 public:
  EquationInstance(MersennePrime mp, MersennePrime mq, BigInt l)
      : mp_(std::move(mp)), mq_(std::move(mq)), l_(std::move(l)) {
    if (!is_prime(l_)) throw std::invalid_argument("l = " + l_.str() + " is not prime");
  }

  static EquationInstance from_exponents(Exponent p, Exponent q, const BigInt& l) {
    return {MersennePrime::from_exponent(p), MersennePrime::from_exponent(q), l};
  }

  const MersennePrime& mp() const { return mp_; }
  const MersennePrime& mq() const { return mq_; }
  const BigInt& l() const { return l_; }
  Exponent p() const { return mp_.exponent(); }
  Exponent q() const { return mq_.exponent(); }

  /// M_q + 1 = 2^q.
  BigInt second_base() const { return mq_.value() + 1; }

  friend bool operator==(const EquationInstance& a, const EquationInstance& b) {
    return a.mp_ == b.mp_ && a.mq_ == b.mq_ && a.l_ == b.l_;
  }

 private:
  MersennePrime mp_;
  MersennePrime mq_;
  BigInt l_;
};

enum class CaseLabel {
  T1CaseIIb,   // l = 2, y = 0, x = 1
  T2CaseIb,    // l odd, x = 0, y = 1
  T2CaseIII,   // l odd, x, y >= 1
  OracleSearch // found by bounded enumeration, not by a theorem branch
};

inline std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::T1CaseIIb: return "T1-CaseII-b";
    case CaseLabel::T2CaseIb: return "T2-CaseI-b";
    case CaseLabel::T2CaseIII: return "T2-CaseIII";
    case CaseLabel::OracleSearch: return "oracle";
  }
  return "unknown";
}

inline CaseLabel case_label_from_string(const std::string& s) {
  for (auto c : {CaseLabel::T1CaseIIb, CaseLabel::T2CaseIb, CaseLabel::T2CaseIII, CaseLabel::OracleSearch})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown case label: " + s);
}

/// Exponent bookkeeping behind a T2-CaseIII solution: x = 2k and
/// lz + M_p^k = 2^alpha, lz - M_p^k = 2^beta with alpha + beta = q y.
struct DerivationTrace {
  Exponent k = 0;
  Exponent alpha = 0;
  Exponent beta = 0;

  friend bool operator==(const DerivationTrace&, const DerivationTrace&) = default;
};

struct Solution {
  Exponent x = 0;
  Exponent y = 0;
  BigInt z;
  CaseLabel case_label = CaseLabel::OracleSearch;
  std::optional<DerivationTrace> trace;

  auto key() const { return std::tie(x, y, z); }
  bool same_triple(const Solution& o) const { return key() == o.key(); }

  friend bool operator==(const Solution&, const Solution&) = default;
};

enum class ReasonKind {
  QNotDividesPPlus2,
  LNotDividesTwoPPlus1,
  ParityObstruction,
  MihailescuObstruction,
  SearchExhausted,
  FilteredNonPositive,
};

inline std::string to_string(ReasonKind k) {
  switch (k) {
    case ReasonKind::QNotDividesPPlus2: return "QNotDividesPPlus2";
    case ReasonKind::LNotDividesTwoPPlus1: return "LNotDividesTwoPPlus1";
    case ReasonKind::ParityObstruction: return "ParityObstruction";
    case ReasonKind::MihailescuObstruction: return "MihailescuObstruction";
    case ReasonKind::SearchExhausted: return "SearchExhausted";
    case ReasonKind::FilteredNonPositive: return "FilteredNonPositive";
  }
  return "unknown";
}

inline ReasonKind reason_kind_from_string(const std::string& s) {
  for (auto k : {ReasonKind::QNotDividesPPlus2, ReasonKind::LNotDividesTwoPPlus1, ReasonKind::ParityObstruction,
                 ReasonKind::MihailescuObstruction, ReasonKind::SearchExhausted, ReasonKind::FilteredNonPositive})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown reason kind: " + s);
}

/// Why a family of candidate solutions is empty for an instance.
struct Reason {
  ReasonKind kind;
  std::string detail;

  friend bool operator==(const Reason&, const Reason&) = default;
};

struct SolutionSet {
  EquationInstance instance;
  std::vector<Solution> solutions;  // ascending by (x, y, z), no duplicate triples
  std::vector<Reason> nonexistence_reasons;

  bool empty() const { return solutions.empty(); }

  bool has_reason(ReasonKind k) const {
    return std::any_of(nonexistence_reasons.begin(), nonexistence_reasons.end(),
                       [k](const Reason& r) { return r.kind == k; });
  }

  std::vector<std::tuple<Exponent, Exponent, BigInt>> triples() const {
    std::vector<std::tuple<Exponent, Exponent, BigInt>> out;
    for (const auto& s : solutions) out.emplace_back(s.x, s.y, s.z);
    return out;
  }

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

namespace detail {

inline void canonicalize(std::vector<Solution>& sols) {
  std::sort(sols.begin(), sols.end(), [](const Solution& a, const Solution& b) { return a.key() < b.key(); });
  sols.erase(std::unique(sols.begin(), sols.end(), [](const Solution& a, const Solution& b) { return a.same_triple(b); }),
             sols.end());
}

}  // namespace detail

/// l = 2.
inline SolutionSet solve_l2(const MersennePrime& mp, const MersennePrime& mq) {
  SolutionSet out{EquationInstance(mp, mq, 2), {}, {}};
  const std::string mp_s = mp.value().str();

  // x = 0: 1 + 2^(qy) = 4z^2 is odd = even for y >= 1, and 2 = 4z^2 for y = 0.
  out.nonexistence_reasons.push_back(
      {ReasonKind::MihailescuObstruction,
       "x = 0: 1 + 2^(qy) = (2z)^2 has no solution (y = 0 gives 4z^2 = 2; otherwise (2z)^2 - 2^(qy) = 1 forces 2z = 3)"});

  // y = 0: M_p^x + 1 = (2z)^2. x = 1 gives 2^p = (2z)^2, so p is even, p = 2, z = 1.
  if (mp.exponent() == 2) {
    out.solutions.push_back({1, 0, 1, CaseLabel::T1CaseIIb, std::nullopt});
  } else {
    out.nonexistence_reasons.push_back(
        {ReasonKind::MihailescuObstruction,
         "y = 0: M_p + 1 = 2^p is a square of an even number only for p = 2; M_p^x + 1 = (2z)^2 with x > 1 "
         "contradicts Mihailescu (M_p = " + mp_s + ")"});
  }

  out.nonexistence_reasons.push_back(
      {ReasonKind::ParityObstruction,
       "x, y >= 1: M_p^x + 2^(qy) is 1 or 3 mod 4 but (2z)^2 is 0 mod 4"});
  detail::canonicalize(out.solutions);
  return out;
}

/// l an odd prime.
inline SolutionSet solve_odd(const EquationInstance& instance) {
  const BigInt& l = instance.l();
  if (l == 2) throw std::invalid_argument("solve_odd requires an odd prime l; use solve_l2 for l = 2");

  SolutionSet out{instance, {}, {}};
  const Exponent p = instance.p();
  const Exponent q = instance.q();

  // x = 0, y = 1: (lz)^2 - 2^q = 1, so lz = 3 and q = 3 by Mihailescu.
  if (instance.mq().value() == 7 && l == 3) {
    out.solutions.push_back({0, 1, 1, CaseLabel::T2CaseIb, std::nullopt});
  } else {
    out.nonexistence_reasons.push_back(
        {ReasonKind::MihailescuObstruction,
         "x = 0: (lz)^2 - 2^(qy) = 1 needs M_q = 7, l = 3 (have M_q = " + instance.mq().value().str() +
             ", l = " + l.str() + "); y = 0 has no solution for odd l"});
  }

  // x, y >= 1: x = 2, y = (p + 2) / q, z = (2^p + 1) / l.
  const Exponent p_plus_2 = p + 2;
  const BigInt two_p_plus_1 = pow2(p) + 1;
  const bool q_ok = p_plus_2 % q == 0;
  const bool l_ok = two_p_plus_1 % l == 0;
  if (!q_ok) {
    out.nonexistence_reasons.push_back({ReasonKind::QNotDividesPPlus2, "q = " + std::to_string(q) +
                                                                           " does not divide p + 2 = " +
                                                                           std::to_string(p_plus_2)});
  }
  if (!l_ok) {
    out.nonexistence_reasons.push_back({ReasonKind::LNotDividesTwoPPlus1, "l = " + l.str() +
                                                                              " does not divide 2^p + 1 = " +
                                                                              two_p_plus_1.str()});
  }
  if (q_ok && l_ok) {
    out.solutions.push_back({2, p_plus_2 / q, two_p_plus_1 / l, CaseLabel::T2CaseIII, DerivationTrace{1, p + 1, 1}});
  }
  detail::canonicalize(out.solutions);
  return out;
}

/// Primes q <= q_max with q | p + 2 and 2^q - 1 prime.
inline std::vector<Exponent> admissible_q(const MersennePrime& mp, Exponent q_max) {
  if (q_max < 2) throw std::invalid_argument("admissible_q requires q_max >= 2");
  const Exponent target = mp.exponent() + 2;
  std::vector<Exponent> out;
  for (Exponent q = 2; q <= std::min(q_max, target); ++q) {
    if (target % q != 0 || !is_prime(q)) continue;
    if (q == 2 || lucas_lehmer(q)) out.push_back(q);
  }
  return out;
}

/// Every admissible q: q | p + 2 bounds q by p + 2.
inline std::vector<Exponent> admissible_q(const MersennePrime& mp) {
  return admissible_q(mp, mp.exponent() + 2);
}

/// Odd prime divisors of 2^p + 1, ascending. Propagates CapExceeded.
inline std::vector<BigInt> admissible_l(const MersennePrime& mp, const FactorLimits& limits = {}) {
  const BigInt n = pow2(mp.exponent()) + 1;
  std::vector<BigInt> out;
  for (const auto& pp : factor(n, limits).factors)
    if (pp.prime != 2) out.push_back(pp.prime);
  return out;
}

/// Dispatches on l; with positive_only drops solutions having a zero component.
inline SolutionSet classify(const EquationInstance& instance, bool positive_only = false) {
  SolutionSet out = instance.l() == 2 ? solve_l2(instance.mp(), instance.mq()) : solve_odd(instance);
  if (!positive_only) return out;

  std::vector<Solution> kept;
  for (auto& s : out.solutions) {
    if (s.x == 0 || s.y == 0 || s.z == 0) {
      out.nonexistence_reasons.push_back({ReasonKind::FilteredNonPositive,
                                          "(" + std::to_string(s.x) + ", " + std::to_string(s.y) + ", " +
                                              s.z.str() + ") has a zero component"});
    } else {
      kept.push_back(std::move(s));
    }
  }
  out.solutions = std::move(kept);
  return out;
}

}  // namespace mdioph
