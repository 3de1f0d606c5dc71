#pragma once

// Catalogs of solvable and unsolvable instances, checked against the two
// published tables. Printed values that disagree with the computed ones are
// kept as PaperErratum notes rather than corrected silently.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdioph/crosscheck.hpp"
#include "mdioph/ntcore.hpp"
#include "mdioph/oracle.hpp"
#include "mdioph/solver.hpp"

namespace mdioph {

enum class RowStatusKind { Solvable, Unsolvable, PaperErratum };

inline std::string to_string(RowStatusKind k) {
  switch (k) {
    case RowStatusKind::Solvable: return "Solvable";
    case RowStatusKind::Unsolvable: return "Unsolvable";
    case RowStatusKind::PaperErratum: return "PaperErratum";
  }
  return "unknown";
}

struct RowStatus {
  RowStatusKind kind = RowStatusKind::Solvable;
  std::vector<Reason> reasons;  // Unsolvable
  std::string note;             // PaperErratum

  friend bool operator==(const RowStatus&, const RowStatus&) = default;
};

struct CatalogRow {
  BigInt mp;
  Exponent p = 0;
  Exponent p_plus_2 = 0;
  Exponent q = 0;
  BigInt mq;
  BigInt two_p_plus_1;
  BigInt l;
  std::optional<Solution> solution;
  RowStatus status;
  std::optional<unsigned> paper_row;  // 1-based row of the published table, if any

  EquationInstance instance() const {
    return EquationInstance::from_exponents(p, q, l);
  }

  friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

/// A row exactly as printed in a published table.
struct PrintedRow {
  std::uint64_t mp;
  Exponent p;
  Exponent p_plus_2;
  Exponent q;
  std::uint64_t mq;
  std::uint64_t two_p_plus_1;
  std::uint64_t l;
  std::optional<std::array<std::uint64_t, 3>> xyz;
};

inline const std::vector<PrintedRow>& printed_table1() {
  static const std::vector<PrintedRow> rows{
      {3, 2, 4, 2, 3, 5, 5, std::array<std::uint64_t, 3>{2, 2, 1}},
      {7, 3, 5, 5, 7, 9, 3, std::array<std::uint64_t, 3>{2, 1, 3}},
      {31, 5, 7, 7, 31, 33, 3, std::array<std::uint64_t, 3>{2, 1, 11}},
      {31, 5, 7, 7, 31, 33, 11, std::array<std::uint64_t, 3>{2, 1, 3}},
      {127, 7, 9, 3, 7, 129, 3, std::array<std::uint64_t, 3>{2, 1, 43}},
      {127, 7, 9, 3, 7, 129, 43, std::array<std::uint64_t, 3>{2, 1, 3}},
  };
  return rows;
}

inline const std::vector<PrintedRow>& printed_table2() {
  static const std::vector<PrintedRow> rows{
      {3, 2, 4, 5, 31, 5, 3, std::nullopt},
      {7, 3, 5, 7, 127, 9, 5, std::nullopt},
      {31, 5, 7, 3, 7, 33, 7, std::nullopt},
      {127, 7, 9, 5, 31, 129, 13, std::nullopt},
  };
  return rows;
}

/// Thrown when the closed form and the bounded search disagree while building a catalog.
class DiscrepancyError : public std::runtime_error {
 public:
  explicit DiscrepancyError(TheoremDiscrepancy report)
      : std::runtime_error("solver and brute-force search disagree for p=" + std::to_string(report.instance.p()) +
                           " q=" + std::to_string(report.instance.q()) + " l=" + report.instance.l().str()),
        report_(std::move(report)) {}

  const TheoremDiscrepancy& report() const { return report_; }

 private:
  TheoremDiscrepancy report_;
};

namespace detail {

inline CatalogRow row_skeleton(const EquationInstance& inst) {
  CatalogRow row;
  row.mp = inst.mp().value();
  row.p = inst.p();
  row.p_plus_2 = inst.p() + 2;
  row.q = inst.q();
  row.mq = inst.mq().value();
  row.two_p_plus_1 = pow2(inst.p()) + 1;
  row.l = inst.l();
  return row;
}

inline std::string xyz_text(Exponent x, Exponent y, const BigInt& z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + z.str() + ")";
}

/// Lists every field where the printed row disagrees with the computed one.
inline std::string printed_differences(const CatalogRow& row, const PrintedRow& printed) {
  std::vector<std::string> diffs;
  auto check = [&](const char* name, const BigInt& computed, std::uint64_t shown) {
    if (computed != shown) diffs.push_back(std::string("paper prints ") + name + "=" + std::to_string(shown) +
                                           ", computed " + computed.str());
  };
  check("M_p", row.mp, printed.mp);
  check("p+2", row.p_plus_2, printed.p_plus_2);
  check("M_q", row.mq, printed.mq);
  check("2^p+1", row.two_p_plus_1, printed.two_p_plus_1);
  if (printed.xyz && row.solution) {
    const auto& [x, y, z] = *printed.xyz;
    const auto& s = *row.solution;
    if (s.x != x || s.y != y || s.z != z)
      diffs.push_back("paper prints (x,y,z)=" + xyz_text(static_cast<Exponent>(x), static_cast<Exponent>(y), z) +
                      ", computed " + xyz_text(s.x, s.y, s.z));
  }
  std::string out;
  for (const auto& d : diffs) out += (out.empty() ? "" : "; ") + d;
  return out;
}

inline void annotate_against(CatalogRow& row, const std::vector<PrintedRow>& printed) {
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const auto& pr = printed[i];
    if (pr.p != row.p || pr.q != row.q || BigInt(pr.l) != row.l) continue;
    row.paper_row = static_cast<unsigned>(i + 1);
    if (auto diff = printed_differences(row, pr); !diff.empty()) {
      row.status.kind = RowStatusKind::PaperErratum;
      row.status.note = std::move(diff);
    }
    return;
  }
}

}  // namespace detail

/// Every (M_p, M_q, l) with p <= p_limit that has the x = 2 positive solution,
/// ascending by (p, q, l).
inline std::vector<CatalogRow> enumerate_solvable(Exponent p_limit, const FactorLimits& limits = {}) {
  if (p_limit < 2) throw std::invalid_argument("p_limit must be >= 2");
  std::vector<CatalogRow> rows;
  for (Exponent p : mersenne_exponents(p_limit)) {
    const auto mp = MersennePrime::from_exponent(p);
    const auto ls = admissible_l(mp, limits);
    for (Exponent q : admissible_q(mp)) {
      const auto mq = MersennePrime::from_exponent(q);
      for (const auto& l : ls) {
        const EquationInstance inst(mp, mq, l);
        const SolutionSet set = solve_odd(inst);
        CatalogRow row = detail::row_skeleton(inst);
        for (const auto& s : set.solutions)
          if (s.case_label == CaseLabel::T2CaseIII) row.solution = s;
        if (!row.solution) throw std::logic_error("admissible (q, l) without a positive solution");
        detail::annotate_against(row, printed_table1());
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

/// The solvable catalog up to p_limit; rows matching the published solvable
/// table carry paper_row and, where the print is wrong, PaperErratum.
inline std::vector<CatalogRow> table1(Exponent p_limit, const FactorLimits& limits = {}) {
  return enumerate_solvable(p_limit, limits);
}

/// The four published unsolvable instances, each confirmed empty by the
/// solver and by brute force at `bounds`.
inline std::vector<CatalogRow> table2(const SearchBounds& bounds = {}) {
  std::vector<CatalogRow> rows;
  for (std::size_t i = 0; i < printed_table2().size(); ++i) {
    const auto& pr = printed_table2()[i];
    const auto inst = EquationInstance::from_exponents(pr.p, pr.q, pr.l);
    const SolutionSet set = classify(inst);
    auto report = cross_check(inst, bounds);
    if (!report.empty()) throw DiscrepancyError(std::move(report));

    CatalogRow row = detail::row_skeleton(inst);
    row.paper_row = static_cast<unsigned>(i + 1);
    if (set.empty()) {
      row.status.kind = RowStatusKind::Unsolvable;
      row.status.reasons = set.nonexistence_reasons;
    } else {
      row.solution = set.solutions.front();
    }
    if (auto diff = detail::printed_differences(row, pr); !diff.empty()) {
      row.status.kind = RowStatusKind::PaperErratum;
      row.status.note = std::move(diff);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mdioph
