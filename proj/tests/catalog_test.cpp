#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "mdioph/catalog.hpp"

using namespace mdioph;

namespace {

const CatalogRow* find_row(const std::vector<CatalogRow>& rows, Exponent p, Exponent q, unsigned l) {
  auto it = std::find_if(rows.begin(), rows.end(),
                         [&](const CatalogRow& r) { return r.p == p && r.q == q && r.l == l; });
  return it == rows.end() ? nullptr : &*it;
}

void expect_fields(const CatalogRow& r, unsigned mp, Exponent p, Exponent p2, Exponent q, unsigned mq, unsigned tp1,
                   unsigned l, Exponent x, Exponent y, unsigned z) {
  EXPECT_EQ(r.mp, mp);
  EXPECT_EQ(r.p, p);
  EXPECT_EQ(r.p_plus_2, p2);
  EXPECT_EQ(r.q, q);
  EXPECT_EQ(r.mq, mq);
  EXPECT_EQ(r.two_p_plus_1, tp1);
  EXPECT_EQ(r.l, l);
  ASSERT_TRUE(r.solution);
  EXPECT_EQ(r.solution->x, x);
  EXPECT_EQ(r.solution->y, y);
  EXPECT_EQ(r.solution->z, z);
}

}  // namespace

TEST(Table1, RowsUpToSeven) {
  const auto rows = table1(7);
  ASSERT_EQ(rows.size(), 6u);

  expect_fields(rows[0], 3, 2, 4, 2, 3, 5, 5, 2, 2, 1);
  EXPECT_EQ(rows[0].status.kind, RowStatusKind::Solvable);
  EXPECT_EQ(rows[0].paper_row, 1u);

  // Printed with M_q = 7 although q = 5.
  expect_fields(rows[1], 7, 3, 5, 5, 31, 9, 3, 2, 1, 3);
  EXPECT_EQ(rows[1].status.kind, RowStatusKind::PaperErratum);
  EXPECT_NE(rows[1].status.note.find("paper prints M_q=7"), std::string::npos);

  // Printed with M_q = 31 although q = 7 (M_7 = 127).
  const auto* r4 = find_row(rows, 5, 7, 11);
  ASSERT_NE(r4, nullptr);
  expect_fields(*r4, 31, 5, 7, 7, 127, 33, 11, 2, 1, 3);
  EXPECT_EQ(r4->paper_row, 4u);
  EXPECT_EQ(r4->status.kind, RowStatusKind::PaperErratum);
  EXPECT_NE(r4->status.note.find("paper prints M_q=31"), std::string::npos);

  // Printed as (2,1,43); y = (7 + 2) / 3 = 3.
  const auto* r5 = find_row(rows, 7, 3, 3);
  ASSERT_NE(r5, nullptr);
  expect_fields(*r5, 127, 7, 9, 3, 7, 129, 3, 2, 3, 43);
  EXPECT_NE(r5->status.note.find("paper prints (x,y,z)=(2,1,43)"), std::string::npos);

  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].paper_row, i + 1);
}

TEST(Table1, EveryRowVerifies) {
  for (const auto& r : table1(31)) {
    ASSERT_TRUE(r.solution);
    EXPECT_TRUE(verify(r.instance(), *r.solution)) << r.p << "," << r.q << "," << r.l;
    EXPECT_EQ(r.p_plus_2, r.p + 2);
    EXPECT_EQ(r.two_p_plus_1, pow2(r.p) + 1);
  }
}

TEST(EnumerateSolvable, Limits) {
  EXPECT_EQ(enumerate_solvable(2).size(), 1u);
  EXPECT_EQ(enumerate_solvable(4).size(), 2u);

  const auto rows13 = enumerate_solvable(13);
  EXPECT_NE(find_row(rows13, 13, 3, 3), nullptr);
  EXPECT_NE(find_row(rows13, 13, 5, 3), nullptr);
  EXPECT_EQ(find_row(rows13, 13, 3, 3)->status.kind, RowStatusKind::Solvable);
  EXPECT_FALSE(find_row(rows13, 13, 3, 3)->paper_row);

  EXPECT_THROW(enumerate_solvable(1), std::invalid_argument);
}

TEST(EnumerateSolvable, SortedByPQL) {
  const auto rows = enumerate_solvable(61);
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), [](const CatalogRow& a, const CatalogRow& b) {
    return std::tie(a.p, a.q, a.l) < std::tie(b.p, b.q, b.l);
  }));
  for (const auto& r : rows) EXPECT_TRUE(verify(r.instance(), *r.solution));
}

TEST(EnumerateSolvable, CapExceededPastSixtyFourBits) {
  EXPECT_THROW(enumerate_solvable(89), CapExceeded);
  EXPECT_NO_THROW(enumerate_solvable(89, FactorLimits{pow2(96)}));
}

TEST(Table2, FourUnsolvableInstances) {
  const auto rows = table2();
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.status.kind, RowStatusKind::Unsolvable);
    EXPECT_FALSE(r.solution);
    EXPECT_TRUE(brute_force(r.instance(), SearchBounds{}).empty());
  }
  auto has = [](const CatalogRow& r, ReasonKind k) {
    return std::any_of(r.status.reasons.begin(), r.status.reasons.end(), [k](const Reason& x) { return x.kind == k; });
  };
  // 3^x + 32^y = (3z)^2
  EXPECT_EQ(rows[0].mq, 31);
  EXPECT_TRUE(has(rows[0], ReasonKind::QNotDividesPPlus2));
  // 7^x + 128^y = (5z)^2
  EXPECT_EQ(rows[1].mq, 127);
  EXPECT_TRUE(has(rows[1], ReasonKind::QNotDividesPPlus2));
  // 31^x + 8^y = (7z)^2
  EXPECT_TRUE(has(rows[2], ReasonKind::QNotDividesPPlus2));
  EXPECT_TRUE(has(rows[2], ReasonKind::LNotDividesTwoPPlus1));
  // 127^x + 32^y = (13z)^2
  EXPECT_TRUE(has(rows[3], ReasonKind::LNotDividesTwoPPlus1));
  EXPECT_EQ(rows[3].l, 13);
}
