#include <gtest/gtest.h>

#include "ddic/conflict.hpp"
#include "ddic/engine.hpp"
#include "ddic/error.hpp"
#include "support/fixture.hpp"

using namespace ddic;

namespace {

std::optional<ConflictReport> classify(const NormStore& s, Modal m1, const char* b1, const char* c1, Time t1,
                                       Modal m2, const char* b2, const char* c2, Time t2) {
  return classify_pair(s.ontology(), s.vocabulary(), fixture::stated(s, m1, b1, c1, t1),
                       fixture::stated(s, m2, b2, c2, t2));
}

// Conflict by definition: different modals, jointly satisfiable contexts
// and some behavior below both.
bool conflicting(const NormStore& s, const TestimonyAtom& a, const TestimonyAtom& b) {
  if (a.modal == b.modal) return false;
  if (!consistent(s.vocabulary(), a.context, b.context)) return false;
  for (const auto y : s.ontology().actions()) {
    if (s.ontology().entails(y, a.behavior) && s.ontology().entails(y, b.behavior)) return true;
  }
  return false;
}

}  // namespace

TEST(Classify, DirectIsGenuine) {
  const auto s = fixture::cooking();
  const auto r = classify(s, Modal::Obl, "HC", "Monday", 1, Modal::Imp, "HC", "Morning", 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kind, ConflictKind::Direct);
  EXPECT_TRUE(r->genuine);
  EXPECT_EQ(r->shared_behavior, fixture::id(s, "HC"));
  EXPECT_EQ(r->shared_context, fixture::kDelta);
}

TEST(Classify, GeneralObligationSpecificOptionIsNotGenuine) {
  const auto s = fixture::cooking();
  const auto r = classify(s, Modal::Obl, "C", "Monday", 1, Modal::Opt, "HC", "Morning", 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kind, ConflictKind::Indirect);
  EXPECT_FALSE(r->genuine);
  EXPECT_EQ(r->shared_behavior, fixture::id(s, "HC"));
  EXPECT_NE(r->note.find("no actual conflict"), std::string::npos);
  EXPECT_NE(r->note.find("downward"), std::string::npos);
}

TEST(Classify, IntersectingAtWitness) {
  const auto s = fixture::cooking();
  const auto r = classify(s, Modal::Imp, "CV", "Monday", 1, Modal::Opt, "HC", "Morning", 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->kind, ConflictKind::Intersecting);
  EXPECT_EQ(r->shared_behavior, fixture::id(s, "HCV"));
  EXPECT_FALSE(r->genuine);
}

TEST(Classify, NoneCases) {
  const auto s = fixture::cooking();
  EXPECT_FALSE(classify(s, Modal::Obl, "HC", "Monday", 1, Modal::Obl, "C", "Morning", 2));
  EXPECT_FALSE(classify(s, Modal::Obl, "HC", "Monday", 1, Modal::Imp, "HC", "!Monday", 2));
  EXPECT_FALSE(classify(s, Modal::Obl, "HC", "Monday", 1, Modal::Imp, "CP", "Monday", 2));
}

TEST(Classify, Errors) {
  const auto s = fixture::cooking();
  const auto a = fixture::stated(s, Modal::Obl, "HC", "Monday", 1);
  EXPECT_THROW(classify_pair(s.ontology(), s.vocabulary(), complement(a), a), ContractError);
  auto bad = a;
  bad.behavior = ActionId{77};
  EXPECT_THROW(classify_pair(s.ontology(), s.vocabulary(), bad, a), DeclarationError);
  auto ctx = a;
  ctx.context = fixture::ctx("Tuesday");
  EXPECT_THROW(classify_pair(s.ontology(), s.vocabulary(), ctx, a), DeclarationError);
}

TEST(Classify, GenuinePatternTable) {
  const auto s = fixture::cooking();
  struct Row {
    Modal general;
    Modal specific;
    bool genuine;
  };
  const Row rows[] = {
      {Modal::Obl, Modal::Opt, false}, {Modal::Opt, Modal::Imp, false}, {Modal::Obl, Modal::Imp, false},
      {Modal::Opt, Modal::Obl, true},  {Modal::Imp, Modal::Opt, true},  {Modal::Imp, Modal::Obl, true},
  };
  for (const auto& row : rows) {
    for (const Time tg : {1U, 2U}) {
      const auto r = classify(s, row.general, "C", "Monday", tg, row.specific, "HCV", "Morning", 3 - tg);
      ASSERT_TRUE(r);
      EXPECT_EQ(r->kind, ConflictKind::Indirect);
      EXPECT_EQ(r->genuine, row.genuine) << to_string(row.general) << " over " << to_string(row.specific);
      EXPECT_EQ(r->shared_behavior, fixture::id(s, "HCV"));
      EXPECT_LE(r->first.time, r->second.time);
    }
  }
}

TEST(Classify, SymmetricUpToOrder) {
  const auto s = fixture::cooking();
  const Modal modals[] = {Modal::Obl, Modal::Imp, Modal::Opt};
  for (const auto m1 : modals) {
    for (const auto m2 : modals) {
      for (const auto b1 : fixture::kNodes) {
        for (const auto b2 : fixture::kNodes) {
          for (const auto& c2 : fixture::kContextPool) {
            const auto a = fixture::stated(s, m1, b1, "Monday", 1);
            const auto b = fixture::stated(s, m2, b2, c2, 2);
            const auto ab = classify_pair(s.ontology(), s.vocabulary(), a, b);
            const auto ba = classify_pair(s.ontology(), s.vocabulary(), b, a);
            ASSERT_EQ(ab.has_value(), ba.has_value());
            ASSERT_EQ(ab.has_value(), conflicting(s, a, b));
            if (!ab) continue;
            EXPECT_EQ(ab->kind, ba->kind);
            EXPECT_EQ(ab->shared_behavior, ba->shared_behavior);
            EXPECT_TRUE(entails_ctx(s.vocabulary(), ab->shared_context, ba->shared_context));
            EXPECT_TRUE(entails_ctx(s.vocabulary(), ba->shared_context, ab->shared_context));
            EXPECT_TRUE(consistent(s.vocabulary(), ab->shared_context, ContextFormula::top()));
            EXPECT_EQ(ab->genuine, ba->genuine);
            EXPECT_EQ(ab->first, ba->first);
          }
        }
      }
    }
  }
}

TEST(Scan, OneDirectReportForDirectConflictStore) {
  auto s = fixture::with(fixture::cooking(), Modal::Obl, "HC", "Monday", 1);
  s = fixture::with(s, Modal::Imp, "HC", "Morning", 2);
  const auto reports = scan_conflicts(s);
  ASSERT_EQ(reports.size(), 1U);
  EXPECT_EQ(reports[0].kind, ConflictKind::Direct);
  EXPECT_TRUE(scan_conflicts(fixture::cooking()).empty());
}

// Stores from the direct, indirect and intersecting scenarios combined.
TEST(Scan, CombinedScenariosMatchPairwiseDefinition) {
  auto s = fixture::cooking();
  s = fixture::with(s, Modal::Obl, "HC", "Monday", 1);
  s = fixture::with(s, Modal::Imp, "HC", "Morning", 2);
  s = fixture::with(s, Modal::Obl, "C", "Monday", 3);
  s = fixture::with(s, Modal::Opt, "HC", "Morning", 4);
  s = fixture::with(s, Modal::Imp, "CV", "Monday", 5);
  s = fixture::with(s, Modal::Opt, "CP", "!Monday", 6);
  std::size_t expected = 0;
  const auto& t = s.testimony();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) expected += conflicting(s, t[i], t[j]);
  }
  const auto reports = scan_conflicts(s);
  EXPECT_EQ(reports.size(), expected);
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const auto& p = reports[i - 1];
    const auto& q = reports[i];
    const auto key = [&](const ConflictReport& r) {
      return std::make_tuple(r.first.time, r.second.time, s.ontology().name(r.shared_behavior));
    };
    EXPECT_LE(key(p), key(q));
  }
}

// Genuine pairs resolve to the later norm's modal at the shared grounds.
TEST(Classify, GenuineConflictsFollowTheLaterNorm) {
  const auto base = fixture::cooking();
  const Modal modals[] = {Modal::Obl, Modal::Imp, Modal::Opt};
  int genuine = 0;
  for (const auto m1 : modals) {
    for (const auto m2 : modals) {
      for (const auto b1 : fixture::kNodes) {
        for (const auto b2 : fixture::kNodes) {
          const auto r = classify_pair(base.ontology(), base.vocabulary(), fixture::stated(base, m1, b1, "Monday", 1),
                                       fixture::stated(base, m2, b2, "Morning", 2));
          if (!r || !r->genuine) continue;
          ++genuine;
          auto s = fixture::with(base, m1, b1, "Monday", 1);
          s = fixture::with(s, m2, b2, "Morning", 2);
          const auto want = m2 == Modal::Obl   ? StatusLabel::Obligatory
                            : m2 == Modal::Imp ? StatusLabel::Impermissible
                                               : StatusLabel::Optional;
          EXPECT_EQ(query_status(s, r->shared_behavior, r->shared_context, 3).label, want)
              << to_string(m1) << "(" << b1 << ") then " << to_string(m2) << "(" << b2 << ")";
        }
      }
    }
  }
  EXPECT_GT(genuine, 0);
}
