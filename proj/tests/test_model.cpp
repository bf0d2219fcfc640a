#include <gtest/gtest.h>

#include "ddic/error.hpp"
#include "ddic/model.hpp"
#include "ddic/store.hpp"
#include "support/fixture.hpp"

using namespace ddic;

namespace {

BeliefAtom belief(Polarity p, Modal m) { return {p, m, ActionId{0}, ContextFormula::top(), 3}; }

StatusLabel label(std::initializer_list<BeliefAtom> atoms) {
  const std::vector<BeliefAtom> v(atoms);
  return label_of(v);
}

constexpr auto kPos = Polarity::Positive;
constexpr auto kNeg = Polarity::Negative;

}  // namespace

TEST(Label, Precedence) {
  EXPECT_EQ(label({}), StatusLabel::Unknown);
  EXPECT_EQ(label({belief(kPos, Modal::Obl), belief(kNeg, Modal::Imp)}), StatusLabel::Obligatory);
  EXPECT_EQ(label({belief(kPos, Modal::Imp), belief(kNeg, Modal::Obl)}), StatusLabel::Impermissible);
  EXPECT_EQ(label({belief(kNeg, Modal::Obl), belief(kNeg, Modal::Imp), belief(kPos, Modal::Opt)}),
            StatusLabel::Optional);
  EXPECT_EQ(label({belief(kNeg, Modal::Obl)}), StatusLabel::NonObligatory);
  EXPECT_EQ(label({belief(kNeg, Modal::Imp)}), StatusLabel::NonImpermissible);
  EXPECT_EQ(label({belief(kPos, Modal::Opt)}), StatusLabel::Unknown);
  EXPECT_EQ(label({belief(kPos, Modal::Obl), belief(kNeg, Modal::Obl)}), StatusLabel::Inconsistent);
  EXPECT_EQ(label({belief(kPos, Modal::Imp), belief(kNeg, Modal::Imp), belief(kPos, Modal::Obl)}),
            StatusLabel::Inconsistent);
}

TEST(Label, PositiveObligationAndProhibitionTogetherIsObligatory) {
  // Not complementary atoms, so not Inconsistent by the atom-level reading.
  EXPECT_EQ(label({belief(kPos, Modal::Obl), belief(kPos, Modal::Imp)}), StatusLabel::Obligatory);
}

TEST(Label, MixedTriplesViolateTheContract) {
  auto other = belief(kNeg, Modal::Imp);
  other.behavior = ActionId{1};
  EXPECT_THROW(label({belief(kPos, Modal::Obl), other}), ContractError);
  auto later = belief(kNeg, Modal::Imp);
  later.time = 4;
  EXPECT_THROW(label({belief(kPos, Modal::Obl), later}), ContractError);
}

TEST(Atoms, ComplementFlipsOnlyPolarity) {
  const auto s = fixture::cooking();
  const auto a = fixture::stated(s, Modal::Imp, "HC", "Morning", 2);
  const auto c = complement(a);
  EXPECT_EQ(c.polarity, kNeg);
  EXPECT_EQ(c.modal, a.modal);
  EXPECT_EQ(c.behavior, a.behavior);
  EXPECT_EQ(complement(c), a);
}

TEST(Atoms, CompareIgnoresOrigin) {
  const auto s = fixture::cooking();
  auto a = fixture::stated(s, Modal::Obl, "HC", "Monday", 1);
  auto b = a;
  b.origin = Origin::Derived;
  EXPECT_EQ(compare(a, b), 0);
  b.time = 2;
  EXPECT_LT(compare(a, b), 0);
}

TEST(Atoms, Rendering) {
  const auto s = fixture::cooking();
  const auto& ont = s.ontology();
  EXPECT_EQ(to_string(fixture::stated(s, Modal::Obl, "HC", "Monday", 1), ont), "Öbl(HC, Monday, 1)");
  EXPECT_EQ(to_string(complement(fixture::stated(s, Modal::Imp, "HCV", "Morning", 2)), ont), "¬Ïmp(HCV, Morning, 2)");
  EXPECT_EQ(to_string(fixture::stated(s, Modal::Opt, "C", "true", 0), ont), "Öpt(C, true, 0)");
  const BeliefAtom b{kNeg, Modal::Obl, ont.id("CV"), fixture::kDelta, 3};
  EXPECT_EQ(to_string(b, ont), "¬Obl(CV, Monday & Morning, 3)");
  const std::vector<ActionId> path{ont.id("HCV"), ont.id("HC"), ont.id("C")};
  EXPECT_EQ(path_string(path, ont), "HCV -> HC -> C");
}

TEST(Store, ValidatesAndOrdersTestimony) {
  const auto s = fixture::cooking();
  const auto late = fixture::with(s, Modal::Obl, "HC", "Monday", 5);
  const auto both = fixture::with(late, Modal::Imp, "C", "Morning", 2);
  ASSERT_EQ(both.testimony().size(), 2U);
  EXPECT_EQ(both.testimony()[0].time, 2U);
  EXPECT_EQ(both.max_time(), 5U);
  EXPECT_EQ(s.testimony().size(), 0U);
  EXPECT_FALSE(s.max_time().has_value());

  EXPECT_THROW((void)s.assert_testimony(complement(fixture::stated(s, Modal::Obl, "HC", "Monday", 1))), ContractError);
  auto derived = fixture::stated(s, Modal::Obl, "HC", "Monday", 1);
  derived.origin = Origin::Derived;
  EXPECT_THROW((void)s.assert_testimony(derived), ContractError);
  EXPECT_THROW((void)s.assert_testimony(Modal::Obl, ActionId{42}, ContextFormula::top(), 1), DeclarationError);
  EXPECT_THROW((void)s.assert_testimony(Modal::Obl, s.ontology().id("HC"), ContextFormula::atom("Tuesday"), 1),
               DeclarationError);
}

TEST(Store, EqualTimesKeepInsertionOrder) {
  auto s = fixture::cooking();
  s = fixture::with(s, Modal::Obl, "HC", "Monday", 1);
  s = fixture::with(s, Modal::Imp, "C", "Monday", 1);
  s = fixture::with(s, Modal::Opt, "H", "Monday", 1);
  ASSERT_EQ(s.testimony().size(), 3U);
  EXPECT_EQ(s.testimony()[0].modal, Modal::Obl);
  EXPECT_EQ(s.testimony()[1].modal, Modal::Imp);
  EXPECT_EQ(s.testimony()[2].modal, Modal::Opt);
}
