#include <bit>

#include <gtest/gtest.h>

#include "posetkit/core.hpp"
#include "posetkit/decomp.hpp"
#include "posetkit/gen.hpp"
#include "posetkit/oracle.hpp"
#include "testing.hpp"

using namespace posetkit;
using posetkit::testing::bits_from_mask;
using posetkit::testing::divisor6;
using posetkit::testing::labels_of;
using posetkit::testing::make_poset;
using posetkit::testing::subset_of;

namespace {

ElementId at(const FinitePoset& p, const std::string& label) { return p.id(label); }

FinitePoset antichain_abc() { return make_poset({"a", "b", "c"}, {}); }

Errc error_code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::InvariantBroken;
}

}  // namespace

// ----------------------------------------------------------------------------
// build_poset

TEST(BuildPoset, SingletonIsReflexive) {
  const auto p = make_poset({"a"}, {});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.leq(at(p, "a"), at(p, "a")));
}

TEST(BuildPoset, CoverPairsAreClosedTransitively) {
  const auto p = divisor6();
  EXPECT_TRUE(p.leq(at(p, "1"), at(p, "6")));
  EXPECT_FALSE(p.leq(at(p, "2"), at(p, "3")));
  EXPECT_FALSE(p.leq(at(p, "6"), at(p, "1")));
}

TEST(BuildPoset, TwoCycleIsNotAntisymmetric) {
  std::vector<std::pair<std::string, std::string>> pairs{{"a", "b"}, {"b", "a"}};
  try {
    build_poset({"a", "b"}, pairs, RelationKind::cover);
    FAIL() << "expected NotAntisymmetric";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAntisymmetric);
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(e.witness()->a, 0u);
    EXPECT_EQ(e.witness()->b, 1u);
  }
}

TEST(BuildPoset, LongCycleIsNotAntisymmetric) {
  std::vector<std::pair<std::string, std::string>> pairs{{"a", "b"}, {"b", "c"}, {"c", "a"}};
  EXPECT_EQ(error_code_of([&] { build_poset({"a", "b", "c"}, pairs, RelationKind::cover); }),
            Errc::NotAntisymmetric);
}

TEST(BuildPoset, LabelErrors) {
  std::vector<std::pair<std::string, std::string>> none;
  std::vector<std::pair<std::string, std::string>> unknown{{"a", "z"}};
  EXPECT_EQ(error_code_of([&] { build_poset({"a", "a"}, none, RelationKind::cover); }), Errc::DuplicateLabel);
  EXPECT_EQ(error_code_of([&] { build_poset({"a"}, unknown, RelationKind::cover); }), Errc::UnknownLabel);
  EXPECT_EQ(error_code_of([&] { build_poset({}, none, RelationKind::cover); }), Errc::EmptyCarrier);
}

TEST(BuildPoset, ReflexivePairsAreIgnoredForCoverKind) {
  std::vector<std::pair<std::string, std::string>> pairs{{"a", "a"}, {"a", "b"}};
  const auto p = build_poset({"a", "b"}, pairs, RelationKind::cover);
  EXPECT_TRUE(p.leq(ElementId{0}, ElementId{1}));
}

TEST(BuildPoset, FullKindReportsEachAxiom) {
  std::vector<std::pair<std::string, std::string>> not_reflexive{{"a", "a"}};
  EXPECT_EQ(error_code_of([&] { build_poset({"a", "b"}, not_reflexive, RelationKind::full); }),
            Errc::NotReflexive);

  std::vector<std::pair<std::string, std::string>> not_transitive{
      {"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}};
  try {
    build_poset({"a", "b", "c"}, not_transitive, RelationKind::full);
    FAIL() << "expected NotTransitive";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotTransitive);
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(e.witness()->a, 0u);
    EXPECT_EQ(e.witness()->b, 2u);
    EXPECT_EQ(e.witness()->via, std::optional<std::size_t>{1});
  }
}

TEST(BuildPoset, FullKindIsExactlyTheGivenPairs) {
  std::vector<std::pair<std::string, std::string>> pairs{{"a", "a"}, {"b", "b"}, {"a", "b"}};
  const auto p = build_poset({"a", "b"}, pairs, RelationKind::full);
  EXPECT_TRUE(p.leq(ElementId{0}, ElementId{1}));
  EXPECT_FALSE(p.leq(ElementId{1}, ElementId{0}));
}

TEST(BuildPoset, CoverThenFullRoundTripIsIdempotent) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = generate(GenSpec{GenKind::random_dag, 9, 1, seed, 0.3, 0});
    std::vector<std::pair<std::string, std::string>> full;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p.leq(ElementId{i}, ElementId{j})) full.emplace_back(p.labels()[i], p.labels()[j]);
      }
    }
    EXPECT_EQ(build_poset(p.labels(), full, RelationKind::full), p) << "seed " << seed;
  }
}

// ----------------------------------------------------------------------------
// comparable / predicates

TEST(Comparable, DivisorExamples) {
  const auto p = divisor6();
  EXPECT_TRUE(comparable(p, at(p, "2"), at(p, "6")));
  EXPECT_FALSE(comparable(p, at(p, "2"), at(p, "3")));
  for (std::size_t x = 0; x < p.size(); ++x) EXPECT_TRUE(comparable(p, ElementId{x}, ElementId{x}));
}

TEST(Comparable, OutsideCarrier) {
  const auto p = divisor6();
  EXPECT_EQ(error_code_of([&] { comparable(p, ElementId{0}, ElementId{9}); }), Errc::ElementNotInCarrier);
}

TEST(Predicates, ChainExamples) {
  const auto p = divisor6();
  EXPECT_TRUE(is_chain(p, subset_of(p, {"1", "2", "6"})));
  EXPECT_FALSE(is_chain(p, subset_of(p, {"2", "3"})));
  EXPECT_FALSE(is_chain(p, ElementSubset(p, std::vector<std::size_t>{})));
  EXPECT_FALSE(is_chain(p, ElementSubset(p, std::vector<std::size_t>{0, 7})));
}

TEST(Predicates, AntichainExamples) {
  const auto p = divisor6();
  EXPECT_TRUE(is_antichain(p, subset_of(p, {"2", "3"})));
  EXPECT_FALSE(is_antichain(p, subset_of(p, {"1", "2"})));
  for (std::size_t x = 0; x < p.size(); ++x) {
    EXPECT_TRUE(is_antichain(p, ElementSubset(p, std::vector<std::size_t>{x})));
  }
}

TEST(Predicates, ForeignSubsetIsRejected) {
  const auto p = divisor6();
  const auto q = make_poset({"x", "y"}, {});
  EXPECT_FALSE(is_antichain(p, ElementSubset(q, std::vector<std::size_t>{0, 1})));
}

TEST(Predicates, ChainAndAntichainOnlyForSingletons) {
  for (const auto& entry : posetkit::testing::exhaustive_corpus()) {
    const auto& p = entry.poset;
    for (std::uint32_t mask = 0; mask < (1U << p.size()); ++mask) {
      const ElementSubset e(p, bits_from_mask(p, mask));
      if (is_chain(p, e) && is_antichain(p, e)) EXPECT_EQ(e.size(), 1u) << entry.name;
    }
  }
}

TEST(Predicates, ChainMeetsAntichainAtMostOnce) {
  auto check = [](const FinitePoset& p, const std::string& name) {
    std::vector<std::uint32_t> chains;
    std::vector<std::uint32_t> antichains;
    for (std::uint32_t mask = 1; mask < (1U << p.size()); ++mask) {
      const ElementSubset e(p, bits_from_mask(p, mask));
      if (is_chain(p, e)) chains.push_back(mask);
      if (is_antichain(p, e)) antichains.push_back(mask);
    }
    for (auto c : chains) {
      for (auto a : antichains) EXPECT_LE(std::popcount(c & a), 1) << name;
    }
  };
  for (const auto& entry : posetkit::testing::exhaustive_corpus()) check(entry.poset, entry.name);
  for (const auto& entry : posetkit::testing::random_corpus(60, 7000)) check(entry.poset, entry.name);
}

// ----------------------------------------------------------------------------
// extremal elements

TEST(Extremal, MaximalExamples) {
  EXPECT_EQ(labels_of(maximal_elements(divisor6()).subset()), (std::vector<std::string>{"6"}));
  EXPECT_EQ(labels_of(maximal_elements(antichain_abc()).subset()), (std::vector<std::string>{"a", "b", "c"}));
  const auto b2 = generate(GenSpec{GenKind::boolean_lattice, 2});
  EXPECT_EQ(labels_of(maximal_elements(b2).subset()), (std::vector<std::string>{"{0,1}"}));
}

TEST(Extremal, MinimalExamples) {
  EXPECT_EQ(labels_of(minimal_elements(divisor6()).subset()), (std::vector<std::string>{"1"}));
  const auto chain = generate(GenSpec{GenKind::total_order, 5});
  EXPECT_EQ(labels_of(minimal_elements(chain).subset()), (std::vector<std::string>{"c0"}));
  const auto vee = make_poset({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
  EXPECT_EQ(labels_of(minimal_elements(vee).subset()), (std::vector<std::string>{"c"}));
}

TEST(Extremal, MinimalBelowAndMaximalAbove) {
  const auto p = divisor6();
  EXPECT_EQ(p.label(minimal_below(p, at(p, "6"))), "1");
  EXPECT_EQ(p.label(maximal_above(p, at(p, "1"))), "6");

  const auto q = antichain_abc();
  EXPECT_EQ(q.label(minimal_below(q, at(q, "b"))), "b");
  EXPECT_EQ(q.label(maximal_above(q, at(q, "a"))), "a");

  const auto wedge = make_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  EXPECT_EQ(wedge.label(minimal_below(wedge, at(wedge, "c"))), "a");
  const auto vee = make_poset({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
  EXPECT_EQ(vee.label(maximal_above(vee, at(vee, "c"))), "a");

  EXPECT_EQ(error_code_of([&] { minimal_below(p, ElementId{4}); }), Errc::ElementNotInCarrier);
  EXPECT_EQ(error_code_of([&] { maximal_above(p, ElementId{4}); }), Errc::ElementNotInCarrier);
}

TEST(Extremal, InvariantsOverCorpus) {
  auto corpus = posetkit::testing::exhaustive_corpus();
  for (auto& e : posetkit::testing::random_corpus(200, 11)) corpus.push_back(std::move(e));
  for (const auto& entry : corpus) {
    const auto& p = entry.poset;
    const auto maxima = maximal_elements(p);
    const auto minima = minimal_elements(p);
    ASSERT_GE(maxima.size(), 1u) << entry.name;
    ASSERT_GE(minima.size(), 1u) << entry.name;
    for (std::size_t x = 0; x < p.size(); ++x) {
      const ElementId id{x};
      const auto below = minimal_below(p, id);
      const auto above = maximal_above(p, id);
      EXPECT_TRUE(p.leq(below, id)) << entry.name;
      EXPECT_TRUE(p.leq(id, above)) << entry.name;
      EXPECT_TRUE(minima.subset().contains(below.index)) << entry.name;
      EXPECT_TRUE(maxima.subset().contains(above.index)) << entry.name;
    }
  }
}

// ----------------------------------------------------------------------------
// up_down_split

TEST(UpDownSplit, DivisorExample) {
  const auto p = divisor6();
  const auto pivot = Antichain::make(subset_of(p, {"2", "3"}));
  ASSERT_TRUE(pivot);
  const auto split = up_down_split(p, *pivot);
  EXPECT_EQ(labels_of(split.up), (std::vector<std::string>{"2", "3", "6"}));
  EXPECT_EQ(labels_of(split.down), (std::vector<std::string>{"1", "2", "3"}));
}

TEST(UpDownSplit, ChainMiddleElement) {
  const auto p = generate(GenSpec{GenKind::total_order, 5});
  const auto pivot = Antichain::make(subset_of(p, {"c2"}));
  const auto split = up_down_split(p, *pivot);
  EXPECT_EQ(labels_of(split.up), (std::vector<std::string>{"c2", "c3", "c4"}));
  EXPECT_EQ(labels_of(split.down), (std::vector<std::string>{"c0", "c1", "c2"}));
}

TEST(UpDownSplit, NonMaximumAntichainDoesNotCover) {
  const auto p = divisor6();
  const auto pivot = Antichain::make(subset_of(p, {"2"}));
  try {
    up_down_split(p, *pivot);
    FAIL() << "expected SplitNotCovering";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SplitNotCovering);
    ASSERT_TRUE(e.witness());
    EXPECT_EQ(p.label(ElementId{e.witness()->a}), "3");
  }
}

TEST(UpDownSplit, PropertiesOnEveryMaximumAntichain) {
  auto corpus = posetkit::testing::exhaustive_corpus();
  for (auto& e : posetkit::testing::random_corpus(150, 300)) corpus.push_back(std::move(e));
  for (const auto& entry : corpus) {
    const auto& p = entry.poset;
    const std::size_t m = oracle::brute_max_antichain(p).size();
    const Bits maxima = maximal_elements(p).subset().to_bits();
    const Bits minima = minimal_elements(p).subset().to_bits();
    for (std::uint32_t mask = 1; mask < (1U << p.size()); ++mask) {
      const Bits bits = bits_from_mask(p, mask);
      if (bits.count() != m || !is_antichain_mask(p, bits)) continue;
      const auto split = up_down_split(p, *Antichain::make(ElementSubset(p, bits)));
      const Bits up = split.up.to_bits();
      const Bits down = split.down.to_bits();
      EXPECT_TRUE(bits.is_subset_of(up & down)) << entry.name;
      EXPECT_EQ(up | down, p.carrier()) << entry.name;
      if (bits != maxima && bits != minima) {
        EXPECT_NE(up, p.carrier()) << entry.name;
        EXPECT_NE(down, p.carrier()) << entry.name;
      }
    }
  }
}

// ----------------------------------------------------------------------------
// induced_subposet

TEST(InducedSubposet, Examples) {
  const auto p = divisor6();
  EXPECT_EQ(induced_subposet(p, ElementSubset(p, p.carrier())), p);

  const auto chain = induced_subposet(p, subset_of(p, {"1", "2", "6"}));
  EXPECT_EQ(chain.labels(), (std::vector<std::string>{"1", "2", "6"}));
  EXPECT_TRUE(is_chain(chain, ElementSubset(chain, chain.carrier())));

  const auto pair = induced_subposet(p, subset_of(p, {"2", "3"}));
  EXPECT_TRUE(is_antichain(pair, ElementSubset(pair, pair.carrier())));
}

TEST(InducedSubposet, Errors) {
  const auto p = divisor6();
  const auto q = make_poset({"x"}, {});
  EXPECT_EQ(error_code_of([&] { induced_subposet(p, ElementSubset(p, std::vector<std::size_t>{})); }),
            Errc::EmptySubset);
  EXPECT_EQ(error_code_of([&] { induced_subposet(p, ElementSubset(q, std::vector<std::size_t>{0})); }),
            Errc::HostMismatch);
}

// ----------------------------------------------------------------------------
// Hasse pairs

TEST(CoverPairs, CheckedAgainstTripleScan) {
  for (const auto& entry : posetkit::testing::random_corpus(120, 900)) {
    const auto& p = entry.poset;
    std::vector<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (!p.less(ElementId{x}, ElementId{y})) continue;
        bool between = false;
        for (std::size_t z = 0; z < p.size() && !between; ++z) {
          between = p.less(ElementId{x}, ElementId{z}) && p.less(ElementId{z}, ElementId{y});
        }
        if (!between) expected.emplace_back(x, y);
      }
    }
    EXPECT_EQ(cover_pairs(p), expected) << entry.name;
  }
}

TEST(CoverPairs, DivisorHasNoShortcut) {
  const auto pairs = cover_pairs(divisor6());
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(pairs, expected);
}
