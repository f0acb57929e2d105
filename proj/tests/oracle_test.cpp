#include <algorithm>

#include <gtest/gtest.h>

#include "posetkit/decomp.hpp"
#include "posetkit/gen.hpp"
#include "posetkit/oracle.hpp"
#include "testing.hpp"

using namespace posetkit;
using namespace posetkit::oracle;
using posetkit::testing::divisor6;
using posetkit::testing::labels_of;
using posetkit::testing::make_poset;
using posetkit::testing::subset_of;

namespace {

FinitePoset gen(GenKind kind, std::size_t n, std::size_t m = 1) {
  GenSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.m = m;
  return generate(spec);
}

CoverFamily chains(const FinitePoset& p, std::vector<std::vector<std::string>> parts) {
  CoverFamily cover{p, {}, Flavor::chain_cover};
  for (const auto& part : parts) cover.parts.push_back(subset_of(p, part));
  return cover;
}

CoverFamily antichains(const FinitePoset& p, std::vector<std::vector<std::string>> parts) {
  auto cover = chains(p, std::move(parts));
  cover.flavor = Flavor::antichain_cover;
  return cover;
}

}  // namespace

// ----------------------------------------------------------------------------
// Subset DP and brute-force searches

TEST(BruteSizes, Examples) {
  EXPECT_EQ(brute_min_chain_cover_size(divisor6()), 2u);
  EXPECT_EQ(brute_min_antichain_cover_size(divisor6()), 3u);
  EXPECT_EQ(brute_min_chain_cover_size(gen(GenKind::antichain, 5)), 5u);
  EXPECT_EQ(brute_min_chain_cover_size(gen(GenKind::total_order, 5)), 1u);
  EXPECT_EQ(brute_min_antichain_cover_size(gen(GenKind::total_order, 5)), 5u);
  EXPECT_EQ(brute_min_chain_cover_size(make_poset({"x"}, {})), 1u);
}

TEST(BruteSizes, RejectOversizedInput) {
  const auto big = gen(GenKind::antichain, kSubsetDpLimit + 1);
  EXPECT_THROW(brute_min_chain_cover_size(big), Error);
  EXPECT_THROW(brute_min_antichain_cover_size(big), Error);
  EXPECT_THROW(brute_max_antichain(gen(GenKind::antichain, kMaxAntichainLimit + 1)), Error);
  EXPECT_NO_THROW(brute_max_antichain(gen(GenKind::antichain, kMaxAntichainLimit)));
}

TEST(BruteMaxAntichain, Examples) {
  EXPECT_EQ(labels_of(brute_max_antichain(divisor6()).subset()), (std::vector<std::string>{"2", "3"}));
  EXPECT_EQ(labels_of(brute_max_antichain(make_poset({"x"}, {})).subset()), (std::vector<std::string>{"x"}));
  const auto b3 = brute_max_antichain(gen(GenKind::boolean_lattice, 3)).subset().members();
  // Both rank layers of B3 have three elements.
  const bool middle = b3 == std::vector<std::size_t>{1, 2, 4} || b3 == std::vector<std::size_t>{3, 5, 6};
  EXPECT_TRUE(middle);
}

TEST(BruteMaxChain, Examples) {
  EXPECT_EQ(brute_max_chain(divisor6()).size(), 3u);
  EXPECT_TRUE(is_chain(divisor6(), brute_max_chain(divisor6()).subset()));
  EXPECT_EQ(brute_max_chain(gen(GenKind::antichain, 4)).size(), 1u);
  EXPECT_EQ(brute_max_chain(gen(GenKind::grid, 2, 3)).size(), 4u);
}

TEST(BruteMaxChain, DivisorChainIsOneOfTwo) {
  const auto c = labels_of(brute_max_chain(divisor6()).subset());
  const bool ok = c == std::vector<std::string>{"1", "2", "6"} || c == std::vector<std::string>{"1", "3", "6"};
  EXPECT_TRUE(ok);
}

TEST(BruteSearches, AgreeWithExhaustiveScans) {
  auto corpus = posetkit::testing::exhaustive_corpus();
  for (auto& e : posetkit::testing::random_corpus(150, 900)) corpus.push_back(std::move(e));
  for (const auto& entry : corpus) {
    EXPECT_EQ(brute_max_antichain(entry.poset).size(), posetkit::testing::exhaustive_max_antichain_size(entry.poset))
        << entry.name;
    EXPECT_EQ(brute_max_chain(entry.poset).size(), posetkit::testing::exhaustive_max_chain_size(entry.poset))
        << entry.name;
  }
}

TEST(BruteSearches, TheoremsHoldBetweenOracles) {
  auto corpus = posetkit::testing::exhaustive_corpus();
  for (auto& e : posetkit::testing::random_corpus(150, 1900)) corpus.push_back(std::move(e));
  for (const auto& entry : corpus) {
    EXPECT_EQ(brute_min_chain_cover_size(entry.poset), brute_max_antichain(entry.poset).size()) << entry.name;
    EXPECT_EQ(brute_min_antichain_cover_size(entry.poset), brute_max_chain(entry.poset).size()) << entry.name;
  }
}

// ----------------------------------------------------------------------------
// verify_antichain_vs_cover / verify_chain_vs_antichain_cover

TEST(VerifyAntichain, AcceptsMatchingCover) {
  const auto p = divisor6();
  const auto cover = chains(p, {{"1", "2", "6"}, {"3"}});
  const auto a = subset_of(p, {"2", "3"});
  EXPECT_TRUE(verify_antichain_vs_cover(a, cover).ok);
  EXPECT_FALSE(find_pigeonhole(a, cover).has_value());
}

TEST(VerifyAntichain, NonChainPartIsCaughtBeforeInjection) {
  const auto p = divisor6();
  const auto cover = chains(p, {{"1", "2", "3", "6"}});
  const auto a = subset_of(p, {"2", "3"});
  const auto report = verify_antichain_vs_cover(a, cover);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.failure_kind, FailureKind::NotAChain);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->part, std::optional<std::size_t>{0});
  EXPECT_EQ(render(report), "NotAChain: part 0 is not a chain: (2,3) incomparable");

  const auto clash = find_pigeonhole(a, cover);
  ASSERT_TRUE(clash.has_value());
  EXPECT_EQ(clash->part, std::optional<std::size_t>{0});
  EXPECT_EQ(p.label(ElementId{*clash->first}), "2");
  EXPECT_EQ(p.label(ElementId{*clash->second}), "3");
}

TEST(VerifyAntichain, InjectionFailureNamesSharedPart) {
  // a, b, c below a common top t; the top may sit in more than one chain.
  const auto p = make_poset({"a", "b", "c", "t"}, {{"a", "t"}, {"b", "t"}, {"c", "t"}});
  const auto cover = chains(p, {{"a", "t"}, {"b", "t"}, {"c"}});
  EXPECT_TRUE(verify_antichain_vs_cover(subset_of(p, {"a", "b", "c"}), cover).ok);

  const auto bad = chains(p, {{"a", "t"}, {"b"}, {"c"}});
  const auto report = verify_antichain_vs_cover(subset_of(p, {"a", "t"}), bad);
  EXPECT_EQ(report.failure_kind, FailureKind::NotAnAntichain);
  EXPECT_TRUE(report.witness->at_witness);

  const auto clash = find_pigeonhole(subset_of(p, {"b", "c"}), chains(p, {{"a", "t"}, {"b", "c"}}));
  ASSERT_TRUE(clash.has_value());
  EXPECT_EQ(*clash->part, 1u);
}

TEST(VerifyAntichain, SingletonIsVacuous) {
  const auto p = divisor6();
  EXPECT_TRUE(verify_antichain_vs_cover(subset_of(p, {"6"}), chains(p, {{"1", "2", "6"}, {"3"}})).ok);
}

TEST(VerifyAntichain, ForeignWitnessIsHostMismatch) {
  const auto p = divisor6();
  const auto q = gen(GenKind::antichain, 4);
  const auto report = verify_antichain_vs_cover(ElementSubset(q, std::vector<std::size_t>{1, 2}),
                                                chains(p, {{"1", "2", "6"}, {"3"}}));
  EXPECT_EQ(report.failure_kind, FailureKind::HostMismatch);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_TRUE(report.witness->at_witness);
}

TEST(VerifyChain, Examples) {
  const auto p = divisor6();
  EXPECT_TRUE(verify_chain_vs_antichain_cover(subset_of(p, {"1", "2", "6"}),
                                              antichains(p, {{"6"}, {"2", "3"}, {"1"}}))
                  .ok);

  const auto bad = verify_chain_vs_antichain_cover(subset_of(p, {"1", "2"}), antichains(p, {{"1", "2"}}));
  EXPECT_EQ(bad.failure_kind, FailureKind::NotAnAntichain);
  EXPECT_EQ(bad.witness->part, std::optional<std::size_t>{0});

  const auto one = make_poset({"x"}, {});
  EXPECT_TRUE(verify_chain_vs_antichain_cover(subset_of(one, {"x"}), antichains(one, {{"x"}})).ok);
}

TEST(VerifyChain, UncoveredElementIsReported) {
  const auto p = divisor6();
  const auto report = verify_chain_vs_antichain_cover(subset_of(p, {"1", "2", "6"}),
                                                      antichains(p, {{"6"}, {"2"}, {"1"}}));
  EXPECT_EQ(report.failure_kind, FailureKind::NotACover);
  EXPECT_EQ(render(report), "NotACover: element 3 uncovered");
}

// ----------------------------------------------------------------------------
// check_certificate

TEST(CheckCertificate, AcceptsConstructedCertificates) {
  EXPECT_TRUE(check_certificate(dilworth_certificate(divisor6())).ok);
  EXPECT_TRUE(check_certificate(mirsky_certificate(divisor6())).ok);
}

TEST(CheckCertificate, DroppedPartLeavesElementUncovered) {
  auto cert = dilworth_certificate(divisor6());
  const auto lost = cert.cover.parts.back().members();
  cert.cover.parts.pop_back();
  const auto report = check_certificate(cert);
  EXPECT_EQ(report.failure_kind, FailureKind::NotACover);
  ASSERT_TRUE(report.witness && report.witness->first);
  EXPECT_NE(std::find(lost.begin(), lost.end(), *report.witness->first), lost.end());
}

TEST(CheckCertificate, ShrunkWitnessIsSizesDiffer) {
  auto cert = dilworth_certificate(divisor6());
  cert.witness = ElementSubset(cert.cover.host, std::vector<std::size_t>{cert.witness.members().front()});
  const auto report = check_certificate(cert);
  EXPECT_EQ(report.failure_kind, FailureKind::SizesDiffer);
  EXPECT_EQ(report.witness->first, std::optional<std::size_t>{1});
  EXPECT_EQ(report.witness->second, std::optional<std::size_t>{2});
}

TEST(CheckCertificate, FlavorMustMatchTheorem) {
  auto cert = dilworth_certificate(divisor6());
  cert.theorem = Theorem::mirsky;
  EXPECT_EQ(check_certificate(cert).failure_kind, FailureKind::NotACover);
}

TEST(CheckCertificate, EveryTamperIsRejectedWithAWitness) {
  SplitMix64 rng(2024);
  std::size_t applied = 0;
  for (const auto& entry : posetkit::testing::random_corpus(36, 3100)) {
    for (const auto theorem : {Theorem::dilworth, Theorem::mirsky}) {
      const Certificate base = theorem == Theorem::dilworth ? dilworth_certificate(entry.poset)
                                                            : mirsky_certificate(entry.poset);
      ASSERT_TRUE(check_certificate(base).ok) << entry.name;
      for (std::size_t round = 0; round < 100; ++round) {
        const auto kind = static_cast<posetkit::testing::Tamper>(round % posetkit::testing::kTamperKinds);
        Certificate cert = base;
        if (!posetkit::testing::apply_tamper(cert, kind, rng)) continue;
        ++applied;
        const auto report = check_certificate(cert);
        EXPECT_FALSE(report.ok) << entry.name << " " << posetkit::testing::to_string(kind);
        EXPECT_TRUE(report.witness.has_value()) << entry.name << " " << posetkit::testing::to_string(kind);
      }
    }
  }
  EXPECT_GT(applied, 3000u);
}

// ----------------------------------------------------------------------------
// Pigeonhole bound

TEST(Pigeonhole, AcceptedAntichainsAreNoLargerThanTheCover) {
  SplitMix64 rng(77);
  for (const auto& entry : posetkit::testing::random_corpus(120, 4400)) {
    const auto cover = min_chain_cover_matching(entry.poset);
    const auto thick = posetkit::testing::thicken_chain_cover(cover);
    for (int i = 0; i < 10; ++i) {
      const auto a = posetkit::testing::sample_antichain(entry.poset, rng);
      for (const auto* v : {&cover, &thick}) {
        const auto report = verify_antichain_vs_cover(a, *v);
        if (report.ok) EXPECT_LE(a.size(), v->size()) << entry.name;
        else EXPECT_EQ(report.failure_kind, FailureKind::InjectionFailed) << entry.name;
      }
    }
  }
}

TEST(Pigeonhole, OversizedAntichainAlwaysClashes) {
  // Any cover with fewer parts than the antichain must show a shared part.
  const auto p = gen(GenKind::antichain, 4);
  CoverFamily cover{p, {ElementSubset(p, std::vector<std::size_t>{0}), ElementSubset(p, std::vector<std::size_t>{1}),
                        ElementSubset(p, std::vector<std::size_t>{2, 3})},
                    Flavor::chain_cover};
  const auto clash = find_pigeonhole(ElementSubset(p, std::vector<std::size_t>{0, 1, 2, 3}), cover);
  ASSERT_TRUE(clash.has_value());
  EXPECT_EQ(*clash->part, 2u);
  EXPECT_EQ(*clash->first, 2u);
  EXPECT_EQ(*clash->second, 3u);
}
