#pragma once

#include <cstddef>
#include <vector>

#include "posetkit/core.hpp"

namespace posetkit {

enum class Flavor { chain_cover, antichain_cover };
enum class Theorem { dilworth, mirsky };

/// A family of subsets claimed to cover a host poset. Nothing here is
/// enforced on construction; oracle::check_* decides whether the claim holds.
struct CoverFamily {
  FinitePoset host;
  std::vector<ElementSubset> parts;
  Flavor flavor = Flavor::chain_cover;

  std::size_t size() const noexcept { return parts.size(); }
};

/// A witness and a cover whose sizes certify each other's optimality:
/// an antichain against a chain cover (Dilworth) or a chain against an
/// antichain cover (Mirsky).
struct Certificate {
  ElementSubset witness;
  CoverFamily cover;
  Theorem theorem = Theorem::dilworth;
};

/// Largest instance the exact antichain search handles.
inline constexpr std::size_t kExactWidthLimit = 20;

/// True when the environment variable POSETKIT_DEBUG is set to "1".
bool debug_checks_from_env();

struct DecompOptions {
  /// Extra self-checks: pivots are maximum in both halves of every split,
  /// every peel drops the height by exactly one.
  bool debug_checks = debug_checks_from_env();
};

struct PerlesTrace {
  std::size_t calls = 0;
  std::size_t max_depth = 0;
  std::size_t split_steps = 0;   // maximum antichain strictly between the extremes
  std::size_t remove_steps = 0;  // remove a minimal-to-maximal chain
};

struct MirskyTrace {
  /// Height of the remaining subposet before each peel, followed by 0.
  std::vector<std::size_t> heights;
};

/// Minimum chain cover by strong induction on the carrier size.
///
/// When some maximum antichain differs from both the maximal and the minimal
/// elements, the poset is split into the parts above and below it, both are
/// covered recursively and the chains are joined through the shared pivot.
/// Otherwise a chain from the lowest-index minimal element to a maximal
/// element above it is removed and the rest is covered. The result has
/// exactly width(P) parts, pairwise disjoint, sorted by least element.
///
/// Throws InstanceTooLarge above kExactWidthLimit elements and StitchFailure
/// if a recursive cover does not meet the pivot antichain once per chain.
CoverFamily chain_cover_perles(const FinitePoset& poset, PerlesTrace* trace = nullptr,
                               DecompOptions options = {});

/// Peels the maximal elements of the remaining subposet until it is empty.
/// Parts are emitted in peel order, top layer first.
CoverFamily antichain_cover_mirsky(const FinitePoset& poset, MirskyTrace* trace = nullptr,
                                   DecompOptions options = {});

/// Exact search up to kExactWidthLimit elements, matching-based beyond.
std::size_t width(const FinitePoset& poset);
std::size_t height(const FinitePoset& poset);

/// Index-lexicographically first maximum antichain. Beyond kExactWidthLimit
/// a maximum antichain is read off a maximum matching instead, which is still
/// deterministic but not lexicographically first.
Antichain largest_antichain(const FinitePoset& poset);

/// Starts at the lowest-index element that begins a longest chain and
/// repeatedly steps to the lowest-index element continuing it.
Chain largest_chain(const FinitePoset& poset);

/// Keeps each element in the first part that contains it and drops parts
/// left empty.
CoverFamily disjointify_cover(const CoverFamily& cover);

/// Minimum chain cover from a maximum matching between strict-order pairs.
CoverFamily min_chain_cover_matching(const FinitePoset& poset);

/// Throws CertificateMismatch if the sizes disagree.
Certificate dilworth_certificate(const FinitePoset& poset);
Certificate mirsky_certificate(const FinitePoset& poset);

/// Parts sorted by least member index, ties broken lexicographically.
CoverFamily canonical_order(CoverFamily cover);

// Building blocks over a mask of the carrier (an induced subposet).

std::size_t width_within(const FinitePoset& poset, const Bits& within);
std::size_t height_within(const FinitePoset& poset, const Bits& within);
Bits largest_antichain_within(const FinitePoset& poset, const Bits& within);

}  // namespace posetkit
