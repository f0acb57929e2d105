#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "posetkit/core.hpp"
#include "posetkit/decomp.hpp"

// Brute-force baselines and certificate checks. Nothing in this header calls
// into the decomposition algorithms it is used to test.

namespace posetkit::oracle {

inline constexpr std::size_t kSubsetDpLimit = 15;
inline constexpr std::size_t kMaxAntichainLimit = 20;

enum class FailureKind {
  None,
  NotAChain,
  NotAnAntichain,
  NotACover,
  SizesDiffer,
  InjectionFailed,
  HostMismatch,
};

std::string_view to_string(FailureKind kind);

/// Localizes a failed check. `at_witness` blames the witness set, `part` a
/// cover part. Element fields depend on the failure:
///   NotAChain / NotAnAntichain: the offending pair in `first`/`second`, or
///     the out-of-carrier index in `first`, or nothing for an empty set;
///   NotACover: `first` is the uncovered element;
///   SizesDiffer: `first` = witness size, `second` = number of parts;
///   InjectionFailed: `first`/`second` share part `part`.
struct Witness {
  bool at_witness = false;
  std::optional<std::size_t> part;
  std::optional<std::size_t> first;
  std::optional<std::size_t> second;
};

struct VerificationReport {
  bool ok = true;
  FailureKind failure_kind = FailureKind::None;
  std::optional<Witness> witness;
  std::string message;

  static VerificationReport pass() { return {}; }
  static VerificationReport fail(FailureKind kind, Witness witness, std::string message) {
    return {false, kind, witness, std::move(message)};
  }
};

/// Minimum number of chains partitioning the carrier, by dynamic programming
/// over subsets. Throws InstanceTooLarge above kSubsetDpLimit.
std::size_t brute_min_chain_cover_size(const FinitePoset& poset);
std::size_t brute_min_antichain_cover_size(const FinitePoset& poset);

/// Maximum independent set of the comparability graph by branch and bound
/// on 32-bit masks. Throws InstanceTooLarge above kMaxAntichainLimit.
Antichain brute_max_antichain(const FinitePoset& poset);

/// Longest chain via level labels: level(x) = 1 + max level strictly below.
Chain brute_max_chain(const FinitePoset& poset);

/// Checks that `cover` is a chain cover and that mapping every element of
/// `antichain` to the first part containing it is injective.
VerificationReport verify_antichain_vs_cover(const ElementSubset& antichain, const CoverFamily& cover);

/// Dual: `cover` is an antichain cover and the chain maps injectively.
VerificationReport verify_chain_vs_antichain_cover(const ElementSubset& chain, const CoverFamily& cover);

VerificationReport check_certificate(const Certificate& cert);

/// Every part satisfies the predicate of the cover's flavor and the parts
/// cover the carrier. No witness involved.
VerificationReport check_cover(const CoverFamily& cover);

/// Two witness elements sharing a cover part, if any. Elements that lie in no
/// part are skipped.
std::optional<Witness> find_pigeonhole(const ElementSubset& witness, const CoverFamily& cover);

/// "ok", or the failure kind followed by the message.
std::string render(const VerificationReport& report);

}  // namespace posetkit::oracle
