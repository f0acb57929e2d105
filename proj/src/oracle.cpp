#include "posetkit/oracle.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace posetkit::oracle {

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::None: return "None";
    case FailureKind::NotAChain: return "NotAChain";
    case FailureKind::NotAnAntichain: return "NotAnAntichain";
    case FailureKind::NotACover: return "NotACover";
    case FailureKind::SizesDiffer: return "SizesDiffer";
    case FailureKind::InjectionFailed: return "InjectionFailed";
    case FailureKind::HostMismatch: return "HostMismatch";
  }
  return "Unknown";
}

namespace {

using Mask = std::uint32_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

// comparable[i] has bit j set iff i <= j or j <= i (including i itself).
std::vector<Mask> comparability_masks(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<Mask> comparable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (poset.leq(ElementId{i}, ElementId{j}) || poset.leq(ElementId{j}, ElementId{i})) {
        comparable[i] |= bit(j);
      }
    }
  }
  return comparable;
}

void require_at_most(const FinitePoset& poset, std::size_t limit, const char* what) {
  if (poset.size() > limit) {
    throw Error(Errc::InstanceTooLarge, std::string(what) + " is limited to " + std::to_string(limit) +
                                            " elements, got " + std::to_string(poset.size()));
  }
}

// Minimum partition of the full set into "compatible" parts, where
// compatible[i] lists the elements allowed to share a part with i.
// f(S) = 1 + min f(S \ c) over parts c containing the lowest element of S.
std::size_t min_partition(std::size_t n, const std::vector<Mask>& compatible) {
  const Mask full = n == 32 ? ~Mask{0} : bit(n) - 1;
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(std::size_t{1} << n, kUnset);
  best[0] = 0;

  for (Mask set = 1; set <= full; ++set) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(set));
    std::size_t result = kUnset;
    // Grow parts in increasing index order so each is generated once.
    auto extend = [&](auto&& self, Mask part, Mask candidates) -> void {
      const std::size_t rest = best[set & ~part];
      if (rest + 1 < result) result = rest + 1;
      while (candidates != 0) {
        const std::size_t next = static_cast<std::size_t>(std::countr_zero(candidates));
        candidates &= candidates - 1;
        self(self, part | bit(next), candidates & compatible[next]);
      }
    };
    extend(extend, bit(low), set & compatible[low] & ~bit(low));
    best[set] = result;
  }
  return best[full];
}

struct IndependentSetSearch {
  const std::vector<Mask>& comparable;
  Mask best = 0;
  int best_size = 0;

  static int degree_in(Mask cand, Mask neighbours) { return std::popcount(cand & neighbours); }

  void run(Mask chosen, int size, Mask cand) {
    if (size + std::popcount(cand) <= best_size) return;
    if (cand == 0) {
      best = chosen;
      best_size = size;
      return;
    }
    // Elements comparable to nothing else left can always be taken.
    Mask free = 0;
    for (Mask rest = cand; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (degree_in(cand, comparable[v]) == 1) free |= bit(v);
    }
    if (free != 0) {
      run(chosen | free, size + std::popcount(free), cand & ~free);
      return;
    }
    // Branch on the candidate with the most comparable candidates.
    int pivot = -1;
    int pivot_degree = -1;
    for (Mask rest = cand; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = degree_in(cand, comparable[v]);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    run(chosen | bit(pivot), size + 1, cand & ~comparable[pivot]);
    run(chosen, size, cand & ~bit(pivot));
  }
};

// ---------------------------------------------------------------------------
// Certificate structure checks

std::string label_of(const FinitePoset& poset, std::size_t index) {
  return index < poset.size() ? poset.label(ElementId{index}) : "#" + std::to_string(index);
}

/// First pair in `members` violating the chain (or antichain) condition.
std::optional<std::pair<std::size_t, std::size_t>> offending_pair(const FinitePoset& poset,
                                                                  const std::vector<std::size_t>& members,
                                                                  bool want_chain) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const ElementId x{members[i]};
      const ElementId y{members[j]};
      const bool comp = poset.leq(x, y) || poset.leq(y, x);
      if (comp != want_chain) return std::pair{members[i], members[j]};
    }
  }
  return std::nullopt;
}

/// Checks that `subset` is a chain (or antichain). `part` identifies which
/// cover part is being checked, or nothing for the witness.
std::optional<VerificationReport> check_shape(const FinitePoset& poset, const ElementSubset& subset,
                                              bool want_chain, std::optional<std::size_t> part) {
  const FailureKind kind = want_chain ? FailureKind::NotAChain : FailureKind::NotAnAntichain;
  const std::string what =
      (part ? "part " + std::to_string(*part) : std::string("witness")) + (want_chain ? " is not a chain" : " is not an antichain");
  if (subset.empty()) {
    return VerificationReport::fail(kind, Witness{!part, part, std::nullopt, std::nullopt}, what + ": empty");
  }
  if (!subset.within_carrier()) {
    const std::size_t outside = subset.members().back();
    return VerificationReport::fail(kind, Witness{!part, part, outside, std::nullopt},
                                    what + ": " + label_of(poset, outside) + " is outside the carrier");
  }
  if (auto pair = offending_pair(poset, subset.members(), want_chain)) {
    return VerificationReport::fail(
        kind, Witness{!part, part, pair->first, pair->second},
        what + ": (" + label_of(poset, pair->first) + "," + label_of(poset, pair->second) + ")" +
            (want_chain ? " incomparable" : " comparable"));
  }
  return std::nullopt;
}

std::optional<VerificationReport> check_structure(const ElementSubset& witness, const CoverFamily& cover,
                                                  bool witness_is_antichain) {
  const FinitePoset& poset = cover.host;
  if (!witness.host().same_host(poset)) {
    return VerificationReport::fail(FailureKind::HostMismatch, Witness{true, std::nullopt, std::nullopt, std::nullopt},
                                    "witness belongs to a different poset");
  }
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    if (!cover.parts[i].host().same_host(poset)) {
      return VerificationReport::fail(FailureKind::HostMismatch, Witness{false, i, std::nullopt, std::nullopt},
                                      "part " + std::to_string(i) + " belongs to a different poset");
    }
  }

  if (auto bad = check_shape(poset, witness, !witness_is_antichain, std::nullopt)) return bad;
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    if (auto bad = check_shape(poset, cover.parts[i], witness_is_antichain, i)) return bad;
  }

  std::vector<bool> covered(poset.size(), false);
  for (const auto& part : cover.parts) {
    for (auto m : part.members()) covered[m] = true;
  }
  for (std::size_t x = 0; x < poset.size(); ++x) {
    if (!covered[x]) {
      return VerificationReport::fail(FailureKind::NotACover, Witness{false, std::nullopt, x, std::nullopt},
                                      "element " + label_of(poset, x) + " uncovered");
    }
  }
  return std::nullopt;
}

VerificationReport injection_report(const ElementSubset& witness, const CoverFamily& cover) {
  if (auto clash = find_pigeonhole(witness, cover)) {
    const FinitePoset& poset = cover.host;
    return VerificationReport::fail(FailureKind::InjectionFailed, *clash,
                                    "elements " + label_of(poset, *clash->first) + " and " +
                                        label_of(poset, *clash->second) + " share part " +
                                        std::to_string(*clash->part));
  }
  return VerificationReport::pass();
}

}  // namespace

// ---------------------------------------------------------------------------

std::size_t brute_min_chain_cover_size(const FinitePoset& poset) {
  require_at_most(poset, kSubsetDpLimit, "brute_min_chain_cover_size");
  return min_partition(poset.size(), comparability_masks(poset));
}

std::size_t brute_min_antichain_cover_size(const FinitePoset& poset) {
  require_at_most(poset, kSubsetDpLimit, "brute_min_antichain_cover_size");
  const auto comparable = comparability_masks(poset);
  std::vector<Mask> incomparable(comparable.size());
  for (std::size_t i = 0; i < comparable.size(); ++i) incomparable[i] = ~comparable[i] | bit(i);
  return min_partition(poset.size(), incomparable);
}

Antichain brute_max_antichain(const FinitePoset& poset) {
  require_at_most(poset, kMaxAntichainLimit, "brute_max_antichain");
  const auto comparable = comparability_masks(poset);
  IndependentSetSearch search{comparable};
  search.run(0, 0, bit(poset.size()) - 1);
  std::vector<std::size_t> members;
  for (Mask rest = search.best; rest != 0; rest &= rest - 1) {
    members.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  auto antichain = Antichain::make(ElementSubset(poset, std::move(members)));
  if (!antichain) throw Error(Errc::InvariantBroken, "independent set search returned a non-antichain");
  return std::move(*antichain);
}

Chain brute_max_chain(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> level(n, 0);
  auto level_of = [&](auto&& self, std::size_t x) -> std::size_t {
    if (level[x] != 0) return level[x];
    std::size_t below = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x && poset.leq(ElementId{y}, ElementId{x})) below = std::max(below, self(self, y));
    }
    return level[x] = below + 1;
  };
  std::size_t top = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (level_of(level_of, x) > level[top]) top = x;
  }

  std::vector<std::size_t> members{top};
  for (std::size_t cur = top; level[cur] > 1;) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y != cur && poset.leq(ElementId{y}, ElementId{cur}) && level[y] + 1 == level[cur]) {
        cur = y;
        break;
      }
    }
    members.push_back(cur);
  }
  auto chain = Chain::make(ElementSubset(poset, std::move(members)));
  if (!chain) throw Error(Errc::InvariantBroken, "level walk returned a non-chain");
  return std::move(*chain);
}

std::optional<Witness> find_pigeonhole(const ElementSubset& witness, const CoverFamily& cover) {
  std::vector<std::optional<std::size_t>> owner(cover.parts.size());
  for (auto x : witness.members()) {
    for (std::size_t i = 0; i < cover.parts.size(); ++i) {
      if (!cover.parts[i].contains(x)) continue;
      if (owner[i]) return Witness{false, i, *owner[i], x};
      owner[i] = x;
      break;
    }
  }
  return std::nullopt;
}

VerificationReport verify_antichain_vs_cover(const ElementSubset& antichain, const CoverFamily& cover) {
  if (auto bad = check_structure(antichain, cover, true)) return *bad;
  return injection_report(antichain, cover);
}

VerificationReport verify_chain_vs_antichain_cover(const ElementSubset& chain, const CoverFamily& cover) {
  if (auto bad = check_structure(chain, cover, false)) return *bad;
  return injection_report(chain, cover);
}

VerificationReport check_certificate(const Certificate& cert) {
  const bool dilworth = cert.theorem == Theorem::dilworth;
  const Flavor expected = dilworth ? Flavor::chain_cover : Flavor::antichain_cover;
  if (cert.cover.flavor != expected) {
    return VerificationReport::fail(FailureKind::NotACover, Witness{},
                                    "cover flavor does not match the theorem");
  }
  if (auto bad = check_structure(cert.witness, cert.cover, dilworth)) return *bad;
  if (cert.witness.size() != cert.cover.size()) {
    return VerificationReport::fail(FailureKind::SizesDiffer,
                                    Witness{true, std::nullopt, cert.witness.size(), cert.cover.size()},
                                    "witness has " + std::to_string(cert.witness.size()) +
                                        " elements, cover has " + std::to_string(cert.cover.size()) + " parts");
  }
  return injection_report(cert.witness, cert.cover);
}

VerificationReport check_cover(const CoverFamily& cover) {
  const bool chains = cover.flavor == Flavor::chain_cover;
  // A singleton witness is both a chain and an antichain.
  const ElementSubset probe(cover.host, std::vector<std::size_t>{0});
  if (auto bad = check_structure(probe, cover, chains)) return *bad;
  return VerificationReport::pass();
}

std::string render(const VerificationReport& report) {
  if (report.ok) return "ok";
  return std::string(to_string(report.failure_kind)) + ": " + report.message;
}

}  // namespace posetkit::oracle
