#include "posetkit/decomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace posetkit {

bool debug_checks_from_env() {
  const char* value = std::getenv("POSETKIT_DEBUG");
  return value != nullptr && std::string_view(value) == "1";
}

namespace {

// ---------------------------------------------------------------------------
// Antichain search over the complement of the comparability graph.
//
// Candidates are always indices above every index decided so far, so taking
// the lowest candidate first and exploring "include" before "exclude" visits
// antichains of equal size in index-lexicographic order.

class AntichainSearch {
 public:
  AntichainSearch(const FinitePoset& poset, const Bits& within) : poset_(poset), within_(within) {}

  Bits maximum() {
    best_ = Bits(poset_.size());
    best_size_ = 0;
    Bits chosen(poset_.size());
    maximize(chosen, 0, within_);
    return best_;
  }

  /// Visits every antichain of exactly `target` elements until `visit`
  /// returns true. Returns whether the visit stopped early.
  bool enumerate(std::size_t target, const std::function<bool(const Bits&)>& visit) {
    Bits chosen(poset_.size());
    return enumerate(chosen, 0, within_, target, visit);
  }

 private:
  void maximize(Bits& chosen, std::size_t size, Bits candidates) {
    if (size + candidates.count() <= best_size_) return;
    const auto next = candidates.find_first();
    if (next == Bits::npos) {
      best_ = chosen;
      best_size_ = size;
      return;
    }
    candidates.reset(next);
    chosen.set(next);
    maximize(chosen, size + 1, candidates - poset_.comparable_set(ElementId{next}));
    chosen.reset(next);
    maximize(chosen, size, candidates);
  }

  bool enumerate(Bits& chosen, std::size_t size, Bits candidates, std::size_t target,
                 const std::function<bool(const Bits&)>& visit) {
    if (size == target) return visit(chosen);
    if (size + candidates.count() < target) return false;
    const auto next = candidates.find_first();
    candidates.reset(next);
    chosen.set(next);
    const bool stop = enumerate(chosen, size + 1, candidates - poset_.comparable_set(ElementId{next}),
                                target, visit);
    chosen.reset(next);
    if (stop) return true;
    return enumerate(chosen, size, candidates, target, visit);
  }

  const FinitePoset& poset_;
  const Bits& within_;
  Bits best_;
  std::size_t best_size_ = 0;
};

// ---------------------------------------------------------------------------
// Bipartite matching between a left and a right copy of `within`, with an
// edge x -> y for every strict pair x < y. Augmenting paths, lowest index
// first, so results are deterministic.

struct Matching {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> right_of;  // left x matched to right right_of[x]
  std::vector<std::size_t> left_of;   // right y matched to left left_of[y]
  std::size_t size = 0;
};

Bits strictly_above(const FinitePoset& poset, std::size_t x, const Bits& within) {
  Bits above = poset.up_set(ElementId{x}) & within;
  above.reset(x);
  return above;
}

Matching max_matching(const FinitePoset& poset, const Bits& within) {
  const std::size_t n = poset.size();
  Matching m{std::vector<std::size_t>(n, Matching::kNone), std::vector<std::size_t>(n, Matching::kNone), 0};
  std::vector<Bits> adjacency(n);
  for (auto x = within.find_first(); x != Bits::npos; x = within.find_next(x)) {
    adjacency[x] = strictly_above(poset, x, within);
  }

  Bits visited(n);
  std::function<bool(std::size_t)> augment = [&](std::size_t x) {
    const Bits& adj = adjacency[x];
    for (auto y = adj.find_first(); y != Bits::npos; y = adj.find_next(y)) {
      if (visited.test(y)) continue;
      visited.set(y);
      if (m.left_of[y] == Matching::kNone || augment(m.left_of[y])) {
        m.right_of[x] = y;
        m.left_of[y] = x;
        return true;
      }
    }
    return false;
  };

  for (auto x = within.find_first(); x != Bits::npos; x = within.find_next(x)) {
    visited.reset();
    if (augment(x)) ++m.size;
  }
  return m;
}

std::vector<Bits> chains_from_matching(const FinitePoset& poset, const Bits& within, const Matching& m) {
  std::vector<Bits> chains;
  for (auto x = within.find_first(); x != Bits::npos; x = within.find_next(x)) {
    if (m.left_of[x] != Matching::kNone) continue;  // not the bottom of a path
    Bits chain(poset.size());
    for (std::size_t cur = x; cur != Matching::kNone; cur = m.right_of[cur]) chain.set(cur);
    chains.push_back(std::move(chain));
  }
  return chains;
}

// Koenig: alternating reachability from unmatched left vertices yields a
// minimum vertex cover; elements with neither copy in it form a maximum
// antichain.
Bits antichain_from_matching(const FinitePoset& poset, const Bits& within, const Matching& m) {
  const std::size_t n = poset.size();
  Bits left_reached(n);
  Bits right_reached(n);
  std::vector<std::size_t> stack;
  for (auto x = within.find_first(); x != Bits::npos; x = within.find_next(x)) {
    if (m.right_of[x] == Matching::kNone) {
      left_reached.set(x);
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    const Bits above = strictly_above(poset, x, within);
    for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y)) {
      if (right_reached.test(y)) continue;
      right_reached.set(y);
      const std::size_t back = m.left_of[y];
      if (back != Matching::kNone && !left_reached.test(back)) {
        left_reached.set(back);
        stack.push_back(back);
      }
    }
  }
  return left_reached - right_reached;
}

// Longest chain starting at each element of `within`, going up.
std::vector<std::size_t> longest_from(const FinitePoset& poset, const Bits& within) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> order = indices_of(within);
  // x < y implies a strictly larger down-set, so this is a linear extension.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return poset.down_set(ElementId{a}).count() < poset.down_set(ElementId{b}).count();
  });
  std::vector<std::size_t> length(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Bits above = strictly_above(poset, *it, within);
    std::size_t best = 0;
    for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y)) {
      best = std::max(best, length[y]);
    }
    length[*it] = best + 1;
  }
  return length;
}

std::vector<ElementSubset> to_subsets(const FinitePoset& poset, const std::vector<Bits>& parts) {
  std::vector<ElementSubset> out;
  out.reserve(parts.size());
  for (const auto& part : parts) out.emplace_back(poset, part);
  return out;
}

// ---------------------------------------------------------------------------
// Chain cover by induction on the carrier.

class PerlesCover {
 public:
  PerlesCover(const FinitePoset& poset, PerlesTrace& trace, DecompOptions options)
      : poset_(poset), trace_(trace), options_(options) {}

  std::vector<Bits> cover(const Bits& within, std::size_t depth) {
    ++trace_.calls;
    trace_.max_depth = std::max(trace_.max_depth, depth);
    if (depth > poset_.size()) {
      throw Error(Errc::InvariantBroken, "recursion deeper than the carrier size");
    }
    if (within.count() == 1) return {within};

    const std::size_t m = width_within(poset_, within);
    const Bits maximal = maximal_within(poset_, within);
    const Bits minimal = minimal_within(poset_, within);

    std::optional<Bits> pivot;
    AntichainSearch search(poset_, within);
    search.enumerate(m, [&](const Bits& candidate) {
      if (candidate == maximal || candidate == minimal) return false;
      pivot = candidate;
      return true;
    });

    if (pivot) return split(within, *pivot, m, depth);
    return remove_chain(within, minimal, maximal, depth);
  }

 private:
  std::vector<Bits> split(const Bits& within, const Bits& pivot, std::size_t m, std::size_t depth) {
    ++trace_.split_steps;
    const std::size_t n = poset_.size();
    Bits up(n);
    Bits down(n);
    for (auto a = pivot.find_first(); a != Bits::npos; a = pivot.find_next(a)) {
      up |= poset_.up_set(ElementId{a});
      down |= poset_.down_set(ElementId{a});
    }
    up &= within;
    down &= within;
    if ((up | down) != within) {
      throw Error(Errc::SplitNotCovering, "maximum antichain does not split the subposet");
    }
    if (up == within || down == within) {
      throw Error(Errc::InvariantBroken, "split did not shrink the subposet");
    }
    if (options_.debug_checks && (width_within(poset_, up) != m || width_within(poset_, down) != m)) {
      throw Error(Errc::InvariantBroken, "pivot antichain is not maximum in both halves");
    }

    const auto upper = cover(up, depth + 1);
    const auto lower = cover(down, depth + 1);
    const auto upper_by_pivot = index_by_pivot(upper, pivot, "upper");
    const auto lower_by_pivot = index_by_pivot(lower, pivot, "lower");

    std::vector<Bits> joined;
    joined.reserve(m);
    for (auto a = pivot.find_first(); a != Bits::npos; a = pivot.find_next(a)) {
      joined.push_back(upper[upper_by_pivot.at(a)] | lower[lower_by_pivot.at(a)]);
    }
    return joined;
  }

  // Every chain must contain exactly one pivot and every pivot exactly one chain.
  std::map<std::size_t, std::size_t> index_by_pivot(const std::vector<Bits>& chains, const Bits& pivot,
                                                    const char* side) const {
    std::map<std::size_t, std::size_t> by_pivot;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      const Bits hit = chains[i] & pivot;
      if (hit.count() != 1) {
        throw Error(Errc::StitchFailure, std::string(side) + " chain " + std::to_string(i) + " meets " +
                                             std::to_string(hit.count()) + " pivot elements");
      }
      if (!by_pivot.emplace(hit.find_first(), i).second) {
        throw Error(Errc::StitchFailure, std::string(side) + " cover reuses a pivot element");
      }
    }
    if (by_pivot.size() != pivot.count()) {
      throw Error(Errc::StitchFailure, std::string(side) + " cover misses a pivot element");
    }
    return by_pivot;
  }

  std::vector<Bits> remove_chain(const Bits& within, const Bits& minimal, const Bits& maximal,
                                 std::size_t depth) {
    ++trace_.remove_steps;
    const std::size_t bottom = minimal.find_first();
    const std::size_t top = (maximal & poset_.up_set(ElementId{bottom})).find_first();
    Bits chain(poset_.size());
    chain.set(bottom);
    chain.set(top);

    const Bits rest = within - chain;
    if (rest.none()) return {chain};
    auto chains = cover(rest, depth + 1);
    chains.push_back(chain);
    return chains;
  }

  const FinitePoset& poset_;
  PerlesTrace& trace_;
  DecompOptions options_;
};

}  // namespace

// ---------------------------------------------------------------------------

std::size_t width_within(const FinitePoset& poset, const Bits& within) {
  if (within.count() > kExactWidthLimit) return within.count() - max_matching(poset, within).size;
  return AntichainSearch(poset, within).maximum().count();
}

std::size_t height_within(const FinitePoset& poset, const Bits& within) {
  const auto length = longest_from(poset, within);
  return length.empty() ? 0 : *std::max_element(length.begin(), length.end());
}

Bits largest_antichain_within(const FinitePoset& poset, const Bits& within) {
  if (within.count() > kExactWidthLimit) {
    return antichain_from_matching(poset, within, max_matching(poset, within));
  }
  return AntichainSearch(poset, within).maximum();
}

std::size_t width(const FinitePoset& poset) { return width_within(poset, poset.carrier()); }

std::size_t height(const FinitePoset& poset) { return height_within(poset, poset.carrier()); }

Antichain largest_antichain(const FinitePoset& poset) {
  auto antichain = Antichain::make(ElementSubset(poset, largest_antichain_within(poset, poset.carrier())));
  if (!antichain) throw Error(Errc::InvariantBroken, "largest antichain search returned a non-antichain");
  return std::move(*antichain);
}

Chain largest_chain(const FinitePoset& poset) {
  const Bits all = poset.carrier();
  const auto length = longest_from(poset, all);
  const std::size_t h = *std::max_element(length.begin(), length.end());
  std::size_t cur = static_cast<std::size_t>(std::find(length.begin(), length.end(), h) - length.begin());
  Bits chain(poset.size());
  chain.set(cur);
  while (length[cur] > 1) {
    const Bits above = strictly_above(poset, cur, all);
    for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y)) {
      if (length[y] == length[cur] - 1) {
        cur = y;
        break;
      }
    }
    chain.set(cur);
  }
  auto result = Chain::make(ElementSubset(poset, chain));
  if (!result || result->size() != h) throw Error(Errc::InvariantBroken, "longest chain walk failed");
  return std::move(*result);
}

CoverFamily chain_cover_perles(const FinitePoset& poset, PerlesTrace* trace, DecompOptions options) {
  if (poset.size() > kExactWidthLimit) {
    throw Error(Errc::InstanceTooLarge, "chain_cover_perles is limited to " +
                                            std::to_string(kExactWidthLimit) + " elements");
  }
  PerlesTrace local;
  PerlesCover perles(poset, trace ? *trace : local, options);
  auto chains = perles.cover(poset.carrier(), 1);
  return canonical_order(CoverFamily{poset, to_subsets(poset, chains), Flavor::chain_cover});
}

CoverFamily antichain_cover_mirsky(const FinitePoset& poset, MirskyTrace* trace, DecompOptions options) {
  const bool track = trace != nullptr || options.debug_checks;
  std::vector<Bits> layers;
  Bits remaining = poset.carrier();
  std::size_t h = track ? height_within(poset, remaining) : 0;
  if (trace) trace->heights.push_back(h);

  while (remaining.any()) {
    const Bits peak = maximal_within(poset, remaining);
    if (peak.none()) throw Error(Errc::InvariantBroken, "nonempty subposet without maximal elements");
    remaining -= peak;
    layers.push_back(peak);
    if (track) {
      const std::size_t next = height_within(poset, remaining);
      if (next + 1 != h) {
        throw Error(Errc::InvariantBroken, "peeling the maximal elements changed the height by " +
                                               std::to_string(h - next) + " instead of 1");
      }
      h = next;
      if (trace) trace->heights.push_back(h);
    }
  }
  return CoverFamily{poset, to_subsets(poset, layers), Flavor::antichain_cover};
}

CoverFamily disjointify_cover(const CoverFamily& cover) {
  CoverFamily out{cover.host, {}, cover.flavor};
  std::vector<std::size_t> assigned;
  for (const auto& part : cover.parts) {
    std::vector<std::size_t> fresh;
    std::set_difference(part.members().begin(), part.members().end(), assigned.begin(), assigned.end(),
                        std::back_inserter(fresh));
    if (fresh.empty()) continue;
    std::vector<std::size_t> merged;
    std::set_union(assigned.begin(), assigned.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    assigned = std::move(merged);
    out.parts.emplace_back(part.host(), std::move(fresh));
  }
  return out;
}

CoverFamily min_chain_cover_matching(const FinitePoset& poset) {
  const Bits all = poset.carrier();
  const auto chains = chains_from_matching(poset, all, max_matching(poset, all));
  return canonical_order(CoverFamily{poset, to_subsets(poset, chains), Flavor::chain_cover});
}

Certificate dilworth_certificate(const FinitePoset& poset) {
  Certificate cert{largest_antichain(poset).subset(), chain_cover_perles(poset), Theorem::dilworth};
  if (cert.witness.size() != cert.cover.size()) {
    throw Error(Errc::CertificateMismatch, "largest antichain has " + std::to_string(cert.witness.size()) +
                                               " elements but the chain cover has " +
                                               std::to_string(cert.cover.size()) + " parts");
  }
  return cert;
}

Certificate mirsky_certificate(const FinitePoset& poset) {
  Certificate cert{largest_chain(poset).subset(), antichain_cover_mirsky(poset), Theorem::mirsky};
  if (cert.witness.size() != cert.cover.size()) {
    throw Error(Errc::CertificateMismatch, "largest chain has " + std::to_string(cert.witness.size()) +
                                               " elements but the antichain cover has " +
                                               std::to_string(cert.cover.size()) + " parts");
  }
  return cert;
}

CoverFamily canonical_order(CoverFamily cover) {
  std::stable_sort(cover.parts.begin(), cover.parts.end(), [](const ElementSubset& a, const ElementSubset& b) {
    return a.members() < b.members();
  });
  return cover;
}

}  // namespace posetkit
