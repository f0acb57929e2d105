#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posetkit/error.hpp"

namespace posetkit {

using Bits = boost::dynamic_bitset<>;

/// Index of an element inside one poset. Indices run 0..n-1.
struct ElementId {
  std::size_t index = 0;

  friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

enum class RelationKind {
  cover,  ///< pairs generate the order by reflexive-transitive closure
  full,   ///< pairs are the whole order relation and are validated as given
};

/// Outcome of one order axiom check. The witness is set only on failure.
struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::optional<WitnessPair> witness;
};

/// Checks nonempty, reflexivity, antisymmetry and transitivity of a dense
/// relation, in that order. Witnesses are the lowest-index violations.
std::vector<AxiomCheck> check_order_axioms(const std::vector<Bits>& leq);

/// Immutable finite partial order over labelled elements.
///
/// Copies share the underlying storage. The relation is kept as dense rows
/// in both directions so up-sets and down-sets are O(1) lookups.
class FinitePoset {
 public:
  /// Validates `leq` against every order axiom and throws the first failure.
  static FinitePoset from_relation(std::vector<std::string> labels, std::vector<Bits> leq);

  std::size_t size() const noexcept;
  bool contains(ElementId x) const noexcept { return x.index < size(); }

  bool leq(ElementId x, ElementId y) const;
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }

  /// {y : x <= y}
  const Bits& up_set(ElementId x) const;
  /// {y : y <= x}
  const Bits& down_set(ElementId x) const;
  /// {y : x <= y or y <= x}
  Bits comparable_set(ElementId x) const { return up_set(x) | down_set(x); }

  Bits carrier() const;

  const std::string& label(ElementId x) const;
  const std::vector<std::string>& labels() const;
  std::optional<ElementId> find(std::string_view label) const;
  /// Throws UnknownLabel.
  ElementId id(std::string_view label) const;

  /// True if both handles refer to the same storage or to equal posets.
  bool same_host(const FinitePoset& other) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b);

 private:
  struct Data;
  explicit FinitePoset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  void require(ElementId x) const;

  std::shared_ptr<const Data> data_;
};

/// A subset of a host poset's carrier. Members are kept sorted and unique;
/// indices outside the carrier are representable so that predicates can
/// reject them.
class ElementSubset {
 public:
  ElementSubset(FinitePoset host, std::vector<std::size_t> members);
  ElementSubset(FinitePoset host, const Bits& members);

  const FinitePoset& host() const noexcept { return host_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t index) const;
  bool within_carrier() const;

  /// Bit mask over the host carrier; out-of-carrier members are dropped.
  Bits to_bits() const;
  std::vector<std::string> member_labels() const;

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
    return a.members_ == b.members_ && a.host_.same_host(b.host_);
  }

 private:
  FinitePoset host_;
  std::vector<std::size_t> members_;
};

bool is_chain(const FinitePoset& poset, const ElementSubset& subset);
bool is_antichain(const FinitePoset& poset, const ElementSubset& subset);

/// Nonempty, pairwise comparable subset.
class Chain {
 public:
  static std::optional<Chain> make(ElementSubset subset);
  const ElementSubset& subset() const noexcept { return subset_; }
  std::size_t size() const noexcept { return subset_.size(); }

 private:
  explicit Chain(ElementSubset subset) : subset_(std::move(subset)) {}
  ElementSubset subset_;
};

/// Nonempty subset with no two distinct members comparable.
class Antichain {
 public:
  static std::optional<Antichain> make(ElementSubset subset);
  const ElementSubset& subset() const noexcept { return subset_; }
  std::size_t size() const noexcept { return subset_.size(); }

 private:
  explicit Antichain(ElementSubset subset) : subset_(std::move(subset)) {}
  ElementSubset subset_;
};

struct UpDownSplit {
  ElementSubset up;
  ElementSubset down;
  Antichain pivot;
};

/// Dense relation from label pairs, closed reflexively and transitively for
/// RelationKind::cover. Not validated. Throws DuplicateLabel, UnknownLabel.
std::vector<Bits> relation_from_pairs(const std::vector<std::string>& labels,
                                      std::span<const std::pair<std::string, std::string>> pairs,
                                      RelationKind kind);

FinitePoset build_poset(std::vector<std::string> labels,
                        std::span<const std::pair<std::string, std::string>> pairs,
                        RelationKind kind);

/// Throws ElementNotInCarrier.
bool comparable(const FinitePoset& poset, ElementId x, ElementId y);

Antichain maximal_elements(const FinitePoset& poset);
Antichain minimal_elements(const FinitePoset& poset);

/// Lowest-index minimal element below y. Throws ElementNotInCarrier.
ElementId minimal_below(const FinitePoset& poset, ElementId y);
/// Lowest-index maximal element above x. Throws ElementNotInCarrier.
ElementId maximal_above(const FinitePoset& poset, ElementId x);

/// Splits the carrier into the elements above and below a maximum antichain.
/// Throws SplitNotCovering when the two halves miss an element, which means
/// the antichain was not maximum.
UpDownSplit up_down_split(const FinitePoset& poset, const Antichain& pivot);

/// Restriction of the order to `subset`, indices renumbered in ascending
/// order of the original indices. Throws EmptySubset, ElementNotInCarrier,
/// HostMismatch.
FinitePoset induced_subposet(const FinitePoset& poset, const ElementSubset& subset);

// Mask-level helpers shared by the algorithms. `within` restricts the
// carrier to an induced subposet without materializing it.

Bits maximal_within(const FinitePoset& poset, const Bits& within);
Bits minimal_within(const FinitePoset& poset, const Bits& within);
bool is_antichain_mask(const FinitePoset& poset, const Bits& mask);
bool is_chain_mask(const FinitePoset& poset, const Bits& mask);

/// Pairs (x, y) with x covered by y: x < y and nothing strictly between.
/// Sorted by (x, y).
std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(const FinitePoset& poset);

std::vector<std::size_t> indices_of(const Bits& bits);

}  // namespace posetkit
