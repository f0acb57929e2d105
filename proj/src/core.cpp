#include "posetkit/core.hpp"

#include <algorithm>
#include <unordered_map>

namespace posetkit {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::EmptyCarrier: return "EmptyCarrier";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::NotAntisymmetric: return "NotAntisymmetric";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::ElementNotInCarrier: return "ElementNotInCarrier";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::HostMismatch: return "HostMismatch";
    case Errc::SplitNotCovering: return "SplitNotCovering";
    case Errc::StitchFailure: return "StitchFailure";
    case Errc::CertificateMismatch: return "CertificateMismatch";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::BadParams: return "BadParams";
    case Errc::InvariantBroken: return "InvariantBroken";
  }
  return "Unknown";
}

std::vector<std::size_t> indices_of(const Bits& bits) {
  std::vector<std::size_t> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

std::vector<AxiomCheck> check_order_axioms(const std::vector<Bits>& leq) {
  const std::size_t n = leq.size();
  std::vector<AxiomCheck> out;

  out.push_back({"nonempty", n > 0, std::nullopt});

  AxiomCheck reflexive{"reflexivity", true, std::nullopt};
  for (std::size_t x = 0; x < n && reflexive.pass; ++x) {
    if (!leq[x].test(x)) {
      reflexive.pass = false;
      reflexive.witness = WitnessPair{x, x, std::nullopt};
    }
  }
  out.push_back(reflexive);

  AxiomCheck antisym{"antisymmetry", true, std::nullopt};
  for (std::size_t x = 0; x < n && antisym.pass; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (leq[x].test(y) && leq[y].test(x)) {
        antisym.pass = false;
        antisym.witness = WitnessPair{x, y, std::nullopt};
        break;
      }
    }
  }
  out.push_back(antisym);

  AxiomCheck transitive{"transitivity", true, std::nullopt};
  for (std::size_t x = 0; x < n && transitive.pass; ++x) {
    for (auto y = leq[x].find_first(); y != Bits::npos; y = leq[x].find_next(y)) {
      const Bits missing = leq[y] - leq[x];
      if (missing.any()) {
        transitive.pass = false;
        transitive.witness = WitnessPair{x, missing.find_first(), y};
        break;
      }
    }
  }
  out.push_back(transitive);

  return out;
}

// ---------------------------------------------------------------------------
// FinitePoset

struct FinitePoset::Data {
  std::vector<std::string> labels;
  std::vector<Bits> up;    // up[x][y]   <=> x <= y
  std::vector<Bits> down;  // down[y][x] <=> x <= y
  std::unordered_map<std::string, std::size_t> index;
};

namespace {

Errc axiom_error(std::string_view axiom) {
  if (axiom == "nonempty") return Errc::EmptyCarrier;
  if (axiom == "reflexivity") return Errc::NotReflexive;
  if (axiom == "antisymmetry") return Errc::NotAntisymmetric;
  return Errc::NotTransitive;
}

std::unordered_map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(Errc::DuplicateLabel, "duplicate label '" + labels[i] + "'");
    }
  }
  return index;
}

}  // namespace

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels, std::vector<Bits> leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n) throw Error(Errc::BadParams, "relation has wrong number of rows");
  for (const auto& row : leq) {
    if (row.size() != n) throw Error(Errc::BadParams, "relation row has wrong width");
  }
  auto index = index_labels(labels);

  for (const auto& check : check_order_axioms(leq)) {
    if (check.pass) continue;
    std::string msg = check.axiom + " fails";
    if (check.witness) {
      msg += " at (" + labels[check.witness->a] + "," + labels[check.witness->b] + ")";
    }
    throw Error(axiom_error(check.axiom), msg, check.witness);
  }

  auto data = std::make_shared<Data>();
  data->down.assign(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = leq[x].find_first(); y != Bits::npos; y = leq[x].find_next(y)) {
      data->down[y].set(x);
    }
  }
  data->up = std::move(leq);
  data->labels = std::move(labels);
  data->index = std::move(index);
  return FinitePoset(std::move(data));
}

std::size_t FinitePoset::size() const noexcept { return data_->labels.size(); }

void FinitePoset::require(ElementId x) const {
  if (!contains(x)) {
    throw Error(Errc::ElementNotInCarrier,
                "element index " + std::to_string(x.index) + " is not in the carrier");
  }
}

bool FinitePoset::leq(ElementId x, ElementId y) const {
  require(x);
  require(y);
  return data_->up[x.index].test(y.index);
}

const Bits& FinitePoset::up_set(ElementId x) const {
  require(x);
  return data_->up[x.index];
}

const Bits& FinitePoset::down_set(ElementId x) const {
  require(x);
  return data_->down[x.index];
}

Bits FinitePoset::carrier() const {
  Bits all(size());
  all.set();
  return all;
}

const std::string& FinitePoset::label(ElementId x) const {
  require(x);
  return data_->labels[x.index];
}

const std::vector<std::string>& FinitePoset::labels() const { return data_->labels; }

std::optional<ElementId> FinitePoset::find(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return ElementId{it->second};
}

ElementId FinitePoset::id(std::string_view label) const {
  if (auto found = find(label)) return *found;
  throw Error(Errc::UnknownLabel, "unknown label '" + std::string(label) + "'");
}

bool FinitePoset::same_host(const FinitePoset& other) const {
  return data_ == other.data_ || *this == other;
}

bool operator==(const FinitePoset& a, const FinitePoset& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->labels == b.data_->labels && a.data_->up == b.data_->up;
}

// ---------------------------------------------------------------------------
// Subsets

ElementSubset::ElementSubset(FinitePoset host, std::vector<std::size_t> members)
    : host_(std::move(host)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ElementSubset::ElementSubset(FinitePoset host, const Bits& members)
    : host_(std::move(host)), members_(indices_of(members)) {}

bool ElementSubset::contains(std::size_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

bool ElementSubset::within_carrier() const {
  return members_.empty() || members_.back() < host_.size();
}

Bits ElementSubset::to_bits() const {
  Bits bits(host_.size());
  for (auto m : members_) {
    if (m < bits.size()) bits.set(m);
  }
  return bits;
}

std::vector<std::string> ElementSubset::member_labels() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (auto m : members_) {
    out.push_back(m < host_.size() ? host_.label(ElementId{m}) : "#" + std::to_string(m));
  }
  return out;
}

bool is_chain_mask(const FinitePoset& poset, const Bits& mask) {
  if (mask.none()) return false;
  for (auto x = mask.find_first(); x != Bits::npos; x = mask.find_next(x)) {
    if (!mask.is_subset_of(poset.comparable_set(ElementId{x}))) return false;
  }
  return true;
}

bool is_antichain_mask(const FinitePoset& poset, const Bits& mask) {
  if (mask.none()) return false;
  for (auto x = mask.find_first(); x != Bits::npos; x = mask.find_next(x)) {
    if ((poset.comparable_set(ElementId{x}) & mask).count() != 1) return false;
  }
  return true;
}

namespace {

bool usable_subset(const FinitePoset& poset, const ElementSubset& subset) {
  return !subset.empty() && subset.within_carrier() && subset.host().same_host(poset);
}

}  // namespace

bool is_chain(const FinitePoset& poset, const ElementSubset& subset) {
  return usable_subset(poset, subset) && is_chain_mask(poset, subset.to_bits());
}

bool is_antichain(const FinitePoset& poset, const ElementSubset& subset) {
  return usable_subset(poset, subset) && is_antichain_mask(poset, subset.to_bits());
}

std::optional<Chain> Chain::make(ElementSubset subset) {
  if (!is_chain(subset.host(), subset)) return std::nullopt;
  return Chain(std::move(subset));
}

std::optional<Antichain> Antichain::make(ElementSubset subset) {
  if (!is_antichain(subset.host(), subset)) return std::nullopt;
  return Antichain(std::move(subset));
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Bits> relation_from_pairs(const std::vector<std::string>& labels,
                                      std::span<const std::pair<std::string, std::string>> pairs,
                                      RelationKind kind) {
  const std::size_t n = labels.size();
  const auto index = index_labels(labels);
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw Error(Errc::UnknownLabel, "unknown label '" + label + "'");
    return it->second;
  };

  std::vector<Bits> leq(n, Bits(n));
  for (const auto& [lo, hi] : pairs) leq[lookup(lo)].set(lookup(hi));

  if (kind == RelationKind::cover) {
    for (std::size_t x = 0; x < n; ++x) leq[x].set(x);
    // Warshall closure on rows.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (leq[i].test(k)) leq[i] |= leq[k];
      }
    }
  }
  return leq;
}

FinitePoset build_poset(std::vector<std::string> labels,
                        std::span<const std::pair<std::string, std::string>> pairs,
                        RelationKind kind) {
  auto leq = relation_from_pairs(labels, pairs, kind);
  if (labels.empty()) throw Error(Errc::EmptyCarrier, "carrier is empty");
  return FinitePoset::from_relation(std::move(labels), std::move(leq));
}

bool comparable(const FinitePoset& poset, ElementId x, ElementId y) {
  return poset.leq(x, y) || poset.leq(y, x);
}

Bits maximal_within(const FinitePoset& poset, const Bits& within) {
  Bits out(poset.size());
  for (auto x = within.find_first(); x != Bits::npos; x = within.find_next(x)) {
    if ((poset.up_set(ElementId{x}) & within).count() == 1) out.set(x);
  }
  return out;
}

Bits minimal_within(const FinitePoset& poset, const Bits& within) {
  Bits out(poset.size());
  for (auto x = within.find_first(); x != Bits::npos; x = within.find_next(x)) {
    if ((poset.down_set(ElementId{x}) & within).count() == 1) out.set(x);
  }
  return out;
}

namespace {

Antichain extremal_antichain(const FinitePoset& poset, const Bits& mask, const char* what) {
  auto antichain = Antichain::make(ElementSubset(poset, mask));
  if (!antichain) {
    throw Error(Errc::InvariantBroken, std::string(what) + " elements do not form a nonempty antichain");
  }
  return std::move(*antichain);
}

}  // namespace

Antichain maximal_elements(const FinitePoset& poset) {
  return extremal_antichain(poset, maximal_within(poset, poset.carrier()), "maximal");
}

Antichain minimal_elements(const FinitePoset& poset) {
  return extremal_antichain(poset, minimal_within(poset, poset.carrier()), "minimal");
}

ElementId minimal_below(const FinitePoset& poset, ElementId y) {
  const Bits& below = poset.down_set(y);
  const Bits candidates = minimal_within(poset, poset.carrier()) & below;
  const auto first = candidates.find_first();
  if (first == Bits::npos) throw Error(Errc::InvariantBroken, "no minimal element below");
  return ElementId{first};
}

ElementId maximal_above(const FinitePoset& poset, ElementId x) {
  const Bits& above = poset.up_set(x);
  const Bits candidates = maximal_within(poset, poset.carrier()) & above;
  const auto first = candidates.find_first();
  if (first == Bits::npos) throw Error(Errc::InvariantBroken, "no maximal element above");
  return ElementId{first};
}

UpDownSplit up_down_split(const FinitePoset& poset, const Antichain& pivot) {
  if (!pivot.subset().host().same_host(poset)) {
    throw Error(Errc::HostMismatch, "antichain belongs to a different poset");
  }
  const std::size_t n = poset.size();
  Bits up(n);
  Bits down(n);
  for (auto a : pivot.subset().members()) {
    up |= poset.up_set(ElementId{a});
    down |= poset.down_set(ElementId{a});
  }
  const Bits missed = ~(up | down);
  if (missed.any()) {
    const auto x = missed.find_first();
    throw Error(Errc::SplitNotCovering,
                "element '" + poset.label(ElementId{x}) + "' is neither above nor below the antichain",
                WitnessPair{x, x, std::nullopt});
  }
  return UpDownSplit{ElementSubset(poset, up), ElementSubset(poset, down), pivot};
}

FinitePoset induced_subposet(const FinitePoset& poset, const ElementSubset& subset) {
  if (!subset.host().same_host(poset)) {
    throw Error(Errc::HostMismatch, "subset belongs to a different poset");
  }
  if (subset.empty()) throw Error(Errc::EmptySubset, "induced subposet of an empty subset");
  if (!subset.within_carrier()) {
    throw Error(Errc::ElementNotInCarrier, "subset has members outside the carrier");
  }
  const auto& members = subset.members();
  const std::size_t k = members.size();
  std::vector<std::string> labels;
  labels.reserve(k);
  std::vector<Bits> leq(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(poset.label(ElementId{members[i]}));
    const Bits& row = poset.up_set(ElementId{members[i]});
    for (std::size_t j = 0; j < k; ++j) {
      if (row.test(members[j])) leq[i].set(j);
    }
  }
  return FinitePoset::from_relation(std::move(labels), std::move(leq));
}

std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(const FinitePoset& poset) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = poset.size();
  for (std::size_t x = 0; x < n; ++x) {
    Bits strictly_above = poset.up_set(ElementId{x});
    strictly_above.reset(x);
    // y covers x iff the only element of (x, y] strictly above x is y itself.
    for (auto y = strictly_above.find_first(); y != Bits::npos; y = strictly_above.find_next(y)) {
      if ((strictly_above & poset.down_set(ElementId{y})).count() == 1) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace posetkit
