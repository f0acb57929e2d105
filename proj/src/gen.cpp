#include "posetkit/gen.hpp"

#include <array>
#include <string>

namespace posetkit {

namespace {

constexpr std::array<std::pair<GenKind, std::string_view>, 7> kKindNames{{
    {GenKind::random_dag, "random_dag"},
    {GenKind::boolean_lattice, "boolean_lattice"},
    {GenKind::divisor, "divisor"},
    {GenKind::grid, "grid"},
    {GenKind::total_order, "total_order"},
    {GenKind::antichain, "antichain"},
    {GenKind::exhaustive, "exhaustive"},
}};

[[noreturn]] void bad_params(const std::string& why) { throw Error(Errc::BadParams, why); }

std::vector<Bits> reflexive(std::size_t n) {
  std::vector<Bits> leq(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) leq[i].set(i);
  return leq;
}

void close_transitively(std::vector<Bits>& leq) {
  const std::size_t n = leq.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (leq[i].test(k)) leq[i] |= leq[k];
    }
  }
}

std::vector<std::string> numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return labels;
}

FinitePoset random_dag(const GenSpec& spec) {
  if (!(spec.edge_prob >= 0.0 && spec.edge_prob <= 1.0)) bad_params("edge probability must lie in [0,1]");
  SplitMix64 rng(spec.seed);
  auto leq = reflexive(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      if (rng.unit() < spec.edge_prob) leq[i].set(j);
    }
  }
  close_transitively(leq);
  return FinitePoset::from_relation(numbered("v", spec.n), std::move(leq));
}

std::string subset_label(std::size_t mask, std::size_t rank) {
  std::string label = "{";
  bool first = true;
  for (std::size_t b = 0; b < rank; ++b) {
    if ((mask >> b) & 1U) {
      if (!first) label += ',';
      label += std::to_string(b);
      first = false;
    }
  }
  return label + "}";
}

FinitePoset boolean_lattice(std::size_t rank) {
  if (rank > kMaxBooleanRank) bad_params("boolean lattice rank above " + std::to_string(kMaxBooleanRank));
  const std::size_t n = std::size_t{1} << rank;
  std::vector<std::string> labels;
  std::vector<Bits> leq(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(subset_label(a, rank));
    for (std::size_t b = 0; b < n; ++b) {
      if ((a & b) == a) leq[a].set(b);
    }
  }
  return FinitePoset::from_relation(std::move(labels), std::move(leq));
}

FinitePoset divisor_poset(std::size_t value) {
  std::vector<std::size_t> small;
  std::vector<std::size_t> large;
  for (std::size_t d = 1; d * d <= value; ++d) {
    if (value % d != 0) continue;
    small.push_back(d);
    if (d * d != value) large.push_back(value / d);
  }
  if (small.size() + large.size() > kMaxGeneratedSize) bad_params("too many divisors");
  std::vector<std::size_t> divisors = small;
  divisors.insert(divisors.end(), large.rbegin(), large.rend());
  const std::size_t n = divisors.size();
  std::vector<std::string> labels;
  std::vector<Bits> leq(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(divisors[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (divisors[j] % divisors[i] == 0) leq[i].set(j);
    }
  }
  return FinitePoset::from_relation(std::move(labels), std::move(leq));
}

FinitePoset grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) bad_params("grid sides must be at least 1");
  if (rows * cols > kMaxGeneratedSize) bad_params("grid too large");
  const std::size_t n = rows * cols;
  std::vector<std::string> labels;
  std::vector<Bits> leq(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("(" + std::to_string(a / cols) + "," + std::to_string(a % cols) + ")");
    for (std::size_t b = 0; b < n; ++b) {
      if (a / cols <= b / cols && a % cols <= b % cols) leq[a].set(b);
    }
  }
  return FinitePoset::from_relation(std::move(labels), std::move(leq));
}

FinitePoset total_order(std::size_t n) {
  std::vector<Bits> leq(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) leq[i].set(j);
  }
  return FinitePoset::from_relation(numbered("c", n), std::move(leq));
}

// Extends every poset on k elements by a new element k whose strict
// down-set D is down-closed, strict up-set U is up-closed, D and U are
// disjoint, and every element of D lies below every element of U. Each
// poset on k+1 elements arises from exactly one (poset, D, U) triple.
void extend(std::vector<Bits>& strict, std::size_t k, std::size_t n,
            const std::function<void(const std::vector<Bits>&)>& visit) {
  if (k == n) {
    visit(strict);
    return;
  }
  const std::size_t subsets = std::size_t{1} << k;
  auto down_closed = [&](std::size_t mask) {
    for (std::size_t x = 0; x < k; ++x) {
      if (!((mask >> x) & 1U)) continue;
      for (std::size_t y = 0; y < k; ++y) {
        if (strict[y].test(x) && !((mask >> y) & 1U)) return false;
      }
    }
    return true;
  };
  auto up_closed = [&](std::size_t mask) {
    for (std::size_t x = 0; x < k; ++x) {
      if (!((mask >> x) & 1U)) continue;
      for (std::size_t y = 0; y < k; ++y) {
        if (strict[x].test(y) && !((mask >> y) & 1U)) return false;
      }
    }
    return true;
  };

  for (std::size_t down = 0; down < subsets; ++down) {
    if (!down_closed(down)) continue;
    for (std::size_t up = 0; up < subsets; ++up) {
      if ((down & up) != 0 || !up_closed(up)) continue;
      bool ordered = true;
      for (std::size_t d = 0; d < k && ordered; ++d) {
        if (!((down >> d) & 1U)) continue;
        for (std::size_t u = 0; u < k; ++u) {
          if (((up >> u) & 1U) && !strict[d].test(u)) {
            ordered = false;
            break;
          }
        }
      }
      if (!ordered) continue;

      for (std::size_t x = 0; x < k; ++x) {
        if ((down >> x) & 1U) strict[x].set(k);
        if ((up >> x) & 1U) strict[k].set(x);
      }
      extend(strict, k + 1, n, visit);
      for (std::size_t x = 0; x < k; ++x) strict[x].reset(k);
      strict[k].reset();
    }
  }
}

}  // namespace

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  for (const auto& [kind, text] : kKindNames) {
    if (text == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(GenKind kind) {
  for (const auto& [k, text] : kKindNames) {
    if (k == kind) return text;
  }
  return "unknown";
}

FinitePoset generate(const GenSpec& spec) {
  if (spec.kind == GenKind::boolean_lattice) return boolean_lattice(spec.n);
  if (spec.n == 0) bad_params("n must be at least 1");
  if (spec.kind != GenKind::divisor && spec.n > kMaxGeneratedSize) bad_params("n too large");

  switch (spec.kind) {
    case GenKind::random_dag: return random_dag(spec);
    case GenKind::divisor: return divisor_poset(spec.n);
    case GenKind::grid: return grid(spec.n, spec.m);
    case GenKind::total_order: return total_order(spec.n);
    case GenKind::antichain: return FinitePoset::from_relation(numbered("a", spec.n), reflexive(spec.n));
    case GenKind::exhaustive: {
      if (spec.n > kMaxEnumerationSize) bad_params("exhaustive kind needs n <= 4");
      auto posets = all_posets(spec.n);
      if (spec.index >= posets.size()) {
        bad_params("index " + std::to_string(spec.index) + " out of range, there are " +
                   std::to_string(posets.size()) + " posets");
      }
      return posets[spec.index];
    }
    case GenKind::boolean_lattice: break;
  }
  bad_params("unknown kind");
}

void enumerate_all_posets(std::size_t n, const std::function<void(const FinitePoset&)>& visit) {
  if (n == 0) bad_params("n must be at least 1");
  if (n > kMaxEnumerationSize) {
    throw Error(Errc::InstanceTooLarge, "exhaustive enumeration is limited to 4 elements");
  }
  const auto labels = numbered("e", n);
  std::vector<Bits> strict(n, Bits(n));
  extend(strict, 0, n, [&](const std::vector<Bits>& rel) {
    auto leq = rel;
    for (std::size_t i = 0; i < n; ++i) leq[i].set(i);
    visit(FinitePoset::from_relation(labels, std::move(leq)));
  });
}

std::vector<FinitePoset> all_posets(std::size_t n) {
  std::vector<FinitePoset> out;
  enumerate_all_posets(n, [&](const FinitePoset& p) { out.push_back(p); });
  return out;
}

}  // namespace posetkit
