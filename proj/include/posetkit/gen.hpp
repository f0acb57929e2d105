#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "posetkit/core.hpp"

namespace posetkit {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed constants so every platform
/// draws the same sequence for the same seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// In [0, bound) by modulo reduction, bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

enum class GenKind { random_dag, boolean_lattice, divisor, grid, total_order, antichain, exhaustive };

std::optional<GenKind> parse_gen_kind(std::string_view name);
std::string_view to_string(GenKind kind);

/// Parameters per kind:
///   random_dag      n elements, each pair i<j a cover edge with edge_prob
///   boolean_lattice subsets of an n-element set (2^n elements)
///   divisor         divisors of n under divisibility
///   grid            n x m product of two chains
///   total_order     n-element chain
///   antichain       n pairwise incomparable elements
///   exhaustive      the index-th labelled poset on n elements, in
///                   enumerate_all_posets order
struct GenSpec {
  GenKind kind = GenKind::random_dag;
  std::size_t n = 1;
  std::size_t m = 1;
  std::uint64_t seed = 0;
  double edge_prob = 0.5;
  std::size_t index = 0;
};

inline constexpr std::size_t kMaxBooleanRank = 12;
inline constexpr std::size_t kMaxGeneratedSize = 4096;
inline constexpr std::size_t kMaxEnumerationSize = 4;

/// Throws BadParams.
FinitePoset generate(const GenSpec& spec);

/// Calls `visit` once for every labelled partial order on n elements.
/// Elements are labelled e0..e{n-1}. Throws InstanceTooLarge for n > 4 and
/// BadParams for n = 0.
void enumerate_all_posets(std::size_t n, const std::function<void(const FinitePoset&)>& visit);
std::vector<FinitePoset> all_posets(std::size_t n);

}  // namespace posetkit
