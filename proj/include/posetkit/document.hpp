#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetkit/core.hpp"
#include "posetkit/decomp.hpp"

// Line-oriented text formats for posets, covers and witnesses. The grammar
// is documented in docs/FORMAT.md.

namespace posetkit {

inline constexpr std::string_view kFormatVersion = "posetkit/1";

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct PosetDocument {
  std::vector<std::string> elements;
  RelationKind kind = RelationKind::cover;
  std::vector<std::pair<std::string, std::string>> pairs;
};

struct CoverDocument {
  Flavor flavor = Flavor::chain_cover;
  std::string method;
  std::vector<std::vector<std::string>> parts;
};

enum class WitnessKind { antichain, chain };

struct WitnessDocument {
  WitnessKind kind = WitnessKind::antichain;
  std::vector<std::string> members;
};

PosetDocument parse_poset_document(std::string_view text);
CoverDocument parse_cover_document(std::string_view text);
WitnessDocument parse_witness_document(std::string_view text);

std::string write_poset_document(const PosetDocument& doc);
std::string write_cover_document(const CoverDocument& doc);
std::string write_witness_document(const WitnessDocument& doc);

/// Canonical document: kind=cover with the Hasse pairs in index order.
PosetDocument to_document(const FinitePoset& poset);
/// Parts in canonical order, members in index order.
CoverDocument to_document(const CoverFamily& cover, std::string method);
WitnessDocument to_document(const ElementSubset& witness, WitnessKind kind);

FinitePoset to_poset(const PosetDocument& doc);
/// Throws UnknownLabel for labels missing from `poset`.
CoverFamily to_cover(const CoverDocument& doc, const FinitePoset& poset);
ElementSubset to_subset(const WitnessDocument& doc, const FinitePoset& poset);

/// Graphviz rendering of the cover relation, drawn bottom to top.
std::string to_dot(const FinitePoset& poset);

}  // namespace posetkit
