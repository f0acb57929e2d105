#include "posetkit/document.hpp"

#include <optional>
#include <sstream>

namespace posetkit {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string token; in >> token;) tokens.push_back(std::move(token));
  return tokens;
}

/// Significant lines between the header and `end`. Checks the header.
std::vector<Line> body_lines(std::string_view text, std::string_view doc_type) {
  std::vector<Line> lines;
  bool header_seen = false;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = text.find('\n', start);
    const auto raw = text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
    start = stop == std::string_view::npos ? text.size() + 1 : stop + 1;
    ++number;

    auto tokens = split_tokens(raw);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;

    if (!header_seen) {
      if (tokens.size() != 2 || tokens[0] != kFormatVersion) {
        throw ParseError(number, "expected header '" + std::string(kFormatVersion) + " " +
                                     std::string(doc_type) + "'");
      }
      if (tokens[1] != doc_type) {
        throw ParseError(number, "expected a " + std::string(doc_type) + " document, got " + tokens[1]);
      }
      header_seen = true;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "end") return lines;
    lines.push_back(Line{number, std::move(tokens)});
  }
  if (!header_seen) throw ParseError(number, "empty document");
  throw ParseError(number, "missing 'end' (truncated document?)");
}

void expect_args(const Line& line, std::size_t count) {
  if (line.tokens.size() != count + 1) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' takes " + std::to_string(count) + " argument(s)");
  }
}

template <typename T>
void set_once(std::optional<T>& slot, T value, const Line& line) {
  if (slot) throw ParseError(line.number, "duplicate '" + line.tokens[0] + "'");
  slot = std::move(value);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    out += ' ';
    out += item;
  }
  return out;
}

std::string header(std::string_view doc_type) {
  return std::string(kFormatVersion) + " " + std::string(doc_type) + "\n";
}

std::string dot_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

PosetDocument parse_poset_document(std::string_view text) {
  PosetDocument doc;
  std::optional<RelationKind> kind;
  bool elements_seen = false;
  for (const auto& line : body_lines(text, "poset")) {
    const auto& directive = line.tokens[0];
    if (directive == "elements") {
      elements_seen = true;
      doc.elements.insert(doc.elements.end(), line.tokens.begin() + 1, line.tokens.end());
    } else if (directive == "relation") {
      expect_args(line, 1);
      if (line.tokens[1] == "cover") {
        set_once(kind, RelationKind::cover, line);
      } else if (line.tokens[1] == "full") {
        set_once(kind, RelationKind::full, line);
      } else {
        throw ParseError(line.number, "relation must be 'cover' or 'full'");
      }
    } else if (directive == "pair") {
      expect_args(line, 2);
      doc.pairs.emplace_back(line.tokens[1], line.tokens[2]);
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }
  if (!elements_seen) throw ParseError(0, "missing 'elements'");
  if (!kind) throw ParseError(0, "missing 'relation'");
  doc.kind = *kind;
  return doc;
}

CoverDocument parse_cover_document(std::string_view text) {
  CoverDocument doc;
  std::optional<Flavor> flavor;
  std::optional<std::string> method;
  for (const auto& line : body_lines(text, "cover")) {
    const auto& directive = line.tokens[0];
    if (directive == "flavor") {
      expect_args(line, 1);
      if (line.tokens[1] == "chains") {
        set_once(flavor, Flavor::chain_cover, line);
      } else if (line.tokens[1] == "antichains") {
        set_once(flavor, Flavor::antichain_cover, line);
      } else {
        throw ParseError(line.number, "flavor must be 'chains' or 'antichains'");
      }
    } else if (directive == "method") {
      expect_args(line, 1);
      set_once(method, line.tokens[1], line);
    } else if (directive == "part") {
      doc.parts.emplace_back(line.tokens.begin() + 1, line.tokens.end());
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }
  if (!flavor) throw ParseError(0, "missing 'flavor'");
  if (!method) throw ParseError(0, "missing 'method'");
  doc.flavor = *flavor;
  doc.method = *method;
  return doc;
}

WitnessDocument parse_witness_document(std::string_view text) {
  WitnessDocument doc;
  std::optional<WitnessKind> kind;
  bool members_seen = false;
  for (const auto& line : body_lines(text, "witness")) {
    const auto& directive = line.tokens[0];
    if (directive == "kind") {
      expect_args(line, 1);
      if (line.tokens[1] == "antichain") {
        set_once(kind, WitnessKind::antichain, line);
      } else if (line.tokens[1] == "chain") {
        set_once(kind, WitnessKind::chain, line);
      } else {
        throw ParseError(line.number, "kind must be 'antichain' or 'chain'");
      }
    } else if (directive == "members") {
      members_seen = true;
      doc.members.insert(doc.members.end(), line.tokens.begin() + 1, line.tokens.end());
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }
  if (!kind) throw ParseError(0, "missing 'kind'");
  if (!members_seen) throw ParseError(0, "missing 'members'");
  doc.kind = *kind;
  return doc;
}

std::string write_poset_document(const PosetDocument& doc) {
  std::string out = header("poset");
  out += "elements" + join(doc.elements) + "\n";
  out += doc.kind == RelationKind::cover ? "relation cover\n" : "relation full\n";
  for (const auto& [lo, hi] : doc.pairs) out += "pair " + lo + " " + hi + "\n";
  return out + "end\n";
}

std::string write_cover_document(const CoverDocument& doc) {
  std::string out = header("cover");
  out += doc.flavor == Flavor::chain_cover ? "flavor chains\n" : "flavor antichains\n";
  out += "method " + doc.method + "\n";
  for (const auto& part : doc.parts) out += "part" + join(part) + "\n";
  return out + "end\n";
}

std::string write_witness_document(const WitnessDocument& doc) {
  std::string out = header("witness");
  out += doc.kind == WitnessKind::antichain ? "kind antichain\n" : "kind chain\n";
  out += "members" + join(doc.members) + "\n";
  return out + "end\n";
}

PosetDocument to_document(const FinitePoset& poset) {
  PosetDocument doc{poset.labels(), RelationKind::cover, {}};
  for (const auto& [lo, hi] : cover_pairs(poset)) {
    doc.pairs.emplace_back(poset.label(ElementId{lo}), poset.label(ElementId{hi}));
  }
  return doc;
}

CoverDocument to_document(const CoverFamily& cover, std::string method) {
  const CoverFamily sorted = canonical_order(cover);
  CoverDocument doc{cover.flavor, std::move(method), {}};
  for (const auto& part : sorted.parts) doc.parts.push_back(part.member_labels());
  return doc;
}

WitnessDocument to_document(const ElementSubset& witness, WitnessKind kind) {
  return WitnessDocument{kind, witness.member_labels()};
}

FinitePoset to_poset(const PosetDocument& doc) {
  return build_poset(doc.elements, doc.pairs, doc.kind);
}

CoverFamily to_cover(const CoverDocument& doc, const FinitePoset& poset) {
  CoverFamily cover{poset, {}, doc.flavor};
  for (const auto& part : doc.parts) {
    std::vector<std::size_t> members;
    for (const auto& label : part) members.push_back(poset.id(label).index);
    cover.parts.emplace_back(poset, std::move(members));
  }
  return cover;
}

ElementSubset to_subset(const WitnessDocument& doc, const FinitePoset& poset) {
  std::vector<std::size_t> members;
  for (const auto& label : doc.members) members.push_back(poset.id(label).index);
  return ElementSubset(poset, std::move(members));
}

std::string to_dot(const FinitePoset& poset) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + dot_quote(poset.label(ElementId{i})) + "];\n";
  }
  for (const auto& [lo, hi] : cover_pairs(poset)) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  return out + "}\n";
}

}  // namespace posetkit
