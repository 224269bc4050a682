#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kgevo/errors.hpp"

namespace kgevo {

namespace iri {
// Well-known vocabulary IRIs used across the analytics modules.
inline constexpr const char* rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* rdf_lang_string = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr const char* rdf_property = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline constexpr const char* rdfs_class = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr const char* rdfs_subclass_of = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr const char* owl_class = "http://www.w3.org/2002/07/owl#Class";
inline constexpr const char* dct_modified = "http://purl.org/dc/terms/modified";
}  // namespace iri

enum class TermKind : std::uint8_t { iri, blank, literal };

/// One RDF term. `value` holds the IRI text, the blank-node label, or the
/// literal lexical form depending on `kind`. A literal carries at most one
/// of `datatype` / `lang`; a language-tagged literal has implicit datatype
/// rdf:langString and leaves `datatype` empty.
struct Term {
  TermKind kind = TermKind::iri;
  std::string value;
  std::string datatype;
  std::string lang;

  static Term iri(std::string v);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = {}, std::string lang = {});

  bool is_resource() const { return kind != TermKind::literal; }

  /// N-Triples token: `<iri>`, `_:label`, or a quoted, escaped literal.
  std::string canonical() const;

  /// Node label used in reports: IRI text, or `_:label` for blank nodes.
  std::string label() const;

  bool operator==(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  /// Full canonical N-Triples line without the trailing newline.
  std::string canonical() const;

  bool operator==(const Triple&) const = default;
};

// Total order: lexicographic over (subject token, predicate token, object token).
bool operator<(const Triple& a, const Triple& b);

struct ParseError {
  std::size_t line = 0;
  Errc code = Errc::invalid_input;
  std::string message;
};

struct ParseResult {
  std::vector<Triple> triples;
  std::vector<ParseError> errors;
};

/// Parse N-Triples text. In lenient mode (default) malformed lines are
/// reported in `errors` and skipped; in strict mode parsing stops at the
/// first error.
ParseResult parse_ntriples(std::string_view text, bool strict = false);

/// Sorted, duplicate-free canonical lines for a triple collection.
std::vector<std::string> canonical_lines(const std::vector<Triple>& triples);

/// Deterministic byte serialization: sorted canonical lines, LF-terminated.
std::string canonical_serialize(const std::vector<Triple>& triples);

/// Sort + dedupe in place, by the Triple total order.
void sort_unique(std::vector<Triple>& triples);

struct EncodedTriple {
  std::uint64_t s = 0;
  std::uint64_t p = 0;
  std::uint64_t o = 0;
  auto operator<=>(const EncodedTriple&) const = default;
};

/// Bijective Term <-> id map; ids are dense and assigned in first-seen order.
class Dictionary {
public:
  std::uint64_t encode(const Term& t);
  std::optional<std::uint64_t> lookup(const Term& t) const;
  const Term& decode(std::uint64_t id) const;
  std::uint64_t size() const { return reverse_.size(); }

private:
  std::unordered_map<std::string, std::uint64_t> forward_;  // canonical token -> id
  std::vector<Term> reverse_;
};

EncodedTriple encode(Dictionary& dict, const Triple& t);
Triple decode(const Dictionary& dict, const EncodedTriple& e);

}  // namespace kgevo
