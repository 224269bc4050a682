#include "kgevo/rdf.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace kgevo {

namespace {

bool valid_iri_value(std::string_view v) {
  if (v.empty()) return false;
  for (unsigned char c : v) {
    if (c <= 0x20 || c == '<' || c == '>') return false;
  }
  return true;
}

bool blank_label_start(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

bool blank_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-';
}

bool valid_blank_label(std::string_view v) {
  if (v.empty() || !blank_label_start(v[0])) return false;
  return std::all_of(v.begin() + 1, v.end(), blank_label_char);
}

bool valid_lang_tag(std::string_view v) {
  std::size_t i = 0;
  std::size_t run = 0;
  bool first = true;
  while (i < v.size()) {
    char c = v[i];
    if (c == '-') {
      if (run == 0 || run > 8) return false;
      run = 0;
      first = false;
    } else if (first ? std::isalpha(static_cast<unsigned char>(c))
                     : std::isalnum(static_cast<unsigned char>(c))) {
      ++run;
    } else {
      return false;
    }
    ++i;
  }
  return run >= 1 && run <= 8;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

void escape_into(std::string& out, std::string_view raw) {
  static constexpr char hex[] = "0123456789ABCDEF";
  for (unsigned char c : raw) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20) {
          out += "\\u00";
          out += hex[c >> 4];
          out += hex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
}

// Cursor over one line of input.
struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool skip_ws() {
    std::size_t start = pos;
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    return pos > start;
  }
  bool starts_with(std::string_view s) const { return text.substr(pos, s.size()) == s; }
};

struct LineError {
  Errc code;
  std::string message;
};

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Reads \uXXXX / \UXXXXXXXX after the backslash marker has been consumed.
bool read_ucode(Scanner& sc, std::size_t digits, std::string& out) {
  if (sc.text.size() - sc.pos < digits) return false;
  std::uint32_t cp = 0;
  for (std::size_t i = 0; i < digits; ++i) {
    int h = hex_value(sc.text[sc.pos + i]);
    if (h < 0) return false;
    cp = cp << 4 | static_cast<std::uint32_t>(h);
  }
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
  sc.pos += digits;
  append_utf8(out, cp);
  return true;
}

// `<...>` with UCHAR escapes. Returns the raw IRI value.
std::string parse_iriref(Scanner& sc, LineError& err) {
  ++sc.pos;  // '<'
  std::string value;
  while (!sc.done()) {
    char c = sc.peek();
    if (c == '>') {
      ++sc.pos;
      if (!valid_iri_value(value)) {
        err = {Errc::malformed_iri, "invalid IRI <" + value + ">"};
        return {};
      }
      return value;
    }
    if (c == '\\') {
      ++sc.pos;
      if (!sc.done() && sc.peek() == 'u' && (++sc.pos, read_ucode(sc, 4, value))) continue;
      if (!sc.done() && sc.peek() == 'U' && (++sc.pos, read_ucode(sc, 8, value))) continue;
      err = {Errc::malformed_iri, "bad escape in IRI"};
      return {};
    }
    value += c;
    ++sc.pos;
  }
  err = {Errc::malformed_iri, "unterminated IRI"};
  return {};
}

std::string parse_blank(Scanner& sc, LineError& err) {
  sc.pos += 2;  // "_:"
  std::size_t start = sc.pos;
  while (!sc.done() && blank_label_char(sc.peek())) ++sc.pos;
  std::string label(sc.text.substr(start, sc.pos - start));
  if (!valid_blank_label(label)) {
    err = {Errc::malformed_iri, "invalid blank node label '_:" + label + "'"};
    return {};
  }
  return label;
}

Term parse_literal(Scanner& sc, LineError& err) {
  ++sc.pos;  // opening '"'
  std::string lexical;
  bool closed = false;
  while (!sc.done()) {
    char c = sc.peek();
    if (c == '"') {
      ++sc.pos;
      closed = true;
      break;
    }
    if (c == '\\') {
      ++sc.pos;
      if (sc.done()) break;
      char e = sc.peek();
      ++sc.pos;
      switch (e) {
        case 't': lexical += '\t'; break;
        case 'b': lexical += '\b'; break;
        case 'n': lexical += '\n'; break;
        case 'r': lexical += '\r'; break;
        case 'f': lexical += '\f'; break;
        case '"': lexical += '"'; break;
        case '\'': lexical += '\''; break;
        case '\\': lexical += '\\'; break;
        case 'u':
          if (!read_ucode(sc, 4, lexical)) {
            err = {Errc::malformed_literal, "bad \\u escape"};
            return {};
          }
          break;
        case 'U':
          if (!read_ucode(sc, 8, lexical)) {
            err = {Errc::malformed_literal, "bad \\U escape"};
            return {};
          }
          break;
        default:
          err = {Errc::malformed_literal, std::string("unknown escape '\\") + e + "'"};
          return {};
      }
      continue;
    }
    lexical += c;
    ++sc.pos;
  }
  if (!closed) {
    err = {Errc::malformed_literal, "unterminated literal"};
    return {};
  }
  if (sc.starts_with("@")) {
    ++sc.pos;
    std::size_t start = sc.pos;
    while (!sc.done() && (std::isalnum(static_cast<unsigned char>(sc.peek())) || sc.peek() == '-'))
      ++sc.pos;
    std::string tag(sc.text.substr(start, sc.pos - start));
    if (!valid_lang_tag(tag)) {
      err = {Errc::malformed_literal, "invalid language tag '@" + tag + "'"};
      return {};
    }
    return Term::literal(std::move(lexical), {}, std::move(tag));
  }
  if (sc.starts_with("^^")) {
    sc.pos += 2;
    if (sc.done() || sc.peek() != '<') {
      err = {Errc::malformed_literal, "expected datatype IRI after ^^"};
      return {};
    }
    std::string dt = parse_iriref(sc, err);
    if (!err.message.empty()) {
      err.code = Errc::malformed_literal;
      return {};
    }
    return Term::literal(std::move(lexical), std::move(dt));
  }
  return Term::literal(std::move(lexical));
}

// One N-Triples statement; nullopt for blank/comment-only lines.
std::optional<Triple> parse_line(std::string_view line, LineError& err) {
  Scanner sc{line};
  sc.skip_ws();
  if (sc.done() || sc.peek() == '#') return std::nullopt;

  Triple t;
  // subject
  if (sc.peek() == '"') {
    err = {Errc::invalid_subject, "literal in subject position"};
    return std::nullopt;
  } else if (sc.peek() == '<') {
    std::string v = parse_iriref(sc, err);
    if (!err.message.empty()) return std::nullopt;
    t.subject = Term::iri(std::move(v));
  } else if (sc.starts_with("_:")) {
    std::string label = parse_blank(sc, err);
    if (!err.message.empty()) return std::nullopt;
    t.subject = Term::blank(std::move(label));
  } else {
    err = {Errc::malformed_iri, "expected IRI or blank node subject"};
    return std::nullopt;
  }

  if (!sc.skip_ws()) {
    err = {Errc::malformed_iri, "expected whitespace after subject"};
    return std::nullopt;
  }
  if (sc.done() || sc.peek() != '<') {
    err = {Errc::malformed_iri, "predicate must be an IRI"};
    return std::nullopt;
  }
  std::string pred = parse_iriref(sc, err);
  if (!err.message.empty()) return std::nullopt;
  t.predicate = Term::iri(std::move(pred));

  if (!sc.skip_ws()) {
    err = {Errc::malformed_iri, "expected whitespace after predicate"};
    return std::nullopt;
  }
  if (sc.done()) {
    err = {Errc::missing_dot, "line ends before object"};
    return std::nullopt;
  }
  if (sc.peek() == '<') {
    std::string v = parse_iriref(sc, err);
    if (!err.message.empty()) return std::nullopt;
    t.object = Term::iri(std::move(v));
  } else if (sc.starts_with("_:")) {
    std::string label = parse_blank(sc, err);
    if (!err.message.empty()) return std::nullopt;
    t.object = Term::blank(std::move(label));
  } else if (sc.peek() == '"') {
    t.object = parse_literal(sc, err);
    if (!err.message.empty()) return std::nullopt;
  } else {
    err = {Errc::malformed_literal, "expected IRI, blank node, or literal object"};
    return std::nullopt;
  }

  sc.skip_ws();
  if (sc.done() || sc.peek() != '.') {
    err = {Errc::missing_dot, "missing terminating '.'"};
    return std::nullopt;
  }
  ++sc.pos;
  sc.skip_ws();
  if (!sc.done() && sc.peek() != '#') {
    err = {Errc::missing_dot, "unexpected characters after terminating '.'"};
    return std::nullopt;
  }
  return t;
}

}  // namespace

Term Term::iri(std::string v) {
  if (!valid_iri_value(v)) throw std::invalid_argument("invalid IRI value: " + v);
  Term t;
  t.kind = TermKind::iri;
  t.value = std::move(v);
  return t;
}

Term Term::blank(std::string label) {
  if (!valid_blank_label(label)) throw std::invalid_argument("invalid blank node label: " + label);
  Term t;
  t.kind = TermKind::blank;
  t.value = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype, std::string lang) {
  if (!datatype.empty() && !lang.empty())
    throw std::invalid_argument("literal cannot carry both datatype and language tag");
  if (!datatype.empty() && !valid_iri_value(datatype))
    throw std::invalid_argument("invalid datatype IRI: " + datatype);
  if (!lang.empty() && !valid_lang_tag(lang))
    throw std::invalid_argument("invalid language tag: " + lang);
  Term t;
  t.kind = TermKind::literal;
  t.value = std::move(lexical);
  t.datatype = std::move(datatype);
  t.lang = std::move(lang);
  return t;
}

std::string Term::canonical() const {
  std::string out;
  switch (kind) {
    case TermKind::iri:
      out.reserve(value.size() + 2);
      out += '<';
      out += value;
      out += '>';
      break;
    case TermKind::blank:
      out += "_:";
      out += value;
      break;
    case TermKind::literal:
      out += '"';
      escape_into(out, value);
      out += '"';
      if (!lang.empty()) {
        out += '@';
        out += lang;
      } else if (!datatype.empty()) {
        out += "^^<";
        out += datatype;
        out += '>';
      }
      break;
  }
  return out;
}

std::string Term::label() const {
  if (kind == TermKind::blank) return "_:" + value;
  return value;
}

std::string Triple::canonical() const {
  return subject.canonical() + " " + predicate.canonical() + " " + object.canonical() + " .";
}

bool operator<(const Triple& a, const Triple& b) {
  if (int c = a.subject.canonical().compare(b.subject.canonical()); c != 0) return c < 0;
  if (int c = a.predicate.value.compare(b.predicate.value); c != 0) return c < 0;
  return a.object.canonical() < b.object.canonical();
}

ParseResult parse_ntriples(std::string_view text, bool strict) {
  ParseResult result;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    LineError err{Errc::invalid_input, ""};
    std::optional<Triple> t = parse_line(line, err);
    if (!err.message.empty()) {
      result.errors.push_back({line_no, err.code, err.message});
      if (strict) return result;
    } else if (t) {
      result.triples.push_back(std::move(*t));
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return result;
}

std::vector<std::string> canonical_lines(const std::vector<Triple>& triples) {
  std::vector<std::string> lines;
  lines.reserve(triples.size());
  for (const Triple& t : triples) lines.push_back(t.canonical());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

std::string canonical_serialize(const std::vector<Triple>& triples) {
  std::string out;
  for (const std::string& line : canonical_lines(triples)) {
    out += line;
    out += '\n';
  }
  return out;
}

void sort_unique(std::vector<Triple>& triples) {
  // Sort indirectly through precomputed lines; Triple::operator< allocates.
  std::vector<std::string> keys;
  keys.reserve(triples.size());
  for (const Triple& t : triples) keys.push_back(t.canonical());
  std::vector<std::size_t> order(triples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<Triple> sorted;
  sorted.reserve(triples.size());
  const std::string* last = nullptr;
  for (std::size_t i : order) {
    if (last == nullptr || keys[i] != *last) {
      sorted.push_back(std::move(triples[i]));
      last = &keys[i];
    }
  }
  triples = std::move(sorted);
}

std::uint64_t Dictionary::encode(const Term& t) {
  std::string key = t.canonical();
  auto it = forward_.find(key);
  if (it != forward_.end()) return it->second;
  std::uint64_t id = reverse_.size();
  forward_.emplace(std::move(key), id);
  reverse_.push_back(t);
  return id;
}

std::optional<std::uint64_t> Dictionary::lookup(const Term& t) const {
  auto it = forward_.find(t.canonical());
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

const Term& Dictionary::decode(std::uint64_t id) const {
  if (id >= reverse_.size()) fail(Errc::unknown_id, "id " + std::to_string(id) + " not in dictionary");
  return reverse_[id];
}

EncodedTriple encode(Dictionary& dict, const Triple& t) {
  return {dict.encode(t.subject), dict.encode(t.predicate), dict.encode(t.object)};
}

Triple decode(const Dictionary& dict, const EncodedTriple& e) {
  return {dict.decode(e.s), dict.decode(e.p), dict.decode(e.o)};
}

}  // namespace kgevo
