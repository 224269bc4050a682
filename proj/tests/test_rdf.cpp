#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zlib.h>

#include <filesystem>
#include <random>

#include "helpers.hpp"
#include "kgevo/io.hpp"
#include "kgevo/rdf.hpp"

using namespace kgevo;
using namespace kgevo::testing;

TEST_CASE("minimal well-formed line") {
  ParseResult r = parse_ntriples("<http://ex.org/a> <http://ex.org/p> \"x\" .\n");
  REQUIRE(r.errors.empty());
  REQUIRE(r.triples.size() == 1);
  const Triple& t = r.triples[0];
  CHECK(t.subject.kind == TermKind::iri);
  CHECK(t.subject.value == "http://ex.org/a");
  CHECK(t.predicate.value == "http://ex.org/p");
  CHECK(t.object.kind == TermKind::literal);
  CHECK(t.object.value == "x");
}

TEST_CASE("empty document") {
  ParseResult r = parse_ntriples("");
  CHECK(r.triples.empty());
  CHECK(r.errors.empty());
}

TEST_CASE("lenient mode reports the bad line and keeps the rest") {
  std::string doc =
      "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n"
      "<http://ex.org/a> <http://ex.org/p> <http://ex.org/c>\n"
      "<http://ex.org/a> <http://ex.org/p> <http://ex.org/d> .\n";
  ParseResult r = parse_ntriples(doc);
  CHECK(r.triples.size() == 2);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].line == 2);
  CHECK(r.errors[0].code == Errc::missing_dot);

  ParseResult strict = parse_ntriples(doc, /*strict=*/true);
  CHECK(strict.triples.size() == 1);
  CHECK(strict.errors.size() == 1);
}

TEST_CASE("error kinds") {
  CHECK(parse_ntriples("\"lit\" <http://p> <http://o> .").errors[0].code ==
        Errc::invalid_subject);
  CHECK(parse_ntriples("<http://bad iri> <http://p> <http://o> .").errors[0].code ==
        Errc::malformed_iri);
  CHECK(parse_ntriples("<http://s> _:b <http://o> .").errors[0].code == Errc::malformed_iri);
  CHECK(parse_ntriples("<http://s> <http://p> \"x\\q\" .").errors[0].code ==
        Errc::malformed_literal);
  CHECK(parse_ntriples("<http://s> <http://p> \"x\"@9x .").errors[0].code ==
        Errc::malformed_literal);
}

TEST_CASE("comments, CRLF and blank lines") {
  std::string doc =
      "# header comment\r\n"
      "\r\n"
      "  <http://s> <http://p> _:b1 . # trailing comment\r\n";
  ParseResult r = parse_ntriples(doc);
  REQUIRE(r.errors.empty());
  REQUIRE(r.triples.size() == 1);
  CHECK(r.triples[0].object.kind == TermKind::blank);
  CHECK(r.triples[0].object.value == "b1");
}

TEST_CASE("escape handling round-trips") {
  std::string line =
      "<http://s> <http://p> \"tab\\tnl\\nquote\\\"back\\\\u\\u0041\"@en .";
  ParseResult r = parse_ntriples(line);
  REQUIRE(r.errors.empty());
  const Term& o = r.triples[0].object;
  CHECK(o.value == "tab\tnl\nquote\"back\\uA");
  CHECK(o.lang == "en");

  // canonical -> parse -> canonical is a fixed point
  std::string canon = r.triples[0].canonical();
  ParseResult again = parse_ntriples(canon);
  REQUIRE(again.errors.empty());
  CHECK(again.triples[0] == r.triples[0]);
  CHECK(again.triples[0].canonical() == canon);
}

TEST_CASE("datatyped literal and language literal are distinct") {
  ParseResult r = parse_ntriples(
      "<http://s> <http://p> \"1\"^^<http://www.w3.org/2001/XMLSchema#int> .\n"
      "<http://s> <http://p> \"1\" .\n"
      "<http://s> <http://p> \"1\"@en .\n");
  REQUIRE(r.triples.size() == 3);
  CHECK(canonical_lines(r.triples).size() == 3);  // exact lexical comparison
}

TEST_CASE("literal invariant: at most one of datatype and language") {
  CHECK_THROWS_AS(Term::literal("x", "http://dt", "en"), std::invalid_argument);
  CHECK_THROWS_AS(Term::iri(""), std::invalid_argument);
  CHECK_THROWS_AS(Term::iri("has space"), std::invalid_argument);
  CHECK_THROWS_AS(Term::blank("-bad"), std::invalid_argument);
}

TEST_CASE("canonical_serialize: empty and order independence") {
  CHECK(canonical_serialize({}) == "");

  std::vector<Triple> forward{triple("a", "p", "b"), triple("a", "p", "c")};
  std::vector<Triple> reversed{triple("a", "p", "c"), triple("a", "p", "b")};
  CHECK(canonical_serialize(forward) == canonical_serialize(reversed));
}

TEST_CASE("canonical_serialize: sorted, duplicate-free, deterministic") {
  std::mt19937 rng(7);
  std::vector<Triple> triples = random_triples(rng, 100);
  std::vector<Triple> shuffled = triples;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  shuffled.push_back(shuffled.front());  // duplicate

  std::string a = canonical_serialize(triples);
  std::string b = canonical_serialize(shuffled);
  CHECK(a == b);

  std::vector<std::string> lines = canonical_lines(shuffled);
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  CHECK(std::adjacent_find(lines.begin(), lines.end()) == lines.end());
}

TEST_CASE("round-trip: parse . serialize . parse is the identity on triple sets") {
  std::mt19937 rng(11);
  for (int round = 0; round < 20; ++round) {
    std::vector<Triple> triples = random_triples(rng, 60);
    if (round % 2 == 0) triples.push_back(literal_triple("s0", "p0", "weird \"\\\n\t value"));
    std::string doc = canonical_serialize(triples);
    ParseResult r = parse_ntriples(doc, /*strict=*/true);
    REQUIRE(r.errors.empty());
    CHECK(canonical_serialize(r.triples) == doc);
  }
}

TEST_CASE("triple total order: subject, then predicate, then object") {
  Triple t1 = triple("a", "p", "b");
  Triple t2 = triple("a", "q", "a");
  Triple t3 = triple("b", "a", "a");
  CHECK(t1 < t2);
  CHECK(t2 < t3);
  CHECK_FALSE(t3 < t1);
}

TEST_CASE("dictionary: dense first-seen ids") {
  Dictionary dict;
  Triple t = triple("a", "p", "b");
  EncodedTriple e = encode(dict, t);
  CHECK(e.s == 0);
  CHECK(e.p == 1);
  CHECK(e.o == 2);
  CHECK(encode(dict, t) == e);  // idempotent
  CHECK(dict.size() == 3);
  CHECK(decode(dict, e) == t);
}

TEST_CASE("dictionary: unknown id") {
  Dictionary dict;
  CHECK_THROWS_AS(dict.decode(0), Error);
  try {
    dict.decode(5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_id);
  }
}

TEST_CASE("dictionary: ids are stable and round-trip over a 1000-triple fixture") {
  std::mt19937 rng(3);
  std::vector<Triple> triples = random_triples(rng, 1000, 200, 20, 300);
  Dictionary dict;
  std::vector<EncodedTriple> encoded;
  for (const Triple& t : triples) encoded.push_back(encode(dict, t));
  std::uint64_t size_after = dict.size();
  std::vector<Triple> decoded;
  for (const EncodedTriple& e : encoded) decoded.push_back(decode(dict, e));
  CHECK(decoded == triples);
  // re-encoding assigns no new ids
  for (const Triple& t : triples) encode(dict, t);
  CHECK(dict.size() == size_after);
}

TEST_CASE("gzip input is transparently decompressed") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "kgevo_gz_test";
  fs::create_directories(dir);
  fs::path gz = dir / "data.nt.gz";
  std::string payload = "<http://ex.org/a> <http://ex.org/p> <http://ex.org/b> .\n";
  gzFile f = gzopen(gz.c_str(), "wb");
  REQUIRE(f != nullptr);
  gzwrite(f, payload.data(), static_cast<unsigned>(payload.size()));
  gzclose(f);

  CHECK(read_file(gz) == payload);
  ParseResult r = parse_ntriples(read_file(gz));
  CHECK(r.triples.size() == 1);
  fs::remove_all(dir);
}
