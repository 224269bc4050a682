#include "kgevo/ontology.hpp"

#include <algorithm>
#include <cmath>

#include "kgevo/io.hpp"

namespace kgevo {

namespace {

void touch_terms(const std::vector<Triple>& triples, std::set<std::string>& terms) {
  for (const Triple& t : triples) {
    terms.insert(t.subject.label());
    terms.insert(t.predicate.value);
    if (t.object.is_resource()) terms.insert(t.object.label());
  }
}

bool induced_by(const OntologyChange& change, const std::vector<OntologyChange>& external,
                double threshold_seconds) {
  for (const OntologyChange& e : external) {
    double es = std::abs(static_cast<double>(change.epoch_seconds - e.epoch_seconds));
    if (es <= threshold_seconds && !change_alignment(change, e).empty()) return true;
  }
  return false;
}

// Property declaration classes recognized for schema counting.
const std::set<std::string>& property_classes() {
  static const std::set<std::string> classes = {
      iri::rdf_property,
      "http://www.w3.org/2002/07/owl#ObjectProperty",
      "http://www.w3.org/2002/07/owl#DatatypeProperty",
      "http://www.w3.org/2002/07/owl#AnnotationProperty",
      "http://www.w3.org/2002/07/owl#FunctionalProperty",
      "http://www.w3.org/2002/07/owl#InverseFunctionalProperty",
      "http://www.w3.org/2002/07/owl#TransitiveProperty",
      "http://www.w3.org/2002/07/owl#SymmetricProperty",
  };
  return classes;
}

}  // namespace

OntologyChange make_change(std::string ontology, std::string timestamp, const ChangeSet& cs) {
  OntologyChange change;
  change.ontology = std::move(ontology);
  change.epoch_seconds = parse_iso8601_utc(timestamp);
  change.timestamp = std::move(timestamp);
  touch_terms(cs.added, change.touched_terms);
  touch_terms(cs.deleted, change.touched_terms);
  return change;
}

std::optional<std::string> dct_modified_of(const Snapshot& snapshot) {
  const Dictionary& dict = *snapshot.dict;
  std::optional<std::string> latest;
  std::int64_t latest_seconds = 0;
  for (const EncodedTriple& e : snapshot.triples) {
    if (dict.decode(e.p).value != iri::dct_modified) continue;
    const Term& obj = dict.decode(e.o);
    if (obj.kind != TermKind::literal) continue;
    try {
      std::int64_t seconds = parse_iso8601_utc(obj.value);
      if (!latest || seconds > latest_seconds) {
        latest = obj.value;
        latest_seconds = seconds;
      }
    } catch (const Error&) {
      // non-instant dct:modified values (plain dates etc.) are skipped
    }
  }
  return latest;
}

SyncResult evolutionary_sync(const OntologyChange& c1, const OntologyChange& c2,
                             double threshold_seconds) {
  SyncResult result;
  result.es_seconds = std::abs(static_cast<double>(c1.epoch_seconds - c2.epoch_seconds));
  result.threshold_seconds = threshold_seconds;
  result.synchronized = result.es_seconds <= threshold_seconds;
  result.aligned_terms = change_alignment(c1, c2);
  return result;
}

std::set<std::string> change_alignment(const OntologyChange& c1, const OntologyChange& c2) {
  std::set<std::string> shared;
  std::set_intersection(c1.touched_terms.begin(), c1.touched_terms.end(),
                        c2.touched_terms.begin(), c2.touched_terms.end(),
                        std::inserter(shared, shared.begin()));
  return shared;
}

DependencyResult evolutionary_dependency(const std::vector<OntologyChange>& changes,
                                         const std::vector<OntologyChange>& external,
                                         double threshold_seconds) {
  DependencyResult result;
  for (const OntologyChange& change : changes) {
    if (induced_by(change, external, threshold_seconds)) {
      ++result.externally_induced;
    } else {
      ++result.ontology_specific;
    }
  }
  if (result.ontology_specific == 0)
    fail(Errc::undefined_dependency, "no ontology-specific changes; ED = EC/SC is undefined");
  result.ed = static_cast<double>(result.externally_induced) /
              static_cast<double>(result.ontology_specific);
  return result;
}

SchemaCounts schema_counts(const Snapshot& snapshot) {
  const Dictionary& dict = *snapshot.dict;
  std::set<std::string> classes, properties;
  std::size_t subclass_axioms = 0;

  // Pass 1: declared classes (typed as a class class, or subClassOf endpoint)
  // and declared properties.
  for (const EncodedTriple& e : snapshot.triples) {
    const std::string& pred = dict.decode(e.p).value;
    const Term& obj = dict.decode(e.o);
    if (pred == iri::rdfs_subclass_of) {
      ++subclass_axioms;
      classes.insert(dict.decode(e.s).label());
      if (obj.is_resource()) classes.insert(obj.label());
    } else if (pred == iri::rdf_type && obj.is_resource()) {
      if (obj.value == iri::owl_class || obj.value == iri::rdfs_class)
        classes.insert(dict.decode(e.s).label());
      if (property_classes().count(obj.value)) properties.insert(dict.decode(e.s).label());
    }
  }
  // Pass 2: classes used in instance typing, judging "instance" against the
  // declared set only so the result cannot depend on triple order; plus
  // every predicate in use.
  std::set<std::string> instance_typed;
  for (const EncodedTriple& e : snapshot.triples) {
    const std::string& pred = dict.decode(e.p).value;
    properties.insert(pred);
    if (pred != iri::rdf_type) continue;
    const Term& obj = dict.decode(e.o);
    if (!obj.is_resource()) continue;
    if (!classes.count(dict.decode(e.s).label())) instance_typed.insert(obj.label());
  }
  classes.insert(instance_typed.begin(), instance_typed.end());

  SchemaCounts counts;
  counts.class_count = classes.size();
  counts.subclass_axiom_count = subclass_axioms;
  counts.property_count = properties.size();
  return counts;
}

}  // namespace kgevo
