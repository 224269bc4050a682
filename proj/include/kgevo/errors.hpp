#pragma once

#include <stdexcept>
#include <string>

namespace kgevo {

enum class Errc {
  invalid_input,
  // N-Triples parsing
  malformed_iri,
  malformed_literal,
  missing_dot,
  invalid_subject,
  // dictionary
  unknown_id,
  // version store
  non_monotone_timestamp,
  io_failure,
  unknown_version,
  corrupt_chain,
  // statistics
  empty_input,
  invalid_theta,
  invalid_omega,
  // graph metrics
  empty_graph,
  not_converged,
  // embeddings
  no_trainable_triples,
  unknown_entity,
  empty_snapshot,
  // perturbation
  too_few_entities,
  planned_triple_missing,
  // ontology metrics
  undefined_dependency,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kgevo
