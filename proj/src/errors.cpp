#include "kgevo/errors.hpp"

namespace kgevo {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::malformed_iri: return "MalformedIri";
    case Errc::malformed_literal: return "MalformedLiteral";
    case Errc::missing_dot: return "MissingTerminatingDot";
    case Errc::invalid_subject: return "InvalidSubjectKind";
    case Errc::unknown_id: return "UnknownId";
    case Errc::non_monotone_timestamp: return "NonMonotoneTimestamp";
    case Errc::io_failure: return "IoFailure";
    case Errc::unknown_version: return "UnknownVersion";
    case Errc::corrupt_chain: return "CorruptChain";
    case Errc::empty_input: return "EmptyInput";
    case Errc::invalid_theta: return "InvalidTheta";
    case Errc::invalid_omega: return "InvalidOmega";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::not_converged: return "NotConverged";
    case Errc::no_trainable_triples: return "NoTrainableTriples";
    case Errc::unknown_entity: return "UnknownEntity";
    case Errc::empty_snapshot: return "EmptySnapshot";
    case Errc::too_few_entities: return "TooFewEntities";
    case Errc::planned_triple_missing: return "PlannedTripleMissing";
    case Errc::undefined_dependency: return "UndefinedDependency";
  }
  return "Error";
}

}  // namespace kgevo
