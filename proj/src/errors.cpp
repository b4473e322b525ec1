#include "chromlag/errors.hpp"

namespace chromlag {

const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_permutation: return "MalformedPermutation";
    case errc::not_cubic: return "NotCubic";
    case errc::not_planar: return "NotPlanar";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::edge_out_of_range: return "EdgeOutOfRange";
    case errc::loop_edge: return "LoopEdge";
    case errc::not_divisible: return "NotDivisible";
    case errc::too_large: return "TooLarge";
    case errc::not_simple: return "NotSimple";
    case errc::presentation_assertion_failed: return "PresentationAssertionFailed";
    case errc::not_isotropic: return "NotIsotropic";
    case errc::not_dual: return "NotDual";
    case errc::not_primitive: return "NotPrimitive";
    case errc::framing_not_symmetric: return "FramingNotSymmetric";
    case errc::truncation_mismatch: return "TruncationMismatch";
    case errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case errc::singular_jacobian: return "SingularJacobian";
    case errc::seed_not_root: return "SeedNotRoot";
    case errc::pole_at_origin: return "PoleAtOrigin";
    case errc::elimination_blowup: return "EliminationBlowup";
    case errc::degenerate_configuration: return "DegenerateConfiguration";
    case errc::face_relation_failed: return "FaceRelationFailed";
    case errc::relation_failed: return "RelationFailed";
    case errc::triangular_solve_stuck: return "TriangularSolveStuck";
    case errc::verification_failed: return "VerificationFailed";
    case errc::convention_error: return "ConventionError";
    case errc::not_closed: return "NotClosed";
    case errc::decomposition_failed: return "DecompositionFailed";
    case errc::io_error: return "IoError";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

} // namespace chromlag
