#pragma once

#include "pipedream/box_set.hpp"
#include "pipedream/set_family.hpp"

namespace pipedream {

/// T meets every member of C. Vacuously true for the empty family.
bool is_transversal(const BoxSet& candidate, const SetFamily& family);

/// T is a transversal and every t in T has a witness member S with
/// S ∩ T = {t}.
bool is_minimal_transversal(const BoxSet& candidate, const SetFamily& family);

/// Members that do not strictly contain another member.
SetFamily minimalize(const SetFamily& family);

/// The family of all inclusion-minimal transversals of `family`.
///
/// Berge multiplication: members are absorbed in ascending size order while
/// the dual of the absorbed prefix is maintained. A partial transversal that
/// misses the next member is extended by each of its boxes, and extensions
/// are kept only if every box still has a private witness member.
SetFamily transversal_dual(const SetFamily& family);

}  // namespace pipedream
