#pragma once

#include "canonform/rewrite.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace canonform::coherence {

using rewrite::Configuration;
using rewrite::Context;
using rewrite::MorphismCandidate;
using rewrite::RewriteMorphism;
using rewrite::Role;
using rewrite::Valuation;

/// The two update policies: Direct keeps every role and register fixed;
/// Canonical performs the swap+inversion re-housing.
enum class UpdatePolicy { Direct, Canonical };

/// Where a role's content lands under the canonical re-housing: Opposition
/// and Constraint exchange, Agent and Mediator stay put.
constexpr Role rehoused_role(Role r) {
    if (r == Role::Opposition) return Role::Constraint;
    if (r == Role::Constraint) return Role::Opposition;
    return r;
}

/// Direct policy at the trivial update step: the configuration unchanged.
Configuration apply_U(const Configuration& z);

/// Direct policy with the context's declared per-register substitutions
/// applied slot-wise. Roles, registers, and valuations stay fixed.
Configuration apply_U(const Configuration& z, const Context& ctx);

/// Canonical policy: Opposition and Constraint contents exchange slots (and
/// hence registers), both with inverted valuation; Agent and Mediator are
/// untouched. An involution.
Configuration apply_V(const Configuration& z);

/// One component of the structure map at a configuration: where the content
/// of a U(z) slot lands in V(z).
struct EtaEntry {
    Role from_role = Role::Agent;
    Role to_role = Role::Agent;
    std::string from_label;
    std::string to_label;
    Valuation from_valuation = Valuation::Pos;
    Valuation to_valuation = Valuation::Pos;
    bool operator==(const EtaEntry&) const = default;
};

using EtaComponent = std::array<EtaEntry, 4>;  // indexed by Role order

/// The canonical re-typing map eta_z : U(z) -> V(z). Total for every
/// configuration; context-independent apart from U's update substitutions.
EtaComponent eta(const Configuration& z);
EtaComponent eta(const Configuration& z, const Context& ctx);

enum class Verdict { Pass, Fail };

enum class FailureReason { IllegalTransport, RoleSwap, ValuationMismatch, LabelMismatch };

std::string_view verdict_name(Verdict v);
std::string_view failure_reason_name(FailureReason r);

/// One composite path of the square, traced for a single origin role:
/// from a U(Z) slot to a V(Z') slot.
struct PathEntry {
    Role origin = Role::Agent;    // role in U(Z)
    Role end_role = Role::Agent;  // housing role in V(Z')
    std::string start_label;
    std::string end_label;
    Valuation start_valuation = Valuation::Pos;
    Valuation end_valuation = Valuation::Pos;
    bool operator==(const PathEntry&) const = default;
};

/// Outcome of a naturality check. Fail carries the first offending role, a
/// reason code, and the witness pair (U-then-eta vs eta-then-V composites,
/// or the offending move rendered as degenerate paths).
struct Diagnosis {
    Verdict verdict = Verdict::Pass;
    std::optional<Role> failing_role;
    std::optional<FailureReason> reason;
    std::optional<std::pair<PathEntry, PathEntry>> witness;
    std::string note;

    bool passed() const { return verdict == Verdict::Pass; }
};

/// Full pipeline on a raw candidate: well-formedness (moves consistent with
/// the endpoint slots, valuations preserved), admissibility under the
/// context, the transport check for the conjugated canonical image, then the
/// role-by-role comparison of the two composite square paths. Inadmissible
/// candidates yield Fail (IllegalTransport / RoleSwap), never an exception.
Diagnosis check_naturality(const MorphismCandidate& candidate, const Context& ctx);

/// Square check for an already-admitted morphism (uses its declared context).
Diagnosis check_naturality(const RewriteMorphism& h);

} // namespace canonform::coherence
