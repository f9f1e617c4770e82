#include "canonform/coherence.hpp"

#include <utility>

namespace canonform::coherence {

using rewrite::kRoleOrder;
using rewrite::Move;
using rewrite::Register;
using rewrite::register_of;
using rewrite::role_name;
using rewrite::Slot;

namespace {

std::string substituted(const std::map<std::string, std::string>& subst,
                        const std::string& label) {
    auto it = subst.find(label);
    return it == subst.end() ? label : it->second;
}

} // namespace

Configuration apply_U(const Configuration& z) { return z; }

Configuration apply_U(const Configuration& z, const Context& ctx) {
    Configuration out = z;
    for (Role r : kRoleOrder) {
        Slot& slot = out.slot(r);
        slot.label = substituted(ctx.updates(register_of(r)), slot.label);
    }
    return out;
}

Configuration apply_V(const Configuration& z) {
    Configuration out = z;
    Slot& opposition = out.slot(Role::Opposition);
    Slot& constraint = out.slot(Role::Constraint);
    std::swap(opposition, constraint);
    opposition.valuation = rewrite::invert(opposition.valuation);
    constraint.valuation = rewrite::invert(constraint.valuation);
    return out;
}

namespace {

EtaComponent eta_between(const Configuration& u, const Configuration& v) {
    EtaComponent out;
    for (Role r : kRoleOrder) {
        const Role housed = rehoused_role(r);
        const Slot& from = u.slot(r);
        const Slot& to = v.slot(housed);
        out[static_cast<std::size_t>(r)] =
            EtaEntry{r, housed, from.label, to.label, from.valuation, to.valuation};
    }
    return out;
}

} // namespace

EtaComponent eta(const Configuration& z) {
    return eta_between(apply_U(z), apply_V(z));
}

EtaComponent eta(const Configuration& z, const Context& ctx) {
    return eta_between(apply_U(z, ctx), apply_V(z));
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::Pass ? "pass" : "fail";
}

std::string_view failure_reason_name(FailureReason r) {
    switch (r) {
        case FailureReason::IllegalTransport: return "illegal-transport";
        case FailureReason::RoleSwap: return "role-swap";
        case FailureReason::ValuationMismatch: return "valuation-mismatch";
        case FailureReason::LabelMismatch: return "label-mismatch";
    }
    return "label-mismatch";
}

namespace {

PathEntry move_as_path(Role r, const Move& move, const Configuration& source,
                       const Configuration& target) {
    return PathEntry{r,
                     r,
                     move.from,
                     move.to,
                     source.slot(r).valuation,
                     target.slot(r).valuation};
}

Diagnosis fail(Role role, FailureReason reason, std::pair<PathEntry, PathEntry> witness,
               std::string note) {
    Diagnosis d;
    d.verdict = Verdict::Fail;
    d.failing_role = role;
    d.reason = reason;
    d.witness = std::move(witness);
    d.note = std::move(note);
    return d;
}

/// Checks whether the candidate's moves are consistent with its endpoint
/// configurations: rule (i) plus slot-wise valuation preservation (the
/// valuation inversion belongs to the canonical policy, not to morphisms).
std::optional<Diagnosis> wellformedness_failure(const MorphismCandidate& c) {
    for (Role r : kRoleOrder) {
        const Move& move = c.move(r);
        const Slot& src = c.source.slot(r);
        const Slot& dst = c.target.slot(r);
        if (move.from != src.label || move.to != dst.label) {
            // A move whose endpoints match a different role's slots is a
            // mis-typing; anything else is a plain label mismatch.
            bool swapped = false;
            for (Role other : kRoleOrder) {
                if (other == r) continue;
                if (move.from == c.source.slot(other).label ||
                    move.to == c.target.slot(other).label) {
                    swapped = true;
                    break;
                }
            }
            const PathEntry declared = move_as_path(r, move, c.source, c.target);
            const PathEntry expected{r, r, src.label, dst.label,
                                     src.valuation, dst.valuation};
            return fail(r, swapped ? FailureReason::RoleSwap : FailureReason::LabelMismatch,
                        {declared, expected},
                        "move at role " + std::string(role_name(r)) +
                            " does not map the source slot to the target slot");
        }
        if (src.valuation != dst.valuation) {
            const PathEntry declared = move_as_path(r, move, c.source, c.target);
            PathEntry expected = declared;
            expected.end_valuation = src.valuation;
            return fail(r, FailureReason::ValuationMismatch, {declared, expected},
                        "role " + std::string(role_name(r)) +
                            " flips valuation; only the canonical policy inverts valuations");
        }
    }
    return std::nullopt;
}

FailureReason reason_for(const rewrite::AdmissibilityFailure& f) {
    if (f.rule == rewrite::AdmissibilityRule::RolePreservation) {
        return FailureReason::LabelMismatch;
    }
    if (f.rule == rewrite::AdmissibilityRule::ClassMembership && f.found_in_role) {
        return FailureReason::RoleSwap;
    }
    return FailureReason::IllegalTransport;
}

/// The canonical image V(h) re-houses the Opposition and Constraint moves.
/// When a re-housed move lands inside the declared vocabulary of its new
/// role and crosses classes there, that crossing needs its own transport.
std::optional<Diagnosis> conjugated_transport_failure(const MorphismCandidate& c,
                                                      const Context& ctx) {
    for (Role r : {Role::Opposition, Role::Constraint}) {
        const Role housed = rehoused_role(r);
        const Move& move = c.move(r);
        const auto from_class = ctx.class_of(housed, move.from);
        const auto to_class = ctx.class_of(housed, move.to);
        if (from_class && to_class && *from_class != *to_class &&
            !ctx.transport_declared(housed, *from_class, *to_class)) {
            PathEntry conjugated = move_as_path(r, move, c.source, c.target);
            conjugated.origin = r;
            conjugated.end_role = housed;
            PathEntry required = conjugated;
            return fail(housed, FailureReason::IllegalTransport, {conjugated, required},
                        "the canonical image re-houses the " + std::string(role_name(r)) +
                            " move into role " + std::string(role_name(housed)) +
                            ", where the crossing '" + *from_class + "' -> '" + *to_class +
                            "' has no declared transport");
        }
    }
    return std::nullopt;
}

/// Traces both composite paths of the square for every origin role and
/// compares them extensionally.
Diagnosis compare_square(const MorphismCandidate& c, const Context& ctx) {
    const Configuration u_src = apply_U(c.source, ctx);
    const Configuration u_dst = apply_U(c.target, ctx);
    const Configuration v_src = apply_V(c.source);
    const Configuration v_dst = apply_V(c.target);

    const EtaComponent eta_src = eta_between(u_src, v_src);
    const EtaComponent eta_dst = eta_between(u_dst, v_dst);

    for (Role r : kRoleOrder) {
        const std::size_t i = static_cast<std::size_t>(r);

        // Path 1: U(h) first, then eta at the target. U(h) keeps the role
        // fixed and carries the slot onto U(Z')'s slot, which is exactly the
        // domain of eta at Z'; the re-housed entry is the path's end.
        const EtaEntry& eta_t = eta_dst[i];
        PathEntry top;
        top.origin = r;
        top.start_label = u_src.slot(r).label;
        top.start_valuation = u_src.slot(r).valuation;
        top.end_role = eta_t.to_role;
        top.end_label = eta_t.to_label;
        top.end_valuation = eta_t.to_valuation;

        // Path 2: eta at the source, then V(h).
        PathEntry bottom;
        bottom.origin = r;
        bottom.start_label = eta_src[i].from_label;
        bottom.start_valuation = eta_src[i].from_valuation;
        const Role housed = eta_src[i].to_role;
        bottom.end_role = housed;
        // V(h) maps the V(Z) slot extensionally onto the V(Z') slot of the
        // same housing role (the conjugated action of h).
        bottom.end_label = v_dst.slot(housed).label;
        bottom.end_valuation = v_dst.slot(housed).valuation;

        if (top.end_role != bottom.end_role || top.end_label != bottom.end_label ||
            top.end_valuation != bottom.end_valuation) {
            const FailureReason reason = top.end_label != bottom.end_label
                                             ? FailureReason::LabelMismatch
                                             : FailureReason::ValuationMismatch;
            return fail(r, reason, {top, bottom},
                        "composite slot maps disagree at role " +
                            std::string(role_name(r)));
        }
    }

    Diagnosis d;
    d.verdict = Verdict::Pass;
    d.note = "naturality square commutes for every role";
    return d;
}

} // namespace

Diagnosis check_naturality(const MorphismCandidate& candidate, const Context& ctx) {
    if (auto bad = wellformedness_failure(candidate)) return *bad;

    const rewrite::AdmissionResult admitted = rewrite::check_admissible(candidate, ctx);
    if (const auto* failure = std::get_if<rewrite::AdmissibilityFailure>(&admitted)) {
        PathEntry declared = move_as_path(failure->role, {failure->from, failure->to},
                                          candidate.source, candidate.target);
        return fail(failure->role, reason_for(*failure), {declared, declared},
                    "the induced maps do not exist in the admissible operator class: " +
                        failure->detail);
    }

    if (auto bad = conjugated_transport_failure(candidate, ctx)) return *bad;

    return compare_square(candidate, ctx);
}

Diagnosis check_naturality(const RewriteMorphism& h) {
    MorphismCandidate c;
    c.name = "admitted";
    c.source = h.source;
    c.target = h.target;
    c.moves = h.moves;
    return check_naturality(c, h.context);
}

} // namespace canonform::coherence
