#include "canonform/rewrite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace canonform::rewrite {

std::string_view role_name(Role r) {
    switch (r) {
        case Role::Agent: return "agent";
        case Role::Opposition: return "opposition";
        case Role::Mediator: return "mediator";
        case Role::Constraint: return "constraint";
    }
    return "agent";
}

std::optional<Role> role_from_name(std::string_view name) {
    if (name == "agent") return Role::Agent;
    if (name == "opposition") return Role::Opposition;
    if (name == "mediator") return Role::Mediator;
    if (name == "constraint") return Role::Constraint;
    return std::nullopt;
}

std::string_view valuation_name(Valuation v) {
    return v == Valuation::Pos ? "pos" : "neg";
}

namespace {

void require_idempotent(const std::map<std::string, std::string>& subst,
                        std::string_view which) {
    for (const auto& [from, to] : subst) {
        auto it = subst.find(to);
        if (it != subst.end() && it->second != to) {
            throw std::invalid_argument("register " + std::string(which) +
                                        " update substitution is not idempotent at '" +
                                        from + "' -> '" + to + "'");
        }
    }
}

} // namespace

Context::Context(std::string name, std::array<std::vector<LabelClass>, 4> classes,
                 std::vector<Transport> transports,
                 std::map<std::string, std::string> update_x,
                 std::map<std::string, std::string> update_y)
    : name_(std::move(name)),
      classes_(std::move(classes)),
      transports_(std::move(transports)),
      update_x_(std::move(update_x)),
      update_y_(std::move(update_y)) {
    for (Role r : kRoleOrder) {
        std::set<std::string_view> seen;
        for (const LabelClass& cls : this->classes(r)) {
            for (const std::string& label : cls.members) {
                if (!seen.insert(label).second) {
                    throw std::invalid_argument(
                        "label '" + label + "' belongs to two classes of role " +
                        std::string(role_name(r)));
                }
            }
        }
    }
    require_idempotent(update_x_, "X");
    require_idempotent(update_y_, "Y");
}

std::optional<std::string> Context::class_of(Role r, std::string_view label) const {
    for (const LabelClass& cls : classes(r)) {
        if (std::find(cls.members.begin(), cls.members.end(), label) != cls.members.end()) {
            return cls.name;
        }
    }
    return std::nullopt;
}

std::optional<Role> Context::role_housing(std::string_view label, Role except) const {
    for (Role r : kRoleOrder) {
        if (r == except) continue;
        if (class_of(r, label)) return r;
    }
    return std::nullopt;
}

bool Context::transport_declared(Role r, std::string_view from_class,
                                 std::string_view to_class) const {
    return std::any_of(transports_.begin(), transports_.end(),
                       [&](const Transport& t) {
                           return t.role == r && t.from_class == from_class &&
                                  t.to_class == to_class;
                       });
}

std::string_view admissibility_rule_name(AdmissibilityRule rule) {
    switch (rule) {
        case AdmissibilityRule::RolePreservation: return "role preservation";
        case AdmissibilityRule::ClassMembership: return "class membership";
        case AdmissibilityRule::TransportDeclared: return "transport declared";
    }
    return "role preservation";
}

AdmissionResult check_admissible(const MorphismCandidate& candidate, const Context& ctx) {
    for (Role r : kRoleOrder) {
        const Move& move = candidate.move(r);
        const std::string& src_label = candidate.source.slot(r).label;
        const std::string& dst_label = candidate.target.slot(r).label;

        if (move.from != src_label || move.to != dst_label) {
            AdmissibilityFailure f;
            f.role = r;
            f.rule = AdmissibilityRule::RolePreservation;
            f.from = move.from;
            f.to = move.to;
            f.detail = "move endpoints ('" + move.from + "' -> '" + move.to +
                       "') do not match the " + std::string(role_name(r)) +
                       " slots ('" + src_label + "' -> '" + dst_label + "')";
            return f;
        }

        const std::optional<std::string> from_class = ctx.class_of(r, move.from);
        const std::optional<std::string> to_class = ctx.class_of(r, move.to);
        if (!from_class || !to_class) {
            const std::string& offending = !from_class ? move.from : move.to;
            AdmissibilityFailure f;
            f.role = r;
            f.rule = AdmissibilityRule::ClassMembership;
            f.from = move.from;
            f.to = move.to;
            f.found_in_role = ctx.role_housing(offending, r);
            if (f.found_in_role) {
                f.detail = "label '" + offending + "' is not in any " +
                           std::string(role_name(r)) + " class but is housed by role " +
                           std::string(role_name(*f.found_in_role)) +
                           " (mis-typing)";
            } else {
                f.detail = "label '" + offending + "' is outside every realization class of role " +
                           std::string(role_name(r)) + " (out of vocabulary)";
            }
            return f;
        }

        if (*from_class != *to_class &&
            !ctx.transport_declared(r, *from_class, *to_class)) {
            AdmissibilityFailure f;
            f.role = r;
            f.rule = AdmissibilityRule::TransportDeclared;
            f.from = move.from;
            f.to = move.to;
            f.detail = "no declared transport for role " + std::string(role_name(r)) +
                       " from class '" + *from_class + "' to class '" + *to_class + "'";
            return f;
        }
    }
    return RewriteMorphism{candidate.source, candidate.target, candidate.moves, ctx};
}

MorphismCandidate identity_candidate(const Configuration& z) {
    MorphismCandidate c;
    c.name = "identity@" + z.id;
    c.source = z;
    c.target = z;
    for (Role r : kRoleOrder) {
        c.move(r) = Move{z.slot(r).label, z.slot(r).label};
    }
    return c;
}

MorphismCandidate compose(const RewriteMorphism& f, const RewriteMorphism& g) {
    if (!(f.target == g.source)) {
        throw std::invalid_argument("compose: target of the first morphism is not the "
                                    "source of the second");
    }
    MorphismCandidate c;
    c.name = "composite";
    c.source = f.source;
    c.target = g.target;
    for (Role r : kRoleOrder) {
        c.move(r) = Move{f.move(r).from, g.move(r).to};
    }
    return c;
}

} // namespace canonform::rewrite
