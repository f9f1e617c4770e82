#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace canonform::rewrite {

/// The four functional roles, in the fixed order used for deterministic
/// "first offending role" reporting. They map 1:1 to the corpus slots
/// (a, b, x, y).
enum class Role { Agent, Opposition, Mediator, Constraint };

inline constexpr std::array<Role, 4> kRoleOrder{
    Role::Agent, Role::Opposition, Role::Mediator, Role::Constraint};

std::string_view role_name(Role r);
std::optional<Role> role_from_name(std::string_view name);

/// X is the everyday/social register, Y the symbolic/legitimation register.
enum class Register { X, Y };

/// Agent, Opposition, and Mediator content is housed in register X;
/// Constraint content in register Y. The register travels with the housing
/// role, so re-housed content changes register.
constexpr Register register_of(Role r) {
    return r == Role::Constraint ? Register::Y : Register::X;
}

enum class Valuation { Pos, Neg };

constexpr Valuation invert(Valuation v) {
    return v == Valuation::Pos ? Valuation::Neg : Valuation::Pos;
}

std::string_view valuation_name(Valuation v);

struct Slot {
    std::string label;
    Valuation valuation = Valuation::Pos;
    bool operator==(const Slot&) const = default;
};

/// A two-register narrative state: one slot per role.
struct Configuration {
    std::string id;
    std::array<Slot, 4> slots;  // indexed by Role order

    const Slot& slot(Role r) const { return slots[static_cast<std::size_t>(r)]; }
    Slot& slot(Role r) { return slots[static_cast<std::size_t>(r)]; }

    bool operator==(const Configuration&) const = default;
};

/// An admissible operator family: per role, named finite label classes, plus
/// the declared class-to-class transports. Optionally carries per-register
/// update substitutions for the direct policy.
class Context {
public:
    struct LabelClass {
        std::string name;
        std::vector<std::string> members;
    };
    struct Transport {
        Role role;
        std::string from_class;
        std::string to_class;
        bool operator==(const Transport&) const = default;
    };

    Context() = default;
    /// Throws std::invalid_argument when a role's classes overlap or when an
    /// update substitution is not idempotent.
    Context(std::string name,
            std::array<std::vector<LabelClass>, 4> classes,
            std::vector<Transport> transports,
            std::map<std::string, std::string> update_x = {},
            std::map<std::string, std::string> update_y = {});

    const std::string& name() const { return name_; }
    const std::vector<LabelClass>& classes(Role r) const {
        return classes_[static_cast<std::size_t>(r)];
    }
    const std::vector<Transport>& transports() const { return transports_; }
    const std::map<std::string, std::string>& updates(Register reg) const {
        return reg == Register::X ? update_x_ : update_y_;
    }

    /// Name of the (unique) class of the role containing the label.
    std::optional<std::string> class_of(Role r, std::string_view label) const;
    /// First role (in fixed order) other than `except` whose classes contain
    /// the label; used to diagnose mis-typings as role swaps.
    std::optional<Role> role_housing(std::string_view label, Role except) const;
    bool transport_declared(Role r, std::string_view from_class,
                            std::string_view to_class) const;

private:
    std::string name_;
    std::array<std::vector<LabelClass>, 4> classes_;
    std::vector<Transport> transports_;
    std::map<std::string, std::string> update_x_;
    std::map<std::string, std::string> update_y_;
};

/// A proposed per-role label move.
struct Move {
    std::string from;
    std::string to;
    bool operator==(const Move&) const = default;
};

/// A raw morphism description: not yet checked against any context.
struct MorphismCandidate {
    std::string name;
    Configuration source;
    Configuration target;
    std::array<Move, 4> moves;  // indexed by Role order

    const Move& move(Role r) const { return moves[static_cast<std::size_t>(r)]; }
    Move& move(Role r) { return moves[static_cast<std::size_t>(r)]; }
};

enum class AdmissibilityRule {
    RolePreservation,  // move endpoints must equal the role's source/target labels
    ClassMembership,   // both endpoints must lie in the role's realization classes
    TransportDeclared  // class-crossing moves need a declared transport
};

std::string_view admissibility_rule_name(AdmissibilityRule rule);

struct AdmissibilityFailure {
    Role role = Role::Agent;
    AdmissibilityRule rule = AdmissibilityRule::RolePreservation;
    std::string from;
    std::string to;
    /// When the offending label is housed by a different role's classes,
    /// that role (the mis-typing diagnosis).
    std::optional<Role> found_in_role;
    std::string detail;
};

/// An admitted, role-preserving rewrite between two configurations.
struct RewriteMorphism {
    Configuration source;
    Configuration target;
    std::array<Move, 4> moves;
    Context context;

    const Move& move(Role r) const { return moves[static_cast<std::size_t>(r)]; }
};

using AdmissionResult = std::variant<RewriteMorphism, AdmissibilityFailure>;

/// Accepts iff, for every role in fixed order: the move preserves the role's
/// slot labels, both endpoints lie in the role's realization classes, and any
/// class crossing uses a declared transport. The failure names the first
/// offending role and rule.
AdmissionResult check_admissible(const MorphismCandidate& candidate, const Context& ctx);

/// The identity candidate at a configuration.
MorphismCandidate identity_candidate(const Configuration& z);

/// Composite candidate g . f. Throws std::invalid_argument when f's target
/// is not g's source. The composite must be re-checked: transports compose
/// only when the composite transport is itself declared.
MorphismCandidate compose(const RewriteMorphism& f, const RewriteMorphism& g);

} // namespace canonform::rewrite
