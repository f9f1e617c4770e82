#include "canonform/context_io.hpp"

#include "canonform/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace canonform::rewrite {

namespace {

using nlohmann::json;

Role parse_role(const std::string& name, const std::string& where) {
    const auto role = role_from_name(name);
    if (!role) throw ParseError(where + ": unknown role '" + name + "'");
    return *role;
}

Valuation parse_valuation(const json& j, const std::string& where) {
    const std::string v = j.get<std::string>();
    if (v == "pos") return Valuation::Pos;
    if (v == "neg") return Valuation::Neg;
    throw ParseError(where + ": valuation must be \"pos\" or \"neg\", got '" + v + "'");
}

Configuration parse_configuration(const json& j) {
    Configuration z;
    z.id = j.at("id").get<std::string>();
    const json& slots = j.at("slots");
    for (Role r : kRoleOrder) {
        const std::string name(role_name(r));
        if (!slots.contains(name)) {
            throw ParseError("configuration '" + z.id + "': missing slot '" + name + "'");
        }
        const json& slot = slots.at(name);
        Slot& out = z.slot(r);
        out.label = slot.at("label").get<std::string>();
        out.valuation = slot.contains("valuation")
                            ? parse_valuation(slot.at("valuation"),
                                              "configuration '" + z.id + "' slot " + name)
                            : Valuation::Pos;
    }
    return z;
}

std::map<std::string, std::string> parse_updates(const json& j) {
    std::map<std::string, std::string> out;
    for (const auto& [from, to] : j.items()) {
        out.emplace(from, to.get<std::string>());
    }
    return out;
}

Context parse_context(const json& j) {
    std::array<std::vector<Context::LabelClass>, 4> classes;
    if (j.contains("classes")) {
        for (const auto& [role_str, class_map] : j.at("classes").items()) {
            const Role role = parse_role(role_str, "context classes");
            for (const auto& [class_name, members] : class_map.items()) {
                Context::LabelClass cls;
                cls.name = class_name;
                for (const json& m : members) cls.members.push_back(m.get<std::string>());
                classes[static_cast<std::size_t>(role)].push_back(std::move(cls));
            }
        }
    }
    std::vector<Context::Transport> transports;
    if (j.contains("transports")) {
        for (const json& t : j.at("transports")) {
            transports.push_back(Context::Transport{
                parse_role(t.at("role").get<std::string>(), "transport"),
                t.at("from").get<std::string>(), t.at("to").get<std::string>()});
        }
    }
    std::map<std::string, std::string> update_x;
    std::map<std::string, std::string> update_y;
    if (j.contains("updates")) {
        const json& u = j.at("updates");
        if (u.contains("x")) update_x = parse_updates(u.at("x"));
        if (u.contains("y")) update_y = parse_updates(u.at("y"));
    }
    try {
        return Context(j.value("name", std::string{}), std::move(classes),
                       std::move(transports), std::move(update_x), std::move(update_y));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("context: ") + e.what());
    }
}

} // namespace

const Configuration* ContextFile::find_configuration(std::string_view id) const {
    for (const Configuration& z : configurations) {
        if (z.id == id) return &z;
    }
    return nullptr;
}

ContextFile parse_context_file(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("context file: ") + e.what());
    }

    try {
        ContextFile out;
        out.context = parse_context(j.at("context"));
        for (const json& c : j.at("configurations")) {
            out.configurations.push_back(parse_configuration(c));
        }
        for (const json& m : j.value("morphisms", json::array())) {
            MorphismCandidate cand;
            cand.name = m.value("name", std::string{});
            const std::string source_id = m.at("source").get<std::string>();
            const std::string target_id = m.at("target").get<std::string>();
            const Configuration* source = out.find_configuration(source_id);
            const Configuration* target = out.find_configuration(target_id);
            if (!source) {
                throw ParseError("morphism '" + cand.name +
                                 "': unknown source configuration '" + source_id + "'");
            }
            if (!target) {
                throw ParseError("morphism '" + cand.name +
                                 "': unknown target configuration '" + target_id + "'");
            }
            cand.source = *source;
            cand.target = *target;
            const json& moves = m.at("moves");
            for (Role r : kRoleOrder) {
                const std::string name(role_name(r));
                if (!moves.contains(name)) {
                    throw ParseError("morphism '" + cand.name + "': missing move for role '" +
                                     name + "'");
                }
                const json& mv = moves.at(name);
                cand.move(r) = Move{mv.at("from").get<std::string>(),
                                    mv.at("to").get<std::string>()};
            }
            out.morphisms.push_back(std::move(cand));
        }
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("context file: ") + e.what());
    }
}

ContextFile load_context_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open context file " + path.string());
    return parse_context_file(in);
}

} // namespace canonform::rewrite
