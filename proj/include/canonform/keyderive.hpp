#pragma once

#include "canonform/braid.hpp"
#include "canonform/corpus.hpp"

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace canonform::keyderive {

/// Which adjacent exchange a decisive episode transition enacts, over the
/// ordered strand triple (agent, opposition, mediator).
enum class Exchange { AgentOpposition, OppositionMediation };

struct TransitionEvent {
    std::string description;
    Exchange exchange = Exchange::AgentOpposition;
    bool operator==(const TransitionEvent&) const = default;
};

struct TransitionLog {
    std::string story_id;
    std::vector<TransitionEvent> events;
    bool operator==(const TransitionLog&) const = default;
};

/// The sidecar log file: one block per story id. Block order is preserved.
class TransitionLogSet {
public:
    TransitionLogSet() = default;
    explicit TransitionLogSet(std::vector<TransitionLog> logs);

    const std::vector<TransitionLog>& logs() const { return logs_; }
    const TransitionLog* find(std::string_view story_id) const;
    bool empty() const { return logs_.empty(); }

private:
    std::vector<TransitionLog> logs_;
};

/// Parses the block format: "[STORY-ID]" headers, then one event per line as
/// "description | s1" (or s2). '#' starts a comment. See docs/FORMATS.md.
TransitionLogSet parse_transition_logs(std::istream& in);
TransitionLogSet load_transition_logs(const std::filesystem::path& path);

/// AgentOpposition -> Sigma1, OppositionMediation -> Sigma2, in event order;
/// the empty log yields the identity word.
braid::Word derive_word(const TransitionLog& log);

braid::KeyArchetype assign_key(const TransitionLog& log);

enum class CrossCheckStatus { Match, Mismatch, DerivedOnly, Unverifiable };

std::string_view cross_check_status_name(CrossCheckStatus s);

struct CrossCheckRow {
    std::string id;
    std::optional<braid::KeyArchetype> declared;
    std::optional<braid::KeyArchetype> derived;
    CrossCheckStatus status = CrossCheckStatus::Unverifiable;
};

struct CrossCheckReport {
    std::vector<CrossCheckRow> rows;  // one per corpus record, corpus order
    std::size_t matches = 0;
    std::size_t mismatches = 0;
    std::size_t derived_only = 0;
    std::size_t unverifiable = 0;
};

/// Compares declared keys against keys derived from the transition logs.
/// Records without a log are counted as unverifiable, never as mismatches.
CrossCheckReport cross_check(const corpus::Corpus& corpus, const TransitionLogSet& logs);

} // namespace canonform::keyderive
