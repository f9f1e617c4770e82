#include "canonform/keyderive.hpp"

#include "canonform/errors.hpp"
#include "canonform/textutil.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace canonform::keyderive {

TransitionLogSet::TransitionLogSet(std::vector<TransitionLog> logs)
    : logs_(std::move(logs)) {
    std::set<std::string_view> ids;
    for (const TransitionLog& log : logs_) {
        if (!ids.insert(log.story_id).second) {
            throw ValidationError("duplicate transition-log block for id '" +
                                  log.story_id + "'");
        }
    }
}

const TransitionLog* TransitionLogSet::find(std::string_view story_id) const {
    for (const TransitionLog& log : logs_) {
        if (log.story_id == story_id) return &log;
    }
    return nullptr;
}

TransitionLogSet parse_transition_logs(std::istream& in) {
    std::vector<TransitionLog> logs;
    TransitionLog current;
    bool in_block = false;
    std::string line;
    std::size_t line_no = 0;

    auto flush = [&] {
        if (in_block) logs.push_back(std::move(current));
        current = TransitionLog{};
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = text::trim(line);
        if (s.empty() || s.front() == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": malformed block header '" + std::string(s) + "'");
            }
            flush();
            current.story_id = std::string(text::trim(s.substr(1, s.size() - 2)));
            in_block = true;
            continue;
        }
        if (!in_block) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": event before any [STORY-ID] block header");
        }
        const std::size_t sep = s.rfind('|');
        if (sep == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": missing '|' separator between description and exchange tag");
        }
        const std::string_view tag = text::trim(s.substr(sep + 1));
        TransitionEvent event;
        event.description = std::string(text::trim(s.substr(0, sep)));
        if (tag == "s1") {
            event.exchange = Exchange::AgentOpposition;
        } else if (tag == "s2") {
            event.exchange = Exchange::OppositionMediation;
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": exchange tag must be s1 or s2, got '" +
                             std::string(tag) + "'");
        }
        current.events.push_back(std::move(event));
    }
    flush();
    return TransitionLogSet(std::move(logs));
}

TransitionLogSet load_transition_logs(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open transition log file " + path.string());
    return parse_transition_logs(in);
}

braid::Word derive_word(const TransitionLog& log) {
    std::vector<braid::Generator> letters;
    letters.reserve(log.events.size());
    for (const TransitionEvent& e : log.events) {
        letters.push_back(e.exchange == Exchange::AgentOpposition
                              ? braid::Generator::Sigma1
                              : braid::Generator::Sigma2);
    }
    return braid::Word{std::move(letters)};
}

braid::KeyArchetype assign_key(const TransitionLog& log) {
    return braid::classify_key(derive_word(log));
}

std::string_view cross_check_status_name(CrossCheckStatus s) {
    switch (s) {
        case CrossCheckStatus::Match: return "match";
        case CrossCheckStatus::Mismatch: return "mismatch";
        case CrossCheckStatus::DerivedOnly: return "derived-only";
        case CrossCheckStatus::Unverifiable: return "unverifiable";
    }
    return "unverifiable";
}

CrossCheckReport cross_check(const corpus::Corpus& corpus, const TransitionLogSet& logs) {
    CrossCheckReport report;
    for (const corpus::StoryRecord& r : corpus.records()) {
        CrossCheckRow row;
        row.id = r.id;
        row.declared = r.key;
        const TransitionLog* log = logs.find(r.id);
        if (log) row.derived = assign_key(*log);

        if (!log) {
            row.status = CrossCheckStatus::Unverifiable;
            ++report.unverifiable;
        } else if (!r.key) {
            row.status = CrossCheckStatus::DerivedOnly;
            ++report.derived_only;
        } else if (*row.derived == *r.key) {
            row.status = CrossCheckStatus::Match;
            ++report.matches;
        } else {
            row.status = CrossCheckStatus::Mismatch;
            ++report.mismatches;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace canonform::keyderive
