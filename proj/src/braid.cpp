#include "canonform/braid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace canonform::braid {

namespace {

// Reduced Burau images of the generators, evaluated at t = -1.
// The parametric images are s1 -> [[-t, 1], [0, 1]] and s2 -> [[1, 0], [t, -t]];
// substituting t = -1 gives the unimodular constants below (checked against
// the parametric form in the test suite).
constexpr Mat2 kBurauSigma1{1, 1, 0, 1};
constexpr Mat2 kBurauSigma2{1, 0, -1, 1};

struct Fingerprint {
    KeyArchetype key;
    Permutation permutation;
    int writhe;
};

constexpr std::array<Fingerprint, 5> kArchetypes{{
    {KeyArchetype::A, {2, 1, 3}, 1},
    {KeyArchetype::B, {1, 3, 2}, 1},
    {KeyArchetype::C, {2, 3, 1}, 2},
    {KeyArchetype::D, {3, 1, 2}, 2},
    {KeyArchetype::E, {3, 2, 1}, 3},
}};

} // namespace

Word Word::parse(std::string_view text) {
    std::vector<Generator> letters;
    if (text.empty()) return Word{};
    std::size_t start = 0;
    while (true) {
        std::size_t dot = text.find('.', start);
        std::string_view token = text.substr(start, dot == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : dot - start);
        if (token == "s1") {
            letters.push_back(Generator::Sigma1);
        } else if (token == "s2") {
            letters.push_back(Generator::Sigma2);
        } else {
            throw std::invalid_argument("bad braid letter '" + std::string(token) +
                                        "' (expected s1 or s2)");
        }
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return Word{std::move(letters)};
}

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += '.';
        out += letters_[i] == Generator::Sigma1 ? "s1" : "s2";
    }
    return out;
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Generator> combined = letters_;
    combined.insert(combined.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word{std::move(combined)};
}

std::string_view archetype_name(KeyArchetype k) {
    switch (k) {
        case KeyArchetype::A: return "A";
        case KeyArchetype::B: return "B";
        case KeyArchetype::C: return "C";
        case KeyArchetype::D: return "D";
        case KeyArchetype::E: return "E";
        case KeyArchetype::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

std::optional<KeyArchetype> archetype_from_name(std::string_view name) {
    if (name == "A") return KeyArchetype::A;
    if (name == "B") return KeyArchetype::B;
    if (name == "C") return KeyArchetype::C;
    if (name == "D") return KeyArchetype::D;
    if (name == "E") return KeyArchetype::E;
    if (name == "Unclassified") return KeyArchetype::Unclassified;
    return std::nullopt;
}

Permutation induced_permutation(const Word& word) {
    // pos[i] = strand currently occupying position i+1; generators swap
    // adjacent positions, letters applied left to right.
    Permutation pos{1, 2, 3};
    for (Generator g : word.letters()) {
        if (g == Generator::Sigma1) {
            std::swap(pos[0], pos[1]);
        } else {
            std::swap(pos[1], pos[2]);
        }
    }
    return pos;
}

int writhe(const Word& word) { return static_cast<int>(word.size()); }

Mat2 burau_at_minus_one(const Word& word) {
    Mat2 m = Mat2::identity();
    for (Generator g : word.letters()) {
        m = m * (g == Generator::Sigma1 ? kBurauSigma1 : kBurauSigma2);
    }
    return m;
}

Invariants invariants(const Word& word) {
    Mat2 m = burau_at_minus_one(word);
    return Invariants{induced_permutation(word), writhe(word), m.trace(), m.det()};
}

KeyArchetype classify_key(const Word& word) {
    const Permutation perm = induced_permutation(word);
    const int w = writhe(word);
    for (const Fingerprint& f : kArchetypes) {
        if (f.permutation == perm && f.writhe == w) return f.key;
    }
    return KeyArchetype::Unclassified;
}

namespace {

// Single-step neighbours under the relation s1.s2.s1 <-> s2.s1.s2.
std::vector<std::string> relation_neighbours(const std::string& w) {
    std::vector<std::string> out;
    if (w.size() < 3) return out;
    for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
        std::string_view window(w.data() + i, 3);
        if (window == "121") {
            std::string next = w;
            next[i] = '2';
            next[i + 1] = '1';
            next[i + 2] = '2';
            out.push_back(std::move(next));
        } else if (window == "212") {
            std::string next = w;
            next[i] = '1';
            next[i + 1] = '2';
            next[i + 2] = '1';
            out.push_back(std::move(next));
        }
    }
    return out;
}

std::string encode(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Generator g : w.letters()) s += g == Generator::Sigma1 ? '1' : '2';
    return s;
}

} // namespace

bool braid_equivalent(const Word& w1, const Word& w2, int max_length) {
    const std::size_t longest = std::max(w1.size(), w2.size());
    if (max_length < 0 || static_cast<std::size_t>(max_length) < longest) {
        throw std::invalid_argument("braid_equivalent: max_length " +
                                    std::to_string(max_length) +
                                    " is smaller than the longer input word");
    }
    // Substring rewriting with the braid relation preserves length, so words
    // of different lengths are never reachable from one another.
    if (w1.size() != w2.size()) return false;

    const std::string start = encode(w1);
    const std::string goal = encode(w2);
    if (start == goal) return true;

    std::unordered_set<std::string> seen{start};
    std::deque<std::string> frontier{start};
    while (!frontier.empty()) {
        std::string current = std::move(frontier.front());
        frontier.pop_front();
        for (std::string& next : relation_neighbours(current)) {
            if (next == goal) return true;
            if (seen.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    return false;
}

} // namespace canonform::braid
