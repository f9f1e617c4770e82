#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace canonform::braid {

/// Positive generators of the three-strand braid group B3. Only the two
/// positive generators are representable; inverses are out of scope.
enum class Generator : std::uint8_t { Sigma1, Sigma2 };

/// A finite positive braid word in B3. The empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}

    /// Parses the compact serialization: letters in {"s1","s2"} joined by ".",
    /// e.g. "s2.s1.s2". The empty string denotes the identity word.
    /// Throws std::invalid_argument on any other token.
    static Word parse(std::string_view text);

    /// Inverse of parse(): "s1.s2" style, "" for the identity.
    std::string str() const;

    const std::vector<Generator>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// Concatenation (the monoid product).
    Word operator*(const Word& rhs) const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Generator> letters_;
};

/// 2x2 integer matrix; value of the reduced Burau representation at t = -1.
struct Mat2 {
    long long a = 1, b = 0;
    long long c = 0, d = 1;

    static Mat2 identity() { return {}; }
    long long trace() const { return a + d; }
    long long det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d,
                c * m.a + d * m.c, c * m.b + d * m.d};
    }
    bool operator==(const Mat2&) const = default;
};

/// One-line notation over 3 positions: entry i is the strand of origin that
/// occupies final position i+1.
using Permutation = std::array<int, 3>;

/// The five order-signature classes plus the catch-all for words whose
/// (permutation, writhe) fingerprint matches none of them.
enum class KeyArchetype { A, B, C, D, E, Unclassified };

std::string_view archetype_name(KeyArchetype k);
std::optional<KeyArchetype> archetype_from_name(std::string_view name);

/// Permutation induced by applying the letters left to right, where Sigma1
/// exchanges positions 1,2 and Sigma2 exchanges positions 2,3.
Permutation induced_permutation(const Word& word);

/// Exponent sum; equals the word length for positive words.
int writhe(const Word& word);

/// Product of the reduced Burau images of the letters at t = -1, multiplied
/// left to right. The empty word maps to the identity matrix.
Mat2 burau_at_minus_one(const Word& word);

struct Invariants {
    Permutation permutation{1, 2, 3};
    int writhe = 0;
    long long burau_trace = 2;
    long long burau_det = 1;
    bool operator==(const Invariants&) const = default;
};

Invariants invariants(const Word& word);

/// Matches (induced_permutation, writhe) against the five archetype
/// fingerprints; Unclassified is a value, not an error.
KeyArchetype classify_key(const Word& word);

/// Bounded search over positive words related by substring rewriting with the
/// braid relation s1.s2.s1 <-> s2.s1.s2. Returns true iff w2 is reachable
/// from w1; false means "not reachable within the bound".
/// Throws std::invalid_argument when max_length < max(|w1|, |w2|).
bool braid_equivalent(const Word& w1, const Word& w2, int max_length);

} // namespace canonform::braid
