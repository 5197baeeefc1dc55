#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fg {

// Generating set of F_n with printable letter names.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    // Default names a, b, c, ... (rank <= 26).
    static Alphabet standard(int rank);

    int rank() const { return static_cast<int>(names_.size()); }
    const std::string& name(int gen) const { return names_.at(gen); }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a generator name, -1 if absent.
    int find(std::string_view name) const;

private:
    std::vector<std::string> names_;
};

struct Letter {
    int gen = 0;
    int sign = 1;  // +1 or -1

    Letter inverse() const { return {gen, -sign}; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Element of F_rank as its unique reduced spelling. The empty letter
// sequence is the identity. Build through reduce()/parse_word() so the
// reduced invariant holds.
struct Word {
    int rank = 0;
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    bool is_reduced() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

// Free reduction of an arbitrary letter sequence: one left-to-right pass
// cancelling against the top of a stack.
Word reduce(int rank, std::span<const Letter> raw);

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, long long exponent);
Word generator(int rank, int gen, int sign = 1);

struct CyclicReduction {
    Word core;        // no cancelling first/last pair
    Word conjugator;  // w = conjugator * core * conjugator^-1
};
CyclicReduction cyclically_reduce(const Word& w);

// The homomorphism determined by generator images: substitutes
// images[g] (or its inverse) for every letter of w and reduces.
// All images must share one alphabet, one image per generator of w.
Word apply_hom(std::span<const Word> images, const Word& w);

// Text grammar: tokens are generator names with optional ^k exponents,
// whitespace-separated or concatenated; a single uppercase letter is an
// input synonym for the inverse of its lowercase name. "1" (and "e",
// when e is not itself a generator) denotes the identity.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

nlohmann::json word_to_json(const Word& w, const Alphabet& alphabet);
Word word_from_json(const nlohmann::json& j);

// Uniform reduced word of exactly `length` letters: successors drawn
// avoiding immediate cancellation. Deterministic for a fixed seed.
Word random_word(int length, int rank, std::mt19937_64& rng);
Word random_word(int length, int rank, std::uint64_t seed);

}  // namespace fg
