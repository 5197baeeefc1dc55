#include "fg/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

namespace fg {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("alphabet: empty generator name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("alphabet: duplicate generator name '" + n + "'");
    }
}

Alphabet Alphabet::standard(int rank) {
    if (rank < 0)
        throw std::invalid_argument("alphabet: negative rank");
    if (rank > 26)
        throw std::invalid_argument("alphabet: default names cover rank <= 26; supply explicit names");
    std::vector<std::string> names;
    names.reserve(rank);
    for (int i = 0; i < rank; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    return Alphabet(std::move(names));
}

int Alphabet::find(std::string_view name) const {
    for (int i = 0; i < rank(); ++i)
        if (names_[i] == name)
            return i;
    return -1;
}

bool Word::is_reduced() const {
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i + 1] == letters[i].inverse())
            return false;
    return true;
}

static void check_letter(int rank, Letter l) {
    if (l.gen < 0 || l.gen >= rank)
        throw std::invalid_argument("letter: generator index out of range");
    if (l.sign != 1 && l.sign != -1)
        throw std::invalid_argument("letter: sign must be +1 or -1");
}

Word reduce(int rank, std::span<const Letter> raw) {
    Word out;
    out.rank = rank;
    for (Letter l : raw) {
        check_letter(rank, l);
        if (!out.letters.empty() && out.letters.back() == l.inverse())
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

Word concat(const Word& u, const Word& v) {
    if (u.rank != v.rank)
        throw std::invalid_argument("concat: alphabet mismatch");
    std::vector<Letter> raw = u.letters;
    raw.insert(raw.end(), v.letters.begin(), v.letters.end());
    return reduce(u.rank, raw);
}

Word invert(const Word& w) {
    Word out;
    out.rank = w.rank;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(it->inverse());
    return out;
}

Word power(const Word& w, long long exponent) {
    Word base = exponent < 0 ? invert(w) : w;
    long long n = exponent < 0 ? -exponent : exponent;
    Word out;
    out.rank = w.rank;
    for (long long i = 0; i < n; ++i)
        out = concat(out, base);
    return out;
}

Word generator(int rank, int gen, int sign) {
    check_letter(rank, {gen, sign});
    return Word{rank, {Letter{gen, sign}}};
}

CyclicReduction cyclically_reduce(const Word& w) {
    size_t lo = 0, hi = w.letters.size();
    while (hi - lo >= 2 && w.letters[hi - 1] == w.letters[lo].inverse()) {
        ++lo;
        --hi;
    }
    CyclicReduction r;
    r.conjugator.rank = w.rank;
    r.conjugator.letters.assign(w.letters.begin(), w.letters.begin() + lo);
    r.core.rank = w.rank;
    r.core.letters.assign(w.letters.begin() + lo, w.letters.begin() + hi);
    return r;
}

Word apply_hom(std::span<const Word> images, const Word& w) {
    if (static_cast<int>(images.size()) != w.rank)
        throw std::invalid_argument("apply_hom: one image required per generator");
    int target_rank = images.empty() ? 0 : images[0].rank;
    for (const Word& im : images)
        if (im.rank != target_rank)
            throw std::invalid_argument("apply_hom: images over mixed alphabets");
    Word out;
    out.rank = target_rank;
    for (Letter l : w.letters)
        out = concat(out, l.sign > 0 ? images[l.gen] : invert(images[l.gen]));
    return out;
}

namespace {

// Longest generator-name match at position pos, -1 if none.
int match_name(std::string_view text, size_t pos, const Alphabet& alphabet, size_t* len) {
    int best = -1;
    size_t best_len = 0;
    for (int g = 0; g < alphabet.rank(); ++g) {
        const std::string& n = alphabet.name(g);
        if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
            best = g;
            best_len = n.size();
        }
    }
    *len = best_len;
    return best;
}

long long parse_exponent(std::string_view text, size_t* pos) {
    size_t p = *pos + 1;  // past '^'
    size_t start = p;
    if (p < text.size() && (text[p] == '-' || text[p] == '+'))
        ++p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
        ++p;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + p, value);
    if (ec != std::errc() || ptr != text.data() + p || p == start)
        throw std::invalid_argument("parse_word: malformed exponent");
    *pos = p;
    return value;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    std::vector<Letter> raw;
    size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == ',') {
            ++pos;
            continue;
        }
        int gen = -1;
        int sign = 1;
        size_t name_len = 0;
        gen = match_name(text, pos, alphabet, &name_len);
        if (gen >= 0) {
            pos += name_len;
        } else if (std::isupper(static_cast<unsigned char>(c))) {
            std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            gen = alphabet.find(lower);
            if (gen < 0)
                throw std::invalid_argument(std::string("parse_word: unknown name '") + c + "'");
            sign = -1;
            ++pos;
        } else if (c == '1' || (c == 'e' && alphabet.find("e") < 0)) {
            // identity token; an exponent on it is legal and ignored
            ++pos;
            if (pos < text.size() && text[pos] == '^')
                parse_exponent(text, &pos);
            continue;
        } else {
            throw std::invalid_argument(std::string("parse_word: unknown name at '") + c + "'");
        }
        long long exponent = sign;
        if (pos < text.size() && text[pos] == '^') {
            exponent = sign * parse_exponent(text, &pos);
        }
        Letter l{gen, exponent < 0 ? -1 : 1};
        long long count = exponent < 0 ? -exponent : exponent;
        for (long long i = 0; i < count; ++i)
            raw.push_back(l);
    }
    return reduce(alphabet.rank(), raw);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
    if (w.rank != alphabet.rank())
        throw std::invalid_argument("format_word: alphabet mismatch");
    if (w.letters.empty())
        return "e";
    std::string out;
    size_t i = 0;
    while (i < w.letters.size()) {
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i])
            ++j;
        long long exponent = static_cast<long long>(j - i) * w.letters[i].sign;
        if (!out.empty())
            out += ' ';
        out += alphabet.name(w.letters[i].gen);
        if (exponent != 1)
            out += "^" + std::to_string(exponent);
        i = j;
    }
    return out;
}

nlohmann::json word_to_json(const Word& w, const Alphabet& alphabet) {
    if (w.rank != alphabet.rank())
        throw std::invalid_argument("word_to_json: alphabet mismatch");
    nlohmann::json letters = nlohmann::json::array();
    for (Letter l : w.letters)
        letters.push_back({l.gen, l.sign});
    return {{"alphabet", alphabet.names()}, {"letters", letters}};
}

Word word_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("letters"))
        throw std::invalid_argument("word_from_json: expected {alphabet, letters}");
    Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
    std::vector<Letter> raw;
    for (const auto& entry : j.at("letters")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("word_from_json: letter must be [gen, sign]");
        raw.push_back({entry[0].get<int>(), entry[1].get<int>()});
    }
    Word w = reduce(alphabet.rank(), raw);
    if (w.letters != raw)
        throw std::invalid_argument("word_from_json: letter sequence is not reduced");
    return w;
}

Word random_word(int length, int rank, std::mt19937_64& rng) {
    if (length < 0)
        throw std::invalid_argument("random_word: negative length");
    if (length > 0 && rank == 0)
        throw std::invalid_argument("random_word: rank 0 has only the empty word");
    Word out;
    out.rank = rank;
    for (int i = 0; i < length; ++i) {
        if (out.letters.empty()) {
            auto pick = static_cast<int>(rng() % (2 * rank));
            out.letters.push_back({pick / 2, pick % 2 == 0 ? 1 : -1});
        } else {
            // draw among the 2*rank - 1 letters that do not cancel
            Letter banned = out.letters.back().inverse();
            auto pick = static_cast<int>(rng() % (2 * rank - 1));
            int banned_slot = banned.gen * 2 + (banned.sign > 0 ? 0 : 1);
            if (pick >= banned_slot)
                ++pick;
            out.letters.push_back({pick / 2, pick % 2 == 0 ? 1 : -1});
        }
    }
    return out;
}

Word random_word(int length, int rank, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_word(length, rank, rng);
}

}  // namespace fg
