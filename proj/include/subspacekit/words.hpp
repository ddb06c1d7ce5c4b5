#ifndef SUBSPACEKIT_WORDS_HPP
#define SUBSPACEKIT_WORDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subspacekit/numbers.hpp"

namespace subspacekit {

// Finite ordered alphabet. Letters are strings so alphabets larger than the
// printable characters work; the common case is single-character letters.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);

    // "0", "1", ..., "base-1"
    static Alphabet digits(int base);
    // one letter per character
    static Alphabet from_characters(const std::string& chars);

    std::size_t size() const { return letters_.size(); }
    const std::string& letter(std::size_t i) const { return letters_[i]; }
    std::optional<std::size_t> index_of(const std::string& letter) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> letters_;
};

// Finite word; symbols stored as indices into the alphabet.
class Word {
public:
    Word(Alphabet alphabet, std::vector<int> symbols);

    // single-character letters, alphabet derived from the distinct characters
    static Word from_string(const std::string& text);
    // text over the given alphabet's single-character letters
    static Word from_string(const std::string& text, const Alphabet& alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t length() const { return symbols_.size(); }
    int symbol(std::size_t i) const { return symbols_[i]; } // 0-based
    const std::vector<int>& symbols() const { return symbols_; }

    Word prefix(std::size_t n) const;
    std::string str() const; // concatenated letters

    friend bool operator==(const Word&, const Word&) = default;

private:
    Alphabet alphabet_;
    std::vector<int> symbols_;
};

// Two disjoint equal subwords: u_k..u_{k+len-1} = u_n..u_{n+len-1} with
// k + len <= n and n + len - 1 <= N. Indices are 1-based.
struct Repetition {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t length = 0;

    friend bool operator==(const Repetition&, const Repetition&) = default;
};

// Number of distinct length-n factors of w (0 if n exceeds the length).
std::size_t complexity(const Word& w, std::size_t n);

// Repetition of maximal length >= lmin, ties broken by smallest k then
// smallest n; empty when none exists.
std::optional<Repetition> find_disjoint_repetition(const Word& w, std::size_t lmin);

// Exhaustive reference search; refuses words longer than max_length.
std::optional<Repetition> brute_force_repetition_oracle(const Word& w, std::size_t lmin,
                                                        std::size_t max_length = 64);

// Constructive step from low complexity to a long repetition: given
// complexity(w, n) < kappa*n, finds inside the prefix of length
// N = ceil((kappa+1)*n) a repetition of length >= n/3 (hence >= N/(6(kappa+1))).
// Pigeonholed equal n-factors are returned directly when disjoint; otherwise
// the overlap forces a prefix power A...A and the two halves of it are
// returned.
Repetition repetition_from_low_complexity(const Word& w, std::size_t n, const Rat& kappa);

// Smallest N with N >= (kappa+1)*n, the prefix length the lemma inspects.
std::size_t low_complexity_prefix_length(std::size_t n, const Rat& kappa);

// true iff the claimed repetition is internally consistent for w
bool repetition_is_valid(const Word& w, const Repetition& rep);

} // namespace subspacekit

#endif
