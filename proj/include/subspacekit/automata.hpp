#ifndef SUBSPACEKIT_AUTOMATA_HPP
#define SUBSPACEKIT_AUTOMATA_HPP

#include <string>
#include <vector>

#include "subspacekit/words.hpp"

namespace subspacekit {

// Deterministic finite automaton with output. The transition table is total:
// one successor per (state, digit).
class FiniteAutomaton {
public:
    FiniteAutomaton(int base, std::vector<std::string> states, const std::string& initial,
                    std::vector<std::vector<int>> transitions, Alphabet output_alphabet,
                    std::vector<int> output);

    // JSON schema:
    // { "base": k, "states": [names], "initial": name,
    //   "transitions": { state: [successor per digit 0..k-1] },
    //   "output": { state: letter } }
    static FiniteAutomaton from_json_text(const std::string& json_text);
    std::string to_json_text() const;

    int base() const { return base_; }
    std::size_t state_count() const { return states_.size(); }
    const std::vector<std::string>& states() const { return states_; }
    int initial() const { return initial_; }
    int step(int state, int digit) const;
    const Alphabet& output_alphabet() const { return output_alphabet_; }
    int output_of(int state) const { return output_[state]; }

private:
    int base_;
    std::vector<std::string> states_;
    int initial_;
    std::vector<std::vector<int>> transitions_; // [state][digit]
    Alphabet output_alphabet_;
    std::vector<int> output_; // [state] -> letter index
};

// The worked 3-state machine over inputs {0,1} with outputs {a,b}.
FiniteAutomaton figure_one_machine();
// 2-state parity machine generating the Thue-Morse sequence.
FiniteAutomaton thue_morse_machine();

// Fold the transition map over the digits, then apply the output map.
std::string run(const FiniteAutomaton& m, const std::vector<int>& digits);
std::string run(const FiniteAutomaton& m, const std::string& digit_word);

// Base-k digits of n, most significant first; 0 encodes as {0}.
std::vector<int> base_digits(const Int& n, int base);

// Term n of the automatic sequence: the machine reads the base-k expansion of
// n starting from the least significant digit.
std::string automatic_term(const FiniteAutomaton& m, const Int& n);

// Word of the first count terms (n = 0..count-1) over the output alphabet.
Word automatic_prefix(const FiniteAutomaton& m, std::size_t count);

// Thue-Morse by digit-sum parity, over the alphabet {0,1}.
int thue_morse_term(const Int& n);
Word thue_morse_direct(std::size_t count);

// max over 1 <= n <= nmax of complexity(prefix(m, N), n) / n; an empirical
// witness that automatic sequences have linearly bounded complexity
Rat measured_complexity_slope(const FiniteAutomaton& m, std::size_t N, std::size_t nmax);

} // namespace subspacekit

#endif
