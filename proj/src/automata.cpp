#include "subspacekit/automata.hpp"

#include <algorithm>

#include <json.hpp>

namespace subspacekit {

FiniteAutomaton::FiniteAutomaton(int base, std::vector<std::string> states,
                                 const std::string& initial,
                                 std::vector<std::vector<int>> transitions,
                                 Alphabet output_alphabet, std::vector<int> output)
    : base_(base),
      states_(std::move(states)),
      initial_(-1),
      transitions_(std::move(transitions)),
      output_alphabet_(std::move(output_alphabet)),
      output_(std::move(output)) {
    if (base_ < 2) fail(Errc::precondition_failed, "automaton needs base >= 2");
    if (states_.empty()) fail(Errc::precondition_failed, "automaton needs at least one state");
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == initial) initial_ = static_cast<int>(i);
    if (initial_ < 0) fail(Errc::precondition_failed, "initial state '" + initial + "' unknown");
    if (transitions_.size() != states_.size())
        fail(Errc::precondition_failed, "transition table must cover every state");
    for (const auto& row : transitions_) {
        if (row.size() != static_cast<std::size_t>(base_))
            fail(Errc::precondition_failed, "transition row must list one successor per digit");
        for (int target : row)
            if (target < 0 || static_cast<std::size_t>(target) >= states_.size())
                fail(Errc::precondition_failed, "transition target out of range");
    }
    if (output_.size() != states_.size())
        fail(Errc::precondition_failed, "output map must cover every state");
    for (int letter : output_)
        if (letter < 0 || static_cast<std::size_t>(letter) >= output_alphabet_.size())
            fail(Errc::precondition_failed, "output letter out of range");
}

int FiniteAutomaton::step(int state, int digit) const {
    if (digit < 0 || digit >= base_)
        fail(Errc::invalid_digit, "digit " + std::to_string(digit) + " outside base " +
                                      std::to_string(base_));
    return transitions_[state][digit];
}

FiniteAutomaton FiniteAutomaton::from_json_text(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    int base = j.at("base").get<int>();
    auto states = j.at("states").get<std::vector<std::string>>();
    std::string initial = j.at("initial").get<std::string>();

    auto state_index = [&](const std::string& name) -> int {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i] == name) return static_cast<int>(i);
        fail(Errc::precondition_failed, "unknown state '" + name + "'");
    };

    std::vector<std::vector<int>> transitions(states.size());
    const auto& tr = j.at("transitions");
    for (const auto& name : states) {
        if (!tr.contains(name))
            fail(Errc::precondition_failed, "missing transition row for state '" + name + "'");
        std::vector<int> row;
        for (const auto& target : tr.at(name)) row.push_back(state_index(target.get<std::string>()));
        transitions[state_index(name)] = std::move(row);
    }

    const auto& out = j.at("output");
    std::vector<std::string> letters;
    for (const auto& name : states) {
        if (!out.contains(name))
            fail(Errc::precondition_failed, "missing output letter for state '" + name + "'");
        std::string letter = out.at(name).get<std::string>();
        if (std::find(letters.begin(), letters.end(), letter) == letters.end())
            letters.push_back(letter);
    }
    std::sort(letters.begin(), letters.end());
    Alphabet alphabet(letters);
    std::vector<int> output(states.size());
    for (const auto& name : states)
        output[state_index(name)] =
            static_cast<int>(*alphabet.index_of(out.at(name).get<std::string>()));

    return FiniteAutomaton(base, states, initial, std::move(transitions), std::move(alphabet),
                           std::move(output));
}

std::string FiniteAutomaton::to_json_text() const {
    nlohmann::json j;
    j["base"] = base_;
    j["states"] = states_;
    j["initial"] = states_[initial_];
    nlohmann::json tr;
    for (std::size_t i = 0; i < states_.size(); ++i) {
        std::vector<std::string> row;
        for (int target : transitions_[i]) row.push_back(states_[target]);
        tr[states_[i]] = row;
    }
    j["transitions"] = tr;
    nlohmann::json out;
    for (std::size_t i = 0; i < states_.size(); ++i)
        out[states_[i]] = output_alphabet_.letter(output_[i]);
    j["output"] = out;
    return j.dump(2);
}

FiniteAutomaton figure_one_machine() {
    // states X, Y, Z; on 0: X->Y->Z->X; on 1: X->Z, Y->X, Z->Z
    return FiniteAutomaton(2, {"X", "Y", "Z"}, "X", {{1, 2}, {2, 0}, {0, 2}},
                           Alphabet::from_characters("ab"), {1, 1, 0});
}

FiniteAutomaton thue_morse_machine() {
    // parity of the number of 1-digits seen so far
    return FiniteAutomaton(2, {"even", "odd"}, "even", {{0, 1}, {1, 0}},
                           Alphabet::from_characters("01"), {0, 1});
}

std::string run(const FiniteAutomaton& m, const std::vector<int>& digits) {
    int state = m.initial();
    for (int d : digits) state = m.step(state, d);
    return m.output_alphabet().letter(m.output_of(state));
}

std::string run(const FiniteAutomaton& m, const std::string& digit_word) {
    std::vector<int> digits;
    digits.reserve(digit_word.size());
    for (char c : digit_word) {
        if (c < '0' || c > '9') fail(Errc::invalid_digit, std::string("bad digit '") + c + "'");
        digits.push_back(c - '0');
    }
    return run(m, digits);
}

std::vector<int> base_digits(const Int& n, int base) {
    if (n < 0) fail(Errc::precondition_failed, "digits of a negative number");
    if (n == 0) return {0};
    std::vector<int> digits;
    Int rest = n;
    while (rest > 0) {
        digits.push_back(static_cast<int>(rest % base));
        rest /= base;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string automatic_term(const FiniteAutomaton& m, const Int& n) {
    std::vector<int> digits = base_digits(n, m.base());
    std::reverse(digits.begin(), digits.end()); // least significant digit first
    return run(m, digits);
}

Word automatic_prefix(const FiniteAutomaton& m, std::size_t count) {
    if (count < 1) fail(Errc::precondition_failed, "prefix length must be >= 1");
    std::vector<int> symbols;
    symbols.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        std::string letter = automatic_term(m, Int(n));
        symbols.push_back(static_cast<int>(*m.output_alphabet().index_of(letter)));
    }
    return Word(m.output_alphabet(), std::move(symbols));
}

int thue_morse_term(const Int& n) {
    int parity = 0;
    for (int d : base_digits(n, 2)) parity ^= d;
    return parity;
}

Word thue_morse_direct(std::size_t count) {
    if (count < 1) fail(Errc::precondition_failed, "prefix length must be >= 1");
    std::vector<int> symbols;
    symbols.reserve(count);
    for (std::size_t n = 0; n < count; ++n) symbols.push_back(thue_morse_term(Int(n)));
    return Word(Alphabet::from_characters("01"), std::move(symbols));
}

Rat measured_complexity_slope(const FiniteAutomaton& m, std::size_t N, std::size_t nmax) {
    if (nmax < 1 || nmax > N / 2)
        fail(Errc::precondition_failed, "need 1 <= nmax <= N/2");
    Word prefix = automatic_prefix(m, N);
    Rat slope(0);
    for (std::size_t n = 1; n <= nmax; ++n)
        slope = std::max(slope, Rat(complexity(prefix, n), n));
    return slope;
}

} // namespace subspacekit
