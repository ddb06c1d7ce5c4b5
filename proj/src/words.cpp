#include "subspacekit/words.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace subspacekit {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) fail(Errc::precondition_failed, "empty alphabet");
    std::set<std::string> seen;
    for (const auto& l : letters_)
        if (!seen.insert(l).second) fail(Errc::precondition_failed, "duplicate letter '" + l + "'");
}

Alphabet Alphabet::digits(int base) {
    if (base < 2) fail(Errc::precondition_failed, "digit alphabet needs base >= 2");
    std::vector<std::string> ls;
    ls.reserve(base);
    for (int i = 0; i < base; ++i) ls.push_back(std::to_string(i));
    return Alphabet(std::move(ls));
}

Alphabet Alphabet::from_characters(const std::string& chars) {
    std::vector<std::string> ls;
    for (char c : chars) ls.emplace_back(1, c);
    return Alphabet(std::move(ls));
}

std::optional<std::size_t> Alphabet::index_of(const std::string& letter) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == letter) return i;
    return std::nullopt;
}

Word::Word(Alphabet alphabet, std::vector<int> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    for (int s : symbols_)
        if (s < 0 || static_cast<std::size_t>(s) >= alphabet_.size())
            fail(Errc::invalid_digit, "symbol index " + std::to_string(s) + " outside alphabet");
}

Word Word::from_string(const std::string& text) {
    std::string distinct;
    for (char c : text)
        if (distinct.find(c) == std::string::npos) distinct.push_back(c);
    std::sort(distinct.begin(), distinct.end());
    if (distinct.empty()) distinct = "a"; // empty word still needs an alphabet
    return from_string(text, Alphabet::from_characters(distinct));
}

Word Word::from_string(const std::string& text, const Alphabet& alphabet) {
    std::vector<int> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        auto idx = alphabet.index_of(std::string(1, c));
        if (!idx) fail(Errc::invalid_digit, std::string("letter '") + c + "' outside alphabet");
        symbols.push_back(static_cast<int>(*idx));
    }
    return Word(alphabet, std::move(symbols));
}

Word Word::prefix(std::size_t n) const {
    if (n > length()) fail(Errc::out_of_range, "prefix longer than word");
    return Word(alphabet_, std::vector<int>(symbols_.begin(), symbols_.begin() + n));
}

std::string Word::str() const {
    std::string out;
    for (int s : symbols_) out += alphabet_.letter(s);
    return out;
}

std::size_t complexity(const Word& w, std::size_t n) {
    if (n < 1) fail(Errc::precondition_failed, "complexity needs n >= 1");
    if (n > w.length()) return 0;
    std::set<std::vector<int>> factors;
    for (std::size_t i = 0; i + n <= w.length(); ++i)
        factors.insert(std::vector<int>(w.symbols().begin() + i, w.symbols().begin() + i + n));
    return factors.size();
}

bool repetition_is_valid(const Word& w, const Repetition& rep) {
    if (rep.k < 1 || rep.length < 1) return false;
    if (rep.k + rep.length > rep.n) return false;
    if (rep.n + rep.length - 1 > w.length()) return false;
    for (std::size_t j = 0; j < rep.length; ++j)
        if (w.symbol(rep.k - 1 + j) != w.symbol(rep.n - 1 + j)) return false;
    return true;
}

std::optional<Repetition> find_disjoint_repetition(const Word& w, std::size_t lmin) {
    if (lmin < 1) fail(Errc::precondition_failed, "lmin must be >= 1");
    const std::size_t n = w.length();
    if (n < 2 * lmin) return std::nullopt;

    // lce[j] = longest common extension of suffixes at i and j, computed row
    // by row for i = n-1 .. 0 so that one O(n) row is alive at a time
    std::vector<std::size_t> next(n + 1, 0), cur(n + 1, 0);
    std::optional<Repetition> best;
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = n; j-- > i + 1;)
            cur[j] = (w.symbol(i) == w.symbol(j)) ? next[j + 1] + 1 : 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t len = std::min(cur[j], j - i); // disjointness caps at the gap
            if (len < lmin) continue;
            Repetition cand{i + 1, j + 1, len};
            if (!best || cand.length > best->length ||
                (cand.length == best->length &&
                 (cand.k < best->k || (cand.k == best->k && cand.n < best->n))))
                best = cand;
        }
        std::swap(cur, next);
    }
    return best;
}

std::optional<Repetition> brute_force_repetition_oracle(const Word& w, std::size_t lmin,
                                                        std::size_t max_length) {
    if (w.length() > max_length)
        fail(Errc::input_too_large, "oracle limited to words of length " + std::to_string(max_length));
    const std::size_t N = w.length();
    for (std::size_t len = N / 2; len >= std::max<std::size_t>(lmin, 1); --len) {
        for (std::size_t k = 1; k + len <= N; ++k) {
            for (std::size_t n = k + len; n + len - 1 <= N; ++n) {
                bool equal = true;
                for (std::size_t j = 0; j < len && equal; ++j)
                    equal = w.symbol(k - 1 + j) == w.symbol(n - 1 + j);
                if (equal) return Repetition{k, n, len};
            }
        }
        if (len == 1) break;
    }
    return std::nullopt;
}

std::size_t low_complexity_prefix_length(std::size_t n, const Rat& kappa) {
    // ceil((kappa+1)*n)
    Rat target = (kappa + 1) * Rat(n);
    Int q = num(target) / den(target);
    if (Rat(q) < target) q += 1;
    return q.convert_to<std::size_t>();
}

Repetition repetition_from_low_complexity(const Word& w, std::size_t n, const Rat& kappa) {
    if (n < 1 || kappa <= 0) fail(Errc::precondition_failed, "need n >= 1 and kappa > 0");
    const std::size_t N = low_complexity_prefix_length(n, kappa);
    if (w.length() < N)
        fail(Errc::precondition_failed,
             "word of length " + std::to_string(w.length()) + " shorter than required prefix " +
                 std::to_string(N));
    if (!(Rat(complexity(w, n)) < kappa * Rat(n)))
        fail(Errc::precondition_failed, "complexity(w, n) is not below kappa*n");

    // Pigeonhole: the prefix has N-n+1 >= kappa*n+1 occurrences of n-factors
    // but fewer distinct ones, so some factor occurs twice.
    std::map<std::vector<int>, std::size_t> first_at;
    std::size_t k = 0, m = 0; // 1-based positions of the equal pair
    for (std::size_t i = 0; i + n <= N; ++i) {
        std::vector<int> f(w.symbols().begin() + i, w.symbols().begin() + i + n);
        auto [it, inserted] = first_at.emplace(std::move(f), i + 1);
        if (!inserted) {
            k = it->second;
            m = i + 1;
            break;
        }
    }
    if (k == 0) fail(Errc::precondition_failed, "no repeated n-factor found"); // unreachable

    Repetition rep;
    if (k + n <= m) {
        rep = Repetition{k, m, n};
    } else {
        // Overlapping occurrences force the window to start with a power
        // A...A of the gap-length block A; the two halves of that power are
        // disjoint copies of length floor(t/2)*a > n/3.
        const std::size_t a = m - k;          // period induced by the overlap
        const std::size_t t = n / a + 1;      // copies of A prefixing the window
        const std::size_t half = t / 2;
        rep = Repetition{k, k + half * a, half * a};
    }
    if (!repetition_is_valid(w, rep) || rep.n + rep.length - 1 > N || 3 * rep.length < n)
        fail(Errc::precondition_failed, "internal: constructed repetition violates its contract");
    return rep;
}

} // namespace subspacekit
