#ifndef SUBSPACEKIT_TRANSCENDENCE_HPP
#define SUBSPACEKIT_TRANSCENDENCE_HPP

#include <optional>
#include <vector>

#include "subspacekit/heights.hpp"
#include "subspacekit/words.hpp"

namespace subspacekit {

// Prefix decomposition A B C B of a digit word: A is the non-periodic head
// (length r), B C is one period (length s = |B| + |C|), and the second copy
// of B witnesses the repetition. |B| >= 1.
struct AbcbPattern {
    int base = 10;
    std::vector<int> a, b, c; // digit blocks

    std::size_t r() const { return a.size(); }
    std::size_t period() const { return b.size() + c.size(); } // s
    std::size_t block() const { return b.size(); }             // |B|
    std::size_t agreement() const { return r() + period() + block(); } // |ABCB|

    std::vector<int> prefix_digits() const; // A B C B concatenated
};

// First `count` digits u_1..u_count of xi in base b, so that
// xi = sum u_i b^-i + remainder in [0, b^-count). Terminating expansions
// continue with zeros. Requires 0 < xi < 1.
Word digits_of_rational(const Rat& xi, int base, std::size_t count);

// Decomposition of w as (A B C B) * tail with |B| >= eps * length(w),
// maximizing |B| (ties: minimal |A|, then minimal |C|); empty when none.
std::optional<AbcbPattern> extract_abcb(const Word& w, const Rat& eps);

// Value xi of the eventually periodic expansion A (B C)^infinity together
// with the integer M = xi * b^r (b^s - 1). Rejects the all-(b-1) period,
// whose expansion would not be the canonical one.
struct PeriodicValue {
    Rat xi;
    Int m;
};
PeriodicValue periodic_value(const AbcbPattern& p);

// |alpha - xi| against the bound b^-(r+s+|B|) coming from the shared ABCB
// prefix; PatternMismatch unless alpha's digits begin with A B C B.
struct GapReport {
    Rat gap;
    Rat bound;
    bool holds;
};
GapReport approximation_gap(const Rat& alpha, const AbcbPattern& p);

// One data point for the linear-forms product: x = (b^{r+s}, b^r, M),
// product_value = |b^{r+s} alpha - b^r alpha - M| * prod_{p in S finite} |M|_p,
// height_bound = ||x|| = b^{r+s}.
struct SubspaceDatum {
    std::size_t prefix_length = 0; // N
    Int x1, x2, x3;
    Rat product_value;
    Int height_bound;
    bool m_zero_convention = false; // finite factors of M = 0 taken as 1
};

// S must contain the infinite place and every prime dividing the base.
SubspaceDatum subspace_product(const Rat& alpha, const AbcbPattern& p, const PlaceSet& s,
                               std::size_t prefix_length = 0);

// Plane lambda*b^r + mu*b^{r+s} + nu*M = 0 through all data points, if the
// x-vectors span rank <= 2; normalized to nu = 1 when possible, in which case
// alpha_hat = -mu/nu is the recovered candidate.
struct PlaneRelation {
    Rat lambda, mu, nu;
    std::optional<Rat> alpha_hat;
};
std::optional<PlaneRelation> detect_common_plane(const std::vector<SubspaceDatum>& data);

// Length of the non-periodic head and of the period of the base-b expansion
// of a rational in (0, 1). Terminating expansions report period 1 (repeating
// zeros).
std::pair<std::size_t, std::size_t> expansion_preperiod_and_period(const Rat& alpha, int base);

struct PipelineRow {
    std::size_t prefix_length; // N
    AbcbPattern pattern;
    Rat xi;
    Int m;
    GapReport gap;
    SubspaceDatum datum;
};

struct PipelineResult {
    std::vector<PipelineRow> rows;
    std::optional<PlaneRelation> plane;
};

// Pattern extraction, periodic approximant and product data at the given
// prefix lengths; S is the infinite place plus the primes dividing the base.
PipelineResult run_pipeline_at(const Rat& alpha, int base, const std::vector<std::size_t>& lengths,
                               const Rat& eps);

// Same, with prefix lengths scheduled from the expansion's preperiod and
// period so that every extracted approximant equals alpha exactly and the
// collected x-vectors carry `points` distinct (r, s) pairs.
PipelineResult run_periodic_pipeline(const Rat& alpha, int base, std::size_t points = 3);

} // namespace subspacekit

#endif
