#ifndef SUBSPACEKIT_POWERSUM_HPP
#define SUBSPACEKIT_POWERSUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "subspacekit/numbers.hpp"

namespace subspacekit {

struct PowerSumTerm {
    Rat coeff; // nonzero in canonical form
    Rat root;  // positive rational

    friend bool operator==(const PowerSumTerm&, const PowerSumTerm&) = default;
};

// n |-> b_1 a_1^n + ... + b_m a_m^n with positive rational roots, kept
// canonical: roots strictly decreasing, coefficients nonzero. The empty sum
// is zero.
class PowerSum {
public:
    PowerSum() = default;

    // merge equal roots, drop zero coefficients, sort roots descending
    static PowerSum canonicalized(std::vector<PowerSumTerm> raw);
    static PowerSum constant(const Rat& c);
    static PowerSum single(const Rat& coeff, const Rat& root);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<PowerSumTerm>& terms() const { return terms_; }
    const PowerSumTerm& leading() const;
    const PowerSumTerm& trailing() const;

    Rat eval(const Int& n) const;

    PowerSum pow(unsigned q) const;
    // n |-> u(Q n + R): roots a^Q, coefficients b a^R
    PowerSum progression(const Int& q, const Int& r) const;

    friend PowerSum operator+(const PowerSum&, const PowerSum&);
    friend PowerSum operator-(const PowerSum&, const PowerSum&);
    friend PowerSum operator*(const PowerSum&, const PowerSum&);
    friend PowerSum operator*(const Rat&, const PowerSum&);
    friend bool operator==(const PowerSum&, const PowerSum&) = default;

    // { "terms": [ {"coeff": "p/q", "root": "p/q"}, ... ] }
    static PowerSum from_json_text(const std::string& json_text);
    std::string to_json_text() const;
    std::string str() const; // e.g. "4^n + 2*2^n + 1"

private:
    std::vector<PowerSumTerm> terms_;
};

struct QthRootOptions {
    int step_limit = 64;
};

// Exact v with v^q = u, reconstructed by peeling terms from the top: the
// leading term of v is forced by the leading term of u, and each later term
// is read off the leading term of u - v^q (division only, no further root
// extraction). Candidate roots below (trailing root of u)^(1/q) prove that no
// rational v exists. The result is re-expanded and checked before returning.
//
// IrrationalObstruction: leading root or coefficient has no rational q-th
// root. StepLimit: peeling exceeded options.step_limit terms.
// For even q the returned leading coefficient is positive.
std::optional<PowerSum> qth_root(const PowerSum& u, unsigned q, const QthRootOptions& opts = {});

struct PisotDecomposition {
    Int progression_modulus;  // Q
    Int progression_residue;  // R
    PowerSum witness;         // w with u(Qn+R) = w(n)^q
};

struct PisotOptions {
    // progression moduli to try, as multiples of q
    std::vector<unsigned> multipliers{1, 2};
    QthRootOptions root;
};

// First (Q, R) in lexicographic order with Q in {q, 2q} (extensible) and
// 0 <= R < Q such that u(Qn+R) is the exact q-th power of a rational power
// sum; empty when every candidate fails.
std::optional<PisotDecomposition> pisot_decompose(const PowerSum& u, unsigned q,
                                                  const PisotOptions& opts = {});

// Rank test on the exponent lattice: factor each root over the primes and
// check that the m exponent vectors are linearly independent.
bool roots_multiplicatively_independent(const PowerSum& u,
                                        const Int& factor_bound = default_factor_bound);

struct UhsVerdict {
    bool ok = false;
    std::string reason;
};

// m >= 2, nonzero coefficients (canonical form guarantees this) and
// multiplicatively independent roots.
UhsVerdict is_universal_hilbert_candidate(const PowerSum& u,
                                          const Int& factor_bound = default_factor_bound);

struct GaussianRational {
    Rat re, im;

    Rat norm2() const { return re * re + im * im; } // exact squared modulus
    bool is_zero() const { return re == 0 && im == 0; }

    static GaussianRational parse(const std::string& text); // "8+i", "2-i", "3", "1/2+3/4i"
    std::string str() const;

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

enum class Dominance { upper, lower };

struct DominanceVerdict {
    bool dominant = false;
    std::optional<GaussianRational> witness;
};

// Unique maximizer (upper) or minimizer (lower) of the squared modulus among
// the roots; ties mean no dominant root.
DominanceVerdict has_dominant_root(const std::vector<GaussianRational>& roots, Dominance direction);

} // namespace subspacekit

#endif
