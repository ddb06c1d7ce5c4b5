#ifndef SUBSPACEKIT_SURFACE_HPP
#define SUBSPACEKIT_SURFACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "subspacekit/quadext.hpp"

namespace subspacekit {

// Symmetric table of pairings C_i . C_j of the boundary components; the
// diagonal holds the self-intersections.
class IntersectionMatrix {
public:
    IntersectionMatrix(std::vector<std::vector<Rat>> entries);

    std::size_t size() const { return entries_.size(); } // r
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<Rat>>& entries() const { return entries_; }

    bool all_entries_positive() const;

    // { "r": r, "matrix": [[...]], "ample": bool } — entries may be integers
    // or "p/q" strings; "ample" records the caller's assertion.
    static std::pair<IntersectionMatrix, bool> from_json_text(const std::string& json_text);
    std::string to_json_text(bool ample) const;

private:
    std::vector<std::vector<Rat>> entries_;
};

// positive integer weights a_1..a_r defining D = a_1 C_1 + ... + a_r C_r
using WeightVector = std::vector<Int>;

void check_weights(const IntersectionMatrix& m, const WeightVector& a);

// D^2 = a^T M a
Rat d_squared(const IntersectionMatrix& m, const WeightVector& a);
// D . C_i = (M a)_i, 0-based i
Rat d_dot(const IntersectionMatrix& m, const WeightVector& a, std::size_t i);

// the same forms at a rational point (solver internals)
Rat quadratic_form(const IntersectionMatrix& m, const std::vector<Rat>& x);
Rat linear_form(const IntersectionMatrix& m, const std::vector<Rat>& x, std::size_t i);

// Smallest (resp. largest) positive root of C_i^2 T^2 - 2 (D.C_i) T + D^2,
// exact in the quadratic extension of the discriminant.
QuadExt gamma_small(const IntersectionMatrix& m, const WeightVector& a, std::size_t i);
QuadExt gamma_large(const IntersectionMatrix& m, const WeightVector& a, std::size_t i);

// F(theta) = theta (1 - theta (D.C_i)/D^2 + theta^2 C_i^2 / (3 D^2))
QuadExt f_theta(const IntersectionMatrix& m, const WeightVector& a, std::size_t i,
                const QuadExt& theta);
QuadExt f_theta_raw(const Rat& d2, const Rat& dc, const Rat& c2, const QuadExt& theta);

// per-index strict inequalities F(gamma_i) > a_i
std::vector<bool> cz_check(const IntersectionMatrix& m, const WeightVector& a);

// per-index strict inequalities (D^2/(D.C_i)) (1 + D^2 C_i^2 / (6 (D.C_i)^2)) > 4 a_i
std::vector<bool> autissier_check(const IntersectionMatrix& m, const WeightVector& a);

struct FixedPointOptions {
    int max_iterations = 20000;
    Int rounding_denominator = Int(1000000000000LL); // cap between iterations
};

// Positive integer weights with (1-eps) Q(a) < r a_i L_i(a) < (1+eps) Q(a)
// for every i. Iterates the simplex map x -> normalized (1/L_1(x), ...,
// 1/L_r(x)) from the barycenter with exact rational steps (denominators
// capped by continued-fraction rounding), then scales to integers and
// verifies the certificate exactly before returning.
WeightVector fixed_point_weights(const IntersectionMatrix& m, const Rat& eps,
                                 const FixedPointOptions& opts = {});

// the exact certificate the solver promises
bool weight_certificate(const IntersectionMatrix& m, const WeightVector& a, const Rat& eps);

struct LevinOptions {
    int max_retries = 40;
    FixedPointOptions fixed_point;
};

// r >= 4 and positive pairings screen, then balanced weights with the
// tolerance tightened until autissier_check passes on every index. Throws
// ScreenFailed when the necessary numeric conditions (or the ampleness
// assertion) are missing, NoConvergence when no certificate is reached.
WeightVector levin_check(const IntersectionMatrix& m, bool ampleness_asserted,
                         const LevinOptions& opts = {});

struct CurveBudget {
    long long points_at_infinity; // r
    long long genus;              // g
    long long multiplier;         // n
    Int ell;                      // dim L(nD) = n r - g + 1
    Rat order_sum_bound;          // A = ell (ell - 2n - 1) / 2
    std::optional<long long> minimal_positive_n; // least n with A > 0, if any
};

// Riemann-Roch budget for a curve with r points at infinity and genus g;
// valid for n r > 2g - 2.
CurveBudget curve_budget(long long r, long long g, long long n);

struct ThetaBound {
    QuadExt cubic_term;    // exact n^3 coefficient times n^3; lower-order terms omitted
    QuadExt f_theta_value; // the induced bound F(theta), asymptotic in n
    std::string note = "asymptotic";
};

// Exact leading term of sum_{k <= theta n} (D^2 n^2 - 2 (D.C) n k + C^2 k^2)/2
// for 0 <= theta <= gamma'.
ThetaBound etheta_lower_bound(const Rat& d2, const Rat& dc, const Rat& c2, const Int& n,
                              const QuadExt& theta);

} // namespace subspacekit

#endif
