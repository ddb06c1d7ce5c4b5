#include "subspacekit/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace subspacekit {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::zero_input: return "ZeroInput";
        case Errc::zero_vector: return "ZeroVector";
        case Errc::precondition_failed: return "PreconditionFailed";
        case Errc::input_too_large: return "InputTooLarge";
        case Errc::invalid_digit: return "InvalidDigit";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::pattern_mismatch: return "PatternMismatch";
        case Errc::degenerate_pattern: return "DegeneratePattern";
        case Errc::bad_place_set: return "BadPlaceSet";
        case Errc::nonpositive_root: return "NonpositiveRoot";
        case Errc::irrational_obstruction: return "IrrationalObstruction";
        case Errc::factorization_bound: return "FactorizationBound";
        case Errc::step_limit: return "StepLimit";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::hodge_violation: return "HodgeViolation";
        case Errc::degenerate_self_intersection: return "DegenerateSelfIntersection";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::nonpositive_pairing: return "NonpositivePairing";
        case Errc::no_convergence: return "NoConvergence";
        case Errc::positivity_violation: return "PositivityViolation";
        case Errc::screen_failed: return "ScreenFailed";
        case Errc::not_nested: return "NotNested";
        case Errc::out_of_riemann_roch_range: return "OutOfRiemannRochRange";
        case Errc::theta_out_of_range: return "ThetaOutOfRange";
        case Errc::usage_error: return "UsageError";
    }
    return "Error";
}

namespace {

bool looks_like_number(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Int parse_integer(const std::string& text) {
    if (!looks_like_number(text)) fail(Errc::usage_error, "not an integer literal: '" + text + "'");
    return Int(text);
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_integer(text));
    Int n = parse_integer(text.substr(0, slash));
    Int d = parse_integer(text.substr(slash + 1));
    if (d == 0) fail(Errc::usage_error, "zero denominator in '" + text + "'");
    return Rat(n, d);
}

std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string to_string(const Int& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Rat pow_rat(const Rat& x, const Int& e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) fail(Errc::division_by_zero, "0 raised to a negative power");
        return Rat(0);
    }
    Int k = abs(e);
    unsigned long long uk = k.convert_to<unsigned long long>();
    Int pn = pow(num(x), static_cast<unsigned>(uk));
    Int pd = pow(den(x), static_cast<unsigned>(uk));
    return e > 0 ? Rat(pn, pd) : Rat(pd, pn);
}

Int iroot_floor(const Int& n, unsigned q) {
    if (n < 0) fail(Errc::precondition_failed, "iroot_floor of a negative number");
    if (q == 0) fail(Errc::precondition_failed, "0-th root");
    if (n == 0 || n == 1 || q == 1) return n;
    // binary search on bit length
    unsigned bits = static_cast<unsigned>(msb(n)) + 1;
    Int hi = Int(1) << (bits / q + 1);
    Int lo = 0;
    while (lo < hi - 1) {
        Int mid = (lo + hi) / 2;
        if (pow(mid, q) <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::optional<Int> exact_iroot(const Int& n, unsigned q) {
    if (n < 0) {
        if (q % 2 == 0) return std::nullopt;
        auto r = exact_iroot(-n, q);
        if (!r) return std::nullopt;
        return -*r;
    }
    Int r = iroot_floor(n, q);
    if (pow(r, q) == n) return r;
    return std::nullopt;
}

std::optional<Rat> exact_qth_root(const Rat& x, unsigned q) {
    auto rn = exact_iroot(num(x), q);
    if (!rn) return std::nullopt;
    auto rd = exact_iroot(den(x), q);
    if (!rd) return std::nullopt;
    return Rat(*rn, *rd);
}

bool is_qth_power(const Rat& x, unsigned q) { return exact_qth_root(x, q).has_value(); }

Factorization factorize(Int n, const Int& bound) {
    if (n == 0) fail(Errc::zero_input, "factorize(0)");
    if (n < 0) n = -n;
    Factorization f;
    auto push = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    };
    if (n % 2 == 0) push(2);
    Int d = 3;
    while (d * d <= n && d <= bound) {
        if (n % d == 0) push(d);
        d += 2;
    }
    if (n > 1) {
        // no divisor <= bound remains, so n is prime whenever n <= bound^2
        if (n > bound * bound)
            fail(Errc::factorization_bound,
                 "cofactor " + to_string(n) + " exceeds trial-division bound " + to_string(bound));
        f.factors.emplace_back(n, 1);
    }
    return f;
}

bool is_prime(const Int& n, const Int& bound) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    Int d = 3;
    while (d * d <= n && d <= bound) {
        if (n % d == 0) return false;
        d += 2;
    }
    if (d * d <= n)
        fail(Errc::factorization_bound,
             "primality of " + to_string(n) + " undecided at bound " + to_string(bound));
    return true;
}

Int int_valuation(Int n, const Int& p) {
    if (n == 0) fail(Errc::zero_input, "valuation of 0");
    Int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Rat limit_denominator(const Rat& x, const Int& max_den) {
    if (max_den < 1) fail(Errc::precondition_failed, "max_den must be >= 1");
    if (den(x) <= max_den) return x;
    if (x < 0) return -limit_denominator(-x, max_den);

    // convergents p/q of the continued fraction of x
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Int n = num(x), d = den(x);
    while (d != 0) {
        Int a = n / d;
        Int q2 = q0 + a * q1;
        if (q2 > max_den) break;
        Int p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Int nd = n - a * d;
        n = d;
        d = nd;
    }
    Int k = (max_den - q0) / q1;
    Rat best1(p0 + k * p1, q0 + k * q1);
    Rat best2(p1, q1);
    return abs(best2 - x) <= abs(best1 - x) ? best2 : best1;
}

Int round_to_int(const Rat& x) {
    Int n = num(x), d = den(x);
    Int twice = 2 * n + (n >= 0 ? d : -d);
    return twice / (2 * d);
}

} // namespace subspacekit
