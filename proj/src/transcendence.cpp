#include "subspacekit/transcendence.hpp"

#include <algorithm>
#include <set>

#include "subspacekit/linalg.hpp"

namespace subspacekit {

std::vector<int> AbcbPattern::prefix_digits() const {
    std::vector<int> out;
    out.reserve(agreement());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word digits_of_rational(const Rat& xi, int base, std::size_t count) {
    if (base < 2) fail(Errc::precondition_failed, "base must be >= 2");
    if (!(xi > 0 && xi < 1)) fail(Errc::out_of_range, "digit expansion needs 0 < xi < 1");
    std::vector<int> digits;
    digits.reserve(count);
    Int n = num(xi), d = den(xi);
    for (std::size_t i = 0; i < count; ++i) {
        n *= base;
        Int q = n / d;
        digits.push_back(q.convert_to<int>());
        n -= q * d;
    }
    return Word(Alphabet::digits(base), std::move(digits));
}

namespace {

int digit_base_of(const Word& w) {
    // the word must live over the 0..base-1 digit alphabet
    int base = static_cast<int>(w.alphabet().size());
    if (w.alphabet() == Alphabet::digits(base)) return base;
    fail(Errc::invalid_digit, "word is not over a digit alphabet");
}

Int digits_value(const std::vector<int>& digits, int base) {
    Int v = 0;
    for (int d : digits) v = v * base + d;
    return v;
}

} // namespace

std::optional<AbcbPattern> extract_abcb(const Word& w, const Rat& eps) {
    if (eps <= 0) fail(Errc::precondition_failed, "eps must be positive");
    const int base = digit_base_of(w);
    const std::size_t n = w.length();

    // minimal admissible |B|: the least integer >= eps * n, at least 1
    Rat target = eps * Rat(n);
    Int lo = num(target) / den(target);
    if (Rat(lo) < target) lo += 1;
    std::size_t lmin = std::max<std::size_t>(1, lo.convert_to<std::size_t>());
    if (2 * lmin > n) return std::nullopt;

    // lce[i][j]: longest common extension of the suffixes at i and j
    std::vector<std::vector<std::size_t>> lce(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = n; j-- > 0;)
            if (w.symbol(i) == w.symbol(j)) lce[i][j] = lce[i + 1][j + 1] + 1;

    for (std::size_t lb = n / 2; lb >= lmin; --lb) {
        for (std::size_t r = 0; r + 2 * lb <= n; ++r) {
            for (std::size_t lc = 0; r + 2 * lb + lc <= n; ++lc) {
                const std::size_t s = lb + lc;
                if (lce[r][r + s] >= lb) {
                    AbcbPattern p;
                    p.base = base;
                    p.a.assign(w.symbols().begin(), w.symbols().begin() + r);
                    p.b.assign(w.symbols().begin() + r, w.symbols().begin() + r + lb);
                    p.c.assign(w.symbols().begin() + r + lb, w.symbols().begin() + r + s);
                    return p;
                }
            }
        }
    }
    return std::nullopt;
}

PeriodicValue periodic_value(const AbcbPattern& p) {
    const int b = p.base;
    const std::size_t r = p.r(), s = p.period();
    if (p.block() < 1 || s < 1) fail(Errc::precondition_failed, "pattern needs a nonempty B");
    std::vector<int> bc(p.b);
    bc.insert(bc.end(), p.c.begin(), p.c.end());
    if (std::all_of(bc.begin(), bc.end(), [&](int d) { return d == b - 1; }))
        fail(Errc::degenerate_pattern, "period consisting of the digit base-1 only");

    Int bs = pow(Int(b), static_cast<unsigned>(s));
    Int br = pow(Int(b), static_cast<unsigned>(r));
    Int m = digits_value(p.a, b) * (bs - 1) + digits_value(bc, b);
    Rat xi = Rat(m, br * (bs - 1));
    return PeriodicValue{xi, m};
}

GapReport approximation_gap(const Rat& alpha, const AbcbPattern& p) {
    const std::size_t agree = p.agreement();
    Word expansion = digits_of_rational(alpha, p.base, agree);
    std::vector<int> expected = p.prefix_digits();
    for (std::size_t i = 0; i < agree; ++i)
        if (expansion.symbol(i) != expected[i])
            fail(Errc::pattern_mismatch,
                 "digit expansion of alpha does not begin with the pattern prefix");

    PeriodicValue pv = periodic_value(p);
    GapReport g;
    g.gap = abs(alpha - pv.xi);
    g.bound = pow_rat(Rat(p.base), -Int(agree));
    g.holds = g.gap <= g.bound;
    return g;
}

SubspaceDatum subspace_product(const Rat& alpha, const AbcbPattern& p, const PlaceSet& s,
                               std::size_t prefix_length) {
    const Int b(p.base);
    for (const auto& [q, e] : factorize(b).factors)
        if (!s.contains_prime(q))
            fail(Errc::bad_place_set, "place set must contain every prime dividing the base");

    PeriodicValue pv = periodic_value(p);
    Int brs = pow(b, static_cast<unsigned>(p.r() + p.period()));
    Int br = pow(b, static_cast<unsigned>(p.r()));

    SubspaceDatum d;
    d.prefix_length = prefix_length;
    d.x1 = brs;
    d.x2 = br;
    d.x3 = pv.m;
    d.height_bound = brs;

    Rat linear_form = abs(Rat(brs) * alpha - Rat(br) * alpha - Rat(pv.m));
    Rat finite_part(1);
    if (pv.m == 0) {
        d.m_zero_convention = true; // finite-place factors of a vanishing M count as 1
    } else {
        for (const Int& q : s.finite_primes())
            finite_part *= pow_rat(Rat(q), -int_valuation(pv.m, q));
    }
    d.product_value = linear_form * finite_part;
    return d;
}

std::optional<PlaneRelation> detect_common_plane(const std::vector<SubspaceDatum>& data) {
    if (data.size() < 3) fail(Errc::precondition_failed, "plane detection needs >= 3 data points");

    // rows ordered to match the relation lambda*b^r + mu*b^{r+s} + nu*M = 0
    linalg::Mat rows;
    for (const SubspaceDatum& d : data) {
        linalg::Vec row{Rat(d.x2), Rat(d.x1), Rat(d.x3)};
        if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);
    }
    std::vector<linalg::Vec> kernel = linalg::nullspace(rows);
    if (kernel.empty()) return std::nullopt;

    linalg::Vec chosen = kernel.front();
    for (const auto& v : kernel)
        if (v[2] != 0) {
            chosen = v;
            break;
        }
    PlaneRelation plane;
    if (chosen[2] != 0) {
        plane.lambda = chosen[0] / chosen[2];
        plane.mu = chosen[1] / chosen[2];
        plane.nu = Rat(1);
        plane.alpha_hat = -plane.mu;
    } else {
        // normalize by the first nonzero coefficient
        Rat lead = chosen[0] != 0 ? chosen[0] : chosen[1];
        plane.lambda = chosen[0] / lead;
        plane.mu = chosen[1] / lead;
        plane.nu = Rat(0);
    }
    return plane;
}

std::pair<std::size_t, std::size_t> expansion_preperiod_and_period(const Rat& alpha, int base) {
    if (!(alpha > 0 && alpha < 1)) fail(Errc::out_of_range, "expansion needs 0 < alpha < 1");
    Int d = den(alpha);
    std::size_t preperiod = 0;
    for (const auto& [p, e] : factorize(Int(base)).factors) {
        Int vd = int_valuation(d, p);
        // smallest r with r * v_p(base) >= v_p(denominator)
        Int r = (vd + e - 1) / e;
        preperiod = std::max(preperiod, r.convert_to<std::size_t>());
        while (d % p == 0) d /= p;
    }
    std::size_t period = 1;
    if (d > 1) {
        Int power = Int(base) % d;
        std::size_t k = 1;
        while (power != 1) {
            power = power * base % d;
            ++k;
        }
        period = k;
    }
    return {preperiod, period};
}

PipelineResult run_pipeline_at(const Rat& alpha, int base, const std::vector<std::size_t>& lengths,
                               const Rat& eps) {
    std::vector<Int> base_primes;
    for (const auto& [p, e] : factorize(Int(base)).factors) base_primes.push_back(p);
    PlaceSet s = PlaceSet::with_infinity(base_primes);

    PipelineResult result;
    for (std::size_t n : lengths) {
        Word w = digits_of_rational(alpha, base, n);
        auto pattern = extract_abcb(w, eps);
        if (!pattern) continue;
        PipelineRow row;
        row.prefix_length = n;
        row.pattern = *pattern;
        PeriodicValue pv = periodic_value(*pattern);
        row.xi = pv.xi;
        row.m = pv.m;
        row.gap = approximation_gap(alpha, *pattern);
        row.datum = subspace_product(alpha, *pattern, s, n);
        result.rows.push_back(std::move(row));
    }
    if (result.rows.size() >= 3) {
        std::vector<SubspaceDatum> data;
        for (const auto& r : result.rows) data.push_back(r.datum);
        result.plane = detect_common_plane(data);
    }
    return result;
}

PipelineResult run_periodic_pipeline(const Rat& alpha, int base, std::size_t points) {
    if (points < 3) fail(Errc::precondition_failed, "pipeline needs at least 3 data points");
    auto [preperiod, period] = expansion_preperiod_and_period(alpha, base);

    // Prefix lengths long enough that any maximal-|B| pattern of the prefix
    // reproduces alpha exactly; grow by full periods until the x-vectors show
    // `points` distinct (r, s) pairs.
    const Rat eps(1, 8);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    PipelineResult result;
    std::size_t n = 3 * preperiod + 6 * period;
    for (int attempts = 0; seen.size() < points && attempts < 200; ++attempts, n += 2 * period) {
        PipelineResult one = run_pipeline_at(alpha, base, {n}, eps);
        if (one.rows.empty()) continue;
        const auto& row = one.rows.front();
        auto key = std::make_pair(row.pattern.r(), row.pattern.period());
        if (!seen.insert(key).second) continue;
        result.rows.push_back(row);
    }
    if (result.rows.size() < points)
        fail(Errc::no_convergence, "could not collect enough distinct pattern data");
    std::vector<SubspaceDatum> data;
    for (const auto& r : result.rows) data.push_back(r.datum);
    result.plane = detect_common_plane(data);
    return result;
}

} // namespace subspacekit
