#include "subspacekit/surface.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace subspacekit {

IntersectionMatrix::IntersectionMatrix(std::vector<std::vector<Rat>> entries)
    : entries_(std::move(entries)) {
    const std::size_t r = entries_.size();
    if (r < 1) fail(Errc::precondition_failed, "intersection matrix needs r >= 1");
    for (const auto& row : entries_)
        if (row.size() != r) fail(Errc::dimension_mismatch, "intersection matrix must be square");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (entries_[i][j] != entries_[j][i])
                fail(Errc::precondition_failed, "intersection matrix must be symmetric");
}

bool IntersectionMatrix::all_entries_positive() const {
    for (const auto& row : entries_)
        for (const Rat& e : row)
            if (e <= 0) return false;
    return true;
}

std::pair<IntersectionMatrix, bool> IntersectionMatrix::from_json_text(
    const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    auto entry_value = [](const nlohmann::json& e) -> Rat {
        if (e.is_string()) return parse_rational(e.get<std::string>());
        if (e.is_number_integer()) return Rat(e.get<long long>());
        fail(Errc::usage_error, "matrix entries must be integers or \"p/q\" strings");
    };
    std::vector<std::vector<Rat>> entries;
    for (const auto& row : j.at("matrix")) {
        std::vector<Rat> out;
        for (const auto& e : row) out.push_back(entry_value(e));
        entries.push_back(std::move(out));
    }
    if (j.contains("r") && j.at("r").get<std::size_t>() != entries.size())
        fail(Errc::dimension_mismatch, "declared r does not match the matrix");
    bool ample = j.value("ample", false);
    return {IntersectionMatrix(std::move(entries)), ample};
}

std::string IntersectionMatrix::to_json_text(bool ample) const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : entries_) {
        nlohmann::json r = nlohmann::json::array();
        for (const Rat& e : row) {
            if (den(e) == 1)
                r.push_back(num(e).convert_to<long long>());
            else
                r.push_back(to_string(e));
        }
        rows.push_back(r);
    }
    nlohmann::json j;
    j["r"] = entries_.size();
    j["matrix"] = rows;
    j["ample"] = ample;
    return j.dump(2);
}

void check_weights(const IntersectionMatrix& m, const WeightVector& a) {
    if (a.size() != m.size()) fail(Errc::dimension_mismatch, "weight count must match r");
    for (const Int& w : a)
        if (w < 1) fail(Errc::positivity_violation, "weights must be positive integers");
}

Rat quadratic_form(const IntersectionMatrix& m, const std::vector<Rat>& x) {
    if (x.size() != m.size()) fail(Errc::dimension_mismatch, "vector length must match r");
    Rat q(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) q += x[i] * m.at(i, j) * x[j];
    return q;
}

Rat linear_form(const IntersectionMatrix& m, const std::vector<Rat>& x, std::size_t i) {
    if (x.size() != m.size()) fail(Errc::dimension_mismatch, "vector length must match r");
    if (i >= m.size()) fail(Errc::index_out_of_range, "index exceeds r");
    Rat l(0);
    for (std::size_t j = 0; j < x.size(); ++j) l += m.at(i, j) * x[j];
    return l;
}

namespace {

std::vector<Rat> to_rational(const WeightVector& a) {
    std::vector<Rat> x;
    x.reserve(a.size());
    for (const Int& w : a) x.emplace_back(w);
    return x;
}

} // namespace

Rat d_squared(const IntersectionMatrix& m, const WeightVector& a) {
    return quadratic_form(m, to_rational(a));
}

Rat d_dot(const IntersectionMatrix& m, const WeightVector& a, std::size_t i) {
    return linear_form(m, to_rational(a), i);
}

QuadExt gamma_small(const IntersectionMatrix& m, const WeightVector& a, std::size_t i) {
    if (i >= m.size()) fail(Errc::index_out_of_range, "index exceeds r");
    Rat c2 = m.at(i, i);
    if (c2 <= 0)
        fail(Errc::degenerate_self_intersection, "self-intersection C_i^2 must be positive");
    Rat d2 = d_squared(m, a);
    Rat dc = d_dot(m, a, i);
    Rat disc = dc * dc - d2 * c2;
    if (disc < 0)
        fail(Errc::hodge_violation,
             "negative discriminant: (D.C)^2 < D^2 C^2 is impossible on a surface");
    return (QuadExt(dc) - QuadExt::sqrt_of(disc)) / c2;
}

QuadExt gamma_large(const IntersectionMatrix& m, const WeightVector& a, std::size_t i) {
    if (i >= m.size()) fail(Errc::index_out_of_range, "index exceeds r");
    Rat c2 = m.at(i, i);
    if (c2 <= 0)
        fail(Errc::degenerate_self_intersection, "self-intersection C_i^2 must be positive");
    Rat d2 = d_squared(m, a);
    Rat dc = d_dot(m, a, i);
    Rat disc = dc * dc - d2 * c2;
    if (disc < 0)
        fail(Errc::hodge_violation,
             "negative discriminant: (D.C)^2 < D^2 C^2 is impossible on a surface");
    return (QuadExt(dc) + QuadExt::sqrt_of(disc)) / c2;
}

QuadExt f_theta_raw(const Rat& d2, const Rat& dc, const Rat& c2, const QuadExt& theta) {
    if (d2 == 0) fail(Errc::division_by_zero, "F(theta) needs D^2 != 0");
    QuadExt t2 = theta * theta;
    return theta * (QuadExt(Rat(1)) - theta * Rat(dc / d2) + t2 * Rat(c2 / (3 * d2)));
}

QuadExt f_theta(const IntersectionMatrix& m, const WeightVector& a, std::size_t i,
                const QuadExt& theta) {
    if (i >= m.size()) fail(Errc::index_out_of_range, "index exceeds r");
    return f_theta_raw(d_squared(m, a), d_dot(m, a, i), m.at(i, i), theta);
}

std::vector<bool> cz_check(const IntersectionMatrix& m, const WeightVector& a) {
    check_weights(m, a);
    std::vector<bool> verdicts;
    for (std::size_t i = 0; i < m.size(); ++i) {
        QuadExt g = gamma_small(m, a, i);
        verdicts.push_back(f_theta(m, a, i, g) > QuadExt(Rat(a[i])));
    }
    return verdicts;
}

std::vector<bool> autissier_check(const IntersectionMatrix& m, const WeightVector& a) {
    check_weights(m, a);
    Rat d2 = d_squared(m, a);
    std::vector<bool> verdicts;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rat dc = d_dot(m, a, i);
        if (dc <= 0) fail(Errc::nonpositive_pairing, "D.C_i must be positive");
        Rat lhs = d2 / dc * (1 + d2 * m.at(i, i) / (6 * dc * dc));
        verdicts.push_back(lhs > 4 * Rat(a[i]));
    }
    return verdicts;
}

bool weight_certificate(const IntersectionMatrix& m, const WeightVector& a, const Rat& eps) {
    check_weights(m, a);
    const std::size_t r = m.size();
    std::vector<Rat> x = to_rational(a);
    Rat q = quadratic_form(m, x);
    for (std::size_t i = 0; i < r; ++i) {
        Rat side = Rat(r) * x[i] * linear_form(m, x, i);
        if (!((1 - eps) * q < side && side < (1 + eps) * q)) return false;
    }
    return true;
}

WeightVector fixed_point_weights(const IntersectionMatrix& m, const Rat& eps,
                                 const FixedPointOptions& opts) {
    const std::size_t r = m.size();
    for (const auto& row : m.entries())
        for (const Rat& e : row)
            if (e <= 0) fail(Errc::positivity_violation, "matrix entries must be positive");
    if (!(eps > 0 && eps < 1)) fail(Errc::precondition_failed, "need 0 < eps < 1");

    auto imbalance = [&](const std::vector<Rat>& x) {
        Rat q = quadratic_form(m, x);
        Rat worst(0);
        for (std::size_t i = 0; i < r; ++i) {
            Rat dev = abs(Rat(r) * x[i] * linear_form(m, x, i) / q - 1);
            worst = std::max(worst, dev);
        }
        return worst;
    };

    auto try_round = [&](const std::vector<Rat>& x) -> std::optional<WeightVector> {
        for (Int scale = 64; scale <= (Int(1) << 48); scale *= 64) {
            WeightVector a;
            a.reserve(r);
            bool positive = true;
            for (const Rat& xi : x) {
                Int w = round_to_int(xi * scale);
                if (w < 1) positive = false;
                a.push_back(w);
            }
            if (!positive) continue;
            Int g = a[0];
            for (const Int& w : a) g = gcd(g, w);
            for (Int& w : a) w /= g;
            if (weight_certificate(m, a, eps)) return a;
        }
        return std::nullopt;
    };

    std::vector<Rat> x(r, Rat(1, r));
    Rat target = eps / 2;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (imbalance(x) < target) {
            if (auto a = try_round(x)) return *a;
            target /= 2; // rounding ate the slack; converge further
        }
        // damped step toward (1/L_1, ..., 1/L_r) normalized
        std::vector<Rat> y(r);
        Rat sum(0);
        for (std::size_t i = 0; i < r; ++i) {
            y[i] = 1 / linear_form(m, x, i);
            sum += y[i];
        }
        Rat xsum(0);
        for (std::size_t i = 0; i < r; ++i) {
            x[i] = (x[i] + y[i] / sum) / 2;
            x[i] = limit_denominator(x[i], opts.rounding_denominator);
            if (x[i] <= 0) fail(Errc::no_convergence, "iterate left the open simplex");
            xsum += x[i];
        }
        for (std::size_t i = 0; i < r; ++i) x[i] /= xsum;
    }
    fail(Errc::no_convergence, "no certified weights within the iteration budget");
}

WeightVector levin_check(const IntersectionMatrix& m, bool ampleness_asserted,
                         const LevinOptions& opts) {
    if (!ampleness_asserted)
        fail(Errc::screen_failed, "caller did not assert ampleness of the boundary divisors");
    if (m.size() < 4) fail(Errc::screen_failed, "need r >= 4 boundary divisors");
    if (!m.all_entries_positive())
        fail(Errc::screen_failed,
             "nonpositive pairing or self-intersection: divisors cannot be properly "
             "intersecting and ample");

    Rat eps(1, 4);
    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
        WeightVector a = fixed_point_weights(m, eps, opts.fixed_point);
        auto verdicts = autissier_check(m, a);
        if (std::all_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; })) return a;

        // tighten below the uniform positivity margin of the correction term
        Rat d2 = d_squared(m, a);
        Rat tau;
        bool first = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            Rat dc = d_dot(m, a, i);
            Rat term = d2 * m.at(i, i) / (6 * dc * dc);
            if (first || term < tau) tau = term;
            first = false;
        }
        eps = std::min<Rat>(Rat(eps / 2), tau);
    }
    fail(Errc::no_convergence, "no certified weights after tolerance retries");
}

CurveBudget curve_budget(long long r, long long g, long long n) {
    if (r < 1 || g < 0 || n < 1)
        fail(Errc::precondition_failed, "need r >= 1, g >= 0, n >= 1");
    if (!(n * r > 2 * g - 2))
        fail(Errc::out_of_riemann_roch_range, "need n r > 2g - 2");

    CurveBudget b;
    b.points_at_infinity = r;
    b.genus = g;
    b.multiplier = n;
    b.ell = Int(n) * r - g + 1;
    b.order_sum_bound = Rat(b.ell) * (Rat(b.ell) - 2 * n - 1) / 2;

    // A > 0 iff ell > 2n + 1 iff n (r - 2) > g
    if (r >= 3) {
        long long candidate = g / (r - 2) + 1;
        while (!(candidate * r > 2 * g - 2)) ++candidate;
        b.minimal_positive_n = candidate;
    }
    return b;
}

ThetaBound etheta_lower_bound(const Rat& d2, const Rat& dc, const Rat& c2, const Int& n,
                              const QuadExt& theta) {
    if (c2 <= 0)
        fail(Errc::degenerate_self_intersection, "self-intersection C^2 must be positive");
    Rat disc = dc * dc - d2 * c2;
    if (disc < 0)
        fail(Errc::hodge_violation,
             "negative discriminant: (D.C)^2 < D^2 C^2 is impossible on a surface");
    QuadExt gamma_prime = (QuadExt(dc) + QuadExt::sqrt_of(disc)) / c2;
    if (theta.sign() < 0 || theta > gamma_prime)
        fail(Errc::theta_out_of_range, "theta must lie in [0, gamma']");

    QuadExt t2 = theta * theta;
    QuadExt t3 = t2 * theta;
    QuadExt coeff = theta * Rat(d2 / 2) - t2 * Rat(dc / 2) + t3 * Rat(c2 / 6);
    Rat n3 = Rat(n) * Rat(n) * Rat(n);

    ThetaBound out;
    out.cubic_term = coeff * n3;
    out.f_theta_value = f_theta_raw(d2, dc, c2, theta);
    return out;
}

} // namespace subspacekit
