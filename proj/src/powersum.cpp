#include "subspacekit/powersum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include <json.hpp>

#include "subspacekit/linalg.hpp"

namespace subspacekit {

PowerSum PowerSum::canonicalized(std::vector<PowerSumTerm> raw) {
    std::map<Rat, Rat> by_root; // root -> coefficient sum
    for (auto& t : raw) {
        if (t.root <= 0) fail(Errc::nonpositive_root, "power-sum roots must be positive");
        by_root[t.root] += t.coeff;
    }
    PowerSum u;
    for (auto it = by_root.rbegin(); it != by_root.rend(); ++it)
        if (it->second != 0) u.terms_.push_back({it->second, it->first});
    return u;
}

PowerSum PowerSum::constant(const Rat& c) { return canonicalized({{c, Rat(1)}}); }

PowerSum PowerSum::single(const Rat& coeff, const Rat& root) {
    return canonicalized({{coeff, root}});
}

const PowerSumTerm& PowerSum::leading() const {
    if (terms_.empty()) fail(Errc::precondition_failed, "zero power sum has no leading term");
    return terms_.front();
}

const PowerSumTerm& PowerSum::trailing() const {
    if (terms_.empty()) fail(Errc::precondition_failed, "zero power sum has no trailing term");
    return terms_.back();
}

Rat PowerSum::eval(const Int& n) const {
    Rat value(0);
    for (const auto& t : terms_) value += t.coeff * pow_rat(t.root, n);
    return value;
}

PowerSum operator+(const PowerSum& u, const PowerSum& v) {
    std::vector<PowerSumTerm> raw = u.terms_;
    raw.insert(raw.end(), v.terms_.begin(), v.terms_.end());
    return PowerSum::canonicalized(std::move(raw));
}

PowerSum operator-(const PowerSum& u, const PowerSum& v) { return u + Rat(-1) * v; }

PowerSum operator*(const PowerSum& u, const PowerSum& v) {
    std::vector<PowerSumTerm> raw;
    raw.reserve(u.terms_.size() * v.terms_.size());
    for (const auto& a : u.terms_)
        for (const auto& b : v.terms_) raw.push_back({a.coeff * b.coeff, a.root * b.root});
    return PowerSum::canonicalized(std::move(raw));
}

PowerSum operator*(const Rat& c, const PowerSum& u) {
    std::vector<PowerSumTerm> raw;
    raw.reserve(u.terms_.size());
    for (const auto& t : u.terms_) raw.push_back({c * t.coeff, t.root});
    return PowerSum::canonicalized(std::move(raw));
}

PowerSum PowerSum::pow(unsigned q) const {
    PowerSum result = PowerSum::constant(Rat(1));
    PowerSum base = *this;
    while (q > 0) {
        if (q & 1u) result = result * base;
        base = base * base;
        q >>= 1u;
    }
    return result;
}

PowerSum PowerSum::progression(const Int& q, const Int& r) const {
    if (q <= 0) fail(Errc::precondition_failed, "progression needs Q >= 1");
    std::vector<PowerSumTerm> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) raw.push_back({t.coeff * pow_rat(t.root, r), pow_rat(t.root, q)});
    return canonicalized(std::move(raw));
}

PowerSum PowerSum::from_json_text(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::vector<PowerSumTerm> raw;
    for (const auto& term : j.at("terms")) {
        Rat coeff = parse_rational(term.at("coeff").get<std::string>());
        Rat root = parse_rational(term.at("root").get<std::string>());
        raw.push_back({coeff, root});
    }
    return canonicalized(std::move(raw));
}

std::string PowerSum::to_json_text() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : terms_)
        terms.push_back({{"coeff", to_string(t.coeff)}, {"root", to_string(t.root)}});
    nlohmann::json j;
    j["terms"] = terms;
    return j.dump();
}

std::string PowerSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Rat coeff = t.coeff;
        if (i == 0) {
            if (coeff < 0) {
                out += "-";
                coeff = -coeff;
            }
        } else {
            out += coeff < 0 ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        }
        if (t.root == 1) {
            out += to_string(coeff);
        } else {
            if (coeff != 1) out += to_string(coeff) + "*";
            std::string root = to_string(t.root);
            if (root.find('/') != std::string::npos) root = "(" + root + ")";
            out += root + "^n";
        }
    }
    return out;
}

std::optional<PowerSum> qth_root(const PowerSum& u, unsigned q, const QthRootOptions& opts) {
    if (q < 2) fail(Errc::precondition_failed, "qth_root needs q >= 2");
    if (u.is_zero()) fail(Errc::precondition_failed, "qth_root of the zero power sum");

    const PowerSumTerm& lead = u.leading();
    auto lead_root = exact_qth_root(lead.root, q);
    if (!lead_root)
        fail(Errc::irrational_obstruction,
             "leading root " + to_string(lead.root) + " has no rational " + std::to_string(q) +
                 "-th root");
    auto lead_coeff = exact_qth_root(lead.coeff, q);
    if (!lead_coeff)
        fail(Errc::irrational_obstruction,
             "leading coefficient " + to_string(lead.coeff) + " has no rational " +
                 std::to_string(q) + "-th root");

    // any rational root of u must end at (trailing root of u)^(1/q)
    const Rat smallest_allowed_q = u.trailing().root;

    PowerSum v = PowerSum::single(*lead_coeff, *lead_root);
    const Rat top_root_power = pow_rat(*lead_root, Int(q) - 1);   // a_1^(q-1)
    const Rat top_coeff_power = q * pow_rat(*lead_coeff, Int(q) - 1); // q c_1^(q-1)

    PowerSum residual = u - v.pow(q);
    int steps = 0;
    while (!residual.is_zero()) {
        if (++steps > opts.step_limit)
            fail(Errc::step_limit, "qth_root exceeded " + std::to_string(opts.step_limit) +
                                       " peeling steps");
        const PowerSumTerm& top = residual.leading();
        Rat next_root = top.root / top_root_power;
        Rat next_coeff = top.coeff / top_coeff_power;
        if (next_root <= 0 || next_root >= v.trailing().root) return std::nullopt;
        if (pow_rat(next_root, Int(q)) < smallest_allowed_q) return std::nullopt;
        v = v + PowerSum::single(next_coeff, next_root);
        residual = u - v.pow(q);
    }
    if (!(v.pow(q) == u)) return std::nullopt; // re-expansion is the contract
    return v;
}

namespace {

// u(n) = a^(n+shift) * v(n)^q with rational a^(1/q): try candidate prefactors
// built from root quotients and recombine. Subsumed by the direct peeling
// whenever a rational q-th root exists at the top, but kept as an explicit
// second route.
std::optional<PowerSum> prefactor_root(const PowerSum& u, unsigned q, const QthRootOptions& opts) {
    std::set<Rat> candidates;
    for (const auto& s : u.terms()) {
        candidates.insert(s.root);
        for (const auto& t : u.terms())
            if (s.root != t.root && s.root > t.root) candidates.insert(s.root / t.root);
    }
    for (const Rat& a : candidates) {
        auto alpha = exact_qth_root(a, q);
        if (!alpha || *alpha <= 0) continue;
        for (unsigned shift = 0; shift < q; ++shift) {
            // peel off a^(n+shift)
            std::vector<PowerSumTerm> raw;
            Rat ashift = pow_rat(a, Int(shift));
            for (const auto& t : u.terms()) raw.push_back({t.coeff / ashift, t.root / a});
            PowerSum reduced = PowerSum::canonicalized(std::move(raw));
            std::optional<PowerSum> v;
            try {
                v = qth_root(reduced, q, opts);
            } catch (const Error&) {
                continue;
            }
            if (!v) continue;
            // w(n) = alpha^(n+shift) v(n)
            std::vector<PowerSumTerm> wraw;
            Rat alpha_shift = pow_rat(*alpha, Int(shift));
            for (const auto& t : v->terms()) wraw.push_back({t.coeff * alpha_shift, t.root * *alpha});
            PowerSum w = PowerSum::canonicalized(std::move(wraw));
            if (w.pow(q) == u) return w;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<PisotDecomposition> pisot_decompose(const PowerSum& u, unsigned q,
                                                  const PisotOptions& opts) {
    if (q < 2) fail(Errc::precondition_failed, "pisot_decompose needs q >= 2");
    if (u.is_zero()) fail(Errc::precondition_failed, "pisot_decompose of the zero power sum");
    for (unsigned mult : opts.multipliers) {
        Int big_q = Int(mult) * q;
        for (Int r = 0; r < big_q; ++r) {
            PowerSum prog = u.progression(big_q, r);
            std::optional<PowerSum> w;
            try {
                w = qth_root(prog, q, opts.root);
            } catch (const Error&) {
                w = std::nullopt;
            }
            if (!w) w = prefactor_root(prog, q, opts.root);
            if (w) return PisotDecomposition{big_q, r, *w};
        }
    }
    return std::nullopt;
}

bool roots_multiplicatively_independent(const PowerSum& u, const Int& factor_bound) {
    if (u.is_zero()) return false;
    std::set<Int> primes;
    std::vector<std::map<Int, Int>> exponents;
    for (const auto& t : u.terms()) {
        std::map<Int, Int> vec;
        for (const auto& [p, e] : factorize(num(t.root), factor_bound).factors) {
            vec[p] += e;
            primes.insert(p);
        }
        for (const auto& [p, e] : factorize(den(t.root), factor_bound).factors) {
            vec[p] -= e;
            primes.insert(p);
        }
        exponents.push_back(std::move(vec));
    }
    linalg::Mat m;
    for (const auto& vec : exponents) {
        linalg::Vec row;
        for (const Int& p : primes) {
            auto it = vec.find(p);
            row.push_back(it == vec.end() ? Rat(0) : Rat(it->second));
        }
        if (row.empty()) row.push_back(Rat(0)); // all roots are 1
        m.push_back(std::move(row));
    }
    return linalg::rank(m) == u.term_count();
}

UhsVerdict is_universal_hilbert_candidate(const PowerSum& u, const Int& factor_bound) {
    if (u.term_count() < 2) return {false, "fewer than two terms"};
    if (!roots_multiplicatively_independent(u, factor_bound))
        return {false, "roots are multiplicatively dependent"};
    return {true, "two or more terms with multiplicatively independent roots"};
}

GaussianRational GaussianRational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(Errc::usage_error, "empty Gaussian rational");

    auto parse_part = [](const std::string& part, bool imaginary) -> Rat {
        if (!imaginary) return parse_rational(part);
        std::string body = part.substr(0, part.size() - 1); // strip the 'i'
        if (body.empty() || body == "+") return Rat(1);
        if (body == "-") return Rat(-1);
        if (body.back() == '*') body.pop_back();
        return parse_rational(body);
    };

    // split at the last top-level +/- (not the leading sign)
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*') {
            split = i;
            break;
        }
    }
    GaussianRational g;
    if (s.back() == 'i') {
        if (split == std::string::npos) {
            g.re = Rat(0);
            g.im = parse_part(s, true);
        } else {
            g.re = parse_rational(s.substr(0, split));
            std::string imag = s.substr(split);
            g.im = parse_part(imag, true);
        }
    } else {
        g.re = parse_rational(s);
        g.im = Rat(0);
    }
    return g;
}

std::string GaussianRational::str() const {
    if (im == 0) return to_string(re);
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = to_string(im) + "i";
    if (re == 0) return imag;
    return to_string(re) + (im > 0 ? "+" : "") + imag;
}

DominanceVerdict has_dominant_root(const std::vector<GaussianRational>& roots,
                                   Dominance direction) {
    if (roots.empty()) fail(Errc::precondition_failed, "dominance needs at least one root");
    for (const auto& r : roots)
        if (r.is_zero()) fail(Errc::precondition_failed, "roots must be nonzero");
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) fail(Errc::precondition_failed, "roots must be distinct");

    std::size_t best = 0;
    for (std::size_t i = 1; i < roots.size(); ++i) {
        bool better = direction == Dominance::upper ? roots[i].norm2() > roots[best].norm2()
                                                    : roots[i].norm2() < roots[best].norm2();
        if (better) best = i;
    }
    std::size_t ties = 0;
    for (const auto& r : roots)
        if (r.norm2() == roots[best].norm2()) ++ties;
    if (ties > 1) return {false, std::nullopt};
    return {true, roots[best]};
}

} // namespace subspacekit
