#include "subspacekit/heights.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace subspacekit {

PlaceSet::PlaceSet(std::vector<Place> places) : places_(std::move(places)) {
    std::sort(places_.begin(), places_.end());
    for (std::size_t i = 1; i < places_.size(); ++i)
        if (places_[i] == places_[i - 1])
            fail(Errc::precondition_failed, "duplicate place " + places_[i].str());
    if (places_.empty() || !places_.back().is_infinite())
        fail(Errc::bad_place_set, "place set must contain the infinite place");
}

PlaceSet PlaceSet::with_infinity(const std::vector<Int>& primes, const Int& factor_bound) {
    std::vector<Place> ps;
    ps.reserve(primes.size() + 1);
    for (const Int& p : primes) ps.push_back(Place::finite(p, factor_bound));
    ps.push_back(Place::infinite());
    return PlaceSet(std::move(ps));
}

PlaceSet PlaceSet::parse(const std::string& text, const Int& factor_bound) {
    std::vector<Place> ps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) ps.push_back(Place::parse(item, factor_bound));
    }
    return PlaceSet(std::move(ps));
}

bool PlaceSet::contains(const Place& p) const {
    return std::find(places_.begin(), places_.end(), p) != places_.end();
}

bool PlaceSet::contains_prime(const Int& p) const {
    for (const Place& q : places_)
        if (!q.is_infinite() && q.prime() == p) return true;
    return false;
}

std::vector<Int> PlaceSet::finite_primes() const {
    std::vector<Int> out;
    for (const Place& q : places_)
        if (!q.is_infinite()) out.push_back(q.prime());
    return out;
}

std::string PlaceSet::str() const {
    std::string out;
    for (const Place& p : places_) {
        if (!out.empty()) out += ",";
        out += p.str();
    }
    return out;
}

Int valuation(const Rat& a, const Int& p) {
    if (a == 0) fail(Errc::zero_input, "valuation of 0");
    return int_valuation(num(a), p) - int_valuation(den(a), p);
}

Rat norm_at(const Rat& a, const Place& place) {
    if (a == 0) return Rat(0);
    if (place.is_infinite()) return Rat(abs(a));
    return pow_rat(Rat(place.prime()), -valuation(a, place.prime()));
}

Int height_rational(const Rat& xi) { return std::max<Int>(Int(abs(num(xi))), den(xi)); }

std::vector<Int> support_primes(const Rat& a, const Int& factor_bound) {
    if (a == 0) fail(Errc::zero_input, "support of 0");
    std::set<Int> primes;
    for (const auto& [p, e] : factorize(num(a), factor_bound).factors) primes.insert(p);
    for (const auto& [p, e] : factorize(den(a), factor_bound).factors) primes.insert(p);
    return {primes.begin(), primes.end()};
}

Rat height_vector(const RationalVector& x, const Int& factor_bound) {
    bool all_zero = true;
    for (const Rat& c : x)
        if (c != 0) all_zero = false;
    if (x.empty() || all_zero) fail(Errc::zero_vector, "height of the zero vector");

    std::set<Int> primes;
    Rat sup(0);
    for (const Rat& c : x) {
        if (c == 0) continue;
        for (const Int& p : support_primes(c, factor_bound)) primes.insert(p);
        sup = std::max<Rat>(sup, Rat(abs(c)));
    }
    Rat h = sup;
    for (const Int& p : primes) {
        // ||x||_p = p^(-min_i v_p(x_i)) over nonzero coordinates
        bool first = true;
        Int minv = 0;
        for (const Rat& c : x) {
            if (c == 0) continue;
            Int v = valuation(c, p);
            if (first || v < minv) minv = v;
            first = false;
        }
        h *= pow_rat(Rat(p), -minv);
    }
    return h;
}

bool is_s_integer(const Rat& xi, const PlaceSet& s, const Int& factor_bound) {
    if (xi == 0) return true;
    for (const auto& [p, e] : factorize(den(xi), factor_bound).factors)
        if (!s.contains_prime(p)) return false;
    return true;
}

bool is_s_unit(const Rat& xi, const PlaceSet& s, const Int& factor_bound) {
    if (xi == 0) return false;
    return is_s_integer(xi, s, factor_bound) && is_s_integer(1 / xi, s, factor_bound);
}

Rat product_formula_check(const Rat& a, const Int& factor_bound) {
    if (a == 0) fail(Errc::zero_input, "product formula needs a nonzero input");
    Rat prod = Rat(abs(a));
    for (const Int& p : support_primes(a, factor_bound)) prod *= pow_rat(Rat(p), -valuation(a, p));
    return prod;
}

} // namespace subspacekit
