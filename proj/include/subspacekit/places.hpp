#ifndef SUBSPACEKIT_PLACES_HPP
#define SUBSPACEKIT_PLACES_HPP

#include <string>
#include <vector>

#include "subspacekit/numbers.hpp"

namespace subspacekit {

// A place of Q: one finite place per prime, plus the infinite place carrying
// the ordinary absolute value.
class Place {
public:
    static Place infinite() { return Place(Int(0), true); }

    // primality-checked on construction
    static Place finite(const Int& p, const Int& factor_bound = default_factor_bound) {
        if (p < 2 || !is_prime(p, factor_bound))
            fail(Errc::precondition_failed, to_string(p) + " is not prime");
        return Place(p, false);
    }

    static Place parse(const std::string& text, const Int& factor_bound = default_factor_bound) {
        if (text == "inf" || text == "infinity" || text == "oo") return infinite();
        return finite(parse_integer(text), factor_bound);
    }

    bool is_infinite() const { return infinite_; }
    const Int& prime() const {
        if (infinite_) fail(Errc::precondition_failed, "infinite place has no prime");
        return prime_;
    }

    std::string str() const { return infinite_ ? "inf" : to_string(prime_); }

    friend bool operator==(const Place& a, const Place& b) {
        return a.infinite_ == b.infinite_ && a.prime_ == b.prime_;
    }
    // finite places in prime order, infinite place last
    friend bool operator<(const Place& a, const Place& b) {
        if (a.infinite_ != b.infinite_) return !a.infinite_;
        return a.prime_ < b.prime_;
    }

private:
    Place(Int p, bool inf) : prime_(std::move(p)), infinite_(inf) {}
    Int prime_;
    bool infinite_;
};

// A finite set of places that always contains the infinite place.
class PlaceSet {
public:
    explicit PlaceSet(std::vector<Place> places);

    // convenience: the listed primes together with the infinite place
    static PlaceSet with_infinity(const std::vector<Int>& primes,
                                  const Int& factor_bound = default_factor_bound);

    static PlaceSet parse(const std::string& comma_separated,
                          const Int& factor_bound = default_factor_bound);

    bool contains(const Place& p) const;
    bool contains_prime(const Int& p) const;
    const std::vector<Place>& places() const { return places_; }
    std::vector<Int> finite_primes() const;

    std::string str() const;

private:
    std::vector<Place> places_; // sorted, unique, infinite place present
};

} // namespace subspacekit

#endif
