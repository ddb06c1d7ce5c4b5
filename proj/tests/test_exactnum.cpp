#include <doctest.h>

#include <random>

#include "subspacekit/heights.hpp"

using namespace subspacekit;

namespace {

Rat random_nonzero_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> nums(-1000000, 1000000);
    std::uniform_int_distribution<long long> dens(1, 1000000);
    long long n = 0;
    while (n == 0) n = nums(rng);
    return Rat(n, dens(rng));
}

} // namespace

TEST_CASE("valuation on reduced and unreduced inputs") {
    CHECK(valuation(Rat(12), 2) == 2);
    CHECK(valuation(Rat(1, 3), 3) == -1);
    CHECK(valuation(Rat(2006), 59) == 1); // 2006 = 2 * 17 * 59
    CHECK(valuation(Rat(2006), 17) == 1);
    CHECK(valuation(Rat(2006), 2) == 1);
    CHECK_THROWS_AS(valuation(Rat(0), 2), Error);
}

TEST_CASE("norms at finite and infinite places") {
    CHECK(norm_at(Rat(3), Place::finite(3)) == Rat(1, 3));
    CHECK(norm_at(Rat(2006), Place::infinite()) == Rat(2006));
    CHECK(norm_at(Rat(0), Place::finite(5)) == 0);
    CHECK(norm_at(Rat(-7, 2), Place::infinite()) == Rat(7, 2));
    CHECK(norm_at(Rat(12), Place::finite(2)) == Rat(1, 4));
}

TEST_CASE("norm multiplicativity at every place") {
    std::mt19937_64 rng(11);
    std::vector<Place> places{Place::infinite(), Place::finite(2), Place::finite(3),
                              Place::finite(5), Place::finite(7)};
    for (int i = 0; i < 200; ++i) {
        Rat a = random_nonzero_rational(rng);
        Rat b = random_nonzero_rational(rng);
        for (const Place& p : places)
            CHECK(norm_at(a * b, p) == norm_at(a, p) * norm_at(b, p));
    }
}

TEST_CASE("height of a rational") {
    CHECK(height_rational(Rat(3, 2)) == 3);
    CHECK(height_rational(Rat(0)) == 1);
    CHECK(height_rational(Rat(61, 495)) == 495);
    CHECK(height_rational(Rat(-61, 495)) == 495);
}

TEST_CASE("height of a vector") {
    CHECK(height_vector({Rat(4), Rat(6), Rat(10)}) == 5); // coprime representative (2,3,5)
    CHECK(height_vector({Rat(7)}) == 1);
    CHECK(height_vector({Rat(1), Rat(61, 495)}) == Rat(height_rational(Rat(61, 495))));
    CHECK_THROWS_AS(height_vector({Rat(0), Rat(0)}), Error);
}

TEST_CASE("vector height matches the rational height through (1, xi)") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        Rat xi = random_nonzero_rational(rng);
        CHECK(height_vector({Rat(1), xi}) == Rat(height_rational(xi)));
    }
}

TEST_CASE("projective invariance of the vector height") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        RationalVector x{random_nonzero_rational(rng), random_nonzero_rational(rng),
                         random_nonzero_rational(rng)};
        Rat c = random_nonzero_rational(rng);
        RationalVector cx;
        for (const Rat& v : x) cx.push_back(c * v);
        CHECK(height_vector(cx) == height_vector(x));
    }
}

TEST_CASE("coprime integer vectors have height equal to the sup-norm") {
    CHECK(height_vector({Rat(3), Rat(5)}) == 5);
    CHECK(height_vector({Rat(-9), Rat(4), Rat(1)}) == 9);
}

TEST_CASE("S-integer predicate") {
    PlaceSet s = PlaceSet::with_infinity({2, 5});
    CHECK(is_s_integer(Rat(1, 10), s));
    CHECK_FALSE(is_s_integer(Rat(1, 3), s));
    CHECK(is_s_integer(Rat(7), s));
    CHECK(is_s_integer(Rat(0), s));
    CHECK(is_s_unit(Rat(2, 5), s));
    CHECK_FALSE(is_s_unit(Rat(3, 5), s));
    CHECK_FALSE(is_s_unit(Rat(0), s));
}

TEST_CASE("place set requires the infinite place") {
    CHECK_THROWS_AS(PlaceSet({Place::finite(2)}), Error);
    CHECK_THROWS_AS(PlaceSet({Place::infinite(), Place::infinite()}), Error);
    CHECK(PlaceSet::parse("2,5,inf").contains_prime(5));
    CHECK_THROWS_AS(Place::finite(4), Error);
}

TEST_CASE("product formula over the support") {
    CHECK(product_formula_check(Rat(12)) == 1);
    CHECK(product_formula_check(Rat(-61, 495)) == 1);
    CHECK(product_formula_check(Rat(1)) == 1);
    CHECK_THROWS_AS(product_formula_check(Rat(0)), Error);
}

TEST_CASE("product formula and height identity on random rationals") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 300; ++i) {
        Rat a = random_nonzero_rational(rng);
        CHECK(product_formula_check(a) == 1);

        // H(a) = prod max(1,|a|_p) = (prod min(1,|a|_p))^-1 over the support
        Rat up(1), down(1);
        std::vector<Place> places{Place::infinite()};
        for (const Int& p : support_primes(a)) places.push_back(Place::finite(p));
        for (const Place& p : places) {
            Rat n = norm_at(a, p);
            up *= std::max<Rat>(Rat(1), n);
            down *= std::min<Rat>(Rat(1), n);
        }
        CHECK(up == Rat(height_rational(a)));
        CHECK(down == 1 / Rat(height_rational(a)));
    }
}

TEST_CASE("factorization stops at its bound") {
    CHECK_THROWS_AS(factorize(Int("100000980001501"), 1000), Error); // 10000019 * 10000079
    Factorization f = factorize(2006);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].first == 2);
    CHECK(f.factors[1].first == 17);
    CHECK(f.factors[2].first == 59);
}

TEST_CASE("exact integer roots") {
    CHECK(*exact_iroot(Int(64), 2) == 8);
    CHECK(*exact_iroot(Int(-27), 3) == -3);
    CHECK_FALSE(exact_iroot(Int(-4), 2).has_value());
    CHECK_FALSE(exact_iroot(Int(2), 2).has_value());
    CHECK(*exact_qth_root(Rat(4, 9), 2) == Rat(2, 3));
    CHECK_FALSE(exact_qth_root(Rat(1, 2), 2).has_value());
}

TEST_CASE("limit_denominator returns best bounded approximations") {
    CHECK(limit_denominator(Rat(355, 113), 1000) == Rat(355, 113));
    CHECK(limit_denominator(Rat(314159, 100000), 100) == Rat(311, 99));
    CHECK(limit_denominator(Rat(-314159, 100000), 100) == Rat(-311, 99));
    std::mt19937_64 rng(15);
    for (int i = 0; i < 100; ++i) {
        Rat x = random_nonzero_rational(rng);
        Rat r = limit_denominator(x, 50);
        CHECK(den(r) <= 50);
        for (Int q = 1; q <= 50; ++q) {
            Int p = round_to_int(x * Rat(q));
            CHECK(Rat(abs(r - x)) <= Rat(abs(Rat(p, q) - x)));
        }
    }
}
