#include <doctest.h>

#include <random>

#include "subspacekit/surface.hpp"

using namespace subspacekit;

namespace {

IntersectionMatrix all_ones(std::size_t r) {
    return IntersectionMatrix(std::vector<std::vector<Rat>>(r, std::vector<Rat>(r, Rat(1))));
}

IntersectionMatrix from_ints(std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<Rat>> entries;
    for (auto& row : rows) {
        std::vector<Rat> out;
        for (long long e : row) out.emplace_back(e);
        entries.push_back(std::move(out));
    }
    return IntersectionMatrix(std::move(entries));
}

IntersectionMatrix random_positive_symmetric(std::mt19937_64& rng, std::size_t r,
                                             long long max_entry) {
    std::vector<std::vector<Rat>> entries(r, std::vector<Rat>(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            Rat v(1 + static_cast<long long>(rng() % max_entry));
            entries[i][j] = entries[j][i] = v;
        }
    return IntersectionMatrix(std::move(entries));
}

const WeightVector ones4{1, 1, 1, 1};

} // namespace

TEST_CASE("pairings of the weighted divisor") {
    CHECK(d_squared(all_ones(4), ones4) == 16);
    for (std::size_t i = 0; i < 4; ++i) CHECK(d_dot(all_ones(4), ones4, i) == 4);

    IntersectionMatrix m = from_ints({{2, 1}, {1, 3}});
    CHECK(d_dot(m, {0, 1}, 0) == 1); // e_j picks out M_{ij}
    CHECK(d_dot(m, {0, 1}, 1) == 3);
    CHECK(d_squared(from_ints({{0, 0}, {0, 0}}), {3, 5}) == 0);
    CHECK(d_squared(from_ints({{1, 1}, {1, 1}}), {1, 1}) == 4);
    CHECK_THROWS_AS(d_squared(all_ones(3), ones4), Error);
    CHECK_THROWS_AS(d_dot(all_ones(3), {1, 1, 1}, 5), Error);
    CHECK_THROWS_AS(check_weights(all_ones(2), {1, 0}), Error);
}

TEST_CASE("gamma on fixed data") {
    // C^2 = 1, D.C = 2, D^2 = 3: roots of T^2 - 4T + 3 are 1 and 3
    QuadExt g = (QuadExt(Rat(2)) - QuadExt::sqrt_of(Rat(4 - 3))) / Rat(1);
    CHECK(g == QuadExt(Rat(1)));

    // through a matrix: all-ones 4x4, disc = 16 - 16 = 0, gamma = 4
    QuadExt g4 = gamma_small(all_ones(4), ones4, 0);
    CHECK(g4.is_rational());
    CHECK(g4.rational_value() == 4);
    CHECK(gamma_large(all_ones(4), ones4, 0) == g4); // double root

    CHECK_THROWS_AS(gamma_small(from_ints({{-1, 1}, {1, 2}}), {1, 1}, 0), Error);
}

TEST_CASE("gamma bracketing and mean identity on random valid instances") {
    std::mt19937_64 rng(51);
    int done = 0;
    while (done < 200) {
        std::size_t r = 2 + rng() % 3;
        IntersectionMatrix m = random_positive_symmetric(rng, r, 6);
        WeightVector a;
        for (std::size_t i = 0; i < r; ++i) a.push_back(Int(1 + rng() % 4));
        Rat d2 = d_squared(m, a);
        for (std::size_t i = 0; i < r; ++i) {
            Rat dc = d_dot(m, a, i);
            Rat c2 = m.at(i, i);
            if (dc * dc - d2 * c2 < 0) continue;
            QuadExt g = gamma_small(m, a, i);
            QuadExt gp = gamma_large(m, a, i);
            Rat alpha = dc / c2;
            CHECK(g <= QuadExt(alpha));
            CHECK(QuadExt(alpha) <= gp);
            CHECK(g + gp == QuadExt(Rat(2 * alpha)));
            CHECK(g.sign() > 0);
            ++done;
        }
    }
}

TEST_CASE("F(theta) on fixed data") {
    CHECK(f_theta_raw(Rat(3), Rat(2), Rat(1), QuadExt(Rat(0))) == QuadExt(Rat(0)));
    // C^2=1, D.C=2, D^2=3, theta = gamma = 1: F = 1 - 2/3 + 1/9 = 4/9
    CHECK(f_theta_raw(Rat(3), Rat(2), Rat(1), QuadExt(Rat(1))) == QuadExt(Rat(4, 9)));
    CHECK_THROWS_AS(f_theta_raw(Rat(0), Rat(2), Rat(1), QuadExt(Rat(1))), Error);
}

TEST_CASE("F(beta/2) closed form holds symbolically") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 200; ++i) {
        Rat d2(1 + static_cast<long long>(rng() % 30));
        Rat dc(1 + static_cast<long long>(rng() % 30));
        Rat c2(1 + static_cast<long long>(rng() % 30));
        QuadExt half_beta(d2 / (2 * dc));
        QuadExt f = f_theta_raw(d2, dc, c2, half_beta);
        Rat closed = d2 / (4 * dc) * (1 + d2 * c2 / (6 * dc * dc));
        CHECK(f == QuadExt(closed));
    }
}

TEST_CASE("corvaja-zannier check on the all-ones matrices") {
    auto verdicts = cz_check(all_ones(4), ones4);
    for (bool v : verdicts) CHECK(v); // F(4) = 4/3 > 1

    auto single = cz_check(from_ints({{1}}), {1});
    CHECK_FALSE(single[0]); // F(1) = 1/3 < 1
}

TEST_CASE("cz strictness: equality is rejected") {
    // C^2 = 1, D.C = 1, D^2 = 1 gives gamma = 1 and F(1) = 1 - 1 + 1/3 = 1/3,
    // so compare against a synthetic threshold F(gamma) itself
    QuadExt f = f_theta_raw(Rat(1), Rat(1), Rat(1), QuadExt(Rat(1)));
    CHECK_FALSE(f > f); // strict comparison on equal values
}

TEST_CASE("autissier check on the all-ones matrices") {
    auto yes = autissier_check(all_ones(4), ones4);
    for (bool v : yes) CHECK(v); // 14/3 > 4

    auto no = autissier_check(all_ones(3), {1, 1, 1});
    for (bool v : no) CHECK_FALSE(v); // 7/2 < 4

    CHECK_THROWS_AS(autissier_check(from_ints({{1, -1}, {-1, 1}}), {1, 1}), Error);
}

TEST_CASE("autissier verdicts are scale invariant in the weights") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
        std::size_t r = 3 + rng() % 3;
        IntersectionMatrix m = random_positive_symmetric(rng, r, 8);
        WeightVector a;
        for (std::size_t j = 0; j < r; ++j) a.push_back(Int(1 + rng() % 5));
        long long t = 1 + static_cast<long long>(rng() % 7);
        WeightVector ta;
        for (const Int& w : a) ta.push_back(w * t);
        CHECK(autissier_check(m, a) == autissier_check(m, ta));
    }
}

TEST_CASE("F(gamma) dominates F(beta/2), so cz follows from autissier") {
    std::mt19937_64 rng(54);
    int done = 0;
    while (done < 200) {
        Rat d2(1 + static_cast<long long>(rng() % 20));
        Rat dc(1 + static_cast<long long>(rng() % 20));
        Rat c2(1 + static_cast<long long>(rng() % 20));
        if (dc * dc - d2 * c2 <= 0) continue; // positive discriminant instances
        QuadExt gamma = (QuadExt(dc) - QuadExt::sqrt_of(dc * dc - d2 * c2)) / c2;
        QuadExt fg = f_theta_raw(d2, dc, c2, gamma);
        QuadExt fb = f_theta_raw(d2, dc, c2, QuadExt(d2 / (2 * dc)));
        CHECK(fg >= fb);
        ++done;
    }
}

TEST_CASE("fixed point weights on symmetric instances") {
    WeightVector a = fixed_point_weights(all_ones(4), Rat(1, 10));
    CHECK(a == WeightVector{1, 1, 1, 1}); // barycenter is already balanced

    WeightVector b = fixed_point_weights(from_ints({{1, 2}, {2, 1}}), Rat(1, 10));
    CHECK(b == WeightVector{1, 1});
    CHECK(weight_certificate(from_ints({{1, 2}, {2, 1}}), b, Rat(1, 10)));

    CHECK_THROWS_AS(fixed_point_weights(from_ints({{1, 0}, {0, 1}}), Rat(1, 10)), Error);
}

TEST_CASE("fixed point weights certify on asymmetric instances") {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 40; ++i) {
        std::size_t r = 2 + rng() % 4;
        IntersectionMatrix m = random_positive_symmetric(rng, r, 9);
        Rat eps(1, 2 + static_cast<long long>(rng() % 20));
        WeightVector a = fixed_point_weights(m, eps);
        CHECK(weight_certificate(m, a, eps));
        for (const Int& w : a) CHECK(w >= 1);
    }
}

TEST_CASE("levin screen and certificates") {
    WeightVector a = levin_check(all_ones(4), true);
    auto verdicts = autissier_check(all_ones(4), a);
    for (bool v : verdicts) CHECK(v);

    // the doubled-line boundary of the product of two lines has zero
    // self-intersections: properly intersecting but not ample
    IntersectionMatrix torus = from_ints(
        {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
    CHECK_THROWS_AS(levin_check(torus, true), Error);
    try {
        levin_check(torus, true);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::screen_failed);
    }

    CHECK_THROWS_AS(levin_check(all_ones(3), true), Error);   // r < 4
    CHECK_THROWS_AS(levin_check(all_ones(4), false), Error);  // no ampleness assertion
}

TEST_CASE("curve budgets") {
    CurveBudget b = curve_budget(3, 0, 1);
    CHECK(b.ell == 4);
    CHECK(b.order_sum_bound == 2);
    REQUIRE(b.minimal_positive_n.has_value());
    CHECK(*b.minimal_positive_n == 1);

    for (long long n = 1; n <= 50; ++n) {
        CurveBudget two = curve_budget(2, 0, n);
        CHECK(two.ell == 2 * n + 1);
        CHECK(two.order_sum_bound == 0);
        CHECK_FALSE(two.minimal_positive_n.has_value());
    }

    CurveBudget elliptic = curve_budget(3, 1, 1);
    CHECK(elliptic.ell == 3);
    CHECK(elliptic.order_sum_bound == 0);
    REQUIRE(elliptic.minimal_positive_n.has_value());
    CHECK(*elliptic.minimal_positive_n == 2);
    CurveBudget at2 = curve_budget(3, 1, 2);
    CHECK(at2.ell == 6);
    CHECK(at2.order_sum_bound == 3);

    CHECK_THROWS_AS(curve_budget(1, 3, 1), Error); // n r <= 2g - 2
}

TEST_CASE("theta lower bound evaluations") {
    ThetaBound zero = etheta_lower_bound(Rat(3), Rat(2), Rat(1), 1, QuadExt(Rat(0)));
    CHECK(zero.cubic_term == QuadExt(Rat(0)));

    ThetaBound one = etheta_lower_bound(Rat(3), Rat(2), Rat(1), 1, QuadExt(Rat(1)));
    CHECK(one.cubic_term == QuadExt(Rat(2, 3))); // 3/2 - 1 + 1/6
    CHECK(one.note == "asymptotic");

    CHECK_THROWS_AS(etheta_lower_bound(Rat(3), Rat(2), Rat(1), 1, QuadExt(Rat(100))), Error);
    CHECK_THROWS_AS(etheta_lower_bound(Rat(3), Rat(2), Rat(1), 1, QuadExt(Rat(-1))), Error);
}

TEST_CASE("json round trip for intersection matrices") {
    auto [m, ample] = IntersectionMatrix::from_json_text(
        R"({"r": 2, "matrix": [[1, 2], [2, "1/3"]], "ample": true})");
    CHECK(ample);
    CHECK(m.at(1, 1) == Rat(1, 3));
    auto [copy, ample2] = IntersectionMatrix::from_json_text(m.to_json_text(true));
    CHECK(ample2);
    CHECK(copy.entries() == m.entries());
    CHECK_THROWS_AS(IntersectionMatrix::from_json_text(R"({"matrix": [[1, 2], [3, 4]]})"), Error);
}
