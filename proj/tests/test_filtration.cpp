#include <doctest.h>

#include <random>

#include "subspacekit/filtration.hpp"

using namespace subspacekit;
using linalg::Mat;
using linalg::Vec;

namespace {

Vec vec(std::initializer_list<long long> entries) {
    Vec v;
    for (long long e : entries) v.emplace_back(e);
    return v;
}

Mat random_subspace(std::mt19937_64& rng, std::size_t dim, std::size_t target_rank) {
    Mat rows;
    std::uniform_int_distribution<long long> entry(-4, 4);
    while (linalg::rank(rows) < target_rank) {
        Vec v(dim);
        for (auto& e : v) e = Rat(entry(rng));
        rows.push_back(std::move(v));
        if (rows.size() > target_rank + 8) rows.erase(rows.begin()); // keep it bounded
    }
    return rows;
}

Filtration random_filtration(std::mt19937_64& rng, std::size_t dim) {
    // strictly decreasing ranks from dim down to a random floor
    std::vector<std::size_t> ranks{dim};
    std::size_t cur = dim;
    while (cur > 0 && rng() % 3 != 0) {
        cur -= 1 + rng() % cur;
        ranks.push_back(cur);
        if (cur == 0) break;
    }
    // nested spans: build from the bottom up by extending with random vectors
    std::vector<Mat> chain(ranks.size());
    Mat current;
    if (ranks.back() > 0) current = random_subspace(rng, dim, ranks.back());
    chain.back() = current;
    for (std::size_t i = ranks.size() - 1; i-- > 0;) {
        std::uniform_int_distribution<long long> entry(-4, 4);
        while (linalg::rank(current) < ranks[i]) {
            Vec v(dim);
            for (auto& e : v) e = Rat(entry(rng));
            if (!linalg::in_row_span(current, v)) current.push_back(v);
        }
        chain[i] = current;
    }
    return Filtration(dim, chain);
}

// Independent route: choose, for every cell V_ij = W_i meet W'_j, vectors
// extending V_{i+1,j} + V_{i,j+1}; the union over the grid is a common basis.
std::vector<Vec> echelon_grid_oracle(const Filtration& f1, const Filtration& f2) {
    const std::size_t d = f1.dimension();
    std::vector<Mat> c1 = f1.chain(), c2 = f2.chain();
    c1.push_back({}); // terminate both chains with the zero space
    c2.push_back({});
    const std::size_t p = c1.size(), q = c2.size();

    std::vector<std::vector<Mat>> cell(p, std::vector<Mat>(q));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            cell[i][j] = linalg::intersect_row_spans(c1[i], c2[j], d);

    std::vector<Vec> basis;
    for (std::size_t i = p; i-- > 0;) {
        for (std::size_t j = q; j-- > 0;) {
            Mat floor_span; // V_{i+1,j} + V_{i,j+1} + already chosen members of the cell
            if (i + 1 < p)
                for (const Vec& v : cell[i + 1][j]) floor_span.push_back(v);
            if (j + 1 < q)
                for (const Vec& v : cell[i][j + 1]) floor_span.push_back(v);
            for (const Vec& v : basis)
                if (linalg::in_row_span(cell[i][j], v)) floor_span.push_back(v);
            for (const Vec& candidate : cell[i][j]) {
                if (!linalg::in_row_span(floor_span, candidate)) {
                    basis.push_back(candidate);
                    floor_span.push_back(candidate);
                }
            }
        }
    }
    return basis;
}

} // namespace

TEST_CASE("trivial chains admit any basis") {
    Filtration f = Filtration::with_full_space(3, {{}});
    auto basis = common_filtration_basis(f, f);
    CHECK(basis.size() == 3);
    CHECK(common_basis_certificate(f, f, basis));
}

TEST_CASE("textbook two-dimensional crossing") {
    Filtration f1 = Filtration::with_full_space(2, {{vec({1, 0})}});
    Filtration f2 = Filtration::with_full_space(2, {{vec({1, 1})}});
    auto basis = common_filtration_basis(f1, f2);
    REQUIRE(basis.size() == 2);
    CHECK(common_basis_certificate(f1, f2, basis));
    // one member spans each line
    bool has_e1 = false, has_diag = false;
    for (const Vec& v : basis) {
        if (linalg::in_row_span({vec({1, 0})}, v)) has_e1 = true;
        if (linalg::in_row_span({vec({1, 1})}, v)) has_diag = true;
    }
    CHECK(has_e1);
    CHECK(has_diag);
}

TEST_CASE("non-nested chains are rejected") {
    CHECK_THROWS_AS(Filtration(2, {{vec({1, 0}), vec({0, 1})}, {vec({1, 0})}, {vec({0, 1})}}),
                    Error);
    CHECK_THROWS_AS(Filtration(2, {{vec({1, 0})}}), Error); // first member not the full space
}

TEST_CASE("random filtration pairs pass the rank certificate") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t dim = 1 + rng() % 8;
        Filtration f1 = random_filtration(rng, dim);
        Filtration f2 = random_filtration(rng, dim);
        auto basis = common_filtration_basis(f1, f2);
        REQUIRE(common_basis_certificate(f1, f2, basis));

        auto oracle = echelon_grid_oracle(f1, f2);
        REQUIRE(common_basis_certificate(f1, f2, oracle));
    }
}

TEST_CASE("json input describes a pair of chains") {
    auto [f1, f2] = Filtration::pair_from_json_text(R"({
        "dimension": 2,
        "chains": [
            [ [[1, 0], [0, 1]], [["1", "0"]] ],
            [ [[1, 0], [0, 1]], [["1", "1"]] ]
        ]
    })");
    auto basis = common_filtration_basis(f1, f2);
    CHECK(common_basis_certificate(f1, f2, basis));
}
