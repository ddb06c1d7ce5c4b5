#include "subspacekit/filtration.hpp"

#include <algorithm>

#include <json.hpp>

namespace subspacekit {

using linalg::Mat;
using linalg::Vec;

Filtration::Filtration(std::size_t dimension, std::vector<Mat> chain)
    : dimension_(dimension), chain_(std::move(chain)) {
    if (dimension_ < 1) fail(Errc::precondition_failed, "ambient dimension must be >= 1");
    if (chain_.empty()) fail(Errc::not_nested, "chain must contain at least the full space");
    for (const Mat& sub : chain_)
        for (const Vec& v : sub)
            if (v.size() != dimension_)
                fail(Errc::dimension_mismatch, "vector length must equal the ambient dimension");
    if (linalg::rank(chain_.front()) != dimension_)
        fail(Errc::not_nested, "the first subspace must span the full space");
    for (std::size_t i = 0; i + 1 < chain_.size(); ++i) {
        if (linalg::rank(chain_[i + 1]) > linalg::rank(chain_[i]) ||
            !linalg::span_contained(chain_[i + 1], chain_[i]))
            fail(Errc::not_nested, "chain member " + std::to_string(i + 1) +
                                       " is not contained in its predecessor");
    }
}

Filtration Filtration::with_full_space(std::size_t dimension, std::vector<Mat> tail) {
    Mat full;
    for (std::size_t i = 0; i < dimension; ++i) {
        Vec e(dimension, Rat(0));
        e[i] = 1;
        full.push_back(std::move(e));
    }
    std::vector<Mat> chain;
    chain.push_back(std::move(full));
    for (Mat& sub : tail) chain.push_back(std::move(sub));
    return Filtration(dimension, std::move(chain));
}

std::pair<Filtration, Filtration> Filtration::pair_from_json_text(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::size_t dimension = j.at("dimension").get<std::size_t>();
    const auto& chains = j.at("chains");
    if (!chains.is_array() || chains.size() != 2)
        fail(Errc::usage_error, "expected exactly two chains");

    auto read_chain = [&](const nlohmann::json& jc) {
        std::vector<Mat> chain;
        for (const auto& jsub : jc) {
            Mat sub;
            for (const auto& jvec : jsub) {
                Vec v;
                for (const auto& e : jvec) {
                    if (e.is_string())
                        v.push_back(parse_rational(e.get<std::string>()));
                    else
                        v.push_back(Rat(e.get<long long>()));
                }
                sub.push_back(std::move(v));
            }
            chain.push_back(std::move(sub));
        }
        return chain;
    };
    return {Filtration(dimension, read_chain(chains[0])), Filtration(dimension, read_chain(chains[1]))};
}

namespace {

// drop leading subspaces that already equal the ambient space
std::vector<Mat> drop_full(const std::vector<Mat>& chain, std::size_t ambient_rank) {
    std::size_t i = 0;
    while (i < chain.size() && linalg::rank(chain[i]) == ambient_rank) ++i;
    return {chain.begin() + i, chain.end()};
}

// extend `sub` inside `ambient` to the requested rank, reusing ambient rows
Mat extend_to_rank(const Mat& sub, const Mat& ambient, std::size_t target) {
    Mat h = linalg::row_basis(sub);
    for (const Vec& row : ambient) {
        if (h.size() >= target) break;
        if (!linalg::in_row_span(h, row)) h.push_back(row);
    }
    if (h.size() != target)
        fail(Errc::precondition_failed, "internal: could not extend subspace to requested rank");
    return h;
}

std::vector<Vec> common_basis_rec(const Mat& ambient, std::vector<Mat> chain1,
                                  std::vector<Mat> chain2) {
    const std::size_t d = linalg::rank(ambient);
    if (d == 0) return {};
    chain1 = drop_full(chain1, d);
    chain2 = drop_full(chain2, d);
    if (chain1.empty()) std::swap(chain1, chain2);
    if (chain1.empty()) {
        Mat basis = linalg::row_basis(ambient);
        return {basis.begin(), basis.end()};
    }

    // make the first proper step of chain1 a hyperplane H of the ambient space
    const Mat w1 = linalg::row_basis(chain1.front());
    Mat h;
    std::vector<Mat> rest1;
    if (w1.size() == d - 1) {
        h = w1;
        rest1.assign(chain1.begin() + 1, chain1.end());
    } else {
        h = extend_to_rank(w1, ambient, d - 1);
        rest1 = chain1; // W_1 is still proper inside H
    }

    const std::size_t width = ambient.empty() ? 0 : ambient.front().size();
    std::vector<Mat> chain2_cut;
    chain2_cut.reserve(chain2.size());
    for (const Mat& u : chain2) chain2_cut.push_back(linalg::intersect_row_spans(u, h, width));

    std::vector<Vec> basis = common_basis_rec(h, rest1, chain2_cut);

    // Deepest subspace of the second chain that escapes H: its extension
    // vector lies in every shallower member as well, so all counts close.
    std::vector<Mat> with_ambient;
    with_ambient.push_back(ambient);
    with_ambient.insert(with_ambient.end(), chain2.begin(), chain2.end());
    std::size_t deepest = 0;
    for (std::size_t k = 0; k < with_ambient.size(); ++k)
        if (!linalg::span_contained(with_ambient[k], h)) deepest = k;
    bool found = false;
    for (const Vec& row : linalg::row_basis(with_ambient[deepest]))
        if (!linalg::in_row_span(h, row)) {
            basis.push_back(row);
            found = true;
            break;
        }
    if (!found) fail(Errc::precondition_failed, "internal: no vector escapes the hyperplane");
    return basis;
}

} // namespace

std::vector<Vec> common_filtration_basis(const Filtration& f1, const Filtration& f2) {
    if (f1.dimension() != f2.dimension())
        fail(Errc::dimension_mismatch, "filtrations must share the ambient space");
    Mat full;
    for (std::size_t i = 0; i < f1.dimension(); ++i) {
        Vec e(f1.dimension(), Rat(0));
        e[i] = 1;
        full.push_back(std::move(e));
    }
    return common_basis_rec(full, f1.chain(), f2.chain());
}

bool common_basis_certificate(const Filtration& f1, const Filtration& f2,
                              const std::vector<Vec>& basis) {
    const std::size_t d = f1.dimension();
    if (basis.size() != d) return false;
    Mat rows(basis.begin(), basis.end());
    if (linalg::rank(rows) != d) return false;
    for (const auto* f : {&f1, &f2}) {
        for (const Mat& u : f->chain()) {
            std::size_t inside = 0;
            for (const Vec& v : basis)
                if (linalg::in_row_span(u, v)) ++inside;
            if (inside != linalg::rank(u)) return false;
        }
    }
    return true;
}

} // namespace subspacekit
