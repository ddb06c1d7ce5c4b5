#ifndef SUBSPACEKIT_FILTRATION_HPP
#define SUBSPACEKIT_FILTRATION_HPP

#include <string>

#include "subspacekit/linalg.hpp"

namespace subspacekit {

// Decreasing chain W_0 >= W_1 >= ... of subspaces of Q^d, each given by a
// spanning list of vectors; W_0 must be the full space. Nesting is verified
// exactly at construction.
class Filtration {
public:
    Filtration(std::size_t dimension, std::vector<linalg::Mat> chain);

    // the chain of proper subspaces, with the full space prepended
    static Filtration with_full_space(std::size_t dimension, std::vector<linalg::Mat> tail);

    std::size_t dimension() const { return dimension_; }
    const std::vector<linalg::Mat>& chain() const { return chain_; }

    // { "dimension": d, "chains": [chain1, chain2] } where each chain is a
    // list of subspaces and each subspace a list of vectors of "p/q" entries.
    static std::pair<Filtration, Filtration> pair_from_json_text(const std::string& json_text);

private:
    std::size_t dimension_;
    std::vector<linalg::Mat> chain_;
};

// A basis of Q^d whose members lying in any subspace of either chain span it.
// Follows the hyperplane-induction construction: refine the first chain so
// its top step is a hyperplane H, intersect the second chain with H, recurse,
// and close with a vector from the shallowest subspace of the second chain
// that escapes H.
std::vector<linalg::Vec> common_filtration_basis(const Filtration& f1, const Filtration& f2);

// Exact certificate: the output is a basis and, for every subspace U of
// either chain, exactly dim(U) of its members lie in U.
bool common_basis_certificate(const Filtration& f1, const Filtration& f2,
                              const std::vector<linalg::Vec>& basis);

} // namespace subspacekit

#endif
