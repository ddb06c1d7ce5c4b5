#ifndef SUBSPACEKIT_LINALG_HPP
#define SUBSPACEKIT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "subspacekit/numbers.hpp"

namespace subspacekit::linalg {

// Dense exact linear algebra over Q, row-major. Sized for desk-scale
// dimensions; everything is plain Gaussian elimination on rationals.
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// reduced row-echelon form; pivot column indices appended to *pivots
Mat rref(Mat m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Mat& m);

// canonical basis of { x : m x = 0 } from the rref (one vector per free column)
std::vector<Vec> nullspace(const Mat& m);

bool in_row_span(const Mat& span, const Vec& v);

// true iff row span of a is contained in row span of b
bool span_contained(const Mat& a, const Mat& b);

// echelonized basis of the row span (independent rows, deterministic)
Mat row_basis(const Mat& m);

// basis of the intersection of the two row spans
Mat intersect_row_spans(const Mat& a, const Mat& b, std::size_t width);

} // namespace subspacekit::linalg

#endif
