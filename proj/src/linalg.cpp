#include "subspacekit/linalg.hpp"

#include <algorithm>

namespace subspacekit::linalg {

Mat rref(Mat m, std::vector<std::size_t>* pivots) {
    if (m.empty()) return m;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t pivot = pr;
        while (pivot < rows && m[pivot][pc] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pr], m[pivot]);
        Rat inv = 1 / m[pr][pc];
        for (std::size_t c = pc; c < cols; ++c) m[pr][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][pc] == 0) continue;
            Rat f = m[r][pc];
            for (std::size_t c = pc; c < cols; ++c) m[r][c] -= f * m[pr][c];
        }
        if (pivots) pivots->push_back(pc);
        ++pr;
    }
    return m;
}

std::size_t rank(const Mat& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

std::vector<Vec> nullspace(const Mat& m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    std::vector<std::size_t> pivots;
    Mat r = rref(m, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const Mat& span, const Vec& v) {
    Mat with = span;
    with.push_back(v);
    return rank(with) == rank(span);
}

bool span_contained(const Mat& a, const Mat& b) {
    for (const Vec& row : a)
        if (!in_row_span(b, row)) return false;
    return true;
}

Mat row_basis(const Mat& m) {
    Mat r = rref(m);
    Mat basis;
    for (const Vec& row : r)
        if (std::any_of(row.begin(), row.end(), [](const Rat& x) { return x != 0; }))
            basis.push_back(row);
    return basis;
}

Mat intersect_row_spans(const Mat& a, const Mat& b, std::size_t width) {
    Mat ab = row_basis(a), bb = row_basis(b);
    if (ab.empty() || bb.empty()) return {};
    // x in both spans: x = y^T a = z^T b; solve [a^T | -b^T] (y,z)^T = 0
    const std::size_t na = ab.size(), nb = bb.size();
    Mat sys(width, Vec(na + nb, Rat(0)));
    for (std::size_t c = 0; c < width; ++c) {
        for (std::size_t i = 0; i < na; ++i) sys[c][i] = ab[i][c];
        for (std::size_t j = 0; j < nb; ++j) sys[c][na + j] = -bb[j][c];
    }
    Mat out;
    for (const Vec& yz : nullspace(sys)) {
        Vec x(width, Rat(0));
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t c = 0; c < width; ++c) x[c] += yz[i] * ab[i][c];
        bool nonzero = std::any_of(x.begin(), x.end(), [](const Rat& v) { return v != 0; });
        if (nonzero) out.push_back(std::move(x));
    }
    return row_basis(out);
}

} // namespace subspacekit::linalg
