// Exact dense linear algebra over the rationals. Sized for graded pieces
// (tens of columns), not for general sparse systems.

#ifndef VERTEXKERNEL_LINALG_HPP
#define VERTEXKERNEL_LINALG_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <vertexkernel/lincomb.hpp>
#include <vertexkernel/rational.hpp>

namespace vk
{

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>; // row-major

struct Echelon {
    Matrix rows;                      // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon row_reduce(Matrix m, std::size_t cols);

std::size_t rank(const Matrix &m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column, in reduced form.
std::vector<Vector> kernel(const Matrix &m, std::size_t cols);

/// Matrix of a linear map given on a finite basis; rows indexed by every
/// output key that occurs.
template <typename K, typename F>
Matrix matrix_of(const std::vector<K> &basis, F &&map)
{
    using Out = decltype(map(basis.front()));
    using OutKey = typename Out::key_type;
    std::vector<Out> images;
    images.reserve(basis.size());
    std::map<OutKey, std::size_t> row_index;
    for (const auto &b : basis) {
        images.push_back(map(b));
        for (const auto &kv : images.back()) {
            row_index.try_emplace(kv.first, row_index.size());
        }
    }
    Matrix m(row_index.size(), Vector(basis.size()));
    for (std::size_t j = 0; j < images.size(); ++j) {
        for (const auto &[k, c] : images[j]) {
            m[row_index.at(k)][j] = c;
        }
    }
    return m;
}

/// Combine basis vectors with coordinates.
template <typename K>
LinComb<K> from_coordinates(const std::vector<K> &basis, const Vector &coords)
{
    LinComb<K> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out.add(basis[i], coords[i]);
    }
    return out;
}

} // namespace vk

#endif
