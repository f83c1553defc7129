#include <vertexkernel/linalg.hpp>

#include <utility>

namespace vk
{

Echelon row_reduce(Matrix m, std::size_t cols)
{
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && sgn(m[piv][c]) == 0) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[r], m[piv]);
        Rational inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k) {
            m[r][k] *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) {
                continue;
            }
            Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (sgn(m[r][k]) != 0) {
                    m[i][k] -= f * m[r][k];
                }
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const Matrix &m, std::size_t cols)
{
    return row_reduce(m, cols).pivots.size();
}

std::vector<Vector> kernel(const Matrix &m, std::size_t cols)
{
    Echelon e = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            v[e.pivots[i]] = -e.rows[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace vk
