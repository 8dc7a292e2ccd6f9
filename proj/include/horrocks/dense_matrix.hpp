#ifndef HORROCKS_DENSE_MATRIX_HPP
#define HORROCKS_DENSE_MATRIX_HPP

#include <vector>

#include <horrocks/fp.hpp>

namespace horrocks {

/// Dense matrix over a field, sized for exact section-space linear algebra.
template <class K>
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols, const K& zero)
        : rows_(rows), cols_(cols), zero_(zero), e_(rows * cols, zero)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const K& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    K& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    /// Exact rank by Gaussian elimination (modular for Fp, rational otherwise).
    std::size_t rank() const
    {
        DenseMatrix m = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < m.cols_ && r < m.rows_; ++col) {
            std::size_t pivot = r;
            while (pivot < m.rows_ && horrocks::is_zero(m.at(pivot, col)))
                ++pivot;
            if (pivot == m.rows_)
                continue;
            if (pivot != r)
                for (std::size_t j = col; j < m.cols_; ++j)
                    std::swap(m.at(pivot, j), m.at(r, j));
            K inv = one_like(m.at(r, col)) / m.at(r, col);
            for (std::size_t i = r + 1; i < m.rows_; ++i) {
                if (horrocks::is_zero(m.at(i, col)))
                    continue;
                K factor = m.at(i, col) * inv;
                m.at(i, col) = m.zero_;
                for (std::size_t j = col + 1; j < m.cols_; ++j)
                    m.at(i, j) -= factor * m.at(r, j);
            }
            ++r;
        }
        return r;
    }

    std::size_t nullity() const { return cols_ - rank(); }

private:
    std::size_t rows_, cols_;
    K zero_{};
    std::vector<K> e_;
};

} // namespace horrocks

#endif
