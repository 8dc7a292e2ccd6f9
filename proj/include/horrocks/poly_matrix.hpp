#ifndef HORROCKS_POLY_MATRIX_HPP
#define HORROCKS_POLY_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include <horrocks/polynomial.hpp>

namespace horrocks {

/// Rectangular matrix of polynomials; zero entries allowed.
template <class K>
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Polynomial<K>& at(std::size_t i, std::size_t j) const
    {
        return e_[i * cols_ + j];
    }
    Polynomial<K>& at(std::size_t i, std::size_t j)
    {
        return e_[i * cols_ + j];
    }

    bool is_zero() const
    {
        for (const auto& p : e_)
            if (!p.is_zero())
                return false;
        return true;
    }

    PolyMatrix transposed() const
    {
        PolyMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Polynomial<K>> e_;
};

template <class K>
PolyMatrix<K> matrix_mul(const PolyMatrix<K>& a, const PolyMatrix<K>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix_mul: shape mismatch " +
                                    std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " +
                                    std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    PolyMatrix<K> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Polynomial<K> s;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s = s + a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

namespace detail {

/// Laplace expansion along the first selected row. Row/column index sets are
/// small here (monad ranks), so factorial growth is acceptable.
template <class K>
Polynomial<K> det_on(const PolyMatrix<K>& m, const std::vector<std::size_t>& ri,
                     std::vector<std::size_t> ci, std::size_t row_from)
{
    std::size_t n = ri.size() - row_from;
    if (n == 0)
        return Polynomial<K>(); // empty determinant treated by caller
    if (n == 1)
        return m.at(ri[row_from], ci[0]);
    Polynomial<K> acc;
    for (std::size_t j = 0; j < ci.size(); ++j) {
        const Polynomial<K>& pivot = m.at(ri[row_from], ci[j]);
        if (pivot.is_zero())
            continue;
        std::vector<std::size_t> rest;
        rest.reserve(ci.size() - 1);
        for (std::size_t t = 0; t < ci.size(); ++t)
            if (t != j)
                rest.push_back(ci[t]);
        Polynomial<K> sub = det_on(m, ri, std::move(rest), row_from + 1);
        Polynomial<K> contrib = pivot * sub;
        acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn)
{
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        fn(idx);
        // next k-subset of {0..n-1} in lexicographic order
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

template <class K>
Polynomial<K> determinant(const PolyMatrix<K>& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    if (m.rows() == 0)
        throw std::invalid_argument("determinant: empty matrix");
    std::vector<std::size_t> ri(m.rows()), ci(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        ri[i] = ci[i] = i;
    return detail::det_on(m, ri, ci, 0);
}

/// All k x k minors in lexicographic order of (row subset, column subset).
template <class K>
std::vector<Polynomial<K>> minors(const PolyMatrix<K>& m, std::size_t k)
{
    if (k == 0 || k > m.rows() || k > m.cols())
        throw std::invalid_argument("minors: order " + std::to_string(k) +
                                    " out of range for " +
                                    std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
    std::vector<Polynomial<K>> out;
    detail::for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& ri) {
        detail::for_each_subset(m.cols(), k,
                                [&](const std::vector<std::size_t>& ci) {
                                    out.push_back(detail::det_on(m, ri, ci, 0));
                                });
    });
    return out;
}

} // namespace horrocks

#endif
