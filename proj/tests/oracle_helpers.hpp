// Independent oracles for cross-checking the library: exhaustive point
// evaluation over tiny prime fields, fraction-free integer rank, and
// brute-force enumerations. Deliberately dumb and separate from the
// implementation paths they check.
#ifndef HORROCKS_TEST_ORACLE_HELPERS_HPP
#define HORROCKS_TEST_ORACLE_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <horrocks/monad.hpp>
#include <horrocks/polynomial.hpp>

namespace oracle {

/// Does some point of P^3(F_q) kill every polynomial? Evaluates integer
/// coefficients with plain modular arithmetic over all q^4 - 1 nonzero
/// affine representatives.
inline bool common_zero_exists_mod_q(
    const std::vector<horrocks::PolyQ>& gens, int q)
{
    auto eval_mod = [&](const horrocks::PolyQ& p, int x, int y, int z,
                        int w) -> int {
        long long acc = 0;
        for (const auto& [m, c] : p.terms()) {
            horrocks::BigInt num = boost::multiprecision::numerator(c);
            long long coeff = static_cast<long long>(num % q);
            long long t = ((coeff % q) + q) % q;
            for (int e = 0; e < m.exponent(0); ++e)
                t = (t * x) % q;
            for (int e = 0; e < m.exponent(1); ++e)
                t = (t * y) % q;
            for (int e = 0; e < m.exponent(2); ++e)
                t = (t * z) % q;
            for (int e = 0; e < m.exponent(3); ++e)
                t = (t * w) % q;
            acc = (acc + t) % q;
        }
        return static_cast<int>(acc);
    };
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z)
                for (int w = 0; w < q; ++w) {
                    if (x == 0 && y == 0 && z == 0 && w == 0)
                        continue;
                    bool all_vanish = true;
                    for (const auto& g : gens)
                        if (eval_mod(g, x, y, z, w) != 0) {
                            all_vanish = false;
                            break;
                        }
                    if (all_vanish)
                        return true;
                }
    return false;
}

/// Rank by Bareiss fraction-free elimination over the integers.
inline std::size_t bareiss_rank(std::vector<std::vector<horrocks::BigInt>> m)
{
    using horrocks::BigInt;
    if (m.empty() || m[0].empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    BigInt prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) /
                          prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

/// Integer lift of a dense Fp matrix (entries as representatives in [0, p)).
inline std::vector<std::vector<horrocks::BigInt>>
lift(const horrocks::DenseMatrix<horrocks::Fp>& m)
{
    std::vector<std::vector<horrocks::BigInt>> out(
        m.rows(), std::vector<horrocks::BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m.at(i, j).value();
    return out;
}

/// Spectrum conditions re-coded directly on a full (two-sided) multiset.
inline bool multiset_is_valid_spectrum(std::vector<int> entries)
{
    std::sort(entries.begin(), entries.end());
    std::map<int, int> count;
    for (int e : entries)
        ++count[e];
    // symmetry
    for (const auto& [v, n] : count)
        if (count.count(-v) == 0 || count.at(-v) != n)
            return false;
    // connectedness (with 0 forced into the support by symmetry)
    int lo = entries.front(), hi = entries.back();
    for (int v = lo; v <= hi; ++v)
        if (count.count(v) == 0)
            return false;
    if (count.count(0) == 0)
        return false;
    // a value <= -2 occurring once makes everything below it occur once
    for (int u = lo; u <= -2; ++u)
        if (count.at(u) == 1) {
            for (int v = lo; v <= u; ++v)
                if (count.at(v) != 1)
                    return false;
        }
    // multiplicities cannot grow away from zero
    for (int v = 1; v < hi; ++v)
        if (count.at(v) < count.at(v + 1))
            return false;
    // a zero multiplicity of three or more strictly dominates s(1)
    if (count.at(0) >= 3 && count.count(1) && count.at(1) >= count.at(0))
        return false;
    return true;
}

/// Every valid spectrum multiset of size c2, as sorted multisets. Branches
/// whose entries provably cannot sum to zero (necessary for symmetry) are
/// skipped; within that, the enumeration is exhaustive.
inline std::vector<std::vector<int>> brute_force_spectra(int c2)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto extend = [&](auto&& self, int next_min, int remaining,
                      int sum) -> void {
        if (remaining == 0) {
            if (sum == 0 && multiset_is_valid_spectrum(cur))
                out.push_back(cur);
            return;
        }
        for (int v = next_min; v <= c2; ++v) {
            if (sum + v * remaining > 0)
                break; // later entries only grow; the sum cannot return to 0
            if (sum + v + static_cast<long long>(c2) * (remaining - 1) < 0)
                continue;
            cur.push_back(v);
            self(self, v, remaining - 1, sum + v);
            cur.pop_back();
        }
    };
    extend(extend, -c2, c2, 0);
    return out;
}

/// All descending tuples of n non-negative integers with sum of squares =
/// target, via an odometer over the full box (no pruning).
inline std::vector<std::vector<int>> brute_force_square_tuples(int target,
                                                               int n)
{
    int cap = 0;
    while ((cap + 1) * (cap + 1) <= target)
        ++cap;
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    while (true) {
        int sum = 0;
        bool descending = true;
        for (int i = 0; i < n; ++i) {
            sum += t[i] * t[i];
            if (i > 0 && t[i] > t[i - 1])
                descending = false;
        }
        if (descending && sum == target)
            out.push_back(t);
        int pos = n - 1;
        while (pos >= 0 && t[pos] == cap)
            t[pos--] = 0;
        if (pos < 0)
            break;
        ++t[pos];
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return std::lexicographical_compare(b.begin(), b.end(),
                                                      a.begin(), a.end());
              });
    return out;
}

} // namespace oracle

#endif
