#ifndef HORROCKS_LINE_BUNDLE_HPP
#define HORROCKS_LINE_BUNDLE_HPP

#include <cstdint>
#include <vector>

#include <horrocks/numeric.hpp>

namespace horrocks {

/// Ordered direct sum of line bundles O(d_1) + ... + O(d_r) on P^3.
/// The order is significant: it fixes row/column meaning in monad matrices.
struct LineBundleSum {
    std::vector<int> degrees;

    std::size_t rank() const { return degrees.size(); }

    std::int64_t h0(int twist) const
    {
        std::int64_t s = 0;
        for (int d : degrees)
            s += monomial_space_dim(d + twist);
        return s;
    }

    std::int64_t euler_char(int twist) const
    {
        std::int64_t s = 0;
        for (int d : degrees)
            s += euler_char_line_bundle(d + twist);
        return s;
    }

    int max_abs_degree() const
    {
        int m = 0;
        for (int d : degrees)
            m = std::max(m, d < 0 ? -d : d);
        return m;
    }

    LineBundleSum negated() const
    {
        LineBundleSum r;
        r.degrees.reserve(degrees.size());
        for (int d : degrees)
            r.degrees.push_back(-d);
        return r;
    }
};

} // namespace horrocks

#endif
