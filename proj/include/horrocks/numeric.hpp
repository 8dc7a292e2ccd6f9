#ifndef HORROCKS_NUMERIC_HPP
#define HORROCKS_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <boost/multiprecision/cpp_int.hpp>

namespace horrocks {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// binomial(n, 3) and friends, exact in 64 bits for the sizes used here
inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r /= i;
    }
    return r;
}

// dim of the degree-d piece of k[x,y,z,w]; 0 for d < 0
inline std::int64_t monomial_space_dim(std::int64_t d)
{
    return d < 0 ? 0 : binomial(d + 3, 3);
}

// Euler characteristic of O(d) on P^3: the cubic (d+1)(d+2)(d+3)/6 for every d
inline std::int64_t euler_char_line_bundle(std::int64_t d)
{
    return (d + 1) * (d + 2) * (d + 3) / 6;
}

inline bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace horrocks

#endif
