#ifndef HORROCKS_FP_HPP
#define HORROCKS_FP_HPP

#include <cassert>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <horrocks/numeric.hpp>

namespace horrocks {

/// Element of a prime field F_p with runtime modulus. Arithmetic between
/// elements of different moduli is a programming error.
class Fp {
public:
    Fp() : v_(0), p_(2) {}
    Fp(std::int64_t value, std::int64_t p) : p_(p)
    {
        assert(p >= 2);
        v_ = value % p;
        if (v_ < 0)
            v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b)
    {
        assert(a.p_ == b.p_);
        std::int64_t s = a.v_ + b.v_;
        if (s >= a.p_)
            s -= a.p_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b)
    {
        assert(a.p_ == b.p_);
        std::int64_t s = a.v_ - b.v_;
        if (s < 0)
            s += a.p_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b)
    {
        assert(a.p_ == b.p_);
        using i128 = __int128;
        i128 prod = static_cast<i128>(a.v_) * b.v_;
        return Fp::raw(static_cast<std::int64_t>(prod % a.p_), a.p_);
    }
    Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp inverse() const
    {
        if (v_ == 0)
            throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0)
            t += p_;
        return Fp::raw(t, p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b)
    {
        return a.v_ == b.v_ && a.p_ == b.p_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a)
    {
        return os << a.v_;
    }

private:
    static Fp raw(std::int64_t v, std::int64_t p)
    {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    std::int64_t v_;
    std::int64_t p_;
};

// Field-trait hooks shared by the generic polynomial / matrix code.
// zero_like/one_like build constants compatible with a sample element, which
// is how the runtime modulus of Fp propagates through generic algorithms.
inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline Fp from_int(const BigInt& n, const Fp& sample)
{
    return Fp(static_cast<std::int64_t>(n % sample.modulus()), sample.modulus());
}

inline BigRational zero_like(const BigRational&) { return BigRational(0); }
inline BigRational one_like(const BigRational&) { return BigRational(1); }
inline bool is_zero(const BigRational& a) { return a == 0; }
inline BigRational from_int(const BigInt& n, const BigRational&)
{
    return BigRational(n);
}

} // namespace horrocks

#endif
