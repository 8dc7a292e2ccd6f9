#ifndef HORROCKS_MONOMIAL_HPP
#define HORROCKS_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

namespace horrocks {

inline constexpr int kNumVars = 4;
inline constexpr char kVarNames[kNumVars] = {'x', 'y', 'z', 'w'};

/// Monomial in x, y, z, w as an exponent vector.
class Monomial {
public:
    Monomial() : e_{0, 0, 0, 0} {}
    Monomial(int ex, int ey, int ez, int ew) : e_{ex, ey, ez, ew} {}

    int exponent(int i) const { return e_[i]; }
    int& exponent(int i) { return e_[i]; }

    int degree() const { return e_[0] + e_[1] + e_[2] + e_[3]; }
    bool is_one() const { return degree() == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        return {a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2],
                a.e_[3] + b.e_[3]};
    }

    bool divides(const Monomial& m) const
    {
        for (int i = 0; i < kNumVars; ++i)
            if (e_[i] > m.e_[i])
                return false;
        return true;
    }

    /// Quotient m / n; caller guarantees divisibility.
    friend Monomial operator/(const Monomial& a, const Monomial& b)
    {
        return {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2],
                a.e_[3] - b.e_[3]};
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i)
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b)
    {
        for (int i = 0; i < kNumVars; ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0)
                return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b)
    {
        return a.e_ != b.e_;
    }

    std::string str() const
    {
        if (is_one())
            return "1";
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < kNumVars; ++i) {
            if (e_[i] == 0)
                continue;
            if (!first)
                os << '*';
            os << kVarNames[i];
            if (e_[i] > 1)
                os << '^' << e_[i];
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m)
    {
        return os << m.str();
    }

private:
    std::array<int, kNumVars> e_;
};

/// Graded reverse lexicographic order with x > y > z > w.
/// a > b iff deg a > deg b, or degrees tie and the last variable where the
/// exponents differ has a smaller exponent in a.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        for (int i = kNumVars - 1; i >= 0; --i) {
            int d = a.exponent(i) - b.exponent(i);
            if (d != 0)
                return d > 0;
        }
        return false;
    }
};

inline bool grevlex_less(const Monomial& a, const Monomial& b)
{
    return GrevlexLess{}(a, b);
}

/// All monomials of total degree d in grevlex-descending order
/// (equivalently: ascending lexicographic on the (w, z, y) exponents).
template <class Fn>
void for_each_monomial_of_degree(int d, Fn&& fn)
{
    if (d < 0)
        return;
    for (int ew = 0; ew <= d; ++ew)
        for (int ez = 0; ez <= d - ew; ++ez)
            for (int ey = 0; ey <= d - ew - ez; ++ey)
                fn(Monomial(d - ew - ez - ey, ey, ez, ew));
}

} // namespace horrocks

#endif
