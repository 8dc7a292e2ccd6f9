#ifndef HORROCKS_POLYNOMIAL_HPP
#define HORROCKS_POLYNOMIAL_HPP

#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <horrocks/fp.hpp>
#include <horrocks/monomial.hpp>

namespace horrocks {

/// Sparse multivariate polynomial over a field K (Fp or BigRational).
/// Terms live in a grevlex-ordered map with no stored zero coefficients,
/// so the leading term is the last map entry.
template <class K>
class Polynomial {
public:
    using TermMap = std::map<Monomial, K, GrevlexLess>;

    Polynomial() = default;
    explicit Polynomial(TermMap terms) : terms_(std::move(terms)) { prune(); }
    Polynomial(const Monomial& m, const K& c)
    {
        if (!horrocks::is_zero(c))
            terms_.emplace(m, c);
    }

    static Polynomial zero() { return {}; }
    static Polynomial constant(const K& c) { return {Monomial(), c}; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree of the leading term; -1 marks the zero polynomial.
    int degree() const
    {
        return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
    }

    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d)
                return false;
        return true;
    }

    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const K& leading_coefficient() const { return terms_.rbegin()->second; }

    void add_term(const Monomial& m, const K& c)
    {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!horrocks::is_zero(c))
                terms_.emplace(m, c);
        } else {
            it->second += c;
            if (horrocks::is_zero(it->second))
                terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, -c);
        return r;
    }
    Polynomial operator-() const
    {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial scaled(const K& c) const
    {
        Polynomial r;
        if (horrocks::is_zero(c))
            return r;
        for (const auto& [m, cc] : terms_)
            r.terms_.emplace(m, cc * c);
        return r;
    }
    /// this * c * m
    Polynomial times_term(const Monomial& m, const K& c) const
    {
        Polynomial r;
        if (horrocks::is_zero(c))
            return r;
        for (const auto& [mm, cc] : terms_)
            r.terms_.emplace(mm * m, cc * c);
        return r;
    }
    Polynomial monic() const
    {
        if (terms_.empty())
            return *this;
        return scaled(one_like(leading_coefficient()) / leading_coefficient());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b)
    {
        return !(a == b);
    }

    K evaluate(const std::array<K, kNumVars>& point, const K& zero) const
    {
        K acc = zero;
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (int i = 0; i < kNumVars; ++i)
                for (int e = 0; e < m.exponent(i); ++e)
                    t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Deterministic text form, leading term first.
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const std::string cs = coeff_str(it->second);
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            if (it->first.is_one())
                os << mag;
            else if (mag == "1")
                os << it->first.str();
            else
                os << mag << '*' << it->first.str();
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p)
    {
        return os << p.str();
    }

private:
    static std::string coeff_str(const Fp& c)
    {
        return std::to_string(c.value());
    }
    static std::string coeff_str(const BigRational& c)
    {
        return c.str();
    }
    void prune()
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = horrocks::is_zero(it->second) ? terms_.erase(it)
                                               : std::next(it);
    }

    TermMap terms_;
};

using PolyFp = Polynomial<Fp>;
using PolyQ = Polynomial<BigRational>;

} // namespace horrocks

#endif
