#ifndef HORROCKS_PARSE_HPP
#define HORROCKS_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>

#include <horrocks/polynomial.hpp>

namespace horrocks {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " +
                             std::to_string(position)),
          position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Recursive-descent parser for the polynomial grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*')? factor)*      (juxtaposition = multiplication)
//   factor  := primary ('^' uint)?
//   primary := uint | 'x'|'y'|'z'|'w' | '(' expr ')'
template <class K>
class PolyParser {
public:
    PolyParser(const std::string& text, const K& one)
        : text_(text), one_(one)
    {
    }

    Polynomial<K> run()
    {
        Polynomial<K> p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" +
                                 std::string(1, text_[pos_]) + "'",
                             pos_);
        return p;
    }

private:
    Polynomial<K> expr()
    {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-')
            neg = (take() == '-');
        Polynomial<K> acc = term();
        if (neg)
            acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-')
                break;
            take();
            Polynomial<K> t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial<K> term()
    {
        Polynomial<K> acc = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                take();
                acc = acc * factor();
            } else if (is_var_char(c) || c == '(' || std::isdigit(
                           static_cast<unsigned char>(c))) {
                acc = acc * factor();
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                throw ParseError("unknown variable '" + std::string(1, c) +
                                     "'",
                                 pos_);
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial<K> factor()
    {
        Polynomial<K> base = primary();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            long e = integer("exponent");
            if (e < 0)
                throw ParseError("negative exponent", pos_);
            Polynomial<K> acc = Polynomial<K>::constant(one_);
            for (long i = 0; i < e; ++i)
                acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial<K> primary()
    {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            Polynomial<K> p = expr();
            skip_ws();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                take();
            BigInt n(text_.substr(start, pos_ - start));
            return Polynomial<K>::constant(from_int(n, one_));
        }
        if (is_var_char(c)) {
            take();
            int idx = var_index(c);
            Monomial m;
            m.exponent(idx) = 1;
            return Polynomial<K>(m, one_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError("unknown variable '" + std::string(1, c) + "'",
                             pos_);
        if (c == '\0')
            throw ParseError("unexpected end of input", pos_);
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         pos_);
    }

    long integer(const char* what)
    {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected ") + what, pos_);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (take() - '0');
            if (v > 1000000)
                throw ParseError("exponent too large", pos_);
        }
        return v;
    }

    static bool is_var_char(char c)
    {
        return c == 'x' || c == 'y' || c == 'z' || c == 'w';
    }
    static int var_index(char c)
    {
        switch (c) {
        case 'x': return 0;
        case 'y': return 1;
        case 'z': return 2;
        default: return 3;
        }
    }

    void skip_ws()
    {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    const std::string& text_;
    K one_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse polynomial text; coefficients are read as integers and mapped into
/// the field of `one`. Accepts non-homogeneous input (homogeneity is a
/// caller-side concern).
template <class K>
Polynomial<K> parse_poly(const std::string& text, const K& one)
{
    return detail::PolyParser<K>(text, one).run();
}

inline PolyFp parse_poly_fp(const std::string& text, std::int64_t p)
{
    return parse_poly<Fp>(text, Fp(1, p));
}

inline PolyQ parse_poly_q(const std::string& text)
{
    return parse_poly<BigRational>(text, BigRational(1));
}

} // namespace horrocks

#endif
