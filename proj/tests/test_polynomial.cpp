#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <horrocks/family.hpp>
#include <horrocks/parse.hpp>
#include <horrocks/poly_matrix.hpp>

using namespace horrocks;

namespace {

PolyFp random_homogeneous(std::mt19937& rng, int degree, std::int64_t p)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    PolyFp out;
    for_each_monomial_of_degree(degree, [&](const Monomial& m) {
        int c = coeff(rng);
        if (c != 0)
            out.add_term(m, Fp(c, p));
    });
    return out;
}

} // namespace

TEST_CASE("parse basic polynomials")
{
    auto p = parse_poly_fp("x*w^5 - y*z^5", 32003);
    CHECK(p.term_count() == 2);
    CHECK(p.degree() == 6);
    CHECK(p.is_homogeneous());

    CHECK(parse_poly_fp("x - x", 32003).is_zero());
    CHECK(parse_poly_fp("x - x", 32003).degree() == -1);

    auto w5 = parse_poly_fp("w^5", 32003);
    CHECK(w5.term_count() == 1);
    CHECK(w5.leading_coefficient() == Fp(1, 32003));

    CHECK(parse_poly_fp("(x+y)*(x-y)", 7) ==
          parse_poly_fp("x^2 - y^2", 7));
    CHECK(parse_poly_fp("3x^2y", 7) == parse_poly_fp("3*x^2*y", 7));
    CHECK(parse_poly_fp("10*x", 7) == parse_poly_fp("3*x", 7));
    CHECK(parse_poly_q("2 - 2").is_zero());
}

TEST_CASE("parse errors carry a position")
{
    CHECK_THROWS_AS(parse_poly_fp("x + a", 7), ParseError);
    try {
        parse_poly_fp("x + a", 7);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("unknown variable") !=
              std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly_fp("x +", 7), ParseError);
    CHECK_THROWS_AS(parse_poly_fp("(x", 7), ParseError);
    CHECK_THROWS_AS(parse_poly_fp("x^", 7), ParseError);
}

TEST_CASE("degree is additive for products")
{
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        PolyFp f = random_homogeneous(rng, 1 + trial % 3, 32003);
        PolyFp g = random_homogeneous(rng, 1 + (trial / 3) % 3, 32003);
        if (f.is_zero() || g.is_zero())
            continue;
        CHECK((f * g).degree() == f.degree() + g.degree());
    }
}

TEST_CASE("grevlex order on degree-2 monomials")
{
    // x^2 > xy > y^2 > xz > yz > z^2 > xw > yw > zw > w^2
    std::vector<Monomial> seen;
    for_each_monomial_of_degree(2, [&](const Monomial& m) {
        seen.push_back(m);
    });
    REQUIRE(seen.size() == 10);
    CHECK(seen[0] == Monomial(2, 0, 0, 0));
    CHECK(seen[1] == Monomial(1, 1, 0, 0));
    CHECK(seen[2] == Monomial(0, 2, 0, 0));
    CHECK(seen[3] == Monomial(1, 0, 1, 0));
    CHECK(seen[9] == Monomial(0, 0, 0, 2));
    for (std::size_t i = 0; i + 1 < seen.size(); ++i)
        CHECK(grevlex_less(seen[i + 1], seen[i]));
}

TEST_CASE("matrix multiplication")
{
    const std::int64_t p = 32003;
    PolyMatrix<Fp> id2(2, 2);
    id2.at(0, 0) = parse_poly_fp("1", p);
    id2.at(1, 1) = parse_poly_fp("1", p);
    PolyMatrix<Fp> m(2, 3);
    m.at(0, 0) = parse_poly_fp("x", p);
    m.at(0, 2) = parse_poly_fp("y^2", p);
    m.at(1, 1) = parse_poly_fp("z*w", p);
    auto prod = matrix_mul(id2, m);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(prod.at(i, j) == m.at(i, j));

    PolyMatrix<Fp> a(1, 1), b(1, 1);
    a.at(0, 0) = parse_poly_fp("x", p);
    b.at(0, 0) = parse_poly_fp("y", p);
    CHECK(matrix_mul(a, b).at(0, 0) == parse_poly_fp("x*y", p));

    CHECK_THROWS_AS(matrix_mul(m, id2), std::invalid_argument);
}

TEST_CASE("composition of the explicit family monad vanishes over Q")
{
    for (int a = 3; a <= 5; ++a) {
        MonadPresentation m = build_family_monad(a);
        auto alpha = parse_matrix(m.alpha, m.A.rank(), BigRational(1));
        auto beta = parse_matrix(m.beta, m.B.rank(), BigRational(1));
        CHECK(matrix_mul(beta, alpha).is_zero());
    }
}

TEST_CASE("matrix multiplication is associative")
{
    std::mt19937 rng(7);
    const std::int64_t p = 101;
    auto random_matrix = [&](std::size_t r, std::size_t c) {
        PolyMatrix<Fp> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = random_homogeneous(rng, 1, p);
        return m;
    };
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_matrix(2, 3), b = random_matrix(3, 2),
             c = random_matrix(2, 2);
        auto lhs = matrix_mul(matrix_mul(a, b), c);
        auto rhs = matrix_mul(a, matrix_mul(b, c));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(lhs.at(i, j) == rhs.at(i, j));
    }
}

TEST_CASE("minors of the family beta matrix")
{
    const std::int64_t p = 32003;
    MonadPresentation m = build_family_monad(3);
    auto beta = parse_matrix(m.beta, m.B.rank(), Fp(1, p));
    auto mins = minors(beta, 2);
    REQUIRE(mins.size() == 15); // C(6,2) column pairs
    for (const auto& f : mins)
        CHECK(f.is_homogeneous());
    // spot-check three minors by hand expansion
    // columns (0,1): x*x - 0*y
    CHECK(mins[0] == parse_poly_fp("x^2", p));
    // columns (0,4): x*x^2 - y^2*y
    CHECK(mins[3] == parse_poly_fp("x^3 - y^3", p));
    // columns (2,3): w^5*w^5 - z^5*z^5
    CHECK(mins[9] == parse_poly_fp("w^10 - z^10", p));
    // columns (2,4): w^5*x^2 - y^2*z^5
    CHECK(mins[10] == parse_poly_fp("x^2*w^5 - y^2*z^5", p));
}

TEST_CASE("minors edge cases")
{
    const std::int64_t p = 7;
    PolyMatrix<Fp> id2(2, 2);
    id2.at(0, 0) = parse_poly_fp("1", p);
    id2.at(1, 1) = parse_poly_fp("1", p);
    auto mins = minors(id2, 2);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0] == parse_poly_fp("1", p));

    PolyMatrix<Fp> col(4, 1);
    col.at(0, 0) = parse_poly_fp("x", p);
    col.at(1, 0) = parse_poly_fp("y^5", p);
    col.at(2, 0) = parse_poly_fp("z^5", p);
    col.at(3, 0) = parse_poly_fp("w^9", p);
    auto entries = minors(col, 1);
    REQUIRE(entries.size() == 4);
    CHECK(entries[1] == parse_poly_fp("y^5", p));

    // a selected zero row kills every minor through it
    PolyMatrix<Fp> zrow(3, 3);
    zrow.at(0, 0) = parse_poly_fp("x", p);
    zrow.at(0, 1) = parse_poly_fp("y", p);
    zrow.at(2, 1) = parse_poly_fp("z", p);
    zrow.at(2, 2) = parse_poly_fp("w", p);
    for (const auto& f : minors(zrow, 3))
        CHECK(f.is_zero());

    CHECK_THROWS_AS(minors(id2, 3), std::invalid_argument);
    CHECK_THROWS_AS(minors(id2, 0), std::invalid_argument);
}

TEST_CASE("polynomial text form round trips")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        PolyFp f = random_homogeneous(rng, 2, 97);
        CHECK(parse_poly_fp(f.str(), 97) == f);
    }
    CHECK(PolyFp().str() == "0");
}
