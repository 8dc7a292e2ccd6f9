#ifndef HORROCKS_FAMILY_HPP
#define HORROCKS_FAMILY_HPP

#include <string>
#include <vector>

#include <horrocks/monad.hpp>

namespace horrocks {

namespace detail {

inline std::string power(const char* var, int exp)
{
    if (exp == 0)
        return "1";
    if (exp == 1)
        return var;
    return std::string(var) + "^" + std::to_string(exp);
}

} // namespace detail

/// The infinite family of positive minimal monads
///   2 O(-a) -> 2 O(a-1) + 2 O(1-a) + O(1) + O(-1) -> 2 O(a),  a >= 3,
/// with the explicit matrices whose exponents are parameterized by a.
/// Its cohomology is stable with c2 = 4a - 3.
inline MonadPresentation build_family_monad(int a,
                                            std::int64_t field_char = 32003)
{
    if (a < 3)
        throw std::invalid_argument("build_family_monad: requires a >= 3");
    using detail::power;
    const std::string w_e = power("w", 2 * a - 1);
    const std::string z_e = power("z", 2 * a - 1);
    const std::string y_d = power("y", a - 1);
    const std::string x_d = power("x", a - 1);
    const std::string z_f = power("z", a + 1);
    const std::string x_g = power("x", a - 2);
    const std::string z_g = power("z", a - 2);

    MonadPresentation m;
    m.field_char = field_char;
    m.A.degrees = {-a, -a};
    m.B.degrees = {a - 1, a - 1, 1 - a, 1 - a, 1, -1};
    m.C.degrees = {a, a};
    m.beta = {
        {"x", "0", w_e, z_e, y_d, z_f},
        {"y", "x", z_e, w_e, x_d, "0"},
    };
    m.alpha = {
        {w_e, "0"},
        {z_e, w_e + "+" + x_g + "*" + z_f},
        {"-x", "0"},
        {"-y", "-x"},
        {"0", "-" + z_f},
        {"y*" + z_g, "x*" + z_g + "+" + y_d},
    };
    return m;
}

/// The one-generator monad O(-5) -> O(4) + 2 O + O(-4) -> O(5) realizing the
/// widest c2 = 9 spectrum {-4,...,4}. The published shape is matched with the
/// simplest pairwise-cancelling matrices, verified by the validator.
inline MonadPresentation build_ein_x11(std::int64_t field_char = 32003)
{
    MonadPresentation m;
    m.field_char = field_char;
    m.A.degrees = {-5};
    m.B.degrees = {4, 0, 0, -4};
    m.C.degrees = {5};
    m.beta = {{"x", "y^5", "z^5", "w^9"}};
    m.alpha = {{"w^9"}, {"-z^5"}, {"y^5"}, {"-x"}};
    return m;
}

// ---------------------------------------------------------------------------
// Moduli-family dimension count
// ---------------------------------------------------------------------------

struct DimensionBreakdown {
    std::int64_t dimH;  // homomorphisms defining the family
    std::int64_t dimW;  // relations absorbed by the middle symmetry
    std::int64_t dimGL; // gl of the outer term
    std::int64_t dimG;  // symmetry group of the middle term
    std::int64_t dimV;  // dimH - dimW - dimGL - dimG
    std::int64_t expected; // 8 c2 - 3 for the ambient moduli space
};

/// Dimension of the family of a-parameterized monads, computed three ways
/// (binomial breakdown, product form, closed form) which must agree.
inline DimensionBreakdown family_dimension(int a)
{
    if (a < 3)
        throw std::invalid_argument("family_dimension: requires a >= 3");
    DimensionBreakdown d;
    d.dimH = 16 + 2 * binomial(a + 2, 3) + 2 * binomial(a + 4, 3) +
             4 * binomial(2 * a + 2, 3);
    d.dimW = binomial(2 * a + 3, 3);
    d.dimGL = 4;
    d.dimG = 15 + 2 * binomial(a + 1, 3) + 2 * binomial(a + 3, 3) +
             3 * binomial(2 * a + 1, 3);
    d.dimV = d.dimH - d.dimW - d.dimGL - d.dimG;
    const std::int64_t c2 = 4 * static_cast<std::int64_t>(a) - 3;
    d.expected = 8 * c2 - 3; // = 32a - 27

    const std::int64_t product_form = static_cast<std::int64_t>(a) * (a + 1) +
                                      static_cast<std::int64_t>(a + 3) *
                                          (a + 2) +
                                      static_cast<std::int64_t>(2 * a + 1) *
                                          (2 * a - 1) -
                                      3;
    const std::int64_t closed_form =
        6 * static_cast<std::int64_t>(a) * a + 6 * a + 2;
    if (d.dimV != product_form || d.dimV != closed_form)
        throw std::logic_error("family_dimension: the three expressions "
                               "disagree at a = " +
                               std::to_string(a));
    return d;
}

/// Expected moduli dimension 32a - 27 and whether the family exceeds it
/// (always, since the excess 6a^2 - 26a + 29 is positive).
inline std::pair<std::int64_t, bool> exceeds_expected(int a)
{
    if (a < 3)
        throw std::invalid_argument("exceeds_expected: requires a >= 3");
    std::int64_t expected = 32 * static_cast<std::int64_t>(a) - 27;
    std::int64_t excess =
        6 * static_cast<std::int64_t>(a) * a - 26 * a + 29;
    return {expected, excess > 0};
}

// ---------------------------------------------------------------------------
// Component report for c2 = 9
// ---------------------------------------------------------------------------

struct ModuliComponent {
    std::string name;
    std::string kind;
    std::int64_t dimension;
    bool lower_bound; // dimension is only known to be >=
    std::string provenance;
};

struct ComponentReport {
    std::vector<ModuliComponent> components;
    std::int64_t h1_family_at_minus3; // distinguishing invariant of M4
    std::int64_t h1_ein_at_minus3;    // distinguishing invariant of M3
};

/// The four known components of the c2 = 9 moduli space. The two Ein
/// dimensions are recorded constants; the new component's bound and the
/// distinguishing h^1(-3) values are recomputed from the explicit monads.
inline ComponentReport component_report(std::int64_t field_char = 32003)
{
    ComponentReport r;
    const std::int64_t expected = 8 * 9 - 3;
    r.components.push_back({"M1", "Hartshorne (instanton)", expected, false,
                            "expected dimension 8*c2 - 3"});
    r.components.push_back({"M2", "Ein", 69, false, "external constant"});
    r.components.push_back({"M3", "Ein", 96, false, "external constant"});
    DimensionBreakdown d = family_dimension(3);
    r.components.push_back({"M4", "new family V(3^2;2,1)", d.dimV, true,
                            "computed family dimension at a = 3"});
    r.h1_family_at_minus3 = h1_E(build_family_monad(3, field_char), -3);
    r.h1_ein_at_minus3 = h1_E(build_ein_x11(field_char), -3);
    return r;
}

} // namespace horrocks

#endif
