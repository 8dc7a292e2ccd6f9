#ifndef HORROCKS_MONAD_HPP
#define HORROCKS_MONAD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <horrocks/dense_matrix.hpp>
#include <horrocks/groebner.hpp>
#include <horrocks/line_bundle.hpp>
#include <horrocks/parse.hpp>
#include <horrocks/poly_matrix.hpp>
#include <horrocks/spectrum.hpp>

namespace horrocks {

/// Monad A --alpha--> B --beta--> C of line-bundle sums, with the matrices
/// kept in polynomial text form (the canonical interchange representation).
/// Entry (i,j) of beta must be homogeneous of degree C[i] - B[j] or zero,
/// entry (j,k) of alpha homogeneous of degree B[j] - A[k] or zero.
struct MonadPresentation {
    std::int64_t field_char = 32003; // 0 selects exact rationals
    LineBundleSum A, B, C;
    std::vector<std::vector<std::string>> alpha; // |B| rows x |A| cols
    std::vector<std::vector<std::string>> beta;  // |C| rows x |B| cols

    int max_abs_degree() const
    {
        return std::max({A.max_abs_degree(), B.max_abs_degree(),
                         C.max_abs_degree()});
    }

    void check_shape() const
    {
        auto expect = [](std::size_t got, std::size_t want,
                         const std::string& what) {
            if (got != want)
                throw std::invalid_argument("monad shape mismatch: " + what +
                                            " has " + std::to_string(got) +
                                            " entries, expected " +
                                            std::to_string(want));
        };
        expect(alpha.size(), B.rank(), "alpha (rows)");
        for (std::size_t j = 0; j < alpha.size(); ++j)
            expect(alpha[j].size(), A.rank(),
                   "alpha[" + std::to_string(j) + "]");
        expect(beta.size(), C.rank(), "beta (rows)");
        for (std::size_t i = 0; i < beta.size(); ++i)
            expect(beta[i].size(), B.rank(), "beta[" + std::to_string(i) + "]");
    }
};

template <class K>
PolyMatrix<K> parse_matrix(const std::vector<std::vector<std::string>>& rows,
                           std::size_t cols, const K& one)
{
    PolyMatrix<K> m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = parse_poly(rows[i][j], one);
    return m;
}

/// Runs fn with a multiplicative unit of the presentation's field.
template <class Fn>
auto with_field_one(std::int64_t field_char, Fn&& fn)
{
    if (field_char == 0)
        return fn(BigRational(1));
    if (!is_prime(field_char))
        throw std::invalid_argument("field_char must be 0 or a prime, got " +
                                    std::to_string(field_char));
    return fn(Fp(1, field_char));
}

// ---------------------------------------------------------------------------
// Degree data: a-tuple, b-tuple, c2
// ---------------------------------------------------------------------------

/// c2 = sum a_i^2 - sum b_j^2 of the outer degrees and paired middle degrees.
inline std::int64_t chern_c2(const std::vector<int>& a_tuple,
                             const std::vector<int>& b_tuple)
{
    std::int64_t s = 0;
    for (int a : a_tuple)
        s += static_cast<std::int64_t>(a) * a;
    for (int b : b_tuple)
        s -= static_cast<std::int64_t>(b) * b;
    return s;
}

/// Pairs the middle degrees into (b, -b) couples and returns the non-negative
/// pair values, descending. Throws if B is not symmetric.
inline std::vector<int> b_tuple_of(const LineBundleSum& B)
{
    std::map<int, int> count;
    for (int d : B.degrees)
        ++count[d];
    std::vector<int> b;
    for (auto it = count.rbegin(); it != count.rend() && it->first > 0; ++it) {
        auto neg = count.find(-it->first);
        if (neg == count.end() || neg->second != it->second)
            throw std::invalid_argument(
                "middle term is not symmetric: degree " +
                std::to_string(it->first) + " unmatched");
        b.insert(b.end(), it->second, it->first);
    }
    if (count.count(0)) {
        if (count[0] % 2 != 0)
            throw std::invalid_argument(
                "middle term is not symmetric: odd number of degree-0 summands");
        b.insert(b.end(), count[0] / 2, 0);
    }
    return b;
}

/// a-tuple (degrees of C, descending) of a presentation.
inline std::vector<int> a_tuple_of(const MonadPresentation& m)
{
    std::vector<int> a = m.C.degrees;
    std::sort(a.rbegin(), a.rend());
    return a;
}

inline std::int64_t monad_c2(const MonadPresentation& m)
{
    return chern_c2(a_tuple_of(m), b_tuple_of(m.B));
}

// ---------------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------------

inline nlohmann::json monad_to_json(const MonadPresentation& m)
{
    nlohmann::json j;
    j["field_char"] = m.field_char;
    j["A"] = m.A.degrees;
    j["B"] = m.B.degrees;
    j["C"] = m.C.degrees;
    j["alpha"] = m.alpha;
    j["beta"] = m.beta;
    return j;
}

inline MonadPresentation monad_from_json(const nlohmann::json& j)
{
    auto require = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key))
            throw std::invalid_argument(std::string("missing field: ") + key);
        return j.at(key);
    };
    MonadPresentation m;
    const auto& fc = require("field_char");
    if (!fc.is_number_integer())
        throw std::invalid_argument("field_char: expected integer");
    m.field_char = fc.get<std::int64_t>();
    if (m.field_char != 0 && !is_prime(m.field_char))
        throw std::invalid_argument("field_char: must be 0 or a prime, got " +
                                    std::to_string(m.field_char));
    auto degrees = [&](const char* key) {
        const auto& arr = require(key);
        if (!arr.is_array())
            throw std::invalid_argument(std::string(key) +
                                        ": expected integer array");
        LineBundleSum s;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_number_integer())
                throw std::invalid_argument(std::string(key) + "[" +
                                            std::to_string(i) +
                                            "]: expected integer");
            s.degrees.push_back(arr[i].get<int>());
        }
        return s;
    };
    m.A = degrees("A");
    m.B = degrees("B");
    m.C = degrees("C");
    auto matrix = [&](const char* key) {
        const auto& arr = require(key);
        if (!arr.is_array())
            throw std::invalid_argument(std::string(key) +
                                        ": expected array of string rows");
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_array())
                throw std::invalid_argument(std::string(key) + "[" +
                                            std::to_string(i) +
                                            "]: expected string array");
            std::vector<std::string> row;
            for (std::size_t k = 0; k < arr[i].size(); ++k) {
                if (!arr[i][k].is_string())
                    throw std::invalid_argument(
                        std::string(key) + "[" + std::to_string(i) + "][" +
                        std::to_string(k) + "]: expected string");
                row.push_back(arr[i][k].get<std::string>());
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    m.alpha = matrix("alpha");
    m.beta = matrix("beta");
    m.check_shape();
    return m;
}

// ---------------------------------------------------------------------------
// Section-space linear algebra
// ---------------------------------------------------------------------------

/// Matrix of the map induced on degree-`twist` global sections, in monomial
/// bases ordered summand-major, grevlex-descending within each summand.
template <class K>
DenseMatrix<K> section_matrix(const PolyMatrix<K>& map,
                              const LineBundleSum& source,
                              const LineBundleSum& target, int twist,
                              const K& one)
{
    const K zero = zero_like(one);
    std::vector<std::int64_t> row_offset(target.rank() + 1, 0);
    for (std::size_t i = 0; i < target.rank(); ++i)
        row_offset[i + 1] =
            row_offset[i] + monomial_space_dim(target.degrees[i] + twist);
    std::vector<std::int64_t> col_offset(source.rank() + 1, 0);
    for (std::size_t j = 0; j < source.rank(); ++j)
        col_offset[j + 1] =
            col_offset[j] + monomial_space_dim(source.degrees[j] + twist);

    // position of each monomial within a fixed-degree block
    std::map<int, std::map<Monomial, std::int64_t, GrevlexLess>> index_of;
    auto block_index = [&](int degree)
        -> const std::map<Monomial, std::int64_t, GrevlexLess>& {
        auto it = index_of.find(degree);
        if (it == index_of.end()) {
            std::map<Monomial, std::int64_t, GrevlexLess> idx;
            std::int64_t pos = 0;
            for_each_monomial_of_degree(
                degree, [&](const Monomial& m) { idx.emplace(m, pos++); });
            it = index_of.emplace(degree, std::move(idx)).first;
        }
        return it->second;
    };

    DenseMatrix<K> out(static_cast<std::size_t>(row_offset.back()),
                       static_cast<std::size_t>(col_offset.back()), zero);
    for (std::size_t j = 0; j < source.rank(); ++j) {
        int src_deg = source.degrees[j] + twist;
        if (src_deg < 0)
            continue;
        std::int64_t col = col_offset[j];
        for_each_monomial_of_degree(src_deg, [&](const Monomial& basis_mon) {
            for (std::size_t i = 0; i < target.rank(); ++i) {
                int tgt_deg = target.degrees[i] + twist;
                if (tgt_deg < 0)
                    continue;
                const Polynomial<K>& entry = map.at(i, j);
                if (entry.is_zero())
                    continue;
                const auto& idx = block_index(tgt_deg);
                for (const auto& [mon, coeff] : entry.terms()) {
                    Monomial prod = mon * basis_mon;
                    auto pos = idx.find(prod);
                    if (pos == idx.end())
                        continue; // inhomogeneous entries are caught by
                                  // validation, not here
                    out.at(static_cast<std::size_t>(row_offset[i] +
                                                    pos->second),
                           static_cast<std::size_t>(col)) += coeff;
                }
            }
            ++col;
        });
    }
    return out;
}

/// Per-presentation cohomology calculator over one field; memoizes the
/// section-rank data per twist.
template <class K>
class CohomologyCalculator {
public:
    CohomologyCalculator(const MonadPresentation& m, const K& one)
        : m_(m), one_(one),
          alpha_(parse_matrix(m.alpha, m.A.rank(), one)),
          beta_(parse_matrix(m.beta, m.B.rank(), one))
    {
        m.check_shape();
    }

    /// h^1(E(l)) = h^0(C(l)) - rank H^0(beta(l)); valid at every twist
    /// because A, B, C are sums of line bundles.
    std::int64_t h1(int l)
    {
        return m_.C.h0(l) - beta_data(l).rank;
    }

    /// h^0(E(l)) = dim ker H^0(beta(l)) - h^0(A(l)).
    std::int64_t h0(int l)
    {
        const auto& d = beta_data(l);
        std::int64_t value = (d.cols - d.rank) - m_.A.h0(l);
        if (value < 0)
            throw std::logic_error(
                "h0: negative section count at twist " + std::to_string(l) +
                " (alpha does not inject on sections; invalid monad)");
        return value;
    }

    std::int64_t rank_of_beta_sections(int l) { return beta_data(l).rank; }

    const PolyMatrix<K>& alpha_matrix() const { return alpha_; }
    const PolyMatrix<K>& beta_matrix() const { return beta_; }

private:
    struct TwistData {
        std::int64_t rank;
        std::int64_t cols;
    };

    const TwistData& beta_data(int l)
    {
        auto it = memo_.find(l);
        if (it == memo_.end()) {
            DenseMatrix<K> s = section_matrix(beta_, m_.B, m_.C, l, one_);
            TwistData d{static_cast<std::int64_t>(s.rank()),
                        static_cast<std::int64_t>(s.cols())};
            it = memo_.emplace(l, d).first;
        }
        return it->second;
    }

    const MonadPresentation& m_;
    K one_;
    PolyMatrix<K> alpha_;
    PolyMatrix<K> beta_;
    std::map<int, TwistData> memo_;
};

inline std::int64_t h1_E(const MonadPresentation& m, int l)
{
    return with_field_one(m.field_char, [&](auto one) {
        CohomologyCalculator<decltype(one)> calc(m, one);
        return calc.h1(l);
    });
}

inline std::int64_t h0_E(const MonadPresentation& m, int l)
{
    return with_field_one(m.field_char, [&](auto one) {
        CohomologyCalculator<decltype(one)> calc(m, one);
        return calc.h0(l);
    });
}

/// Presentation of the dual bundle: transpose the matrices, negate and swap
/// the outer degree lists. For c1 = 0 stable rank-2 cohomology E ~ E*, which
/// the duality test suite exploits.
inline MonadPresentation dual_presentation(const MonadPresentation& m)
{
    MonadPresentation d;
    d.field_char = m.field_char;
    d.A = m.C.negated();
    d.B = m.B.negated();
    d.C = m.A.negated();
    auto transpose = [](const std::vector<std::vector<std::string>>& rows,
                        std::size_t cols) {
        std::vector<std::vector<std::string>> t(cols);
        for (auto& row : t)
            row.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                t[j][i] = rows[i][j];
        return t;
    };
    d.alpha = transpose(m.beta, m.B.rank());
    d.beta = transpose(m.alpha, m.A.rank());
    return d;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class CheckStatus { Pass, Fail, Undecided };

inline const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "undecided";
    }
}

struct MonadValidation {
    bool degree_ok = false;
    bool minimal = false;
    bool composition_zero = false;
    CheckStatus beta_surjective = CheckStatus::Fail;
    CheckStatus alpha_left_invertible = CheckStatus::Fail;
    int beta_empty_degree = -1;  // Hilbert degree certifying surjectivity
    int alpha_empty_degree = -1;
    std::optional<std::string> beta_witness;  // common zero when not empty
    std::optional<std::string> alpha_witness;

    bool all_pass() const
    {
        return degree_ok && minimal && composition_zero &&
               beta_surjective == CheckStatus::Pass &&
               alpha_left_invertible == CheckStatus::Pass;
    }
    bool any_undecided() const
    {
        return beta_surjective == CheckStatus::Undecided ||
               alpha_left_invertible == CheckStatus::Undecided;
    }
};

namespace detail {

template <class K>
bool degrees_ok(const PolyMatrix<K>& mat, const LineBundleSum& source,
                const LineBundleSum& target)
{
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            const auto& e = mat.at(i, j);
            if (e.is_zero())
                continue; // zero entry is compatible with any graded degree
            if (!e.is_homogeneous())
                return false;
            if (e.degree() != target.degrees[i] - source.degrees[j])
                return false;
        }
    return true;
}

template <class K>
bool matrix_minimal(const PolyMatrix<K>& mat)
{
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j)
            if (mat.at(i, j).is_constant() && !mat.at(i, j).is_zero())
                return false;
    return true;
}

/// Emptiness of the rank-dropping locus of `mat`, i.e. of the ideal of its
/// k x k minors where k = full rank.
template <class K>
EmptinessResult full_rank_locus(const PolyMatrix<K>& mat, std::size_t k,
                                std::optional<int> degree_cap)
{
    if (k > mat.rows() || k > mat.cols())
        return {Emptiness::NonemptyAtCap, -1, std::nullopt};
    std::vector<Polynomial<K>> mins = minors(mat, k);
    int max_deg = 1;
    for (const auto& p : mins)
        max_deg = std::max(max_deg, p.degree());
    int cap = degree_cap.value_or(default_degree_cap(max_deg));
    Ideal<K> ideal = Ideal<K>::from_generators(std::move(mins));
    return empty_projective_zero_locus(ideal, cap);
}

} // namespace detail

/// The five bundle-condition checks. Composition is always verified over the
/// rationals (ring of definition of the text matrices); the emptiness checks
/// run over the presentation's field.
inline MonadValidation validate_monad(const MonadPresentation& m,
                                      std::optional<int> degree_cap =
                                          std::nullopt)
{
    m.check_shape();
    MonadValidation v;

    // composition over the integers, independent of the working field
    {
        PolyMatrix<BigRational> alpha_q =
            parse_matrix(m.alpha, m.A.rank(), BigRational(1));
        PolyMatrix<BigRational> beta_q =
            parse_matrix(m.beta, m.B.rank(), BigRational(1));
        v.composition_zero = matrix_mul(beta_q, alpha_q).is_zero();
        v.degree_ok = detail::degrees_ok(alpha_q, m.A, m.B) &&
                      detail::degrees_ok(beta_q, m.B, m.C);
        v.minimal = detail::matrix_minimal(alpha_q) &&
                    detail::matrix_minimal(beta_q);
    }

    with_field_one(m.field_char, [&](auto one) {
        using K = decltype(one);
        PolyMatrix<K> alpha = parse_matrix(m.alpha, m.A.rank(), one);
        PolyMatrix<K> beta = parse_matrix(m.beta, m.B.rank(), one);

        EmptinessResult bs =
            detail::full_rank_locus(beta, m.C.rank(), degree_cap);
        EmptinessResult al =
            detail::full_rank_locus(alpha, m.A.rank(), degree_cap);
        auto to_status = [](const EmptinessResult& r) {
            switch (r.verdict) {
            case Emptiness::Empty: return CheckStatus::Pass;
            case Emptiness::NonemptyAtCap: return CheckStatus::Fail;
            default: return CheckStatus::Undecided;
            }
        };
        v.beta_surjective = to_status(bs);
        v.alpha_left_invertible = to_status(al);
        v.beta_empty_degree = bs.vanish_degree;
        v.alpha_empty_degree = al.vanish_degree;
        v.beta_witness = bs.witness;
        v.alpha_witness = al.witness;
        return 0;
    });
    return v;
}

// ---------------------------------------------------------------------------
// Cohomology table and spectrum extraction
// ---------------------------------------------------------------------------

struct TwistCohomology {
    int twist;
    std::int64_t h0, h1, h2, h3;
};

/// h^0/h^1 computed from the section matrices; h^2/h^3 from self-duality
/// (h^2(E(l)) = h^1(E(-l-4)), h^3(E(l)) = h^0(E(-l-4)) for c1 = 0).
inline std::vector<TwistCohomology> cohomology_table(const MonadPresentation& m,
                                                     int lmin, int lmax)
{
    return with_field_one(m.field_char, [&](auto one) {
        CohomologyCalculator<decltype(one)> calc(m, one);
        std::vector<TwistCohomology> rows;
        for (int l = lmin; l <= lmax; ++l)
            rows.push_back({l, calc.h0(l), calc.h1(l), calc.h1(-l - 4),
                            calc.h0(-l - 4)});
        return rows;
    });
}

class SpectrumExtractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads the spectrum off the h^1 ladder: h^1(E(-l)) for l = 1, 2, ... until
/// it vanishes (and stays zero), first differences n_l, then multiplicities
/// mult(k) = n_{k+1} - n_{k+2} and mult(0) = 2 n_1 - c2. Every reconstruction
/// step is cross-checked; failures raise SpectrumExtractionError.
inline Spectrum extract_spectrum(const MonadPresentation& m)
{
    return with_field_one(m.field_char, [&](auto one) {
        CohomologyCalculator<decltype(one)> calc(m, one);
        if (calc.h0(0) != 0)
            throw SpectrumExtractionError(
                "spectrum: cohomology bundle is not stable (h0 = " +
                std::to_string(calc.h0(0)) + ")");
        const std::int64_t c2 = monad_c2(m);

        std::vector<std::int64_t> h1_at; // h1_at[l-1] = h^1(E(-l))
        const int guard = 2 * m.max_abs_degree() + 6;
        for (int l = 1;; ++l) {
            std::int64_t v = calc.h1(-l);
            h1_at.push_back(v);
            if (v == 0) {
                if (calc.h1(-l - 1) != 0)
                    throw SpectrumExtractionError(
                        "spectrum: h1 ladder has a gap at twist " +
                        std::to_string(-l - 1));
                break;
            }
            if (l > guard)
                throw SpectrumExtractionError(
                    "spectrum: h1 ladder does not terminate by twist " +
                    std::to_string(-guard));
        }

        const int kmax = static_cast<int>(h1_at.size()) - 2; // n_l = 0 beyond
        std::vector<std::int64_t> n(h1_at.size());
        for (std::size_t i = 0; i < h1_at.size(); ++i) {
            std::int64_t next = i + 1 < h1_at.size() ? h1_at[i + 1] : 0;
            n[i] = h1_at[i] - next; // n_{i+1}
            if (n[i] < 0)
                throw SpectrumExtractionError(
                    "spectrum: negative first difference at twist " +
                    std::to_string(-static_cast<int>(i) - 1));
        }

        std::vector<int> mult(static_cast<std::size_t>(std::max(kmax, 0)) + 1,
                              0);
        std::int64_t mult0 = 2 * n[0] - c2;
        if (mult0 < 1)
            throw SpectrumExtractionError(
                "spectrum: multiplicity of 0 reconstructs to " +
                std::to_string(mult0));
        mult[0] = static_cast<int>(mult0);
        for (int k = 1; k <= kmax; ++k) {
            std::int64_t nk1 = n[static_cast<std::size_t>(k)];
            std::int64_t nk2 = static_cast<std::size_t>(k + 1) < n.size()
                                   ? n[static_cast<std::size_t>(k + 1)]
                                   : 0;
            std::int64_t mk = nk1 - nk2;
            if (mk < 1)
                throw SpectrumExtractionError(
                    "spectrum: multiplicity of " + std::to_string(k) +
                    " reconstructs to " + std::to_string(mk));
            mult[static_cast<std::size_t>(k)] = static_cast<int>(mk);
        }

        Spectrum sp = Spectrum::from_multiplicities(std::move(mult));
        if (sp.c2() != c2)
            throw SpectrumExtractionError(
                "spectrum: size " + std::to_string(sp.c2()) +
                " does not match c2 = " + std::to_string(c2));
        for (std::size_t i = 0; i < h1_at.size(); ++i) {
            int l = -static_cast<int>(i) - 1;
            if (h1_predicted(sp, l) != h1_at[i])
                throw SpectrumExtractionError(
                    "spectrum: h1 re-prediction fails at twist " +
                    std::to_string(l));
        }
        return sp;
    });
}

} // namespace horrocks

#endif
