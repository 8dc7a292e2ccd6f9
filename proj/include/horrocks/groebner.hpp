#ifndef HORROCKS_GROEBNER_HPP
#define HORROCKS_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <horrocks/numeric.hpp>
#include <horrocks/polynomial.hpp>

namespace horrocks {

/// Homogeneous ideal with an optional cached reduced grevlex basis.
template <class K>
struct Ideal {
    std::vector<Polynomial<K>> generators;
    std::optional<std::vector<Polynomial<K>>> basis;

    static Ideal from_generators(std::vector<Polynomial<K>> gens)
    {
        std::vector<Polynomial<K>> kept;
        for (auto& g : gens) {
            if (g.is_zero())
                continue;
            if (!g.is_homogeneous())
                throw std::invalid_argument(
                    "Ideal: generator is not homogeneous: " + g.str());
            kept.push_back(std::move(g));
        }
        return Ideal{std::move(kept), std::nullopt};
    }
};

inline constexpr std::size_t kDefaultTermBudget = 2000000;

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g)
{
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    const K one = one_like(f.leading_coefficient());
    Polynomial<K> a =
        f.times_term(l / f.leading_monomial(), one / f.leading_coefficient());
    Polynomial<K> b =
        g.times_term(l / g.leading_monomial(), one / g.leading_coefficient());
    return a - b;
}

/// Full normal form of f against basis (every term reduced, not just the
/// leading one). `work` accumulates materialized terms for the budget guard.
template <class K>
Polynomial<K> normal_form(Polynomial<K> h, const std::vector<Polynomial<K>>& basis,
                          std::size_t* work = nullptr,
                          std::size_t budget = kDefaultTermBudget)
{
    Polynomial<K> remainder;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (!g.leading_monomial().divides(h.leading_monomial()))
                continue;
            const Monomial q = h.leading_monomial() / g.leading_monomial();
            const K c = h.leading_coefficient() / g.leading_coefficient();
            h = h - g.times_term(q, c);
            if (work) {
                *work += h.term_count();
                if (*work > budget)
                    throw ResourceError(
                        "groebner: term budget of " + std::to_string(budget) +
                        " exceeded during reduction");
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(h.leading_monomial(), h.leading_coefficient());
            h = h - Polynomial<K>(h.leading_monomial(), h.leading_coefficient());
        }
    }
    return remainder;
}

namespace detail {

template <class K>
void interreduce(std::vector<Polynomial<K>>& basis)
{
    for (auto& g : basis)
        g = g.monic();
    // drop elements whose lead is divisible by another retained lead
    std::vector<Polynomial<K>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial()))
                redundant = j < i ||
                            basis[j].leading_monomial() !=
                                basis[i].leading_monomial();
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    // tail-reduce each element against the others
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<K>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others).monic();
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Polynomial<K>& a, const Polynomial<K>& b) {
                  return grevlex_less(a.leading_monomial(),
                                      b.leading_monomial());
              });
    basis = std::move(minimal);
}

struct CriticalPair {
    std::size_t i, j;
    int lcm_degree;
};

} // namespace detail

/// Buchberger's algorithm, normal selection strategy (lcm degree, then
/// generator indices), product criterion, reduced basis on output.
/// Deterministic for a fixed generator list.
template <class K>
Ideal<K> buchberger(const Ideal<K>& ideal,
                    std::size_t term_budget = kDefaultTermBudget)
{
    if (ideal.basis)
        return ideal;
    std::vector<Polynomial<K>> basis;
    for (const auto& g : ideal.generators)
        if (!g.is_zero())
            basis.push_back(g.monic());

    std::size_t work = 0;
    std::vector<detail::CriticalPair> pairs;
    auto push_pairs_for = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (coprime(basis[i].leading_monomial(), basis[n].leading_monomial()))
                continue; // product criterion
            Monomial l = lcm(basis[i].leading_monomial(),
                             basis[n].leading_monomial());
            pairs.push_back({i, n, l.degree()});
        }
    };
    for (std::size_t n = 1; n < basis.size(); ++n)
        push_pairs_for(n);

    while (!pairs.empty()) {
        auto best = std::min_element(
            pairs.begin(), pairs.end(),
            [](const detail::CriticalPair& a, const detail::CriticalPair& b) {
                if (a.lcm_degree != b.lcm_degree)
                    return a.lcm_degree < b.lcm_degree;
                if (a.i != b.i)
                    return a.i < b.i;
                return a.j < b.j;
            });
        detail::CriticalPair cp = *best;
        pairs.erase(best);

        Polynomial<K> s = s_polynomial(basis[cp.i], basis[cp.j]);
        Polynomial<K> h = normal_form(std::move(s), basis, &work, term_budget);
        if (h.is_zero())
            continue;
        basis.push_back(h.monic());
        push_pairs_for(basis.size() - 1);
    }

    detail::interreduce(basis);
    Ideal<K> out = ideal;
    out.basis = std::move(basis);
    return out;
}

/// Number of degree-d standard monomials of the ideal (monomials divisible by
/// no basis lead monomial). Requires a computed basis. Negative d counts 0.
template <class K>
std::int64_t hilbert_function(const Ideal<K>& ideal, int d)
{
    if (!ideal.basis)
        throw std::logic_error("hilbert_function: basis not computed");
    if (d < 0)
        return 0;
    std::vector<Monomial> leads;
    for (const auto& g : *ideal.basis)
        leads.push_back(g.leading_monomial());
    std::int64_t count = 0;
    for_each_monomial_of_degree(d, [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m))
                return;
        ++count;
    });
    return count;
}

enum class Emptiness { Empty, NonemptyAtCap, Undecided };

struct EmptinessResult {
    Emptiness verdict;
    int vanish_degree = -1;             // degree certifying Empty
    std::optional<std::string> witness; // projective point for NonemptyAtCap

    bool empty() const { return verdict == Emptiness::Empty; }
};

namespace detail {

// Deterministic witness hunt on a small coordinate grid. Complete over F_p
// for p <= 5; elsewhere a heuristic (misses fall through to Undecided).
template <class K>
std::optional<std::string>
find_projective_zero(const std::vector<Polynomial<K>>& gens, const K& one,
                     std::int64_t grid)
{
    const K zero = zero_like(one);
    std::array<K, kNumVars> pt{zero, zero, zero, zero};
    std::array<std::int64_t, kNumVars> c{};
    auto value_of = [&](std::int64_t v) {
        K acc = zero;
        for (std::int64_t t = 0; t < v; ++t)
            acc += one;
        return acc;
    };
    for (c[0] = 0; c[0] < grid; ++c[0])
        for (c[1] = 0; c[1] < grid; ++c[1])
            for (c[2] = 0; c[2] < grid; ++c[2])
                for (c[3] = 0; c[3] < grid; ++c[3]) {
                    if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0)
                        continue;
                    for (int i = 0; i < kNumVars; ++i)
                        pt[i] = value_of(c[i]);
                    bool vanish = true;
                    for (const auto& g : gens)
                        if (!horrocks::is_zero(g.evaluate(pt, zero))) {
                            vanish = false;
                            break;
                        }
                    if (vanish) {
                        std::string s = "[" + std::to_string(c[0]) + ":" +
                                        std::to_string(c[1]) + ":" +
                                        std::to_string(c[2]) + ":" +
                                        std::to_string(c[3]) + "]";
                        return s;
                    }
                }
    return std::nullopt;
}

template <class K>
std::int64_t witness_grid(const K& sample)
{
    if constexpr (std::is_same_v<K, Fp>)
        return std::min<std::int64_t>(sample.modulus(), 6);
    else
        return 6;
}

} // namespace detail

/// Decide whether V(I) in P^3 is empty via Hilbert-function vanishing: once
/// hilbert_function(I, d) = 0 it stays 0, which certifies emptiness over the
/// algebraic closure. Undecided is reported when the cap is reached with no
/// witness point found.
template <class K>
EmptinessResult empty_projective_zero_locus(const Ideal<K>& ideal,
                                            int degree_cap,
                                            std::size_t term_budget =
                                                kDefaultTermBudget)
{
    if (ideal.generators.empty())
        return {Emptiness::NonemptyAtCap, -1, "[1:0:0:0]"};
    Ideal<K> with_basis = buchberger(ideal, term_budget);
    for (int d = 0; d <= degree_cap; ++d)
        if (hilbert_function(with_basis, d) == 0)
            return {Emptiness::Empty, d, std::nullopt};
    const K one = one_like(ideal.generators.front().leading_coefficient());
    auto witness = detail::find_projective_zero(ideal.generators, one,
                                                detail::witness_grid(one));
    if (witness)
        return {Emptiness::NonemptyAtCap, -1, witness};
    return {Emptiness::Undecided, -1, std::nullopt};
}

/// Default Hilbert-degree cap for emptiness checks on an ideal whose
/// generators have degree at most max_generator_degree.
inline int default_degree_cap(int max_generator_degree)
{
    return 4 * std::max(max_generator_degree, 1) + 8;
}

} // namespace horrocks

#endif
