#ifndef HORROCKS_ENUMERATOR_HPP
#define HORROCKS_ENUMERATOR_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <horrocks/monad.hpp>
#include <horrocks/spectrum.hpp>

namespace horrocks {

// ---------------------------------------------------------------------------
// Bounds on the minimal-generator counts rho(d) of the first cohomology
// module, by degree d, derived from the spectrum.
// ---------------------------------------------------------------------------

struct RhoBounds {
    int k = 0; // max support of the spectrum
    // degree -> inclusive interval [lo, hi]; degree -k-1 is exact
    std::map<int, std::pair<int, int>> by_degree;
};

/// rho(-k-1) = s(k) exactly; for 0 <= i < k,
/// max(0, s(i) - 2 sum_{j>i} s(j)) <= rho(-i-1) <= s(i) - 1; and at
/// non-negative degrees i the cap is rho(i) <= max(s(i+1) - 2, 0).
inline RhoBounds rho_bounds(const Spectrum& sp)
{
    RhoBounds rb;
    rb.k = sp.max_support();
    const int k = rb.k;
    rb.by_degree[-k - 1] = {sp.multiplicity(k), sp.multiplicity(k)};
    for (int i = 0; i < k; ++i) {
        int tail = 0;
        for (int j = i + 1; j <= k; ++j)
            tail += sp.multiplicity(j);
        int lo = std::max(0, sp.multiplicity(i) - 2 * tail);
        int hi = sp.multiplicity(i) - 1;
        rb.by_degree[-i - 1] = {lo, hi};
    }
    for (int i = 0; i + 1 <= k; ++i) {
        int hi = std::max(sp.multiplicity(i + 1) - 2, 0);
        rb.by_degree[i] = {0, hi};
    }
    return rb;
}

// ---------------------------------------------------------------------------
// Monad shapes
// ---------------------------------------------------------------------------

enum class Positivity { Positive, NonNegative, Negative };

inline const char* to_string(Positivity p)
{
    switch (p) {
    case Positivity::Positive: return "positive";
    case Positivity::NonNegative: return "nonnegative";
    default: return "negative";
    }
}

/// Degree data of a symmetric-middle monad: a = degrees of the outer terms,
/// b = non-negative pair values of the middle term, |b| = |a| + 1.
struct MonadShape {
    std::vector<int> a; // descending
    std::vector<int> b; // descending, non-negative

    std::int64_t c2() const { return chern_c2(a, b); }

    Positivity positivity() const
    {
        int mn = a.empty() ? 0 : *std::min_element(a.begin(), a.end());
        if (mn > 0)
            return Positivity::Positive;
        return mn == 0 ? Positivity::NonNegative : Positivity::Negative;
    }

    friend bool operator==(const MonadShape& x, const MonadShape& y)
    {
        return x.a == y.a && x.b == y.b;
    }
};

/// All descending tuples of n non-negative integers with sum of squares =
/// target, in descending lexicographic order.
inline std::vector<std::vector<int>> square_sum_tuples(std::int64_t target,
                                                       std::size_t n)
{
    std::vector<std::vector<int>> out;
    if (target < 0)
        return out;
    std::vector<int> cur;
    auto extend = [&](auto&& self, std::int64_t remaining, int cap,
                      std::size_t slots) -> void {
        if (slots == 0) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        int top = cap;
        while (static_cast<std::int64_t>(top) * top > remaining)
            --top;
        for (int v = top; v >= 0; --v) {
            cur.push_back(v);
            self(self, remaining - static_cast<std::int64_t>(v) * v, v,
                 slots - 1);
            cur.pop_back();
        }
    };
    int cap = 0;
    while (static_cast<std::int64_t>(cap + 1) * (cap + 1) <= target)
        ++cap;
    extend(extend, target, cap, n);
    return out;
}

/// One rho assignment within the bounds, with its induced a-tuple and the
/// b-tuples solving sum b^2 = sum a^2 - c2 (empty when there is no solution
/// or the target is negative).
struct ShapeFamily {
    std::map<int, int> rho; // degree -> generator count, zero entries kept
    std::vector<int> a;     // descending
    std::int64_t target;    // sum a^2 - c2
    std::vector<std::vector<int>> b_solutions;
};

/// Enumerates every rho assignment within rho_bounds(sp), lexicographically
/// over the degree sequence (-1, -2, ..., -k-1, 0, 1, ...), values ascending.
inline std::vector<ShapeFamily> shapes_for(const Spectrum& sp, std::int64_t c2)
{
    if (sp.c2() != c2)
        throw std::invalid_argument("shapes_for: spectrum size " +
                                    std::to_string(sp.c2()) +
                                    " does not match c2 = " +
                                    std::to_string(c2));
    RhoBounds rb = rho_bounds(sp);
    std::vector<int> degree_seq;
    for (int d = -1; d >= -rb.k - 1; --d)
        degree_seq.push_back(d);
    for (int d = 0; d < rb.k; ++d)
        degree_seq.push_back(d);

    std::vector<ShapeFamily> out;
    std::map<int, int> rho;
    auto emit = [&]() {
        ShapeFamily fam;
        fam.rho = rho;
        // generator in degree d contributes the summand O(-d) to A, hence
        // the entry -d to the a-tuple
        for (const auto& [d, count] : rho)
            fam.a.insert(fam.a.end(), count, -d);
        std::sort(fam.a.rbegin(), fam.a.rend());
        std::int64_t sum_sq = 0;
        for (int ai : fam.a)
            sum_sq += static_cast<std::int64_t>(ai) * ai;
        fam.target = sum_sq - c2;
        if (fam.target >= 0 && !fam.a.empty())
            fam.b_solutions = square_sum_tuples(fam.target, fam.a.size() + 1);
        out.push_back(std::move(fam));
    };
    auto assign = [&](auto&& self, std::size_t pos) -> void {
        if (pos == degree_seq.size()) {
            emit();
            return;
        }
        int d = degree_seq[pos];
        auto [lo, hi] = rb.by_degree.at(d);
        for (int v = lo; v <= hi; ++v) {
            rho[d] = v;
            self(self, pos + 1);
        }
        rho.erase(d);
    };
    assign(assign, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Elimination rules and the classification table
// ---------------------------------------------------------------------------

enum class CandidateStatus { Exists, Eliminated, Open, Unclassified };

struct MonadCandidate {
    int spectrum_index = 0; // 1-based position in enumerate_spectra order
    Spectrum spectrum;
    std::map<int, int> rho;
    MonadShape shape;
    CandidateStatus status = CandidateStatus::Unclassified;
    std::string tag;      // construction tag (Exists) or rule id (Eliminated)
    std::string note;     // section-degree provenance for Exists rows
    std::string advisory; // annotation only; never affects the status
};

/// Rule R1: a = (a2, a1^g) and three middle pair values strictly between a1
/// and a2 whose sum reaches a2 force a destabilizing rank-2 kernel subsheaf.
inline bool rule_r1_applies(const MonadShape& shape)
{
    if (shape.a.size() < 2)
        return false;
    int a2 = shape.a.front();
    int a1 = shape.a.back();
    if (a1 < 0 || a2 <= a1)
        return false;
    for (std::size_t i = 1; i < shape.a.size(); ++i)
        if (shape.a[i] != a1)
            return false; // needs exactly one copy of the top degree
    std::vector<int> between;
    for (int b : shape.b)
        if (b > a1 && b < a2)
            between.push_back(b);
    if (between.size() < 3)
        return false;
    std::sort(between.rbegin(), between.rend());
    return between[0] + between[1] + between[2] >= a2;
}

namespace detail {

struct ShapeKey {
    std::vector<int> a, b;
    bool operator<(const ShapeKey& o) const
    {
        return std::tie(a, b) < std::tie(o.a, o.b);
    }
};

inline const std::vector<ShapeKey>& rule_r2_shapes()
{
    static const std::vector<ShapeKey> shapes = {
        {{3, 1, 1, 1, 1}, {1, 1, 1, 1, 0, 0}},
        {{4, 1}, {2, 2, 0}},
        {{3, 2, 2}, {2, 2, 0, 0}},
        {{3, 1, 1, 1}, {1, 1, 1, 0, 0}},
        {{4, 1, 1}, {2, 2, 1, 0}},
    };
    return shapes;
}

inline const std::vector<ShapeKey>& rule_r3_shapes()
{
    static const std::vector<ShapeKey> shapes = {
        {{2, 2, 2, 2}, {2, 1, 1, 1, 0}},
        {{3, 3}, {3, 0, 0}},
        {{3, 3, 2}, {3, 2, 0, 0}},
        // nonnegative counterparts of the first shape
        {{2, 2, 2, 2, 0}, {2, 1, 1, 1, 0, 0}},
        {{2, 2, 2, 2, 0, 0}, {2, 1, 1, 1, 0, 0, 0}},
    };
    return shapes;
}

inline const std::vector<ShapeKey>& rule_r4_shapes()
{
    static const std::vector<ShapeKey> shapes = {
        {{3, 2, 0}, {2, 0, 0, 0}},
        {{3, 2, 2, 0}, {2, 2, 0, 0, 0}},
    };
    return shapes;
}

struct ExistsEntry {
    int spectrum_index; // within the c2 = 9 enumeration order
    ShapeKey key;
    const char* tag;
    const char* section_degree;
};

inline const std::vector<ExistsEntry>& exists_table_c2_9()
{
    static const std::vector<ExistsEntry> rows = {
        {1, {{1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
         "Instanton", "1"},
        {2, {{2, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0}},
         "(b): 8(2, i), P_1 or (b): 5(1), C_{2,2}", "<=2"},
        {2, {{2, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 0, 0, 0}},
         "(b): 8(2, ii), P_1", "1"},
        {3, {{2, 2, 1}, {0, 0, 0, 0}}, "(b): 8(3, i), P_1", "1"},
        {3, {{2, 2, 1, 1}, {1, 0, 0, 0, 0}}, "(b): 8(3, ii), P_1", "1"},
        {3, {{2, 2, 1, 1, 1}, {1, 1, 0, 0, 0, 0}}, "(b): 8(3, iii), P_1", "1"},
        {3, {{2, 2, 1, 1, 1, 1}, {1, 1, 1, 0, 0, 0, 0}},
         "(b): 8(3, iv), P_1", "1"},
        {4, {{3, 1}, {1, 0, 0}}, "(b): 8(6, i), P_1", "1"},
        {4, {{3, 1, 1}, {1, 1, 0, 0}}, "(b): 8(6, ii), P_1", "1"},
        {4, {{3, 1, 1, 1, 1}, {2, 0, 0, 0, 0, 0}}, "(b): 8(5), P_1", "1"},
        {5, {{3}, {0, 0}}, "Ein", "3"},
        {5, {{3, 2}, {2, 0, 0}}, "(b): 5(4), C_{2,2}", "2"},
        {5, {{3, 1}, {1, 0, 0}}, "(b): 8(6, i), P_1", "1"},
        {5, {{3, 2, 1}, {2, 1, 0, 0}}, "(b): 8(6, iii), P_1", "1"},
        {5, {{3, 1, 1}, {1, 1, 0, 0}}, "(b): 8(6, ii), P_1", "1"},
        {5, {{3, 2, 1, 1}, {2, 1, 1, 0, 0}}, "(b): 8(6, iv), P_1", "1"},
        {6, {{4, 1, 1}, {3, 0, 0, 0}}, "(b): 8(7), P_1", "1"},
        {7, {{2, 2, 2, 2, 0, 0}, {1, 1, 1, 1, 1, 1, 1}}, "C_{1,4}", "-"},
        {8, {{3, 2}, {2, 0, 0}}, "(b): 5(2), P_1", "2"},
        {9, {{3, 3}, {2, 2, 1}}, "(a): C_{3,2}", "1"},
        {9, {{3, 3, 2}, {2, 2, 2, 1}},
         "(a): P_2 u P_3 joined at two points", "1"},
        {10, {{4, 2}, {3, 1, 1}}, "(a): P_4 u P_1 joined at a point", "1"},
        {11, {{5}, {4, 0}}, "(a): P_5", "1"},
    };
    return rows;
}

inline const std::vector<std::pair<int, ShapeKey>>& open_table_c2_9()
{
    static const std::vector<std::pair<int, ShapeKey>> rows = {
        {8, {{3, 2, 0}, {1, 1, 1, 1}}},
        {8, {{3, 2, 2, 0}, {2, 1, 1, 1, 1}}},
    };
    return rows;
}

inline bool shape_in(const std::vector<ShapeKey>& list, const MonadShape& s)
{
    for (const auto& key : list)
        if (key.a == s.a && key.b == s.b)
            return true;
    return false;
}

} // namespace detail

/// Fill in the status of a candidate. Rules are applied in a fixed order:
/// the R1 predicate, then the exact-match lists R2/R3/R4, then the known
/// existence table for c2 = 9, then the generic instanton and Ein families.
/// Anything left over is flagged Unclassified, never silently dropped.
inline MonadCandidate classify_candidate(MonadCandidate c)
{
    const MonadShape& s = c.shape;
    if (!s.a.empty() && !s.b.empty() && s.b.front() == s.a.front())
        c.advisory = "b_max = a_max: likely section";
    if (rule_r1_applies(s)) {
        c.status = CandidateStatus::Eliminated;
        c.tag = "R1";
        return c;
    }
    if (detail::shape_in(detail::rule_r2_shapes(), s)) {
        c.status = CandidateStatus::Eliminated;
        c.tag = "R2";
        return c;
    }
    if (detail::shape_in(detail::rule_r3_shapes(), s)) {
        c.status = CandidateStatus::Eliminated;
        c.tag = "R3";
        return c;
    }
    if (detail::shape_in(detail::rule_r4_shapes(), s)) {
        c.status = CandidateStatus::Eliminated;
        c.tag = "R4";
        return c;
    }
    if (c.spectrum.c2() == 9) {
        for (const auto& row : detail::exists_table_c2_9())
            if (row.spectrum_index == c.spectrum_index && row.key.a == s.a &&
                row.key.b == s.b) {
                c.status = CandidateStatus::Exists;
                c.tag = row.tag;
                c.note = row.section_degree;
                return c;
            }
        for (const auto& [idx, key] : detail::open_table_c2_9())
            if (idx == c.spectrum_index && key.a == s.a && key.b == s.b) {
                c.status = CandidateStatus::Open;
                c.tag = "?";
                c.note = "?";
                return c;
            }
    }
    // generic families, independent of c2
    bool all_ones = !s.a.empty() && std::all_of(s.a.begin(), s.a.end(),
                                                [](int v) { return v == 1; });
    bool all_zero_b = std::all_of(s.b.begin(), s.b.end(),
                                  [](int v) { return v == 0; });
    if (all_ones && all_zero_b &&
        c.spectrum.max_support() == 0) {
        c.status = CandidateStatus::Exists;
        c.tag = "Instanton";
        c.note = "-";
        return c;
    }
    if (s.a.size() == 1 && s.b.size() == 2 && s.a[0] > s.b[0] &&
        s.b[0] >= s.b[1] && s.b[1] >= 0) {
        c.status = CandidateStatus::Exists;
        c.tag = "Ein";
        c.note = "-";
        return c;
    }
    c.status = CandidateStatus::Unclassified;
    c.tag = "unclassified";
    return c;
}

struct NoSolutionRecord {
    int spectrum_index;
    std::map<int, int> rho;
    std::vector<int> a;
    std::int64_t target;
};

struct ClassificationReport {
    std::int64_t c2 = 0;
    std::vector<Spectrum> spectra; // enumeration order, 1-based labels
    std::vector<MonadCandidate> candidates;
    std::vector<NoSolutionRecord> no_solutions;

    std::size_t count(CandidateStatus st) const
    {
        std::size_t n = 0;
        for (const auto& c : candidates)
            if (c.status == st)
                ++n;
        return n;
    }
    std::size_t negative_count() const
    {
        std::size_t n = 0;
        for (const auto& c : candidates)
            if (c.shape.positivity() == Positivity::Negative)
                ++n;
        return n;
    }
    bool has_unclassified() const
    {
        return count(CandidateStatus::Unclassified) > 0;
    }
};

/// Full pipeline: enumerate spectra, bound rho, generate shapes, classify.
inline ClassificationReport classification_report(std::int64_t c2)
{
    ClassificationReport report;
    report.c2 = c2;
    report.spectra = enumerate_spectra(c2);
    for (std::size_t si = 0; si < report.spectra.size(); ++si) {
        const Spectrum& sp = report.spectra[si];
        for (const ShapeFamily& fam : shapes_for(sp, c2)) {
            if (fam.target < 0)
                continue; // no middle term can realize the shape
            if (fam.b_solutions.empty()) {
                report.no_solutions.push_back({static_cast<int>(si) + 1,
                                               fam.rho, fam.a, fam.target});
                continue;
            }
            for (const auto& b : fam.b_solutions) {
                MonadCandidate c;
                c.spectrum_index = static_cast<int>(si) + 1;
                c.spectrum = sp;
                c.rho = fam.rho;
                c.shape = MonadShape{fam.a, b};
                report.candidates.push_back(classify_candidate(std::move(c)));
            }
        }
    }
    return report;
}

} // namespace horrocks

#endif
