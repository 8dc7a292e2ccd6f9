#ifndef HORROCKS_SPECTRUM_HPP
#define HORROCKS_SPECTRUM_HPP

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace horrocks {

/// Spectrum of a stable rank-2 bundle with c1 = 0: a symmetric, connected
/// multiset of c2 integers. Stored one-sided as multiplicities s(0..k) of the
/// non-negative support (symmetry supplies the mirror half).
class Spectrum {
public:
    Spectrum() = default;

    /// mult[k] = multiplicity of k (and of -k); every entry must be >= 1.
    static Spectrum from_multiplicities(std::vector<int> mult)
    {
        Spectrum sp;
        sp.mult_ = std::move(mult);
        std::string why;
        if (!sp.well_formed(&why))
            throw std::invalid_argument("Spectrum: " + why);
        return sp;
    }

    /// Accepts the full multiset, e.g. {-1,-1,0,1,1}; it must already be
    /// symmetric and connected.
    static Spectrum from_multiset(std::vector<int> entries)
    {
        if (entries.empty())
            throw std::invalid_argument("Spectrum: empty multiset");
        std::sort(entries.begin(), entries.end());
        int k = std::max(-entries.front(), entries.back());
        std::vector<int> mult(static_cast<std::size_t>(k) + 1, 0);
        std::vector<int> mult_neg(static_cast<std::size_t>(k) + 1, 0);
        for (int e : entries)
            (e >= 0 ? mult[e] : mult_neg[-e])++;
        for (int j = 1; j <= k; ++j)
            if (mult[j] != mult_neg[j])
                throw std::invalid_argument(
                    "Spectrum: multiset is not symmetric at " +
                    std::to_string(j));
        return from_multiplicities(std::move(mult));
    }

    int max_support() const { return static_cast<int>(mult_.size()) - 1; }

    /// Multiplicity of k (= multiplicity of -k); 0 outside the support.
    int multiplicity(int k) const
    {
        int a = k < 0 ? -k : k;
        return a < static_cast<int>(mult_.size()) ? mult_[a] : 0;
    }

    std::int64_t c2() const
    {
        std::int64_t s = mult_[0];
        for (std::size_t j = 1; j < mult_.size(); ++j)
            s += 2 * mult_[j];
        return s;
    }

    const std::vector<int>& multiplicities() const { return mult_; }

    std::vector<int> full_multiset() const
    {
        std::vector<int> out;
        for (int j = max_support(); j >= 1; --j)
            out.insert(out.end(), mult_[j], -j);
        out.insert(out.end(), mult_[0], 0);
        for (int j = 1; j <= max_support(); ++j)
            out.insert(out.end(), mult_[j], j);
        return out;
    }

    /// Sorted comma-separated text form: "-2,-1,-1,0,1,1,2".
    std::string str() const
    {
        std::ostringstream os;
        bool first = true;
        for (int e : full_multiset()) {
            if (!first)
                os << ',';
            os << e;
            first = false;
        }
        return os.str();
    }

    /// Compact exponent form: "{-2,-1^2,0^3,1^2,2}".
    std::string compact_str() const
    {
        std::ostringstream os;
        os << '{';
        bool first = true;
        auto emit = [&](int value, int count) {
            if (!first)
                os << ',';
            os << value;
            if (count > 1)
                os << '^' << count;
            first = false;
        };
        for (int j = max_support(); j >= 1; --j)
            emit(-j, mult_[j]);
        emit(0, mult_[0]);
        for (int j = 1; j <= max_support(); ++j)
            emit(j, mult_[j]);
        os << '}';
        return os.str();
    }

    bool well_formed(std::string* why = nullptr) const
    {
        return spectrum_conditions_ok(mult_, why);
    }

    /// Validity of a one-sided multiplicity vector as a stable-bundle
    /// spectrum (connectedness, the multiplicity-one tail condition,
    /// monotonicity away from zero, dominance of the zero multiplicity).
    /// Symmetry holds by construction in this representation.
    static bool spectrum_conditions_ok(const std::vector<int>& mult,
                                       std::string* why = nullptr)
    {
        auto fail = [&](const std::string& msg) {
            if (why)
                *why = msg;
            return false;
        };
        if (mult.empty())
            return fail("empty support");
        const int k = static_cast<int>(mult.size()) - 1;
        for (int j = 0; j <= k; ++j)
            if (mult[j] < 1)
                return fail("support gap at " + std::to_string(j) +
                            " (connectedness)");
        // once an index >= 2 has multiplicity 1, all larger indices must too
        for (int u = 2; u <= k; ++u)
            if (mult[u] == 1) {
                for (int j = u; j <= k; ++j)
                    if (mult[j] != 1)
                        return fail("multiplicity-one tail violated at " +
                                    std::to_string(j));
                break;
            }
        // multiplicities cannot grow away from zero
        for (int j = 1; j < k; ++j)
            if (mult[j] < mult[j + 1])
                return fail("multiplicity increases from " +
                            std::to_string(j) + " to " + std::to_string(j + 1));
        // a zero multiplicity of three or more strictly dominates s(1)
        if (mult[0] >= 3 && k >= 1 && mult[1] >= mult[0])
            return fail("zero multiplicity " + std::to_string(mult[0]) +
                        " does not dominate s(1) = " + std::to_string(mult[1]));
        return true;
    }

    friend bool operator==(const Spectrum& a, const Spectrum& b)
    {
        return a.mult_ == b.mult_;
    }
    friend bool operator!=(const Spectrum& a, const Spectrum& b)
    {
        return !(a == b);
    }

private:
    std::vector<int> mult_;
};

/// Reads either text form ("-1,-1,0,1,1") or compact form ("{-1^2,0,1^2}").
inline Spectrum parse_spectrum(const std::string& text)
{
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}')
            throw std::invalid_argument("parse_spectrum: unbalanced '{'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> entries;
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t caret = item.find('^');
        int count = 1;
        std::string value = item;
        if (caret != std::string::npos) {
            value = item.substr(0, caret);
            count = std::stoi(item.substr(caret + 1));
            if (count < 1)
                throw std::invalid_argument(
                    "parse_spectrum: multiplicity must be positive");
        }
        entries.insert(entries.end(), count, std::stoi(value));
    }
    return Spectrum::from_multiset(std::move(entries));
}

/// Count of spectrum entries >= l-1 (first difference of the h^1 ladder).
inline std::int64_t n_l(const Spectrum& sp, int l)
{
    if (l < 1)
        throw std::invalid_argument("n_l: requires l >= 1");
    std::int64_t count = 0;
    for (int e : sp.full_multiset())
        if (e >= l - 1)
            ++count;
    return count;
}

/// h^1(E(l)) predicted from the spectrum for l <= -1: each entry k
/// contributes h^0(P^1, O(k + l + 1)) = max(0, k + l + 2).
inline std::int64_t h1_predicted(const Spectrum& sp, int l)
{
    if (l > -1)
        throw std::invalid_argument("h1_predicted: requires l <= -1");
    std::int64_t s = 0;
    for (int e : sp.full_multiset())
        s += std::max<std::int64_t>(0, e + l + 2);
    return s;
}

/// All spectra with |spectrum| = c2, ordered as the published table:
/// descending lexicographic on the multiplicity vector (s(0), s(1), ...).
inline std::vector<Spectrum> enumerate_spectra(std::int64_t c2)
{
    if (c2 < 1)
        throw std::invalid_argument("enumerate_spectra: c2 must be >= 1");
    std::vector<Spectrum> out;
    std::vector<int> mult;
    auto extend = [&](auto&& self, std::int64_t remaining) -> void {
        if (remaining == 0) {
            if (Spectrum::spectrum_conditions_ok(mult))
                out.push_back(Spectrum::from_multiplicities(mult));
            return;
        }
        for (std::int64_t s = remaining / 2; s >= 1; --s) {
            mult.push_back(static_cast<int>(s));
            self(self, remaining - 2 * s);
            mult.pop_back();
        }
    };
    // s(0) >= 1 (connectedness forces 0 into the support) with the parity of
    // c2; each multiplicity at k >= 1 is mirrored and costs 2.
    for (std::int64_t s0 = c2 % 2 == 0 ? 2 : 1; s0 <= c2; s0 += 2) {
        mult.assign(1, static_cast<int>(s0));
        extend(extend, c2 - s0);
    }
    std::sort(out.begin(), out.end(), [](const Spectrum& a, const Spectrum& b) {
        return std::lexicographical_compare(
            b.multiplicities().begin(), b.multiplicities().end(),
            a.multiplicities().begin(), a.multiplicities().end());
    });
    return out;
}

} // namespace horrocks

#endif
