#ifndef HORROCKS_REPORT_HPP
#define HORROCKS_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <horrocks/enumerator.hpp>
#include <horrocks/family.hpp>
#include <horrocks/monad.hpp>
#include <horrocks/spectrum.hpp>

namespace horrocks {

enum class OutputFormat { Markdown, Csv, Json };

inline OutputFormat parse_format(const std::string& s)
{
    if (s == "md")
        return OutputFormat::Markdown;
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "json")
        return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + s +
                                "' (expected md, csv or json)");
}

inline std::string spectrum_label(std::int64_t c2, int index)
{
    return "X^" + std::to_string(c2) + "_" + std::to_string(index);
}

/// "3, 1^4" style exponent grouping of a descending tuple.
inline std::string grouped(const std::vector<int>& values)
{
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < values.size()) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i])
            ++j;
        if (!first)
            os << ", ";
        os << values[i];
        if (j - i > 1)
            os << '^' << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

/// The published b notation: nonzero pair values once per pair, zero pairs
/// written doubled (a zero pair contributes two rank-one summands).
inline std::string b_paper_notation(const std::vector<int>& b)
{
    std::vector<int> nonzero;
    int zeros = 0;
    for (int v : b) {
        if (v == 0)
            ++zeros;
        else
            nonzero.push_back(v);
    }
    std::string s = grouped(nonzero);
    if (zeros > 0) {
        if (!s.empty())
            s += ", ";
        s += "0^" + std::to_string(2 * zeros);
    }
    return s;
}

inline std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

inline std::string join_ints(const std::vector<int>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// spectra table
// ---------------------------------------------------------------------------

inline std::string render_spectra(std::int64_t c2,
                                  const std::vector<Spectrum>& spectra,
                                  OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Markdown:
        os << "| label | spectrum | compact |\n|---|---|---|\n";
        for (std::size_t i = 0; i < spectra.size(); ++i)
            os << "| " << spectrum_label(c2, static_cast<int>(i) + 1) << " | "
               << spectra[i].str() << " | " << spectra[i].compact_str()
               << " |\n";
        break;
    case OutputFormat::Csv:
        os << "label,spectrum,compact\n";
        for (std::size_t i = 0; i < spectra.size(); ++i)
            os << spectrum_label(c2, static_cast<int>(i) + 1) << ','
               << csv_quote(spectra[i].str()) << ','
               << csv_quote(spectra[i].compact_str()) << '\n';
        break;
    case OutputFormat::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < spectra.size(); ++i) {
            nlohmann::json row;
            row["label"] = spectrum_label(c2, static_cast<int>(i) + 1);
            row["entries"] = spectra[i].full_multiset();
            row["compact"] = spectra[i].compact_str();
            arr.push_back(row);
        }
        os << arr.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// rho-bound table
// ---------------------------------------------------------------------------

/// One line per spectrum: the exact value at -k-1 and the interval at each
/// negative degree above it, matching the published table of generator
/// counts.
inline std::string render_rho_line(std::int64_t c2, int index,
                                   const Spectrum& sp)
{
    RhoBounds rb = rho_bounds(sp);
    std::ostringstream os;
    os << spectrum_label(c2, index) << " | k=" << rb.k << " | rho(" << -rb.k - 1
       << ")=" << rb.by_degree.at(-rb.k - 1).first;
    for (int i = 0; i < rb.k; ++i) {
        auto [lo, hi] = rb.by_degree.at(-i - 1);
        os << " | rho(" << -i - 1 << ") in {";
        for (int v = lo; v <= hi; ++v)
            os << (v == lo ? "" : ", ") << v;
        os << "}";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// classification table
// ---------------------------------------------------------------------------

inline const char* status_text(CandidateStatus s)
{
    switch (s) {
    case CandidateStatus::Exists: return "exists";
    case CandidateStatus::Eliminated: return "eliminated";
    case CandidateStatus::Open: return "open";
    default: return "unclassified";
    }
}

inline std::string render_classification(const ClassificationReport& report,
                                         bool include_eliminated,
                                         OutputFormat format)
{
    auto visible = [&](const MonadCandidate& c) {
        if (c.status == CandidateStatus::Eliminated)
            return include_eliminated;
        return true;
    };
    auto construction_text = [](const MonadCandidate& c) -> std::string {
        switch (c.status) {
        case CandidateStatus::Exists: return c.tag;
        case CandidateStatus::Open: return "?";
        case CandidateStatus::Eliminated: return "eliminated (" + c.tag + ")";
        default: return "unclassified";
        }
    };
    auto r_text = [](const MonadCandidate& c) -> std::string {
        if (c.status == CandidateStatus::Exists)
            return c.note;
        if (c.status == CandidateStatus::Open)
            return "?";
        return "-";
    };

    std::ostringstream os;
    switch (format) {
    case OutputFormat::Markdown: {
        os << "| spectrum | b | a | r | construction |\n|---|---|---|---|---|\n";
        for (const auto& c : report.candidates) {
            if (!visible(c))
                continue;
            os << "| " << spectrum_label(report.c2, c.spectrum_index) << " | "
               << b_paper_notation(c.shape.b) << " | " << grouped(c.shape.a)
               << " | " << r_text(c) << " | " << construction_text(c)
               << " |\n";
        }
        os << "\nexists: " << report.count(CandidateStatus::Exists)
           << "  open: " << report.count(CandidateStatus::Open)
           << "  eliminated: " << report.count(CandidateStatus::Eliminated)
           << "  unclassified: " << report.count(CandidateStatus::Unclassified)
           << "  negative: " << report.negative_count() << "\n";
        if (include_eliminated)
            for (const auto& ns : report.no_solutions)
                os << "no b-solution: "
                   << spectrum_label(report.c2, ns.spectrum_index)
                   << " with a = " << grouped(ns.a) << ", target "
                   << ns.target << "\n";
        break;
    }
    case OutputFormat::Csv: {
        os << "spectrum,b_pairs,b,a,positivity,status,r,construction\n";
        for (const auto& c : report.candidates) {
            if (!visible(c))
                continue;
            os << spectrum_label(report.c2, c.spectrum_index) << ','
               << csv_quote(join_ints(c.shape.b)) << ','
               << csv_quote(b_paper_notation(c.shape.b)) << ','
               << csv_quote(grouped(c.shape.a)) << ','
               << to_string(c.shape.positivity()) << ','
               << status_text(c.status) << ',' << csv_quote(r_text(c)) << ','
               << csv_quote(construction_text(c)) << '\n';
        }
        break;
    }
    case OutputFormat::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : report.candidates) {
            if (!visible(c))
                continue;
            nlohmann::json row;
            row["spectrum_label"] =
                spectrum_label(report.c2, c.spectrum_index);
            row["spectrum"] = c.spectrum.full_multiset();
            nlohmann::json rho = nlohmann::json::object();
            for (const auto& [d, v] : c.rho)
                rho[std::to_string(d)] = v;
            row["rho"] = rho;
            row["a"] = c.shape.a;
            row["b"] = c.shape.b;
            row["b_paper"] = b_paper_notation(c.shape.b);
            row["positivity"] = to_string(c.shape.positivity());
            row["status"] = status_text(c.status);
            if (c.status == CandidateStatus::Exists) {
                row["construction"] = c.tag;
                row["section_degree"] = c.note;
            } else if (c.status == CandidateStatus::Eliminated) {
                row["rule"] = c.tag;
            }
            if (!c.advisory.empty())
                row["advisory"] = c.advisory;
            arr.push_back(row);
        }
        os << arr.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// verification report
// ---------------------------------------------------------------------------

struct VerifyOutcome {
    MonadValidation validation;
    std::int64_t c2 = 0;
    bool stable = false;
    std::int64_t h0_at_zero = -1;
    std::vector<TwistCohomology> table;
    std::string spectrum_text; // empty when extraction was impossible
    std::string spectrum_error;
};

inline std::string check_line(const char* name, CheckStatus s,
                              const std::string& detail)
{
    std::string line = std::string("  ") + name + ": " + to_string(s);
    if (!detail.empty())
        line += " (" + detail + ")";
    return line + "\n";
}

inline std::string render_verify(const VerifyOutcome& v, OutputFormat format)
{
    if (format == OutputFormat::Json) {
        nlohmann::json j;
        j["degree_ok"] = v.validation.degree_ok;
        j["minimal"] = v.validation.minimal;
        j["composition_zero"] = v.validation.composition_zero;
        j["beta_surjective"] = to_string(v.validation.beta_surjective);
        j["alpha_left_invertible"] =
            to_string(v.validation.alpha_left_invertible);
        j["c2"] = v.c2;
        j["stable"] = v.stable;
        j["h0"] = v.h0_at_zero;
        if (!v.spectrum_text.empty())
            j["spectrum"] = v.spectrum_text;
        if (!v.spectrum_error.empty())
            j["spectrum_error"] = v.spectrum_error;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& t : v.table)
            rows.push_back({{"l", t.twist},
                            {"h0", t.h0},
                            {"h1", t.h1},
                            {"h2", t.h2},
                            {"h3", t.h3}});
        j["cohomology"] = rows;
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    auto flag = [](bool b) { return b ? "pass" : "fail"; };
    os << "checks\n";
    os << "  degree_ok: " << flag(v.validation.degree_ok) << "\n";
    os << "  minimal: " << flag(v.validation.minimal) << "\n";
    os << "  composition_zero: " << flag(v.validation.composition_zero)
       << "\n";
    {
        std::string detail;
        if (v.validation.beta_surjective == CheckStatus::Pass)
            detail = "Hilbert function vanishes in degree " +
                     std::to_string(v.validation.beta_empty_degree);
        else if (v.validation.beta_witness)
            detail = "common zero at " + *v.validation.beta_witness;
        os << check_line("beta_surjective", v.validation.beta_surjective,
                         detail);
    }
    {
        std::string detail;
        if (v.validation.alpha_left_invertible == CheckStatus::Pass)
            detail = "Hilbert function vanishes in degree " +
                     std::to_string(v.validation.alpha_empty_degree);
        else if (v.validation.alpha_witness)
            detail = "common zero at " + *v.validation.alpha_witness;
        os << check_line("alpha_left_invertible",
                         v.validation.alpha_left_invertible, detail);
    }
    os << "  c2: " << v.c2 << "\n";
    os << "  stable: " << (v.stable ? "yes" : "no") << " (h0 = " << v.h0_at_zero
       << ")\n";
    if (!v.spectrum_text.empty())
        os << "  spectrum: " << v.spectrum_text << "\n";
    if (!v.spectrum_error.empty())
        os << "  spectrum: unavailable (" << v.spectrum_error << ")\n";
    os << "\ncohomology table\n";
    if (format == OutputFormat::Csv) {
        os << "l,h0,h1,h2,h3\n";
        for (const auto& t : v.table)
            os << t.twist << ',' << t.h0 << ',' << t.h1 << ',' << t.h2 << ','
               << t.h3 << '\n';
    } else {
        os << "| l | h0 | h1 | h2 | h3 |\n|---|---|---|---|---|\n";
        for (const auto& t : v.table)
            os << "| " << t.twist << " | " << t.h0 << " | " << t.h1 << " | "
               << t.h2 << " | " << t.h3 << " |\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// dimension and component reports
// ---------------------------------------------------------------------------

inline std::string render_dimension(const DimensionBreakdown& d,
                                    OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        nlohmann::json j;
        j["dimH"] = d.dimH;
        j["dimW"] = d.dimW;
        j["dimGL"] = d.dimGL;
        j["dimG"] = d.dimG;
        j["dimV"] = d.dimV;
        j["expected"] = d.expected;
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "quantity,value\n";
        os << "dimH," << d.dimH << "\ndimW," << d.dimW << "\ndimGL," << d.dimGL
           << "\ndimG," << d.dimG << "\ndimV," << d.dimV << "\nexpected,"
           << d.expected << '\n';
        break;
    case OutputFormat::Markdown:
        os << "| quantity | value |\n|---|---|\n";
        os << "| dimH | " << d.dimH << " |\n| dimW | " << d.dimW
           << " |\n| dimGL | " << d.dimGL << " |\n| dimG | " << d.dimG
           << " |\n| dimV | " << d.dimV << " |\n| expected | " << d.expected
           << " |\n";
        break;
    }
    return os.str();
}

inline std::string render_components(const ComponentReport& r,
                                     OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : r.components)
            arr.push_back({{"name", c.name},
                           {"kind", c.kind},
                           {"dimension", c.dimension},
                           {"lower_bound", c.lower_bound},
                           {"provenance", c.provenance}});
        nlohmann::json j;
        j["components"] = arr;
        j["h1_family_at_minus3"] = r.h1_family_at_minus3;
        j["h1_ein_at_minus3"] = r.h1_ein_at_minus3;
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "component,kind,dimension,lower_bound,provenance\n";
        for (const auto& c : r.components)
            os << c.name << ',' << csv_quote(c.kind) << ',' << c.dimension
               << ',' << (c.lower_bound ? "yes" : "no") << ','
               << csv_quote(c.provenance) << '\n';
        os << "h1_family_at_minus3," << r.h1_family_at_minus3 << "\n";
        os << "h1_ein_at_minus3," << r.h1_ein_at_minus3 << "\n";
        break;
    case OutputFormat::Markdown:
        os << "| component | kind | dimension | provenance |\n"
              "|---|---|---|---|\n";
        for (const auto& c : r.components)
            os << "| " << c.name << " | " << c.kind << " | "
               << (c.lower_bound ? ">=" : "") << c.dimension << " | "
               << c.provenance << " |\n";
        os << "\ndistinguishing invariant h1(E(-3)): family a=3 gives "
           << r.h1_family_at_minus3 << "; the X^9_11 monad (generic of M3) "
           << "gives " << r.h1_ein_at_minus3 << "\n"
           << "semicontinuity keeps h1(E(-3)) >= " << r.h1_ein_at_minus3
           << " across M3, so the family lies outside it (recorded, not "
              "enforced)\n";
        break;
    }
    return os.str();
}

} // namespace horrocks

#endif
