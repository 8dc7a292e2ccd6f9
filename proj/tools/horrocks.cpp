// Command-line workbench for minimal monads on P^3 with c1 = 0: spectrum
// tables, candidate-shape classification, explicit monad verification, and
// moduli-dimension reports. All arithmetic is exact; all output is
// deterministic.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <horrocks/enumerator.hpp>
#include <horrocks/family.hpp>
#include <horrocks/monad.hpp>
#include <horrocks/report.hpp>
#include <horrocks/spectrum.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnclassified = 3;
constexpr int kExitFailedCheck = 4;
constexpr int kExitUndecided = 5;

constexpr std::int64_t kMaxDeskC2 = 24;

int cmd_spectra(std::int64_t c2, const std::string& format)
{
    if (c2 < 1 || c2 > kMaxDeskC2) {
        std::cerr << "spectra: --c2 must be between 1 and " << kMaxDeskC2
                  << "\n";
        return kExitUsage;
    }
    auto spectra = horrocks::enumerate_spectra(c2);
    std::cout << horrocks::render_spectra(c2, spectra,
                                          horrocks::parse_format(format));
    return kExitOk;
}

int cmd_enumerate(std::int64_t c2, bool include_eliminated,
                  const std::string& format)
{
    if (c2 < 1 || c2 > kMaxDeskC2) {
        std::cerr << "enumerate: --c2 must be between 1 and " << kMaxDeskC2
                  << "\n";
        return kExitUsage;
    }
    horrocks::ClassificationReport report =
        horrocks::classification_report(c2);
    if (c2 == 9 && report.negative_count() != 0) {
        std::cerr << "enumerate: internal error: negative candidates appeared "
                     "for c2 = 9\n";
        return kExitFailedCheck;
    }
    std::cout << horrocks::render_classification(
        report, include_eliminated, horrocks::parse_format(format));
    if (report.has_unclassified()) {
        std::cerr << "enumerate: " << report.count(
                         horrocks::CandidateStatus::Unclassified)
                  << " shape(s) not covered by the classification data:\n";
        for (const auto& c : report.candidates)
            if (c.status == horrocks::CandidateStatus::Unclassified)
                std::cerr << "  " << horrocks::spectrum_label(c2,
                                                              c.spectrum_index)
                          << "  a = " << horrocks::grouped(c.shape.a)
                          << "  b = " << horrocks::grouped(c.shape.b) << "\n";
        return kExitUnclassified;
    }
    return kExitOk;
}

int cmd_verify(const std::string& path, std::optional<std::int64_t> char_override,
               std::optional<int> degree_cap, const std::string& format)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "verify: cannot open " << path << "\n";
        return kExitUsage;
    }
    horrocks::MonadPresentation m;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        m = horrocks::monad_from_json(j);
    } catch (const std::exception& e) {
        std::cerr << "verify: " << path << ": " << e.what() << "\n";
        return kExitUsage;
    }
    if (char_override) {
        if (*char_override != 0 && !horrocks::is_prime(*char_override)) {
            std::cerr << "verify: --char must be 0 or a prime\n";
            return kExitUsage;
        }
        m.field_char = *char_override;
    }

    horrocks::VerifyOutcome out;
    bool c2_ok = true;
    try {
        out.validation = horrocks::validate_monad(m, degree_cap);
        try {
            out.c2 = horrocks::monad_c2(m);
        } catch (const std::invalid_argument& e) {
            c2_ok = false;
            out.spectrum_error = e.what();
        }
        bool structural = c2_ok && out.validation.degree_ok &&
                          out.validation.composition_zero;
        if (structural) {
            out.h0_at_zero = horrocks::h0_E(m, 0);
            out.stable = out.h0_at_zero == 0;
            int maxdeg = m.max_abs_degree();
            out.table = horrocks::cohomology_table(m, -2 * maxdeg, 2);
            if (out.stable) {
                try {
                    out.spectrum_text = horrocks::extract_spectrum(m).str();
                } catch (const horrocks::SpectrumExtractionError& e) {
                    out.spectrum_error = e.what();
                }
            } else {
                out.spectrum_error = "bundle is not stable";
            }
        } else {
            out.spectrum_error = "structural checks failed";
        }
    } catch (const horrocks::ResourceError& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitFailedCheck;
    }

    std::cout << horrocks::render_verify(out, horrocks::parse_format(format));
    bool pass = c2_ok && out.validation.all_pass() && out.stable &&
                !out.spectrum_text.empty();
    if (!pass && out.validation.any_undecided())
        return kExitUndecided;
    return pass ? kExitOk : kExitFailedCheck;
}

int cmd_family(std::optional<int> a, bool ein, std::int64_t field_char,
               const std::string& emit_path)
{
    if (static_cast<bool>(a) == ein) {
        std::cerr << "family: give exactly one of --a or --ein\n";
        return kExitUsage;
    }
    if (a && *a < 3) {
        std::cerr << "family: --a must be at least 3\n";
        return kExitUsage;
    }
    if (field_char != 0 && !horrocks::is_prime(field_char)) {
        std::cerr << "family: --char must be 0 or a prime\n";
        return kExitUsage;
    }
    horrocks::MonadPresentation m =
        ein ? horrocks::build_ein_x11(field_char)
            : horrocks::build_family_monad(*a, field_char);
    std::string text = horrocks::monad_to_json(m).dump(2) + "\n";
    if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        if (!out) {
            std::cerr << "family: cannot write " << emit_path << "\n";
            return kExitUsage;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return kExitOk;
}

int cmd_dimension(int a, const std::string& format)
{
    if (a < 3) {
        std::cerr << "dimension: --a must be at least 3\n";
        return kExitUsage;
    }
    std::cout << horrocks::render_dimension(horrocks::family_dimension(a),
                                            horrocks::parse_format(format));
    return kExitOk;
}

int cmd_report(std::int64_t c2, std::int64_t field_char,
               const std::string& format)
{
    if (c2 != 9) {
        std::cerr << "report: the component table is only established for "
                     "--c2 9\n";
        return kExitUsage;
    }
    std::cout << horrocks::render_components(
        horrocks::component_report(field_char),
        horrocks::parse_format(format));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact workbench for minimal monads on P^3 (c1 = 0)"};
    app.require_subcommand(1);

    std::string format = "md";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: md, csv or json")
            ->check(CLI::IsMember({"md", "csv", "json"}));
    };

    std::int64_t c2 = 9;
    bool include_eliminated = false;
    std::optional<std::int64_t> char_override;
    std::optional<int> degree_cap;
    std::int64_t field_char = 32003;
    std::string path;
    std::string emit_path;
    std::optional<int> family_a;
    bool ein = false;
    int dim_a = 3;

    auto* spectra = app.add_subcommand("spectra", "possible spectra for a c2");
    spectra->add_option("--c2", c2, "second Chern class")->required();
    add_format(spectra);

    auto* enumerate =
        app.add_subcommand("enumerate", "candidate monad shapes for a c2");
    enumerate->add_option("--c2", c2, "second Chern class")->required();
    enumerate->add_flag("--include-eliminated", include_eliminated,
                        "also list eliminated shapes with rule ids");
    add_format(enumerate);

    auto* verify =
        app.add_subcommand("verify", "verify an explicit monad (JSON file)");
    verify->add_option("path", path, "monad JSON file")->required();
    verify->add_option("--char", char_override,
                       "override the field characteristic (0 = rationals)");
    verify->add_option("--degree-cap", degree_cap,
                       "Hilbert-function degree cap for emptiness checks");
    add_format(verify);

    auto* family = app.add_subcommand(
        "family", "emit a built-in monad in the JSON interchange format");
    family->add_option("--a", family_a, "family parameter (>= 3)");
    family->add_flag("--ein", ein, "emit the one-generator X^9_11 monad");
    family->add_option("--char", field_char,
                       "field characteristic to record (0 = rationals)");
    family->add_option("--emit", emit_path, "write to this file");

    auto* dimension =
        app.add_subcommand("dimension", "family dimension breakdown");
    dimension->add_option("--a", dim_a, "family parameter (>= 3)")->required();
    add_format(dimension);

    auto* report = app.add_subcommand(
        "report", "moduli-component summary with distinguishing invariants");
    report->add_option("--c2", c2, "second Chern class (9)");
    report->add_option("--char", field_char,
                       "field characteristic for the recomputed invariants");
    add_format(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spectra->parsed())
            return cmd_spectra(c2, format);
        if (enumerate->parsed())
            return cmd_enumerate(c2, include_eliminated, format);
        if (verify->parsed())
            return cmd_verify(path, char_override, degree_cap, format);
        if (family->parsed())
            return cmd_family(family_a, ein, field_char, emit_path);
        if (dimension->parsed())
            return cmd_dimension(dim_a, format);
        if (report->parsed())
            return cmd_report(c2, field_char, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailedCheck;
    }
    return kExitUsage;
}
