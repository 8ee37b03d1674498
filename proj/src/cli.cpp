#include "szf/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "szf/format.hpp"
#include "szf/invariants.hpp"
#include "szf/json_io.hpp"
#include "szf/staircase.hpp"
#include "szf/zeta.hpp"

namespace szf {

namespace {

using nlohmann::json;

enum class Format { plain, json, latex };

std::optional<Format> format_from_name(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    return std::nullopt;
}

json read_json_document(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    return json::parse(in);
}

/// Zeta input: inline grammar string, or a JSON document (path or "-").
struct ZetaInput {
    std::string text;
    std::string file;

    void attach(CLI::App* cmd) {
        auto* t = cmd->add_option("--zeta", text, "zeta as \"P(t)/((1+d1t)(1+d2t)...)\"");
        cmd->add_option("--file", file, "zeta as a JSON document ('-' for stdin)")->excludes(t);
    }

    RationalSeries load() const {
        if (!text.empty()) return parse_zeta(text);
        if (!file.empty()) return zeta_from_json(read_json_document(file));
        throw CLI::RequiredError("--zeta or --file");
    }
};

std::vector<BigInt> to_bigints(const std::vector<std::string>& strings) {
    std::vector<BigInt> out;
    out.reserve(strings.size());
    for (const std::string& s : strings) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw FormatError("not a decimal integer: '" + s + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw FormatError("not a decimal integer: '" + s + "'");
        out.emplace_back(s);
    }
    return out;
}

// "7,0;5,1;4,2" -> exponent vectors
std::vector<ExponentVector> parse_generators(const std::string& text) {
    std::vector<ExponentVector> gens;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        long a = 0, b = 0;
        char comma = 0;
        std::stringstream ps(pair);
        if (!(ps >> a >> comma >> b) || comma != ',' || (ps >> std::ws, !ps.eof()))
            throw FormatError("malformed generator '" + pair + "' (expected \"a,b\")");
        gens.push_back({a, b});
    }
    return gens;
}

json expansion_to_json(const IntPoly& p, std::size_t order) {
    json arr = json::array();
    for (std::size_t k = 0; k <= order; ++k) arr.push_back(p.coeff(k).get_str());
    return arr;
}

std::string join_longs(const std::vector<long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

/// Zeta-producing commands share one output shape: the reduced zeta, an
/// optional expansion, and command-specific extras.
struct ZetaOutput {
    ZetaOutput(const SegreZeta& z, std::optional<std::size_t> order)
        : zeta(z), expand_order(order) {}

    const SegreZeta& zeta;
    std::optional<std::size_t> expand_order;
    json extras = json::object();
    std::vector<std::string> extra_lines;

    void emit(std::ostream& out, Format format) const {
        IntPoly expansion;
        if (expand_order) expansion = series_expand(zeta.rat(), *expand_order);
        switch (format) {
            case Format::plain:
                out << to_plain(zeta.rat()) << "\n";
                if (expand_order) out << to_plain(expansion) << "\n";
                for (const auto& line : extra_lines) out << line << "\n";
                break;
            case Format::latex:
                out << to_latex(zeta.rat()) << "\n";
                if (expand_order) out << to_latex(expansion) << "\n";
                break;
            case Format::json: {
                json doc = extras;
                doc["zeta"] = zeta_to_json(zeta.rat());
                doc["codim"] = zeta.codim();
                doc["degree"] = zeta.degree().get_str();
                if (expand_order) doc["expansion"] = expansion_to_json(expansion, *expand_order);
                emit_json(out, doc);
                break;
            }
        }
    }
};

// --expand with an optional value: default is twice the reduced denominator
// degree, past the numerator where the recurrence takes over.
std::optional<std::size_t> effective_order(CLI::App* cmd, const std::string& value,
                                           const SegreZeta& z) {
    if (cmd->count("--expand") == 0) return std::nullopt;
    if (value.empty()) return 2 * z.rat().denominator.size();
    try {
        return static_cast<std::size_t>(std::stoul(value));
    } catch (const std::exception&) {
        throw CLI::ConversionError(value, "--expand");
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Segre zeta functions of homogeneous ideals: exact construction,\n"
                 "series expansion, and derived projective invariants.",
                 "szf"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "plain";
    if (const char* env = std::getenv("SZF_FORMAT"))
        if (format_from_name(env)) format_name = env;
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"plain", "json", "latex"}));

    std::string expand_value;
    auto add_expand = [&](CLI::App* cmd) {
        cmd->add_option("--expand", expand_value, "also print the series expansion to this order")
            ->expected(0, 1);
    };

    // --- ci ---
    auto* ci = app.add_subcommand("ci", "zeta of a complete intersection");
    std::vector<long> ci_degrees;
    ci->add_option("degrees", ci_degrees, "generator degrees")->required();
    add_expand(ci);

    // --- monomial ---
    auto* monomial = app.add_subcommand("monomial", "zeta of a 2-variable monomial ideal");
    std::string monomial_gens, monomial_file;
    monomial->add_option("--gens", monomial_gens, "generators as \"a,b;a,b;...\"");
    monomial->add_option("--file", monomial_file, "monomial-ideal JSON document ('-' for stdin)");
    add_expand(monomial);

    // --- bootstrap ---
    auto* bootstrap = app.add_subcommand(
        "bootstrap", "reconstruct a zeta from generator degrees and truncated Segre-class data");
    std::vector<long> bootstrap_degrees;
    std::vector<std::string> bootstrap_segre;
    std::string bootstrap_file;
    bootstrap->add_option("--degrees", bootstrap_degrees, "generator degrees")
        ->required()
        ->delimiter(',');
    bootstrap->add_option("--segre", bootstrap_segre, "Segre coefficients a_0,a_1,...")
        ->delimiter(',');
    bootstrap->add_option("--segre-file", bootstrap_file,
                          "Segre-class JSON document ('-' for stdin)");
    add_expand(bootstrap);

    // --- linsys ---
    auto* linsys = app.add_subcommand("linsys", "zeta of a scheme cut out by a linear system");
    long linsys_d = 0, linsys_n = 0;
    std::vector<std::string> linsys_counts;
    linsys->add_option("--d", linsys_d, "degree of the system")->required();
    linsys->add_option("--n", linsys_n, "ambient dimension")->required();
    linsys->add_option("--counts", linsys_counts, "intersection counts N_0,...,N_n")
        ->required()
        ->delimiter(',');
    add_expand(linsys);

    // --- product ---
    auto* product = app.add_subcommand("product", "zeta of a sum of splayed ideals");
    std::vector<std::string> product_zetas, product_files;
    product->add_option("--zeta", product_zetas, "factor zeta (repeatable)");
    product->add_option("--file", product_files, "factor zeta JSON document (repeatable)");
    add_expand(product);

    // --- expand ---
    auto* expand_cmd = app.add_subcommand("expand", "series expansion of a zeta");
    ZetaInput expand_input;
    expand_input.attach(expand_cmd);
    long expand_order = -1;
    expand_cmd->add_option("--order", expand_order, "expansion order");

    // --- ranks ---
    auto* ranks = app.add_subcommand("ranks", "polar degrees and dual-variety data");
    ZetaInput ranks_input;
    ranks_input.attach(ranks);
    long ranks_n = 0;
    long ranks_tail = -1;
    ranks->add_option("--n", ranks_n, "ambient dimension")->required();
    ranks->add_option("--tail", ranks_tail, "number of tail coefficients beyond t^n");

    // --- dual ---
    auto* dual = app.add_subcommand("dual", "dimension and degree of the projective dual");
    ZetaInput dual_input;
    dual_input.attach(dual);
    long dual_n = 0;
    dual->add_option("--n", dual_n, "ambient dimension")->required();

    // --- check-ci ---
    auto* check_ci = app.add_subcommand("check-ci", "recognize a complete-intersection zeta");
    ZetaInput check_ci_input;
    check_ci_input.attach(check_ci);

    // --- check-lci ---
    auto* check_lci = app.add_subcommand(
        "check-lci", "consistency of a local complete intersection with a global one");
    ZetaInput check_lci_input;
    check_lci_input.attach(check_lci);
    long lci_n = 0;
    std::vector<long> lci_degrees;
    check_lci->add_option("--n", lci_n, "ambient dimension")->required();
    check_lci->add_option("--degrees", lci_degrees, "degrees of the cutting hypersurfaces")
        ->required()
        ->delimiter(',');

    // --- validate ---
    auto* validate = app.add_subcommand("validate", "structural checks against a degree list");
    ZetaInput validate_input;
    validate_input.attach(validate);
    std::vector<long> validate_degrees;
    validate->add_option("--degrees", validate_degrees, "generating-set degrees")
        ->required()
        ->delimiter(',');

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const Format format = *format_from_name(format_name);

    try {
        if (ci->parsed()) {
            SegreZeta z = ci_zeta(ci_degrees);
            ZetaOutput{z, effective_order(ci, expand_value, z)}.emit(out, format);
            return 0;
        }

        if (monomial->parsed()) {
            if (monomial_gens.empty() == monomial_file.empty())
                throw CLI::RequiredError("exactly one of --gens or --file");
            MonomialIdeal2D ideal = monomial_gens.empty()
                                        ? monomial_from_json(read_json_document(monomial_file))
                                        : MonomialIdeal2D(parse_generators(monomial_gens));
            auto reduction = integral_closure_reduce(ideal);
            SegreZeta z = monomial2d_zeta(ideal);
            ZetaOutput result{z, effective_order(monomial, expand_value, z)};
            json discarded = json::array();
            std::string discarded_line = "discarded:";
            for (auto g : reduction.discarded) {
                discarded.push_back(json::array({g.a, g.b}));
                discarded_line += " (" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
            }
            result.extras["discarded"] = discarded;
            if (!reduction.discarded.empty()) result.extra_lines.push_back(discarded_line);
            result.emit(out, format);
            return 0;
        }

        if (bootstrap->parsed()) {
            if (bootstrap_segre.empty() == bootstrap_file.empty())
                throw CLI::RequiredError("exactly one of --segre or --segre-file");
            // inline coefficients describe the class in P^r, r = len - 1
            SegreClassData data =
                bootstrap_file.empty()
                    ? SegreClassData(static_cast<long>(bootstrap_segre.size()) - 1,
                                     to_bigints(bootstrap_segre))
                    : segre_from_json(read_json_document(bootstrap_file));
            std::vector<std::string> warnings;
            SegreZeta z = bootstrap_zeta(bootstrap_degrees, data, &warnings);
            for (const auto& w : warnings) err << "warning: " << w << "\n";
            ZetaOutput{z, effective_order(bootstrap, expand_value, z)}.emit(out, format);
            return 0;
        }

        if (linsys->parsed()) {
            SegreZeta z = linear_system_zeta(linsys_d, linsys_n, to_bigints(linsys_counts));
            ZetaOutput{z, effective_order(linsys, expand_value, z)}.emit(out, format);
            return 0;
        }

        if (product->parsed()) {
            std::vector<SegreZeta> factors;
            for (const auto& text : product_zetas)
                factors.push_back(SegreZeta::from_series(parse_zeta(text)));
            for (const auto& path : product_files)
                factors.push_back(SegreZeta::from_series(zeta_from_json(read_json_document(path))));
            if (factors.size() < 2) throw CLI::RequiredError("at least two factor zetas");
            SegreZeta z = factors[0];
            for (std::size_t i = 1; i < factors.size(); ++i) z = splayed_product(z, factors[i]);
            ZetaOutput{z, effective_order(product, expand_value, z)}.emit(out, format);
            return 0;
        }

        if (expand_cmd->parsed()) {
            SegreZeta z = SegreZeta::from_series(expand_input.load());
            std::size_t order = expand_order >= 0 ? static_cast<std::size_t>(expand_order)
                                                  : 2 * z.rat().denominator.size();
            ZetaOutput{z, order}.emit(out, format);
            return 0;
        }

        if (ranks->parsed() || dual->parsed()) {
            const bool full = ranks->parsed();
            SegreZeta z = SegreZeta::from_series((full ? ranks_input : dual_input).load());
            const long n = full ? ranks_n : dual_n;
            std::optional<std::size_t> tail;
            if (full && ranks_tail >= 0) tail = static_cast<std::size_t>(ranks_tail);
            PolarDegrees pd = polar_degrees(z, n, tail);
            DualInfo info = dual_info(pd);
            switch (format) {
                case Format::plain:
                case Format::latex: {
                    const char* delta = format == Format::latex ? "\\delta_" : "delta_";
                    std::string line;
                    if (full)
                        for (long i = pd.m; i >= 0; --i)
                            line += delta + std::to_string(i) + " = " + pd.delta(i).get_str() + ", ";
                    if (!line.empty()) {
                        line.erase(line.size() - 2);
                        line += "; ";
                    }
                    out << line << "dual: dimension " << info.dimension << ", degree "
                        << info.degree.get_str() << "\n";
                    if (full && !pd.tail.empty()) {
                        out << "tail:";
                        for (const BigInt& c : pd.tail) out << " " << c.get_str();
                        out << "\n";
                    }
                    break;
                }
                case Format::json: {
                    json doc;
                    doc["dual"] = {{"dimension", info.dimension}, {"degree", info.degree.get_str()}};
                    if (full) {
                        doc["n"] = pd.n;
                        doc["m"] = pd.m;
                        json deltas = json::array();
                        for (const BigInt& d : pd.deltas) deltas.push_back(d.get_str());
                        doc["deltas"] = deltas;  // [delta_m, ..., delta_0]
                        json tail_arr = json::array();
                        for (const BigInt& c : pd.tail) tail_arr.push_back(c.get_str());
                        doc["tail"] = tail_arr;
                    }
                    emit_json(out, doc);
                    break;
                }
            }
            return 0;
        }

        if (check_ci->parsed()) {
            SegreZeta z = SegreZeta::from_series(check_ci_input.load());
            auto degrees = as_complete_intersection(z);
            if (format == Format::json) {
                json doc;
                doc["complete_intersection"] = degrees.has_value();
                if (degrees) doc["degrees"] = *degrees;
                emit_json(out, doc);
            } else if (degrees) {
                out << "complete intersection: degrees " << join_longs(*degrees) << "\n";
            } else {
                out << "not of complete-intersection form\n";
            }
            return 0;
        }

        if (check_lci->parsed()) {
            SegreZeta z = SegreZeta::from_series(check_lci_input.load());
            LciReport rep = lci_consistency_check(z, lci_n, lci_degrees);
            if (format == Format::json) {
                json doc;
                doc["is_ci_type"] = rep.is_ci_type;
                if (rep.normal_degrees) doc["normal_degrees"] = *rep.normal_degrees;
                if (rep.residual_degrees) doc["residual_degrees"] = *rep.residual_degrees;
                emit_json(out, doc);
            } else if (rep.is_ci_type) {
                out << "lci-consistent: normal degrees " << join_longs(*rep.normal_degrees)
                    << ", residual degrees " << join_longs(*rep.residual_degrees) << "\n";
            } else {
                out << "not of complete-intersection type\n";
            }
            return 0;
        }

        if (validate->parsed()) {
            ValidationReport rep = validate_zeta(validate_input.load(), validate_degrees);
            if (format == Format::json) {
                json doc;
                doc["checks"] = {{"denominator_contained", rep.denominator_contained},
                                 {"numerator_nonnegative", rep.numerator_nonnegative},
                                 {"degree_bound", rep.degree_bound},
                                 {"trailing_matches", rep.trailing_matches}};
                doc["all"] = rep.all();
                emit_json(out, doc);
            } else {
                out << rep.summary() << "all checks: " << (rep.all() ? "pass" : "fail") << "\n";
            }
            return 0;
        }

        err << "error: unknown command\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace szf
