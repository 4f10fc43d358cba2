#include "speczeta/cli.hpp"

#include <complex>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "speczeta/characters.hpp"
#include "speczeta/coeffs.hpp"
#include "speczeta/combinatorics.hpp"
#include "speczeta/errors.hpp"
#include "speczeta/lvalues.hpp"
#include "speczeta/numoracle.hpp"
#include "speczeta/serialize.hpp"
#include "speczeta/verify.hpp"

namespace speczeta::cli {

namespace {

std::string num_str(double x)
{
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

std::string numeric_of(const SpecialValue& v)
{
    const std::complex<double> z = special_value_numeric(v);
    if (std::abs(z.imag()) < 1e-12)
        return num_str(z.real());
    return num_str(z.real()) + (z.imag() < 0 ? "-" : "+") + num_str(std::abs(z.imag())) + "i";
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

// One uniform CSV emitter: header plus rows, with the numeric column already
// appended by the caller when requested.
void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows)
{
    std::cout << csv_row(header);
    for (const auto& row : rows)
        std::cout << csv_row(row);
}

struct OutputOptions {
    std::string format = "json";
    bool numeric       = false;
};

// A table of exact values indexed by a single integer label (Eulerian rows,
// Bernoulli/secant prefixes, coefficient rows).
void emit_indexed_table(const OutputOptions& out, const char* index_name, long first_index,
                        const std::vector<std::string>& values,
                        const std::vector<double>& numeric, Json meta)
{
    if (out.format == "json") {
        meta["values"] = values;
        print_json(meta);
        return;
    }
    std::vector<std::string> header{index_name, "value"};
    if (out.numeric)
        header.push_back("numeric");
    std::vector<std::vector<std::string>> rows;
    rows.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::vector<std::string> row{std::to_string(first_index + static_cast<long>(i)),
                                     values[i]};
        if (out.numeric)
            row.push_back(num_str(numeric[i]));
        rows.push_back(std::move(row));
    }
    print_csv(header, rows);
}

void emit_special_value(const OutputOptions& out, const SpecialValue& v)
{
    if (out.format == "json") {
        print_json(special_value_to_json(v));
        return;
    }
    std::string coeff = v.coeff.is_rational() ? format_rational(v.coeff.as_rational())
                                              : v.coeff.str();
    std::vector<std::string> header{"pi_power", "coeff"};
    std::vector<std::string> row{std::to_string(v.pi_power), std::move(coeff)};
    if (out.numeric) {
        header.push_back("numeric");
        row.push_back(numeric_of(v));
    }
    print_csv(header, {row});
}

const DirichletCharacter& character_at(const std::vector<DirichletCharacter>& chars,
                                       unsigned long index, unsigned long N)
{
    if (index >= chars.size())
        throw Error("character index " + std::to_string(index) + " out of range: modulus " +
                    std::to_string(N) + " has " + std::to_string(chars.size()) +
                    " characters (0.." + std::to_string(chars.size() - 1) + ")");
    return chars[index];
}

SpecialValue lvalue_by_route(unsigned n, unsigned long N, unsigned long index,
                             const std::string& route)
{
    if (N == 1) {
        // Mod-1 L-values are plain zeta values, whatever the route.
        if (index != 0)
            throw Error("modulus 1 has a single character, index 0");
        if (n % 2 != 0 || n == 0)
            throw Error("L(n) mod 1 is zeta(n), available here for even n >= 2");
        return zeta_even(n / 2);
    }
    const auto chars = characters(N);
    const DirichletCharacter& chi = character_at(chars, index, N);
    if (route == "closed")
        return dirichlet_L_closed(n, chi);
    if (route == "leopoldt")
        return dirichlet_L_leopoldt(n, chi);
    // graph route: L(2k, chi) or L(2k+1, chi) assembled from graph L-values
    if (chi.even != (n % 2 == 0))
        throw ParityMismatch("graph route: argument parity must match the character");
    if (chi.even) {
        if (n < 2)
            throw Error("graph route needs n >= 2 for even characters");
        return L_from_graph(n / 2, chi);
    }
    if (n < 3)
        throw Error("graph route needs n >= 3 for odd characters; use --route closed");
    return L_from_graph((n - 1) / 2, chi);
}

int run_verify(const OutputOptions& out, const VerifyOptions& options)
{
    const auto reports = run_all_criteria(options);
    std::size_t checks = 0, failures = 0;
    if (out.format == "csv")
        std::cout << report_entry_csv_header();
    for (const CriterionReport& report : reports) {
        for (const ReportEntry& entry : report.entries) {
            ++checks;
            if (!entry.pass)
                ++failures;
            if (out.format == "json")
                std::cout << report_entry_to_json(entry).dump() << "\n";
            else
                std::cout << report_entry_to_csv(entry);
        }
    }
    std::cerr << "verify: " << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv)
{
    CLI::App app{"Exact special values of Dirichlet L-functions and spectral zeta functions "
                 "of cycle graphs, with cross-validated closed forms"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--numeric", out.numeric,
                 "append a floating-point column (csv format only)");

    unsigned eul_n = 0;
    bool circular  = false;
    auto* sub_eulerian = app.add_subcommand("eulerian", "one row of Eulerian numbers");
    sub_eulerian->add_option("--n", eul_n, "row index")->required()->check(CLI::PositiveNumber);
    sub_eulerian->add_flag("--circular", circular, "circular variant Abar(n, l)");

    unsigned bern_upto = 0;
    auto* sub_bernoulli = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_k");
    sub_bernoulli->add_option("--upto", bern_upto, "largest index")->required();

    unsigned sec_upto = 0;
    auto* sub_secant = app.add_subcommand("secant", "secant numbers S_0..S_k");
    sub_secant->add_option("--upto", sec_upto, "largest index")->required();

    unsigned coeff_n = 0;
    std::string family;
    auto* sub_coeffs = app.add_subcommand("coeffs", "one row of the a, b, or c coefficients");
    sub_coeffs->add_option("--n", coeff_n, "row index")->required()->check(CLI::PositiveNumber);
    sub_coeffs->add_option("--family", family, "coefficient family")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c"}));

    unsigned ver_g      = 0;
    unsigned long ver_N = 0;
    auto* sub_verlinde = app.add_subcommand("verlinde", "Verlinde number V_g(N)");
    sub_verlinde->add_option("--g", ver_g, "genus")->required()->check(CLI::PositiveNumber);
    sub_verlinde->add_option("--N", ver_N, "level")->required()->check(CLI::PositiveNumber);

    unsigned long char_N = 0;
    auto* sub_characters =
        app.add_subcommand("characters", "the Dirichlet characters mod N, by index");
    sub_characters->add_option("--modulus", char_N, "modulus")
        ->required()
        ->check(CLI::PositiveNumber);

    unsigned lv_n         = 0;
    unsigned long lv_N    = 0;
    unsigned long lv_char = 0;
    std::string route;
    auto* sub_lvalue = app.add_subcommand("lvalue", "exact L(n, chi) as coeff * pi^n");
    sub_lvalue->add_option("--n", lv_n, "argument")->required()->check(CLI::PositiveNumber);
    sub_lvalue->add_option("--modulus", lv_N, "modulus")
        ->required()
        ->check(CLI::PositiveNumber);
    sub_lvalue->add_option("--char", lv_char, "character index")->required();
    sub_lvalue->add_option("--route", route, "evaluation route")
        ->required()
        ->check(CLI::IsMember({"closed", "leopoldt", "graph"}));

    long ss_p          = 0;
    unsigned long ss_q = 0;
    unsigned ss_n      = 0;
    auto* sub_spectral =
        app.add_subcommand("spectral-sum", "exact sum over k of 1/(2 k pi + 2 pi p/q)^n");
    sub_spectral->add_option("--p", ss_p, "angle numerator")->required();
    sub_spectral->add_option("--q", ss_q, "angle denominator")
        ->required()
        ->check(CLI::PositiveNumber);
    sub_spectral->add_option("--n", ss_n, "exponent")->required()->check(CLI::PositiveNumber);

    unsigned mean_n      = 0;
    unsigned long mean_N = 0;
    std::string parity;
    auto* sub_mean =
        app.add_subcommand("mean", "mean of L(s, chi) over characters of one parity");
    sub_mean->add_option("--n", mean_n, "mean index (even: s = 2n, odd: s = 2n-1)")
        ->required()
        ->check(CLI::PositiveNumber);
    sub_mean->add_option("--modulus", mean_N, "modulus")->required()->check(CLI::PositiveNumber);
    sub_mean->add_option("--parity", parity, "character parity")
        ->required()
        ->check(CLI::IsMember({"even", "odd"}));

    VerifyOptions vopts;
    auto* sub_verify =
        app.add_subcommand("verify", "run the cross-route verification suite");
    sub_verify->add_option("--max-n", vopts.max_n, "clamp every n-like grid");
    sub_verify->add_option("--max-modulus", vopts.max_modulus, "clamp every modulus grid");
    sub_verify->add_option("--mc-samples", vopts.mc_samples, "Monte-Carlo sample count")
        ->capture_default_str();
    sub_verify->add_option("--seed", vopts.seed, "Monte-Carlo seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (out.numeric && out.format != "csv") {
        std::cerr << "error: --numeric requires --format csv\n";
        return 2;
    }

    try {
        if (app.got_subcommand(sub_eulerian)) {
            const EulerianTable t = eulerian_table(eul_n, circular);
            std::vector<std::string> values;
            std::vector<double> numeric;
            for (const Integer& v : t.values) {
                values.push_back(v.get_str());
                numeric.push_back(Rational(v).get_d());
            }
            Json meta;
            meta["n"]        = eul_n;
            meta["circular"] = circular;
            emit_indexed_table(out, "l", 1, values, numeric, std::move(meta));
        } else if (app.got_subcommand(sub_bernoulli)) {
            const auto B = bernoulli_numbers(bern_upto);
            std::vector<std::string> values;
            std::vector<double> numeric;
            for (const Rational& v : B) {
                values.push_back(format_rational(v));
                numeric.push_back(to_double(v));
            }
            Json meta;
            meta["upto"] = bern_upto;
            emit_indexed_table(out, "k", 0, values, numeric, std::move(meta));
        } else if (app.got_subcommand(sub_secant)) {
            const auto S = secant_numbers(sec_upto);
            std::vector<std::string> values;
            std::vector<double> numeric;
            for (const Integer& v : S) {
                values.push_back(v.get_str());
                numeric.push_back(Rational(v).get_d());
            }
            Json meta;
            meta["upto"] = sec_upto;
            emit_indexed_table(out, "k", 0, values, numeric, std::move(meta));
        } else if (app.got_subcommand(sub_coeffs)) {
            const std::vector<Rational> row = family == "a"   ? coeff_a(coeff_n)
                                              : family == "b" ? coeff_b(coeff_n)
                                                              : laurent_c(coeff_n);
            std::vector<std::string> values;
            std::vector<double> numeric;
            for (const Rational& v : row) {
                values.push_back(format_rational(v));
                numeric.push_back(to_double(v));
            }
            Json meta;
            meta["n"]      = coeff_n;
            meta["family"] = family;
            emit_indexed_table(out, family == "c" ? "s" : "i", family == "c" ? 0 : 1, values,
                               numeric, std::move(meta));
        } else if (app.got_subcommand(sub_verlinde)) {
            const Rational v = verlinde_zagier(ver_g, ver_N);
            if (out.format == "json") {
                print_json(Json(format_rational(v)));
            } else {
                std::vector<std::string> header{"value"};
                std::vector<std::string> row{format_rational(v)};
                if (out.numeric) {
                    header.push_back("numeric");
                    row.push_back(num_str(to_double(v)));
                }
                print_csv(header, {row});
            }
        } else if (app.got_subcommand(sub_characters)) {
            const auto& structure = unit_group_structure(char_N);
            const auto chars      = characters(char_N);
            if (out.format == "json") {
                Json list = Json::array();
                for (std::size_t i = 0; i < chars.size(); ++i)
                    list.push_back(character_to_json(chars[i], i));
                Json meta;
                meta["modulus"]    = char_N;
                meta["generators"] = structure.generators;
                meta["orders"]     = structure.orders;
                meta["characters"] = std::move(list);
                print_json(meta);
            } else {
                std::vector<std::vector<std::string>> rows;
                for (std::size_t i = 0; i < chars.size(); ++i) {
                    std::string exps;
                    for (std::size_t k = 0; k < chars[i].exponents.size(); ++k) {
                        if (k)
                            exps += ';';
                        exps += std::to_string(chars[i].exponents[k]);
                    }
                    rows.push_back({std::to_string(i), exps, std::to_string(chars[i].order),
                                    chars[i].even ? "even" : "odd",
                                    std::to_string(conductor(chars[i])),
                                    is_primitive(chars[i]) ? "true" : "false"});
                }
                print_csv({"index", "exponents", "order", "parity", "conductor", "primitive"},
                          rows);
            }
        } else if (app.got_subcommand(sub_lvalue)) {
            emit_special_value(out, lvalue_by_route(lv_n, lv_N, lv_char, route));
        } else if (app.got_subcommand(sub_spectral)) {
            emit_special_value(out, spectral_sum(SpectralSumSpec::make(ss_p, ss_q, ss_n)));
        } else if (app.got_subcommand(sub_mean)) {
            emit_special_value(out, mean_L_closed_form(mean_n, mean_N,
                                                       parity == "even" ? Parity::Even
                                                                        : Parity::Odd));
        } else if (app.got_subcommand(sub_verify)) {
            return run_verify(out, vopts);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace speczeta::cli
