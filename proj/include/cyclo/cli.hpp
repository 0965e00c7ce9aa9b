#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front-end: pell / decompose / normalize / check-unit /
 *        verify, with optional JSON output where it matters.
 *
 * Exit codes: 0 success, 1 verification failure (a mathematical check did
 * not hold, which signals a bug in the engine), 2 usage or input error.
 * All big integers serialize as exact decimal strings; nothing here touches
 * floating point.
 */

#include <exception>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/gauss_split.hpp"
#include "cyclo/numeric.hpp"
#include "cyclo/pell.hpp"
#include "cyclo/quadratic.hpp"
#include "cyclo/verify.hpp"

namespace cyclo::cli {

using json = nlohmann::ordered_json;

namespace detail {

inline std::vector<Int> parse_coeffs(const std::string& text) {
    std::vector<Int> out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ',')) {
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty coefficient in list '" + text + "'");
        out.emplace_back(item.substr(a, b - a + 1), 10);  // throws on malformed digits
    }
    if (out.empty())
        throw std::invalid_argument("coefficient list is empty");
    return out;
}

inline json trace_json(const DirichletTrace& t) {
    json j;
    j["case"] = to_string(t.tag);
    j["f1"] = t.f1.get_str();
    j["g1"] = t.g1.get_str();
    j["xi1"] = t.xi1.get_str();
    j["y2"] = t.y2.get_str();
    j["xi2"] = t.xi2.get_str();
    if (t.y3) j["y3"] = t.y3->get_str();
    if (t.xi3) j["xi3"] = t.xi3->get_str();
    if (t.i_star != 0) j["i_star"] = t.i_star == 1 ? "+i" : "-i";
    return j;
}

inline void print_trace(std::ostream& out, const DirichletTrace& t) {
    out << "trace: case=" << to_string(t.tag) << " f(1)=" << t.f1 << " g(1)=" << t.g1
        << " xi1=" << t.xi1 << " y2=" << t.y2 << " xi2=" << t.xi2;
    if (t.y3) out << " y3=" << *t.y3 << " xi3=" << *t.xi3;
    if (t.i_star != 0) out << " i*=" << (t.i_star == 1 ? "+i" : "-i");
    out << '\n';
}

inline int do_pell(unsigned long d, std::string method, bool as_json, bool allow_large,
                   std::ostream& out, std::ostream& err) {
    if (d < 2 || !is_squarefree(d))
        throw std::invalid_argument("pell: d must be a squarefree integer >= 2");
    if (d > 499 && !allow_large)
        throw std::invalid_argument(
            "pell: d > 499 is refused by default (cost grows quickly); pass --allow-large");

    const bool constructible = is_odd_prime(d) && d > 3;
    if (!constructible && method != "cf") {
        err << "note: falling back to the continued-fraction method for d=" << d
            << " (the cyclotomic construction needs a prime p > 3)\n";
        method = "cf";
    }

    PellSolution sol{d, Int(0), Int(0)};
    unsigned long power = 1;
    json trace = json::object();
    if (method == "cf") {
        sol = solve_cf(d);
    } else {
        auto [ds, tr] = solve_dirichlet(d);
        sol = ds;
        trace = trace_json(tr);
        const PellSolution fund = solve_cf(d);
        power = classify(sol, fund);  // throws not_in_group_error on a bug
        if (method == "both") {
            if (as_json) {
                // cross-check is implicit in fundamental_power
            } else {
                out << "cf fundamental: a=" << fund.a << " b=" << fund.b << '\n';
            }
        }
        if (!as_json) {
            print_trace(out, tr);
            out << "construction = fundamental^" << power << '\n';
        }
    }
    if (!sol.valid())
        throw internal_error("pell: solution failed the defining equation");

    if (as_json) {
        json j;
        j["p"] = d;
        j["method"] = method;
        j["a"] = sol.a.get_str();
        j["b"] = sol.b.get_str();
        j["fundamental_power"] = power;
        j["trace"] = trace;
        out << j.dump(2) << '\n';
    } else {
        out << "x^2 - " << d << " y^2 = 1: a=" << sol.a << " b=" << sol.b
            << " (method=" << method << ")\n";
    }
    return 0;
}

inline int do_decompose(unsigned long p, bool as_json, bool allow_large, std::ostream& out,
                        std::ostream& err) {
    (void)err;
    if (p > 499 && !allow_large)
        throw std::invalid_argument(
            "decompose: p > 499 is refused by default (cost grows quickly); pass --allow-large");
    if (!is_odd_prime(p))
        throw std::invalid_argument("decompose: p must be an odd prime");
    const GaussSplit s = split_fg(p);  // verifies f^2 - p* g^2 = 4(1+...+x^(p-1))
    if (as_json) {
        json j;
        j["p"] = p;
        j["p_star"] = s.p_star;
        json fc = json::array(), gc = json::array();
        for (long k = 0; k <= s.f.degree(); ++k) fc.push_back(s.f.coeff(static_cast<std::size_t>(k)).get_str());
        for (long k = 0; k <= s.g.degree(); ++k) gc.push_back(s.g.coeff(static_cast<std::size_t>(k)).get_str());
        j["f"] = fc;
        j["g"] = gc;
        j["identity"] = "f^2 - p*·g^2 = 4(1 + x + ... + x^(p-1)) verified";
        out << j.dump(2) << '\n';
    } else {
        out << "p = " << p << ", p* = " << s.p_star << '\n';
        out << "f = " << s.f << '\n';
        out << "g = " << s.g << '\n';
        out << "identity f^2 - (" << s.p_star << ")·g^2 = 4(1 + x + ... + x^" << (p - 1)
            << "): OK\n";
    }
    return 0;
}

inline int do_normalize(unsigned long p, const std::string& coeffs, std::ostream& out) {
    const CycInt x(p, parse_coeffs(coeffs));
    const LambdaDigits d = lambda_digits(x);
    out << "lambda digits: a0=" << d.a0 << " a1=" << d.a1 << '\n';
    if (d.a0 == 0)
        throw std::invalid_argument(
            "normalize: element is divisible by lambda = 1 - zeta; no primary twist exists");
    const unsigned long c = primary_exponent(x);
    const CycInt y = x.times_zeta(static_cast<long>(c));
    out << "primary exponent: " << c << '\n';
    out << "normalized: zeta^" << c << " * x = " << y << '\n';
    out << "normalized coefficients: ";
    for (std::size_t k = 0; k + 1 < p; ++k) out << (k ? "," : "") << y.coeff(k).get_str();
    out << '\n';
    return 0;
}

inline int do_check_unit(unsigned long p, const std::string& coeffs, std::ostream& out) {
    const CycInt x(p, parse_coeffs(coeffs));
    const Int n = norm(x);
    const bool unit = (n == 1 || n == -1);
    out << "norm: " << n << '\n';
    out << "unit: " << (unit ? "true" : "false") << '\n';
    out << "real: " << (is_real(x) ? "true" : "false") << '\n';
    if (is_prime_to_lambda(x))
        out << "primary: " << (is_primary(x) ? "true" : "false") << '\n';
    else
        out << "primary: undefined (element is divisible by lambda)\n";
    if (unit)
        out << "unit_ratio_exponent: " << unit_ratio_exponent(x)
            << "   (u = zeta^t * conj(u))\n";
    return 0;
}

}  // namespace detail

/// Parses args (program name excluded, natural order) and runs one verb.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic in prime cyclotomic rings: primary twists, "
                 "unit tests, the f/g factorization, and Pell solutions"};
    app.require_subcommand(1);

    unsigned long pell_d = 0;
    std::string pell_method = "both";
    bool pell_json = false, pell_large = false;
    CLI::App* pell = app.add_subcommand("pell", "Solve x^2 - p y^2 = 1");
    pell->add_option("p", pell_d, "squarefree d >= 2 (prime p > 3 for the construction)")
        ->required();
    pell->add_option("--method", pell_method, "dirichlet | cf | both (default both)")
        ->check(CLI::IsMember({"dirichlet", "cf", "both"}));
    pell->add_flag("--json", pell_json, "machine-readable output");
    pell->add_flag("--allow-large", pell_large, "lift the p <= 499 guard");

    unsigned long dec_p = 0;
    bool dec_json = false, dec_large = false;
    CLI::App* dec = app.add_subcommand("decompose", "Compute f, g with f^2 - p* g^2 = 4 m_p");
    dec->add_option("p", dec_p, "odd prime")->required();
    dec->add_flag("--json", dec_json, "machine-readable output");
    dec->add_flag("--allow-large", dec_large, "lift the p <= 499 guard");

    unsigned long norm_p = 0;
    std::string norm_coeffs;
    CLI::App* nrm = app.add_subcommand("normalize", "Lambda digits and the primary twist");
    nrm->add_option("p", norm_p, "odd prime")->required();
    nrm->add_option("coeffs", norm_coeffs, "comma-separated integers, index = power of zeta")
        ->required();

    unsigned long cu_p = 0;
    std::string cu_coeffs;
    CLI::App* cu = app.add_subcommand("check-unit", "Unit / real / primary report");
    cu->add_option("p", cu_p, "odd prime")->required();
    cu->add_option("coeffs", cu_coeffs, "comma-separated integers, index = power of zeta")
        ->required();

    unsigned long ver_pmax = 0;
    CLI::App* ver = app.add_subcommand("verify", "Run the invariant suite for all p <= p_max");
    ver->add_option("p_max", ver_pmax, "upper bound on the primes to check")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (pell->parsed())
            return detail::do_pell(pell_d, pell_method, pell_json, pell_large, out, err);
        if (dec->parsed()) return detail::do_decompose(dec_p, dec_json, dec_large, out, err);
        if (nrm->parsed()) return detail::do_normalize(norm_p, norm_coeffs, out);
        if (cu->parsed()) return detail::do_check_unit(cu_p, cu_coeffs, out);
        if (ver->parsed()) return run_verify(ver_pmax, out) ? 0 : 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const not_in_group_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "usage error: no verb selected\n";
    return 2;
}

}  // namespace cyclo::cli
