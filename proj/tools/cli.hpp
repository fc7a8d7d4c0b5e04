/*
   Copyright 2026 The specpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPECPOLY_TOOLS_CLI_HPP
#define SPECPOLY_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <specpoly/json.hpp>
#include <specpoly/specpoly.hpp>

namespace specpoly::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

enum class Format { Json, Table };

struct CliRequest {
    std::string command;
    std::optional<std::string> preset;
    std::optional<std::string> family;
    std::optional<std::string> operator_file;
    std::string eps = "-1";
    std::string alpha = "0";
    std::string beta = "0";
    std::size_t n_max = 5;
    std::optional<double> tol;
    std::string format = "json";
};

/// Raised for anything the user typed wrong; maps to exit status 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

inline std::optional<std::string> process_env(const std::string& name) {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
}

namespace detail {

using Json = json::Json;

struct ResolvedOperator {
    DiffOperator op;
    std::optional<FamilySpec> family;
};

inline Rational usage_rational(const std::string& text, const char* what) {
    try {
        return parse_rational(text);
    } catch (const InvalidArgument& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

inline FamilySpec family_from_request(const CliRequest& req) {
    FamilyKind kind;
    try {
        kind = parse_family_kind(*req.family);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    const Rational alpha = usage_rational(req.alpha, "--alpha");
    const Rational beta = usage_rational(req.beta, "--beta");
    switch (kind) {
        case FamilyKind::Jacobi: {
            const Rational eps = usage_rational(req.eps, "--eps");
            if (eps != 1 && eps != -1) throw UsageError("--eps must be 1 or -1");
            return FamilySpec::jacobi(eps == 1 ? 1 : -1, alpha, beta);
        }
        case FamilyKind::Laguerre: return FamilySpec::laguerre(alpha, beta);
        case FamilyKind::Hermite: return FamilySpec::hermite(alpha, beta);
        case FamilyKind::Romanovski: return FamilySpec::romanovski(alpha, beta);
        case FamilyKind::ChaudhryQadir: return FamilySpec::chaudhry_qadir();
    }
    throw UsageError("unknown family");
}

inline ResolvedOperator resolve_operator(const CliRequest& req) {
    const int sources = int(req.preset.has_value()) + int(req.family.has_value()) + int(req.operator_file.has_value());
    if (sources != 1) throw UsageError("exactly one of --preset, --family, --operator is required");

    if (req.preset) {
        try {
            FamilySpec spec = preset(*req.preset);
            return {build_operator(spec), spec};
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
    }
    if (req.family) {
        FamilySpec spec = family_from_request(req);
        return {build_operator(spec), spec};
    }
    std::ifstream in(*req.operator_file);
    if (!in) throw UsageError("cannot read operator file '" + *req.operator_file + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("operator file is not valid JSON: " + std::string(e.what()));
    }
    try {
        return {json::parse_operator(doc), std::nullopt};
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

inline std::string rat(const Rational& r) { return to_string(r); }

inline std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

/// Left-aligned text table.
inline void print_table(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << s << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows) line(r);
}

inline void cmd_spectrum(const ResolvedOperator& src, const CliRequest& req, Format fmt, std::ostream& out) {
    const Spectrum s = spectrum(src.op, req.n_max);
    if (fmt == Format::Json) {
        Json j{{"command", "spectrum"}, {"operator", json::diff_operator(src.op)}, {"n_max", req.n_max}};
        j.update(json::spectrum(s));
        out << j.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n < s.values.size(); ++n)
        rows.push_back({std::to_string(n), rat(s.values[n]), rat(-s.values[n]),
                        s.multiplicity.at(s.values[n]).size() > 1 ? "shared" : ""});
    print_table(out, {"degree", "eigenvalue_of_L", "lambda_ode_convention", "collision"}, rows);
}

inline void cmd_eigenfns(const ResolvedOperator& src, const CliRequest& req, Format fmt, std::ostream& out) {
    const auto table = eigentable(src.op, req.n_max);
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& r : table) arr.push_back(json::eigen_result(r));
        Json j{{"command", "eigenfns"},
               {"operator", json::diff_operator(src.op)},
               {"n_max", req.n_max},
               {"eigenfunctions", arr}};
        out << j.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : table)
        rows.push_back({std::to_string(r.degree), rat(r.eigenvalue), rat(r.lambda_ode()), std::string(to_string(r.status)),
                        std::to_string(r.eigenspace_dim), r.monic ? to_string(*r.monic) : "-"});
    print_table(out, {"degree", "eigenvalue_of_L", "lambda_ode_convention", "status", "dim", "monic"}, rows);
}

inline void cmd_weight(const ResolvedOperator& src, Format fmt, std::ostream& out) {
    const WeightExpr w = derive_weight(src.op);
    const auto pearson = pearson_check(w, src.op.coeff(2), src.op.coeff(1));
    if (fmt == Format::Json) {
        Json j = json::weight(w);
        j["formula"] = to_string(w);
        j["pearson"] = {{"symbolic_pass", pearson.symbolic_pass},
                        {"numeric_pass", pearson.numeric_pass},
                        {"max_residual", pearson.max_residual}};
        out << j.dump(2) << '\n';
        return;
    }
    out << "p(x) = " << to_string(w) << '\n';
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"constant", rat(w.constant)});
    for (const auto& f : w.power_factors)
        rows.push_back({"|x - " + rat(f.root) + "|^e", rat(f.exponent)});
    if (w.quad_exponent) rows.push_back({"(x^2 + 1)^e", rat(*w.quad_exponent)});
    rows.push_back({"exp_poly", to_string(w.exp_poly)});
    rows.push_back({"arctan_coeff", rat(w.arctan_coeff)});
    rows.push_back({"interval", to_string(w.interval)});
    rows.push_back({"pearson", pearson.pass() ? "pass" : "FAIL"});
    print_table(out, {"component", "value"}, rows);
}

inline std::string entry_cell(const GramEntry* e) {
    if (!e) return "";
    if (!e->integrable) return "n/i";
    if (e->exact) return rat(*e->exact);
    return fmt_double(e->value());
}

inline void gram_table(const OrthoReport& rep, std::ostream& out) {
    std::vector<std::string> header{"m\\n"};
    for (auto d : rep.degrees) header.push_back(std::to_string(d));
    std::vector<std::vector<std::string>> rows;
    for (auto m : rep.degrees) {
        std::vector<std::string> row{std::to_string(m)};
        for (auto n : rep.degrees) row.push_back(entry_cell(rep.entry(m, n)));
        rows.push_back(std::move(row));
    }
    out << "weight: " << to_string(rep.weight) << '\n';
    for (const auto& x : rep.excluded) out << "excluded degree " << x.degree << ": " << x.reason << '\n';
    print_table(out, header, rows);
    out << "off-diagonal max relative: " << fmt_double(rep.off_diagonal_max_relative) << '\n';
}

inline void cmd_gram(const ResolvedOperator& src, const CliRequest& req, double tol, Format fmt, std::ostream& out) {
    OrthoReport rep = gram_matrix(src.op, req.n_max, tol);
    rep.family = src.family;
    if (fmt == Format::Json) {
        Json j{{"command", "gram"}};
        j.update(json::ortho_report(rep));
        out << j.dump(2) << '\n';
        return;
    }
    gram_table(rep, out);
}

inline void cmd_romanovski(const CliRequest& req, double tol, Format fmt, std::ostream& out) {
    const Rational alpha = usage_rational(req.alpha, "--alpha");
    const Rational beta = usage_rational(req.beta, "--beta");
    const auto rep = finite_orthogonality_report(alpha, beta, req.n_max, tol);
    if (fmt == Format::Json) {
        Json j{{"command", "romanovski-report"}};
        j.update(json::finite_report(rep));
        out << j.dump(2) << '\n';
        return;
    }
    out << "gamma = " << rat(rep.gamma) << ", integrable pairs: m + n < " << rat(rep.integrable_degree_sum_bound)
        << '\n';
    if (!rep.colliding_degrees.empty()) {
        out << "eigenvalue collisions at degrees:";
        for (auto d : rep.colliding_degrees) out << ' ' << d;
        out << '\n';
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : rep.pairs)
        rows.push_back({std::to_string(p.m), std::to_string(p.n), std::string(to_string(p.verdict)),
                        p.relative ? fmt_double(*p.relative) : "-"});
    print_table(out, {"m", "n", "verdict", "relative"}, rows);
}

inline void cmd_normalize(const ResolvedOperator& src, Format fmt, std::ostream& out) {
    if (src.op.order() != 2) throw InvalidArgument("normalize applies to second-order operators");
    const AffineNormalization n = bochner_normalize(src.op.coeff(2));
    const DiffOperator normalized = normalized_operator(src.op, n);
    if (fmt == Format::Json) {
        Json j = json::diff_operator(normalized);
        j["normalization"] = json::normalization(n);
        j["source"] = json::diff_operator(src.op);
        out << j.dump(2) << '\n';
        return;
    }
    out << "x = " << rat(n.s) << "*u + " << rat(n.t) << ", a(x) = " << rat(n.c) << " * (" << to_string(n.normal_form)
        << ")\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k <= normalized.order(); ++k)
        rows.push_back({"a_" + std::to_string(k), to_string(normalized.coeff(k), "u")});
    print_table(out, {"coefficient", "normalized"}, rows);
}

inline double resolve_tolerance(const CliRequest& req, const EnvLookup& env) {
    double tol = kDefaultTolerance;
    if (auto v = env("SPECPOLY_TOL")) {
        try {
            std::size_t used = 0;
            tol = std::stod(*v, &used);
            if (used != v->size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw UsageError("SPECPOLY_TOL is not a number: '" + *v + "'");
        }
    }
    if (req.tol) tol = *req.tol;
    if (!(tol > 0)) throw UsageError("tolerance must be positive");
    return tol;
}

}  // namespace detail

/// Executes one validated request. Domain errors propagate as specpoly::Error.
inline void execute(const CliRequest& req, double tol, std::ostream& out) {
    const Format fmt = req.format == "table" ? Format::Table : Format::Json;
    if (req.command == "romanovski-report") {
        detail::cmd_romanovski(req, tol, fmt, out);
        return;
    }
    const auto src = detail::resolve_operator(req);
    if (req.command == "spectrum")
        detail::cmd_spectrum(src, req, fmt, out);
    else if (req.command == "eigenfns")
        detail::cmd_eigenfns(src, req, fmt, out);
    else if (req.command == "weight")
        detail::cmd_weight(src, fmt, out);
    else if (req.command == "gram")
        detail::cmd_gram(src, req, tol, fmt, out);
    else if (req.command == "normalize")
        detail::cmd_normalize(src, fmt, out);
    else
        throw UsageError("unknown command '" + req.command + "'");
}

/// Full command line entry point: parses argv, runs, and returns the exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const EnvLookup& env = process_env) {
    CLI::App app{"Polynomial eigenfunctions, weights and orthogonality of differential operators", "specpoly"};
    app.require_subcommand(1);
    CliRequest req;

    auto add_common = [&](CLI::App* sub, bool operator_source) {
        if (operator_source) {
            sub->add_option("--preset", req.preset, "legendre, chebyshev1, chebyshev2, hermite, laguerre, chaudhry-qadir");
            sub->add_option("--family", req.family, "jacobi, laguerre, hermite, romanovski, chaudhry-qadir");
            sub->add_option("--eps", req.eps, "jacobi orientation: -1 for 1-x^2, 1 for x^2+1");
            sub->add_option("--operator", req.operator_file, "operator JSON file {\"a\": [[...], ...]}");
        }
        sub->add_option("--alpha", req.alpha, "rational parameter, e.g. -13/2");
        sub->add_option("--beta", req.beta, "rational parameter");
        sub->add_option("--n-max", req.n_max, "largest degree")->check(CLI::NonNegativeNumber);
        sub->add_option("--tol", req.tol, "quadrature tolerance (overrides SPECPOLY_TOL)");
        sub->add_option("--format", req.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    add_common(app.add_subcommand("spectrum", "eigenvalues mu_j = coefficient of x^j in L(x^j)"), true);
    add_common(app.add_subcommand("eigenfns", "monic eigenfunction per degree"), true);
    add_common(app.add_subcommand("weight", "weight function from the Pearson equation"), true);
    add_common(app.add_subcommand("gram", "Gram matrix of the monic eigenfunctions"), true);
    add_common(app.add_subcommand("romanovski-report", "finite orthogonality of (1+x^2)y''+(ax+b)y'"), false);
    add_common(app.add_subcommand("normalize", "affine normalization of the leading coefficient"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    req.command = app.get_subcommands().front()->get_name();

    try {
        const double tol = detail::resolve_tolerance(req, env);
        std::ostringstream buffer;
        execute(req, tol, buffer);
        out << buffer.str();
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace specpoly::cli

#endif
