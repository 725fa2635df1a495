#include "taut/algebra.hpp"
#include "taut/hodge.hpp"
#include "taut/json_io.hpp"
#include "taut/series.hpp"
#include "taut/special_numbers.hpp"
#include "taut/wk.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using taut::json;
using taut::Rational;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(taut::Integer(s));
    return Rational(taut::Integer(s.substr(0, slash)), taut::Integer(s.substr(slash + 1)));
}

/// F spec: a comma-separated exponent list ("1,0"), or a polynomial
/// "c1*e11,e12;c2*e21,e22" with rational coefficients, or "-" for the
/// constant 1.
taut::PsiPolynomial parse_F(const std::string& spec, int n) {
    if (spec.empty() || spec == "-") return taut::PsiPolynomial::one(n);
    taut::PsiPolynomial F(n);
    std::stringstream terms(spec);
    std::string term;
    while (std::getline(terms, term, ';')) {
        Rational coeff(1);
        std::string exps = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = parse_rational(term.substr(0, star));
            exps = term.substr(star + 1);
        }
        F.add_monomial(parse_int_list(exps), coeff);
    }
    if (F.terms().empty()) throw std::invalid_argument("empty psi polynomial");
    return F;
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        if (j.contains("rows")) {
            const auto& rows = j.at("rows");
            if (!rows.empty()) {
                std::string sep;
                for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
                    std::cout << sep << it.key();
                    sep = ",";
                }
                std::cout << "\n";
            }
            for (const auto& row : rows) {
                std::string sep;
                for (const auto& cell : row.items()) {
                    std::cout << sep << (cell.value().is_string()
                                             ? cell.value().get<std::string>()
                                             : cell.value().dump());
                    sep = ",";
                }
                std::cout << "\n";
            }
        } else {
            for (const auto& item : j.items())
                std::cout << item.key() << "," << item.value().dump() << "\n";
        }
        return;
    }
    // text
    for (const auto& item : j.items()) std::cout << item.key() << " = " << item.value().dump() << "\n";
}

json rational_cell(const Rational& r) { return taut::to_json(r); }

struct CacheScope {
    std::filesystem::path file;
    bool active = false;

    CacheScope() {
        const char* dir = std::getenv("TAUT_CACHE_DIR");
        if (!dir || !*dir) return;
        file = std::filesystem::path(dir) / "wk_cache.json";
        active = true;
        if (!std::filesystem::exists(file)) return;
        std::ifstream in(file);
        json j = json::parse(in);
        taut::wk_engine().preload(taut::wk_cache_from_json(j));
    }

    ~CacheScope() {
        if (!active) return;
        std::error_code ec;
        std::filesystem::create_directories(file.parent_path(), ec);
        std::ofstream out(file);
        out << taut::wk_cache_to_json(taut::wk_engine().snapshot_cache()).dump(2) << "\n";
    }
};

int cmd_wk(int g, const std::string& d_spec, const std::string& format) {
    std::vector<int> d = parse_int_list(d_spec);
    Rational value = taut::wk_engine().psi_intersection(g, d);
    emit(json{{"command", "wk"}, {"g", g}, {"d", d}, {"value", rational_cell(value)}}, format);
    return kExitOk;
}

int cmd_mumford_verify(int g, int n, int codim, bool force, const std::string& format) {
    if (!taut::validate_indices(g, n, taut::StabilityMode::Pseudostable)) {
        if (!force || !taut::validate_indices(g, n, taut::StabilityMode::Stable)) {
            std::cerr << "invalid pseudostable indices (" << g << ", " << n
                      << "); use --force for a formal computation\n";
            return kExitUsage;
        }
        std::cerr << "warning: (" << g << ", " << n
                  << ") is not pseudostable; computing formal values only\n";
    }
    taut::GraphSum lhs = taut::mumford_lhs(g, n);
    taut::GraphSum rhs = taut::mumford_rhs(g, n);
    if (codim >= 0) {
        lhs = taut::codim_part(lhs, codim);
        rhs = taut::codim_part(rhs, codim);
    }
    json diff = json::array();
    for (const auto& [graph, coeff] : lhs.terms()) {
        auto it = rhs.terms().find(graph);
        if (it == rhs.terms().end() || it->second != coeff)
            diff.push_back(json{{"graph", taut::to_json(graph)},
                                {"lhs", rational_cell(coeff)},
                                {"rhs", rational_cell(it == rhs.terms().end() ? Rational(0)
                                                                              : it->second)}});
    }
    for (const auto& [graph, coeff] : rhs.terms())
        if (!lhs.terms().contains(graph))
            diff.push_back(json{{"graph", taut::to_json(graph)},
                                {"lhs", rational_cell(Rational(0))},
                                {"rhs", rational_cell(coeff)}});
    bool match = diff.empty();
    json out{{"command", "mumford-verify"}, {"g", g},      {"n", n},
             {"codim", codim},              {"match", match}, {"lhs_terms", lhs.size()},
             {"rhs_terms", rhs.size()},     {"diff", diff}};
    emit(out, format);
    return match ? kExitOk : kExitMismatch;
}

int cmd_qhi(int g, int n, int i, int j, const std::string& f_spec, const std::string& format) {
    if (!taut::validate_indices(g, n, taut::StabilityMode::Stable)) {
        std::cerr << "invalid indices (" << g << ", " << n << ")\n";
        return kExitUsage;
    }
    taut::PsiPolynomial F = parse_F(f_spec, n);
    taut::IntegrateStats stats;
    taut::GraphSum p = taut::normalize(
        taut::product(taut::pullback_lambda(g, n, i), taut::pullback_lambda(g, n, j)));
    Rational lhs = taut::integrate(p, F, &stats);
    Rational rhs = taut::qhi_rhs(g, n, i, j, F);
    bool match = lhs == rhs;
    json out{{"command", "qhi"},
             {"g", g},
             {"n", n},
             {"i", i},
             {"j", j},
             {"value", rational_cell(lhs)},
             {"rhs", rational_cell(rhs)},
             {"match", match},
             {"terms_evaluated", stats.terms_evaluated},
             {"dropped_inadmissible", stats.dropped_inadmissible}};
    emit(out, format);
    return match ? kExitOk : kExitMismatch;
}

int cmd_table(const std::string& family, int gmin, int gmax, int n_opt,
              const std::string& format) {
    json rows = json::array();
    int exit_code = kExitOk;
    if (family == "cor-values") {
        for (int g = gmin; g <= gmax; ++g) {
            int n = n_opt >= 0 ? n_opt : std::max(1, 3 - g);
            for (int k = 0; k <= g; ++k) {
                Rational pipeline = taut::mumford_integral_family(g, n, k);
                Rational closed = taut::mumford_family_closed_form(g, k);
                bool match = pipeline == closed;
                if (!match) exit_code = kExitMismatch;
                rows.push_back(json{{"g", g},
                                    {"n", n},
                                    {"k", k},
                                    {"value", rational_cell(pipeline)},
                                    {"closed_form", rational_cell(closed)},
                                    {"match", match}});
            }
        }
    } else if (family == "ps-faber") {
        for (int g = gmin; g <= gmax; ++g) {
            int n = n_opt >= 0 ? n_opt : 1;
            std::vector<int> d(n, 0);
            if (n > 0) d[0] = g - 2 + n;
            Rational value = taut::ps_faber(g, n, d);
            Rational cross = taut::qhi_rhs(g, n, g, g - 1, taut::PsiPolynomial::monomial(d));
            bool match = value == cross;
            if (!match) exit_code = kExitMismatch;
            rows.push_back(json{{"g", g},
                                {"n", n},
                                {"d", d},
                                {"value", rational_cell(value)},
                                {"qhi_rhs", rational_cell(cross)},
                                {"match", match}});
        }
    } else if (family == "mfint") {
        for (int g = gmin; g <= gmax; ++g) {
            int n = n_opt >= 0 ? n_opt : 1;
            if (!taut::validate_indices(g, n, taut::StabilityMode::Pseudostable)) continue;
            rows.push_back(
                json{{"g", g}, {"n", n}, {"value", rational_cell(taut::mfint_full(g, n))}});
        }
    } else {
        std::cerr << "unknown table family: " << family << "\n";
        return kExitUsage;
    }
    emit(json{{"command", "table"}, {"family", family}, {"rows", rows}}, format);
    return exit_code;
}

int cmd_series(const taut::SeriesBounds& bounds, const std::string& format) {
    taut::SeriesDiagnostics dps, dst;
    taut::TruncatedSeries Fps = taut::build_F(taut::StabilityMode::Pseudostable, bounds, &dps);
    taut::TruncatedSeries Fst = taut::build_F(taut::StabilityMode::Stable, bounds, &dst);
    taut::TruncatedSeries prod = taut::exp_z_over_24(bounds) * Fst;
    std::set<std::vector<int>> exclude = dps.skipped;
    exclude.insert(dst.skipped.begin(), dst.skipped.end());
    exclude.insert(dps.nongeometric.begin(), dps.nongeometric.end());
    exclude.insert(dst.nongeometric.begin(), dst.nongeometric.end());
    taut::SeriesReport report = taut::series_equal_report(Fps, prod, exclude);
    json skipped = json::array();
    for (const auto& k : dps.skipped) skipped.push_back(k);
    for (const auto& k : dst.skipped)
        if (!dps.skipped.contains(k)) skipped.push_back(k);
    json mismatches = json::array();
    for (const auto& k : report.mismatches) mismatches.push_back(k);
    json out{{"command", "series"},
             {"match", report.match()},
             {"mismatches", mismatches},
             {"cells", report.cells_compared},
             {"skipped", skipped},
             {"nongeometric", static_cast<long>(dps.nongeometric.size())}};
    emit(out, format);
    return report.match() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for tautological classes on elliptic-tail strata"};
    app.require_subcommand(1);
    app.fallthrough();  // let subcommands inherit --format
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    int g = 0, n = 0, i = 0, j = 0, codim = -1;
    std::string d_spec, f_spec = "-";
    bool force = false;

    auto* wk = app.add_subcommand("wk", "Psi intersection number");
    wk->add_option("--g", g)->required();
    wk->add_option("--d", d_spec, "Comma-separated exponents")->required();

    auto* mv = app.add_subcommand("mumford-verify", "Check the elliptic-tail Mumford relation");
    mv->add_option("--g", g)->required();
    mv->add_option("--n", n)->required();
    mv->add_option("--codim", codim, "Restrict to one codimension");
    mv->add_flag("--force", force, "Compute formally at excluded index pairs");

    auto* qh = app.add_subcommand("qhi", "Quadratic Hodge integral, both pipelines");
    qh->add_option("--g", g)->required();
    qh->add_option("--n", n)->required();
    qh->add_option("--i", i)->required();
    qh->add_option("--j", j)->required();
    qh->add_option("--F", f_spec, "Psi polynomial ('e1,e2' or 'c*e1,e2;...', '-' = 1)");

    std::string family;
    int gmin = 1, gmax = 6, n_opt = -1;
    auto* tb = app.add_subcommand("table", "Closed-form value tables");
    tb->add_option("--family", family, "cor-values | ps-faber | mfint")->required();
    tb->add_option("--gmin", gmin);
    tb->add_option("--gmax", gmax);
    tb->add_option("--n", n_opt);

    taut::SeriesBounds bounds;
    auto* se = app.add_subcommand("series", "Generating-function comparison");
    se->add_option("--xmax", bounds.xmax);
    se->add_option("--ymax", bounds.ymax);
    se->add_option("--zmax", bounds.zmax);
    se->add_option("--tmax", bounds.tmax);
    se->add_option("--nt", bounds.nt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        CacheScope cache;
        if (wk->parsed()) return cmd_wk(g, d_spec, format);
        if (mv->parsed()) return cmd_mumford_verify(g, n, codim, force, format);
        if (qh->parsed()) return cmd_qhi(g, n, i, j, f_spec, format);
        if (tb->parsed()) return cmd_table(family, gmin, gmax, n_opt, format);
        if (se->parsed()) return cmd_series(bounds, format);
    } catch (const taut::UnsupportedHodgePart& e) {
        std::cerr << "unsupported evaluator: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
