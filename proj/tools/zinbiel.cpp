// Command-line front end: identity checks, derivation spaces, annihilators,
// the property battery, and the built-in catalog with its regression report.
//
// Exit codes: 0 success / all checks hold, 1 a checked property or table
// comparison failed, 2 bad input (file, format, arguments).

#include "zinbiel/algebra.hpp"
#include "zinbiel/algebra_io.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/derivations.hpp"
#include "zinbiel/linalg.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/rng.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace zinbiel;
using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kPropsTrials = 25;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AlgebraSpec load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

std::string vec_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

void print_matrix(std::ostream& os, const Matrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << "  ";
            os << m.at(i, j).str();
        }
        os << "\n";
    }
}

ordered_json json_vec(const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (const Rational& x : v) arr.push_back(x.str());
    return arr;
}

ordered_json json_matrix(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(json_vec(m.row(i)));
    return rows;
}

ordered_json json_symbolic(const SymbolicAdMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m.render()) {
        ordered_json r = ordered_json::array();
        for (const auto& cell : row) r.push_back(cell);
        rows.push_back(std::move(r));
    }
    return rows;
}

int run_check(const AlgebraSpec& a, bool json_output) {
    const auto violations = check_zinbiel(a);
    const std::size_t triples = a.dim() * a.dim() * a.dim();
    if (json_output) {
        ordered_json out{{"name", a.name()},
                         {"dim", a.dim()},
                         {"zinbiel", violations.empty()},
                         {"violations", ordered_json::array()}};
        for (const auto& v : violations)
            out["violations"].push_back(ordered_json{{"triple", {v.i, v.j, v.k}},
                                                     {"residual", json_vec(v.residual)}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "algebra: " << a.name() << " (dim " << a.dim() << ")\n";
        if (violations.empty()) {
            std::cout << "Zinbiel identity holds on all " << triples << " basis triples\n";
        } else {
            for (const auto& v : violations)
                std::cout << "violation at (" << v.i << ", " << v.j << ", " << v.k
                          << "): residual = " << vec_string(v.residual) << "\n";
            std::cout << violations.size() << " violating triples of " << triples << "\n";
        }
    }
    return violations.empty() ? 0 : 1;
}

int run_inner(const AlgebraSpec& a, bool json_output) {
    const SymbolicAdMatrix sym = symbolic_ad(a);
    const DerivationSpace inn = inner_derivation_space(a);
    if (json_output) {
        ordered_json basis = ordered_json::array();
        for (const Matrix& b : inn.basis) basis.push_back(json_matrix(b));
        ordered_json out{{"name", a.name()},
                         {"dim", a.dim()},
                         {"symbolic_matrix", json_symbolic(sym)},
                         {"dim_inn", inn.dim()},
                         {"basis", std::move(basis)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "algebra: " << a.name() << " (dim " << a.dim() << ")\n";
    std::cout << "ad_w for generic w = a_1 e_1 + ... + a_" << a.dim() << " e_" << a.dim()
              << " (columns are images):\n";
    for (std::size_t j = 0; j < sym.dim(); ++j) std::cout << sym.row_string(j) << "\n";
    std::cout << "dim Inn = " << inn.dim() << "\n";
    if (inn.dim() == 0) {
        std::cout << "basis: (none)\n";
    } else {
        std::cout << "basis:\n";
        for (std::size_t b = 0; b < inn.basis.size(); ++b) {
            std::cout << "B[" << b + 1 << "]:\n";
            print_matrix(std::cout, inn.basis[b], "  ");
        }
    }
    return 0;
}

int run_der(const AlgebraSpec& a, bool json_output) {
    const DerivationSpace der = derivation_space(a);
    if (json_output) {
        ordered_json basis = ordered_json::array();
        for (const Matrix& b : der.basis) basis.push_back(json_matrix(b));
        ordered_json out{{"name", a.name()},
                         {"dim", a.dim()},
                         {"dim_der", der.dim()},
                         {"basis", std::move(basis)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "algebra: " << a.name() << " (dim " << a.dim() << ")\n";
    std::cout << "dim Der = " << der.dim() << "\n";
    if (der.dim() == 0) {
        std::cout << "basis: (none)\n";
    } else {
        std::cout << "basis:\n";
        for (std::size_t b = 0; b < der.basis.size(); ++b) {
            std::cout << "D[" << b + 1 << "]:\n";
            print_matrix(std::cout, der.basis[b], "  ");
        }
    }
    return 0;
}

ordered_json json_subspace(const Subspace& s) {
    ordered_json basis = ordered_json::array();
    for (const Vec& v : s.basis()) basis.push_back(json_vec(v));
    return ordered_json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

void print_annihilator(std::ostream& os, const char* label, const AlgebraSpec& a,
                       const Subspace& s) {
    os << "dim " << label << " = " << s.dim() << "\n";
    for (const Vec& v : s.basis()) os << "  " << vec_string(v) << "\n";
    const IdealCheck ideal = is_two_sided_ideal(a, s);
    os << label << " two-sided ideal: " << (ideal.ok ? "yes" : "no") << "\n";
    if (!ideal.ok) {
        const Vec& b = s.basis()[ideal.subspace_index];
        os << "  witness: " << (ideal.multiplied_from_right ? "b ∘ e_" : "e_")
           << ideal.algebra_index << (ideal.multiplied_from_right ? "" : " ∘ b") << " = "
           << vec_string(ideal.escaping_product) << " for b = " << vec_string(b)
           << " escapes the subspace\n";
    }
}

ordered_json json_ideal(const AlgebraSpec& a, const Subspace& s) {
    const IdealCheck ideal = is_two_sided_ideal(a, s);
    ordered_json out{{"two_sided_ideal", ideal.ok}};
    if (!ideal.ok)
        out["witness"] = ordered_json{
            {"subspace_basis_index", ideal.subspace_index + 1},
            {"algebra_basis_index", ideal.algebra_index},
            {"side", ideal.multiplied_from_right ? "right" : "left"},
            {"product", json_vec(ideal.escaping_product)}};
    return out;
}

int run_ann(const AlgebraSpec& a, bool json_output) {
    const Subspace left = annihilator_left(a);
    const Subspace right = annihilator_right(a);
    if (json_output) {
        ordered_json l = json_subspace(left);
        l.update(json_ideal(a, left));
        ordered_json r = json_subspace(right);
        r.update(json_ideal(a, right));
        ordered_json out{{"name", a.name()},
                         {"dim", a.dim()},
                         {"ann_left", std::move(l)},
                         {"ann_right", std::move(r)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "algebra: " << a.name() << " (dim " << a.dim() << ")\n";
    print_annihilator(std::cout, "Ann_L", a, left);
    print_annihilator(std::cout, "Ann_R", a, right);
    return 0;
}

int run_props(const AlgebraSpec& a, bool json_output, std::uint64_t seed) {
    const std::size_t n = a.dim();
    const auto violations = check_zinbiel(a);
    const DerivationSpace der = derivation_space(a);
    const std::vector<Matrix> gens = ad_generators(a);

    bool leibniz_ok = true, operator_ok = true, lie_ok = true;
    for (const Matrix& d : der.basis) {
        leibniz_ok = leibniz_ok && is_derivation(a, d).ok;
        operator_ok = operator_ok && check_mult_operator_identity(a, d).holds();
        lie_ok = lie_ok && check_lie_derivation(a, d).holds();
    }

    const InnerIdealReport ideal = check_inner_ideal(a);
    const bool linearity_ok = ad_linearity_check(a, kPropsTrials, seed);

    std::size_t gens_derivations = 0;
    std::optional<DerivationCheck> first_gen_failure;
    for (const Matrix& g : gens) {
        const DerivationCheck c = is_derivation(a, g);
        if (c.ok)
            ++gens_derivations;
        else if (!first_gen_failure)
            first_gen_failure = c;
    }

    std::size_t left_derivations = 0, right_derivations = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const Vec et = basis_vec(n, t);
        if (is_derivation(a, left_mult(a, et)).ok) ++left_derivations;
        if (is_derivation(a, right_mult(a, et)).ok) ++right_derivations;
    }

    const JacobiResult jacobi = check_jacobi(commutator(a));

    const bool asserted_ok = violations.empty() && leibniz_ok && operator_ok && lie_ok &&
                             ideal.bracket_identity_holds && linearity_ok;

    if (json_output) {
        ordered_json out{
            {"name", a.name()},
            {"dim", n},
            {"seed", seed},
            {"zinbiel", violations.empty()},
            {"dim_der", der.dim()},
            {"leibniz_on_der_basis", leibniz_ok},
            {"mult_operator_identities", operator_ok},
            {"lie_derivation", lie_ok},
            {"bracket_identity_with_generators", ideal.bracket_identity_holds},
            {"ad_linearity", linearity_ok},
            {"ok", asserted_ok},
            {"diagnostics",
             ordered_json{
                 {"generators_that_are_derivations", gens_derivations},
                 {"generator_count", n},
                 {"inner_commutators_all_zero", ideal.commutators_all_zero},
                 {"inner_commutators_in_inner", ideal.commutators_in_inner},
                 {"left_mult_operators_in_der", left_derivations},
                 {"right_mult_operators_in_der", right_derivations},
                 {"jacobi_on_commutator", jacobi.ok()},
             }},
        };
        std::cout << out.dump(2) << "\n";
        return asserted_ok ? 0 : 1;
    }

    const auto verdict = [](bool ok) { return ok ? "ok" : "FAIL"; };
    std::cout << "algebra: " << a.name() << " (dim " << n << ")\n";
    std::cout << "zinbiel identity (" << n * n * n << " triples): "
              << verdict(violations.empty()) << "\n";
    std::cout << "derivation space: dim " << der.dim() << "\n";
    std::cout << "Leibniz residual on Der basis: " << verdict(leibniz_ok) << "\n";
    std::cout << "operator identities [d, L_u] = L_{d(u)}, [d, R_u] = R_{d(u)}: "
              << verdict(operator_ok) << "\n";
    std::cout << "Lie-Leibniz on the commutator bracket: " << verdict(lie_ok) << "\n";
    std::cout << "bracket identity d B_t - B_t d = ad_{d(e_t)} on Der basis: "
              << verdict(ideal.bracket_identity_holds) << "\n";
    std::cout << "ad linearity (" << kPropsTrials << " trials, seed " << seed
              << "): " << verdict(linearity_ok) << "\n";
    std::cout << "[diagnostic] ad generators that are derivations: " << gens_derivations << "/"
              << n;
    if (first_gen_failure)
        std::cout << " (first failure at basis pair (" << first_gen_failure->i << ", "
                  << first_gen_failure->j << "))";
    std::cout << "\n";
    std::cout << "[diagnostic] commutators [B_s, B_t]: ";
    if (ideal.commutators_all_zero)
        std::cout << "all zero\n";
    else if (ideal.commutators_in_inner)
        std::cout << "nonzero (first at (" << ideal.first_nonzero_commutator->first << ", "
                  << ideal.first_nonzero_commutator->second << ")), all contained in Inn\n";
    else
        std::cout << "escape Inn (first at (" << ideal.first_escaping_commutator->first << ", "
                  << ideal.first_escaping_commutator->second << "))\n";
    std::cout << "[diagnostic] multiplication operators that are derivations: L "
              << left_derivations << "/" << n << ", R " << right_derivations << "/" << n << "\n";
    std::cout << "[diagnostic] Jacobi on the commutator bracket: "
              << (jacobi.ok() ? "holds"
                              : (jacobi.antisymmetric ? "fails" : "bracket not antisymmetric"))
              << "\n";
    std::cout << (asserted_ok ? "all checked properties hold\n" : "some checked property FAILED\n");
    return asserted_ok ? 0 : 1;
}

Bindings parse_bindings(const std::vector<std::string>& params) {
    Bindings b;
    for (const std::string& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CatalogError(CatalogErrorKind::missing_binding,
                               "--param expects NAME=VALUE, got '" + p + "'");
        const std::string name = p.substr(0, eq);
        b[name] = Rational::from_string(p.substr(eq + 1));
    }
    return b;
}

int run_catalog_list(bool json_output) {
    const auto ids = list_entries();
    if (json_output) {
        ordered_json out{{"entries", ids}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& id : ids) std::cout << id << "\n";
    }
    return 0;
}

int run_catalog_show(const std::string& id, const std::vector<std::string>& params) {
    std::cout << emit_algebra(instantiate(id, parse_bindings(params)));
    return 0;
}

int run_catalog_report(const std::string& format, bool json_output) {
    ReportFormat fmt = ReportFormat::table;
    if (json_output || format == "json")
        fmt = ReportFormat::json;
    else if (format == "markdown")
        fmt = ReportFormat::markdown;
    const auto rows = generate_report();
    std::cout << render_report(rows, fmt);
    return all_match(rows) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact structure-constant computations for Zinbiel algebras: identity "
                 "checking, inner and full derivations, annihilators, and the built-in "
                 "classification catalog"};
    app.require_subcommand(1);

    bool json_output = false;
    std::uint64_t seed = kDefaultSeed;
    app.add_flag("--json", json_output, "machine-readable JSON output");
    app.add_option("--seed", seed, "seed for randomized checks")->envname("ZINBIEL_SEED");

    std::string file;
    const char* file_help = "algebra file (see README for the format)";
    auto* check = app.add_subcommand("check", "verify the Zinbiel identity on basis triples");
    check->add_option("file", file, file_help)->required();
    auto* inner = app.add_subcommand("inner", "symbolic ad_w matrix and the space Inn(A)");
    inner->add_option("file", file, file_help)->required();
    auto* der = app.add_subcommand("der", "the full derivation algebra Der(A)");
    der->add_option("file", file, file_help)->required();
    auto* ann = app.add_subcommand("ann", "left/right annihilators and ideal checks");
    ann->add_option("file", file, file_help)->required();
    auto* props = app.add_subcommand("props", "full property battery for one algebra");
    props->add_option("file", file, file_help)->required();

    auto* catalog = app.add_subcommand("catalog", "built-in classified algebras");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list entry ids");
    std::string show_id;
    std::vector<std::string> show_params;
    auto* show = catalog->add_subcommand("show", "emit one entry as an algebra file");
    show->add_option("id", show_id, "catalog id, e.g. A_3^6")->required();
    show->add_option("--param", show_params, "parameter binding NAME=VALUE (repeatable)");
    std::string report_format = "table";
    auto* report = catalog->add_subcommand("report", "recompute the classification tables");
    report->add_option("--format", report_format, "output format")
        ->check(CLI::IsMember({"table", "markdown", "json"}));

    // Let --json / --seed appear after the subcommand as well as before it.
    for (auto* sub : {check, inner, der, ann, props, catalog, list, show, report})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(load_algebra(file), json_output);
        if (*inner) return run_inner(load_algebra(file), json_output);
        if (*der) return run_der(load_algebra(file), json_output);
        if (*ann) return run_ann(load_algebra(file), json_output);
        if (*props) return run_props(load_algebra(file), json_output, seed);
        if (*catalog) {
            if (*catalog->get_subcommand("list")) return run_catalog_list(json_output);
            if (*show) return run_catalog_show(show_id, show_params);
            if (*report) return run_catalog_report(report_format, json_output);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CatalogError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
