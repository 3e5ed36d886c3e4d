#include "zinbiel/catalog.hpp"

#include <tuple>

namespace zinbiel {

namespace {

CatalogCoeff c(long long num, long long den = 1) { return {Rational(num, den), ""}; }
CatalogCoeff cp(long long scale, const char* param) { return {Rational(scale), param}; }
CatalogTerm t(std::size_t basis, CatalogCoeff coeff) { return {basis, coeff}; }

// (row, col, coordinate index, coefficient), all 1-based: the printed matrix
// entry at (row, col) contains coefficient * a_coordinate.
using FormEntry = std::tuple<int, int, int, Rational>;

SymbolicAdMatrix forms(std::size_t n, std::initializer_list<FormEntry> entries) {
    SymbolicAdMatrix m(n);
    for (const auto& [row, col, coord, coeff] : entries)
        m.at(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1))
            .coeffs[static_cast<std::size_t>(coord - 1)] += coeff;
    return m;
}

std::function<std::size_t(const Bindings&)> dim_always(std::size_t d) {
    return [d](const Bindings&) { return d; };
}

std::function<SymbolicAdMatrix(const Bindings&)> matrix_always(std::size_t n,
                                                               std::initializer_list<FormEntry> entries) {
    SymbolicAdMatrix m = forms(n, entries);
    return [m](const Bindings&) { return m; };
}

std::vector<Bindings> no_params() { return {Bindings{}}; }

std::vector<Bindings> samples(const char* name, std::initializer_list<Rational> values) {
    std::vector<Bindings> out;
    for (const Rational& v : values) out.push_back(Bindings{{name, v}});
    return out;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    const Rational one(1), minus_one(-1), two(2), minus_two(-2), half(1, 2);

    cat.push_back(CatalogEntry{
        .id = "A_2^1",
        .dim = 2,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(2, c(1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(0),
        .expected_matrix = matrix_always(2, {}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_3^1",
        .dim = 3,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(0),
        .expected_matrix = matrix_always(3, {}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_3^2",
        .dim = 3,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(3, c(1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(0),
        .expected_matrix = matrix_always(3, {}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_3^3",
        .dim = 3,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(3, c(1))}}, {2, 2, {t(3, c(1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(0),
        .expected_matrix = matrix_always(3, {}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_3^4",
        .dim = 3,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 2, {t(3, c(1, 2))}}, {2, 1, {t(3, c(-1, 2))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(3, {{3, 1, 2, one}, {3, 2, 1, minus_one}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_3^5",
        .dim = 3,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{2, 1, {t(3, c(1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(3, {{3, 1, 2, minus_one}, {3, 2, 1, one}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_3^6",
        .dim = 3,
        .params = {"lambda"},
        .param_constraints = "lambda != 0",
        .forbidden_values = {{"lambda", Rational(0)}},
        .products = {{1, 1, {t(3, c(1))}},
                     {1, 2, {t(3, c(1))}},
                     {2, 2, {t(3, cp(1, "lambda"))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(3, {{3, 1, 2, one}, {3, 2, 1, minus_one}}),
        .samples = samples("lambda", {Rational(-1), Rational(1, 2), Rational(2), Rational(-3)}),
    });

    cat.push_back(CatalogEntry{
        .id = "A_3^7",
        .dim = 3,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(2, c(1))}}, {1, 2, {t(3, c(1, 2))}}, {2, 1, {t(3, c(1))}}},
        .table_status = TableStatus::flagged,
        .table_note = "published row (zero matrix, dimension 0) is inconsistent with the "
                      "published products, which give row 3 = (-1/2a_2, 1/2a_1, 0) and "
                      "dimension 2",
        .expected_dim = dim_always(0),
        .expected_matrix = matrix_always(3, {}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^1",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(2, c(1))}},
                     {1, 2, {t(3, c(1))}},
                     {2, 1, {t(3, c(2))}},
                     {1, 3, {t(4, c(1))}},
                     {2, 2, {t(4, c(3))}},
                     {3, 1, {t(4, c(3))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(3),
        .expected_matrix = matrix_always(4, {{3, 1, 2, minus_one},
                                             {3, 2, 1, one},
                                             {4, 1, 3, minus_two},
                                             {4, 3, 1, two}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^2",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(3, c(1))}},
                     {1, 2, {t(4, c(1))}},
                     {1, 3, {t(4, c(1))}},
                     {3, 1, {t(4, c(2))}}},
        .table_status = TableStatus::flagged,
        .table_note = "published dimension 3 counts the coordinates appearing in the "
                      "matrix; the published matrix itself (which matches the products) "
                      "spans dimension 2, since a_2 and a_3 enter only through a_2 - a_3",
        .expected_dim = dim_always(3),
        .expected_matrix = matrix_always(4, {{4, 1, 2, one},
                                             {4, 1, 3, minus_one},
                                             {4, 2, 1, minus_one},
                                             {4, 3, 1, one}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^3",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(3, c(1))}},
                     {1, 3, {t(4, c(1))}},
                     {2, 2, {t(4, c(1))}},
                     {3, 1, {t(4, c(2))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(4, {{4, 1, 3, minus_one}, {4, 3, 1, one}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^4",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 2, {t(3, c(1))}}, {1, 3, {t(4, c(1))}}, {2, 1, {t(3, c(-1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(3),
        .expected_matrix = matrix_always(4, {{3, 1, 2, two},
                                             {3, 2, 1, minus_two},
                                             {4, 1, 3, one},
                                             {4, 3, 1, minus_one}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^5",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 2, {t(3, c(1))}},
                     {1, 3, {t(4, c(1))}},
                     {2, 1, {t(3, c(-1))}},
                     {2, 2, {t(4, c(1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(3),
        .expected_matrix = matrix_always(4, {{3, 1, 2, two},
                                             {3, 2, 1, minus_two},
                                             {4, 1, 3, one},
                                             {4, 3, 1, minus_one}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^6",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(4, c(1))}},
                     {1, 2, {t(3, c(1))}},
                     {2, 1, {t(3, c(-1))}},
                     {2, 2, {t(3, c(-2)), t(4, c(1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(4, {{3, 1, 2, two}, {3, 2, 1, minus_two}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^7",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 2, {t(3, c(1))}}, {2, 1, {t(4, c(1))}}, {2, 2, {t(3, c(-1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(4, {{3, 1, 2, one},
                                             {3, 2, 1, minus_one},
                                             {4, 1, 2, minus_one},
                                             {4, 2, 1, one}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^8",
        .dim = 4,
        .params = {"alpha"},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(3, c(1))}},
                     {1, 2, {t(4, c(1))}},
                     {2, 1, {t(3, cp(-1, "alpha"))}},
                     {2, 2, {t(4, c(-1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(2),
        .expected_matrix =
            [](const Bindings& b) {
                const Rational alpha = b.at("alpha");
                return forms(4, {{3, 1, 2, alpha},
                                 {3, 2, 1, -alpha},
                                 {4, 1, 2, Rational(1)},
                                 {4, 2, 1, Rational(-1)}});
            },
        .samples = samples("alpha", {Rational(0), Rational(-1), Rational(1, 2), Rational(2),
                                     Rational(-3)}),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^9",
        .dim = 4,
        .params = {"alpha"},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(4, c(1))}},
                     {1, 2, {t(4, cp(1, "alpha"))}},
                     {2, 1, {t(4, cp(-1, "alpha"))}},
                     {2, 2, {t(4, c(1))}},
                     {3, 3, {t(4, c(1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim =
            [](const Bindings& b) -> std::size_t { return b.at("alpha").is_zero() ? 0 : 2; },
        .expected_matrix =
            [](const Bindings& b) {
                const Rational two_alpha = Rational(2) * b.at("alpha");
                return forms(4, {{4, 1, 2, two_alpha}, {4, 2, 1, -two_alpha}});
            },
        .samples = samples("alpha", {Rational(0), Rational(-1), Rational(1, 2), Rational(2),
                                     Rational(-3)}),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^10",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(4, c(1))}},
                     {1, 3, {t(4, c(1))}},
                     {2, 1, {t(4, c(-1))}},
                     {2, 2, {t(4, c(1))}},
                     {3, 1, {t(4, c(1))}}},
        .table_status = TableStatus::flagged,
        .table_note = "published row 4 = (2a_2, -2a_1, 0, 0); the published products give "
                      "(a_2, -a_1, 0, 0) (same span, so the dimension 2 is unaffected)",
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(4, {{4, 1, 2, two}, {4, 2, 1, minus_two}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^11",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = {{1, 1, {t(4, c(1))}},
                     {1, 2, {t(4, c(1))}},
                     {2, 1, {t(4, c(-1))}},
                     {3, 3, {t(4, c(1))}}},
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(4, {{4, 1, 2, two}, {4, 2, 1, minus_two}}),
        .samples = no_params(),
    });

    const std::vector<CatalogProduct> printed_12_to_16 = {{1, 2, {t(3, c(1))}},
                                                          {2, 1, {t(4, c(1))}}};
    const char* identical_products_note =
        "products printed identically to A_4^12; the published matrix does not match "
        "them (recomputation gives rows 3, 4 = (a_2, -a_1, 0, 0), (-a_2, a_1, 0, 0))";

    cat.push_back(CatalogEntry{
        .id = "A_4^12",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = printed_12_to_16,
        .table_status = TableStatus::verified,
        .table_note = "",
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(4, {{3, 1, 2, one},
                                             {3, 2, 1, minus_one},
                                             {4, 1, 2, minus_one},
                                             {4, 2, 1, one}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^13",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = printed_12_to_16,
        .table_status = TableStatus::flagged,
        .table_note = identical_products_note,
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(4, {{3, 1, 2, two}, {3, 2, 1, minus_two}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^14",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = printed_12_to_16,
        .table_status = TableStatus::flagged,
        .table_note = identical_products_note,
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(4, {{4, 1, 2, minus_one}, {4, 2, 1, one}}),
        .samples = no_params(),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^15",
        .dim = 4,
        .params = {"alpha"},
        .param_constraints = "alpha != 1",
        .forbidden_values = {{"alpha", Rational(1)}},
        .products = printed_12_to_16,
        .table_status = TableStatus::flagged,
        .table_note = "declares an alpha that does not occur in its printed products; "
                      "otherwise as A_4^13 (the published matrix does not match the "
                      "products; alpha = 1 is excluded because the published matrix "
                      "divides by 1 - alpha)",
        .expected_dim = dim_always(2),
        .expected_matrix =
            [](const Bindings& b) {
                const Rational alpha = b.at("alpha");
                if (alpha == Rational(-1))
                    return forms(4, {{4, 1, 2, Rational(1)}, {4, 2, 1, Rational(-1)}});
                const Rational kappa =
                    Rational(1) - (Rational(1) + alpha) / (Rational(1) - alpha);
                return forms(4, {{4, 1, 2, kappa}, {4, 2, 1, -kappa}});
            },
        .samples = samples("alpha", {Rational(-1), Rational(0), Rational(1, 2), Rational(2),
                                     Rational(-3)}),
    });

    cat.push_back(CatalogEntry{
        .id = "A_4^16",
        .dim = 4,
        .params = {},
        .param_constraints = "",
        .forbidden_values = {},
        .products = printed_12_to_16,
        .table_status = TableStatus::flagged,
        .table_note = identical_products_note,
        .expected_dim = dim_always(2),
        .expected_matrix = matrix_always(4, {{4, 1, 2, two}, {4, 2, 1, minus_two}}),
        .samples = no_params(),
    });

    return cat;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

std::vector<std::string> list_entries() {
    std::vector<std::string> ids;
    for (const CatalogEntry& e : catalog_entries()) ids.push_back(e.id);
    return ids;
}

const CatalogEntry& find_entry(const std::string& id) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.id == id) return e;
    throw CatalogError(CatalogErrorKind::unknown_id, "unknown catalog id '" + id + "'");
}

void validate_bindings(const CatalogEntry& entry, const Bindings& b) {
    for (const std::string& p : entry.params)
        if (!b.count(p))
            throw CatalogError(CatalogErrorKind::missing_binding,
                               "entry " + entry.id + " requires parameter '" + p + "'");
    for (const auto& [name, value] : b) {
        bool declared = false;
        for (const std::string& p : entry.params) declared = declared || p == name;
        if (!declared)
            throw CatalogError(CatalogErrorKind::extra_binding,
                               "entry " + entry.id + " does not take parameter '" + name + "'");
        (void)value;
    }
    for (const auto& [name, forbidden] : entry.forbidden_values)
        if (b.at(name) == forbidden)
            throw CatalogError(CatalogErrorKind::constraint_violation,
                               "constraint violated for " + entry.id + ": " +
                                   entry.param_constraints);
}

AlgebraSpec instantiate(const std::string& id, const Bindings& b) {
    const CatalogEntry& entry = find_entry(id);
    validate_bindings(entry, b);

    std::string name = entry.id;
    if (!entry.params.empty()) {
        name += " (";
        bool first = true;
        for (const std::string& p : entry.params) {
            if (!first) name += ", ";
            first = false;
            name += p + " = " + b.at(p).str();
        }
        name += ")";
    }

    AlgebraSpec spec(name, entry.dim);
    for (const CatalogProduct& prod : entry.products)
        for (const CatalogTerm& term : prod.result)
            spec.add_product_term(prod.left - 1, prod.right - 1, term.basis - 1,
                                  term.coeff.value(b));
    return spec;
}

std::size_t expected_inner_dimension(const std::string& id, const Bindings& b) {
    const CatalogEntry& entry = find_entry(id);
    validate_bindings(entry, b);
    return entry.expected_dim(b);
}

SymbolicAdMatrix expected_matrix(const std::string& id, const Bindings& b) {
    const CatalogEntry& entry = find_entry(id);
    validate_bindings(entry, b);
    return entry.expected_matrix(b);
}

} // namespace zinbiel
