#pragma once

/*
 * Built-in registry of the classified nilpotent Zinbiel algebras of
 * dimensions 2, 3 and 4, together with the published table row for each
 * entry (inner-derivation matrix and dimension) used by the regression
 * report.
 *
 * The product lists are stored exactly as printed, parameters and all.
 * Published rows that recomputation from those same products contradicts
 * are marked flagged and carry a note with the recomputed ground truth;
 * the stored expected values are still the printed ones, so comparisons
 * show the discrepancy instead of hiding it.
 */

#include "zinbiel/algebra.hpp"
#include "zinbiel/derivations.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zinbiel {

using Bindings = std::map<std::string, Rational>;

/// One product coefficient: scale, or scale times a named parameter.
struct CatalogCoeff {
    Rational scale;
    std::string param;

    Rational value(const Bindings& b) const {
        if (param.empty()) return scale;
        return scale * b.at(param);
    }
};

struct CatalogTerm {
    std::size_t basis;  // 1-based target basis index
    CatalogCoeff coeff;
};

struct CatalogProduct {
    std::size_t left, right;  // 1-based
    std::vector<CatalogTerm> result;
};

enum class TableStatus { verified, flagged };

enum class CatalogErrorKind {
    unknown_id,
    missing_binding,
    extra_binding,
    constraint_violation,
};

class CatalogError : public std::runtime_error {
public:
    CatalogError(CatalogErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    CatalogErrorKind kind() const { return kind_; }

private:
    CatalogErrorKind kind_;
};

struct CatalogEntry {
    std::string id;
    std::size_t dim = 0;
    std::vector<std::string> params;
    std::string param_constraints;  // human-readable, e.g. "lambda != 0"
    std::vector<std::pair<std::string, Rational>> forbidden_values;
    std::vector<CatalogProduct> products;
    TableStatus table_status = TableStatus::verified;
    std::string table_note;  // for flagged rows: what recomputation showed

    /// Published table data for this row, as functions of the bindings.
    std::function<std::size_t(const Bindings&)> expected_dim;
    std::function<SymbolicAdMatrix(const Bindings&)> expected_matrix;

    /// Admissible parameter samples used by the regression suite; a single
    /// empty binding for parameter-free entries.
    std::vector<Bindings> samples;
};

/// All 24 entries in table order.
const std::vector<CatalogEntry>& catalog_entries();

/// The entry ids, in table order.
std::vector<std::string> list_entries();

/// Lookup by id; throws CatalogError(unknown_id).
const CatalogEntry& find_entry(const std::string& id);

/// Checks that bindings exactly cover the declared parameters and satisfy
/// the entry's constraints; throws the matching CatalogError otherwise.
void validate_bindings(const CatalogEntry& entry, const Bindings& b);

/// Dense algebra with parameters substituted exactly.
AlgebraSpec instantiate(const std::string& id, const Bindings& b);

/// The published dimension for this row and parameter case.
std::size_t expected_inner_dimension(const std::string& id, const Bindings& b);

/// The published symbolic matrix for this row and parameter case.
SymbolicAdMatrix expected_matrix(const std::string& id, const Bindings& b);

} // namespace zinbiel
