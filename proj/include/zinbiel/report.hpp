#pragma once

/*
 * The regression report: one row per catalog entry and table case,
 * comparing the recomputed inner-derivation matrix and dimension against
 * the published row.  Dimensions are compared strictly; a row whose matrix
 * print disagrees while the dimension agrees gets its own status so the
 * two failure modes stay distinguishable.
 */

#include "zinbiel/catalog.hpp"
#include "zinbiel/derivations.hpp"

#include <string>
#include <vector>

namespace zinbiel {

enum class RowStatus { match, dimension_match_matrix_differs, mismatch };

std::string to_string(RowStatus s);
std::string to_string(TableStatus s);

struct ReportRow {
    std::string id;
    std::string case_label;  // "" or e.g. "alpha = 0", "alpha != 0 (sampled at 2)"
    Bindings bindings;
    std::size_t computed_dim;
    std::size_t expected_dim;
    SymbolicAdMatrix computed;
    SymbolicAdMatrix expected;
    RowStatus status;
    TableStatus table_status;
    std::string annotation;
};

std::vector<ReportRow> generate_report();

enum class ReportFormat { table, markdown, json };

std::string render_report(const std::vector<ReportRow>& rows, ReportFormat format);

bool all_match(const std::vector<ReportRow>& rows);

} // namespace zinbiel
