#include "zinbiel/report.hpp"

#include <json.hpp>

#include <sstream>

namespace zinbiel {

std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::match: return "match";
        case RowStatus::dimension_match_matrix_differs: return "dimension-match-matrix-differs";
        case RowStatus::mismatch: return "mismatch";
    }
    return "";
}

std::string to_string(TableStatus s) {
    return s == TableStatus::verified ? "verified" : "flagged";
}

namespace {

// The cases a table row splits into; parameter-free entries have the single
// unnamed case.  Generic samples use the value 2, which avoids every special
// value occurring in the catalog (0, 1, -1).
std::vector<std::pair<std::string, Bindings>> table_cases(const CatalogEntry& entry) {
    if (entry.params.empty()) return {{"", {}}};
    if (entry.id == "A_3^6")
        return {{"lambda != 0 (sampled at 2)", {{"lambda", Rational(2)}}}};
    if (entry.id == "A_4^8" || entry.id == "A_4^9")
        return {{"alpha = 0", {{"alpha", Rational(0)}}},
                {"alpha != 0 (sampled at 2)", {{"alpha", Rational(2)}}}};
    if (entry.id == "A_4^15")
        return {{"alpha = -1", {{"alpha", Rational(-1)}}},
                {"alpha != -1 (sampled at 2)", {{"alpha", Rational(2)}}}};
    return {{"", {}}};
}

std::vector<std::string> matrix_lines(const SymbolicAdMatrix& m) {
    std::vector<std::string> lines;
    lines.reserve(m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) lines.push_back(m.row_string(j));
    return lines;
}

std::string render_table(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    std::size_t matches = 0, matrix_differs = 0, mismatches = 0;
    for (const ReportRow& row : rows) {
        switch (row.status) {
            case RowStatus::match: ++matches; break;
            case RowStatus::dimension_match_matrix_differs: ++matrix_differs; break;
            case RowStatus::mismatch: ++mismatches; break;
        }
        out << "== " << row.id;
        if (!row.case_label.empty()) out << "  [" << row.case_label << "]";
        out << " ==\n";
        out << "status: " << to_string(row.status);
        if (row.table_status == TableStatus::flagged) out << "  (row flagged)";
        out << "\n";
        out << "dim:    computed " << row.computed_dim << ", published " << row.expected_dim
            << "\n";
        if (row.computed == row.expected) {
            out << "matrix (computed == published):\n";
            for (const auto& line : matrix_lines(row.computed)) out << "    " << line << "\n";
        } else {
            out << "computed matrix:\n";
            for (const auto& line : matrix_lines(row.computed)) out << "    " << line << "\n";
            out << "published matrix:\n";
            for (const auto& line : matrix_lines(row.expected)) out << "    " << line << "\n";
        }
        if (!row.annotation.empty()) out << "note:   " << row.annotation << "\n";
        out << "\n";
    }
    out << rows.size() << " rows: " << matches << " match, " << matrix_differs
        << " dimension-match-matrix-differs, " << mismatches << " mismatch\n";
    return out.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string render_markdown(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "| Class | Case | Computed matrix | Published matrix | Dim (computed/published) "
           "| Status | Note |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const ReportRow& row : rows) {
        const std::string computed = join(matrix_lines(row.computed), "<br>");
        const std::string expected = row.computed == row.expected
                                         ? "same"
                                         : join(matrix_lines(row.expected), "<br>");
        out << "| " << row.id << " | " << row.case_label << " | `" << computed << "` | "
            << (expected == "same" ? expected : "`" + expected + "`") << " | "
            << row.computed_dim << "/" << row.expected_dim << " | " << to_string(row.status)
            << (row.table_status == TableStatus::flagged ? " (flagged)" : "") << " | "
            << row.annotation << " |\n";
    }
    return out.str();
}

std::string render_json(const std::vector<ReportRow>& rows) {
    using ordered = nlohmann::ordered_json;
    ordered arr = ordered::array();
    for (const ReportRow& row : rows) {
        ordered bindings = ordered::object();
        for (const auto& [name, value] : row.bindings) bindings[name] = value.str();
        arr.push_back(ordered{
            {"id", row.id},
            {"case", row.case_label},
            {"bindings", std::move(bindings)},
            {"computed_dim", row.computed_dim},
            {"published_dim", row.expected_dim},
            {"computed_matrix", matrix_lines(row.computed)},
            {"published_matrix", matrix_lines(row.expected)},
            {"status", to_string(row.status)},
            {"table_status", to_string(row.table_status)},
            {"note", row.annotation},
        });
    }
    return ordered{{"rows", std::move(arr)}}.dump(2) + "\n";
}

} // namespace

std::vector<ReportRow> generate_report() {
    std::vector<ReportRow> rows;
    for (const CatalogEntry& entry : catalog_entries()) {
        for (const auto& [label, bindings] : table_cases(entry)) {
            const AlgebraSpec a = instantiate(entry.id, bindings);
            SymbolicAdMatrix computed = symbolic_ad(a);
            SymbolicAdMatrix expected = entry.expected_matrix(bindings);
            const std::size_t computed_dim = inner_derivation_space(a).dim();
            const std::size_t expected_dim = entry.expected_dim(bindings);

            RowStatus status;
            if (computed_dim != expected_dim)
                status = RowStatus::mismatch;
            else if (computed == expected)
                status = RowStatus::match;
            else
                status = RowStatus::dimension_match_matrix_differs;

            rows.push_back(ReportRow{entry.id, label, bindings, computed_dim, expected_dim,
                                     std::move(computed), std::move(expected), status,
                                     entry.table_status, entry.table_note});
        }
    }
    return rows;
}

std::string render_report(const std::vector<ReportRow>& rows, ReportFormat format) {
    switch (format) {
        case ReportFormat::table: return render_table(rows);
        case ReportFormat::markdown: return render_markdown(rows);
        case ReportFormat::json: return render_json(rows);
    }
    return "";
}

bool all_match(const std::vector<ReportRow>& rows) {
    for (const ReportRow& row : rows)
        if (row.status != RowStatus::match) return false;
    return true;
}

} // namespace zinbiel
