#include "zinbiel/report.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

using namespace zinbiel;

namespace {

const std::vector<ReportRow>& rows() {
    static const std::vector<ReportRow> r = generate_report();
    return r;
}

const ReportRow& row_for(const std::string& id, const std::string& case_label = "") {
    for (const ReportRow& row : rows())
        if (row.id == id && row.case_label == case_label) return row;
    REQUIRE_MESSAGE(false, "no report row for ", id);
    std::abort();  // REQUIRE throws first
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("the report carries one row per table case") {
    REQUIRE(rows().size() == 27);

    std::map<RowStatus, std::size_t> counts;
    for (const ReportRow& row : rows()) ++counts[row.status];
    CHECK(counts[RowStatus::match] == 19);
    CHECK(counts[RowStatus::dimension_match_matrix_differs] == 6);
    CHECK(counts[RowStatus::mismatch] == 2);
    CHECK_FALSE(all_match(rows()));
}

TEST_CASE("statuses land on the expected rows") {
    CHECK(row_for("A_2^1").status == RowStatus::match);
    CHECK(row_for("A_3^4").status == RowStatus::match);
    CHECK(row_for("A_3^6", "lambda != 0 (sampled at 2)").status == RowStatus::match);
    CHECK(row_for("A_4^8", "alpha = 0").status == RowStatus::match);
    CHECK(row_for("A_4^8", "alpha != 0 (sampled at 2)").status == RowStatus::match);
    CHECK(row_for("A_4^9", "alpha = 0").status == RowStatus::match);
    CHECK(row_for("A_4^12").status == RowStatus::match);

    CHECK(row_for("A_3^7").status == RowStatus::mismatch);
    CHECK(row_for("A_4^2").status == RowStatus::mismatch);

    for (const char* id : {"A_4^10", "A_4^13", "A_4^14", "A_4^16"})
        CHECK(row_for(id).status == RowStatus::dimension_match_matrix_differs);
    CHECK(row_for("A_4^15", "alpha = -1").status ==
          RowStatus::dimension_match_matrix_differs);
    CHECK(row_for("A_4^15", "alpha != -1 (sampled at 2)").status ==
          RowStatus::dimension_match_matrix_differs);
}

TEST_CASE("mismatch rows keep both sides for inspection") {
    const ReportRow& r37 = row_for("A_3^7");
    CHECK(r37.computed_dim == 2);
    CHECK(r37.expected_dim == 0);
    CHECK(r37.computed.row_string(2) == "-1/2a_2  1/2a_1  0");
    CHECK(r37.expected.row_string(2) == "0  0  0");
    CHECK(r37.table_status == TableStatus::flagged);
    CHECK_FALSE(r37.annotation.empty());

    // Equal matrices with unequal dimensions still count as a mismatch.
    const ReportRow& r42 = row_for("A_4^2");
    CHECK(r42.computed_dim == 2);
    CHECK(r42.expected_dim == 3);
    CHECK(r42.computed == r42.expected);
    CHECK(r42.computed.row_string(3) == "a_2 - a_3  -a_1  a_1  0");
}

TEST_CASE("the matrix-differs rows carry the recomputed ground truth") {
    const ReportRow& r14 = row_for("A_4^14");
    CHECK(r14.computed_dim == 2);
    CHECK(r14.expected_dim == 2);
    CHECK(r14.computed.row_string(2) == "a_2  -a_1  0  0");
    CHECK(r14.computed.row_string(3) == "-a_2  a_1  0  0");
    CHECK(r14.expected.row_string(2) == "0  0  0  0");
    CHECK(r14.expected.row_string(3) == "-a_2  a_1  0  0");

    const ReportRow& r10 = row_for("A_4^10");
    CHECK(r10.computed.row_string(3) == "a_2  -a_1  0  0");
    CHECK(r10.expected.row_string(3) == "2a_2  -2a_1  0  0");
}

TEST_CASE("status and table-status names") {
    CHECK(to_string(RowStatus::match) == "match");
    CHECK(to_string(RowStatus::dimension_match_matrix_differs) ==
          "dimension-match-matrix-differs");
    CHECK(to_string(RowStatus::mismatch) == "mismatch");
    CHECK(to_string(TableStatus::verified) == "verified");
    CHECK(to_string(TableStatus::flagged) == "flagged");
}

TEST_CASE("table rendering") {
    const std::string text = render_report(rows(), ReportFormat::table);
    CHECK(text.find("== A_2^1 ==") != std::string::npos);
    CHECK(text.find("== A_4^8  [alpha = 0] ==") != std::string::npos);
    CHECK(text.find("status: mismatch  (row flagged)") != std::string::npos);
    CHECK(text.find("dim:    computed 2, published 0") != std::string::npos);
    CHECK(text.find("27 rows: 19 match, 6 dimension-match-matrix-differs, 2 mismatch\n") !=
          std::string::npos);
}

TEST_CASE("markdown rendering") {
    const std::string text = render_report(rows(), ReportFormat::markdown);
    CHECK(text.rfind("| Class | Case |", 0) == 0);
    CHECK(text.find("| A_3^7 |") != std::string::npos);
    CHECK(text.find("mismatch (flagged)") != std::string::npos);
    CHECK(text.find("| same |") != std::string::npos);
}

TEST_CASE("json rendering is well-formed and stable") {
    const std::string text = render_report(rows(), ReportFormat::json);
    CHECK(text == render_report(generate_report(), ReportFormat::json));

    const auto doc = nlohmann::json::parse(text);
    REQUIRE(doc.at("rows").size() == 27);
    const auto& first = doc.at("rows").at(0);
    CHECK(first.at("id") == "A_2^1");
    CHECK(first.at("status") == "match");
    CHECK(first.at("table_status") == "verified");
    CHECK(first.at("computed_matrix").size() == 2);

    for (const auto& row : doc.at("rows"))
        if (row.at("id") == "A_4^9" && row.at("case") == "alpha = 0")
            CHECK(row.at("bindings").at("alpha") == "0");
}

} // TEST_SUITE
