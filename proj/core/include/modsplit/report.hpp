#pragma once

#include <string>
#include <vector>

#include "modsplit/check.hpp"

namespace modsplit {

enum class OutputFormat { md, csv, json };
OutputFormat parse_format(const std::string& s);  // InvalidArgument
const char* format_name(OutputFormat f);

// A rendered-on-demand table; cells are plain strings, integers in decimal.
struct Table {
    std::string name;  // "2", "3", "4", "disc"
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Recomputes the named table.  UnknownTable for anything else.
Table build_table(const std::string& which, unsigned jobs = 0);
Table table2(unsigned jobs = 0);
Table table3();
Table table4(unsigned jobs = 0);
Table table_disc();

std::string render_md(const Table& t);
std::string render_csv(const Table& t);

// {"paper_tables": {...}, "checks": [...], "meta": {...}}; every integer as a string.
std::string render_json(const std::vector<Table>& tables, const std::vector<CheckReport>& checks, bool with_timing = false);

std::string render_checks_md(const std::vector<CheckReport>& checks, bool with_timing = false);
std::string render_checks_csv(const std::vector<CheckReport>& checks, bool with_timing = false);

std::string render(const Table& t, OutputFormat f);

constexpr const char* kVersion = "1.0.0";

}  // namespace modsplit
