#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "bachet/theorems.hpp"

namespace bachet {

enum class OutputFormat { table, csv, jsonl };

std::optional<OutputFormat> output_format_from_string(std::string_view s) noexcept;

/// Header: p,class,a_rep,N,b,t,n,m,order3 then one column per ClaimId.
void write_csv(std::ostream& os, const std::vector<ClassReport>& rows);
/// One object per row; keys as the CSV columns, verdicts nested under "verdicts".
void write_jsonl(std::ostream& os, const std::vector<ClassReport>& rows);
/// Aligned columns for reading; not a stable format.
void write_table(std::ostream& os, const std::vector<ClassReport>& rows);
void write_report(std::ostream& os, const std::vector<ClassReport>& rows, OutputFormat format);

/// Inverse of write_csv / write_jsonl. Throws InvalidArgument on malformed input.
std::vector<ClassReport> parse_csv(std::istream& is);
std::vector<ClassReport> parse_jsonl(std::istream& is);

}  // namespace bachet
