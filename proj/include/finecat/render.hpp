#pragma once

// Serialization of sequences, triangles, scalar counts, and verdict reports.
// Numbers always serialize as decimal strings; values outgrow 64 bits well
// inside the supported ranges.

#include <string>
#include <vector>

#include "finecat/identities.hpp"
#include "finecat/ints.hpp"
#include "finecat/sequence.hpp"
#include "finecat/triangle.hpp"

namespace finecat::render {

enum class OutputFormat { kTable, kCsv, kJson, kBfile };

// Accepts "table", "csv", "json", "bfile".
OutputFormat parse_format(const std::string& name);

std::string format_name(OutputFormat f);

// bfile lines are "n value", 1-indexed, newline-terminated, nothing else.
std::string render_sequence(const Sequence& s, OutputFormat f);

// json schema: {"m": int, "rows": [[string...]...], "method": string}.
// bfile linearizes the rows in reading order under a single running index.
std::string render_triangle(const Triangle& t, int m, const std::string& method,
                            OutputFormat f);

std::string render_value(const Int& v, OutputFormat f);

// Reports render as text lines, csv rows, or a json array; there is no
// bfile form.
std::string render_reports(const std::vector<identities::EvalResult>& rs,
                           OutputFormat f);

}  // namespace finecat::render
