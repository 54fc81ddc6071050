#pragma once

#include <cstdint>
#include <iosfwd>

#include <nlohmann/json.hpp>

#include "coinnim/solver.hpp"
#include "coinnim/verifier.hpp"

namespace coinnim {

/// {"spec":{...},"total":N,"mismatches":[{"pos":[w,x,y,z],"brute":"P|N","closed":"P|N",...}],
///  "elapsed_ms":T}
nlohmann::json to_json(const DiscrepancyReport& report);
nlohmann::json to_json(const PushCalibration& calibration);

/// Header `w,x,y,z,grundy,brute,closed,agree`, one line per swept row.
void write_csv(const DiscrepancyReport& report, std::ostream& out);

/// Summary line, then one line per mismatch.
void write_text(const DiscrepancyReport& report, std::ostream& out);

/// Grundy/outcome table `w,x,y,z,valid,grundy,outcome,closed`. Rook tables
/// list every tuple in 0..bound and flag coincident ones invalid; coin tables
/// list only the valid on-board tuples in 1..bound.
void export_table(Engine& engine, Variant variant, std::int32_t bound, std::ostream& out);

}  // namespace coinnim
