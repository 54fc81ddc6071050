#include "coinnim/report.hpp"

#include <ostream>
#include <string>

#include "coinnim/closed_form.hpp"
#include "coinnim/error.hpp"

namespace coinnim {

namespace {

std::string outcome_str(Outcome o) { return std::string(1, outcome_char(o)); }

nlohmann::json spec_json(const DiscrepancyReport& r) {
  return {
      {"check", r.check},
      {"variant", variant_name(r.spec.variant)},
      {"bound", r.spec.bound},
      {"include_dropped_states", r.spec.include_dropped_states},
      {"push_rule", push_rule_name(r.spec.push_rule)},
  };
}

}  // namespace

nlohmann::json to_json(const DiscrepancyReport& report) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const Mismatch& m : report.mismatches) {
    nlohmann::json entry = {
        {"pos", m.pos},
        {"brute", outcome_str(m.brute)},
        {"closed", outcome_str(m.closed)},
        {"kind", m.kind},
    };
    if (m.grundy) entry["grundy"] = *m.grundy;
    if (m.expected_grundy) entry["expected_grundy"] = *m.expected_grundy;
    if (!m.detail.empty()) entry["detail"] = m.detail;
    mismatches.push_back(std::move(entry));
  }
  return {
      {"spec", spec_json(report)},
      {"total", report.total},
      {"mismatches", std::move(mismatches)},
      {"elapsed_ms", report.elapsed.count()},
  };
}

nlohmann::json to_json(const PushCalibration& calibration) {
  nlohmann::json runs = nlohmann::json::array();
  for (const DiscrepancyReport& r : calibration.runs) {
    runs.push_back({{"push_rule", push_rule_name(r.spec.push_rule)},
                    {"total", r.total},
                    {"mismatch_count", r.mismatches.size()},
                    {"report", to_json(r)}});
  }
  return {{"runs", std::move(runs)},
          {"selected", calibration.selected
                           ? nlohmann::json(push_rule_name(*calibration.selected))
                           : nlohmann::json(nullptr)}};
}

void write_csv(const DiscrepancyReport& report, std::ostream& out) {
  out << "w,x,y,z,grundy,brute,closed,agree\n";
  for (const SweepRow& row : report.rows) {
    out << row.pos[0] << ',' << row.pos[1] << ',' << row.pos[2] << ',' << row.pos[3] << ',';
    if (row.grundy) out << *row.grundy;
    out << ',' << outcome_char(row.brute) << ',' << outcome_char(row.closed) << ','
        << (row.agree ? "true" : "false") << '\n';
  }
}

void write_text(const DiscrepancyReport& report, std::ostream& out) {
  out << report.check << " variant=" << variant_name(report.spec.variant)
      << " bound=" << report.spec.bound;
  if (report.spec.variant == Variant::Push) out << " push_rule=" << push_rule_name(report.spec.push_rule);
  out << " total=" << report.total << " mismatches=" << report.mismatches.size()
      << " elapsed_ms=" << report.elapsed.count() << '\n';
  for (const Mismatch& m : report.mismatches) {
    out << "  " << m.kind << " (" << m.pos[0] << ',' << m.pos[1] << ',' << m.pos[2] << ','
        << m.pos[3] << ") brute=" << outcome_char(m.brute) << " closed=" << outcome_char(m.closed);
    if (m.grundy) out << " grundy=" << *m.grundy;
    if (m.expected_grundy) out << " expected=" << *m.expected_grundy;
    if (!m.detail.empty()) out << " [" << m.detail << ']';
    out << '\n';
  }
}

void export_table(Engine& engine, Variant variant, std::int32_t bound, std::ostream& out) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be at least 1");
  Solver& solver = engine.solver(variant);
  const std::int32_t lo = min_coordinate(variant);
  out << "w,x,y,z,valid,grundy,outcome,closed\n";
  for (std::int32_t w = lo; w <= bound; ++w)
    for (std::int32_t x = lo; x <= bound; ++x)
      for (std::int32_t y = lo; y <= bound; ++y)
        for (std::int32_t z = lo; z <= bound; ++z) {
          const Position p = make_position(w, x, y, z);
          const bool valid = validate(p, variant);
          if (!valid && variant != Variant::Rook) continue;
          out << w << ',' << x << ',' << y << ',' << z << ',' << (valid ? 1 : 0) << ',';
          if (!valid) {
            out << ",,\n";
            continue;
          }
          const GrundyValue g = solver.grundy(p);
          out << g << ',' << outcome_char(outcome_of(g)) << ',';
          if (auto closed = closed_form_outcome(p, variant)) {
            out << outcome_char(*closed);
          } else {
            out << "n/a";
          }
          out << '\n';
        }
}

}  // namespace coinnim
