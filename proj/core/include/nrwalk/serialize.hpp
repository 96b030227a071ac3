#ifndef NRWALK_SERIALIZE_HPP
#define NRWALK_SERIALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nrwalk/bounds.hpp"
#include "nrwalk/entropy.hpp"
#include "nrwalk/json_writer.hpp"
#include "nrwalk/monte_carlo.hpp"
#include "nrwalk/walk_counts.hpp"

namespace nrw {

struct SerializeOptions {
  bool full = false;  // include margins/ceilings, per-arc tables, marginals
};

// Every renderer is deterministic: fixed key order, fixed float formatting
// (12 significant digits), exact values as decimal strings.

std::string bound_report_json(const BoundReport& r,
                              const SerializeOptions& opt);
std::string bound_reports_json(const std::vector<BoundReport>& rs,
                               const SerializeOptions& opt);
std::string bound_report_text(const BoundReport& r,
                              const SerializeOptions& opt);

// Append one bound report as an object to an open writer (used by the
// array form and by callers embedding reports in larger documents).
void write_bound_report(JsonWriter& w, const BoundReport& r,
                        const SerializeOptions& opt);

struct WalkReportInput {
  int n = 0;
  int arcs = 0;
  const WalkCountTable* table = nullptr;
  const ArcSpace* arc_space = nullptr;         // for arc tail/head labels
  std::optional<int> from_vertex;
  std::optional<int> from_arc;
};

std::string walk_report_json(const WalkReportInput& in,
                             const SerializeOptions& opt);
std::string walk_report_text(const WalkReportInput& in,
                             const SerializeOptions& opt);

std::string entropy_audit_json(const EntropyAudit& a,
                               const SerializeOptions& opt,
                               const MonteCarloReport* mc = nullptr);
std::string entropy_audit_text(const EntropyAudit& a,
                               const SerializeOptions& opt,
                               const MonteCarloReport* mc = nullptr);

// Parameter-only bound evaluations (the `bounds` subcommand).
struct BoundValuesReport {
  int girth = 0;
  std::optional<int> delta;
  std::optional<Rational> d_bar;
  std::optional<Rational> d_left, d_right;
  std::optional<Rational> moore_lb, ahl_lb, hoory_lb_l, hoory_lb_r;
};

std::string bound_values_json(const BoundValuesReport& r);
std::string bound_values_text(const BoundValuesReport& r);

}  // namespace nrw

#endif
