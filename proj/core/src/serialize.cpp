#include "nrwalk/serialize.hpp"

#include <sstream>

#include "nrwalk/errors.hpp"

namespace nrw {

namespace {

void write_girth(JsonWriter& w, const std::optional<int>& g) {
  w.key("girth");
  if (g)
    w.value(*g);
  else
    w.value("INFINITE");
}

void write_optional_rational(JsonWriter& w, std::string_view key,
                             const std::optional<Rational>& q) {
  w.key(key);
  if (q)
    w.value(*q);
  else
    w.value_null();
}

// The bound value itself, or null when its preconditions failed.
void write_check_value(JsonWriter& w, std::string_view key,
                       const BoundCheck* c) {
  w.key(key);
  if (c != nullptr && c->verdict != Verdict::kPreconditionUnmet)
    w.value(c->value);
  else
    w.value_null();
}

std::string girth_text(const std::optional<int>& g) {
  return g ? std::to_string(*g) : "INFINITE";
}

std::string check_text(const BoundCheck& c) {
  if (c.verdict == Verdict::kPreconditionUnmet)
    return "PRECONDITION_UNMET";
  std::ostringstream os;
  os << rational_string(c.value) << " (ceil " << c.ceil_value.str() << ")  "
     << verdict_name(c.verdict) << " margin=" << rational_string(c.margin);
  return os.str();
}

}  // namespace

void write_bound_report(JsonWriter& w, const BoundReport& r,
                        const SerializeOptions& opt) {
  w.begin_object();
  w.field("graph_id", r.graph_id);
  w.field("n", r.n);
  write_girth(w, r.girth);
  w.field("delta", r.delta);
  w.field("d_bar", r.d_bar);
  w.field("bipartite", r.bipartite);
  w.key("n_l");
  r.n_left ? w.value(*r.n_left) : w.value_null();
  w.key("n_r");
  r.n_right ? w.value(*r.n_right) : w.value_null();
  write_optional_rational(w, "d_l", r.d_left);
  write_optional_rational(w, "d_r", r.d_right);
  write_check_value(w, "moore_lb", &r.moore);
  write_check_value(w, "ahl_lb", &r.ahl);
  write_check_value(w, "hoory_lb_l",
                    r.hoory_left ? &*r.hoory_left : nullptr);
  write_check_value(w, "hoory_lb_r",
                    r.hoory_right ? &*r.hoory_right : nullptr);
  w.key("verdicts");
  w.begin_object();
  w.field("moore", verdict_name(r.moore.verdict));
  w.field("ahl", verdict_name(r.ahl.verdict));
  if (r.hoory_left) w.field("hoory_l", verdict_name(r.hoory_left->verdict));
  if (r.hoory_right) w.field("hoory_r", verdict_name(r.hoory_right->verdict));
  w.end_object();
  if (opt.full) {
    auto margins = [&](std::string_view key, const BoundCheck* c) {
      w.key(key);
      if (c != nullptr && c->verdict != Verdict::kPreconditionUnmet)
        w.value(c->margin);
      else
        w.value_null();
    };
    w.key("margins");
    w.begin_object();
    margins("moore", &r.moore);
    margins("ahl", &r.ahl);
    margins("hoory_l", r.hoory_left ? &*r.hoory_left : nullptr);
    margins("hoory_r", r.hoory_right ? &*r.hoory_right : nullptr);
    w.end_object();
    auto ceilings = [&](std::string_view key, const BoundCheck* c) {
      w.key(key);
      if (c != nullptr && c->verdict != Verdict::kPreconditionUnmet)
        w.value(c->ceil_value);
      else
        w.value_null();
    };
    w.key("ceilings");
    w.begin_object();
    ceilings("moore", &r.moore);
    ceilings("ahl", &r.ahl);
    ceilings("hoory_l", r.hoory_left ? &*r.hoory_left : nullptr);
    ceilings("hoory_r", r.hoory_right ? &*r.hoory_right : nullptr);
    w.end_object();
  }
  w.end_object();
}

std::string bound_report_json(const BoundReport& r,
                              const SerializeOptions& opt) {
  JsonWriter w;
  write_bound_report(w, r, opt);
  return w.take();
}

std::string bound_reports_json(const std::vector<BoundReport>& rs,
                               const SerializeOptions& opt) {
  JsonWriter w;
  w.begin_array();
  for (const auto& r : rs) write_bound_report(w, r, opt);
  w.end_array();
  return w.take();
}

std::string bound_report_text(const BoundReport& r,
                              const SerializeOptions& opt) {
  std::ostringstream os;
  os << "graph " << (r.graph_id.empty() ? "(unnamed)" : r.graph_id)
     << ": n=" << r.n << " girth=" << girth_text(r.girth)
     << " delta=" << r.delta << " d_bar=" << rational_string(r.d_bar)
     << "\n";
  os << "  moore_lb : " << check_text(r.moore) << "\n";
  os << "  ahl_lb   : " << check_text(r.ahl) << "\n";
  if (r.bipartite && r.n_left) {
    os << "  bipartite: n_l=" << *r.n_left << " n_r=" << *r.n_right
       << " d_l=" << rational_string(*r.d_left)
       << " d_r=" << rational_string(*r.d_right) << "\n";
    os << "  hoory_lb_l: " << check_text(*r.hoory_left) << "\n";
    os << "  hoory_lb_r: " << check_text(*r.hoory_right) << "\n";
  } else if (r.bipartite) {
    os << "  bipartite: yes (no crossing edges)\n";
  } else {
    os << "  bipartite: no\n";
  }
  if (opt.full && r.girth) {
    os << "  r        : " << *r.girth / 2 << "\n";
  }
  return os.str();
}

namespace {

void write_count_row(JsonWriter& w, const std::vector<BigInt>& row) {
  w.begin_array();
  for (const auto& c : row) w.value(c);
  w.end_array();
}

}  // namespace

std::string walk_report_json(const WalkReportInput& in,
                             const SerializeOptions& opt) {
  const WalkCountTable& t = *in.table;
  JsonWriter w;
  w.begin_object();
  w.field("n", in.n);
  w.field("arcs", in.arcs);
  w.field("horizon", t.horizon);
  if (in.from_vertex) {
    w.field("vertex", *in.from_vertex);
    w.key("counts");
    write_count_row(w, t.per_vertex[*in.from_vertex]);
  } else if (in.from_arc) {
    w.field("arc", *in.from_arc);
    w.field("tail", in.arc_space->tail(*in.from_arc));
    w.field("head", in.arc_space->head(*in.from_arc));
    w.key("counts");
    write_count_row(w, t.per_arc[*in.from_arc]);
  } else {
    w.key("per_vertex");
    w.begin_array();
    for (const auto& row : t.per_vertex) write_count_row(w, row);
    w.end_array();
    if (opt.full) {
      w.key("per_arc");
      w.begin_array();
      for (std::size_t a = 0; a < t.per_arc.size(); ++a) {
        w.begin_object();
        w.field("arc", static_cast<int>(a));
        w.field("tail", in.arc_space->tail(static_cast<int>(a)));
        w.field("head", in.arc_space->head(static_cast<int>(a)));
        w.key("counts");
        write_count_row(w, t.per_arc[a]);
        w.end_object();
      }
      w.end_array();
    }
  }
  w.end_object();
  return w.take();
}

std::string walk_report_text(const WalkReportInput& in,
                             const SerializeOptions& opt) {
  const WalkCountTable& t = *in.table;
  std::ostringstream os;
  os << "n=" << in.n << " arcs=" << in.arcs << " horizon=" << t.horizon
     << "\n";
  auto row_text = [](const std::vector<BigInt>& row) {
    std::ostringstream ros;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) ros << " ";
      ros << row[i].str();
    }
    return ros.str();
  };
  if (in.from_vertex) {
    os << "vertex " << *in.from_vertex << ": "
       << row_text(t.per_vertex[*in.from_vertex]) << "\n";
  } else if (in.from_arc) {
    os << "arc " << *in.from_arc << " ("
       << in.arc_space->tail(*in.from_arc) << "->"
       << in.arc_space->head(*in.from_arc)
       << "): " << row_text(t.per_arc[*in.from_arc]) << "\n";
  } else {
    for (std::size_t v = 0; v < t.per_vertex.size(); ++v)
      os << "vertex " << v << ": " << row_text(t.per_vertex[v]) << "\n";
    if (opt.full) {
      for (std::size_t a = 0; a < t.per_arc.size(); ++a)
        os << "arc " << a << " (" << in.arc_space->tail(static_cast<int>(a))
           << "->" << in.arc_space->head(static_cast<int>(a))
           << "): " << row_text(t.per_arc[a]) << "\n";
    }
  }
  return os.str();
}

namespace {

void write_distribution(JsonWriter& w, const Distribution& d) {
  w.begin_array();
  for (const auto& p : d.probs) w.value(p);
  w.end_array();
}

void write_mc(JsonWriter& w, const MonteCarloReport& mc) {
  w.begin_object();
  w.field("seed", static_cast<std::uint64_t>(mc.seed));
  w.field("samples", static_cast<long long>(mc.samples));
  w.field("max_abs_z", mc.max_abs_z);
  w.field("worst_step", mc.worst_step);
  w.field("worst_arc", mc.worst_arc);
  w.field("entropy_exact", mc.entropy_exact);
  w.field("entropy_estimate", mc.entropy_estimate);
  w.field("entropy_std_error", mc.entropy_std_error);
  w.field("entropy_z", mc.entropy_z);
  w.field("frequencies_ok", mc.frequencies_ok);
  w.field("entropy_ok", mc.entropy_ok);
  w.field("ok", mc.ok());
  w.end_object();
}

}  // namespace

std::string entropy_audit_json(const EntropyAudit& a,
                               const SerializeOptions& opt,
                               const MonteCarloReport* mc) {
  JsonWriter w;
  w.begin_object();
  w.field("mode", start_mode_name(a.mode));
  w.field("horizon", a.horizon);
  w.key("entropy_terms");
  w.begin_array();
  for (double t : a.entropy_terms) w.value(t);
  w.end_array();
  w.field("entropy", a.entropy);
  w.field("expected_count", a.expected_count);
  w.field("bound", a.bound);
  w.field("expectation_ok", a.expectation_ok);
  w.key("chain");
  w.begin_object();
  w.field("log_expected", a.log_expected);
  w.field("expected_log", a.expected_log);
  w.field("entropy", a.entropy);
  w.field("log_bound", a.log_bound);
  w.key("gaps");
  w.begin_array();
  w.value(a.gaps[0]).value(a.gaps[1]).value(a.gaps[2]);
  w.end_array();
  w.field("ok", a.chain_ok);
  w.end_object();
  w.field("chain_rule_residual", a.chain_rule_residual);
  w.field("stationary", a.stationarity.exact);
  if (!a.stationarity.exact)
    w.field("stationarity_detail", a.stationarity.detail);
  w.field("ok", a.ok() && (mc == nullptr || mc->ok()));
  if (opt.full) {
    w.key("marginals");
    w.begin_object();
    w.key("arcs");
    w.begin_array();
    for (const auto& d : a.marginals.arc_marginals) write_distribution(w, d);
    w.end_array();
    w.key("vertices");
    w.begin_array();
    for (const auto& d : a.marginals.vertex_marginals)
      write_distribution(w, d);
    w.end_array();
    w.end_object();
  }
  if (mc != nullptr) {
    w.key("mc");
    write_mc(w, *mc);
  }
  w.end_object();
  return w.take();
}

std::string entropy_audit_text(const EntropyAudit& a,
                               const SerializeOptions& opt,
                               const MonteCarloReport* mc) {
  std::ostringstream os;
  os << "mode=" << start_mode_name(a.mode) << " horizon=" << a.horizon
     << "\n";
  os << "  entropy terms:";
  for (double t : a.entropy_terms) os << " " << format_double(t);
  os << "\n";
  os << "  ln E[n]   = " << format_double(a.log_expected)
     << "  (E[n] = " << rational_string(a.expected_count) << ")\n";
  os << "  E[ln n]   = " << format_double(a.expected_log) << "\n";
  os << "  H         = " << format_double(a.entropy) << "\n";
  os << "  ln bound  = " << format_double(a.log_bound)
     << "  (bound = " << rational_string(a.bound) << ")\n";
  os << "  gaps      = " << format_double(a.gaps[0]) << " "
     << format_double(a.gaps[1]) << " " << format_double(a.gaps[2])
     << (a.chain_ok ? "  (chain ok)" : "  (CHAIN VIOLATED)") << "\n";
  os << "  stationary marginals: " << (a.stationarity.exact ? "exact" : "NO")
     << "\n";
  os << "  E[n] >= bound exactly: " << (a.expectation_ok ? "yes" : "NO")
     << "\n";
  if (opt.full) {
    os << "  chain-rule residual: " << format_double(a.chain_rule_residual)
       << "\n";
  }
  if (mc != nullptr) {
    os << "  mc: seed=" << mc->seed << " samples=" << mc->samples
       << " max|z|=" << format_double(mc->max_abs_z)
       << " H_est=" << format_double(mc->entropy_estimate)
       << " z=" << format_double(mc->entropy_z)
       << (mc->ok() ? "  (ok)" : "  (FAILED)") << "\n";
  }
  return os.str();
}

std::string bound_values_json(const BoundValuesReport& r) {
  JsonWriter w;
  w.begin_object();
  w.field("girth", r.girth);
  if (r.delta) w.field("delta", *r.delta);
  if (r.d_bar) w.field("d_bar", *r.d_bar);
  if (r.d_left) w.field("d_l", *r.d_left);
  if (r.d_right) w.field("d_r", *r.d_right);
  if (r.moore_lb) w.field("moore_lb", *r.moore_lb);
  if (r.ahl_lb) w.field("ahl_lb", *r.ahl_lb);
  if (r.hoory_lb_l) w.field("hoory_lb_l", *r.hoory_lb_l);
  if (r.hoory_lb_r) w.field("hoory_lb_r", *r.hoory_lb_r);
  w.end_object();
  return w.take();
}

std::string bound_values_text(const BoundValuesReport& r) {
  std::ostringstream os;
  os << "girth=" << r.girth << "\n";
  if (r.delta) os << "delta=" << *r.delta << "\n";
  if (r.d_bar) os << "d_bar=" << rational_string(*r.d_bar) << "\n";
  if (r.d_left) os << "d_l=" << rational_string(*r.d_left) << "\n";
  if (r.d_right) os << "d_r=" << rational_string(*r.d_right) << "\n";
  if (r.moore_lb)
    os << "moore_lb=" << rational_string(*r.moore_lb) << " (ceil "
       << rational_ceil(*r.moore_lb).str() << ")\n";
  if (r.ahl_lb)
    os << "ahl_lb=" << rational_string(*r.ahl_lb) << " (ceil "
       << rational_ceil(*r.ahl_lb).str() << ")\n";
  if (r.hoory_lb_l)
    os << "hoory_lb_l=" << rational_string(*r.hoory_lb_l) << " (ceil "
       << rational_ceil(*r.hoory_lb_l).str() << ")\n";
  if (r.hoory_lb_r)
    os << "hoory_lb_r=" << rational_string(*r.hoory_lb_r) << " (ceil "
       << rational_ceil(*r.hoory_lb_r).str() << ")\n";
  return os.str();
}

}  // namespace nrw
