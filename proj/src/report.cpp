// Copyright 2026 The cumlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cumlift/report.hpp"

#include <iomanip>
#include <sstream>
#include <string>

#include "cumlift/errors.hpp"
#include "json.hpp"

namespace cumlift {

namespace {

using Json = nlohmann::ordered_json;

std::string_view ToString(Verification v) { return v == Verification::kVerified ? "verified" : "unchecked"; }

Verification VerificationFromString(std::string_view text) {
  if (text == "verified") return Verification::kVerified;
  if (text == "unchecked") return Verification::kUnchecked;
  throw MalformedInput("unknown verification status '" + std::string(text) + "'");
}

std::string_view ToString(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::kNone:
      return "none";
    case Certificate::Kind::kInferred:
      return "inferred";
    case Certificate::Kind::kResource:
      return "resource";
  }
  return "none";
}

Certificate::Kind CertificateKindFromString(std::string_view text) {
  if (text == "none") return Certificate::Kind::kNone;
  if (text == "inferred") return Certificate::Kind::kInferred;
  if (text == "resource") return Certificate::Kind::kResource;
  throw MalformedInput("unknown certificate kind '" + std::string(text) + "'");
}

std::string RationalText(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

Json ToJson(const InferenceReport& report) {
  Json config{{"n_cover", report.config.n_cover},
              {"n_out", report.config.n_out},
              {"max_cover_cardinality",
               report.config.max_cover_cardinality ? Json(*report.config.max_cover_cardinality) : Json(nullptr)},
              {"bruteforce_verify", report.config.bruteforce_verify},
              {"bruteforce_limit", report.config.bruteforce_limit}};
  Json constraints = Json::array();
  for (std::size_t k = 0; k < report.constraints.size(); ++k) {
    const ReportConstraint& c = report.constraints[k];
    Json usages = Json::array();
    for (auto [task, usage] : c.usages) usages.push_back(Json::array({task, usage}));
    constraints.push_back(Json{{"id", k},
                               {"usages", std::move(usages)},
                               {"capacity", c.capacity},
                               {"capacity_bound",
                                Json{{"num", c.capacity_bound.numerator()}, {"den", c.capacity_bound.denominator()}}},
                               {"capacity_lb", c.capacity_lb},
                               {"source_cover", c.source_cover},
                               {"source_resource", c.source_resource},
                               {"rule", std::string(ToString(c.rule))},
                               {"infeasible_tasks", c.infeasible_tasks},
                               {"verification", std::string(ToString(c.verification))}});
  }
  const ReportStats& s = report.stats;
  Json stats{{"binary_covers", s.binary_covers},       {"ternary_covers", s.ternary_covers},
             {"long_covers", s.long_covers},           {"selected_covers", s.selected_covers},
             {"covers_skipped", s.covers_skipped},     {"covers_lifted", s.covers_lifted},
             {"dominated", s.dominated},               {"subproblem_calls", s.subproblem_calls}};
  return Json{{"instance", report.instance},
              {"config", std::move(config)},
              {"tasks", report.tasks},
              {"columns", report.columns},
              {"resources", report.resources},
              {"constraints", std::move(constraints)},
              {"searchless_lb", report.searchless_lb},
              {"certificate",
               Json{{"kind", std::string(ToString(report.certificate.kind))}, {"index", report.certificate.index}}},
              {"precedence_lb", report.precedence_lb},
              {"stats", std::move(stats)}};
}

std::string Text(const InferenceReport& report) {
  std::string collection = report.instance.empty() ? "-" : report.instance;
  std::string number = "-";
  if (const auto hash = collection.rfind('#'); hash != std::string::npos && hash + 1 < collection.size()) {
    number = collection.substr(hash + 1);
    collection = collection.substr(0, hash);
  }
  std::string capacity = "-";
  if (report.certificate.kind == Certificate::Kind::kInferred) {
    capacity = std::to_string(report.constraints[report.certificate.index].capacity);
  } else if (report.certificate.kind == Certificate::Kind::kResource) {
    capacity = "resource " + std::to_string(report.certificate.index);
  }

  std::ostringstream out;
  out << std::left << std::setw(24) << "Collection" << std::setw(8) << "#" << std::setw(12) << "Ref. bound"
      << std::setw(12) << "New bound" << "Capacity\n";
  out << std::setw(24) << collection << std::setw(8) << number << std::setw(12) << report.precedence_lb
      << std::setw(12) << report.searchless_lb << capacity << "\n\n";

  out << "Inferred constraints: " << report.constraints.size() << "\n";
  if (!report.constraints.empty()) {
    out << std::setw(5) << "id" << std::setw(10) << "Capacity" << std::setw(14) << "Cap. bound" << std::setw(8)
        << "LB" << std::setw(10) << "Rule" << std::setw(11) << "Status" << "Usages (task:usage)\n";
  }
  for (std::size_t k = 0; k < report.constraints.size(); ++k) {
    const ReportConstraint& c = report.constraints[k];
    out << std::setw(5) << k << std::setw(10) << c.capacity << std::setw(14) << RationalText(c.capacity_bound)
        << std::setw(8) << c.capacity_lb << std::setw(10) << ToString(c.rule) << std::setw(11)
        << ToString(c.verification);
    for (std::size_t u = 0; u < c.usages.size(); ++u) {
      out << (u ? " " : "") << c.usages[u].first << ":" << c.usages[u].second;
    }
    out << "\n";
  }
  const ReportStats& s = report.stats;
  out << "\ncovers: " << s.binary_covers << " binary, " << s.ternary_covers << " ternary, " << s.long_covers
      << " long; " << s.selected_covers << " selected, " << s.covers_lifted << " lifted, " << s.covers_skipped
      << " skipped, " << s.dominated << " dominated; " << s.subproblem_calls << " subproblem calls\n";
  return out.str();
}

template <typename T>
T Get(const Json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw MalformedInput(std::string("report: missing key \"") + key + "\"");
  try {
    return it->get<T>();
  } catch (const Json::exception& e) {
    throw MalformedInput(std::string("report: bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

std::string EmitReport(const InferenceReport& report, ReportFormat format) {
  if (format == ReportFormat::kText) return Text(report);
  return ToJson(report).dump(2) + "\n";
}

InferenceReport ParseReport(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid report JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedInput("report must be a JSON object");

  InferenceReport report;
  report.instance = Get<std::string>(doc, "instance");
  const Json config = Get<Json>(doc, "config");
  report.config.n_cover = Get<int>(config, "n_cover");
  report.config.n_out = Get<int>(config, "n_out");
  if (const Json card = Get<Json>(config, "max_cover_cardinality"); !card.is_null()) {
    report.config.max_cover_cardinality = Get<int>(config, "max_cover_cardinality");
  }
  report.config.bruteforce_verify = Get<bool>(config, "bruteforce_verify");
  report.config.bruteforce_limit = Get<int>(config, "bruteforce_limit");
  report.tasks = Get<int>(doc, "tasks");
  report.columns = Get<int>(doc, "columns");
  report.resources = Get<int>(doc, "resources");

  for (const Json& c : Get<Json>(doc, "constraints")) {
    ReportConstraint out;
    for (const Json& pair : Get<Json>(c, "usages")) {
      if (!pair.is_array() || pair.size() != 2) throw MalformedInput("report: usage entries are [task, usage] pairs");
      out.usages.emplace_back(pair[0].get<TaskId>(), pair[1].get<Value>());
    }
    out.capacity = Get<Value>(c, "capacity");
    const Json bound = Get<Json>(c, "capacity_bound");
    const auto den = Get<Value>(bound, "den");
    if (den <= 0) throw MalformedInput("report: capacity_bound denominator must be positive");
    out.capacity_bound = Rational(Get<Value>(bound, "num"), den);
    out.capacity_lb = Get<Value>(c, "capacity_lb");
    out.source_cover = Get<std::vector<TaskId>>(c, "source_cover");
    out.source_resource = Get<int>(c, "source_resource");
    out.rule = GenerationRuleFromString(Get<std::string>(c, "rule"));
    out.infeasible_tasks = Get<std::vector<TaskId>>(c, "infeasible_tasks");
    out.verification = VerificationFromString(Get<std::string>(c, "verification"));
    report.constraints.push_back(std::move(out));
  }
  report.searchless_lb = Get<Value>(doc, "searchless_lb");
  const Json certificate = Get<Json>(doc, "certificate");
  report.certificate.kind = CertificateKindFromString(Get<std::string>(certificate, "kind"));
  report.certificate.index = Get<int>(certificate, "index");
  report.precedence_lb = Get<Value>(doc, "precedence_lb");
  const Json stats = Get<Json>(doc, "stats");
  report.stats.binary_covers = Get<std::size_t>(stats, "binary_covers");
  report.stats.ternary_covers = Get<std::size_t>(stats, "ternary_covers");
  report.stats.long_covers = Get<std::size_t>(stats, "long_covers");
  report.stats.selected_covers = Get<std::size_t>(stats, "selected_covers");
  report.stats.covers_skipped = Get<std::size_t>(stats, "covers_skipped");
  report.stats.covers_lifted = Get<std::size_t>(stats, "covers_lifted");
  report.stats.dominated = Get<std::size_t>(stats, "dominated");
  report.stats.subproblem_calls = Get<std::size_t>(stats, "subproblem_calls");
  return report;
}

std::string EmitModelFragment(const SchedulingInstance& instance, const DemandSystem& system,
                              std::span<const LiftedInequality> inferred, std::string_view starts,
                              std::string_view durations) {
  std::ostringstream out;
  for (const LiftedInequality& ineq : inferred) {
    std::vector<Value> usage(instance.num_tasks(), 0);
    for (Column c = 0; c < system.cols(); ++c) usage[system.task_map()[c]] = ineq.coeffs[c];
    out << "constraint cumulative(" << starts << ", " << durations << ", [";
    for (std::size_t i = 0; i < usage.size(); ++i) out << (i ? ", " : "") << usage[i];
    out << "], " << ineq.rhs << ");\n";
  }
  return out.str();
}

std::string ExportParallelismGraph(const DemandSystem& system) {
  std::ostringstream out;
  out << "graph parallelism {\n";
  for (Column c = 0; c < system.cols(); ++c) {
    const TaskId t = system.task_map()[c];
    out << "  t" << t << " [label=\"" << t << "\\nd=" << system.duration(c) << "\", duration=" << system.duration(c)
        << "];\n";
  }
  for (Column u = 0; u < system.cols(); ++u) {
    for (Column v = u + 1; v < system.cols(); ++v) {
      bool fits = true;
      for (int r = 0; r < system.rows() && fits; ++r) fits = system.at(r, u) + system.at(r, v) <= system.rhs(r);
      if (fits) out << "  t" << system.task_map()[u] << " -- t" << system.task_map()[v] << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cumlift
