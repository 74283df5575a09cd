#include "gextra/report.hpp"

#include <chrono>
#include <ctime>

#include "gextra/graph_io.hpp"

namespace gextra {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

namespace {

Json labels_json(const std::vector<VertexLabel>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l.to_string());
  return out;
}

Json components_json(const std::vector<LabelledComponent>& components) {
  Json out = Json::array();
  for (const auto& c : components) out.push_back(labels_json(c));
  return out;
}

}  // namespace

Json to_json(const Prediction& p) {
  Json j;
  j["quantity"] = to_string(p.quantity);
  j["g"] = p.g;
  j["kind"] = to_string(p.kind);
  if (p.value) {
    if (p.value->is_infinite()) {
      j["value"] = "inf";
    } else {
      j["value"] = p.value->value();
    }
  } else {
    j["value"] = nullptr;
  }
  j["case_tag"] = p.case_tag;
  j["anchor"] = p.anchor;
  j["reading"] = to_string(p.reading);
  j["soft_ceiling"] = p.soft_ceiling;
  return j;
}

Json to_json(const OracleOutcome& o) {
  Json j;
  j["status"] = to_string(o.status);
  j["value"] = o.status == OracleStatus::Exact ? Json(o.value)
               : o.status == OracleStatus::Infinite ? Json("inf")
                                                    : Json(nullptr);
  j["lower_bound"] = o.status == OracleStatus::NotRun ? Json(nullptr) : Json(o.lower_bound);
  return j;
}

Json to_json(const VertexCutCertificate& c) {
  Json j;
  j["type"] = "vertex";
  j["cut"] = labels_json(c.cut);
  j["components"] = components_json(c.components);
  j["min_component_size"] = c.min_component_size;
  return j;
}

Json to_json(const EdgeCutCertificate& c) {
  Json j;
  j["type"] = "edge";
  Json cut = Json::array();
  for (const auto& [a, b] : c.cut) cut.push_back(Json::array({a.to_string(), b.to_string()}));
  j["cut"] = std::move(cut);
  j["components"] = components_json(c.components);
  j["min_component_size"] = c.min_component_size;
  return j;
}

Json to_json(const VerificationRecord& r) {
  Json j;
  j["construction"] = to_string(r.construction);
  j["base_id"] = r.base_id;
  j["attach_id"] = r.attach_id;
  j["g"] = r.g;
  j["prediction"] = to_json(r.prediction);
  j["oracle"] = to_json(r.oracle);
  j["verdict"] = to_string(r.verdict);
  j["certificate"] = std::visit(
      [](const auto& c) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, std::monostate>) {
          return nullptr;
        } else {
          return to_json(c);
        }
      },
      r.oracle.certificate);
  return j;
}

Json config_json(const RunConfig& config) {
  Json j;
  Json cs = Json::array();
  for (auto c : config.constructions) cs.push_back(to_string(c));
  j["constructions"] = std::move(cs);
  Json bases;
  if (config.bases.empty()) {
    bases["default_max_n"] = config.base_max_n;
  } else {
    Json list = Json::array();
    for (const auto& g : config.bases) list.push_back(emit_graph6(g));
    bases["explicit"] = std::move(list);
  }
  j["bases"] = std::move(bases);
  Json attach = Json::array();
  for (const auto& h : resolve_attachments(config)) {
    attach.push_back(emit_graph6(h.graph) + ";r=" + std::to_string(h.root));
  }
  j["attachments"] = std::move(attach);
  if (config.g_values) {
    j["g"] = *config.g_values;
  } else {
    j["g"] = "auto";
  }
  Json budget;
  budget["max_cut_size"] = config.budget.max_cut_size;
  budget["max_edge_host_vertices"] = config.budget.max_edge_host_vertices;
  budget["max_edge_host_edges"] = config.budget.max_edge_host_edges;
  budget["max_candidates"] = config.budget.max_candidates;
  j["budget"] = std::move(budget);
  j["range_reading"] = to_string(config.range_reading);
  return j;
}

std::string render_report(const std::vector<VerificationRecord>& records, const RunConfig& config,
                          const std::string& timestamp) {
  Json doc;
  doc["meta"]["config"] = config_json(config);
  doc["meta"]["tool_version"] = kToolVersion;
  doc["meta"]["timestamp"] = timestamp;
  Json recs = Json::array();
  for (const auto& r : records) recs.push_back(to_json(r));
  doc["records"] = std::move(recs);
  Json summary = Json::object();
  for (const auto& [c, n] : summarize(records, config.constructions)) {
    Json s;
    s["match"] = n.match;
    s["mismatch"] = n.mismatch;
    s["bound_holds"] = n.bound_holds;
    s["bound_violated"] = n.bound_violated;
    s["inapplicable"] = n.inapplicable;
    s["budget_exceeded"] = n.budget_exceeded;
    s["total"] = n.total();
    summary[to_string(c)] = std::move(s);
  }
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

void write_report(const std::vector<VerificationRecord>& records, const RunConfig& config,
                  const std::filesystem::path& path) {
  write_text_file(path, render_report(records, config, utc_timestamp()));
}

}  // namespace gextra
