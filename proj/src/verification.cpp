#include "gextra/verification.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <tuple>

#include "gextra/corpus.hpp"
#include "gextra/graph_io.hpp"

namespace gextra {

namespace {

struct ConstructionName {
  Construction c;
  const char* name;
};

constexpr ConstructionName kNames[] = {
    {Construction::EdgeCorona, "edge_corona"},
    {Construction::NeighbourhoodCorona, "neighbourhood_corona"},
    {Construction::SubdivisionVertexNc, "subdivision_vertex_nc"},
    {Construction::SubdivisionEdgeNc, "subdivision_edge_nc"},
    {Construction::GeneralizedCorona, "generalized_corona"},
    {Construction::RootedProduct, "rooted_product"},
};

}  // namespace

std::string to_string(Construction c) {
  for (const auto& [k, name] : kNames) {
    if (k == c) return name;
  }
  return "unknown";
}

Construction parse_construction(const std::string& name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  throw InputError("unknown construction '" + name + "'");
}

std::vector<Construction> all_constructions() {
  std::vector<Construction> out;
  for (const auto& [k, name] : kNames) out.push_back(k);
  return out;
}

Graph build_product(Construction c, const Graph& g, const RootedGraph& h) {
  switch (c) {
    case Construction::EdgeCorona:
      return edge_corona(g, h.graph);
    case Construction::NeighbourhoodCorona:
      return neighbourhood_corona(g, h.graph);
    case Construction::SubdivisionVertexNc:
      return subdivision_vertex_nc(g, h.graph);
    case Construction::SubdivisionEdgeNc:
      return subdivision_edge_nc(g, h.graph);
    case Construction::GeneralizedCorona:
      return generalized_corona(GeneralizedCoronaSpec::uniform(g, h.graph));
    case Construction::RootedProduct:
      return rooted_product(g, h);
  }
  throw InputError("unknown construction");
}

std::vector<Prediction> predict(Construction c, const Graph& g, const RootedGraph& h, std::size_t extra,
                                const FormulaOptions& opt) {
  switch (c) {
    case Construction::EdgeCorona:
      return predict_edge_corona(g, h.graph, extra, opt);
    case Construction::NeighbourhoodCorona:
      return predict_neighbourhood_corona(g, h.graph, extra, opt);
    case Construction::SubdivisionVertexNc:
      return predict_subdivision_vertex_nc(g, h.graph, extra, opt);
    case Construction::SubdivisionEdgeNc:
      return predict_subdivision_edge_nc(g, h.graph, extra, opt);
    case Construction::GeneralizedCorona:
      return predict_generalized_corona(GeneralizedCoronaSpec::uniform(g, h.graph), extra, opt);
    case Construction::RootedProduct:
      return predict_rooted_product(g, h, extra, opt);
  }
  throw InputError("unknown construction");
}

std::string attachment_id(Construction c, const Graph& g, const RootedGraph& h) {
  const std::string g6 = emit_graph6(h.graph);
  if (c == Construction::RootedProduct) return g6 + ";r=" + std::to_string(h.root);
  if (c == Construction::GeneralizedCorona) {
    std::string out = "[";
    for (std::size_t i = 0; i < g.order(); ++i) out += (i ? "," : "") + g6;
    return out + "]";
  }
  return g6;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "match";
    case Verdict::Mismatch:
      return "mismatch";
    case Verdict::BoundHolds:
      return "bound_holds";
    case Verdict::BoundViolated:
      return "bound_violated";
    case Verdict::Inapplicable:
      return "inapplicable";
    case Verdict::BudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Exact:
      return "exact";
    case OracleStatus::Infinite:
      return "infinite";
    case OracleStatus::BudgetExceeded:
      return "budget_exceeded";
    case OracleStatus::NotRun:
      return "not_run";
  }
  return "unknown";
}

std::optional<ExtendedCount> OracleOutcome::extended() const {
  if (status == OracleStatus::Exact) return ExtendedCount::finite(value);
  if (status == OracleStatus::Infinite) return ExtendedCount::infinite();
  return std::nullopt;
}

namespace {

template <typename Result>
OracleOutcome outcome_of(Result r) {
  OracleOutcome o;
  o.lower_bound = r.lower_bound;
  switch (r.status) {
    case SearchStatus::Found:
      o.status = OracleStatus::Exact;
      o.value = r.cut_size;
      if (r.certificate) o.certificate = std::move(*r.certificate);
      break;
    case SearchStatus::Infinite:
      o.status = OracleStatus::Infinite;
      break;
    case SearchStatus::BudgetExceeded:
      o.status = OracleStatus::BudgetExceeded;
      break;
  }
  return o;
}

}  // namespace

OracleOutcome run_oracle(const Graph& host, Quantity q, std::size_t extra, const SearchBudget& budget) {
  if (q == Quantity::KappaG) return outcome_of(g_extra_vertex_connectivity(host, extra, budget));
  return outcome_of(g_extra_edge_connectivity(host, extra, budget));
}

Verdict classify(const Prediction& p, const OracleOutcome& oracle) {
  if (p.kind == PredictionKind::NotApplicable || !p.value) return Verdict::Inapplicable;
  const ExtendedCount predicted = *p.value;
  const auto actual = oracle.extended();
  const bool bound_kind = p.kind == PredictionKind::UpperBound || p.soft_ceiling;
  if (!actual) {
    if (oracle.status != OracleStatus::BudgetExceeded) return Verdict::Inapplicable;
    // The answer is known to be at least lower_bound.
    const auto floor = ExtendedCount::finite(oracle.lower_bound);
    if (p.kind == PredictionKind::UpperBound) {
      return floor > predicted ? Verdict::BoundViolated : Verdict::BudgetExceeded;
    }
    if (floor > predicted) return bound_kind ? Verdict::BoundViolated : Verdict::Mismatch;
    return Verdict::BudgetExceeded;
  }
  if (p.kind == PredictionKind::UpperBound) {
    return *actual <= predicted ? Verdict::BoundHolds : Verdict::BoundViolated;
  }
  if (p.soft_ceiling) return *actual == predicted ? Verdict::BoundHolds : Verdict::BoundViolated;
  return *actual == predicted ? Verdict::Match : Verdict::Mismatch;
}

void RunConfig::validate() const {
  if (budget.max_cut_size == 0) throw InputError("budget: max cut size must be positive");
  if (budget.max_edge_host_vertices == 0 || budget.max_edge_host_edges == 0) {
    throw InputError("budget: edge host caps must be positive");
  }
  if (jobs == 0) throw InputError("jobs must be positive");
  if (bases.empty() && base_max_n > kCorpusMaxOrder) {
    throw InputError("base corpus order exceeds " + std::to_string(kCorpusMaxOrder));
  }
}

std::vector<Graph> resolve_bases(const RunConfig& config) {
  std::vector<Graph> out;
  if (config.bases.empty()) return default_base_corpus(config.base_max_n);
  for (const auto& g : config.bases) out.push_back(canonical_form(g));
  return out;
}

std::vector<RootedGraph> resolve_attachments(const RunConfig& config) {
  return config.attachments.empty() ? default_attachments() : config.attachments;
}

namespace {

bool checkable(const std::vector<Prediction>& ps) {
  return std::any_of(ps.begin(), ps.end(),
                     [](const Prediction& p) { return p.kind != PredictionKind::NotApplicable; });
}

FormulaOptions formula_options(const RunConfig& config) {
  FormulaOptions opt;
  opt.range_reading = config.range_reading;
  opt.budget = config.budget;
  return opt;
}

struct Instance {
  Construction construction;
  std::string base_id;
  std::string attach_id;
  std::size_t g;
  const Graph* base;
  const RootedGraph* attachment;
};

std::vector<VerificationRecord> evaluate(const Instance& in, const RunConfig& config) {
  const auto opt = formula_options(config);
  const auto predictions = predict(in.construction, *in.base, *in.attachment, in.g, opt);
  std::optional<Graph> host;
  std::optional<OracleOutcome> kappa;
  std::optional<OracleOutcome> lambda;
  std::vector<VerificationRecord> out;
  for (const auto& p : predictions) {
    VerificationRecord r;
    r.construction = in.construction;
    r.base_id = in.base_id;
    r.attach_id = in.attach_id;
    r.g = in.g;
    r.prediction = p;
    if (p.kind != PredictionKind::NotApplicable) {
      if (!host) host = build_product(in.construction, *in.base, *in.attachment);
      auto& slot = p.quantity == Quantity::KappaG ? kappa : lambda;
      if (!slot && is_connected(*host)) slot = run_oracle(*host, p.quantity, in.g, config.budget);
      if (slot) r.oracle = *slot;
    }
    r.verdict = classify(p, r.oracle);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> g_range(const RunConfig& config, Construction c, const Graph& g,
                                 const RootedGraph& h) {
  if (config.g_values) return *config.g_values;
  const std::size_t host_order = build_product(c, g, h).order();
  const auto opt = formula_options(config);
  std::vector<std::size_t> out;
  for (std::size_t extra = 0; 2 * (extra + 1) <= host_order; ++extra) {
    if (checkable(predict(c, g, h, extra, opt))) out.push_back(extra);
  }
  return out;
}

std::vector<VerificationRecord> run_verification(const RunConfig& config) {
  config.validate();
  if (config.constructions.empty()) return {};

  auto constructions = config.constructions;
  std::sort(constructions.begin(), constructions.end(),
            [](Construction a, Construction b) { return to_string(a) < to_string(b); });
  constructions.erase(std::unique(constructions.begin(), constructions.end()), constructions.end());

  const auto bases = resolve_bases(config);
  const auto attachments = resolve_attachments(config);
  if (bases.empty() || attachments.empty()) throw InputError("verification corpus is empty");

  std::vector<std::string> base_ids;
  for (const auto& b : bases) base_ids.push_back(emit_graph6(b));

  std::vector<Instance> instances;
  for (auto c : constructions) {
    std::vector<Instance> block;
    for (std::size_t bi = 0; bi < bases.size(); ++bi) {
      for (const auto& h : attachments) {
        const auto attach = attachment_id(c, bases[bi], h);
        for (auto extra : g_range(config, c, bases[bi], h)) {
          block.push_back({c, base_ids[bi], attach, extra, &bases[bi], &h});
        }
      }
    }
    std::stable_sort(block.begin(), block.end(), [](const Instance& a, const Instance& b) {
      return std::tie(a.base_id, a.attach_id, a.g) < std::tie(b.base_id, b.attach_id, b.g);
    });
    instances.insert(instances.end(), block.begin(), block.end());
  }

  std::vector<std::vector<VerificationRecord>> results(instances.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      try {
        results[i] = evaluate(instances[i], config);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(config.jobs, std::max<std::size_t>(instances.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<VerificationRecord> records;
  for (auto& block : results) {
    for (auto& r : block) records.push_back(std::move(r));
  }
  return records;
}

std::vector<std::pair<Construction, VerdictCounts>> summarize(const std::vector<VerificationRecord>& records,
                                                              const std::vector<Construction>& constructions) {
  std::vector<std::pair<Construction, VerdictCounts>> out;
  for (auto c : constructions) {
    if (std::none_of(out.begin(), out.end(), [&](const auto& e) { return e.first == c; })) {
      out.emplace_back(c, VerdictCounts{});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return to_string(a.first) < to_string(b.first); });
  for (const auto& r : records) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == r.construction; });
    if (it == out.end()) it = out.emplace(out.end(), r.construction, VerdictCounts{});
    auto& c = it->second;
    switch (r.verdict) {
      case Verdict::Match:
        ++c.match;
        break;
      case Verdict::Mismatch:
        ++c.mismatch;
        break;
      case Verdict::BoundHolds:
        ++c.bound_holds;
        break;
      case Verdict::BoundViolated:
        ++c.bound_violated;
        break;
      case Verdict::Inapplicable:
        ++c.inapplicable;
        break;
      case Verdict::BudgetExceeded:
        ++c.budget_exceeded;
        break;
    }
  }
  return out;
}

}  // namespace gextra
