#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gextra/extra_connectivity.hpp"
#include "gextra/formulas.hpp"
#include "gextra/graph.hpp"
#include "gextra/products.hpp"

namespace gextra {

enum class Construction {
  EdgeCorona,
  NeighbourhoodCorona,
  SubdivisionVertexNc,
  SubdivisionEdgeNc,
  GeneralizedCorona,
  RootedProduct,
};

/// "edge_corona", "neighbourhood_corona", "subdivision_vertex_nc",
/// "subdivision_edge_nc", "generalized_corona", "rooted_product".
std::string to_string(Construction c);
Construction parse_construction(const std::string& name);
std::vector<Construction> all_constructions();

/// The product graph; generalized coronae use h for every base vertex and
/// only the rooted product reads the root.
Graph build_product(Construction c, const Graph& g, const RootedGraph& h);
std::vector<Prediction> predict(Construction c, const Graph& g, const RootedGraph& h,
                                std::size_t extra, const FormulaOptions& opt = {});
std::string attachment_id(Construction c, const Graph& g, const RootedGraph& h);

enum class Verdict { Match, Mismatch, BoundHolds, BoundViolated, Inapplicable, BudgetExceeded };
std::string to_string(Verdict v);

enum class OracleStatus { Exact, Infinite, BudgetExceeded, NotRun };
std::string to_string(OracleStatus s);

struct OracleOutcome {
  OracleStatus status = OracleStatus::NotRun;
  std::size_t value = 0;        // Exact
  std::size_t lower_bound = 0;  // BudgetExceeded
  std::variant<std::monostate, VertexCutCertificate, EdgeCutCertificate> certificate;

  std::optional<ExtendedCount> extended() const;
};

OracleOutcome run_oracle(const Graph& host, Quantity q, std::size_t extra, const SearchBudget& budget);
Verdict classify(const Prediction& p, const OracleOutcome& oracle);

struct VerificationRecord {
  Construction construction = Construction::EdgeCorona;
  std::string base_id;
  std::string attach_id;
  std::size_t g = 0;
  Prediction prediction;
  OracleOutcome oracle;
  Verdict verdict = Verdict::Inapplicable;
};

struct RunConfig {
  std::vector<Construction> constructions = all_constructions();
  std::size_t base_max_n = 5;
  std::vector<Graph> bases;  // overrides base_max_n when nonempty
  std::vector<RootedGraph> attachments;  // empty means default_attachments()
  std::optional<std::vector<std::size_t>> g_values;  // nullopt: auto range
  SearchBudget budget;
  RangeReading range_reading = RangeReading::Literal;
  std::size_t jobs = 1;

  /// Throws InputError on a non-positive budget or job count.
  void validate() const;
};

/// Bases in canonical form, in sweep order.
std::vector<Graph> resolve_bases(const RunConfig& config);
std::vector<RootedGraph> resolve_attachments(const RunConfig& config);

/// g values examined for one instance: explicit values, or under "auto" every
/// g with 2(g+1) <= |host| at which the evaluator makes a checkable prediction.
std::vector<std::size_t> g_range(const RunConfig& config, Construction c, const Graph& g,
                                 const RootedGraph& h);

/// Records sorted by construction name, base_id, attach_id, g; evaluator
/// order within one g. Identical for every jobs value.
std::vector<VerificationRecord> run_verification(const RunConfig& config);

struct VerdictCounts {
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t bound_holds = 0;
  std::size_t bound_violated = 0;
  std::size_t inapplicable = 0;
  std::size_t budget_exceeded = 0;
  std::size_t total() const {
    return match + mismatch + bound_holds + bound_violated + inapplicable + budget_exceeded;
  }
};

/// One entry per listed construction, zeros included.
std::vector<std::pair<Construction, VerdictCounts>> summarize(
    const std::vector<VerificationRecord>& records, const std::vector<Construction>& constructions);

}  // namespace gextra
