#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gextra/extra_connectivity.hpp"
#include "gextra/graph.hpp"
#include "gextra/products.hpp"

namespace gextra {

enum class Quantity { KappaG, LambdaG };
enum class PredictionKind { Exact, UpperBound, NotApplicable };

/// Adopted predictions are the evaluator's answer. Alternate ones carry a
/// competing reading of the printed statement (or one side of an overlap) so
/// the verifier can report which reading the oracle supports.
enum class Reading { Adopted, Alternate };

/// How the lower range bound of the k-parametrised edge-corona and
/// subdivision-edge cases is read: k(km+1) as printed, or k(m+1).
enum class RangeReading { Literal, KmPlusOne };

struct Prediction {
  Quantity quantity = Quantity::KappaG;
  std::size_t g = 0;
  PredictionKind kind = PredictionKind::NotApplicable;
  std::optional<ExtendedCount> value;  // present iff kind != NotApplicable
  std::string case_tag;
  std::string anchor;
  Reading reading = Reading::Adopted;
  /// Value extrapolated past a range ceiling the source calls non-strict.
  bool soft_ceiling = false;
};

struct FormulaOptions {
  RangeReading range_reading = RangeReading::Literal;
  SearchBudget budget;  // for parameters computed on the base graph
};

std::vector<Prediction> predict_edge_corona(const Graph& g, const Graph& h, std::size_t extra,
                                            const FormulaOptions& opt = {});
std::vector<Prediction> predict_neighbourhood_corona(const Graph& g, const Graph& h,
                                                     std::size_t extra,
                                                     const FormulaOptions& opt = {});
std::vector<Prediction> predict_subdivision_vertex_nc(const Graph& g, const Graph& h,
                                                      std::size_t extra,
                                                      const FormulaOptions& opt = {});
std::vector<Prediction> predict_subdivision_edge_nc(const Graph& g, const Graph& h,
                                                    std::size_t extra,
                                                    const FormulaOptions& opt = {});
std::vector<Prediction> predict_generalized_corona(const GeneralizedCoronaSpec& spec,
                                                   std::size_t extra,
                                                   const FormulaOptions& opt = {});
std::vector<Prediction> predict_rooted_product(const Graph& g, const RootedGraph& h,
                                               std::size_t extra,
                                               const FormulaOptions& opt = {});

std::string to_string(Quantity q);
std::string to_string(PredictionKind k);
std::string to_string(Reading r);
std::string to_string(RangeReading r);
RangeReading parse_range_reading(const std::string& text);

}  // namespace gextra
