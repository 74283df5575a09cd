#include "gextra/formulas.hpp"

#include <algorithm>

namespace gextra {

std::string to_string(Quantity q) { return q == Quantity::KappaG ? "kappa_g" : "lambda_g"; }

std::string to_string(PredictionKind k) {
  switch (k) {
    case PredictionKind::Exact:
      return "exact";
    case PredictionKind::UpperBound:
      return "upper_bound";
    case PredictionKind::NotApplicable:
      return "not_applicable";
  }
  return {};
}

std::string to_string(Reading r) { return r == Reading::Adopted ? "adopted" : "alternate"; }

std::string to_string(RangeReading r) { return r == RangeReading::Literal ? "literal" : "km+1"; }

RangeReading parse_range_reading(const std::string& text) {
  if (text == "literal") return RangeReading::Literal;
  if (text == "km+1") return RangeReading::KmPlusOne;
  throw InputError("range reading must be 'literal' or 'km+1', got '" + text + "'");
}

namespace {

using Count = std::size_t;

struct Candidate {
  PredictionKind kind = PredictionKind::Exact;
  ExtendedCount value;
  std::string tag;
  std::string anchor;
};

Prediction make(Quantity q, Count extra, const Candidate& c, Reading r = Reading::Adopted,
                bool soft = false) {
  Prediction p;
  p.quantity = q;
  p.g = extra;
  p.kind = c.kind;
  p.value = c.value;
  p.case_tag = c.tag;
  p.anchor = c.anchor;
  p.reading = r;
  p.soft_ceiling = soft;
  return p;
}

Prediction not_applicable(Quantity q, Count extra, std::string tag, std::string anchor = "") {
  Prediction p;
  p.quantity = q;
  p.g = extra;
  p.case_tag = std::move(tag);
  p.anchor = std::move(anchor);
  return p;
}

ExtendedCount fin(Count v) { return ExtendedCount::finite(v); }

// Collapses the hard cases that apply at this g into one adopted prediction.
// Disagreeing cases yield NotApplicable plus each case as an alternate.
struct Resolver {
  Quantity quantity;
  Count extra;
  std::vector<Candidate> hard;
  std::optional<Candidate> soft;
  std::vector<Candidate> alternates;

  std::vector<Prediction> finish() const {
    std::vector<Prediction> out;
    if (!hard.empty()) {
      std::optional<ExtendedCount> exact;
      std::optional<ExtendedCount> bound;
      bool clash = false;
      std::string tags;
      std::string anchors;
      for (const auto& c : hard) {
        if (c.kind == PredictionKind::Exact) {
          if (exact && *exact != c.value) clash = true;
          exact = c.value;
        } else {
          bound = bound ? std::min(*bound, c.value) : c.value;
        }
      }
      if (exact && bound && *exact > *bound) clash = true;
      if (clash) {
        std::string diag = "conflict:";
        for (const auto& c : hard) diag += " [" + c.tag + " = " + c.value.to_string() + "]";
        out.push_back(not_applicable(quantity, extra, diag));
        for (const auto& c : hard) {
          Candidate alt = c;
          alt.tag = "overlap: " + c.tag;
          out.push_back(make(quantity, extra, alt, Reading::Alternate));
        }
      } else {
        Candidate merged;
        merged.kind = exact ? PredictionKind::Exact : PredictionKind::UpperBound;
        merged.value = exact ? *exact : *bound;
        for (const auto& c : hard) {
          if (c.kind != merged.kind) continue;
          if (!merged.tag.empty()) {
            merged.tag += "; ";
            merged.anchor += ",";
          }
          merged.tag += c.tag;
          merged.anchor += c.anchor;
        }
        out.push_back(make(quantity, extra, merged));
      }
    } else if (soft) {
      Candidate c = *soft;
      c.tag = "soft ceiling: " + c.tag;
      out.push_back(make(quantity, extra, c, Reading::Adopted, true));
    } else {
      out.push_back(not_applicable(quantity, extra, "out of range"));
    }
    for (const auto& c : alternates) out.push_back(make(quantity, extra, c, Reading::Alternate));
    return out;
  }
};

// Base-graph parameters the evaluators consume.
struct BaseProfile {
  Count n = 0;
  bool connected = false;
  bool complete = false;
  ExtendedCount kappa = ExtendedCount::infinite();
  Count delta = 0;
  Count lambda = 0;
};

BaseProfile profile(const Graph& g) {
  BaseProfile p;
  p.n = g.order();
  p.connected = !g.empty() && is_connected(g);
  p.complete = g.is_complete();
  if (!p.connected) return p;
  p.kappa = vertex_connectivity(g);
  p.delta = min_degree(g);
  if (p.n >= 2) p.lambda = edge_connectivity(g);
  return p;
}

// Minimum constrained cuts of G for floors k+1, k = 1, 2, ... until none exists.
std::vector<ConstrainedCutResult> constrained_cuts(const Graph& g, const SearchBudget& budget) {
  std::vector<ConstrainedCutResult> out;
  for (Count k = 1; k <= g.order(); ++k) {
    auto a = min_constrained_vertex_cut(g, k, budget);
    if (!a) break;
    out.push_back(std::move(*a));
  }
  return out;
}

std::string k_tag(const char* anchor, Count k) { return std::string(anchor) + " k=" + std::to_string(k); }

std::optional<std::string> section_precondition(const BaseProfile& g, const Graph& h, Count min_n) {
  if (!g.connected) return "precondition: G must be connected";
  if (g.complete) return "precondition: G must be non-complete";
  if (g.n < min_n) return "precondition: G needs at least " + std::to_string(min_n) + " vertices";
  if (h.empty() || !is_connected(h)) return "precondition: H must be connected and nonempty";
  return std::nullopt;
}

// Hard range [lower, ceiling] on g+1 for one k, with the soft extension past
// the ceiling. `lower_inclusive` distinguishes "<" from "<=" on the left.
struct KRange {
  Count k;
  Count lower;
  bool lower_inclusive;
  Count ceiling;
  Candidate value;
};

void apply_k_ranges(Resolver& r, const std::vector<KRange>& ranges, Count extra, bool soft_ceiling) {
  const Count t = extra + 1;
  const KRange* nearest = nullptr;
  for (const auto& kr : ranges) {
    const bool above = kr.lower_inclusive ? kr.lower <= t : kr.lower < t;
    if (!above) continue;
    if (t <= kr.ceiling) {
      r.hard.push_back(kr.value);
    } else {
      nearest = &kr;
    }
  }
  if (soft_ceiling && nearest) r.soft = nearest->value;
}

}  // namespace

std::vector<Prediction> predict_edge_corona(const Graph& g, const Graph& h, Count extra,
                                            const FormulaOptions& opt) {
  const auto base = profile(g);
  if (auto bad = section_precondition(base, h, 3)) {
    return {not_applicable(Quantity::KappaG, extra, *bad), not_applicable(Quantity::LambdaG, extra, *bad)};
  }
  const Count m = h.order();
  const Count kappa = base.kappa.value();

  Resolver kr{Quantity::KappaG, extra, {}, {}, {}};
  if (extra <= m - 1) {
    if (kappa == 1) {
      kr.hard.push_back({PredictionKind::Exact, fin(1), "Lemma4: κ(G)=1", "Lemma4"});
    } else {
      kr.hard.push_back({PredictionKind::Exact, fin(2), "Thm1(i): κ(G)≥2", "Thm1(i)"});
    }
  }
  std::vector<KRange> ranges;
  for (const auto& a : constrained_cuts(g, opt.budget)) {
    const Count k = a.component_floor - 1;
    const Count lower = opt.range_reading == RangeReading::Literal ? k * (k * m + 1) : k * (m + 1);
    const Count ceiling = (k + 1) + k * m + base.delta * m;
    Candidate c{PredictionKind::Exact, fin(a.size), "", "Thm1(ii)"};
    if (a.adjacent_pairs == 0) {
      c.tag = k_tag("Thm1(ii)", k) + ": A independent, |A|=" + std::to_string(a.size);
    } else {
      c.value = fin(a.size + a.adjacent_pairs * m);
      c.tag = k_tag("Thm1(ii)", k) + ": |A|+|A′|m with |A|=" + std::to_string(a.size) +
              ", A′=" + std::to_string(a.adjacent_pairs);
    }
    ranges.push_back({k, lower, false, ceiling, c});
  }
  apply_k_ranges(kr, ranges, extra, true);

  std::vector<Prediction> out = kr.finish();

  if (m < 2) {
    out.push_back(not_applicable(Quantity::LambdaG, extra, "precondition: m≥2 required", "Thm2"));
    return out;
  }
  Resolver lr{Quantity::LambdaG, extra, {}, {}, {}};
  if (extra <= m - 1) {
    if (base.lambda == 1) {
      lr.hard.push_back({PredictionKind::Exact, fin(m + 1), "Thm2: λ(G)=1 → m+1", "Thm2"});
      lr.alternates.push_back({PredictionKind::Exact, fin(2 * m),
                               "Thm2 printed second case λ(G)≥1 → 2m (overlaps λ(G)=1)", "Thm2"});
    } else {
      lr.hard.push_back({PredictionKind::Exact, fin(2 * m), "Thm2: λ(G)≥2 → 2m", "Thm2"});
    }
  }
  auto lambda_out = lr.finish();
  out.insert(out.end(), lambda_out.begin(), lambda_out.end());
  return out;
}

std::vector<Prediction> predict_neighbourhood_corona(const Graph& g, const Graph& h, Count extra,
                                                     const FormulaOptions& opt) {
  const auto base = profile(g);
  if (auto bad = section_precondition(base, h, 3)) {
    return {not_applicable(Quantity::KappaG, extra, *bad)};
  }
  const Count m = h.order();
  const std::string note = base.n < 5 ? " (below-stated-n)" : "";
  Resolver r{Quantity::KappaG, extra, {}, {}, {}};
  if (extra >= 1 && extra <= m - 1) {
    r.hard.push_back({PredictionKind::Exact, fin(base.delta), "Thm3(i): δ(G)" + note, "Thm3(i)"});
  }
  std::vector<KRange> ranges;
  for (const auto& a : constrained_cuts(g, opt.budget)) {
    const Count k = a.component_floor - 1;
    Candidate c{PredictionKind::Exact, fin(a.size * (m + 1)),
                k_tag("Thm3(ii)", k) + ": |A|(m+1) with |A|=" + std::to_string(a.size) + note,
                "Thm3(ii)"};
    ranges.push_back({k, k * (m + 1), false, (k + 1) * (m + 1), c});
  }
  apply_k_ranges(r, ranges, extra, false);
  return r.finish();
}

std::vector<Prediction> predict_subdivision_vertex_nc(const Graph& g, const Graph& h, Count extra,
                                                      const FormulaOptions& opt) {
  const auto base = profile(g);
  if (auto bad = section_precondition(base, h, 3)) {
    return {not_applicable(Quantity::KappaG, extra, *bad)};
  }
  const Count m = h.order();
  Resolver r{Quantity::KappaG, extra, {}, {}, {}};
  if (extra == 0) {
    r.hard.push_back({PredictionKind::Exact, fin(base.delta), "Lemma6/Cor: g=0 → δ(G)", "Lemma6"});
  } else if (extra <= m - 1) {
    r.hard.push_back({PredictionKind::Exact, fin(base.delta + 1), "Thm4(i): δ(G)+1", "Thm4(i)"});
  }
  std::vector<KRange> ranges;
  for (const auto& a : constrained_cuts(g, opt.budget)) {
    const Count k = a.component_floor - 1;
    Candidate c{PredictionKind::Exact, fin(a.size * (m + 1)), "", "Thm4(ii)"};
    if (a.adjacent_pairs == 0) {
      c.tag = k_tag("Thm4(ii)", k) + ": A independent, |A|(m+1) with |A|=" + std::to_string(a.size);
    } else {
      c.value = fin(a.size * (m + 1) + a.adjacent_pairs);
      c.tag = k_tag("Thm4(ii)", k) + ": |A|(m+1)+|A′| with |A|=" + std::to_string(a.size) +
              ", A′=" + std::to_string(a.adjacent_pairs);
    }
    ranges.push_back({k, k * (m + 1), true, (k + 1) * (m + 1) + base.delta, c});
  }
  apply_k_ranges(r, ranges, extra, true);
  return r.finish();
}

std::vector<Prediction> predict_subdivision_edge_nc(const Graph& g, const Graph& h, Count extra,
                                                    const FormulaOptions& opt) {
  const auto base = profile(g);
  if (auto bad = section_precondition(base, h, 2)) {
    return {not_applicable(Quantity::KappaG, extra, *bad)};
  }
  const Count m = h.order();
  const Count kappa = base.kappa.value();
  Resolver r{Quantity::KappaG, extra, {}, {}, {}};
  if (extra == 0) {
    if (kappa == 1) {
      r.hard.push_back({PredictionKind::Exact, fin(1), "Lemma7: κ(G)=1", "Lemma7"});
    } else {
      r.hard.push_back({PredictionKind::Exact, fin(2), "Lemma8: κ(G)≥2 → 2", "Lemma8"});
    }
  } else if (extra <= m - 1) {
    if (kappa == 1) {
      r.hard.push_back({PredictionKind::Exact, fin(1), "Lemma7: κ(G)=1", "Lemma7"});
    } else if (kappa == 2) {
      // Adopted: 2 for a non-adjacent minimum cut, 3 when every minimum cut is
      // an adjacent pair. The swapped assignment goes out as the alternate.
      const auto a = min_constrained_vertex_cut(g, 0, opt.budget);
      const bool non_adjacent = a && a->adjacent_pairs == 0;
      if (non_adjacent) {
        r.hard.push_back({PredictionKind::Exact, fin(2),
                          "Thm5(i) proof reading: non-adjacent minimum cut → 2 "
                          "(printed statement gives 3)",
                          "Thm5(i)"});
        r.alternates.push_back({PredictionKind::Exact, fin(3),
                                "Thm5(i) printed statement: non-adjacent minimum cut → 3",
                                "Thm5(i)"});
      } else {
        r.hard.push_back({PredictionKind::Exact, fin(3),
                          "Thm5(i) proof reading: all minimum cuts adjacent → 3 "
                          "(printed statement gives 2)",
                          "Thm5(i)"});
        r.alternates.push_back({PredictionKind::Exact, fin(2),
                                "Thm5(i) printed statement: adjacent minimum cut → 2", "Thm5(i)"});
      }
    } else {
      r.hard.push_back({PredictionKind::Exact, fin(3), "Thm5(i): κ(G)≥3 → 3", "Thm5(i)"});
    }
  }
  std::vector<KRange> ranges;
  for (const auto& x : constrained_cuts(g, opt.budget)) {
    const Count k = x.component_floor - 1;
    const Count lower = opt.range_reading == RangeReading::Literal ? k * (k * m + 1) : k * (m + 1);
    const Count ceiling = (k + 1) + k * m + base.delta * m + k + 2;
    Candidate c{PredictionKind::Exact, fin(x.size), "", "Thm5(ii)"};
    if (x.adjacent_pairs == 0) {
      c.tag = k_tag("Thm5(ii)", k) + ": X independent, |X|=" + std::to_string(x.size);
    } else {
      c.value = fin(x.size + x.adjacent_pairs * (m + 1));
      c.tag = k_tag("Thm5(ii)", k) + ": |X|+|X′|(m+1) with |X|=" + std::to_string(x.size) +
              ", X′=" + std::to_string(x.adjacent_pairs);
    }
    ranges.push_back({k, lower, true, ceiling, c});
  }
  apply_k_ranges(r, ranges, extra, true);
  return r.finish();
}

std::vector<Prediction> predict_generalized_corona(const GeneralizedCoronaSpec& spec, Count extra,
                                                   const FormulaOptions& opt) {
  const auto base = profile(spec.base);
  auto bad = [&]() -> std::optional<std::string> {
    if (!base.connected) return "precondition: G must be connected";
    if (base.n < 2) return "precondition: G needs at least 2 vertices";
    for (const auto& h : spec.attachments) {
      if (!is_connected(h)) return "precondition: every H_i must be connected";
    }
    return std::nullopt;
  }();
  if (bad) return {not_applicable(Quantity::KappaG, extra, *bad)};
  Count m_min = spec.attachments.front().order();
  for (const auto& h : spec.attachments) m_min = std::min(m_min, h.order());

  Resolver r{Quantity::KappaG, extra, {}, {}, {}};
  if (extra == 0) {
    r.hard.push_back({PredictionKind::Exact, fin(1), "Thm6(i) g=0 extension", "Thm6(i)"});
  } else if (extra <= m_min - 1) {
    r.hard.push_back({PredictionKind::Exact, fin(1), "Thm6(i): remove the vertex with the smallest H_i",
                      "Thm6(i)"});
  }
  std::vector<KRange> ranges;
  for (const auto& x : constrained_cuts(spec.base, opt.budget)) {
    const Count k = x.component_floor - 1;
    Candidate c{PredictionKind::UpperBound, fin(x.size * (m_min + 1)),
                k_tag("Thm6(ii)", k) + ": |X|(m_min+1) with |X|=" + std::to_string(x.size),
                "Thm6(ii)"};
    ranges.push_back({k, k * (m_min + 1), false, (k + 1) * (m_min + 1), c});
  }
  apply_k_ranges(r, ranges, extra, false);
  return r.finish();
}

std::vector<Prediction> predict_rooted_product(const Graph& g, const RootedGraph& rh, Count extra,
                                               const FormulaOptions& opt) {
  const auto base = profile(g);
  const Graph& h = rh.graph;
  const Count m = h.order();
  auto bad = [&]() -> std::optional<std::string> {
    if (!base.connected) return "precondition: G must be connected";
    if (base.n < 2) return "precondition: G needs at least 2 vertices";
    if (!is_connected(h)) return "precondition: H must be connected";
    if (m == 1) return "precondition: m ≠ 1";
    return std::nullopt;
  }();
  if (bad) {
    return {not_applicable(Quantity::KappaG, extra, *bad, "Thm7"),
            not_applicable(Quantity::LambdaG, extra, *bad, "Thm8")};
  }

  Resolver kr{Quantity::KappaG, extra, {}, {}, {}};
  if (extra <= m - 2) kr.hard.push_back({PredictionKind::Exact, fin(1), "Thm7(i): remove one root", "Thm7(i)"});
  std::vector<KRange> ranges;
  for (const auto& a : constrained_cuts(g, opt.budget)) {
    const Count k = a.component_floor - 1;
    Candidate c{PredictionKind::Exact, fin(a.size * m),
                k_tag("Thm7(ii)", k) + ": |A|m with |A|=" + std::to_string(a.size), "Thm7(ii)"};
    ranges.push_back({k, k * m, false, (k + 1) * m, c});
  }
  apply_k_ranges(kr, ranges, extra, false);
  auto out = kr.finish();

  Resolver lr{Quantity::LambdaG, extra, {}, {}, {}};
  if (extra <= m - 2) {
    if (base.lambda == 1) {
      lr.hard.push_back({PredictionKind::Exact, fin(1), "Thm8(1a): λ(G)=1", "Thm8(1a)"});
    } else {
      const Count root_degree = degree(h, rh.root);
      lr.hard.push_back({PredictionKind::Exact, fin(std::min(base.lambda, root_degree)),
                         "Thm8(1b): min{λ(G),deg(v^r)} = min{" + std::to_string(base.lambda) + "," +
                             std::to_string(root_degree) + "}",
                         "Thm8(1b)"});
    }
  }
  std::vector<KRange> lranges;
  for (Count k = 1; 2 * (k + 1) <= base.n; ++k) {
    const auto lk = lambda_k(g, k, opt.budget);
    if (!lk.found()) break;
    Candidate c{PredictionKind::Exact, fin(lk.cut_size),
                k_tag("Thm8(2)", k) + ": λ_k(G)=" + std::to_string(lk.cut_size), "Thm8(2)"};
    lranges.push_back({k, k * (m - 2), false, (k + 1) * m, c});
  }
  apply_k_ranges(lr, lranges, extra, false);
  auto lambda_out = lr.finish();
  out.insert(out.end(), lambda_out.begin(), lambda_out.end());
  return out;
}

}  // namespace gextra
