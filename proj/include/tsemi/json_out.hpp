#pragma once

#include <json.hpp>

#include "tsemi/asymptotics.hpp"
#include "tsemi/gensets.hpp"
#include "tsemi/greens.hpp"
#include "tsemi/montecarlo.hpp"
#include "tsemi/rational.hpp"
#include "tsemi/semigroup.hpp"
#include "tsemi/table1.hpp"
#include "tsemi/transform.hpp"

// JSON views of the public types, used by the CLI.  Transformations appear
// as their 1-based text literals; element and generator indices are 0-based.

namespace tsemi {

using nlohmann::json;

inline json to_json(const Transformation& t) { return to_literal(t); }

inline json to_json(const std::vector<Transformation>& ts) {
  json out = json::array();
  for (const auto& t : ts) {
    out.push_back(to_literal(t));
  }
  return out;
}

inline json to_json(const SemigroupTable& table) {
  json out;
  out["degree"] = table.degree;
  out["generators"] = to_json(table.generators);
  out["size"] = table.size();
  out["elements"] = to_json(table.elements);
  out["words"] = table.words;
  return out;
}

inline json to_json(const SemigroupTable& table,
                    const DClassDecomposition& d) {
  json out;
  json classes = json::array();
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    json cls;
    cls["elements"] = d.classes[c];
    cls["rank"] = d.class_rank[c];
    cls["size"] = d.classes[c].size();
    classes.push_back(cls);
  }
  out["degree"] = table.degree;
  out["size"] = table.size();
  out["class_count"] = d.class_count();
  out["classes"] = classes;
  // Hasse edges [lower, upper]: strict pairs with no class in between
  json hasse = json::array();
  for (auto [a, b] : d.order_edges) {
    bool covered = false;
    for (std::uint32_t c = 0; c < d.class_count() && !covered; ++c) {
      covered = c != a && c != b && d.less(a, c) && d.less(c, b);
    }
    if (!covered) {
      hasse.push_back(json::array({a, b}));
    }
  }
  out["hasse_edges"] = hasse;
  out["topological_listing"] = d.topological_listing;
  return out;
}

inline json to_json(const GenSetReport& r) {
  json out;
  out["algorithm"] = r.algorithm;
  out["element_order"] = r.element_order;
  out["generating_set"] = to_json(r.generating_set);
  out["size"] = r.size;
  out["is_irredundant"] = r.is_irredundant;
  out["semigroup_size"] = r.semigroup_size;
  return out;
}

inline json to_json(const Estimate& e) {
  json out;
  out["quantity"] = e.quantity;
  out["n"] = e.n;
  if (e.quantity == "SUFF") {
    out["k"] = e.k;
  }
  out["samples"] = e.samples;
  out["successes"] = e.successes;
  out["p_hat"] = e.p_hat;
  out["ci95_low"] = e.ci95_low;
  out["ci95_high"] = e.ci95_high;
  out["seed"] = e.seed;
  out["rng"] = e.rng;
  out["interval"] = e.interval;
  out["workers"] = e.workers;
  return out;
}

inline json to_json(const BoundEval& b) {
  json out;
  out["function_id"] = b.function_id;
  json arg = json::array();
  for (int i = 0; i < b.arity; ++i) {
    arg.push_back(b.argmax[static_cast<std::size_t>(i)]);
  }
  out["argmax"] = arg;
  out["max_value"] = b.max_value;
  out["grid_resolution"] = b.grid_resolution;
  out["refined"] = b.refined;
  return out;
}

inline json to_json(const Table1Report& r) {
  json out;
  out["order"] =
      r.direction == Direction::descending ? "descending" : "ascending";
  out["total_classes"] = r.total_classes;
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr;
    jr["rank"] = row.rank;
    jr["class_count"] = row.class_count;
    json hist = json::object();
    for (const auto& kv : row.output_size_histogram) {
      hist[std::to_string(kv.first)] = kv.second;
    }
    jr["histogram"] = hist;
    rows.push_back(jr);
  }
  out["rows"] = rows;
  out["mean_output_size"] = r.mean_output_size;
  json diff = json::array();
  for (const auto& cell : r.reference_diff) {
    json jc;
    jc["rank"] = cell.rank;
    jc["output_size"] = cell.output_size;
    jc["computed"] = cell.computed;
    if (cell.reference >= 0) {
      jc["reference"] = cell.reference;
      jc["delta"] = cell.computed - cell.reference;
    }
    diff.push_back(jc);
  }
  out["reference_diff"] = diff;
  return out;
}

}  // namespace tsemi
