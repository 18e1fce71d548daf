#include <doctest.h>

#include "helpers.hpp"
#include "tsemi/json_out.hpp"

using namespace tsemi;

namespace {
Transformation t(const std::string& lit) { return parse_transformation(lit); }
}  // namespace

TEST_CASE("semigroup table export round-trips elements and words") {
  const auto table = closure({t("[2,3,1]"), t("[1,1,3]")});
  const json j = to_json(table);
  CHECK(j["degree"] == 3);
  CHECK(j["size"] == table.size());
  REQUIRE(j["elements"].size() == table.size());
  REQUIRE(j["words"].size() == table.size());
  for (std::size_t e = 0; e < table.size(); ++e) {
    // element literals parse back to the element
    CHECK(parse_transformation(j["elements"][e].get<std::string>()) ==
          table.elements[e]);
    // the exported word evaluates to the element
    Transformation acc =
        t(j["generators"][j["words"][e][0].get<std::size_t>()]
              .get<std::string>());
    for (std::size_t i = 1; i < j["words"][e].size(); ++i) {
      acc = compose(
          acc, t(j["generators"][j["words"][e][i].get<std::size_t>()]
                     .get<std::string>()));
    }
    CHECK(acc == table.elements[e]);
  }
}

TEST_CASE("greens export lists every element once with its rank") {
  const auto table = closure({t("[2,1,3]"), t("[2,3,1]"), t("[1,1,3]")});
  const auto d = d_classes(table);
  const json j = to_json(table, d);
  CHECK(j["class_count"] == 3);
  std::vector<bool> seen(table.size(), false);
  for (const auto& cls : j["classes"]) {
    for (const auto& e : cls["elements"]) {
      const auto i = e.get<std::size_t>();
      CHECK(!seen[i]);
      seen[i] = true;
      CHECK(rank(table.elements[i]) == cls["rank"].get<std::size_t>());
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  // T_3 has a chain of 3 classes: exactly 2 Hasse edges
  CHECK(j["hasse_edges"].size() == 2);
  for (const auto& edge : j["hasse_edges"]) {
    const auto lower = edge[0].get<std::uint32_t>();
    const auto upper = edge[1].get<std::uint32_t>();
    CHECK(d.less(lower, upper));
  }
}

TEST_CASE("estimate and report exports carry the documented fields") {
  const auto e = estimate(Quantity::G, 3, 500, 42);
  const json je = to_json(e);
  for (const char* key : {"quantity", "n", "samples", "successes", "p_hat",
                          "ci95_low", "ci95_high", "seed", "rng", "interval",
                          "workers"}) {
    CHECK(je.contains(key));
  }
  CHECK(je["rng"] == "splitmix64");

  const auto report = small_generating_set(closure({t("[2,3,1]")}));
  const json jr = to_json(report);
  CHECK(jr["algorithm"] == "smallgen");
  CHECK(jr["size"] == report.size);
  CHECK(jr["generating_set"].size() == report.size);
}
