#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vtc/cycle_graph.hpp"
#include "vtc/dfs_cycle.hpp"
#include "vtc/expansion.hpp"
#include "vtc/induced_cycle.hpp"
#include "vtc/number_gap.hpp"
#include "vtc/pipeline.hpp"
#include "vtc/verify.hpp"

namespace vtc {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Envelope {schema, instance, operation, parameters, result, certificate, assertions}.
struct Report {
  Json instance = Json::object();
  std::string operation;
  Json parameters = Json::object();
  Json result = Json::object();
  Json certificate = Json::object();
  std::vector<std::pair<std::string, bool>> assertions;

  void assert_that(std::string name, bool holds) { assertions.emplace_back(std::move(name), holds); }
  bool all_hold() const;
  Json to_json() const;
};

std::string to_string(const Ratio& r);

Json to_json(const std::vector<Vertex>& vertices);
Json to_json(const DirectedCycle& c);
Json to_json(const DirectedPath& p);
Json to_json(const ExpansionReport& r);
Json to_json(const CycleSearchResult& r);
Json to_json(const LongPathResult& r);
Json to_json(const CycleGraphDiameterReport& r);
Json to_json(const InducedCycleReport& r);
Json to_json(const PipelineReport& r);
Json to_json(const WitnessCertificate& c);
Json to_json(const WitnessConstruction& w);
Json to_json(const MotohashiPair& p);
Json to_json(const SuiteResult& s);

/// Digraph summary used as the `instance` field.
Json describe(const std::string& name, const Digraph& d);

}  // namespace vtc
