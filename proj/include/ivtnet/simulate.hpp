#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ivtnet/errors.hpp"
#include "ivtnet/ivt.hpp"
#include "ivtnet/nat.hpp"
#include "ivtnet/topology.hpp"

namespace ivtnet {

// Ordered batch of messages, one per source address, all bound for 0.
struct Scenario {
  std::vector<Nat> sources;
};

// Virtual links: once a node has computed its next hop it never computes (or
// searches) again. Entries are only ever inserted, never rewritten.
using CacheTable = std::map<Nat, Nat>;

struct MessageTrace {
  Nat source;
  std::vector<Nat> path;  // source ... 0
  std::size_t hops = 0;
  std::size_t computations = 0;  // cache misses
  std::size_t cache_hits = 0;

  bool operator==(const MessageTrace& o) const {
    return source == o.source && path == o.path && hops == o.hops &&
           computations == o.computations && cache_hits == o.cache_hits;
  }
};

struct SimulationReport {
  std::vector<MessageTrace> messages;
  std::size_t total_hops = 0;
  std::size_t total_computations = 0;
  std::size_t total_cache_hits = 0;
  std::size_t uncached_baseline_computations = 0;  // every hop computed afresh
  std::size_t savings = 0;                         // baseline - computations

  bool operator==(const SimulationReport& o) const {
    return messages == o.messages && total_hops == o.total_hops &&
           total_computations == o.total_computations && total_cache_hits == o.total_cache_hits &&
           uncached_baseline_computations == o.uncached_baseline_computations &&
           savings == o.savings;
  }
};

// Walks one message from source to 0, consulting and filling the cache.
// Routing from source 0 is a zero-hop success.
inline MessageTrace route_message(const NetworkDesign& design, CacheTable& cache,
                                  const Nat& source) {
  bool known = false;
  for (const NetworkNode& node : design.nodes) {
    if (node.address == source) {
      known = true;
      break;
    }
  }
  if (!known)
    throw UnknownSourceError("source " + to_decimal(source) + " is not in the node table");

  MessageTrace trace{source, {source}, 0, 0, 0};
  Nat cur = source;
  while (cur != 0) {
    if (auto it = cache.find(cur); it != cache.end()) {
      ++trace.cache_hits;
      cur = it->second;
    } else {
      Nat next = apply(design.rule, cur);
      cache.emplace(cur, next);
      ++trace.computations;
      cur = next;
    }
    trace.path.push_back(cur);
    if (trace.path.size() > design.nodes.size() + 1)
      throw NonConvergentError("path from " + to_decimal(source) +
                               " left the design without reaching 0");
  }
  trace.hops = trace.path.size() - 1;
  return trace;
}

// Routes every message in order against one fresh cache.
inline SimulationReport simulate(const NetworkDesign& design, const Scenario& scenario) {
  SimulationReport report;
  CacheTable cache;
  for (const Nat& source : scenario.sources) {
    report.messages.push_back(route_message(design, cache, source));
    const MessageTrace& trace = report.messages.back();
    report.total_hops += trace.hops;
    report.total_computations += trace.computations;
    report.total_cache_hits += trace.cache_hits;
  }
  report.uncached_baseline_computations = report.total_hops;
  report.savings = report.uncached_baseline_computations - report.total_computations;
  return report;
}

inline Scenario parse_scenario(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  try {
    Scenario scenario;
    for (const auto& entry : doc.at("sources"))
      scenario.sources.push_back(from_decimal(entry.get<std::string>()));
    return scenario;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scenario JSON has unexpected shape: ") + e.what());
  }
}

inline std::string scenario_to_json(const Scenario& scenario) {
  nlohmann::json sources = nlohmann::json::array();
  for (const Nat& source : scenario.sources) sources.push_back(to_decimal(source));
  return nlohmann::json{{"sources", std::move(sources)}}.dump(2) + "\n";
}

inline std::string report_render(const SimulationReport& report) {
  nlohmann::json messages = nlohmann::json::array();
  for (const MessageTrace& trace : report.messages) {
    nlohmann::json path = nlohmann::json::array();
    for (const Nat& value : trace.path) path.push_back(to_decimal(value));
    messages.push_back(nlohmann::json{{"source", to_decimal(trace.source)},
                                      {"path", std::move(path)},
                                      {"hops", trace.hops},
                                      {"computations", trace.computations},
                                      {"cache_hits", trace.cache_hits}});
  }
  const nlohmann::json doc{
      {"messages", std::move(messages)},
      {"totals",
       {{"hops", report.total_hops},
        {"computations", report.total_computations},
        {"cache_hits", report.total_cache_hits}}},
      {"uncached_baseline_computations", report.uncached_baseline_computations},
      {"savings", report.savings},
  };
  return doc.dump(2) + "\n";
}

inline SimulationReport parse_report(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    SimulationReport report;
    for (const auto& entry : doc.at("messages")) {
      MessageTrace trace;
      trace.source = from_decimal(entry.at("source").get<std::string>());
      for (const auto& value : entry.at("path"))
        trace.path.push_back(from_decimal(value.get<std::string>()));
      trace.hops = entry.at("hops").get<std::size_t>();
      trace.computations = entry.at("computations").get<std::size_t>();
      trace.cache_hits = entry.at("cache_hits").get<std::size_t>();
      report.messages.push_back(std::move(trace));
    }
    report.total_hops = doc.at("totals").at("hops").get<std::size_t>();
    report.total_computations = doc.at("totals").at("computations").get<std::size_t>();
    report.total_cache_hits = doc.at("totals").at("cache_hits").get<std::size_t>();
    report.uncached_baseline_computations =
        doc.at("uncached_baseline_computations").get<std::size_t>();
    report.savings = doc.at("savings").get<std::size_t>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report JSON has unexpected shape: ") + e.what());
  }
}

}  // namespace ivtnet
