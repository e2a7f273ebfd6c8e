#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ivtnet/errors.hpp"
#include "ivtnet/ivt.hpp"
#include "ivtnet/nat.hpp"
#include "ivtnet/padic.hpp"
#include "ivtnet/preimage.hpp"
#include "ivtnet/rules.hpp"

namespace ivtnet {

// One machine in the designed network. line 0 / phase 0 / hop 0 is the
// destination; roots sit at phase 0 of their line, one hop from 0.
struct NetworkNode {
  Nat address;
  unsigned line = 0;
  unsigned phase = 0;
  unsigned hop_distance = 0;
  std::optional<Nat> next_hop;  // empty for the destination only

  bool operator==(const NetworkNode& o) const {
    return address == o.address && line == o.line && phase == o.phase &&
           hop_distance == o.hop_distance && next_hop == o.next_hop;
  }
};

// (m, phi(m)): routing from the pre-image reuses m's cached path after
// exactly p hops.
struct NodePair {
  Nat m;
  Nat a;

  bool operator==(const NodePair& o) const { return m == o.m && a == o.a; }
};

struct NetworkDesign {
  RuleTable rule;
  unsigned v = 0;  // parallel lines
  unsigned n = 0;  // phases per line
  std::vector<NetworkNode> nodes;  // sorted by (line, hop_distance)
  std::vector<NodePair> pairs;     // sorted by m

  int p() const { return rule.p(); }

  bool operator==(const NetworkDesign& o) const {
    return rule == o.rule && v == o.v && n == o.n && nodes == o.nodes && pairs == o.pairs;
  }
};

inline std::uint64_t capacity(Radix radix, unsigned v, unsigned n) {
  return (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(radix.value()) + 1u) * v + 1u;
}

// The v smallest addresses that reach 0 in one hop. For a bijective map the
// one-hop set is forced: every digit must be d* = f^-1(0), so the addresses
// are d*, (d* d*)_p, (d* d* d*)_p, ...
inline std::vector<Nat> roots(const RuleTable& rule, unsigned v) {
  detail::require_bijective_collatz(rule);
  const auto dstar = static_cast<std::uint8_t>(detail::inverse_digit(rule, 0));
  std::vector<Nat> out;
  out.reserve(v);
  DigitString repdigit{rule.radix, {}};
  for (unsigned k = 0; k < v; ++k) {
    repdigit.digits.push_back(dstar);
    out.push_back(from_digits(repdigit));
  }
  return out;
}

// All (m, phi(m)) pairs with both endpoints in the node table, ascending by m.
inline std::vector<NodePair> optimal_pairs(const NetworkDesign& design) {
  std::set<Nat> table;
  for (const NetworkNode& node : design.nodes) table.insert(node.address);
  std::vector<NodePair> pairs;
  for (const NetworkNode& node : design.nodes) {
    if (node.address == 0) continue;
    const Nat upstream = phi(design.rule, node.address).a;
    if (table.count(upstream)) pairs.push_back(NodePair{node.address, upstream});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const NodePair& a, const NodePair& b) { return a.m < b.m; });
  return pairs;
}

// Destination 0 plus one pre-image-chain line per root. Phase j of a line
// rooted at r extends it upstream by p nodes: A = phi(c) followed by its
// forward orbit down to (but not including) c, where c is the previous
// phase's top. Hop distances come from the trajectory position.
inline NetworkDesign build_network(const RuleTable& rule, const std::vector<Nat>& line_roots,
                                   unsigned n) {
  detail::require_bijective_collatz(rule);
  const auto p = static_cast<unsigned>(rule.p());

  NetworkDesign design{rule, static_cast<unsigned>(line_roots.size()), n, {}, {}};
  std::set<Nat> seen;
  auto add_node = [&](NetworkNode node) {
    if (!seen.insert(node.address).second)
      throw DesignCollisionError("address " + to_decimal(node.address) +
                                 " appears on two lines");
    design.nodes.push_back(std::move(node));
  };

  add_node(NetworkNode{Nat(0), 0, 0, 0, std::nullopt});
  for (unsigned line = 1; line <= line_roots.size(); ++line) {
    const Nat& root = line_roots[line - 1];
    if (root == 0 || apply(rule, root) != 0)
      throw Error("root " + to_decimal(root) + " is not one hop from the destination");
    add_node(NetworkNode{root, line, 0, 1, Nat(0)});

    Nat chain_top = root;
    for (unsigned phase = 1; phase <= n; ++phase) {
      std::vector<Nat> chain{phi(rule, chain_top).a};
      for (unsigned i = 1; i < p; ++i) chain.push_back(apply(rule, chain.back()));
      for (unsigned i = 0; i < p; ++i) {
        const Nat& next = (i + 1 < p) ? chain[i + 1] : chain_top;
        add_node(NetworkNode{chain[i], line, phase, phase * p + 1 - i, next});
      }
      chain_top = chain.front();
    }
  }

  std::sort(design.nodes.begin(), design.nodes.end(), [](const NetworkNode& a, const NetworkNode& b) {
    return std::tie(a.line, a.hop_distance) < std::tie(b.line, b.hop_distance);
  });
  design.pairs = optimal_pairs(design);
  return design;
}

inline NetworkDesign build_network(const RuleTable& rule, unsigned v, unsigned n) {
  return build_network(rule, roots(rule, v), n);
}

// Structural checks: unique addresses, exactly one destination, out-degree 1
// elsewhere with edges that stay in the table and follow the rule, and every
// node draining to 0 (an in-tree, hence unique paths). Empty result = valid.
inline std::vector<std::string> validate(const NetworkDesign& design) {
  std::vector<std::string> violations;
  std::map<Nat, const NetworkNode*> table;

  for (const NetworkNode& node : design.nodes) {
    if (!table.emplace(node.address, &node).second)
      violations.push_back("duplicate-address " + to_decimal(node.address));
  }

  std::size_t edges = 0;
  for (const NetworkNode& node : design.nodes) {
    if (node.address == 0) {
      if (node.next_hop)
        violations.push_back("destination-has-next-hop");
      continue;
    }
    if (!node.next_hop) {
      violations.push_back("missing-next-hop " + to_decimal(node.address));
      continue;
    }
    ++edges;
    if (*node.next_hop != apply(design.rule, node.address))
      violations.push_back("bad-next-hop " + to_decimal(node.address) + " -> " +
                           to_decimal(*node.next_hop));
    if (!table.count(*node.next_hop))
      violations.push_back("dangling-edge " + to_decimal(node.address) + " -> " +
                           to_decimal(*node.next_hop));
  }

  if (!table.count(Nat(0))) violations.push_back("destination-missing");
  if (edges != design.nodes.size() - 1)
    violations.push_back("edge-count " + std::to_string(edges) + " != " +
                         std::to_string(design.nodes.size() - 1));

  if (violations.empty()) {
    for (const NetworkNode& node : design.nodes) {
      Nat cur = node.address;
      std::size_t steps = 0;
      while (cur != 0 && steps <= design.nodes.size()) {
        cur = *table.at(cur)->next_hop;
        if (!table.count(cur)) break;
        ++steps;
      }
      if (cur != 0) violations.push_back("unreachable " + to_decimal(node.address));
    }
  }
  return violations;
}

// Canonical rooted-tree encoding of the in-tree, addresses ignored: children
// encodings are sorted, so equal strings <=> isomorphic topologies.
inline std::string canonical_form(const NetworkDesign& design) {
  if (const auto violations = validate(design); !violations.empty())
    throw ValidationFailedError("design is invalid: " + violations.front());

  std::map<Nat, std::vector<Nat>> children;
  for (const NetworkNode& node : design.nodes) {
    children[node.address];
    if (node.next_hop) children[*node.next_hop].push_back(node.address);
  }

  // Post-order with an explicit stack; lines can be long enough to make
  // recursion depth a real concern.
  std::map<Nat, std::string> encoding;
  std::vector<std::pair<Nat, bool>> stack{{Nat(0), false}};
  while (!stack.empty()) {
    auto [addr, expanded] = stack.back();
    stack.pop_back();
    if (!expanded) {
      stack.emplace_back(addr, true);
      for (const Nat& child : children[addr]) stack.emplace_back(child, false);
    } else {
      std::vector<std::string> parts;
      parts.reserve(children[addr].size());
      for (const Nat& child : children[addr]) parts.push_back(std::move(encoding[child]));
      std::sort(parts.begin(), parts.end());
      std::string enc = "(";
      for (const std::string& part : parts) enc += part;
      enc += ")";
      encoding[addr] = std::move(enc);
    }
  }
  return encoding[Nat(0)];
}

inline std::string export_json(const NetworkDesign& design) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const NetworkNode& node : design.nodes) {
    nlohmann::json entry{
        {"address", to_decimal(node.address)},
        {"line", node.line},
        {"phase", node.phase},
        {"hop_distance", node.hop_distance},
        {"next_hop", nullptr},
    };
    if (node.next_hop) entry["next_hop"] = to_decimal(*node.next_hop);
    nodes.push_back(std::move(entry));
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const NodePair& pair : design.pairs)
    pairs.push_back(nlohmann::json::array({to_decimal(pair.m), to_decimal(pair.a)}));

  const nlohmann::json doc{
      {"p", design.p()},         {"rule", to_decimal(design.rule.index)},
      {"v", design.v},           {"n", design.n},
      {"destination", "0"},      {"nodes", std::move(nodes)},
      {"pairs", std::move(pairs)},
  };
  return doc.dump(2) + "\n";
}

inline NetworkDesign import_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("design is not valid JSON: ") + e.what());
  }
  try {
    NetworkDesign design{decode_rule(from_decimal(doc.at("rule").get<std::string>()),
                                     Radix(doc.at("p").get<int>())),
                         doc.at("v").get<unsigned>(), doc.at("n").get<unsigned>(), {}, {}};
    for (const auto& entry : doc.at("nodes")) {
      NetworkNode node{from_decimal(entry.at("address").get<std::string>()),
                       entry.at("line").get<unsigned>(), entry.at("phase").get<unsigned>(),
                       entry.at("hop_distance").get<unsigned>(), std::nullopt};
      if (!entry.at("next_hop").is_null())
        node.next_hop = from_decimal(entry.at("next_hop").get<std::string>());
      design.nodes.push_back(std::move(node));
    }
    for (const auto& entry : doc.at("pairs"))
      design.pairs.push_back(NodePair{from_decimal(entry.at(0).get<std::string>()),
                                      from_decimal(entry.at(1).get<std::string>())});
    return design;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("design JSON has unexpected shape: ") + e.what());
  }
}

inline std::string export_dot(const NetworkDesign& design) {
  std::string out = "digraph network {\n";
  for (const NetworkNode& node : design.nodes) {
    out += "  \"" + to_decimal(node.address) + "\"";
    out += node.address == 0 ? " [label=\"0\", shape=doublecircle];\n" : ";\n";
  }
  for (const NetworkNode& node : design.nodes) {
    if (!node.next_hop) continue;
    out += "  \"" + to_decimal(node.address) + "\" -> \"" + to_decimal(*node.next_hop) + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ivtnet
