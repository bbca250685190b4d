#include <map>
#include <stdexcept>

#include <json.hpp>

#include "sges/network_io.hpp"

namespace sges {

using nlohmann::json;

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

std::string network_to_json(const NamedNetwork& named) {
  const DiscreteBayesNet& bn = named.network;
  const auto& names = named.names;
  if (static_cast<int>(names.size()) != bn.node_count())
    throw std::invalid_argument("network_to_json: one name per variable required");

  json doc;
  doc["variables"] = json::array();
  for (NodeId v = 0; v < bn.node_count(); ++v)
    doc["variables"].push_back({{"name", names[v]}, {"cardinality", bn.cardinality(v)}});

  doc["edges"] = json::array();
  for (const auto& [from, to] : bn.dag().edges())
    doc["edges"].push_back(json::array({names[from], names[to]}));

  doc["cpts"] = json::array();
  for (NodeId v = 0; v < bn.node_count(); ++v) {
    json parents = json::array();
    for (NodeId p : bn.dag().parents(v)) parents.push_back(names[p]);
    json table = json::array();
    for (std::size_t row = 0; row < bn.row_count(v); ++row) {
      json probs = json::array();
      for (int s = 0; s < bn.cardinality(v); ++s) probs.push_back(bn.probability(v, row, s));
      table.push_back(std::move(probs));
    }
    doc["cpts"].push_back({{"variable", names[v]}, {"parents", parents}, {"table", table}});
  }
  return doc.dump(2) + "\n";
}

NamedNetwork network_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("network json: ") + e.what());
  }
  try {
    std::vector<std::string> names;
    std::vector<int> cards;
    std::map<std::string, NodeId> index;
    for (const auto& var : doc.at("variables")) {
      const auto name = var.at("name").get<std::string>();
      if (index.count(name)) throw std::invalid_argument("duplicate variable " + name);
      index[name] = static_cast<NodeId>(names.size());
      names.push_back(name);
      cards.push_back(var.at("cardinality").get<int>());
    }
    auto lookup = [&](const json& name) {
      const auto it = index.find(name.get<std::string>());
      if (it == index.end())
        throw std::invalid_argument("unknown variable " + name.get<std::string>());
      return it->second;
    };

    Dag dag(static_cast<int>(names.size()));
    for (const auto& edge : doc.at("edges")) {
      if (!edge.is_array() || edge.size() != 2)
        throw std::invalid_argument("edge must be a [parent, child] pair");
      dag.add_edge(lookup(edge[0]), lookup(edge[1]));
    }

    std::vector<std::vector<double>> cpts(names.size());
    std::vector<bool> seen(names.size(), false);
    for (const auto& entry : doc.at("cpts")) {
      const NodeId v = lookup(entry.at("variable"));
      if (seen[v]) throw std::invalid_argument("duplicate cpt for " + names[v]);
      seen[v] = true;
      NodeSet listed;
      for (const auto& p : entry.at("parents")) listed.insert(lookup(p));
      if (listed != dag.parents(v))
        throw std::invalid_argument("cpt parents of " + names[v] + " disagree with edges");
      for (const auto& row : entry.at("table")) {
        if (static_cast<int>(row.size()) != cards[v])
          throw std::invalid_argument("cpt row width mismatch for " + names[v]);
        for (const auto& p : row) cpts[v].push_back(p.get<double>());
      }
    }
    for (std::size_t v = 0; v < names.size(); ++v)
      if (!seen[v]) throw std::invalid_argument("missing cpt for " + names[v]);

    return {DiscreteBayesNet(std::move(dag), std::move(cards), std::move(cpts)),
            std::move(names)};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("network json: ") + e.what());
  }
}

}  // namespace sges
