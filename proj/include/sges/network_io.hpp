#pragma once

#include <string>
#include <vector>

#include "sges/bayesnet.hpp"

namespace sges {

/// A network together with its variable names (index order).
struct NamedNetwork {
  DiscreteBayesNet network;
  std::vector<std::string> names;
};

/// X0, X1, ...
std::vector<std::string> default_names(int n);

/// JSON document:
///   variables: [{name, cardinality}, ...]      (index order)
///   edges:     [[parent, child], ...]          (sorted by index)
///   cpts:      [{variable, parents, table}, ...] where table is a list of
///              rows, one per parent configuration (sorted parents, lowest
///              index varying slowest), each a probability vector.
/// Doubles are written in shortest round-trip form, so write(read(text))
/// reproduces text byte for byte.
std::string network_to_json(const NamedNetwork& named);
/// Throws std::invalid_argument on schema violations.
NamedNetwork network_from_json(const std::string& text);

}  // namespace sges
