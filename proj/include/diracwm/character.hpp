#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diracwm/rootdata.hpp"

namespace diracwm {

/// Integer-valued function on weights. `support`, when present, is a
/// certified finite set outside which the evaluator is zero.
struct VirtualCharacter {
  std::function<long long(const Weight&)> eval;
  std::optional<std::vector<Weight>> support;
  std::string provenance;

  long long operator()(const Weight& w) const { return eval ? eval(w) : 0; }

  /// Finitely supported character given by explicit values; zeros dropped.
  static VirtualCharacter from_values(const std::map<Weight, long long>& values, std::string provenance = "explicit");
  static VirtualCharacter zero(std::string provenance = "explicit");
};

}  // namespace diracwm
