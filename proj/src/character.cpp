#include "diracwm/character.hpp"

#include <memory>

namespace diracwm {

VirtualCharacter VirtualCharacter::from_values(const std::map<Weight, long long>& values, std::string provenance) {
  auto table = std::make_shared<std::map<Weight, long long>>();
  std::vector<Weight> supp;
  for (const auto& [w, v] : values)
    if (v != 0) {
      table->emplace(w, v);
      supp.push_back(w);
    }
  VirtualCharacter c;
  c.eval = [table](const Weight& w) {
    auto it = table->find(w);
    return it == table->end() ? 0LL : it->second;
  };
  c.support = std::move(supp);
  c.provenance = std::move(provenance);
  return c;
}

VirtualCharacter VirtualCharacter::zero(std::string provenance) { return from_values({}, std::move(provenance)); }

}  // namespace diracwm
