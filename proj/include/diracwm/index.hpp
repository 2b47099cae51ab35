#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diracwm/character.hpp"
#include "diracwm/cohomology.hpp"
#include "diracwm/wmod.hpp"

namespace diracwm {

/// (-1)^{dim u}: the sign relating the ubar-side and u-side Euler characteristics.
int index_sign(const ParabolicDatum& pd);

/// Highest weight of Verma modules, simple highest weight modules and their duals.
std::optional<Weight> highest_weight_of(const WeightModule& m);

/// M_p(V) with V cuspidal over l (or its dual): every root vector of l acts bijectively.
bool induced_from_cuspidal(const WeightModule& m);

/// I_{g,l}(M)(lam) = sum_T (-1)^{|T|} dim M_{lam - rho(ubar) - sum T}.
/// Support is certified for highest weight modules over the Borel (inside
/// W(lam + rho)) and for modules with no index by constant block dimensions.
VirtualCharacter spin_index(ModulePtr m, const ParabolicDatum& pd);

/// dim H^+_D - dim H^-_D per weight; PreconditionError without infinitesimal character.
VirtualCharacter dirac_index(ModulePtr m, const ParabolicDatum& pd);

/// sum_lam A(lam) B(lam) over a certified support; PreconditionError if neither has one.
long long pair_virtual(const VirtualCharacter& a, const VirtualCharacter& b);

/// I_{l,h}(X)(lam) = sum_{T in Delta+(l)} (-1)^{|T|} X(lam + rho_l - sum T).
VirtualCharacter levi_index(const VirtualCharacter& x, const ParabolicDatum& pd);

struct IdentityCheck {
  char id;
  std::string name;
  bool applicable = true;
  bool ok = true;
  std::string detail;  // first mismatch, or why the check does not apply
};

struct IndexReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

/// Identities (a)-(f) on the listed weights:
///  (a) I = Euler char of H^*(ubar, M) shifted by rho(ubar);
///  (b) I = (-1)^{dim u} Euler char of H^*(u, M) shifted by rho(u);
///  (c) Dirac index = I, for M with infinitesimal character;
///  (d) I_{g,h}(M) = I_{l,h}(I_{g,l}(M));
///  (e) I(M_p(V)) = (-1)^{dim u} ch V shifted by rho(u), when M is induced from pd;
///  (f) I_{g,h}(M^v) = I_{g,h}(M).
IndexReport verify_index_identities(ModulePtr m, const ParabolicDatum& pd, const std::vector<Weight>& weights);

}  // namespace diracwm
