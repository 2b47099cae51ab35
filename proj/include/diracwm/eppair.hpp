#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diracwm/index.hpp"
#include "diracwm/wmod.hpp"

namespace diracwm {

enum class EPMethod { InducedCollapse, VermaDecomposition, DualFlip, TheoremBased };

std::string to_string(EPMethod m);

/// Euler-Poincare pairing sum_i (-1)^i dim Ext^i_{g,h}(M, N). TheoremBased
/// means some step used EP = [I(M), I(N)] instead of a direct computation.
struct EPResult {
  long long value = 0;
  EPMethod method = EPMethod::InducedCollapse;
  std::vector<std::string> audit;
};

/// EP(M_p(V), N) = sum_i (-1)^i EP_{l,h}(V, H^i(u, N)). For l = h the inner
/// pairing is dim H^i(u, N)_lam; otherwise it is the level-l index pairing.
/// `window` bounds the zero check that certifies a cuspidal V has no index.
EPResult ep_induced(const ParabolicDatum& pd, ModulePtr v, ModulePtr n, const Window& window);

/// [L(lam)] = sum c_mu [M(mu)] over mu in W.lam below lam, ordered by height
/// of lam - mu; checked against the characters on every window weight.
std::vector<std::pair<Weight, long long>> verma_coefficients(std::shared_ptr<const LieAlgebra> g, const Weight& lam,
                                                             const Window& window);

EPResult ep_pair(ModulePtr m, ModulePtr n, const Window& window);

struct Main2Report {
  EPResult ep;
  bool index_certified = false;
  long long index_value = 0;
  bool compared = false;  // false when the EP side is theorem-based or the index side is uncertified
  bool ok = true;
  std::string status;
  bool corollary_applicable = false;
  bool corollary_ok = true;
};

/// Compares ep_pair(M, N) with [I_{g,h}(M), I_{g,h}(N)], plus the vanishing
/// EP(M, N) = EP(N, M) = 0 when M is simple and not highest weight.
Main2Report verify_main2(ModulePtr m, ModulePtr n, const Window& window);

}  // namespace diracwm
