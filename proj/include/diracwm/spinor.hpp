#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "diracwm/character.hpp"
#include "diracwm/liestruct.hpp"
#include "diracwm/matrix.hpp"
#include "diracwm/rootdata.hpp"

namespace diracwm {

/// Wedge monomial e_{beta_1} ^ ... ^ e_{beta_p} of the u-roots in `roots`
/// (positions in pd.nilradical_roots(), increasing).
struct SpinBasisElement {
  std::vector<std::size_t> roots;
  Weight weight;  // rho(ubar) + sum of the roots
  int parity;     // |roots| mod 2, 0 is "+"
};

/// S = wedge(u) (x) C_{rho(ubar)} with the Clifford action of s = u + ubar.
/// e_beta acts by left wedge, f_beta by 2 (e_beta, f_beta) times contraction,
/// so that v w + w v = 2 (v, w) for the trace form.
class SpinModule {
 public:
  SpinModule(std::shared_ptr<const LieAlgebra> g, const ParabolicDatum& pd);

  const ParabolicDatum& parabolic() const { return pd_; }
  const LieAlgebra& algebra() const { return *g_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SpinBasisElement>& basis() const { return basis_; }
  std::size_t index_of(const std::vector<std::size_t>& roots) const;

  /// True if the basis element of g lies in s.
  bool in_s(std::size_t g_index) const;
  /// Clifford action of a basis element of s on the whole spin module.
  const Matrix& clifford(std::size_t g_index) const;
  /// Clifford action of an element of s; throws if it has components outside s.
  Matrix clifford(const LieElement& x) const;
  std::vector<Rational> clifford_act(std::size_t g_index, const std::vector<Rational>& v) const;

 private:
  std::shared_ptr<const LieAlgebra> g_;
  ParabolicDatum pd_;
  std::vector<SpinBasisElement> basis_;
  std::vector<int> u_pos_;  // g positive-root index -> position in nilradical_roots, or -1
  std::vector<Matrix> cl_;  // by g basis index; empty outside s
};

std::vector<SpinBasisElement> spin_basis(const ParabolicDatum& pd);

/// (ch S+, ch S-).
std::pair<VirtualCharacter, VirtualCharacter> spin_character(const ParabolicDatum& pd);

}  // namespace diracwm
