#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diracwm/matrix.hpp"
#include "diracwm/spinor.hpp"
#include "diracwm/wmod.hpp"

namespace diracwm {

enum class Direction { UbarCohomology, UCohomology, UHomology, UbarHomology };

std::string to_string(Direction d);
/// Accepts "ubar-cohomology", "u-cohomology", "u-homology", "ubar-homology".
Direction parse_direction(const std::string& s);

/// Basis vector of a Chevalley-Eilenberg block: M-basis vector `inner` at
/// weight `module_weight`, tensored with the wedge of the nilradical
/// positions in `roots` (increasing).
struct ChainLabel {
  std::vector<std::size_t> roots;
  std::size_t inner;
  Weight module_weight;
};

/// Weight-lambda part of the Chevalley-Eilenberg complex of M relative to u
/// or ubar. Cochains Hom(wedge^p a, M) are stored by their values on wedges of
/// the chosen basis of a, chains as M (x) wedge^p a; lambda is the h-weight.
/// differential[p] maps degree p to degree p + 1 (cochains) or p - 1 (chains).
struct BlockComplex {
  Weight weight;
  Direction direction;
  std::vector<std::vector<ChainLabel>> basis;  // by degree 0..dim u
  std::vector<Matrix> differential;            // by source degree
  bool cochain() const;
  std::size_t top() const { return basis.size() - 1; }
};

BlockComplex ce_complex(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam, Direction d);

/// Per-degree dimensions H^p or H_p, index p.
std::vector<std::size_t> lie_cohomology(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam,
                                        Direction d);
std::vector<std::size_t> homology_dims(const BlockComplex& c);

/// (M (x) S)_lambda with basis ordered by spin basis element, then M basis.
struct DiracBlock {
  Weight weight;
  std::vector<std::size_t> spin_index;  // per basis vector
  std::vector<std::size_t> inner;       // M-basis index per basis vector
  std::vector<int> parity;
  Matrix C, Cminus, D;
};

DiracBlock dirac_block(const WeightModule& m, const SpinModule& s, const Weight& lam);
DiracBlock dirac_block(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam);

struct DiracCohomology {
  std::size_t plus = 0, minus = 0;
  Matrix plus_basis, minus_basis;  // representatives as columns in the block basis
};

DiracCohomology dirac_cohomology(const DiracBlock& b);
DiracCohomology dirac_cohomology(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam);

/// Compares C with d of the ubar-cohomology complex and C^- with -2 times the
/// boundary of the u-homology complex at lambda - rho(ubar), entrywise under
/// m (x) u_T <-> (phi: u*_T -> m).
struct CorrespondenceReport {
  bool ok = true;
  std::string first_mismatch;
};

CorrespondenceReport correspondence_check(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam);

}  // namespace diracwm
