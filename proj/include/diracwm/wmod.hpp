#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "diracwm/liestruct.hpp"
#include "diracwm/matrix.hpp"
#include "diracwm/rootdata.hpp"

namespace diracwm {

enum class ModuleKind { Character, Induced, SimpleHW, Cuspidal, Dual, Twist };

/// Admissible weight module, accessed block by block. block_action(x, lam) is
/// the matrix of the basis element x from M_lam to M_{lam + wt x}; the h
/// action is the weight scalar. Blocks are memoized; the caches are safe for
/// concurrent readers and writers.
class WeightModule {
 public:
  explicit WeightModule(std::shared_ptr<const LieAlgebra> g) : g_(std::move(g)) {}
  virtual ~WeightModule() = default;
  WeightModule(const WeightModule&) = delete;
  WeightModule& operator=(const WeightModule&) = delete;

  const LieAlgebra& algebra() const { return *g_; }
  std::shared_ptr<const LieAlgebra> algebra_ptr() const { return g_; }
  const RootDatum& root_datum() const { return g_->root_datum(); }

  virtual ModuleKind kind() const = 0;
  virtual std::string describe() const = 0;
  virtual bool has_infinitesimal_character() const { return true; }
  /// Some weight nu with supp M in nu + Q.
  virtual Weight coset_anchor() const = 0;
  /// Whether basis element x acts (false outside l for modules over a Levi).
  virtual bool defines(std::size_t /*x*/) const { return true; }
  /// True for modules with all root vectors acting injectively.
  virtual bool is_cuspidal() const { return false; }

  std::size_t block_dim(const Weight& lam) const;
  const Matrix& block_action(std::size_t x, const Weight& lam) const;
  /// Homogeneous combination of basis elements.
  Matrix block_action(const LieElement& x, const Weight& lam) const;
  virtual std::vector<std::string> block_labels(const Weight& lam) const;

  bool in_coset(const Weight& lam) const;

 protected:
  virtual std::size_t compute_dim(const Weight& lam) const = 0;
  /// Only called for e/f basis elements with nonzero source and target blocks.
  virtual Matrix compute_action(std::size_t x, const Weight& lam) const = 0;

  std::shared_ptr<const LieAlgebra> g_;

 private:
  mutable std::shared_mutex mu_;
  mutable std::map<Weight, std::size_t> dims_;
  mutable std::map<std::pair<std::size_t, Weight>, Matrix> acts_;
};

using ModulePtr = std::shared_ptr<const WeightModule>;

/// One-dimensional C_lam over a Levi l on which [l, l] acts by zero.
class CharacterModule : public WeightModule {
 public:
  CharacterModule(std::shared_ptr<const LieAlgebra> g, Weight lam, std::vector<int> levi = {});
  ModuleKind kind() const override { return ModuleKind::Character; }
  std::string describe() const override;
  Weight coset_anchor() const override { return lam_; }
  bool defines(std::size_t x) const override;
  const Weight& weight() const { return lam_; }

 protected:
  std::size_t compute_dim(const Weight& lam) const override { return lam == lam_ ? 1 : 0; }
  Matrix compute_action(std::size_t x, const Weight& lam) const override;

 private:
  Weight lam_;
  std::vector<int> levi_;
};

/// The family F_mu = t^mu C[t0^{+-1}, t1^{+-1}] (degree 0 part) for the
/// sl(2)-triple of simple root `root`: v_k = t^{(mu0+k, mu1-k)},
///   e v_k = (mu1 - k) v_{k+1},  f v_k = (mu0 + k) v_{k-1},  h v_k = (mu0 - mu1 + 2k) v_k.
/// In rank 2 it is a module over l = h + sl(2)_root; the other fundamental
/// coordinate of v_0 is `center`.
class CuspidalSL2 : public WeightModule {
 public:
  CuspidalSL2(std::shared_ptr<const LieAlgebra> g, Rational mu0, Rational mu1, std::size_t root = 0,
              std::vector<Rational> center = {});
  ModuleKind kind() const override { return ModuleKind::Cuspidal; }
  std::string describe() const override;
  Weight coset_anchor() const override { return anchor_; }
  bool defines(std::size_t x) const override;
  bool is_cuspidal() const override { return g_->rank() == 1; }

  const Rational& mu0() const { return mu0_; }
  const Rational& mu1() const { return mu1_; }
  std::size_t root() const { return root_; }
  /// k with lam = anchor + k alpha_root, if any.
  std::optional<long> level(const Weight& lam) const;

 protected:
  std::size_t compute_dim(const Weight& lam) const override { return level(lam) ? 1 : 0; }
  Matrix compute_action(std::size_t x, const Weight& lam) const override;

 private:
  Rational mu0_, mu1_;
  std::size_t root_;
  Weight anchor_;
};

/// M_p(V) = U(g) (x)_{U(p)} V with u acting by zero on V. Basis of a block:
/// ubar PBW monomials f^a (exponents over pd.nilradical_roots(), read in that
/// order) times V basis vectors; ordered by a lexicographically, then by V index.
class InducedModule : public WeightModule {
 public:
  InducedModule(const ParabolicDatum& pd, ModulePtr inner);
  ModuleKind kind() const override { return ModuleKind::Induced; }
  std::string describe() const override;
  Weight coset_anchor() const override { return inner_->coset_anchor(); }
  bool has_infinitesimal_character() const override { return inner_->has_infinitesimal_character(); }

  const ParabolicDatum& parabolic() const { return pd_; }
  const ModulePtr& inner() const { return inner_; }
  /// Verma module M(lam) from the Borel.
  bool is_verma() const { return pd_.is_borel(); }

  struct Label {
    std::vector<int> exps;
    std::size_t inner_index;
    friend bool operator<(const Label& a, const Label& b) {
      return a.exps != b.exps ? a.exps < b.exps : a.inner_index < b.inner_index;
    }
    friend bool operator==(const Label& a, const Label& b) = default;
  };
  std::vector<Label> block_basis(const Weight& lam) const;
  std::vector<std::string> block_labels(const Weight& lam) const override;

 protected:
  std::size_t compute_dim(const Weight& lam) const override { return block_basis(lam).size(); }
  Matrix compute_action(std::size_t x, const Weight& lam) const override;

 private:
  using Vec = std::map<Label, Rational>;
  Vec apply(std::size_t x, const Weight& lam, const Label& b) const;
  Vec apply(const LieElement& x, const Weight& lam, const Vec& v) const;
  Weight inner_weight(const Weight& lam, const std::vector<int>& exps) const;

  ParabolicDatum pd_;
  ModulePtr inner_;
  std::vector<int> u_pos_;  // positive root index -> position in u, or -1
  mutable std::shared_mutex memo_mu_;
  mutable std::map<std::tuple<std::size_t, Weight, Label>, Vec> memo_;
};

std::shared_ptr<const InducedModule> verma(std::shared_ptr<const LieAlgebra> g, const Weight& lam);
std::shared_ptr<const InducedModule> induce_parabolic(const ParabolicDatum& pd, ModulePtr inner);

/// L(lam) as M(lam) modulo the radical of the contravariant form. The basis of
/// L(lam)_mu is the set of pivot columns of the Gram matrix at mu.
class SimpleHW : public WeightModule {
 public:
  SimpleHW(std::shared_ptr<const LieAlgebra> g, Weight lam);
  ModuleKind kind() const override { return ModuleKind::SimpleHW; }
  std::string describe() const override;
  Weight coset_anchor() const override { return lam_; }

  const Weight& highest_weight() const { return lam_; }
  const std::shared_ptr<const InducedModule>& verma_module() const { return verma_; }
  Matrix gram(const Weight& mu) const;

 protected:
  std::size_t compute_dim(const Weight& lam) const override;
  Matrix compute_action(std::size_t x, const Weight& lam) const override;

 private:
  struct GramData {
    Matrix gram;
    std::vector<std::size_t> pivots;
  };
  const GramData& gram_data(const Weight& mu) const;

  Weight lam_;
  std::shared_ptr<const InducedModule> verma_;
  mutable std::shared_mutex gram_mu_;
  mutable std::map<Weight, GramData> grams_;
};

/// Contravariant form on M(lam)_mu: <f^a v, f^b v> = coefficient of v in tau(f^a) f^b v.
/// Empty unless lam - mu is a sum of positive roots.
Matrix shapovalov_gram(std::shared_ptr<const LieAlgebra> g, const Weight& lam, const Weight& mu);

/// Restricted dual: (M^v)_mu = (M_mu)^*, (x phi)(v) = phi(tau(x) v).
class DualModule : public WeightModule {
 public:
  explicit DualModule(ModulePtr m);
  ModuleKind kind() const override { return ModuleKind::Dual; }
  std::string describe() const override;
  Weight coset_anchor() const override { return m_->coset_anchor(); }
  bool has_infinitesimal_character() const override { return m_->has_infinitesimal_character(); }
  bool defines(std::size_t x) const override;
  bool is_cuspidal() const override { return m_->is_cuspidal(); }
  const ModulePtr& inner() const { return m_; }

 protected:
  std::size_t compute_dim(const Weight& lam) const override { return m_->block_dim(lam); }
  Matrix compute_action(std::size_t x, const Weight& lam) const override;

 private:
  ModulePtr m_;
};

/// Twist of M by Theta = prod_i f_i^{x_i} (.) f_i^{-x_i}, where f_i is the
/// root vector of weight -gamma_i. Same underlying blocks; the block at
/// lam + nu carries the old block at lam, nu = sum x_i gamma_i.
class TwistModule : public WeightModule {
 public:
  /// gammas are roots given by simple-root coordinates (possibly negative).
  TwistModule(ModulePtr m, std::vector<std::vector<int>> gammas, std::vector<Rational> xs);
  ModuleKind kind() const override { return ModuleKind::Twist; }
  std::string describe() const override;
  Weight coset_anchor() const override { return m_->coset_anchor() + shift_; }
  bool has_infinitesimal_character() const override { return m_->has_infinitesimal_character(); }
  /// Inner module cuspidal and every root vector injective on a box of radius 6 about the anchor.
  bool is_cuspidal() const override;
  const ModulePtr& inner() const { return m_; }
  const Weight& shift() const { return shift_; }
  const std::vector<std::size_t>& generators() const { return gens_; }

 protected:
  std::size_t compute_dim(const Weight& lam) const override { return m_->block_dim(lam - shift_); }
  Matrix compute_action(std::size_t x, const Weight& lam) const override;

 private:
  /// Matrix of f_i^{-k} from M_mu to M_{mu - k wt f_i}.
  Matrix inverse_power(std::size_t i, int k, const Weight& mu) const;
  void check_bijective(const Weight& mu) const;

  ModulePtr m_;
  std::vector<std::vector<int>> gammas_;
  std::vector<Rational> xs_;
  std::vector<std::size_t> gens_;
  Weight shift_;
};

/// Basis index of the root vector of weight `root` (simple-root coordinates, nonzero).
std::size_t root_vector_index(const LieAlgebra& g, const std::vector<int>& root);

/// Throws PreconditionError unless alpha + beta is neither a root nor zero for all pairs.
void check_commuting(const RootDatum& rd, const std::vector<std::vector<int>>& gammas);

/// Whether every root vector acts injectively out of each listed block.
bool root_vectors_injective(const WeightModule& m, const std::vector<Weight>& weights);

}  // namespace diracwm
