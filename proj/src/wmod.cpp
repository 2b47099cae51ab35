#include "diracwm/wmod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diracwm {

std::size_t WeightModule::block_dim(const Weight& lam) const {
  {
    std::shared_lock lock(mu_);
    auto it = dims_.find(lam);
    if (it != dims_.end()) return it->second;
  }
  std::size_t d = in_coset(lam) ? compute_dim(lam) : 0;
  std::unique_lock lock(mu_);
  dims_.emplace(lam, d);
  return d;
}

const Matrix& WeightModule::block_action(std::size_t x, const Weight& lam) const {
  auto key = std::make_pair(x, lam);
  {
    std::shared_lock lock(mu_);
    auto it = acts_.find(key);
    if (it != acts_.end()) return it->second;
  }
  if (!defines(x)) throw std::invalid_argument(describe() + ": " + g_->label(x) + " does not act");
  const Weight target = lam + g_->weight(x);
  const std::size_t n = block_dim(lam), m = block_dim(target);
  Matrix a(m, n);
  if (g_->kind(x) == BasisKind::H) {
    for (std::size_t i = 0; i < n; ++i) a(i, i) = lam[g_->slot(x)];
  } else if (n > 0 && m > 0) {
    a = compute_action(x, lam);
    if (a.rows() != m || a.cols() != n) throw std::logic_error(describe() + ": action block has wrong shape");
  }
  std::unique_lock lock(mu_);
  return acts_.emplace(std::move(key), std::move(a)).first->second;
}

Matrix WeightModule::block_action(const LieElement& x, const Weight& lam) const {
  std::optional<Weight> wt;
  Matrix out;
  for (std::size_t k = 0; k < g_->dim(); ++k) {
    if (x.c[k] == 0) continue;
    if (!wt) {
      wt = g_->weight(k);
      out = Matrix(block_dim(lam + *wt), block_dim(lam));
    } else if (*wt != g_->weight(k)) {
      throw std::invalid_argument("block_action: element is not homogeneous");
    }
    out += block_action(k, lam) * x.c[k];
  }
  if (!wt) throw std::invalid_argument("block_action: zero element has no weight");
  return out;
}

std::vector<std::string> WeightModule::block_labels(const Weight& lam) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < block_dim(lam); ++i) out.push_back("v" + std::to_string(i));
  return out;
}

bool WeightModule::in_coset(const Weight& lam) const {
  return lam.rank() == root_datum().rank() && root_datum().in_root_lattice(lam - coset_anchor());
}

CharacterModule::CharacterModule(std::shared_ptr<const LieAlgebra> g, Weight lam, std::vector<int> levi)
    : WeightModule(std::move(g)), lam_(std::move(lam)), levi_(std::move(levi)) {
  if (lam_.rank() != g_->rank()) throw std::invalid_argument("weight rank does not match the algebra");
  for (int i : levi_)
    if (lam_[i] != 0)
      throw PreconditionError("C_lambda over the Levi needs lambda(h_" + std::to_string(i + 1) + ") = 0, got " +
                              lam_.str());
}

std::string CharacterModule::describe() const { return "C" + lam_.str(); }

bool CharacterModule::defines(std::size_t x) const {
  if (g_->kind(x) == BasisKind::H) return true;
  const auto& k = root_datum().positive_roots()[g_->slot(x)];
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] != 0 && std::find(levi_.begin(), levi_.end(), static_cast<int>(i)) == levi_.end()) return false;
  return true;
}

Matrix CharacterModule::compute_action(std::size_t, const Weight&) const {
  return Matrix(1, 1);  // unreachable: root vectors change the weight
}

CuspidalSL2::CuspidalSL2(std::shared_ptr<const LieAlgebra> g, Rational mu0, Rational mu1, std::size_t root,
                         std::vector<Rational> center)
    : WeightModule(std::move(g)), mu0_(std::move(mu0)), mu1_(std::move(mu1)), root_(root) {
  if (is_integer(mu0_) || is_integer(mu1_))
    throw PreconditionError("F_mu is cuspidal only for mu0, mu1 not in Z; got (" + mu0_.get_str() + ", " +
                            mu1_.get_str() + ")");
  const std::size_t r = g_->rank();
  if (root_ >= r) throw std::invalid_argument("cuspidal_sl2: root index out of range");
  if (center.size() != r - 1) throw std::invalid_argument("cuspidal_sl2: center needs rank - 1 coordinates");
  anchor_ = Weight::zero(r);
  for (std::size_t i = 0, c = 0; i < r; ++i) anchor_[i] = i == root_ ? mu0_ - mu1_ : center[c++];
}

std::string CuspidalSL2::describe() const {
  std::ostringstream os;
  os << "F(" << mu0_.get_str() << ", " << mu1_.get_str() << ")";
  if (g_->rank() > 1) os << "@a" << root_ + 1 << anchor_.str();
  return os.str();
}

bool CuspidalSL2::defines(std::size_t x) const {
  if (g_->kind(x) == BasisKind::H) return true;
  return g_->slot(x) == root_;
}

std::optional<long> CuspidalSL2::level(const Weight& lam) const {
  auto k = root_datum().root_coords(lam - anchor_);
  for (std::size_t i = 0; i < k.size(); ++i)
    if (i != root_ && k[i] != 0) return std::nullopt;
  if (!is_integer(k[root_])) return std::nullopt;
  return k[root_].get_num().get_si();
}

Matrix CuspidalSL2::compute_action(std::size_t x, const Weight& lam) const {
  const long k = *level(lam);
  Matrix a(1, 1);
  a(0, 0) = g_->kind(x) == BasisKind::E ? Rational(mu1_ - k) : Rational(mu0_ + k);
  return a;
}

DualModule::DualModule(ModulePtr m) : WeightModule(m->algebra_ptr()), m_(std::move(m)) {}

std::string DualModule::describe() const { return "dual(" + m_->describe() + ")"; }

bool DualModule::defines(std::size_t x) const {
  if (g_->kind(x) == BasisKind::H) return m_->defines(x);
  std::size_t p = g_->slot(x);
  return m_->defines(g_->kind(x) == BasisKind::E ? g_->f_index(p) : g_->e_index(p));
}

Matrix DualModule::compute_action(std::size_t x, const Weight& lam) const {
  std::size_t p = g_->slot(x);
  std::size_t t = g_->kind(x) == BasisKind::E ? g_->f_index(p) : g_->e_index(p);
  return m_->block_action(t, lam + g_->weight(x)).transpose();
}

std::size_t root_vector_index(const LieAlgebra& g, const std::vector<int>& root) {
  const auto& rd = g.root_datum();
  int p = rd.positive_index(root);
  if (p >= 0) return g.e_index(p);
  std::vector<int> neg(root);
  for (int& k : neg) k = -k;
  p = rd.positive_index(neg);
  if (p >= 0) return g.f_index(p);
  throw std::invalid_argument("not a root");
}

void check_commuting(const RootDatum& rd, const std::vector<std::vector<int>>& gammas) {
  auto is_root = [&](std::vector<int> k) {
    if (rd.positive_index(k) >= 0) return true;
    for (int& v : k) v = -v;
    return rd.positive_index(k) >= 0;
  };
  for (const auto& g : gammas) {
    if (g.size() != rd.rank() || !is_root(g)) throw PreconditionError("twist: gamma is not a root");
  }
  for (std::size_t i = 0; i < gammas.size(); ++i)
    for (std::size_t j = i + 1; j < gammas.size(); ++j) {
      std::vector<int> s(rd.rank());
      bool zero = true;
      for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] = gammas[i][k] + gammas[j][k];
        zero = zero && s[k] == 0;
      }
      if (zero || is_root(s)) throw PreconditionError("twist: Gamma is not a commuting set");
    }
}

bool root_vectors_injective(const WeightModule& m, const std::vector<Weight>& weights) {
  const LieAlgebra& g = m.algebra();
  for (const auto& lam : weights) {
    if (m.block_dim(lam) == 0) continue;
    for (std::size_t x = 0; x < g.dim(); ++x) {
      if (g.kind(x) == BasisKind::H || !m.defines(x)) continue;
      if (rank(m.block_action(x, lam)) != m.block_dim(lam)) return false;
    }
  }
  return true;
}

}  // namespace diracwm
