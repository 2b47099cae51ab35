#include <stdexcept>

#include "diracwm/wmod.hpp"

namespace diracwm {

SimpleHW::SimpleHW(std::shared_ptr<const LieAlgebra> g, Weight lam)
    : WeightModule(g), lam_(lam), verma_(verma(g, lam)) {}

std::string SimpleHW::describe() const { return "L" + lam_.str(); }

const SimpleHW::GramData& SimpleHW::gram_data(const Weight& mu) const {
  {
    std::shared_lock lock(gram_mu_);
    auto it = grams_.find(mu);
    if (it != grams_.end()) return it->second;
  }
  const auto& pd = verma_->parabolic();
  const auto& u = pd.nilradical_roots();
  auto basis = verma_->block_basis(mu);
  const std::size_t n = basis.size();
  GramData gd;
  gd.gram = Matrix(n, n);
  // Row a is the functional w -> coefficient of v in tau(f^a) w, where
  // tau(f^a) applies e_{u_0}^{a_0} first.
  for (std::size_t r = 0; r < n; ++r) {
    Matrix row = Matrix::identity(n);
    Weight cur = mu;
    for (std::size_t t = 0; t < u.size(); ++t)
      for (int c = 0; c < basis[r].exps[t]; ++c) {
        const std::size_t e = g_->e_index(u[t]);
        row = verma_->block_action(e, cur) * row;
        cur += g_->weight(e);
      }
    if (cur != lam_ || row.rows() != 1) throw std::logic_error("shapovalov: word does not return to the top");
    for (std::size_t c = 0; c < n; ++c) gd.gram(r, c) = row(0, c);
  }
  if (n > 0) gd.pivots = echelon(gd.gram).pivots;
  std::unique_lock lock(gram_mu_);
  return grams_.emplace(mu, std::move(gd)).first->second;
}

Matrix SimpleHW::gram(const Weight& mu) const { return gram_data(mu).gram; }

std::size_t SimpleHW::compute_dim(const Weight& mu) const { return gram_data(mu).pivots.size(); }

Matrix SimpleHW::compute_action(std::size_t x, const Weight& mu) const {
  // Images of the chosen basis vectors in M(lam), expressed in the quotient
  // through the Gram matrix of the target block.
  const GramData& src = gram_data(mu);
  const GramData& tgt = gram_data(mu + g_->weight(x));
  Matrix img = select_columns(verma_->block_action(x, mu), src.pivots);
  auto sol = solve(select_columns(tgt.gram, tgt.pivots), tgt.gram * img);
  if (!sol) throw std::logic_error("simple quotient: action does not descend");
  return *sol;
}

Matrix shapovalov_gram(std::shared_ptr<const LieAlgebra> g, const Weight& lam, const Weight& mu) {
  SimpleHW l(std::move(g), lam);
  return l.gram(mu);
}

}  // namespace diracwm
