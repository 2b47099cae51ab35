#include <sstream>
#include <stdexcept>

#include "diracwm/wmod.hpp"

namespace diracwm {

TwistModule::TwistModule(ModulePtr m, std::vector<std::vector<int>> gammas, std::vector<Rational> xs)
    : WeightModule(m->algebra_ptr()), m_(std::move(m)), gammas_(std::move(gammas)), xs_(std::move(xs)) {
  if (gammas_.size() != xs_.size()) throw std::invalid_argument("twist: one exponent per root of Gamma");
  check_commuting(root_datum(), gammas_);
  for (const auto& gam : gammas_) {
    std::vector<int> neg(gam);
    for (int& k : neg) k = -k;
    gens_.push_back(root_vector_index(*g_, neg));
  }
  // Theta(h_i) = h_i + sum_k binom(x, k) (ad f)^k(h_i) f^{-k}; only k = 1
  // survives and (ad f)(h_i) is a multiple of f, leaving a scalar.
  shift_ = Weight::zero(g_->rank());
  for (std::size_t i = 0; i < g_->rank(); ++i)
    for (std::size_t j = 0; j < gens_.size(); ++j)
      for (const auto& t : theta_twist_element(*g_, gens_[j], xs_[j], g_->basis(g_->h_index(i)))) {
        if (t.inverse_power == 0) continue;
        if (t.inverse_power != 1) throw std::logic_error("twist: unexpected Cartan expansion");
        shift_[i] += t.coeff * t.ad_power.c[gens_[j]];
      }
}

bool TwistModule::is_cuspidal() const {
  if (!m_->is_cuspidal()) return false;
  return root_vectors_injective(*this, window_weights(root_datum(), {coset_anchor(), 6}, Weight::zero(g_->rank())));
}

std::string TwistModule::describe() const {
  std::ostringstream os;
  os << "twist(" << m_->describe();
  for (std::size_t j = 0; j < gammas_.size(); ++j) {
    os << "; " << xs_[j].get_str() << "*(";
    for (std::size_t k = 0; k < gammas_[j].size(); ++k) os << (k ? "," : "") << gammas_[j][k];
    os << ")";
  }
  os << ")";
  return os.str();
}

Matrix TwistModule::inverse_power(std::size_t i, int k, const Weight& mu) const {
  const std::size_t f = gens_[i];
  const Weight& wf = g_->weight(f);
  Matrix acc = Matrix::identity(m_->block_dim(mu));
  Weight cur = mu;
  for (int s = 0; s < k; ++s) {
    const Matrix& blk = m_->block_action(f, cur - wf);
    auto inv = inverse(blk);
    if (!inv || blk.rows() == 0)
      throw PreconditionError("twist: " + g_->label(f) + " is not bijective onto the block at " + cur.str());
    acc = *inv * acc;
    cur -= wf;
  }
  return acc;
}

void TwistModule::check_bijective(const Weight& mu) const {
  for (std::size_t f : gens_) {
    const Weight& wf = g_->weight(f);
    for (const Weight& src : {mu, mu - wf}) {
      const Matrix& blk = m_->block_action(f, src);
      if (blk.rows() == 0 && blk.cols() == 0) continue;
      if (!inverse(blk))
        throw PreconditionError("twist: " + g_->label(f) + " is not bijective at " + src.str());
    }
  }
}

Matrix TwistModule::compute_action(std::size_t x, const Weight& lam) const {
  struct Term {
    Rational c;
    LieElement a;
    std::vector<int> ks;
  };
  std::vector<Term> terms{{Rational(1), g_->basis(x), std::vector<int>(gens_.size(), 0)}};
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    std::vector<Term> next;
    for (const auto& t : terms)
      for (const auto& th : theta_twist_element(*g_, gens_[j], xs_[j], t.a)) {
        Term n{t.c * th.coeff, th.ad_power, t.ks};
        n.ks[j] = th.inverse_power;
        next.push_back(std::move(n));
      }
    terms = std::move(next);
  }
  const Weight old = lam - shift_;
  check_bijective(old);
  const Weight target = old + g_->weight(x);
  Matrix out(m_->block_dim(target), m_->block_dim(old));
  for (const auto& t : terms) {
    // f^{-k} acts first (the f_j commute), then the bracket part.
    Weight cur = old;
    Matrix acc = Matrix::identity(m_->block_dim(old));
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      if (t.ks[j] == 0) continue;
      acc = inverse_power(j, t.ks[j], cur) * acc;
      cur -= Rational(t.ks[j]) * g_->weight(gens_[j]);
    }
    out += m_->block_action(t.a, cur) * acc * t.c;
  }
  return out;
}

}  // namespace diracwm
