#include "diracwm/spinor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace diracwm {

namespace {

// All subsets of {0..n-1} as increasing sequences, in lexicographic order.
void subsets(std::size_t n, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  out.push_back(cur);
  std::size_t start = cur.empty() ? 0 : cur.back() + 1;
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SpinBasisElement> spin_basis(const ParabolicDatum& pd) {
  const auto& rd = pd.root_datum();
  const auto& u = pd.nilradical_roots();
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> cur;
  subsets(u.size(), cur, all);
  std::vector<SpinBasisElement> out;
  for (auto& t : all) {
    Weight w = pd.rho_ubar();
    for (auto i : t) w += rd.root_weight(u[i]);
    int parity = static_cast<int>(t.size() % 2);
    out.push_back({std::move(t), std::move(w), parity});
  }
  return out;
}

SpinModule::SpinModule(std::shared_ptr<const LieAlgebra> g, const ParabolicDatum& pd)
    : g_(std::move(g)), pd_(pd), basis_(spin_basis(pd)) {
  const auto& u = pd_.nilradical_roots();
  u_pos_.assign(g_->num_positive(), -1);
  for (std::size_t i = 0; i < u.size(); ++i) u_pos_[u[i]] = static_cast<int>(i);
  cl_.resize(g_->dim());
  const std::size_t n = basis_.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::size_t p = u[i];
    Matrix e(n, n), f(n, n);
    const Rational c2 = 2 * g_->pairing_constant(p);
    for (std::size_t col = 0; col < n; ++col) {
      const auto& t = basis_[col].roots;
      auto pos = std::lower_bound(t.begin(), t.end(), i);
      int sign = ((pos - t.begin()) % 2) ? -1 : 1;
      std::vector<std::size_t> s = t;
      if (pos != t.end() && *pos == i) {
        s.erase(s.begin() + (pos - t.begin()));
        f(index_of(s), col) = c2 * sign;
      } else {
        s.insert(s.begin() + (pos - t.begin()), i);
        e(index_of(s), col) = sign;
      }
    }
    cl_[g_->e_index(p)] = std::move(e);
    cl_[g_->f_index(p)] = std::move(f);
  }
}

std::size_t SpinModule::index_of(const std::vector<std::size_t>& roots) const {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k].roots == roots) return k;
  throw std::invalid_argument("not a spin basis monomial");
}

bool SpinModule::in_s(std::size_t idx) const {
  if (g_->kind(idx) == BasisKind::H) return false;
  return u_pos_[g_->slot(idx)] >= 0;
}

const Matrix& SpinModule::clifford(std::size_t idx) const {
  if (!in_s(idx)) throw std::invalid_argument("Clifford action of " + g_->label(idx) + ": not in s");
  return cl_[idx];
}

Matrix SpinModule::clifford(const LieElement& x) const {
  Matrix m(dim(), dim());
  for (std::size_t k = 0; k < g_->dim(); ++k)
    if (x.c[k] != 0) m += clifford(k) * x.c[k];
  return m;
}

std::vector<Rational> SpinModule::clifford_act(std::size_t idx, const std::vector<Rational>& v) const {
  const Matrix& m = clifford(idx);
  std::vector<Rational> out(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      if (m(r, c) != 0) out[r] += m(r, c) * v[c];
  return out;
}

std::pair<VirtualCharacter, VirtualCharacter> spin_character(const ParabolicDatum& pd) {
  std::map<Weight, long long> plus, minus;
  for (const auto& b : spin_basis(pd)) ++(b.parity ? minus : plus)[b.weight];
  return {VirtualCharacter::from_values(plus, "spin+"), VirtualCharacter::from_values(minus, "spin-")};
}

}  // namespace diracwm
