#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "diracwm/wmod.hpp"

namespace diracwm {

InducedModule::InducedModule(const ParabolicDatum& pd, ModulePtr inner)
    : WeightModule(inner->algebra_ptr()), pd_(pd), inner_(std::move(inner)) {
  if (&pd_.root_datum() != &root_datum()) throw std::invalid_argument("induced: incompatible root data");
  u_pos_.assign(g_->num_positive(), -1);
  const auto& u = pd_.nilradical_roots();
  for (std::size_t t = 0; t < u.size(); ++t) u_pos_[u[t]] = static_cast<int>(t);
  for (std::size_t i = 0; i < g_->rank(); ++i)
    if (!inner_->defines(g_->h_index(i))) throw std::invalid_argument("induced: inner module is not h-semisimple");
  for (auto p : pd_.levi_roots())
    if (!inner_->defines(g_->e_index(p)) || !inner_->defines(g_->f_index(p)))
      throw std::invalid_argument("induced: inner module is not an l-module");
}

std::string InducedModule::describe() const {
  if (is_verma()) return "M" + inner_->coset_anchor().str();
  std::ostringstream os;
  os << "M_p{";
  for (std::size_t i = 0; i < pd_.levi().size(); ++i) os << (i ? "," : "") << pd_.levi()[i] + 1;
  os << "}(" << inner_->describe() << ")";
  return os.str();
}

Weight InducedModule::inner_weight(const Weight& lam, const std::vector<int>& exps) const {
  Weight w = lam;
  const auto& u = pd_.nilradical_roots();
  for (std::size_t t = 0; t < exps.size(); ++t)
    if (exps[t]) w += Rational(exps[t]) * root_datum().root_weight(u[t]);
  return w;
}

std::vector<InducedModule::Label> InducedModule::block_basis(const Weight& lam) const {
  std::vector<Label> out;
  if (!in_coset(lam)) return out;
  const auto& rd = root_datum();
  const auto& u = pd_.nilradical_roots();
  // The non-Levi coordinates of sum a_t beta_t must equal those of anchor - lam.
  auto diff = rd.root_coords(inner_->coset_anchor() - lam);
  std::vector<std::size_t> outer;
  std::vector<long> target;
  for (std::size_t i = 0; i < rd.rank(); ++i)
    if (!pd_.in_levi(i)) {
      if (diff[i] < 0) return out;
      outer.push_back(i);
      target.push_back(diff[i].get_num().get_si());
    }
  std::vector<int> a(u.size(), 0);
  auto rec = [&](auto&& self, std::size_t t, std::vector<long> rem) -> void {
    if (t == u.size()) {
      for (long r : rem)
        if (r != 0) return;
      Weight vw = inner_weight(lam, a);
      std::size_t n = inner_->block_dim(vw);
      for (std::size_t j = 0; j < n; ++j) out.push_back({a, j});
      return;
    }
    // Every u-root has a positive non-Levi coordinate, so the loop ends.
    const auto& beta = rd.positive_roots()[u[t]];
    for (int c = 0;; ++c) {
      if (std::any_of(rem.begin(), rem.end(), [](long r) { return r < 0; })) break;
      a[t] = c;
      self(self, t + 1, rem);
      for (std::size_t q = 0; q < outer.size(); ++q) rem[q] -= beta[outer[q]];
    }
    a[t] = 0;
  };
  rec(rec, 0, target);
  return out;
}

std::vector<std::string> InducedModule::block_labels(const Weight& lam) const {
  std::vector<std::string> out;
  for (const auto& l : block_basis(lam)) {
    std::ostringstream os;
    os << "f(";
    for (std::size_t t = 0; t < l.exps.size(); ++t) os << (t ? "," : "") << l.exps[t];
    os << ")v" << l.inner_index;
    out.push_back(os.str());
  }
  return out;
}

InducedModule::Vec InducedModule::apply(const LieElement& x, const Weight& lam, const Vec& v) const {
  Vec out;
  for (std::size_t k = 0; k < x.c.size(); ++k) {
    if (x.c[k] == 0) continue;
    for (const auto& [b, c] : v) {
      for (const auto& [b2, c2] : apply(k, lam, b)) {
        auto& slot = out[b2];
        slot += x.c[k] * c * c2;
        if (slot == 0) out.erase(b2);
      }
    }
  }
  return out;
}

InducedModule::Vec InducedModule::apply(std::size_t x, const Weight& lam, const Label& b) const {
  auto key = std::make_tuple(x, lam, b);
  {
    std::shared_lock lock(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const auto& u = pd_.nilradical_roots();
  std::size_t k = 0;
  while (k < b.exps.size() && b.exps[k] == 0) ++k;
  const bool top = k == b.exps.size();
  const BasisKind kind = g_->kind(x);
  const int upos = kind == BasisKind::H ? -1 : u_pos_[g_->slot(x)];
  Vec out;
  if (kind == BasisKind::F && upos >= 0 && (top || static_cast<std::size_t>(upos) <= k)) {
    // Already in PBW order: prepend the factor.
    Label nb = b;
    ++nb.exps[upos];
    out[nb] = 1;
  } else if (top) {
    if (!(kind == BasisKind::E && upos >= 0)) {
      // x in l acts on the inner module.
      const Matrix& a = inner_->block_action(x, lam);
      for (std::size_t r = 0; r < a.rows(); ++r)
        if (a(r, b.inner_index) != 0) out[Label{b.exps, r}] = a(r, b.inner_index);
    }
  } else {
    // x f_k m' = f_k (x m') + [x, f_k] m'.
    const std::size_t fk = g_->f_index(u[k]);
    Label rest = b;
    --rest.exps[k];
    const Weight lam_rest = lam - g_->weight(fk);
    Vec xm = apply(x, lam_rest, rest);
    out = apply(g_->basis(fk), lam_rest + g_->weight(x), xm);
    const LieElement& br = g_->bracket_basis(x, fk);
    if (!br.is_zero()) {
      for (const auto& [b2, c2] : apply(br, lam_rest, Vec{{rest, Rational(1)}})) {
        auto& slot = out[b2];
        slot += c2;
        if (slot == 0) out.erase(b2);
      }
    }
  }
  std::unique_lock lock(memo_mu_);
  memo_.emplace(std::move(key), out);
  return out;
}

Matrix InducedModule::compute_action(std::size_t x, const Weight& lam) const {
  auto src = block_basis(lam);
  auto tgt = block_basis(lam + g_->weight(x));
  std::map<Label, std::size_t> row;
  for (std::size_t i = 0; i < tgt.size(); ++i) row.emplace(tgt[i], i);
  Matrix a(tgt.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [b, c] : apply(x, lam, src[j])) {
      auto it = row.find(b);
      if (it == row.end()) throw std::logic_error("induced: action left the target block");
      a(it->second, j) = c;
    }
  return a;
}

std::shared_ptr<const InducedModule> verma(std::shared_ptr<const LieAlgebra> g, const Weight& lam) {
  auto rd = g->root_datum_ptr();
  return std::make_shared<const InducedModule>(borel(rd), std::make_shared<const CharacterModule>(g, lam));
}

std::shared_ptr<const InducedModule> induce_parabolic(const ParabolicDatum& pd, ModulePtr inner) {
  return std::make_shared<const InducedModule>(pd, std::move(inner));
}

}  // namespace diracwm
