#include "diracwm/index.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace diracwm {

namespace {

std::vector<Weight> box(const RootDatum& rd, const Weight& base, int r) {
  return window_weights(rd, {base, r}, Weight::zero(rd.rank()));
}

// Finite support of `eval` when it can be certified, else nullopt.
std::optional<std::vector<Weight>> certify(const WeightModule& m, const ParabolicDatum& pd,
                                           const std::function<long long(const Weight&)>& eval) {
  const RootDatum& rd = m.root_datum();
  if (pd.is_borel() && m.has_infinitesimal_character()) {
    if (auto hw = highest_weight_of(m)) {
      // Weights of the index lie in W(hw + rho); the halo is one root step around each.
      std::set<Weight> cand;
      for (const auto& w : rd.weyl_group()) cand.insert(rd.apply(w, *hw + rd.rho()));
      std::vector<Weight> support;
      for (const auto& c : cand) {
        for (const auto& h : box(rd, c, 1))
          if (!cand.count(h) && eval(h) != 0) return std::nullopt;
        if (eval(c) != 0) support.push_back(c);
      }
      std::sort(support.begin(), support.end(), [&](const Weight& a, const Weight& b) { return root_order_less(rd, a, b); });
      return support;
    }
  }
  // Constant block dimensions along a root string kill the alternating sum.
  bool vanishing = (m.is_cuspidal() && pd.dim_u() > 0) || (pd.is_borel() && induced_from_cuspidal(m));
  if (vanishing) {
    for (const auto& w : box(rd, m.coset_anchor() + pd.rho_ubar(), 2))
      if (eval(w) != 0) return std::nullopt;
    return std::vector<Weight>{};
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

bool induced_from_cuspidal(const WeightModule& m) {
  if (m.kind() == ModuleKind::Dual) return induced_from_cuspidal(*static_cast<const DualModule&>(m).inner());
  if (m.kind() != ModuleKind::Induced) return false;
  const auto& ind = static_cast<const InducedModule&>(m);
  return !ind.is_verma() && ind.inner()->kind() == ModuleKind::Cuspidal;
}

int index_sign(const ParabolicDatum& pd) { return pd.dim_u() % 2 ? -1 : 1; }

std::optional<Weight> highest_weight_of(const WeightModule& m) {
  switch (m.kind()) {
    case ModuleKind::SimpleHW: return static_cast<const SimpleHW&>(m).highest_weight();
    case ModuleKind::Induced: {
      const auto& ind = static_cast<const InducedModule&>(m);
      if (ind.is_verma()) return ind.coset_anchor();
      return std::nullopt;
    }
    case ModuleKind::Dual: return highest_weight_of(*static_cast<const DualModule&>(m).inner());
    default: return std::nullopt;
  }
}

VirtualCharacter spin_index(ModulePtr m, const ParabolicDatum& pd) {
  auto basis = std::make_shared<const std::vector<SpinBasisElement>>(spin_basis(pd));
  VirtualCharacter v;
  v.provenance = "spin-index";
  v.eval = [m, basis](const Weight& lam) {
    long long s = 0;
    for (const auto& b : *basis) {
      long long d = static_cast<long long>(m->block_dim(lam - b.weight));
      s += b.parity ? -d : d;
    }
    return s;
  };
  v.support = certify(*m, pd, v.eval);
  return v;
}

VirtualCharacter dirac_index(ModulePtr m, const ParabolicDatum& pd) {
  if (!m->has_infinitesimal_character())
    throw PreconditionError("dirac index needs a module with infinitesimal character");
  auto s = std::make_shared<const SpinModule>(m->algebra_ptr(), pd);
  VirtualCharacter v;
  v.provenance = "dirac-index";
  v.eval = [m, s](const Weight& lam) {
    auto h = dirac_cohomology(dirac_block(*m, *s, lam));
    return static_cast<long long>(h.plus) - static_cast<long long>(h.minus);
  };
  v.support = certify(*m, pd, v.eval);
  return v;
}

long long pair_virtual(const VirtualCharacter& a, const VirtualCharacter& b) {
  const auto* sup = a.support ? &*a.support : b.support ? &*b.support : nullptr;
  if (!sup) throw PreconditionError("pairing needs a certified finite support on one side");
  long long s = 0;
  for (const auto& w : *sup) s += a(w) * b(w);
  return s;
}

VirtualCharacter levi_index(const VirtualCharacter& x, const ParabolicDatum& pd) {
  struct Term {
    Weight shift;  // rho_l - sum T
    int sign;
  };
  auto terms = std::make_shared<std::vector<Term>>();
  const RootDatum& rd = pd.root_datum();
  const auto& lr = pd.levi_roots();
  for (const auto& t : subsets(lr.size())) {
    Weight sh = pd.rho_l();
    for (auto i : t) sh -= rd.root_weight(lr[i]);
    terms->push_back({sh, t.size() % 2 ? -1 : 1});
  }
  VirtualCharacter v;
  v.provenance = x.provenance + " through the Levi";
  v.eval = [x, terms](const Weight& lam) {
    long long s = 0;
    for (const auto& t : *terms) s += t.sign * x(lam + t.shift);
    return s;
  };
  if (x.support) {
    std::set<Weight> cand;
    for (const auto& w : *x.support)
      for (const auto& t : *terms) cand.insert(w - t.shift);
    std::vector<Weight> sup;
    for (const auto& w : cand)
      if (v(w) != 0) sup.push_back(w);
    std::sort(sup.begin(), sup.end(), [&](const Weight& a, const Weight& b) { return root_order_less(rd, a, b); });
    v.support = sup;
  }
  return v;
}

bool IndexReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.applicable || c.ok; });
}

IndexReport verify_index_identities(ModulePtr m, const ParabolicDatum& pd, const std::vector<Weight>& weights) {
  IndexReport rep;
  auto idx = spin_index(m, pd);
  const int eps = index_sign(pd);
  auto compare = [&](IdentityCheck& c, const std::function<long long(const Weight&)>& lhs,
                     const std::function<long long(const Weight&)>& rhs) {
    for (const auto& lam : weights) {
      long long a = lhs(lam), b = rhs(lam);
      if (a != b) {
        c.ok = false;
        c.detail = "at " + lam.str() + ": " + std::to_string(a) + " vs " + std::to_string(b);
        return;
      }
    }
  };
  auto euler = [&](const Weight& lam, Direction d) {
    long long s = 0;
    auto h = lie_cohomology(*m, pd, lam, d);
    for (std::size_t p = 0; p < h.size(); ++p) s += (p % 2 ? -1 : 1) * static_cast<long long>(h[p]);
    return s;
  };

  IdentityCheck a{'a', "index equals ubar-cohomology Euler characteristic"};
  compare(a, idx.eval, [&](const Weight& lam) { return euler(lam - pd.rho_ubar(), Direction::UbarCohomology); });
  rep.checks.push_back(a);

  IdentityCheck b{'b', "index equals signed u-cohomology Euler characteristic"};
  compare(b, idx.eval, [&](const Weight& lam) { return eps * euler(lam - pd.rho_u(), Direction::UCohomology); });
  rep.checks.push_back(b);

  IdentityCheck c{'c', "Dirac index equals spin index"};
  if (!m->has_infinitesimal_character()) {
    c.applicable = false;
    c.detail = "no infinitesimal character";
  } else {
    auto di = dirac_index(m, pd);
    compare(c, di.eval, idx.eval);
  }
  rep.checks.push_back(c);

  IdentityCheck d{'d', "transitivity through the Levi"};
  auto full = spin_index(m, borel(pd.root_datum_ptr()));
  auto through = levi_index(idx, pd);
  compare(d, full.eval, through.eval);
  rep.checks.push_back(d);

  IdentityCheck e{'e', "index of a parabolically induced module"};
  const InducedModule* ind = m->kind() == ModuleKind::Induced ? static_cast<const InducedModule*>(m.get()) : nullptr;
  if (!ind || ind->parabolic().levi() != pd.levi()) {
    e.applicable = false;
    e.detail = "module is not induced from this parabolic";
  } else {
    const ModulePtr& v = ind->inner();
    compare(e, idx.eval, [&](const Weight& lam) {
      return eps * static_cast<long long>(v->block_dim(lam - pd.rho_u()));
    });
  }
  rep.checks.push_back(e);

  IdentityCheck f{'f', "dual invariance of the Borel index"};
  auto dual = spin_index(std::make_shared<const DualModule>(m), borel(pd.root_datum_ptr()));
  compare(f, dual.eval, full.eval);
  rep.checks.push_back(f);
  return rep;
}

}  // namespace diracwm
