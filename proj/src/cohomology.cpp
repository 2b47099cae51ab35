#include "diracwm/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace diracwm {

namespace {

// Basis y_i of a = u (e_beta) or a = ubar (f_beta / c_beta), indexed by the
// nilradical positions, and the structure constants [y_i, y_j] = c y_k.
struct NilBasis {
  std::vector<LieElement> y;
  std::vector<Weight> wt;
  struct Bracket {
    std::size_t k;
    Rational c;
  };
  std::vector<std::vector<std::optional<Bracket>>> br;
};

NilBasis nil_basis(const LieAlgebra& g, const ParabolicDatum& pd, bool ubar) {
  NilBasis nb;
  for (std::size_t p : pd.nilradical_roots()) {
    if (ubar) {
      nb.y.push_back(Rational(Rational(1) / g.pairing_constant(p)) * g.basis(g.f_index(p)));
      nb.wt.push_back(g.weight(g.f_index(p)));
    } else {
      nb.y.push_back(g.basis(g.e_index(p)));
      nb.wt.push_back(g.weight(g.e_index(p)));
    }
  }
  const std::size_t n = nb.y.size();
  nb.br.assign(n, std::vector<std::optional<NilBasis::Bracket>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LieElement b = g.bracket(nb.y[i], nb.y[j]);
      if (b.is_zero()) continue;
      bool found = false;
      for (std::size_t k = 0; k < n && !found; ++k) {
        if (nb.wt[k] != nb.wt[i] + nb.wt[j]) continue;
        std::size_t idx = 0;
        while (nb.y[k].c[idx] == 0) ++idx;
        Rational c = b.c[idx] / nb.y[k].c[idx];
        if (!(c * nb.y[k] == b)) throw std::logic_error("nilradical bracket is not a root vector");
        nb.br[i][j] = NilBasis::Bracket{k, c};
        found = true;
      }
      if (!found) throw std::logic_error("nilradical not closed under bracket");
    }
  return nb;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Weight sum_weights(const NilBasis& nb, const std::vector<std::size_t>& t, std::size_t rank) {
  Weight s = Weight::zero(rank);
  for (auto i : t) s += nb.wt[i];
  return s;
}

// rest u {k}, sorted, with the sign of moving y_k past the smaller entries.
std::optional<std::pair<std::vector<std::size_t>, int>> insert_sorted(const std::vector<std::size_t>& rest,
                                                                      std::size_t k) {
  if (std::find(rest.begin(), rest.end(), k) != rest.end()) return std::nullopt;
  std::vector<std::size_t> out = rest;
  auto pos = std::lower_bound(out.begin(), out.end(), k);
  int before = static_cast<int>(pos - out.begin());
  out.insert(pos, k);
  return std::make_pair(out, before % 2 ? -1 : 1);
}

std::vector<std::size_t> without(const std::vector<std::size_t>& t, std::size_t a, std::size_t b = SIZE_MAX) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != a && i != b) out.push_back(t[i]);
  return out;
}

struct DegreeIndex {
  std::map<std::vector<std::size_t>, std::size_t> offset;
  std::map<std::vector<std::size_t>, Weight> mu;
};

}  // namespace

std::string to_string(Direction d) {
  switch (d) {
    case Direction::UbarCohomology: return "ubar-cohomology";
    case Direction::UCohomology: return "u-cohomology";
    case Direction::UHomology: return "u-homology";
    case Direction::UbarHomology: return "ubar-homology";
  }
  return "?";
}

Direction parse_direction(const std::string& s) {
  for (auto d : {Direction::UbarCohomology, Direction::UCohomology, Direction::UHomology, Direction::UbarHomology})
    if (to_string(d) == s) return d;
  throw std::invalid_argument("unknown direction: " + s);
}

bool BlockComplex::cochain() const {
  return direction == Direction::UbarCohomology || direction == Direction::UCohomology;
}

BlockComplex ce_complex(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam, Direction d) {
  const LieAlgebra& g = m.algebra();
  const bool ubar = d == Direction::UbarCohomology || d == Direction::UbarHomology;
  const bool cochain = d == Direction::UbarCohomology || d == Direction::UCohomology;
  NilBasis nb = nil_basis(g, pd, ubar);
  const std::size_t n = nb.y.size();
  BlockComplex c{lam, d, {}, {}};
  std::vector<DegreeIndex> idx(n + 1);
  c.basis.resize(n + 1);
  for (std::size_t p = 0; p <= n; ++p)
    for (const auto& t : subsets_of_size(n, p)) {
      // Cochains phi(y_T) = v have weight wt v - wt y_T; chains v (x) y_T have wt v + wt y_T.
      Weight mu = cochain ? lam + sum_weights(nb, t, g.rank()) : lam - sum_weights(nb, t, g.rank());
      idx[p].offset[t] = c.basis[p].size();
      idx[p].mu[t] = mu;
      for (std::size_t j = 0; j < m.block_dim(mu); ++j) c.basis[p].push_back({t, j, mu});
    }
  const std::size_t steps = n + 1;
  c.differential.resize(steps);
  for (std::size_t p = 0; p <= n; ++p) {
    if (cochain) {
      // (d phi)(y_J) = sum_s (-1)^s y_{j_s} phi(y_{J - j_s})
      //              + sum_{s<t} (-1)^{s+t} phi([y_{j_s}, y_{j_t}] ^ y_{J - j_s - j_t}).
      std::size_t rows = p + 1 <= n ? c.basis[p + 1].size() : 0;
      Matrix dm(rows, c.basis[p].size());
      if (p + 1 <= n) {
        for (const auto& J : subsets_of_size(n, p + 1)) {
          const std::size_t r0 = idx[p + 1].offset[J];
          const Weight& muJ = idx[p + 1].mu[J];
          if (m.block_dim(muJ) == 0) continue;
          for (std::size_t s = 0; s < J.size(); ++s) {
            auto I = without(J, s);
            const Weight& muI = idx[p].mu[I];
            if (m.block_dim(muI) == 0) continue;
            dm.add_block(r0, idx[p].offset[I], m.block_action(nb.y[J[s]], muI), s % 2 ? -1 : 1);
          }
          for (std::size_t s = 0; s < J.size(); ++s)
            for (std::size_t t = s + 1; t < J.size(); ++t) {
              const auto& b = nb.br[J[s]][J[t]];
              if (!b) continue;
              auto ins = insert_sorted(without(J, s, t), b->k);
              if (!ins) continue;
              Rational sign = ((s + t) % 2 ? -1 : 1) * ins->second;
              dm.add_block(r0, idx[p].offset[ins->first], Matrix::identity(m.block_dim(muJ)), sign * b->c);
            }
        }
      }
      c.differential[p] = std::move(dm);
    } else {
      // d(v (x) y_I) = sum_s (-1)^{s+1} y_{i_s} v (x) y_{I - i_s}
      //              + sum_{s<t} (-1)^{s+t} v (x) [y_{i_s}, y_{i_t}] ^ y_{I - i_s - i_t}, s 0-based.
      std::size_t rows = p > 0 ? c.basis[p - 1].size() : 0;
      Matrix dm(rows, c.basis[p].size());
      if (p > 0) {
        for (const auto& I : subsets_of_size(n, p)) {
          const std::size_t c0 = idx[p].offset[I];
          const Weight& muI = idx[p].mu[I];
          if (m.block_dim(muI) == 0) continue;
          for (std::size_t s = 0; s < I.size(); ++s) {
            auto J = without(I, s);
            const Weight& muJ = idx[p - 1].mu[J];
            if (m.block_dim(muJ) == 0) continue;
            dm.add_block(idx[p - 1].offset[J], c0, m.block_action(nb.y[I[s]], muI), s % 2 ? 1 : -1);
          }
          for (std::size_t s = 0; s < I.size(); ++s)
            for (std::size_t t = s + 1; t < I.size(); ++t) {
              const auto& b = nb.br[I[s]][I[t]];
              if (!b) continue;
              auto ins = insert_sorted(without(I, s, t), b->k);
              if (!ins) continue;
              Rational sign = ((s + t) % 2 ? -1 : 1) * ins->second;
              dm.add_block(idx[p - 1].offset[ins->first], c0, Matrix::identity(m.block_dim(muI)), sign * b->c);
            }
        }
      }
      c.differential[p] = std::move(dm);
    }
  }
  return c;
}

std::vector<std::size_t> homology_dims(const BlockComplex& c) {
  const std::size_t n = c.top();
  std::vector<std::size_t> out(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    std::size_t dim = c.basis[p].size();
    std::size_t out_rank = rank(c.differential[p]);
    std::size_t in_rank = 0;
    if (c.cochain()) {
      if (p > 0) in_rank = rank(c.differential[p - 1]);
    } else if (p < n) {
      in_rank = rank(c.differential[p + 1]);
    }
    out[p] = dim - out_rank - in_rank;
  }
  return out;
}

std::vector<std::size_t> lie_cohomology(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam,
                                        Direction d) {
  return homology_dims(ce_complex(m, pd, lam, d));
}

DiracBlock dirac_block(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam) {
  SpinModule s(m.algebra_ptr(), pd);
  return dirac_block(m, s, lam);
}

DiracBlock dirac_block(const WeightModule& m, const SpinModule& s, const Weight& lam) {
  const LieAlgebra& g = m.algebra();
  const ParabolicDatum& pd = s.parabolic();
  DiracBlock b;
  b.weight = lam;
  std::vector<std::size_t> offset(s.dim());
  std::vector<Weight> mu(s.dim());
  for (std::size_t a = 0; a < s.dim(); ++a) {
    offset[a] = b.inner.size();
    mu[a] = lam - s.basis()[a].weight;
    for (std::size_t j = 0; j < m.block_dim(mu[a]); ++j) {
      b.spin_index.push_back(a);
      b.inner.push_back(j);
      b.parity.push_back(s.basis()[a].parity);
    }
  }
  const std::size_t n = b.inner.size();
  // x (x) v summed into `out`; x acts on M, v on S.
  auto add_term = [&](Matrix& out, const LieElement* x, const Matrix& v) {
    for (std::size_t a = 0; a < s.dim(); ++a) {
      const std::size_t da = m.block_dim(mu[a]);
      if (da == 0) continue;
      for (std::size_t r = 0; r < s.dim(); ++r) {
        if (v(r, a) == 0) continue;
        const std::size_t dr = m.block_dim(mu[r]);
        if (dr == 0) continue;
        if (x)
          out.add_block(offset[r], offset[a], m.block_action(*x, mu[a]), v(r, a));
        else
          out.add_block(offset[r], offset[a], Matrix::identity(da), v(r, a));
      }
    }
  };
  std::vector<LieElement> u, ustar;
  for (std::size_t p : pd.nilradical_roots()) {
    u.push_back(g.basis(g.e_index(p)));
    ustar.push_back(Rational(Rational(1) / g.pairing_constant(p)) * g.basis(g.f_index(p)));
  }
  Matrix K(s.dim(), s.dim()), Kminus(s.dim(), s.dim());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      LieElement bs = g.bracket(ustar[i], ustar[j]);
      if (!bs.is_zero()) K += s.clifford(u[i]) * s.clifford(u[j]) * s.clifford(bs);
      LieElement bu = g.bracket(u[i], u[j]);
      if (!bu.is_zero()) Kminus += s.clifford(ustar[i]) * s.clifford(ustar[j]) * s.clifford(bu);
    }
  K *= Rational(-1, 4);
  Kminus *= Rational(-1, 4);
  b.C = Matrix(n, n);
  b.Cminus = Matrix(n, n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    add_term(b.C, &ustar[i], s.clifford(u[i]));
    add_term(b.Cminus, &u[i], s.clifford(ustar[i]));
  }
  add_term(b.C, nullptr, K);
  add_term(b.Cminus, nullptr, Kminus);
  b.D = b.C + b.Cminus;
  return b;
}

namespace {

Matrix submatrix(const Matrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
  return s;
}

// Columns of ker spanning a complement of (ker ∩ im) in ker, embedded in the full block.
Matrix representatives(const Matrix& ker, const Matrix& im, const std::vector<std::size_t>& rows, std::size_t n) {
  Matrix acc = im;
  std::vector<std::size_t> chosen;
  std::size_t r = rank(acc);
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Matrix col = select_columns(ker, {j});
    Matrix trial = hstack(acc, col);
    std::size_t rt = rank(trial);
    if (rt > r) {
      acc = std::move(trial);
      r = rt;
      chosen.push_back(j);
    }
  }
  Matrix out(n, chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c)
    for (std::size_t i = 0; i < rows.size(); ++i) out(rows[i], c) = ker(i, chosen[c]);
  return out;
}

}  // namespace

DiracCohomology dirac_cohomology(const DiracBlock& b) {
  const std::size_t n = b.D.rows();
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < n; ++i) (b.parity[i] == 0 ? even : odd).push_back(i);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (b.D(r, c) != 0 && b.parity[r] == b.parity[c]) throw std::logic_error("Dirac operator is not odd");
  DiracCohomology h;
  for (int par = 0; par < 2; ++par) {
    const auto& P = par == 0 ? even : odd;
    const auto& Q = par == 0 ? odd : even;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    // D restricted to the parity-P part lands in Q; its kernel lives in P.
    Matrix ker = P.empty() ? Matrix(0, 0) : nullspace(submatrix(b.D, Q, P));
    if (!P.empty() && Q.empty()) ker = Matrix::identity(P.size());
    Matrix im = Q.empty() || P.empty() ? Matrix(P.size(), 0) : submatrix(b.D, P, Q);
    std::size_t dim = ker.cols() - (ker.cols() ? intersection_dim(ker, im) : 0);
    Matrix reps = dim ? representatives(ker, im, P, n) : Matrix(n, 0);
    if (par == 0) {
      h.plus = dim;
      h.plus_basis = std::move(reps);
    } else {
      h.minus = dim;
      h.minus_basis = std::move(reps);
    }
  }
  return h;
}

DiracCohomology dirac_cohomology(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam) {
  return dirac_cohomology(dirac_block(m, pd, lam));
}

CorrespondenceReport correspondence_check(const WeightModule& m, const ParabolicDatum& pd, const Weight& lam) {
  SpinModule s(m.algebra_ptr(), pd);
  DiracBlock b = dirac_block(m, s, lam);
  const Weight shifted = lam - pd.rho_ubar();
  const std::size_t n = b.inner.size();
  std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[{s.basis()[b.spin_index[i]].roots, b.inner[i]}] = i;
  auto assemble = [&](const BlockComplex& c, const Rational& scale) {
    Matrix full(n, n);
    for (std::size_t p = 0; p < c.differential.size(); ++p) {
      const Matrix& d = c.differential[p];
      const std::size_t tp = c.cochain() ? p + 1 : p - 1;
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t col = 0; col < d.cols(); ++col) {
          if (d(r, col) == 0) continue;
          const auto& lr = c.basis[tp][r];
          const auto& lc = c.basis[p][col];
          full(pos.at({lr.roots, lr.inner}), pos.at({lc.roots, lc.inner})) = scale * d(r, col);
        }
    }
    return full;
  };
  CorrespondenceReport rep;
  auto compare = [&](const Matrix& got, const Matrix& want, const char* what) {
    if (!rep.ok) return;
    if (got.rows() != want.rows()) {
      rep.ok = false;
      rep.first_mismatch = std::string(what) + ": block sizes differ";
      return;
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (got(r, c) != want(r, c)) {
          rep.ok = false;
          rep.first_mismatch = std::string(what) + "[" + std::to_string(r) + "][" + std::to_string(c) +
                               "] = " + to_string(got(r, c)) + ", complex gives " + to_string(want(r, c)) +
                               " at " + lam.str();
          return;
        }
  };
  BlockComplex co = ce_complex(m, pd, shifted, Direction::UbarCohomology);
  BlockComplex ho = ce_complex(m, pd, shifted, Direction::UHomology);
  std::size_t total = 0;
  for (const auto& deg : co.basis) total += deg.size();
  if (total != n) {
    rep.ok = false;
    rep.first_mismatch = "complex and Dirac block have different dimensions at " + lam.str();
    return rep;
  }
  compare(b.C, assemble(co, 1), "C");
  compare(b.Cminus, assemble(ho, -2), "C-");
  return rep;
}

}  // namespace diracwm
