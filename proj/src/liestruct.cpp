#include "diracwm/liestruct.hpp"

#include <sstream>
#include <stdexcept>

namespace diracwm {

bool LieElement::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("mixed Lie algebras");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("mixed Lie algebras");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  for (auto& x : c) x *= s;
  return *this;
}

namespace {

// Matrix unit E_{ij}, 1-based.
Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// Root vectors e_beta for beta in positive_roots() order.
std::vector<Matrix> positive_root_vectors(RootType t) {
  switch (t) {
    case RootType::A1: return {unit(2, 1, 2)};
    case RootType::A1xA1: return {unit(4, 1, 2), unit(4, 3, 4)};
    case RootType::A2: return {unit(3, 1, 2), unit(3, 2, 3), unit(3, 1, 3)};
    case RootType::B2:
      return {unit(4, 2, 4), unit(4, 1, 2) - unit(4, 4, 3), unit(4, 1, 4) + unit(4, 2, 3), unit(4, 1, 3)};
  }
  return {};
}

Rational trace(const Matrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

LieAlgebra::LieAlgebra(std::shared_ptr<const RootDatum> rd) : rd_(std::move(rd)) {
  m_ = rd_->num_positive();
  r_ = rd_->rank();
  dim_ = 2 * m_ + r_;
  auto es = positive_root_vectors(rd_->type());
  mats_.resize(dim_);
  weights_.resize(dim_);
  for (std::size_t p = 0; p < m_; ++p) {
    mats_[e_index(p)] = es[p];
    mats_[f_index(p)] = es[p].transpose();
    weights_[e_index(p)] = rd_->root_weight(p);
    weights_[f_index(p)] = -rd_->root_weight(p);
  }
  for (std::size_t i = 0; i < r_; ++i) {
    mats_[h_index(i)] = commutator(es[i], es[i].transpose());
    weights_[h_index(i)] = Weight::zero(r_);
  }
  const std::size_t n = mats_[0].rows();
  flat_ = Matrix(n * n, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat_(i * n + j, k) = mats_[k](i, j);
  table_.resize(dim_ * dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) table_[a * dim_ + b] = from_matrix(commutator(mats_[a], mats_[b]));
  for (std::size_t p = 0; p < m_; ++p) cpair_.push_back(trace(es[p] * es[p].transpose()));
}

BasisKind LieAlgebra::kind(std::size_t idx) const {
  if (idx < m_) return BasisKind::F;
  if (idx < m_ + r_) return BasisKind::H;
  return BasisKind::E;
}

std::size_t LieAlgebra::slot(std::size_t idx) const {
  switch (kind(idx)) {
    case BasisKind::F: return idx;
    case BasisKind::H: return idx - m_;
    case BasisKind::E: return idx - m_ - r_;
  }
  return 0;
}

std::string LieAlgebra::label(std::size_t idx) const {
  std::ostringstream os;
  if (kind(idx) == BasisKind::H) {
    os << "h" << slot(idx) + 1;
    return os.str();
  }
  os << (kind(idx) == BasisKind::E ? "e" : "f");
  for (int k : rd_->positive_roots()[slot(idx)]) os << k;
  return os.str();
}

LieElement LieAlgebra::basis(std::size_t idx) const {
  LieElement x(dim_);
  x.c[idx] = 1;
  return x;
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  if (x.c.size() != dim_ || y.c.size() != dim_) throw std::invalid_argument("mixed Lie algebras");
  LieElement z(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x.c[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (y.c[b] == 0) continue;
      const LieElement& t = bracket_basis(a, b);
      Rational s = x.c[a] * y.c[b];
      for (std::size_t k = 0; k < dim_; ++k)
        if (t.c[k] != 0) z.c[k] += s * t.c[k];
    }
  }
  return z;
}

LieElement LieAlgebra::ad(std::size_t x, const LieElement& y) const { return bracket(basis(x), y); }

Rational LieAlgebra::form(const LieElement& x, const LieElement& y) const {
  return trace(to_matrix(x) * to_matrix(y));
}

LieElement LieAlgebra::tau(const LieElement& x) const {
  LieElement y = x;
  for (std::size_t p = 0; p < m_; ++p) std::swap(y.c[e_index(p)], y.c[f_index(p)]);
  return y;
}

Matrix LieAlgebra::to_matrix(const LieElement& x) const {
  Matrix m(mats_[0].rows(), mats_[0].cols());
  for (std::size_t k = 0; k < dim_; ++k)
    if (x.c[k] != 0) m += mats_[k] * x.c[k];
  return m;
}

LieElement LieAlgebra::from_matrix(const Matrix& m) const {
  const std::size_t n = m.rows();
  Matrix v(n * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v(i * n + j, 0) = m(i, j);
  auto sol = solve(flat_, v);
  if (!sol) throw std::logic_error("matrix outside the realized Lie algebra");
  LieElement x(dim_);
  for (std::size_t k = 0; k < dim_; ++k) x.c[k] = (*sol)(k, 0);
  return x;
}

std::string LieAlgebra::structure_table() const {
  std::ostringstream os;
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a + 1; b < dim_; ++b) {
      const LieElement& t = bracket_basis(a, b);
      if (t.is_zero()) continue;
      os << "[" << label(a) << ", " << label(b) << "] =";
      for (std::size_t k = 0; k < dim_; ++k)
        if (t.c[k] != 0) os << " " << (t.c[k] > 0 ? "+" : "") << t.c[k].get_str() << " " << label(k);
      os << "\n";
    }
  return os.str();
}

std::shared_ptr<const LieAlgebra> lie_algebra(RootType type) {
  static const std::shared_ptr<const LieAlgebra> table[] = {
      std::make_shared<const LieAlgebra>(root_system(RootType::A1)),
      std::make_shared<const LieAlgebra>(root_system(RootType::A1xA1)),
      std::make_shared<const LieAlgebra>(root_system(RootType::A2)),
      std::make_shared<const LieAlgebra>(root_system(RootType::B2))};
  return table[static_cast<int>(type)];
}

UEAElement UEAElement::one(std::size_t dim) { return monomial(Monomial(dim, 0)); }

UEAElement UEAElement::monomial(Monomial m, Rational c) {
  UEAElement u;
  u.add(m, c);
  return u;
}

void UEAElement::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

std::string UEAElement::str(const LieAlgebra& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    os << (first ? "" : " + ") << c.get_str();
    first = false;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      os << "*" << g.label(k);
      if (m[k] > 1) os << "^" << m[k];
    }
  }
  return os.str();
}

namespace {

using Word = std::vector<int>;

class Straightener {
 public:
  explicit Straightener(const LieAlgebra& g) : g_(g) {}

  // Normal form of a word of basis indices: swap the first descent and add
  // the bracket term, recursively.
  const UEAElement& run(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    UEAElement out;
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
    if (i + 1 >= w.size()) {
      UEAElement::Monomial m(g_.dim(), 0);
      for (int k : w) ++m[k];
      out.add(m, 1);
    } else {
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      out += run(swapped);
      const LieElement& br = g_.bracket_basis(w[i], w[i + 1]);
      for (std::size_t k = 0; k < g_.dim(); ++k) {
        if (br.c[k] == 0) continue;
        Word shorter(w.begin(), w.begin() + i);
        shorter.push_back(static_cast<int>(k));
        shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
        UEAElement t = run(shorter);
        t *= br.c[k];
        out += t;
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  const LieAlgebra& g_;
  std::map<Word, UEAElement> memo_;
};

Word expand(const UEAElement::Monomial& m) {
  Word w;
  for (std::size_t k = 0; k < m.size(); ++k)
    for (int j = 0; j < m[k]; ++j) w.push_back(static_cast<int>(k));
  return w;
}

}  // namespace

UEAElement pbw_normal_form(const LieAlgebra& g, const std::vector<LieElement>& word) {
  // Expand multilinearly into basis words.
  std::vector<std::pair<Word, Rational>> words{{{}, Rational(1)}};
  for (const auto& x : word) {
    if (x.c.size() != g.dim()) throw std::invalid_argument("mixed Lie algebras");
    std::vector<std::pair<Word, Rational>> next;
    for (const auto& [w, c] : words)
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (x.c[k] == 0) continue;
        Word w2 = w;
        w2.push_back(static_cast<int>(k));
        next.emplace_back(std::move(w2), c * x.c[k]);
      }
    words = std::move(next);
  }
  Straightener s(g);
  UEAElement out;
  for (const auto& [w, c] : words) {
    UEAElement t = s.run(w);
    t *= c;
    out += t;
  }
  return out;
}

UEAElement pbw_multiply(const LieAlgebra& g, const UEAElement& a, const UEAElement& b) {
  Straightener s(g);
  UEAElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Word w = expand(ma);
      Word wb = expand(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      UEAElement t = s.run(w);
      t *= ca * cb;
      out += t;
    }
  return out;
}

UEAElement tau(const LieAlgebra& g, const UEAElement& u) {
  Straightener s(g);
  UEAElement out;
  for (const auto& [m, c] : u.terms()) {
    Word w = expand(m);
    Word t(w.rbegin(), w.rend());
    for (int& k : t) {
      auto idx = static_cast<std::size_t>(k);
      if (g.kind(idx) == BasisKind::E) k = static_cast<int>(g.f_index(g.slot(idx)));
      else if (g.kind(idx) == BasisKind::F) k = static_cast<int>(g.e_index(g.slot(idx)));
    }
    UEAElement r = s.run(t);
    r *= c;
    out += r;
  }
  return out;
}

std::vector<ThetaTerm> theta_twist_element(const LieAlgebra& g, std::size_t generator, const Rational& x,
                                           const LieElement& u) {
  std::vector<ThetaTerm> out;
  LieElement cur = u;
  for (int k = 0; !cur.is_zero(); ++k) {
    Rational b = binomial(x, k);
    if (b != 0) out.push_back({b, cur, k});
    cur = g.ad(generator, cur);
  }
  return out;
}

}  // namespace diracwm
