#include "diracwm/rootdata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diracwm {

Weight& Weight::operator+=(const Weight& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].get_str();
  os << "]";
  return os.str();
}

std::string to_string(RootType t) {
  switch (t) {
    case RootType::A1: return "A1";
    case RootType::A1xA1: return "A1xA1";
    case RootType::A2: return "A2";
    case RootType::B2: return "B2";
  }
  return "?";
}

namespace {

Matrix int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Matrix column(const Weight& w) {
  Matrix m(w.rank(), 1);
  for (std::size_t i = 0; i < w.rank(); ++i) m(i, 0) = w[i];
  return m;
}

}  // namespace

RootDatum::RootDatum(RootType type) : type_(type) {
  switch (type) {
    case RootType::A1:
      cartan_ = int_matrix({{2}});
      pos_ = {{1}};
      simple_len2_ = {2};
      break;
    case RootType::A1xA1:
      cartan_ = int_matrix({{2, 0}, {0, 2}});
      pos_ = {{1, 0}, {0, 1}};
      simple_len2_ = {2, 2};
      break;
    case RootType::A2:
      cartan_ = int_matrix({{2, -1}, {-1, 2}});
      pos_ = {{1, 0}, {0, 1}, {1, 1}};
      simple_len2_ = {2, 2};
      break;
    case RootType::B2:
      // alpha_1 long, alpha_2 short.
      cartan_ = int_matrix({{2, -1}, {-2, 2}});
      pos_ = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
      simple_len2_ = {2, 1};
      break;
  }
  cartan_inv_ = *inverse(cartan_);
  rho_ = Weight(std::vector<Rational>(rank(), Rational(1)));

  // Breadth-first closure under left multiplication by simple reflections,
  // so each element is first reached by a reduced word.
  const std::size_t r = rank();
  std::vector<Matrix> refl;
  for (std::size_t i = 0; i < r; ++i) {
    Matrix s = Matrix::identity(r);
    for (std::size_t k = 0; k < r; ++k) s(k, i) -= cartan_(k, i);
    refl.push_back(std::move(s));
  }
  weyl_.push_back({{}, Matrix::identity(r)});
  for (std::size_t head = 0; head < weyl_.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      Matrix m = refl[i] * weyl_[head].action;
      bool seen = std::any_of(weyl_.begin(), weyl_.end(), [&](const WeylElement& w) { return w.action == m; });
      if (seen) continue;
      std::vector<int> word{static_cast<int>(i)};
      word.insert(word.end(), weyl_[head].word.begin(), weyl_[head].word.end());
      weyl_.push_back({std::move(word), std::move(m)});
    }
  }
}

int RootDatum::positive_index(const std::vector<int>& k) const {
  for (std::size_t i = 0; i < pos_.size(); ++i)
    if (pos_[i] == k) return static_cast<int>(i);
  return -1;
}

Weight RootDatum::from_root_coords(const std::vector<Rational>& k) const {
  Weight w = Weight::zero(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) w[i] += cartan_(i, j) * k[j];
  return w;
}

Weight RootDatum::root_weight(std::size_t p) const {
  std::vector<Rational> k(pos_[p].begin(), pos_[p].end());
  return from_root_coords(k);
}

Weight RootDatum::simple_root(std::size_t i) const {
  std::vector<Rational> k(rank());
  k[i] = 1;
  return from_root_coords(k);
}

std::vector<Rational> RootDatum::root_coords(const Weight& w) const {
  std::vector<Rational> k(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) k[i] += cartan_inv_(i, j) * w[j];
  return k;
}

bool RootDatum::in_root_lattice(const Weight& w) const {
  for (const auto& k : root_coords(w))
    if (!is_integer(k)) return false;
  return true;
}

Rational RootDatum::root_length2(std::size_t p) const {
  Weight b = root_weight(p);
  return form(b, b);
}

std::vector<int> RootDatum::coroot(std::size_t p) const {
  Rational l2 = root_length2(p);
  std::vector<int> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    Rational v = pos_[p][i] * simple_len2_[i] / l2;
    c[i] = static_cast<int>(v.get_num().get_si());
  }
  return c;
}

Rational RootDatum::form(const Weight& a, const Weight& b) const {
  // (alpha_i, alpha_j) = <alpha_i, alpha_j^vee> |alpha_j|^2 / 2.
  auto ka = root_coords(a), kb = root_coords(b);
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += ka[i] * kb[j] * cartan_(j, i) * simple_len2_[j] / 2;
  return s;
}

Weight RootDatum::reflect(std::size_t i, const Weight& w) const { return w - w[i] * simple_root(i); }

Weight RootDatum::apply(const WeylElement& w, const Weight& v) const {
  Matrix r = w.action * column(v);
  std::vector<Rational> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = r(i, 0);
  return Weight(std::move(c));
}

std::shared_ptr<const RootDatum> root_system(RootType type) {
  static const std::shared_ptr<const RootDatum> table[] = {
      std::make_shared<const RootDatum>(RootType::A1), std::make_shared<const RootDatum>(RootType::A1xA1),
      std::make_shared<const RootDatum>(RootType::A2), std::make_shared<const RootDatum>(RootType::B2)};
  return table[static_cast<int>(type)];
}

std::shared_ptr<const RootDatum> build_root_system(std::string_view label) {
  if (label == "A1") return root_system(RootType::A1);
  if (label == "A1xA1") return root_system(RootType::A1xA1);
  if (label == "A2") return root_system(RootType::A2);
  if (label == "B2" || label == "C2") return root_system(RootType::B2);
  throw std::invalid_argument("unknown root system type '" + std::string(label) + "'");
}

ParabolicDatum::ParabolicDatum(std::shared_ptr<const RootDatum> rd, std::vector<int> levi)
    : rd_(std::move(rd)), levi_(std::move(levi)) {
  std::sort(levi_.begin(), levi_.end());
  levi_.erase(std::unique(levi_.begin(), levi_.end()), levi_.end());
  for (int i : levi_)
    if (i < 0 || i >= static_cast<int>(rd_->rank())) throw std::invalid_argument("levi index out of range");
  rho_u_ = Weight::zero(rd_->rank());
  for (std::size_t p = 0; p < rd_->num_positive(); ++p) {
    const auto& k = rd_->positive_roots()[p];
    bool in_l = true;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0 && !in_levi(i)) in_l = false;
    if (in_l) {
      levi_roots_.push_back(p);
    } else {
      u_roots_.push_back(p);
      rho_u_ += rd_->root_weight(p);
    }
  }
  rho_u_ *= Rational(1, 2);
}

bool ParabolicDatum::in_levi(std::size_t simple) const {
  return std::binary_search(levi_.begin(), levi_.end(), static_cast<int>(simple));
}

Weight ParabolicDatum::rho_l() const {
  Weight w = Weight::zero(rd_->rank());
  for (auto p : levi_roots_) w += rd_->root_weight(p);
  return Rational(1, 2) * w;
}

ParabolicDatum parabolic(std::shared_ptr<const RootDatum> rd, std::vector<int> levi) {
  return ParabolicDatum(std::move(rd), std::move(levi));
}

ParabolicDatum borel(std::shared_ptr<const RootDatum> rd) { return ParabolicDatum(std::move(rd), {}); }

Rational parabolic_height(const ParabolicDatum& pd, const Weight& nu) {
  auto k = pd.root_datum().root_coords(nu);
  Rational h = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (!pd.in_levi(i)) h += k[i];
  return h;
}

std::vector<OrbitPoint> dot_orbit(const RootDatum& rd, const Weight& lambda) {
  std::vector<OrbitPoint> out;
  Weight shifted = lambda + rd.rho();
  for (const auto& w : rd.weyl_group()) {
    Weight v = rd.apply(w, shifted) - rd.rho();
    bool seen = std::any_of(out.begin(), out.end(), [&](const OrbitPoint& p) { return p.weight == v; });
    if (!seen) out.push_back({w, std::move(v)});
  }
  return out;
}

std::vector<Weight> window_weights(const RootDatum& rd, const Window& win, const Weight& shift) {
  const std::size_t r = rd.rank();
  Weight center = win.base + shift;
  std::vector<Weight> out;
  std::vector<int> k(r, -win.radius);
  while (true) {
    std::vector<Rational> kr(k.begin(), k.end());
    out.push_back(center + rd.from_root_coords(kr));
    std::size_t i = r;
    while (i > 0 && k[i - 1] == win.radius) k[--i] = -win.radius;
    if (i == 0) break;
    ++k[i - 1];
  }
  return out;
}

bool root_order_less(const RootDatum& rd, const Weight& a, const Weight& b) {
  return rd.root_coords(a) < rd.root_coords(b);
}

}  // namespace diracwm
