#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "diracwm/matrix.hpp"
#include "diracwm/rational.hpp"

namespace diracwm {

/// Element of h^*, stored in fundamental-weight coordinates. For A1 the single
/// coordinate is the h_alpha eigenvalue.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> fund) : c_(std::move(fund)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank)); }

  std::size_t rank() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= -1; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  /// Lexicographic on fundamental coordinates; used for map keys only.
  friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

  /// "[a, b]"
  std::string str() const;

 private:
  std::vector<Rational> c_;
};

enum class RootType { A1, A1xA1, A2, B2 };

std::string to_string(RootType t);

struct WeylElement {
  std::vector<int> word;  // reduced word in simple reflections (0-based)
  Matrix action;          // action on fundamental coordinates (column vectors)
  int length() const { return static_cast<int>(word.size()); }
};

/// Root system data for a fixed type. Roots are given in simple-root
/// coordinates; positive roots are ordered by height, then lexicographically.
class RootDatum {
 public:
  explicit RootDatum(RootType type);

  RootType type() const { return type_; }
  std::string label() const { return to_string(type_); }
  std::size_t rank() const { return cartan_.rows(); }

  /// cartan()(i, j) = <alpha_j, alpha_i^vee>; column j is alpha_j in fundamental coordinates.
  const Matrix& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& positive_roots() const { return pos_; }
  std::size_t num_positive() const { return pos_.size(); }
  /// Index into positive_roots() or -1.
  int positive_index(const std::vector<int>& root_coords) const;

  Weight root_weight(std::size_t pos_index) const;
  Weight simple_root(std::size_t i) const;
  Weight from_root_coords(const std::vector<Rational>& k) const;
  std::vector<Rational> root_coords(const Weight& w) const;
  bool in_root_lattice(const Weight& w) const;

  /// Coroot of a positive root in the basis of simple coroots.
  std::vector<int> coroot(std::size_t pos_index) const;
  /// Squared length in the normalization where long roots have length^2 2.
  Rational root_length2(std::size_t pos_index) const;
  /// Invariant form on h^* (long roots length^2 2) in fundamental coordinates.
  Rational form(const Weight& a, const Weight& b) const;

  const Weight& rho() const { return rho_; }
  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  Weight reflect(std::size_t i, const Weight& w) const;
  Weight apply(const WeylElement& w, const Weight& v) const;

 private:
  RootType type_;
  Matrix cartan_;
  Matrix cartan_inv_;
  std::vector<std::vector<int>> pos_;
  std::vector<Rational> simple_len2_;
  Weight rho_;
  std::vector<WeylElement> weyl_;
};

/// Throws std::invalid_argument on unknown labels; "C2" normalizes to B2.
std::shared_ptr<const RootDatum> build_root_system(std::string_view type_label);
std::shared_ptr<const RootDatum> root_system(RootType type);

/// p = l + u for a subset I of simple roots.
class ParabolicDatum {
 public:
  ParabolicDatum(std::shared_ptr<const RootDatum> rd, std::vector<int> levi);

  const RootDatum& root_datum() const { return *rd_; }
  std::shared_ptr<const RootDatum> root_datum_ptr() const { return rd_; }
  const std::vector<int>& levi() const { return levi_; }
  bool is_borel() const { return levi_.empty(); }
  bool in_levi(std::size_t simple) const;

  /// Indices into rd.positive_roots().
  const std::vector<std::size_t>& levi_roots() const { return levi_roots_; }
  const std::vector<std::size_t>& nilradical_roots() const { return u_roots_; }
  std::size_t dim_u() const { return u_roots_.size(); }
  const Weight& rho_u() const { return rho_u_; }
  Weight rho_ubar() const { return -rho_u_; }
  /// Half sum of positive roots of l.
  Weight rho_l() const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  std::vector<int> levi_;
  std::vector<std::size_t> levi_roots_;
  std::vector<std::size_t> u_roots_;
  Weight rho_u_;
};

ParabolicDatum parabolic(std::shared_ptr<const RootDatum> rd, std::vector<int> levi);
ParabolicDatum borel(std::shared_ptr<const RootDatum> rd);

/// Sum of the simple-root coefficients of nu outside the Levi.
Rational parabolic_height(const ParabolicDatum& pd, const Weight& nu);

struct OrbitPoint {
  WeylElement w;
  Weight weight;
};

/// {(w, w(lambda + rho) - rho)}, duplicates collapsed keeping the shortest w.
std::vector<OrbitPoint> dot_orbit(const RootDatum& rd, const Weight& lambda);

/// Box window: base + sum k_i alpha_i with |k_i| <= radius.
struct Window {
  Weight base;
  int radius = 0;
};

/// Window weights shifted by `shift`, ordered lexicographically by root coordinates.
std::vector<Weight> window_weights(const RootDatum& rd, const Window& w, const Weight& shift);

/// Strict order by root coordinates (lexicographic), used for output ordering.
bool root_order_less(const RootDatum& rd, const Weight& a, const Weight& b);

}  // namespace diracwm
