#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "diracwm/matrix.hpp"
#include "diracwm/rootdata.hpp"

namespace diracwm {

/// Coefficient vector over the Chevalley basis, in the fixed basis order
///   f_{beta_1..beta_m}, h_1..h_r, e_{beta_1..beta_m}
/// with beta_p = rd.positive_roots()[p].
struct LieElement {
  std::vector<Rational> c;

  LieElement() = default;
  explicit LieElement(std::size_t dim) : c(dim) {}

  bool is_zero() const;
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.c == b.c; }
};

enum class BasisKind { F, H, E };

/// Chevalley basis of g realized by explicit matrices:
///   A1    sl(2):  e = E12
///   A1xA1 sl(2)+sl(2) block diagonal in gl(4): e_1 = E12, e_2 = E34
///   A2    sl(3):  e_{a1} = E12, e_{a2} = E23, e_{a1+a2} = E13
///   B2    sp(4) (form [[0,I],[-I,0]]):
///         e_{a1} = E24, e_{a2} = E12 - E43, e_{a1+a2} = E14 + E23, e_{a1+2a2} = E13
/// with f_beta = e_beta^T and h_i = [e_i, f_i]. Structure constants are read
/// off these matrices, which fixes all signs. The invariant form is the trace
/// form, so (e_beta, f_beta) = 1 except for short roots of B2 where it is 2.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::shared_ptr<const RootDatum> rd);

  const RootDatum& root_datum() const { return *rd_; }
  std::shared_ptr<const RootDatum> root_datum_ptr() const { return rd_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_positive() const { return m_; }
  std::size_t rank() const { return r_; }

  std::size_t f_index(std::size_t p) const { return p; }
  std::size_t h_index(std::size_t i) const { return m_ + i; }
  std::size_t e_index(std::size_t p) const { return m_ + r_ + p; }
  BasisKind kind(std::size_t idx) const;
  /// Positive-root index for e/f, simple index for h.
  std::size_t slot(std::size_t idx) const;
  const Weight& weight(std::size_t idx) const { return weights_[idx]; }
  std::string label(std::size_t idx) const;

  LieElement basis(std::size_t idx) const;
  const LieElement& bracket_basis(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  /// (ad x)(y) for basis index x.
  LieElement ad(std::size_t x, const LieElement& y) const;

  /// Trace form of the matrix realization.
  Rational form(const LieElement& x, const LieElement& y) const;
  /// c_beta = (e_beta, f_beta).
  const Rational& pairing_constant(std::size_t p) const { return cpair_[p]; }

  LieElement tau(const LieElement& x) const;
  const Matrix& realization(std::size_t idx) const { return mats_[idx]; }
  Matrix to_matrix(const LieElement& x) const;
  LieElement from_matrix(const Matrix& m) const;

  /// Nonzero brackets of basis pairs (a < b), one per line.
  std::string structure_table() const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  std::size_t m_, r_, dim_;
  std::vector<Matrix> mats_;
  std::vector<Weight> weights_;
  std::vector<LieElement> table_;
  std::vector<Rational> cpair_;
  Matrix flat_;  // N^2 x dim, realizations as columns
};

std::shared_ptr<const LieAlgebra> lie_algebra(RootType type);

/// Element of U(g) in PBW normal form: monomials are exponent vectors indexed
/// by basis position, read as f-part * h-part * e-part in basis order.
class UEAElement {
 public:
  using Monomial = std::vector<int>;

  UEAElement() = default;
  static UEAElement one(std::size_t dim);
  static UEAElement monomial(Monomial m, Rational c = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial& m, const Rational& c);
  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator*=(const Rational& s);
  friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }

  std::string str(const LieAlgebra& g) const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// Product of the word in U(g), straightened to PBW normal form.
UEAElement pbw_normal_form(const LieAlgebra& g, const std::vector<LieElement>& word);
UEAElement pbw_multiply(const LieAlgebra& g, const UEAElement& a, const UEAElement& b);
/// Anti-automorphism swapping e_beta and f_beta and fixing h.
UEAElement tau(const LieAlgebra& g, const UEAElement& u);

/// One term c * (ad f)^k(u) * f^{-k} of the twisting expansion.
struct ThetaTerm {
  Rational coeff;
  LieElement ad_power;
  int inverse_power;
};

/// Theta_x(u) = f^x u f^{-x} = sum_k binom(x, k) (ad f)^k(u) f^{-k}, where f is
/// the basis element `generator`. Terms with (ad f)^k(u) = 0 are dropped.
std::vector<ThetaTerm> theta_twist_element(const LieAlgebra& g, std::size_t generator, const Rational& x,
                                           const LieElement& u);

}  // namespace diracwm
