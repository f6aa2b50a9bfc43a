#pragma once

#include "sek3/common.hpp"

#include <span>

namespace sek3 {

/// Minimal coordinates xi = (phi, t_1, ..., t_K) of the Lie algebra se_K(3).
/// Slot order is fixed library-wide: rotation first, then the K translations.
class TangentVector {
 public:
  TangentVector() : TangentVector(0) {}
  /// Zero vector for the given K.
  explicit TangentVector(int k);
  /// Wraps raw coordinates; size must be a positive multiple of 3.
  explicit TangentVector(VecX coords);
  TangentVector(const Vec3& phi, const Mat3X& t);

  [[nodiscard]] static TangentVector zero(int k) { return TangentVector(k); }
  /// e_i, i in [0, 3(K+1)).
  [[nodiscard]] static TangentVector basis(int k, int i);

  [[nodiscard]] int k() const noexcept { return static_cast<int>(coords_.size() / 3) - 1; }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(coords_.size()); }

  [[nodiscard]] auto phi() const { return coords_.head<3>(); }
  [[nodiscard]] auto phi() { return coords_.head<3>(); }
  /// Translation slot j in [0, K).
  [[nodiscard]] auto t(int j) const { return coords_.segment<3>(3 + 3 * j); }
  [[nodiscard]] auto t(int j) { return coords_.segment<3>(3 + 3 * j); }
  [[nodiscard]] double theta() const { return phi().norm(); }

  [[nodiscard]] const VecX& coords() const noexcept { return coords_; }
  [[nodiscard]] VecX& coords() noexcept { return coords_; }

  TangentVector operator-() const { return TangentVector(VecX(-coords_)); }
  TangentVector& operator+=(const TangentVector& o);
  TangentVector& operator-=(const TangentVector& o);
  TangentVector& operator*=(double s) {
    coords_ *= s;
    return *this;
  }

  friend TangentVector operator+(TangentVector a, const TangentVector& b) { return a += b; }
  friend TangentVector operator-(TangentVector a, const TangentVector& b) { return a -= b; }
  friend TangentVector operator*(double s, TangentVector a) { return a *= s; }
  friend TangentVector operator*(TangentVector a, double s) { return a *= s; }
  friend bool operator==(const TangentVector& a, const TangentVector& b) {
    return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
  }

 private:
  VecX coords_;
};

/// An element of SE_K(3): rotation R plus K translation-like 3-vectors.
/// Stored structurally; embedding() materializes the (K+3)x(K+3) matrix.
class GroupElement {
 public:
  GroupElement() : GroupElement(0) {}
  /// Identity for the given K.
  explicit GroupElement(int k);
  GroupElement(const Mat3& r, const Mat3X& p);

  [[nodiscard]] static GroupElement identity(int k) { return GroupElement(k); }
  /// Reads the block structure of a dense embedding; throws MalformedAlgebra
  /// if the bottom rows are not [0 | I_K] within 1e-9.
  [[nodiscard]] static GroupElement from_embedding(const MatX& m);

  [[nodiscard]] int k() const noexcept { return static_cast<int>(p_.cols()); }
  [[nodiscard]] const Mat3& rotation() const noexcept { return r_; }
  [[nodiscard]] const Mat3X& translations() const noexcept { return p_; }
  [[nodiscard]] auto translation(int j) const { return p_.col(j); }

  [[nodiscard]] MatX embedding() const;

 private:
  Mat3 r_;
  Mat3X p_;
};

using AlgebraMatrix = MatX;

[[nodiscard]] GroupElement compose(const GroupElement& a, const GroupElement& b);
[[nodiscard]] GroupElement inverse(const GroupElement& g);

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return compose(a, b); }

/// The hat map: (K+3)x(K+3) algebra matrix of xi.
[[nodiscard]] AlgebraMatrix hat(const TangentVector& xi);
/// Inverse of hat; throws MalformedAlgebra unless the top-left block is skew
/// and every row below the third is zero (within 1e-9).
[[nodiscard]] TangentVector vee(const AlgebraMatrix& s);

/// Generator G_i = hat(e_i), i in [0, 3(K+1)).
[[nodiscard]] AlgebraMatrix generator(int k, int i);

/// Lie bracket in coordinates: vee([hat(a), hat(b)]).
[[nodiscard]] TangentVector bracket(const TangentVector& a, const TangentVector& b);

/// Closed-form exponential: R = exp_so3(phi), p_k = J_l(phi) t_k.
[[nodiscard]] GroupElement exp(const TangentVector& xi);
/// Principal-branch logarithm: phi = log_so3(R), t_k = J_l^-1(phi) p_k.
[[nodiscard]] TangentVector log(const GroupElement& g);

/// Group action on R^3 with parameters gamma: R b + sum_i gamma_i p_i.
[[nodiscard]] Vec3 act(const GroupElement& g, const Vec3& b, std::span<const double> gamma);

/// Embedding-level closed form I + S + c2 S^2 + c3 S^3 with S = hat(xi).
[[nodiscard]] MatX exp_embedding_closed_form(const TangentVector& xi);

/// True when the rotation block passes the SO(3) orthogonality and determinant checks.
[[nodiscard]] bool is_valid(const GroupElement& g, double tol = 1e-9);

}  // namespace sek3
