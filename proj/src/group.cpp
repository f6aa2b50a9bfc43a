#include "sek3/group.hpp"

#include "sek3/so3.hpp"

#include <Eigen/LU>

#include <cmath>
#include <string>

namespace sek3 {

TangentVector::TangentVector(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "TangentVector: negative K");
  coords_ = VecX::Zero(3 * (k + 1));
}

TangentVector::TangentVector(VecX coords) : coords_(std::move(coords)) {
  if (coords_.size() < 3 || coords_.size() % 3 != 0) {
    throw Error(ErrorKind::DimensionMismatch,
                "TangentVector: size " + std::to_string(coords_.size()) +
                    " is not a positive multiple of 3");
  }
}

TangentVector::TangentVector(const Vec3& phi, const Mat3X& t) {
  coords_.resize(3 * (t.cols() + 1));
  coords_.head<3>() = phi;
  for (Eigen::Index j = 0; j < t.cols(); ++j) coords_.segment<3>(3 + 3 * j) = t.col(j);
}

TangentVector TangentVector::basis(int k, int i) {
  TangentVector e(k);
  if (i < 0 || i >= e.dim()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  e.coords_[i] = 1.0;
  return e;
}

TangentVector& TangentVector::operator+=(const TangentVector& o) {
  require_same_k(k(), o.k(), "TangentVector::operator+");
  coords_ += o.coords_;
  return *this;
}

TangentVector& TangentVector::operator-=(const TangentVector& o) {
  require_same_k(k(), o.k(), "TangentVector::operator-");
  coords_ -= o.coords_;
  return *this;
}

GroupElement::GroupElement(int k) : r_(Mat3::Identity()), p_(Mat3X::Zero(3, k)) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "GroupElement: negative K");
}

GroupElement::GroupElement(const Mat3& r, const Mat3X& p) : r_(r), p_(p) {}

GroupElement GroupElement::from_embedding(const MatX& m) {
  const Eigen::Index n = m.rows();
  if (n < 3 || m.cols() != n) {
    throw Error(ErrorKind::MalformedAlgebra, "embedding must be square with size >= 3");
  }
  const Eigen::Index k = n - 3;
  const double defect = m.bottomLeftCorner(k, 3).cwiseAbs().sum() +
                        (m.bottomRightCorner(k, k) - MatX::Identity(k, k)).cwiseAbs().sum();
  if (defect > 1e-9) {
    throw Error(ErrorKind::MalformedAlgebra, "embedding bottom rows are not [0 | I]");
  }
  return {m.topLeftCorner<3, 3>(), m.topRightCorner(3, k)};
}

MatX GroupElement::embedding() const {
  const int n = k() + 3;
  MatX m = MatX::Identity(n, n);
  m.topLeftCorner<3, 3>() = r_;
  m.topRightCorner(3, k()) = p_;
  return m;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  require_same_k(a.k(), b.k(), "compose");
  return {a.rotation() * b.rotation(), a.rotation() * b.translations() + a.translations()};
}

GroupElement inverse(const GroupElement& g) {
  const Mat3 rt = g.rotation().transpose();
  return {rt, -rt * g.translations()};
}

AlgebraMatrix hat(const TangentVector& xi) {
  const int k = xi.k();
  MatX s = MatX::Zero(k + 3, k + 3);
  s.topLeftCorner<3, 3>() = so3::hat3(xi.phi());
  for (int j = 0; j < k; ++j) s.block<3, 1>(0, 3 + j) = xi.t(j);
  return s;
}

TangentVector vee(const AlgebraMatrix& s) {
  const Eigen::Index n = s.rows();
  if (n < 3 || s.cols() != n) {
    throw Error(ErrorKind::MalformedAlgebra, "algebra matrix must be square with size >= 3");
  }
  const Mat3 w = s.topLeftCorner<3, 3>();
  if ((w + w.transpose()).norm() > 1e-9 || s.bottomRows(n - 3).cwiseAbs().sum() > 1e-9) {
    throw Error(ErrorKind::MalformedAlgebra, "matrix is not in se_K(3)");
  }
  const int k = static_cast<int>(n - 3);
  return TangentVector(Vec3{w(2, 1), w(0, 2), w(1, 0)}, s.topRightCorner(3, k));
}

AlgebraMatrix generator(int k, int i) { return hat(TangentVector::basis(k, i)); }

TangentVector bracket(const TangentVector& a, const TangentVector& b) {
  require_same_k(a.k(), b.k(), "bracket");
  TangentVector out(a.k());
  const Vec3 pa = a.phi();
  const Vec3 pb = b.phi();
  out.phi() = pa.cross(pb);
  for (int j = 0; j < a.k(); ++j) {
    out.t(j) = pa.cross(Vec3(b.t(j))) + Vec3(a.t(j)).cross(pb);
  }
  return out;
}

GroupElement exp(const TangentVector& xi) {
  const Vec3 phi = xi.phi();
  const Mat3 jl = so3::jl(phi);
  Mat3X p(3, xi.k());
  for (int j = 0; j < xi.k(); ++j) p.col(j) = jl * xi.t(j);
  return {so3::exp(phi), p};
}

TangentVector log(const GroupElement& g) {
  const Vec3 phi = so3::log(g.rotation());
  const Mat3 jl_inv = so3::jl_inv(phi);
  return TangentVector(phi, jl_inv * g.translations());
}

Vec3 act(const GroupElement& g, const Vec3& b, std::span<const double> gamma) {
  if (static_cast<int>(gamma.size()) != g.k()) {
    throw Error(ErrorKind::DimensionMismatch, "act: gamma length differs from K");
  }
  Vec3 out = g.rotation() * b;
  for (int j = 0; j < g.k(); ++j) out += gamma[j] * g.translation(j);
  return out;
}

MatX exp_embedding_closed_form(const TangentVector& xi) {
  const TrigSeries s = trig_series(xi.theta());
  const MatX a = hat(xi);
  const MatX a2 = a * a;
  return MatX::Identity(a.rows(), a.cols()) + a + s.c2 * a2 + s.c3 * (a2 * a);
}

bool is_valid(const GroupElement& g, double tol) {
  const Mat3& r = g.rotation();
  return so3::orthogonality_defect(r) <= tol && std::abs(r.determinant() - 1.0) <= tol &&
         g.translations().allFinite();
}

}  // namespace sek3
