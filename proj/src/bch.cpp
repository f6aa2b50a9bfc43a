#include "sek3/bch.hpp"

#include <string>

namespace sek3 {

namespace {

void check_order(int order) {
  if (order < 1 || order > 4) {
    throw Error(ErrorKind::UnsupportedOrder,
                "bch: order " + std::to_string(order) + " not in 1..4");
  }
}

MatX commutator(const MatX& x, const MatX& y) { return x * y - y * x; }

}  // namespace

TangentVector bch(const TangentVector& a, const TangentVector& b, int order) {
  require_same_k(a.k(), b.k(), "bch");
  check_order(order);
  VecX z = a.coords() + b.coords();
  if (order >= 2) {
    const AdjointMatrix la = small_adjoint(a);
    const VecX lab = la * b.coords();
    z += 0.5 * lab;
    if (order >= 3) {
      const AdjointMatrix lb = small_adjoint(b);
      const VecX laab = la * lab;
      z += (laab + lb * (lb * a.coords())) / 12.0;
      if (order >= 4) z -= lb * laab / 24.0;
    }
  }
  return TangentVector(std::move(z));
}

TangentVector bch_commutator_form(const TangentVector& a, const TangentVector& b, int order) {
  require_same_k(a.k(), b.k(), "bch_commutator_form");
  check_order(order);
  const MatX x = hat(a);
  const MatX y = hat(b);
  MatX z = x + y;
  if (order >= 2) {
    const MatX xy = commutator(x, y);
    z += 0.5 * xy;
    if (order >= 3) {
      const MatX x_xy = commutator(x, xy);
      z += (x_xy - commutator(y, xy)) / 12.0;
      if (order >= 4) z -= commutator(y, x_xy) / 24.0;
    }
  }
  return vee(z);
}

TangentVector bch_first_order(const TangentVector& a, const TangentVector& b,
                              SmallArg which_small) {
  require_same_k(a.k(), b.k(), "bch_first_order");
  if (which_small == SmallArg::First) {
    return TangentVector(VecX(jacobian_inverse(b, Side::Left) * a.coords())) + b;
  }
  return a + TangentVector(VecX(jacobian_inverse(a, Side::Right) * b.coords()));
}

GroupElement perturb(const TangentVector& xi, const TangentVector& delta, Side side) {
  require_same_k(xi.k(), delta.k(), "perturb");
  const TangentVector step(VecX(jacobian(xi, side) * delta.coords()));
  return side == Side::Left ? compose(exp(step), exp(xi)) : compose(exp(xi), exp(step));
}

TangentVector group_difference(const TangentVector& xi, const TangentVector& delta, Side side) {
  require_same_k(xi.k(), delta.k(), "group_difference");
  return TangentVector(VecX(jacobian(xi, side) * delta.coords()));
}

}  // namespace sek3
