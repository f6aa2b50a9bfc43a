#pragma once

#include "sek3/jacobians.hpp"

namespace sek3 {

/// Truncated Baker-Campbell-Hausdorff series for log(exp(a) exp(b)):
///   order 1: a + b
///   order 2: + 1/2 ad(a) b
///   order 3: + 1/12 ad(a)^2 b + 1/12 ad(b)^2 a
///   order 4: - 1/24 ad(b) ad(a)^2 b
/// Throws UnsupportedOrder outside 1..4.
[[nodiscard]] TangentVector bch(const TangentVector& a, const TangentVector& b, int order);

/// The same truncation evaluated with nested matrix commutators of hat(a), hat(b).
/// Independent route used to cross-check bch().
[[nodiscard]] TangentVector bch_commutator_form(const TangentVector& a, const TangentVector& b,
                                                int order);

enum class SmallArg { First, Second };

/// Linearized composition when one argument is small:
///   First:  J_l(b)^-1 a + b
///   Second: a + J_r(a)^-1 b
[[nodiscard]] TangentVector bch_first_order(const TangentVector& a, const TangentVector& b,
                                            SmallArg which_small);

/// exp(xi + delta) factored to first order:
///   Left:  exp(J_l(xi) delta) exp(xi)
///   Right: exp(xi) exp(J_r(xi) delta)
[[nodiscard]] GroupElement perturb(const TangentVector& xi, const TangentVector& delta, Side side);

/// First-order difference between exp(xi + delta) and exp(xi):
/// J_r(xi) delta approximates log(exp(xi)^-1 exp(xi + delta)),
/// J_l(xi) delta approximates log(exp(xi + delta) exp(xi)^-1).
[[nodiscard]] TangentVector group_difference(const TangentVector& xi, const TangentVector& delta,
                                             Side side);

}  // namespace sek3
