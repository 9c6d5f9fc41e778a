#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace kfd::adapt {

/// Result of an adaptive integration: value, error estimate, and whether the
/// requested tolerance was met before the subdivision budget ran out.
struct Result {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1,1].
inline constexpr double kx[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kw[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double gw[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
void gk15(F& f, double a, double b, double& kres, double& gres) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double fk = 0.0, fg = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double fl = f(c - h * kx[i]);
    const double fr = f(c + h * kx[i]);
    fk += kw[i] * (fl + fr);
    if (i % 2 == 1) fg += gw[i / 2] * (fl + fr);
  }
  const double fc = f(c);
  fk += kw[7] * fc;
  fg += gw[3] * fc;
  kres = fk * h;
  gres = fg * h;
}

template <class F>
void refine(F& f, double a, double b, double tol, int depth, Result& out) {
  double k, g;
  gk15(f, a, b, k, g);
  const double err = std::abs(k - g);
  if (err <= tol || depth >= 48) {
    out.value += k;
    out.error += err;
    if (err > tol && depth >= 48) out.converged = false;
    return;
  }
  const double c = 0.5 * (a + b);
  refine(f, a, c, 0.5 * tol, depth + 1, out);
  refine(f, c, b, 0.5 * tol, depth + 1, out);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a,b].
template <class F>
Result integrate(F f, double a, double b, double tol = 1e-12) {
  Result out;
  if (a == b) return out;
  detail::refine(f, a, b, tol, 0, out);
  return out;
}

/// Integrate f over [a,inf) assuming algebraic decay: maps the tail beyond
/// `split` through u = split/x and integrates both pieces adaptively.
template <class F>
Result integrate_to_inf(F f, double a, double tol = 1e-12, double split = 1.0) {
  if (split < a) split = a;
  Result head;
  if (split > a) head = integrate(f, a, split, 0.5 * tol);
  auto tail = [&](double u) {
    const double x = split / u;
    return f(x) * x / u;  // dx = split/u^2 du = (x/u) du
  };
  Result tl = integrate(tail, 0.0, 1.0, 0.5 * tol);
  head.value += tl.value;
  head.error += tl.error;
  head.converged = head.converged && tl.converged;
  return head;
}

}  // namespace kfd::adapt
