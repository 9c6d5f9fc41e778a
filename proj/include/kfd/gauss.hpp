#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace kfd::gauss {

/// Nodes and weights of a Gauss rule. The reference interval depends on the
/// factory: [-1,1] for legendre/jacobi, [0,1] for the *01 variants, [0,inf)
/// for laguerre.
struct Rule {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};

namespace detail {

// Implicit-shift QL on a symmetric tridiagonal Jacobi matrix, accumulating
// only the first row of the eigenvector matrix (Golub-Welsch). d holds the
// diagonal, e the subdiagonal (e[0..n-2]), z starts as e_1.
inline bool symtri_ql(std::vector<double>& d, std::vector<double>& e,
                      std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return true;
  const double ulp = std::numeric_limits<double>::epsilon();
  e.resize(n, 0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      while (m < n - 1 &&
             std::abs(e[m]) > ulp * (std::abs(d[m]) + std::abs(d[m + 1])))
        ++m;
      if (m == l) break;
      if (++iter > 64) return false;
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  return true;
}

// Golub-Welsch from the three-term recurrence of the monic orthogonal
// polynomials: diag[k] = alpha_k, sub[k] = sqrt(beta_{k+1}), mu0 = beta_0.
inline Rule golub_welsch(std::vector<double> diag, std::vector<double> sub,
                         double mu0) {
  const std::size_t n = diag.size();
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  if (!symtri_ql(diag, sub, z))
    throw std::runtime_error("gauss: tridiagonal QL failed to converge");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
  Rule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rule.x[i] = diag[idx[i]];
    rule.w[i] = mu0 * z[idx[i]] * z[idx[i]];
  }
  return rule;
}

}  // namespace detail

/// Gauss-Jacobi rule on [-1,1] for the weight (1-x)^a (1+x)^b, a,b > -1.
inline Rule jacobi(std::size_t n, double a, double b) {
  if (n == 0) throw std::invalid_argument("gauss::jacobi: n must be positive");
  if (a <= -1.0 || b <= -1.0)
    throw std::invalid_argument("gauss::jacobi: exponents must be > -1");
  const double apb = a + b;
  std::vector<double> diag(n), sub(n > 1 ? n - 1 : 0);
  diag[0] = (b - a) / (apb + 2.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double den = (2.0 * kk + apb) * (2.0 * kk + apb + 2.0);
    diag[k] = (b * b - a * a) / den;
  }
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    double beta;
    if (k == 1) {
      beta = 4.0 * (a + 1.0) * (b + 1.0) /
             ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
    } else {
      const double t = 2.0 * kk + apb;
      beta = 4.0 * kk * (kk + a) * (kk + b) * (kk + apb) /
             (t * t * (t + 1.0) * (t - 1.0));
    }
    sub[k - 1] = std::sqrt(beta);
  }
  const double mu0 = std::pow(2.0, apb + 1.0) *
                     std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(apb + 2.0));
  return detail::golub_welsch(std::move(diag), std::move(sub), mu0);
}

/// Gauss-Legendre rule on [-1,1].
inline Rule legendre(std::size_t n) { return jacobi(n, 0.0, 0.0); }

/// Gauss-Legendre rule mapped to [0,1].
inline Rule legendre01(std::size_t n) {
  Rule r = legendre(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.x[i] = 0.5 * (r.x[i] + 1.0);
    r.w[i] *= 0.5;
  }
  return r;
}

/// Gauss-Jacobi rule on [0,1] for the weight (1-u)^a u^b:
///   int_0^1 h(u) (1-u)^a u^b du = sum_i w_i h(x_i).
inline Rule jacobi01(std::size_t n, double a, double b) {
  Rule r = jacobi(n, a, b);
  const double scale = std::pow(2.0, -(a + b + 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    r.x[i] = 0.5 * (r.x[i] + 1.0);
    r.w[i] *= scale;
  }
  return r;
}

/// Gauss-Laguerre rule for int_0^inf h(z) e^{-z} dz.
inline Rule laguerre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss::laguerre: n must be positive");
  std::vector<double> diag(n), sub(n > 1 ? n - 1 : 0);
  for (std::size_t k = 0; k < n; ++k) diag[k] = 2.0 * static_cast<double>(k) + 1.0;
  for (std::size_t k = 1; k < n; ++k) sub[k - 1] = static_cast<double>(k);
  return detail::golub_welsch(std::move(diag), std::move(sub), 1.0);
}

/// Shared cache for Jacobi-family rules; rule construction is O(n^2) and the
/// symbol/chi evaluators request the same rules repeatedly.
inline const Rule& cached_jacobi01(std::size_t n, double a, double b) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, double, double>,
                  std::unique_ptr<Rule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, a, b);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Rule>(jacobi01(n, a, b))).first;
  return *it->second;
}

inline const Rule& cached_legendre01(std::size_t n) {
  return cached_jacobi01(n, 0.0, 0.0);
}

inline const Rule& cached_laguerre(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<Rule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<Rule>(laguerre(n))).first;
  return *it->second;
}

/// Integrate f over [lo,hi] with an n-point Gauss-Legendre rule.
template <class F>
double integrate(F&& f, double lo, double hi, std::size_t n = 64) {
  const Rule& r = cached_legendre01(n);
  double acc = 0.0;
  const double len = hi - lo;
  for (std::size_t i = 0; i < r.size(); ++i)
    acc += r.w[i] * f(lo + len * r.x[i]);
  return acc * len;
}

}  // namespace kfd::gauss
