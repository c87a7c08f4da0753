#include "wpi/hl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wpi {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex cpow_int(Complex b, int e) {
  Complex r = 1.0;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

bool positive_real(const Complex& z) { return z.imag() == 0.0 && z.real() > 0.0; }

// greedy nearest-neighbour injective matching of equal-size multisets
bool multiset_match(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Complex& x : a) {
    int best = -1;
    double bd = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (used[i]) continue;
      double dist = std::abs(x - b[i]);
      if (best < 0 || dist < bd) {
        best = static_cast<int>(i);
        bd = dist;
      }
    }
    if (best < 0 || bd > tol) return false;
    used[best] = true;
  }
  return true;
}

}  // namespace

HLParams canonical_hl(int n, int d, double v0, double ratio) {
  if (n < 0 || d < 1) throw std::invalid_argument("canonical_hl: need n >= 0, d >= 1");
  if (v0 <= 0.0 || ratio <= 0.0 || ratio > 0.01)
    throw std::invalid_argument("canonical_hl: need v0 > 0 and 0 < ratio <= 0.01");
  HLParams p;
  p.n = n;
  p.d = d;
  double v = v0;
  for (int k = 0; k <= n; ++k) {
    p.v.push_back(v);
    v *= ratio;
  }
  return p;
}

CriticalValueTable closed_form_values(const HLParams& p) {
  if (static_cast<int>(p.v.size()) != p.n + 1)
    throw std::invalid_argument("closed_form_values: need n+1 parameters");
  for (const Complex& v : p.v)
    if (!positive_real(v))
      throw std::domain_error("closed_form_values: canonical mode needs positive real v");
  const int D = 3 * p.d - 1;
  const Complex eta = std::polar(1.0, 2.0 * kPi / D);
  const double e = 3.0 * p.d / D;
  CriticalValueTable t;
  for (const MultiIndex& i : build_index_set(p.n, p.d)) {
    Complex val = 2.0 * (i.entries[0] == 2 ? 1.0 : -1.0) * std::pow(p.v[0].real(), 1.5);
    for (int k = 1; k <= p.n; ++k)
      val -= static_cast<double>(D) * cpow_int(eta, i.entries[k]) * std::pow(p.v[k].real(), e);
    t.entries.emplace_back(i, val);
  }
  return t;
}

std::vector<Complex> brute_force_values(const HLParams& p) {
  if (static_cast<int>(p.v.size()) != p.n + 1)
    throw std::invalid_argument("brute_force_values: need n+1 parameters");
  const int D = 3 * p.d - 1;
  Complex sq = std::sqrt(p.v[0]);
  auto g = [&](Complex y) { return y * y * y - 3.0 * p.v[0] * y; };
  std::vector<Complex> values{g(sq), g(-sq)};
  for (int k = 1; k <= p.n; ++k) {
    // the D roots of x^D = v_k
    double rad = std::pow(std::abs(p.v[k]), 1.0 / D);
    double arg0 = std::arg(p.v[k]) / D;
    std::vector<Complex> next;
    for (int j = 0; j < D; ++j) {
      Complex x = std::polar(rad, arg0 + 2.0 * kPi * j / D);
      Complex h = cpow_int(x, 3 * p.d) - 3.0 * p.d * p.v[k] * x;
      for (const Complex& base : values) next.push_back(base + h);
    }
    values = std::move(next);
  }
  return values;
}

bool verify_hl_match(const HLParams& p, double tol) {
  std::vector<Complex> closed;
  for (const auto& [i, v] : closed_form_values(p).entries) closed.push_back(v);
  return multiset_match(closed, brute_force_values(p), tol);
}

bool verify_root_of_unity_invariance(const HLParams& p, double tol) {
  std::vector<Complex> base = brute_force_values(p);
  // v_0 by all third roots of unity
  for (int j = 0; j < 3; ++j) {
    HLParams q = p;
    q.v[0] *= std::polar(1.0, 2.0 * kPi * j / 3.0);
    if (!multiset_match(base, brute_force_values(q), tol)) return false;
  }
  // each v_k by all 3d-th roots of unity
  for (int k = 1; k <= p.n; ++k)
    for (int j = 0; j < 3 * p.d; ++j) {
      HLParams q = p;
      q.v[k] *= std::polar(1.0, 2.0 * kPi * j / (3.0 * p.d));
      if (!multiset_match(base, brute_force_values(q), tol)) return false;
    }
  return true;
}

bool verify_circles(const HLParams& p, double tol) {
  if (p.n < 1) throw std::invalid_argument("verify_circles: need n >= 1");
  HLParams trunc = p;
  trunc.n = p.n - 1;
  trunc.v.pop_back();
  std::vector<Complex> centers = brute_force_values(trunc);
  const int D = 3 * p.d - 1;
  const double r = D * std::pow(std::abs(p.v[p.n]), 3.0 * p.d / D);
  for (const Complex& z : brute_force_values(p)) {
    double best = 0.0;
    bool first = true;
    for (const Complex& c : centers) {
      double res = std::abs(std::abs(z - c) - r);
      if (first || res < best) {
        best = res;
        first = false;
      }
    }
    if (first || best > tol) return false;
  }
  return true;
}

std::string CriticalValueTable::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [i, v] : entries)
    j.push_back({{"index", i.entries}, {"re", v.real()}, {"im", v.imag()}});
  return j.dump(2);
}

std::string CriticalValueTable::to_csv() const {
  std::ostringstream os;
  os << "index,re,im\n";
  for (const auto& [i, v] : entries)
    os << i.dotted() << "," << v.real() << "," << v.imag() << "\n";
  return os.str();
}

// --- family G -------------------------------------------------------------

namespace {

void check_gparams(const GParams& g) {
  if (g.n < 1 || g.d < 1) throw std::invalid_argument("GParams: need n >= 1, d >= 1");
  if (static_cast<int>(g.lam_i.size()) != g.n - 1)
    throw std::invalid_argument("GParams: need n-1 intermediate lambda_i");
  if (g.lam0 <= 0.0 || g.lam_n <= 0.0 || g.lam_np < 0.0)
    throw std::invalid_argument("GParams: need lam0 > 0, lam_n > 0, lam_np >= 0");
  for (double li : g.lam_i)
    if (li <= 0.0) throw std::invalid_argument("GParams: need lam_i > 0");
}

// monic polynomial roots via Durand-Kerner; coeffs[k] multiplies t^k, degree m
std::vector<Complex> durand_kerner(const std::vector<double>& coeffs, int m) {
  auto eval = [&](Complex t) {
    Complex acc = 1.0;
    for (int k = m - 1; k >= 0; --k) acc = acc * t + coeffs[k];
    return acc;
  };
  std::vector<Complex> z(m);
  const Complex s(0.4, 0.9);
  z[0] = s;
  for (int k = 1; k < m; ++k) z[k] = z[k - 1] * s;
  for (int it = 0; it < 1000; ++it) {
    double delta = 0.0;
    for (int k = 0; k < m; ++k) {
      Complex den = 1.0;
      for (int j = 0; j < m; ++j)
        if (j != k) den *= z[k] - z[j];
      Complex step = eval(z[k]) / den;
      z[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-14) break;
  }
  return z;
}

Complex eval_f(const GParams& g, const std::vector<Complex>& c) {
  const int n = g.n, d = g.d, D = 3 * d - 1;
  Complex y = c[0], xn = c[n];
  Complex f = cpow_int(y, 3) - 3.0 * g.lam0 * y;
  Complex mixed = g.lam0 * y * cpow_int(xn, 2 * d);
  for (int i = 1; i < n; ++i) {
    f += cpow_int(c[i], 3 * d) - 3.0 * d * g.lam_i[i - 1] * c[i];
    mixed += static_cast<double>(d) * g.lam_i[i - 1] * c[i] * cpow_int(xn, D);
  }
  f += cpow_int(xn, 3 * d) - 3.0 * d * g.lam_n * xn -
       (3.0 * d / D) * g.lam_np * cpow_int(xn, D);
  f -= 3.0 * g.lam * mixed;
  return f;
}

// gradient system F = 0 (scaled form matching the critical-point equations)
std::vector<Complex> eval_grad(const GParams& g, double lam, const std::vector<Complex>& c) {
  const int n = g.n, d = g.d, D = 3 * d - 1;
  Complex y = c[0], xn = c[n];
  std::vector<Complex> F(n + 1);
  F[0] = y * y - g.lam0 * (1.0 + lam * cpow_int(xn, 2 * d));
  for (int i = 1; i < n; ++i)
    F[i] = cpow_int(c[i], D) - g.lam_i[i - 1] * (1.0 + lam * cpow_int(xn, D));
  Complex tail = 2.0 * g.lam0 * y * cpow_int(xn, 2 * d - 1);
  for (int i = 1; i < n; ++i)
    tail += static_cast<double>(D) * g.lam_i[i - 1] * c[i] * cpow_int(xn, 3 * d - 2);
  F[n] = cpow_int(xn, D) - g.lam_n - g.lam_np * cpow_int(xn, 3 * d - 2) - lam * tail;
  return F;
}

std::vector<std::vector<Complex>> eval_jacobian(const GParams& g, double lam,
                                                const std::vector<Complex>& c) {
  const int n = g.n, d = g.d, D = 3 * d - 1;
  Complex y = c[0], xn = c[n];
  std::vector<std::vector<Complex>> J(n + 1, std::vector<Complex>(n + 1, 0.0));
  J[0][0] = 2.0 * y;
  J[0][n] = -2.0 * d * g.lam0 * lam * cpow_int(xn, 2 * d - 1);
  for (int i = 1; i < n; ++i) {
    J[i][i] = static_cast<double>(D) * cpow_int(c[i], 3 * d - 2);
    J[i][n] = -static_cast<double>(D) * lam * g.lam_i[i - 1] * cpow_int(xn, 3 * d - 2);
  }
  J[n][0] = -2.0 * lam * g.lam0 * cpow_int(xn, 2 * d - 1);
  for (int i = 1; i < n; ++i)
    J[n][i] = -static_cast<double>(D) * lam * g.lam_i[i - 1] * cpow_int(xn, 3 * d - 2);
  Complex dn = static_cast<double>(D) * cpow_int(xn, 3 * d - 2);
  if (3 * d - 2 >= 1) dn -= static_cast<double>(3 * d - 2) * g.lam_np * cpow_int(xn, 3 * d - 3);
  Complex tail = 2.0 * (2 * d - 1) * g.lam0 * y * cpow_int(xn, 2 * d - 2);
  for (int i = 1; i < n; ++i)
    tail += static_cast<double>(D) * (3 * d - 2) * g.lam_i[i - 1] * c[i] * cpow_int(xn, 3 * d - 3);
  J[n][n] = dn - lam * tail;
  return J;
}

// dense complex solve, partial pivoting; returns false on (near) singularity
bool solve_linear(std::vector<std::vector<Complex>> A, std::vector<Complex> b,
                  std::vector<Complex>& x) {
  const int m = static_cast<int>(b.size());
  for (int k = 0; k < m; ++k) {
    int piv = k;
    for (int i = k + 1; i < m; ++i)
      if (std::abs(A[i][k]) > std::abs(A[piv][k])) piv = i;
    if (std::abs(A[piv][k]) < 1e-300) return false;
    std::swap(A[k], A[piv]);
    std::swap(b[k], b[piv]);
    for (int i = k + 1; i < m; ++i) {
      Complex f = A[i][k] / A[k][k];
      for (int j = k; j < m; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  x.assign(m, 0.0);
  for (int k = m - 1; k >= 0; --k) {
    Complex s = b[k];
    for (int j = k + 1; j < m; ++j) s -= A[k][j] * x[j];
    x[k] = s / A[k][k];
  }
  return true;
}

double grad_norm(const std::vector<Complex>& F) {
  double r = 0.0;
  for (const Complex& f : F) r = std::max(r, std::abs(f));
  return r;
}

// Newton at fixed lambda; true if converged below tol
bool newton_refine(const GParams& g, double lam, std::vector<Complex>& c, double tol) {
  for (int it = 0; it < 50; ++it) {
    std::vector<Complex> F = eval_grad(g, lam, c);
    if (grad_norm(F) < tol) return true;
    std::vector<Complex> step;
    if (!solve_linear(eval_jacobian(g, lam, c), F, step)) return false;
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= step[k];
  }
  return grad_norm(eval_grad(g, lam, c)) < tol;
}

}  // namespace

double lambda_crit(const GParams& g) {
  check_gparams(g);
  const int D = 3 * g.d - 1;
  const double e = 3.0 * g.d / D;
  double s = 0.0;
  for (double li : g.lam_i) s += std::pow(li, e);
  auto phi = [&](double l) {
    return 1.0 - 2.0 * std::pow(l, 1.5) * std::pow(g.lam0, 1.5) - D * std::pow(l, e) * s;
  };
  double hi = 1.0;
  int guard = 0;
  while (phi(hi) > 0.0) {
    hi *= 2.0;
    if (++guard > 200) throw std::domain_error("lambda_crit: no sign change in bracket");
  }
  double lo = 0.0;
  while ((hi - lo) > 1e-12 * hi) {
    double mid = 0.5 * (lo + hi);
    (phi(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<CriticalPoint> continue_critical_points(const GParams& g, double lam_target) {
  check_gparams(g);
  const double lc = lambda_crit(g);
  if (lam_target < 0.0 || lam_target > 0.9 * lc)
    throw std::invalid_argument("continue_critical_points: lam_target out of regime");
  const int n = g.n, d = g.d, D = 3 * d - 1;
  const Complex eta = std::polar(1.0, 2.0 * kPi / D);

  // x_n seeds: roots of t^D - lam_np t^{D-1} - lam_n
  std::vector<double> coeffs(D, 0.0);
  coeffs[0] = -g.lam_n;
  coeffs[D - 1] = -g.lam_np;
  std::vector<Complex> xn_roots = durand_kerner(coeffs, D);
  int xn_pos = -1;
  for (int k = 0; k < D; ++k)
    if (std::abs(xn_roots[k].imag()) < 1e-8 * (1.0 + std::abs(xn_roots[k].real())) &&
        xn_roots[k].real() > 0.0 &&
        (xn_pos < 0 || xn_roots[k].real() > xn_roots[xn_pos].real()))
      xn_pos = k;

  // all seed combinations at lambda = 0
  std::vector<CriticalPoint> points;
  std::vector<int> radix(n + 1);  // y sign, eta powers for x_i, x_n root index
  radix[0] = 2;
  for (int i = 1; i < n; ++i) radix[i] = D;
  radix[n] = D;
  std::vector<int> idx(n + 1, 0);
  while (true) {
    CriticalPoint pt;
    pt.coords.resize(n + 1);
    pt.coords[0] = (idx[0] == 0 ? 1.0 : -1.0) * std::sqrt(g.lam0);
    for (int i = 1; i < n; ++i)
      pt.coords[i] = std::pow(g.lam_i[i - 1], 1.0 / D) * cpow_int(eta, idx[i]);
    pt.coords[n] = xn_roots[idx[n]];
    pt.distinguished = idx[0] == 0 && idx[n] == xn_pos;
    for (int i = 1; i < n && pt.distinguished; ++i)
      if (idx[i] != 0) pt.distinguished = false;
    points.push_back(std::move(pt));
    int pos = n;
    while (pos >= 0 && ++idx[pos] == radix[pos]) idx[pos--] = 0;
    if (pos < 0) break;
  }

  // Newton continuation in lambda
  const double base_step = lc / 200.0;
  for (CriticalPoint& pt : points) {
    GParams gl = g;
    double cur = 0.0;
    bool ok = true;
    // polish the seed at lambda = 0 first
    gl.lam = 0.0;
    ok = newton_refine(gl, 0.0, pt.coords, 1e-12);
    while (ok && cur < lam_target) {
      double step = std::min(base_step, lam_target - cur);
      std::vector<Complex> save = pt.coords;
      while (true) {
        gl.lam = cur + step;
        pt.coords = save;
        if (newton_refine(gl, gl.lam, pt.coords, 1e-12)) {
          cur += step;
          break;
        }
        step *= 0.5;
        if (step < 1e-10) {
          ok = false;
          break;
        }
      }
    }
    gl.lam = lam_target;
    pt.residual = grad_norm(eval_grad(gl, lam_target, pt.coords));
    pt.converged = ok && pt.residual < 1e-10;
    pt.value = eval_f(gl, pt.coords);
  }
  return points;
}

Complex critical_value_formula(const GParams& g, const CriticalPoint& pt) {
  const int n = g.n, D = 3 * g.d - 1;
  Complex xn = pt.coords[n];
  Complex v = -2.0 * g.lam0 * pt.coords[0] - static_cast<double>(D) * g.lam_n * xn -
              g.lam_np * cpow_int(xn, D) / static_cast<double>(D);
  for (int i = 1; i < n; ++i) v -= static_cast<double>(D) * g.lam_i[i - 1] * pt.coords[i];
  return v;
}

bool verify_largest(const GParams& g, double lam_target, double tol) {
  std::vector<CriticalPoint> pts = continue_critical_points(g, lam_target);
  const CriticalPoint* dist = nullptr;
  for (const CriticalPoint& pt : pts) {
    if (!pt.converged) return false;
    if (pt.distinguished) dist = &pt;
  }
  if (!dist) return false;
  double dm = std::abs(dist->value);
  for (const CriticalPoint& pt : pts)
    if (std::abs(pt.value) > dm + tol) return false;
  return true;
}

}  // namespace wpi
