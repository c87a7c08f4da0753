#include "wpi/polyalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace wpi {

SparsePoly SparsePoly::constant(std::vector<std::string> v, const BigInt& c) {
  SparsePoly p(std::move(v));
  if (c != 0) p.terms[std::vector<int>(p.vars.size(), 0)] = c;
  return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> v, const std::string& name) {
  SparsePoly p(std::move(v));
  std::vector<int> e(p.vars.size(), 0);
  e[p.var_index(name)] = 1;
  p.terms[e] = 1;
  return p;
}

int SparsePoly::var_index(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw std::invalid_argument("unknown variable: " + name);
  return static_cast<int>(it - vars.begin());
}

int SparsePoly::degree(int var) const {
  int deg = -1;
  for (const auto& [e, c] : terms) deg = std::max(deg, e[var]);
  return deg;
}

void SparsePoly::add_term(const std::vector<int>& exp, const BigInt& c) {
  if (c == 0) return;
  auto it = terms.find(exp);
  if (it == terms.end()) {
    terms.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

static void require_same_vars(const SparsePoly& a, const SparsePoly& b) {
  if (a.vars != b.vars) throw std::invalid_argument("variable lists differ");
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  require_same_vars(a, b);
  SparsePoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  require_same_vars(a, b);
  SparsePoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same_vars(a, b);
  SparsePoly r(a.vars);
  std::vector<int> e(a.vars.size());
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

SparsePoly operator*(const SparsePoly& a, const BigInt& c) {
  SparsePoly r(a.vars);
  if (c == 0) return r;
  for (const auto& [e, ca] : a.terms) r.terms[e] = ca * c;
  return r;
}

SparsePoly poly_pow(const SparsePoly& a, int e) {
  if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
  SparsePoly r = SparsePoly::constant(a.vars, 1);
  for (int k = 0; k < e; ++k) r = r * a;
  return r;
}

SparsePoly derivative(const SparsePoly& a, int var) {
  SparsePoly r(a.vars);
  for (const auto& [e, c] : a.terms) {
    if (e[var] == 0) continue;
    std::vector<int> ne = e;
    --ne[var];
    r.add_term(ne, c * e[var]);
  }
  return r;
}

BigInt evaluate(const SparsePoly& a, const std::vector<BigInt>& values) {
  if (values.size() != a.vars.size())
    throw std::invalid_argument("evaluate: one value per variable required");
  BigInt acc = 0;
  for (const auto& [e, c] : a.terms) {
    BigInt t = c;
    for (std::size_t k = 0; k < values.size(); ++k)
      for (int j = 0; j < e[k]; ++j) t *= values[k];
    acc += t;
  }
  return acc;
}

// graded lexicographic: higher total degree first, ties by lex on exponents
static bool grlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  long ta = std::accumulate(a.begin(), a.end(), 0L);
  long tb = std::accumulate(b.begin(), b.end(), 0L);
  if (ta != tb) return ta < tb;
  return a < b;
}

static std::map<std::vector<int>, BigInt>::const_iterator leading_term(const SparsePoly& p) {
  auto best = p.terms.begin();
  for (auto it = p.terms.begin(); it != p.terms.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return best;
}

SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b) {
  require_same_vars(a, b);
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  SparsePoly rem = a, quot(a.vars);
  auto ltb = leading_term(b);
  while (!rem.is_zero()) {
    auto lta = leading_term(rem);
    std::vector<int> qe(rem.vars.size());
    for (std::size_t k = 0; k < qe.size(); ++k) {
      qe[k] = lta->first[k] - ltb->first[k];
      if (qe[k] < 0) throw std::domain_error("divide_exact: inexact division");
    }
    if (lta->second % ltb->second != 0)
      throw std::domain_error("divide_exact: inexact division");
    SparsePoly t(a.vars);
    t.terms[qe] = lta->second / ltb->second;
    quot = quot + t;
    rem = rem - t * b;
  }
  return quot;
}

SparsePoly coefficient_of(const SparsePoly& a, int var, int k) {
  SparsePoly r(a.vars);
  for (const auto& [e, c] : a.terms) {
    if (e[var] != k) continue;
    std::vector<int> ne = e;
    ne[var] = 0;
    r.terms[ne] = c;
  }
  return r;
}

SparsePoly sylvester_resultant_formal(const SparsePoly& f, const SparsePoly& g, int var,
                                      int m, int n) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("sylvester_resultant: zero polynomial input");
  if (m < f.degree(var) || n < g.degree(var))
    throw std::invalid_argument("sylvester_resultant: formal degree below actual degree");
  const int N = m + n;
  SparsePoly zero(f.vars), one = SparsePoly::constant(f.vars, 1);
  if (N == 0) return one;
  std::vector<std::vector<SparsePoly>> M(N, std::vector<SparsePoly>(N, zero));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + k] = coefficient_of(f, var, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[n + r][r + k] = coefficient_of(g, var, n - k);

  // fraction-free Bareiss elimination
  int sign = 1;
  SparsePoly prev = one;
  for (int k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (!M[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return zero;
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j)
        M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = zero;
    }
    prev = M[k][k];
  }
  SparsePoly det = M[N - 1][N - 1];
  return sign < 0 ? zero - det : det;
}

SparsePoly sylvester_resultant(const SparsePoly& f, const SparsePoly& g, int var) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("sylvester_resultant: zero polynomial input");
  return sylvester_resultant_formal(f, g, var, f.degree(var), g.degree(var));
}

SparsePoly discriminant(const SparsePoly& f, int var) {
  const int m = f.degree(var);
  if (m < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
  SparsePoly df = derivative(f, var);
  SparsePoly zero(f.vars);
  SparsePoly res = df.is_zero() ? zero : sylvester_resultant(f, df, var);
  if (res.is_zero()) return res;
  SparsePoly lc = coefficient_of(f, var, m);
  SparsePoly q = divide_exact(res, lc);
  return (m * (m - 1) / 2) % 2 ? zero - q : q;
}

// --- univariate helpers over Z ------------------------------------------

namespace {

std::vector<BigInt> to_coeffs(const SparsePoly& f, int var) {
  for (const auto& [e, c] : f.terms)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (static_cast<int>(k) != var && e[k] != 0)
        throw std::invalid_argument("expected a univariate polynomial");
  std::vector<BigInt> v(std::max(0, f.degree(var)) + 1);
  for (const auto& [e, c] : f.terms) v[e[var]] = c;
  return v;
}

void trim(std::vector<BigInt>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

BigInt content(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
  return g;
}

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = content(v);
  if (g == 0) return;
  if (v.back() < 0) g = -g;
  for (auto& c : v) c /= g;
}

// pseudo-remainder of a by b (deg a >= deg b >= 0)
std::vector<BigInt> prem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const BigInt lb = b.back();
  while (a.size() >= b.size()) {
    BigInt la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= la * b[k];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

std::vector<BigInt> primitive_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
  trim(a);
  trim(b);
  if (a.empty()) {
    make_primitive(b);
    return b;
  }
  if (b.empty()) {
    make_primitive(a);
    return a;
  }
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<BigInt> r = prem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

SparsePoly from_coeffs(const std::vector<BigInt>& v, const std::vector<std::string>& vars,
                       int var) {
  SparsePoly p(vars);
  std::vector<int> e(vars.size(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    e[var] = static_cast<int>(k);
    p.add_term(e, v[k]);
  }
  return p;
}

}  // namespace

SparsePoly squarefree_part(const SparsePoly& f, int var) {
  std::vector<BigInt> a = to_coeffs(f, var);
  trim(a);
  if (a.empty()) return SparsePoly(f.vars);
  if (a.size() == 1) return SparsePoly::constant(f.vars, 1);
  std::vector<BigInt> da(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) da[k - 1] = a[k] * static_cast<int>(k);
  std::vector<BigInt> g = primitive_gcd(a, da);
  make_primitive(a);
  SparsePoly q = divide_exact(from_coeffs(a, f.vars, var), from_coeffs(g, f.vars, var));
  if (leading_term(q)->second < 0) q = SparsePoly(f.vars) - q;
  return q;
}

std::string poly_to_json(const SparsePoly& p) {
  std::vector<const std::map<std::vector<int>, BigInt>::value_type*> order;
  for (const auto& t : p.terms) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return grlex_less(b->first, a->first); });
  nlohmann::json j;
  j["vars"] = p.vars;
  auto& ts = j["terms"] = nlohmann::json::array();
  for (auto* t : order)
    ts.push_back({{"exp", t->first}, {"coef", t->second.str()}});
  return j.dump(2);
}

// --- Weierstrass slice experiment ----------------------------------------

std::string SliceReport::to_json() const {
  nlohmann::json j;
  j["d"] = d;
  j["seed"] = seed;
  j["z_degree_raw"] = z_degree_raw;
  j["cusp_zdegree"] = cusp_zdegree;
  j["z_degree"] = z_degree;
  j["z_degree_squarefree"] = z_degree_squarefree;
  return j.dump(2);
}

SliceReport weierstrass_slice_zdegree(int d, std::uint64_t seed) {
  if (d < 1 || d % 2 != 0)
    throw std::invalid_argument("weierstrass_slice_zdegree: d must be even and positive");
  const std::vector<std::string> vars{"x", "z"};
  std::mt19937_64 rng(seed);
  // portable draw: uniform on [-9, 9] without distribution objects
  auto draw = [&rng]() { return static_cast<int>(rng() % 19) - 9; };
  SparsePoly B(vars), C(vars);
  for (int k = 0; k <= 2 * d; ++k) B.add_term({k, 0}, draw());
  for (int k = 0; k <= 3 * d; ++k) C.add_term({k, 0}, draw());
  SparsePoly zx(vars);
  zx.add_term({3 * d, 1}, 1);
  SparsePoly Delta = poly_pow(B, 3) * BigInt(4) + poly_pow(C + zx, 2) * BigInt(27);

  SliceReport rep;
  rep.d = d;
  rep.seed = seed;
  const int xv = Delta.var_index("x"), zv = Delta.var_index("z");
  SparsePoly disc = discriminant(Delta, xv);
  rep.z_degree_raw = disc.degree(zv);
  if (disc.is_zero()) return rep;

  // cusp fibers (B and C + z x^{3d} with a common root, including at infinity)
  // contribute a cubed factor to disc that is not part of the discriminant of
  // the surface family; divide it out
  SparsePoly cusp = sylvester_resultant_formal(B, C + zx, xv, 2 * d, 3 * d);
  rep.cusp_zdegree = cusp.degree(zv);
  SparsePoly surface = disc;
  try {
    for (int k = 0; k < 3; ++k) surface = divide_exact(surface, cusp);
  } catch (const std::domain_error&) {
    surface = disc;  // degenerate sample: report the raw factor
  }
  rep.z_degree = surface.degree(zv);
  rep.z_degree_squarefree = squarefree_part(surface, zv).degree(zv);
  return rep;
}

// --- critical value identity by rewriting --------------------------------

std::string IdealCheckReport::to_json() const {
  nlohmann::json j;
  j["verified"] = verified;
  j["steps_used"] = steps_used;
  j["residue_terms"] = residue_terms;
  return j.dump(2);
}

IdealCheckReport critical_value_ideal_check(int n, int d, int max_steps, bool perturb) {
  if (n < 1 || d < 1)
    throw std::invalid_argument("critical_value_ideal_check: need n >= 1, d >= 1");
  const int D = 3 * d - 1;

  // variables: geometric y, x_1..x_n, then parameters
  std::vector<std::string> vars{"y"};
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  vars.push_back("lam");
  vars.push_back("lam0");
  for (int i = 1; i < n; ++i) vars.push_back("lam" + std::to_string(i));
  vars.push_back("lamn");
  vars.push_back("lamnp");

  auto V = [&](const std::string& s) { return SparsePoly::variable(vars, s); };
  auto K = [&](long c) { return SparsePoly::constant(vars, c); };
  SparsePoly y = V("y"), xn = V("x" + std::to_string(n));
  SparsePoly lam = V("lam"), lam0 = V("lam0"), lamn = V("lamn"), lamnp = V("lamnp");
  std::vector<SparsePoly> xi, lami;  // positions 1..n-1
  for (int i = 1; i < n; ++i) {
    xi.push_back(V("x" + std::to_string(i)));
    lami.push_back(V("lam" + std::to_string(i)));
  }

  // (3d-1) * f, denominator of the lamnp-term cleared
  SparsePoly f3 = (poly_pow(y, 3) - lam0 * y * BigInt(3)) * BigInt(D);
  for (int i = 0; i + 1 < n; ++i)
    f3 = f3 + (poly_pow(xi[i], 3 * d) - lami[i] * xi[i] * BigInt(3 * d)) * BigInt(D);
  f3 = f3 + (poly_pow(xn, 3 * d) - lamn * xn * BigInt(3 * d)) * BigInt(D);
  f3 = f3 - lamnp * poly_pow(xn, D) * BigInt(3 * d);
  SparsePoly mixed = lam0 * y * poly_pow(xn, 2 * d);
  for (int i = 0; i + 1 < n; ++i) mixed = mixed + lami[i] * xi[i] * poly_pow(xn, D) * BigInt(d);
  f3 = f3 - lam * mixed * BigInt(3 * D);

  SparsePoly E = f3 + lam0 * y * BigInt((perturb ? 3 : 2) * D) +
                 lamn * xn * BigInt(D * D) + lamnp * poly_pow(xn, D);
  for (int i = 0; i + 1 < n; ++i) E = E + lami[i] * xi[i] * BigInt(D * D);

  // substitution rules for the geometric powers at critical points
  SparsePoly rule_y = lam0 * (K(1) + lam * poly_pow(xn, 2 * d));  // replaces y^2
  std::vector<SparsePoly> rule_xi;                                // replaces x_i^{3d-1}
  for (int i = 0; i + 1 < n; ++i)
    rule_xi.push_back(lami[i] * (K(1) + lam * poly_pow(xn, D)));
  SparsePoly inner = lam0 * y * poly_pow(xn, 2 * d - 1) * BigInt(2);
  for (int i = 0; i + 1 < n; ++i)
    inner = inner + lami[i] * xi[i] * poly_pow(xn, 3 * d - 2) * BigInt(D);
  SparsePoly rule_xn = lamn + lamnp * poly_pow(xn, 3 * d - 2) + lam * inner;

  const int ngeo = n + 1;  // y, x_1..x_n occupy positions 0..n
  auto reducible = [&](const std::vector<int>& e) {
    if (e[0] >= 2) return true;
    for (int i = 1; i < ngeo; ++i)
      if (e[i] >= D) return true;
    return false;
  };

  IdealCheckReport rep;
  for (int step = 0; step < max_steps; ++step) {
    // choose the reducible monomial maximal by geometric degree, then by
    // fewest distinct geometric variables, then lexicographically
    const std::vector<int>* pick = nullptr;
    long best_deg = -1;
    int best_distinct = 0;
    for (const auto& [e, c] : E.terms) {
      if (!reducible(e)) continue;
      long deg = 0;
      int distinct = 0;
      for (int i = 0; i < ngeo; ++i) {
        deg += e[i];
        if (e[i] > 0) ++distinct;
      }
      bool better = pick == nullptr || deg > best_deg ||
                    (deg == best_deg && distinct < best_distinct) ||
                    (deg == best_deg && distinct == best_distinct && *pick < e);
      if (better) {
        pick = &e;
        best_deg = deg;
        best_distinct = distinct;
      }
    }
    if (!pick) break;
    std::vector<int> e = *pick;
    BigInt c = E.terms.at(e);
    const SparsePoly* rule = nullptr;
    if (e[0] >= 2) {
      e[0] -= 2;
      rule = &rule_y;
    } else {
      for (int i = 1; i < ngeo && !rule; ++i)
        if (e[i] >= D) {
          e[i] -= D;
          rule = (i == n) ? &rule_xn : &rule_xi[i - 1];
        }
    }
    SparsePoly mono(vars);
    mono.terms[e] = c;
    E.terms.erase(*pick);
    E = E + mono * *rule;
    rep.steps_used = step + 1;
  }

  rep.verified = E.is_zero();
  rep.residue_terms = E.terms.size();
  return rep;
}

}  // namespace wpi
