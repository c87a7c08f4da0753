#ifndef WPI_HL_HPP
#define WPI_HL_HPP

#include <complex>
#include <string>
#include <vector>

#include "wpi/lattice.hpp"

namespace wpi {

using Complex = std::complex<double>;

struct HLParams {
  int n = 1;
  int d = 1;
  std::vector<Complex> v;  // v_0 .. v_n
};

// v_0 = 1, consecutive ratio 0.01: positive real, of sufficiently distinct
// modulus for the nested-circle structure to be numerically clean.
HLParams canonical_hl(int n, int d, double v0 = 1.0, double ratio = 0.01);

struct CriticalValueTable {
  std::vector<std::pair<MultiIndex, Complex>> entries;
  std::string to_json() const;
  std::string to_csv() const;
};

// Closed form: value(i) = 2(-1)^{i_0} v_0^{3/2} - (3d-1) sum_k eta^{i_k} v_k^{3d/(3d-1)}
// with eta = exp(2 pi i/(3d-1)). Requires positive real v (canonical mode).
CriticalValueTable closed_form_values(const HLParams& p);

// Critical values of y^3 - 3 v_0 y + sum_k (x_k^{3d} - 3d v_k x_k) computed by
// direct substitution of the separated critical points; accepts complex v.
std::vector<Complex> brute_force_values(const HLParams& p);

bool verify_hl_match(const HLParams& p, double tol);
bool verify_root_of_unity_invariance(const HLParams& p, double tol);
bool verify_circles(const HLParams& p, double tol);

struct GParams {
  int n = 1;
  int d = 1;
  double lam = 0.0;              // coupling lambda
  double lam0 = 1.0;             // lambda_0
  std::vector<double> lam_i;     // lambda_1 .. lambda_{n-1}
  double lam_n = 1.0;            // lambda_n
  double lam_np = 0.0;           // lambda_n'
};

// Smallest positive root of
//   1 - 2 l^{3/2} lam0^{3/2} - (3d-1) l^{3d/(3d-1)} sum_i lam_i^{3d/(3d-1)} = 0
// by bisection to 1e-12 relative. Throws if the bracket has no sign change.
double lambda_crit(const GParams& g);

struct CriticalPoint {
  std::vector<Complex> coords;  // y, x_1 .. x_n
  Complex value;                // f at the point
  bool distinguished = false;   // continued from the all-positive-real seed
  bool converged = false;
  double residual = 0.0;        // ||grad f|| at the end
};

// Seeds the separated critical points at lambda = 0 and Newton-continues the
// gradient system to lam_target in steps of lambda_crit/200 (with halving).
std::vector<CriticalPoint> continue_critical_points(const GParams& g, double lam_target);

// The critical-value identity's right-hand side at a point:
// -2 lam0 y - (3d-1) lam_n x_n - lam_np x_n^{3d-1}/(3d-1) - (3d-1) sum lam_i x_i.
Complex critical_value_formula(const GParams& g, const CriticalPoint& pt);

// True iff continuation succeeds for every seed and the distinguished point
// has the critical value of largest modulus.
bool verify_largest(const GParams& g, double lam_target, double tol = 1e-8);

}  // namespace wpi

#endif
