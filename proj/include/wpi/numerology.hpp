#ifndef WPI_NUMEROLOGY_HPP
#define WPI_NUMEROLOGY_HPP

#include <string>
#include <vector>

namespace wpi {

enum class EulerKind { Pn, Hyp, Ci, H, HH };

// Topological Euler numbers, exact closed forms:
//   Pn  e_n        = n+1
//   Hyp e_{n;d}    = n+1 + ((1-d)^{n+1} - 1)/d
//   Ci  e_{n;d,d}  = n+1 + (n-1)(1-d)^n + 2((1-d)^n - 1)/d
//   H   3 e_n - 2 e_{n;3d}
//   HH  3 e_{n;3d} - 2 e_{n;3d,3d}
long long euler(EulerKind kind, int n, int d);

struct DegreeReport {
  int n = 0, d = 0;
  long long deg_p = 0;
  long long deg_z_p = 0;
  long long deg_q = 0;
  long long wdeg_p = 0;
  long long wdeg_q = 0;
  long long deg_v_q = 0;
  long long deg_c = 0;
  std::string to_json() const;
};

// Discriminant degree formulas; n >= 1 (the n=0 boundary case is excluded).
DegreeReport degrees(int n, int d);

struct BalanceReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::string to_json() const;
};

// Checks, for all 1 <= n <= n_max, 1 <= d <= d_max:
//   (-1)^n (2e_n - 4e_{n;3d} + 2e_{n;3d,3d})            = deg_p
//   (-1)^n (2e_n - 2e_{n-1} - 2e_{n;3d} + 2e_{n-1;3d})  = deg_z_p
//   deg_q  = (deg_z_p - 1)(2 deg_p - deg_z_p)
//   wdeg_q = wdeg_p (deg_z_p - 1)
//   deg_c  = deg_q - deg_v_q
// and for n >= 2: deg_p - deg_z_p = (3d-1) deg_p(n-1, d).
BalanceReport verify_balance(int n_max, int d_max);

}  // namespace wpi

#endif
