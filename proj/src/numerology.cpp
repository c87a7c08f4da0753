#include "wpi/numerology.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wpi {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

long long exact_div(long long a, long long b) {
  if (a % b != 0) throw std::logic_error("numerology: non-integer intermediate");
  return a / b;
}

}  // namespace

long long euler(EulerKind kind, int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("euler: need n >= 0, d >= 1");
  switch (kind) {
    case EulerKind::Pn:
      return n + 1;
    case EulerKind::Hyp:
      return n + 1 + exact_div(ipow(1 - d, n + 1) - 1, d);
    case EulerKind::Ci:
      return n + 1 + (n - 1) * ipow(1 - d, n) + exact_div(2 * (ipow(1 - d, n) - 1), d);
    case EulerKind::H:
      return 3 * euler(EulerKind::Pn, n, d) - 2 * euler(EulerKind::Hyp, n, 3 * d);
    case EulerKind::HH:
      return 3 * euler(EulerKind::Hyp, n, 3 * d) - 2 * euler(EulerKind::Ci, n, 3 * d);
  }
  throw std::invalid_argument("euler: unknown kind");
}

DegreeReport degrees(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("degrees: need n >= 1, d >= 1");
  const long long D = 3LL * d - 1;
  const long long Dn = ipow(D, n);
  const long long M = 2 * Dn;  // |I_{n,d}|
  DegreeReport r;
  r.n = n;
  r.d = d;
  r.deg_p = (n + 1) * M;
  r.deg_z_p = M;
  r.deg_q = (2 * n + 1) * M * (M - 1);
  r.wdeg_p = 2LL * 3 * d * Dn;
  r.wdeg_q = r.wdeg_p * (M - 1);
  r.deg_v_q = 2LL * 3 * d * ipow(D, n - 1) * (M - 1);
  r.deg_c = (2LL * n * D - 1) * 2 * ipow(D, n - 1) * (M - 1);
  return r;
}

std::string DegreeReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["d"] = d;
  j["deg_p"] = deg_p;
  j["deg_z_p"] = deg_z_p;
  j["deg_q"] = deg_q;
  j["wdeg_p"] = wdeg_p;
  j["wdeg_q"] = wdeg_q;
  j["deg_v_q"] = deg_v_q;
  j["deg_c"] = deg_c;
  return j.dump(2);
}

BalanceReport verify_balance(int n_max, int d_max) {
  if (n_max < 1 || d_max < 1) throw std::invalid_argument("verify_balance: bounds must be >= 1");
  BalanceReport rep;
  auto fail = [&rep](int n, int d, const std::string& what) {
    rep.ok = false;
    std::ostringstream os;
    os << "(n=" << n << ",d=" << d << ") " << what;
    rep.violations.push_back(os.str());
  };
  for (int n = 1; n <= n_max; ++n)
    for (int d = 1; d <= d_max; ++d) {
      DegreeReport r = degrees(n, d);
      const long long sgn = (n % 2 == 0) ? 1 : -1;
      long long lhs1 = sgn * (2 * euler(EulerKind::Pn, n, d) - 4 * euler(EulerKind::Hyp, n, 3 * d) +
                              2 * euler(EulerKind::Ci, n, 3 * d));
      if (lhs1 != r.deg_p) fail(n, d, "euler balance for deg_p");
      long long lhs2 =
          sgn * (2 * euler(EulerKind::Pn, n, d) - 2 * euler(EulerKind::Pn, n - 1, d) -
                 2 * euler(EulerKind::Hyp, n, 3 * d) + 2 * euler(EulerKind::Hyp, n - 1, 3 * d));
      if (lhs2 != r.deg_z_p) fail(n, d, "euler balance for deg_z_p");
      if (r.deg_q != (r.deg_z_p - 1) * (2 * r.deg_p - r.deg_z_p))
        fail(n, d, "deg_q factorization");
      if (r.wdeg_q != r.wdeg_p * (r.deg_z_p - 1)) fail(n, d, "wdeg_q factorization");
      if (r.deg_c != r.deg_q - r.deg_v_q) fail(n, d, "deg_c difference");
      if (n >= 2 && r.deg_p - r.deg_z_p != (3LL * d - 1) * degrees(n - 1, d).deg_p)
        fail(n, d, "leading-coefficient bookkeeping");
    }
  return rep;
}

std::string BalanceReport::to_json() const {
  nlohmann::json j;
  j["ok"] = ok;
  j["violations"] = violations;
  return j.dump(2);
}

}  // namespace wpi
