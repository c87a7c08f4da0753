#ifndef WPI_POLYALG_HPP
#define WPI_POLYALG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wpi {

using BigInt = boost::multiprecision::cpp_int;

// Exact sparse polynomial over Z in a fixed ordered variable list.
// All arithmetic requires both operands to share the same variable list.
struct SparsePoly {
  std::vector<std::string> vars;
  std::map<std::vector<int>, BigInt> terms;  // exponent vector -> coefficient

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> v) : vars(std::move(v)) {}

  static SparsePoly constant(std::vector<std::string> v, const BigInt& c);
  static SparsePoly variable(std::vector<std::string> v, const std::string& name);

  bool is_zero() const { return terms.empty(); }
  int var_index(const std::string& name) const;  // throws on unknown name
  int degree(int var) const;                     // -1 for the zero polynomial
  void add_term(const std::vector<int>& exp, const BigInt& c);

  bool operator==(const SparsePoly& o) const { return vars == o.vars && terms == o.terms; }
};

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const BigInt& c);
SparsePoly poly_pow(const SparsePoly& a, int e);
SparsePoly derivative(const SparsePoly& a, int var);
BigInt evaluate(const SparsePoly& a, const std::vector<BigInt>& values);

// Exact division; throws std::domain_error if b does not divide a.
SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b);

// Coefficient of var^k as a polynomial in the remaining variables
// (same variable list, exponent 0 in var).
SparsePoly coefficient_of(const SparsePoly& a, int var, int k);

// Determinant of the Sylvester matrix in var, f rows first,
// by fraction-free Bareiss elimination. Res(f, c) = c^{deg f} for constant c.
SparsePoly sylvester_resultant(const SparsePoly& f, const SparsePoly& g, int var);

// Same determinant with prescribed formal degrees m >= deg f, n >= deg g:
// the resultant of f and g read as binary forms of those degrees (top
// coefficients may vanish).
SparsePoly sylvester_resultant_formal(const SparsePoly& f, const SparsePoly& g, int var,
                                      int m, int n);

// (-1)^{m(m-1)/2} Res(f, f') / lc, m = deg_var f >= 1.
SparsePoly discriminant(const SparsePoly& f, int var);

// f / gcd(f, f') for f univariate in var; primitive, positive leading coefficient.
SparsePoly squarefree_part(const SparsePoly& f, int var);

// Graded-lex term list [{"exp":[...],"coef":"..."}].
std::string poly_to_json(const SparsePoly& p);

struct SliceReport {
  int d = 0;
  std::uint64_t seed = 0;
  int z_degree_raw = -1;        // z-degree of disc_x(Delta); -1 when it vanishes
  int cusp_zdegree = -1;        // z-degree of the cusp factor Res(B, C + z x^{3d})
  int z_degree = -1;            // z-degree of disc_x(Delta) / cusp_factor^3
  int z_degree_squarefree = -1; // same, after removing repeated factors
  std::string to_json() const;
};

// Samples integer B (degree 2d) and C (degree 3d) in x from the seed and forms
// Delta = 4B^3 + 27(C + z x^{3d})^2. disc_x(Delta) splits off the cube of the
// cusp-fiber factor Res_x(B, C + z x^{3d}) (taken with formal degrees 2d, 3d so
// cusps at infinity are counted); the remaining factor is the discriminant of
// the surface family and its z-degree is the reported value, expected 2(3d-1).
SliceReport weierstrass_slice_zdegree(int d, std::uint64_t seed);

struct IdealCheckReport {
  bool verified = false;
  int steps_used = 0;
  std::size_t residue_terms = 0;  // terms left when not verified
  std::string to_json() const;
};

// Rewrites the cleared critical-value expression with the three critical-point
// substitution rules under a graded strategy; verified iff it reaches 0 within
// max_steps. perturb injects a wrong coefficient (2*lam0 -> 3*lam0) as a
// negative control.
IdealCheckReport critical_value_ideal_check(int n, int d, int max_steps,
                                            bool perturb = false);

}  // namespace wpi

#endif
