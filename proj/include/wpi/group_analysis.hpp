#ifndef WPI_GROUP_ANALYSIS_HPP
#define WPI_GROUP_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wpi/presentation.hpp"

namespace wpi {

using Int = boost::multiprecision::cpp_int;

struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static IntegerMatrix identity(std::size_t nn);

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const IntegerMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

IntegerMatrix mat_mul(const IntegerMatrix& x, const IntegerMatrix& y);
IntegerMatrix mat_mod(const IntegerMatrix& x, const Int& m);
// exact inverse; requires det = +-1
IntegerMatrix mat_inverse_unimodular(const IntegerMatrix& x);
// inverse mod m; requires gcd(det, m) = 1
IntegerMatrix mat_inverse_mod(const IntegerMatrix& x, const Int& m);

struct SmithResult {
  std::vector<Int> diagonal;  // d1 | d2 | ... | dr, positive
  std::size_t rank = 0;
};

SmithResult smith_normal_form(const IntegerMatrix& m);

// Invariant factors of the abelianized group: nontrivial finite factors in
// divisibility order, followed by one 0 per infinite cyclic factor.
std::vector<Int> abelianization(const Presentation& p);

struct RepresentationReport {
  std::vector<bool> relation_ok;
  bool ok = false;
  std::string to_json() const;
};

RepresentationReport check_representation(const Presentation& p,
                                          const std::vector<IntegerMatrix>& images,
                                          std::optional<Int> modulus = std::nullopt);

// Order of the subgroup generated mod `modulus` by breadth-first closure.
// Throws std::runtime_error if the closure exceeds `cap` elements.
std::size_t matrix_group_closure(const std::vector<IntegerMatrix>& generators,
                                 const Int& modulus, std::size_t cap = 1u << 20);

struct CosetResult {
  bool exceeded = false;
  std::size_t index = 0;  // valid when !exceeded
};

// Deterministic HLT-style coset enumeration with explicit capacity.
CosetResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                         std::size_t max_cosets);

}  // namespace wpi

#endif
