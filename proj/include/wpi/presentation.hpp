#ifndef WPI_PRESENTATION_HPP
#define WPI_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "wpi/lattice.hpp"

namespace wpi {

// One letter of a free-group word: generator id and exponent sign.
struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word cyclic_reduce(const Word& w);
Word word_pow(const Word& w, int e);

// True iff a and b, cyclically reduced, agree up to rotation, i.e. the
// relators are conjugate. With allow_inverse the inverse word also counts
// (the relation with sides swapped).
bool conjugate_relators(const Word& a, const Word& b, bool allow_inverse = true);

struct Relation {
  Word lhs;
  Word rhs;
  // relator lhs * rhs^-1, freely reduced
  Word relator() const { return free_reduce(concat(lhs, invert(rhs))); }
  // freely and cyclically reduced relator
  Word canonical() const { return cyclic_reduce(relator()); }
};

enum class Variant { Singularity, Discriminant, Moduli, Zariski, Elliptic, Fixture };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

struct PresentationMeta {
  int n = 0;
  int d = 1;
  Variant variant = Variant::Discriminant;
  int pact_exponent = 0;  // only meaningful for Moduli
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  PresentationMeta meta;
};

// Product of all generators in prec_kappa-ascending order; generator ids
// refer to the prec_0-sorted generator table of I_{n,d}.
Word delta_word(int n, int d, int kappa);

// Relation families i)-vi) over Gamma_{n,d}. Variant selects the subset:
// singularity i)-iii), discriminant i)-iv), moduli i)-vi).
// pact_exponent defaults to 3d. Moduli requires even d unless allow_odd_d.
Presentation build_presentation(int n, int d, Variant variant,
                                std::optional<int> pact_exponent = std::nullopt,
                                bool allow_odd_d = false);

// sigma_1..sigma_{l-1}: far commutation, braid, and
// sigma_1...sigma_{l-1} sigma_{l-1}...sigma_1 = 1.
Presentation build_zariski(int l);

// <s1,s2 | s1 s2 s1 = s2 s1 s2, (s1 s2)^6 = 1>
Presentation build_elliptic();

// Literal transcriptions of the small special cases:
// "n1d1", "n1d1_projective", "n1d2".
Presentation special_fixture(const std::string& case_id);

enum class SerialFormat { Json, Gap, Magma, Text };

std::string serialize(const Presentation& p, SerialFormat format);
Presentation parse_json(const std::string& text);

}  // namespace wpi

#endif
