#pragma once

#include <string>
#include <vector>

#include "simplexflows/words.hpp"

namespace simplexflows {

/// Action of a motion-group generator y_i^{+-1} on F3: y_i fixes a_i and
/// sends a_j to a_i a_j^{-1} for j != i (loop concatenation read right to
/// left). The inverse action sends a_j to a_j^{-1} a_i.
FreeWord apply_generator(int index, int power, const FreeWord& w);

/// Action of a word over {y1, y2, y3}; the map w -> automorphism is a
/// homomorphism, so the rightmost letter acts first.
FreeWord apply_word(const GroupWord& word, const FreeWord& w);

/// Generator images of the induced automorphism of F3. Words over {X, R, S}
/// are translated to the y alphabet first.
FreeAutomorphism automorphism_of_word(const GroupWord& word);

/// Image in S4 under y_i -> (0 i).
PermutationS4 permutation_of_word(const GroupWord& word);

/// Generator-wise substitution between the two presentations, with free
/// reduction. Equality of round trips holds in both verification quotients
/// (Aut(F3) and S4) rather than letter-by-letter.
GroupWord translate_to_y(const GroupWord& xrs_word);
GroupWord translate_to_xrs(const GroupWord& y_word);

/// The central full-rotation loop (y1 y2^-1)^3.
GroupWord central_rotation();

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }
};

/// Every instantiation of the three relation families, each checked as an
/// equality of automorphisms of F3 and of images in S4.
VerificationReport verify_y_relations();

/// The substitution identities between the two presentations: generator
/// round trips and the relations of the X, R, S presentation.
VerificationReport verify_translation_identities();

/// Kernel data of the map onto S4: the y_i^2 act as conjugations, the
/// central rotation acts trivially, its square acts trivially, and the image
/// subgroup has order 24. Includes the abelianization exponent counts behind
/// the relation-independence observations.
VerificationReport verify_pure_subgroup();

/// The full suite.
VerificationReport verify_group_suite();

}  // namespace simplexflows
