#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "simplexflows/common.hpp"

namespace simplexflows {

/// A signed generator: `index` in {1, 2, 3}, `power` in {+1, -1}.
struct Letter {
  int index = 1;
  int power = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Reduced word in the free group F3 on a1, a2, a3. Words are reduced eagerly
/// on every concatenation, so equality is literal equality.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord generator(int index, int power = 1);
  static FreeWord parse(const std::string& text);  // e.g. "a1 a2^-1"

  bool empty() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  FreeWord inverse() const;
  FreeWord concat(const FreeWord& right) const;  // this * right, reduced
  std::string str() const;

  /// Exponent sums per generator (the abelianization image).
  std::array<int64_t, 3> exponents() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  void push_reduced(const Letter& letter);
  std::vector<Letter> letters_;
};

enum class WordAlphabet { Y, XRS };

/// Word over the motion-group generators: either {y1, y2, y3} or {X, R, S}.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(WordAlphabet alphabet) : alphabet_(alphabet) {}
  static GroupWord parse(const std::string& text);  // "y1 y2^-1", "X R^-1 S"

  WordAlphabet alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  GroupWord& append(int index, int power);
  GroupWord concat(const GroupWord& right) const;
  GroupWord inverse() const;
  GroupWord pow(int exponent) const;
  std::string str() const;

  /// For two-generator subwords: exponent counts used by the abelianization
  /// independence checks.
  std::array<int64_t, 3> exponents() const;

 private:
  WordAlphabet alphabet_ = WordAlphabet::Y;
  std::vector<Letter> letters_;
};

/// Endomorphism data on F3: images of the three generators. Composition and
/// equality are literal on the reduced images.
class FreeAutomorphism {
 public:
  FreeAutomorphism();  // identity
  explicit FreeAutomorphism(std::array<FreeWord, 3> images);

  static FreeAutomorphism inner(const FreeWord& w);  // x -> w x w^{-1}

  const FreeWord& image(int index) const { return images_[index - 1]; }
  FreeWord apply(const FreeWord& w) const;
  FreeAutomorphism compose(const FreeAutomorphism& inner) const;  // this after inner
  bool is_identity() const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  std::array<FreeWord, 3> images_;
};

/// Permutation of {0, 1, 2, 3}; index 0 is the center vertex.
class PermutationS4 {
 public:
  PermutationS4();  // identity
  explicit PermutationS4(std::array<int, 4> images);
  static PermutationS4 transposition(int a, int b);

  int apply(int x) const { return images_[x]; }
  PermutationS4 compose(const PermutationS4& inner) const;  // this after inner
  PermutationS4 inverse() const;
  bool is_identity() const;
  std::string cycle_str() const;

  auto operator<=>(const PermutationS4&) const = default;

 private:
  std::array<int, 4> images_;
};

}  // namespace simplexflows
