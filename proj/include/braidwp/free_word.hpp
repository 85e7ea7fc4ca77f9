#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidwp {

// A letter gamma_index^sign of the free fundamental group.  Stored as a
// nonzero signed integer: +i is gamma_i, -i is gamma_i^{-1}.
class FGLetter {
 public:
  constexpr FGLetter() = default;
  constexpr FGLetter(int index, int sign) : value_(sign < 0 ? -index : index) {}

  static constexpr FGLetter from_signed(int value) {
    FGLetter l;
    l.value_ = value;
    return l;
  }

  constexpr int index() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_value() const { return value_; }
  constexpr FGLetter inverse() const { return from_signed(-value_); }
  constexpr bool cancels(FGLetter other) const { return value_ == -other.value_; }

  friend constexpr bool operator==(FGLetter, FGLetter) = default;

 private:
  int value_ = 1;
};

// A word over gamma_1..gamma_n.  The ambient rank n travels with the word;
// operations mixing ranks throw AmbientMismatch.
class FGWord {
 public:
  explicit FGWord(int rank);
  FGWord(int rank, std::vector<FGLetter> letters);
  // Convenience: signed integers, +i for gamma_i and -i for its inverse.
  FGWord(int rank, std::initializer_list<int> signed_letters);

  static FGWord generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const FGLetter> letters() const { return letters_; }
  FGLetter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(FGLetter l);

  friend bool operator==(const FGWord&, const FGWord&) = default;

 private:
  int rank_;
  std::vector<FGLetter> letters_;
};

FGWord free_reduce(const FGWord& w);
bool is_reduced(const FGWord& w);
FGWord invert(const FGWord& w);
FGWord concat(const FGWord& a, const FGWord& b);

// Homomorphic image of w under gamma_j -> images[j-1], freely reduced.
FGWord substitute(const FGWord& w, std::span<const FGWord> images);

// Decomposition of a word of odd length 2k+1 as Q^{-1} core Q.
struct ConjugateShape {
  FGWord q;  // the last k letters
  FGLetter core;
};

// nullopt when w is not a letter-exact conjugate of a single letter.
std::optional<ConjugateShape> conjugate_shape(const FGWord& w);

// "+3 +2 -3" <-> gamma_3 gamma_2 gamma_3^{-1}; the empty string is the identity.
FGWord parse_word(std::string_view text, int rank);
std::string format_word(const FGWord& w);

}  // namespace braidwp
