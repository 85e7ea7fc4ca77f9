#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidwp/free_word.hpp"
#include "braidwp/path_codec.hpp"

namespace braidwp {

// sigma_index^sign, the positive or negative half-twist of the standard frame.
class BraidLetter {
 public:
  constexpr BraidLetter() = default;
  constexpr BraidLetter(int index, int sign) : value_(sign < 0 ? -index : index) {}

  static constexpr BraidLetter from_signed(int value) {
    BraidLetter l;
    l.value_ = value;
    return l;
  }

  constexpr int index() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_value() const { return value_; }
  constexpr BraidLetter inverse() const { return from_signed(-value_); }

  friend constexpr bool operator==(BraidLetter, BraidLetter) = default;

 private:
  int value_ = 1;
};

class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<BraidLetter> letters);
  BraidWord(int strands, std::initializer_list<int> signed_letters);

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const BraidLetter> letters() const { return letters_; }

  void push_back(BraidLetter l);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
// Deletes adjacent sigma_i sigma_i^{-1} pairs to exhaustion.
BraidWord cancel_inverse_pairs(const BraidWord& w);

// "1 -2 1" <-> sigma_1 sigma_2^{-1} sigma_1.  Zero, malformed, or out-of-range
// tokens are rejected.
BraidWord parse_braid(std::string_view text, int strands);
std::string format_braid(const BraidWord& w);

// An ordered n-tuple of reduced conjugates Q^{-1} gamma_m Q whose core indices
// permute 1..n.  This is the canonical form of a braid.
class SyntacticGBase {
 public:
  explicit SyntacticGBase(std::vector<FGWord> elements);
  static SyntacticGBase standard(int n);

  int rank() const { return static_cast<int>(elements_.size()); }
  std::span<const FGWord> elements() const { return elements_; }
  const FGWord& operator[](std::size_t i) const { return elements_[i]; }
  std::vector<int> core_indices() const;
  std::size_t total_length() const;

  friend bool operator==(const SyntacticGBase&, const SyntacticGBase&) = default;

 private:
  std::vector<FGWord> elements_;
};

// One line per element, each in the word text format.
std::string format_syntactic_gbase(const SyntacticGBase& g);

// sign +1: (e_i, e_{i+1}) <- (e_{i+1}, e_{i+1} e_i e_{i+1}^{-1});
// sign -1: (e_i, e_{i+1}) <- (e_i^{-1} e_{i+1} e_i, e_i).
SyntacticGBase braid_move(const SyntacticGBase& g, int index, int sign);

struct ProcessOptions {
  bool pre_cancel = true;
};

SyntacticGBase process_word_syntactic(const BraidWord& w, ProcessOptions opts = {});
GBase process_word_geometric(const BraidWord& w, ProcessOptions opts = {});

SyntacticGBase to_syntactic(const GBase& g);
GBase to_geometric(const SyntacticGBase& g);

// g-base of the braid b1 b2 given the g-bases of b1 and b2.
GBase multiply(const GBase& lhs, const GBase& rhs);

enum class Pipeline { syntactic, geometric };

struct EqualityOptions {
  Pipeline pipeline = Pipeline::syntactic;
  bool pre_cancel = true;
};

bool words_equal(const BraidWord& a, const BraidWord& b, EqualityOptions opts = {});

}  // namespace braidwp
