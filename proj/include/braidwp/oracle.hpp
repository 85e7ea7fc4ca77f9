#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "braidwp/braid.hpp"

namespace braidwp {

// A bijection of 1..n; images()[j-1] is the image of j.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }
  std::span<const int> images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// The braid action computed the other way round: scan the braid word first
// to last and rewrite every generator occurrence in every element.
SyntacticGBase artin_oracle(const BraidWord& w);

// Symmetric-group shadow of w: sigma_i^{+-1} acts as the transposition (i i+1)
// on the images.  perm_of(w)(j) is the core index of element j.
Permutation perm_of(const BraidWord& w);

struct CampaignConfig {
  std::size_t count = 10000;
  int max_strands = 6;
  std::size_t max_length = 40;
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
};

struct CampaignReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<BraidWord> counterexample;  // lowest-index failing word
};

// Differential run of process_word_syntactic against artin_oracle.  Word k is
// drawn from its own stream, so the report does not depend on threads.
CampaignReport run_oracle_campaign(const CampaignConfig& cfg);

}  // namespace braidwp
