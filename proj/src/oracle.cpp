#include "braidwp/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>

#include "braidwp/error.hpp"
#include "braidwp/workload.hpp"

namespace braidwp {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]) {
      throw AmbientMismatch("not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int j = 0; j < n; ++j) images[j] = j + 1;
  return Permutation(std::move(images));
}

namespace {

// Replacement images of one letter, as raw signed integers.
using Letters = std::vector<int>;

void emit(Letters& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

// The image of the single letter x = +-j under the automorphism of sigma_i^sign.
void rewrite_letter(Letters& out, int x, int i, int sign) {
  const int j = x < 0 ? -x : x;
  std::array<int, 3> img{j, 0, 0};
  std::size_t len = 1;
  if (sign > 0) {
    // g_i -> g_{i+1},  g_{i+1} -> g_{i+1} g_i g_{i+1}^-1
    if (j == i) {
      img[0] = i + 1;
    } else if (j == i + 1) {
      img = {i + 1, i, -(i + 1)};
      len = 3;
    }
  } else {
    // g_i -> g_i^-1 g_{i+1} g_i,  g_{i+1} -> g_i
    if (j == i) {
      img = {-i, i + 1, i};
      len = 3;
    } else if (j == i + 1) {
      img[0] = i;
    }
  }
  if (x < 0) {
    for (std::size_t k = len; k-- > 0;) emit(out, -img[k]);
  } else {
    for (std::size_t k = 0; k < len; ++k) emit(out, img[k]);
  }
}

}  // namespace

SyntacticGBase artin_oracle(const BraidWord& w) {
  const int n = w.strands();
  std::vector<Letters> elements(n);
  for (int j = 0; j < n; ++j) elements[j] = {j + 1};

  for (auto letter : w.letters()) {
    const int i = letter.index();
    const int sign = letter.sign();
    for (auto& e : elements) {
      Letters next;
      next.reserve(e.size() + 4);
      for (int x : e) rewrite_letter(next, x, i, sign);
      e = std::move(next);
    }
  }

  std::vector<FGWord> words;
  words.reserve(n);
  for (const auto& e : elements) {
    std::vector<FGLetter> ls;
    ls.reserve(e.size());
    for (int x : e) ls.push_back(FGLetter::from_signed(x));
    words.emplace_back(n, std::move(ls));
  }
  return SyntacticGBase(std::move(words));
}

Permutation perm_of(const BraidWord& w) {
  std::vector<int> images(w.strands());
  for (int j = 0; j < w.strands(); ++j) images[j] = j + 1;
  for (auto letter : w.letters()) {
    const int i = letter.index();
    for (int& v : images) {
      if (v == i) {
        v = i + 1;
      } else if (v == i + 1) {
        v = i;
      }
    }
  }
  return Permutation(std::move(images));
}

CampaignReport run_oracle_campaign(const CampaignConfig& cfg) {
  if (cfg.max_strands < 2) throw AmbientMismatch("campaign needs max_strands >= 2");
  const unsigned threads = std::max(1u, cfg.threads);

  auto word_at = [&](std::size_t k) {
    auto rng = make_rng(cfg.seed, k);
    const int n = std::uniform_int_distribution<int>(2, cfg.max_strands)(rng);
    const auto len = std::uniform_int_distribution<std::size_t>(0, cfg.max_length)(rng);
    return random_braid_word(rng, n, len);
  };

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failures{0};
  std::mutex mu;
  std::optional<std::size_t> first_bad;

  auto worker = [&] {
    for (std::size_t k = next++; k < cfg.count; k = next++) {
      const BraidWord w = word_at(k);
      if (process_word_syntactic(w) == artin_oracle(w)) continue;
      ++failures;
      std::lock_guard lock(mu);
      if (!first_bad || k < *first_bad) first_bad = k;
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CampaignReport report;
  report.checked = cfg.count;
  report.failures = failures;
  if (first_bad) report.counterexample = word_at(*first_bad);
  return report;
}

}  // namespace braidwp
