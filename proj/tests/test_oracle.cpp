#include <doctest.h>

#include "braidwp/error.hpp"
#include "braidwp/oracle.hpp"
#include "braidwp/workload.hpp"

using namespace braidwp;

TEST_CASE("artin_oracle examples") {
  CHECK(artin_oracle(BraidWord(4)) == SyntacticGBase::standard(4));
  const auto g = artin_oracle(BraidWord(2, {1}));
  CHECK(g[0] == FGWord(2, {2}));
  CHECK(g[1] == FGWord(2, {2, 1, -2}));
}

TEST_CASE("artin_oracle agrees with process_word_syntactic") {
  auto rng = make_rng(41, 0);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 5;
    const BraidWord w = random_braid_word(rng, n, t % 30);
    CHECK(artin_oracle(w) == process_word_syntactic(w, {false}));
  }
}

TEST_CASE("perm_of") {
  CHECK(perm_of(BraidWord(3)) == Permutation::identity(3));
  CHECK(perm_of(BraidWord(3, {1})) == Permutation({2, 1, 3}));
  CHECK(perm_of(BraidWord(3, {-1})) == Permutation({2, 1, 3}));
  CHECK(perm_of(BraidWord(3, {1, 2, 1})) == Permutation({3, 2, 1}));
  CHECK(perm_of(BraidWord(3, {2, 1, 2})) == Permutation({3, 2, 1}));
  CHECK(perm_of(BraidWord(3, {1, 2})) == Permutation({3, 1, 2}));
}

TEST_CASE("Permutation rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1}), AmbientMismatch);
  CHECK_THROWS_AS(Permutation({0, 1}), AmbientMismatch);
  CHECK_THROWS_AS(Permutation({1, 3}), AmbientMismatch);
}

TEST_CASE("oracle cores follow perm_of; equality implies equal permutations") {
  auto rng = make_rng(42, 0);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 4;
    const BraidWord a = random_braid_word(rng, n, t % 6);
    const BraidWord b = random_braid_word(rng, n, t % 6);
    const auto cores = artin_oracle(a).core_indices();
    const auto p = perm_of(a);
    CHECK(std::vector<int>(p.images().begin(), p.images().end()) == cores);
    if (words_equal(a, b)) CHECK(perm_of(a) == perm_of(b));
  }
}

TEST_CASE("campaign is deterministic and thread-independent") {
  CampaignConfig cfg;
  cfg.count = 400;
  cfg.max_length = 20;
  cfg.seed = 99;
  const auto one = run_oracle_campaign(cfg);
  cfg.threads = 4;
  const auto four = run_oracle_campaign(cfg);
  CHECK(one.checked == 400);
  CHECK(one.failures == 0);
  CHECK(four.failures == 0);
  CHECK_FALSE(one.counterexample);
}
