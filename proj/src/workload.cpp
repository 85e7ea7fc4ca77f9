#include "braidwp/workload.hpp"

namespace braidwp {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

BraidWord random_braid_word(std::mt19937_64& rng, int strands, std::size_t length) {
  BraidWord w(strands);
  if (strands < 2) return w;
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::bernoulli_distribution negative(0.5);
  for (std::size_t k = 0; k < length; ++k) {
    w.push_back(BraidLetter(index(rng), negative(rng) ? -1 : 1));
  }
  return w;
}

FGWord random_conjugate_word(std::mt19937_64& rng, int rank, std::size_t prefix_length) {
  if (rank == 1) return FGWord::generator(1, 1);  // the only reduced conjugate
  std::uniform_int_distribution<int> index(1, rank);
  std::bernoulli_distribution negative(0.5);
  const int core = index(rng);

  std::vector<FGLetter> prefix;
  prefix.reserve(prefix_length);
  while (prefix.size() < prefix_length) {
    const FGLetter l(index(rng), negative(rng) ? -1 : 1);
    if (!prefix.empty() && prefix.back().cancels(l)) continue;
    // a last prefix letter on the core generator would cancel across the middle
    if (prefix.size() + 1 == prefix_length && l.index() == core) continue;
    prefix.push_back(l);
  }

  std::vector<FGLetter> letters(prefix);
  letters.push_back(FGLetter(core, 1));
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) letters.push_back(it->inverse());
  return FGWord(rank, std::move(letters));
}

}  // namespace braidwp
