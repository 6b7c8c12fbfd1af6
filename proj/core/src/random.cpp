#include "outer/random.hpp"

#include "outer/error.hpp"

namespace outer {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng instance_rng(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix64(splitmix64(seed) ^ index)); }

int uniform_int(Rng& rng, int lo, int hi) {
  if (hi < lo) throw Error("empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Word random_word(Rng& rng, int rank, int length) {
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < length) {
    int g = uniform_int(rng, 1, rank);
    Letter x = uniform_int(rng, 0, 1) ? g : -g;
    if (!letters.empty() && letters.back() == -x) continue;
    letters.push_back(x);
  }
  return Word::reduce(letters);
}

Automorphism random_automorphism(Rng& rng, int rank, int moves) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::letter(i));
  for (int m = 0; m < moves; ++m) {
    int kind = rank > 1 ? uniform_int(rng, 0, 3) : 2;
    int i = uniform_int(rng, 1, rank);
    int j = rank > 1 ? uniform_int(rng, 1, rank - 1) : 1;
    if (j >= i) ++j;
    Letter y = uniform_int(rng, 0, 1) ? j : -j;
    Word yw = Word::letter(y);
    // Elementary move psi, applied as phi <- phi o psi.
    std::vector<Word> psi;
    for (int k = 1; k <= rank; ++k) psi.push_back(Word::letter(k));
    switch (kind) {
      case 0:
        psi[static_cast<std::size_t>(i - 1)] = Word::letter(i) * yw;
        break;
      case 1:
        psi[static_cast<std::size_t>(i - 1)] = yw * Word::letter(i);
        break;
      case 2:
        psi[static_cast<std::size_t>(i - 1)] = Word::letter(-i);
        break;
      default:
        std::swap(psi[static_cast<std::size_t>(i - 1)], psi[static_cast<std::size_t>(j - 1)]);
        break;
    }
    std::vector<Word> next;
    for (const auto& w : psi) next.push_back(substitute(w, images));
    images = std::move(next);
  }
  return Automorphism(rank, images);
}

}  // namespace outer
