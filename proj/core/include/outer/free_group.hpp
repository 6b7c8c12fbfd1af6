#pragma once

#include <compare>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace outer {

/// A letter is +i for the generator x_i and -i for its inverse (i >= 1).
using Letter = int;

/// Rank of a letter in the order a < A < b < B < ...
constexpr int letter_key(Letter x) { return 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0); }
constexpr Letter letter_from_key(int key) { return (key % 2 == 0) ? key / 2 + 1 : -(key / 2 + 1); }

/// Freely reduced word. Carries no rank; see FreeGroup.
class Word {
 public:
  Word() = default;

  static Word reduce(std::span<const Letter> letters);
  static Word letter(Letter x) { return reduce(std::span<const Letter>(&x, 1)); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  Word power(int k) const;
  /// Largest generator index used, 0 for the identity.
  int max_generator() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  std::vector<Letter> letters_;
};

/// Conjugacy class, stored as the least rotation of a cyclically reduced word.
class CyclicWord {
 public:
  CyclicWord() = default;

  static CyclicWord of(const Word& w);
  static CyclicWord of(std::span<const Letter> letters) { return of(Word::reduce(letters)); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool trivial() const { return letters_.empty(); }
  Word word() const { return Word::reduce(letters_); }
  CyclicWord inverse() const { return of(word().inverse()); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& u, const CyclicWord& v);

 private:
  std::vector<Letter> letters_;
};

CyclicWord cyclic_normal_form(const Word& w);

/// Index of the least rotation of `keys` under the integer order.
std::size_t least_rotation(std::span<const int> keys);

/// Strips the cancelling prefix/suffix pair: w = c * core * c^-1.
Word cyclically_reduce(const Word& w, Word* conjugator = nullptr);

/// Rank context. Letters outside [1, rank] are rejected.
class FreeGroup {
 public:
  explicit FreeGroup(int rank);

  int rank() const { return rank_; }
  Word word(std::span<const Letter> letters) const;
  Word word(std::initializer_list<Letter> letters) const {
    return word(std::span<const Letter>(letters.begin(), letters.size()));
  }
  Word generator(int i) const;
  void check(const Word& w) const;
  void check(const CyclicWord& w) const;

  /// "aBc" for rank <= 26, otherwise "1,-2,3". "1" or "" is the identity.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;
  std::string format(const CyclicWord& w) const;

  friend bool operator==(const FreeGroup&, const FreeGroup&) = default;

 private:
  int rank_;
};

/// Automorphism of F_N given by generator images; the inverse is computed and checked on construction.
class Automorphism {
 public:
  Automorphism(int rank, std::vector<Word> images);
  static Automorphism identity(int rank);

  int rank() const { return rank_; }
  /// Image of x_i, i in [1, rank].
  const Word& image(int i) const { return images_.at(i - 1); }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;
  Word operator()(const Word& w) const { return apply(w); }
  CyclicWord apply(const CyclicWord& w) const { return CyclicWord::of(apply(w.word())); }

  /// (*this) after `inner`: x -> this(inner(x)).
  Automorphism compose(const Automorphism& inner) const;
  Automorphism inverse() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }

 private:
  Automorphism(int rank, std::vector<Word> images, std::vector<Word> inverse_images);

  int rank_ = 0;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

/// Inverse images of the generators, or empty if the images do not form a basis.
std::vector<Word> invert_basis(int rank, const std::vector<Word>& images);

/// c with w[i] = c x_{i+1} c^-1 for every i, if one exists. Needs at least two words.
std::optional<Word> basis_conjugator(const std::vector<Word>& w);

/// Substitutes images[|x|-1] for each letter x (inverse for negative letters).
Word substitute(const Word& w, const std::vector<Word>& images);

}  // namespace outer
