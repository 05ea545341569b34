#pragma once

#include <functional>
#include <string>
#include <vector>

#include "conjtrace/errors.hpp"

namespace conjtrace {

// A freely reduced word in the free group of the given rank. Letters are
// nonzero integers in [-rank, rank]: +i is the i-th generator, -i its
// inverse. The empty sequence is the identity. Values are immutable once
// built; all operations return fresh words.
class Word {
 public:
  explicit Word(int rank) : rank_(check_rank(rank)) {}
  Word(int rank, std::vector<int> letters);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  int letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }

  bool operator==(const Word& o) const {
    return rank_ == o.rank_ && letters_ == o.letters_;
  }
  bool operator!=(const Word& o) const { return !(*this == o); }

 private:
  static int check_rank(int rank) {
    if (rank < 1) fail(ErrorKind::BadInput, "rank must be positive");
    return rank;
  }
  int rank_;
  std::vector<int> letters_;
};

// Letter order used everywhere a canonical choice is needed:
// 1 < -1 < 2 < -2 < ...  Positive words sort before mixed ones.
inline int letter_key(int letter) {
  int a = letter > 0 ? letter : -letter;
  return 2 * (a - 1) + (letter < 0 ? 1 : 0);
}

bool word_less(const Word& u, const Word& v);

// Text syntax: 'a'..'z' are generators 1..rank, 'A'..'Z' their inverses.
// Empty text is the identity.
Word parse_word(const std::string& text, int rank);
std::string format_word(const Word& w);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word conjugate(const Word& c, const Word& w);  // c w c^-1
Word word_power(const Word& w, int exponent);

// Canonical form of a conjugacy class: the cyclically reduced core in its
// least rotation under the letter order above.
struct ConjClass {
  int rank;
  Word core;
  int class_norm;  // = core.length()

  bool operator==(const ConjClass& o) const {
    return rank == o.rank && core == o.core;
  }
  bool operator!=(const ConjClass& o) const { return !(*this == o); }
};

struct CanonicalForm {
  ConjClass cls;
  Word conjugator;  // conjugator * core * conjugator^-1 == original word
};

CanonicalForm cyclic_canonical(const Word& w);
bool are_conjugate(const Word& u, const Word& v);

// Reverse word, positivity, and per-generator signed letter counts.
struct WordStats {
  Word reverse;
  bool is_positive;
  std::vector<long> signature;  // signature[i-1] = (#(+i)) - (#(-i))
};
WordStats word_stats(const Word& w);

// Streams exactly the freely reduced words of the given length in
// lexicographic order (letter order as above), or the canonical conjugacy
// classes of that length when up_to_conjugacy is set.
void enumerate_words(int rank, int length, bool positive_only,
                     bool up_to_conjugacy,
                     const std::function<void(const Word&)>& sink);
std::vector<Word> enumerate_words_vec(int rank, int length, bool positive_only,
                                      bool up_to_conjugacy);

// True if the word is cyclically reduced (first and last letters are not
// mutually inverse).
bool is_cyclically_reduced(const Word& w);

// For a cyclically reduced, canonical core: the primitive cyclic root and
// the exponent, core == root^exponent as cyclic words.
struct CyclicRoot {
  Word root;
  int exponent;
};
CyclicRoot cyclic_root(const Word& core);

}  // namespace conjtrace
