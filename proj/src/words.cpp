#include "conjtrace/words.hpp"

#include <algorithm>

namespace conjtrace {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

std::vector<int> reduce_letters(const std::vector<int>& in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (int l : in) push_reduced(out, l);
  return out;
}

}  // namespace

Word::Word(int rank, std::vector<int> letters) : rank_(check_rank(rank)) {
  for (int l : letters) {
    if (l == 0 || l > rank_ || l < -rank_)
      fail(ErrorKind::InvalidLetter,
           "letter " + std::to_string(l) + " outside rank " +
               std::to_string(rank_));
  }
  letters_ = reduce_letters(letters);
}

bool word_less(const Word& u, const Word& v) {
  const auto& a = u.letters();
  const auto& b = v.letters();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ka = letter_key(a[i]), kb = letter_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return a.size() < b.size();
}

Word parse_word(const std::string& text, int rank) {
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char c : text) {
    int l;
    if (c >= 'a' && c <= 'z') {
      l = c - 'a' + 1;
    } else if (c >= 'A' && c <= 'Z') {
      l = -(c - 'A' + 1);
    } else {
      fail(ErrorKind::ParseError,
           std::string("bad character '") + c + "' in word");
    }
    if (l > rank || l < -rank)
      fail(ErrorKind::InvalidLetter, std::string("letter '") + c +
                                         "' outside rank " +
                                         std::to_string(rank));
    letters.push_back(l);
  }
  return Word(rank, std::move(letters));
}

std::string format_word(const Word& w) {
  std::string s;
  s.reserve(static_cast<std::size_t>(w.length()));
  for (int l : w.letters()) {
    s += l > 0 ? static_cast<char>('a' + l - 1)
               : static_cast<char>('A' - l - 1);
  }
  return s;
}

Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    fail(ErrorKind::RankMismatch, "multiply: ranks differ");
  std::vector<int> out = u.letters();
  for (int l : v.letters()) push_reduced(out, l);
  return Word(u.rank(), std::move(out));
}

Word invert(const Word& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int& l : out) l = -l;
  return Word(w.rank(), std::move(out));
}

Word conjugate(const Word& c, const Word& w) {
  return multiply(multiply(c, w), invert(c));
}

Word word_power(const Word& w, int exponent) {
  Word base = exponent < 0 ? invert(w) : w;
  int e = exponent < 0 ? -exponent : exponent;
  Word acc(w.rank());
  for (int i = 0; i < e; ++i) acc = multiply(acc, base);
  return acc;
}

namespace {

// Booth's least-rotation algorithm over the letter order.
int least_rotation_index(const std::vector<int>& s) {
  int n = static_cast<int>(s.size());
  if (n <= 1) return 0;
  auto key = [&](int i) { return letter_key(s[static_cast<std::size_t>(i % n)]); };
  std::vector<int> f(static_cast<std::size_t>(2 * n), -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    int i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && key(j) != key(k + i + 1)) {
      if (key(j) < key(k + i + 1)) k = j - i - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && key(j) != key(k + i + 1)) {
      if (key(j) < key(k + i + 1)) k = j;
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return k;
}

}  // namespace

bool is_cyclically_reduced(const Word& w) {
  if (w.length() <= 1) return true;
  return w.letters().front() != -w.letters().back();
}

CanonicalForm cyclic_canonical(const Word& w) {
  // Strip matching outer letters: w = prefix . core . prefix^-1.
  std::vector<int> core = w.letters();
  std::vector<int> prefix;
  while (core.size() >= 2 && core.front() == -core.back()) {
    prefix.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  int k = least_rotation_index(core);
  // core = d.e, canonical = e.d, core = d . canonical . d^-1
  std::vector<int> d(core.begin(), core.begin() + k);
  std::vector<int> canon(core.begin() + k, core.end());
  canon.insert(canon.end(), d.begin(), d.end());
  std::vector<int> conj = prefix;
  conj.insert(conj.end(), d.begin(), d.end());
  Word canon_word(w.rank(), std::move(canon));
  int norm = canon_word.length();
  return CanonicalForm{ConjClass{w.rank(), canon_word, norm},
                       Word(w.rank(), std::move(conj))};
}

bool are_conjugate(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    fail(ErrorKind::RankMismatch, "are_conjugate: ranks differ");
  return cyclic_canonical(u).cls.core == cyclic_canonical(v).cls.core;
}

WordStats word_stats(const Word& w) {
  std::vector<int> rev(w.letters().rbegin(), w.letters().rend());
  bool positive = true;
  std::vector<long> sig(static_cast<std::size_t>(w.rank()), 0);
  for (int l : w.letters()) {
    if (l < 0) {
      positive = false;
      sig[static_cast<std::size_t>(-l - 1)]--;
    } else {
      sig[static_cast<std::size_t>(l - 1)]++;
    }
  }
  return WordStats{Word(w.rank(), std::move(rev)), positive, std::move(sig)};
}

namespace {

void enumerate_rec(int rank, int length, bool positive_only,
                   bool up_to_conjugacy, std::vector<int>& cur,
                   const std::function<void(const Word&)>& sink) {
  if (static_cast<int>(cur.size()) == length) {
    Word w(rank, cur);  // already reduced by construction
    if (up_to_conjugacy) {
      if (!is_cyclically_reduced(w)) return;
      CanonicalForm cf = cyclic_canonical(w);
      if (cf.cls.core != w) return;  // keep only the canonical rotation
    }
    sink(w);
    return;
  }
  // Letters in canonical order: 1, -1, 2, -2, ...
  for (int g = 1; g <= rank; ++g) {
    for (int s = 0; s < (positive_only ? 1 : 2); ++s) {
      int l = s == 0 ? g : -g;
      if (!cur.empty() && cur.back() == -l) continue;
      cur.push_back(l);
      enumerate_rec(rank, length, positive_only, up_to_conjugacy, cur, sink);
      cur.pop_back();
    }
  }
}

}  // namespace

void enumerate_words(int rank, int length, bool positive_only,
                     bool up_to_conjugacy,
                     const std::function<void(const Word&)>& sink) {
  if (length < 0) fail(ErrorKind::BadInput, "enumerate_words: negative length");
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(length));
  enumerate_rec(rank, length, positive_only, up_to_conjugacy, cur, sink);
}

std::vector<Word> enumerate_words_vec(int rank, int length, bool positive_only,
                                      bool up_to_conjugacy) {
  std::vector<Word> out;
  enumerate_words(rank, length, positive_only, up_to_conjugacy,
                  [&](const Word& w) { out.push_back(w); });
  return out;
}

CyclicRoot cyclic_root(const Word& core) {
  int n = core.length();
  if (n == 0) return CyclicRoot{core, 1};
  const auto& s = core.letters();
  for (int period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool ok = true;
    for (int i = period; i < n && ok; ++i) {
      if (s[static_cast<std::size_t>(i)] !=
          s[static_cast<std::size_t>(i - period)])
        ok = false;
    }
    if (ok) {
      std::vector<int> root(s.begin(), s.begin() + period);
      return CyclicRoot{Word(core.rank(), std::move(root)), n / period};
    }
  }
  return CyclicRoot{core, 1};
}

}  // namespace conjtrace
