#include "conjtrace/primitivity.hpp"

#include <numeric>

namespace conjtrace {

Word Substitution::apply(const Word& w) const {
  Word out(2);
  for (int l : w.letters()) {
    const Word& img = (l == 1 || l == -1) ? image_a : image_b;
    out = multiply(out, l > 0 ? img : invert(img));
  }
  return out;
}

Substitution Substitution::identity() {
  return Substitution{Word(2, {1}), Word(2, {2})};
}

Substitution compose(const Substitution& f, const Substitution& g) {
  return Substitution{f.apply(g.image_a), f.apply(g.image_b)};
}

namespace {

struct Move {
  Substitution fwd;
  Substitution inv;
};

Word w2(std::vector<int> ls) { return Word(2, std::move(ls)); }

// Elementary moves with their signature action (column vector (p,q)):
//   invert_a: diag(-1, 1)      invert_b: diag(1, -1)
//   swap_ab:  antidiagonal
//   append_b (a -> ab): [[1,0],[1,1]]   append_a (b -> ab): [[1,1],[0,1]]
const Move& invert_a() {
  static Move m{{w2({-1}), w2({2})}, {w2({-1}), w2({2})}};
  return m;
}
const Move& invert_b() {
  static Move m{{w2({1}), w2({-2})}, {w2({1}), w2({-2})}};
  return m;
}
const Move& swap_ab() {
  static Move m{{w2({2}), w2({1})}, {w2({2}), w2({1})}};
  return m;
}
const Move& append_b() {  // a -> ab
  static Move m{{w2({1, 2}), w2({2})}, {w2({1, -2}), w2({2})}};
  return m;
}
const Move& append_a() {  // b -> ab
  static Move m{{w2({1}), w2({1, 2})}, {w2({1}), w2({-1, 2})}};
  return m;
}

}  // namespace

std::optional<PrimitiveBasis> primitive_basis(const Word& root) {
  if (root.rank() != 2)
    fail(ErrorKind::RankMismatch, "primitive_basis: rank-2 only");
  if (root.is_identity())
    fail(ErrorKind::TrivialElement, "primitive_basis: identity input");
  if (!is_cyclically_reduced(root))
    fail(ErrorKind::BadInput, "primitive_basis: input not cyclically reduced");

  WordStats st = word_stats(root);
  long p = st.signature[0], q = st.signature[1];
  if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1) return std::nullopt;

  // Euclid descent on the signature; each step records the elementary move
  // whose inverse was applied to the state.
  std::vector<const Move*> moves;
  while (!(p == 1 && q == 0)) {
    if (p < 0) {
      moves.push_back(&invert_a());
      p = -p;
    } else if (q < 0) {
      moves.push_back(&invert_b());
      q = -q;
    } else if (p == 0) {
      moves.push_back(&swap_ab());
      std::swap(p, q);
    } else if (q >= p) {
      moves.push_back(&append_a());
      q -= p;
    } else {
      moves.push_back(&append_b());
      p -= q;
    }
  }

  Substitution theta = Substitution::identity();
  for (auto it = moves.rbegin(); it != moves.rend(); ++it)
    theta = compose((*it)->fwd, theta);
  Substitution theta_inv = Substitution::identity();
  for (const Move* m : moves) theta_inv = compose(m->inv, theta_inv);

  Word candidate = theta.apply(w2({1}));
  CanonicalForm root_cf = cyclic_canonical(root);
  CanonicalForm cand_cf = cyclic_canonical(candidate);
  if (root_cf.cls.core != cand_cf.cls.core) return std::nullopt;

  Word c = multiply(root_cf.conjugator, invert(cand_cf.conjugator));
  Substitution from_standard{conjugate(c, theta.image_a),
                             conjugate(c, theta.image_b)};
  Word c_inv = invert(c);
  Substitution to_standard{theta_inv.apply(conjugate(c_inv, w2({1}))),
                           theta_inv.apply(conjugate(c_inv, w2({2})))};

  if (from_standard.image_a != root)
    fail(ErrorKind::BadInput, "primitive_basis: internal conjugation error");
  for (int gen = 1; gen <= 2; ++gen) {
    Word x = w2({gen});
    if (from_standard.apply(to_standard.apply(x)) != x ||
        to_standard.apply(from_standard.apply(x)) != x)
      fail(ErrorKind::BadInput, "primitive_basis: inverse verification failed");
  }
  return PrimitiveBasis{root, from_standard, to_standard};
}

bool is_primitive(const Word& w) {
  if (w.is_identity()) return false;
  Word core = cyclic_canonical(w).cls.core;
  return primitive_basis(core).has_value();
}

}  // namespace conjtrace
