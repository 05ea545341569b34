#pragma once

#include <optional>

#include "conjtrace/words.hpp"

namespace conjtrace {

// Endomorphism of the rank-2 free group given by generator images.
struct Substitution {
  Word image_a;
  Word image_b;

  Word apply(const Word& w) const;
  static Substitution identity();
};

Substitution compose(const Substitution& f, const Substitution& g);  // f(g(.))

// Basis-extension certificate for a primitive element: an automorphism
// pair with from_standard(a) == exactly the given word, verified at
// construction. Basis elements of F_2 have, per abelianized signature, a
// single conjugacy class; the candidate in that class is constructed by
// Euclid descent on the signature realized through elementary Nielsen
// moves, and the input is primitive iff it is conjugate to the candidate.
struct PrimitiveBasis {
  Word primitive;             // the input word
  Substitution from_standard;  // a -> primitive, b -> complement
  Substitution to_standard;    // inverse automorphism
};

// Rank-2 only. Input must be cyclically reduced and nontrivial.
std::optional<PrimitiveBasis> primitive_basis(const Word& root);

// Conjugation-invariant primitivity test in the rank-2 free group.
bool is_primitive(const Word& w);

}  // namespace conjtrace
