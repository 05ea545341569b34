#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjtrace/words.hpp"

namespace conjtrace {

// Directed labeled edge of a covering graph: generator `gen` from `source`
// to the vertex the edge map sends it to.
struct EdgeRef {
  int gen = 0;     // 1-based generator index
  int source = 0;  // vertex index
  bool operator==(const EdgeRef& o) const {
    return gen == o.gen && source == o.source;
  }
};

// Folded covering graph of a finite-index subgroup: for every generator the
// edge map is a full permutation of the vertices. One edge is marked as the
// distinguished cycle edge; the spanning tree excludes it.
struct SubgroupGraph {
  int rank = 0;
  int vertex_count = 0;
  int base_vertex = 0;
  std::vector<std::vector<int>> edge_to;    // edge_to[g-1][v] = target
  std::vector<std::vector<int>> edge_from;  // inverse permutations
  EdgeRef marked_edge;
  // +1 when the distinguished cycle crosses the marked edge forward, -1
  // when it crosses it backward (cycle ends in an inverse letter).
  int marked_orientation = 1;
  std::vector<EdgeRef> tree_edges;

  int target(int gen, int v) const {
    return edge_to[static_cast<std::size_t>(gen - 1)][static_cast<std::size_t>(v)];
  }
  int source_of(int gen, int v) const {
    return edge_from[static_cast<std::size_t>(gen - 1)][static_cast<std::size_t>(v)];
  }
  // Follow one letter (signed generator) from vertex v.
  int step(int letter, int v) const {
    return letter > 0 ? target(letter, v) : source_of(-letter, v);
  }
  int trace_path(const Word& w, int from) const {
    int v = from;
    for (int l : w.letters()) v = step(l, v);
    return v;
  }

  void check_invariants() const;  // throws NotACover on violation
  std::string to_text() const;
  static SubgroupGraph from_text(const std::string& text);
};

// A word in a subgroup basis: signed 1-based indices into `basis`.
using BasisWord = std::vector<int>;

// Coset data of a finite-index subgroup: representatives, the permutation
// action of each generator, and the Schreier elements rewritten in an
// explicit free basis whose first element is the distinguished cycle word.
struct CosetStructure {
  int rank = 0;
  int index = 0;
  std::vector<Word> reps;                        // reps[0] = identity
  std::vector<std::vector<int>> action;          // action[g-1][j]
  std::vector<std::vector<BasisWord>> schreier;  // schreier[g-1][j]
  std::vector<Word> basis;                       // basis[0] = cycle word

  int act(int letter, int j) const {
    if (letter > 0)
      return action[static_cast<std::size_t>(letter - 1)][static_cast<std::size_t>(j)];
    const auto& perm = action[static_cast<std::size_t>(-letter - 1)];
    for (int i = 0; i < index; ++i)
      if (perm[static_cast<std::size_t>(i)] == j) return i;
    return -1;
  }
  int act_word(const Word& w, int j) const {
    int v = j;
    for (int l : w.letters()) v = act(l, v);
    return v;
  }
  Word expand(const BasisWord& bw) const {
    Word out(rank);
    for (int s : bw) {
      const Word& b = basis[static_cast<std::size_t>((s > 0 ? s : -s) - 1)];
      out = multiply(out, s > 0 ? b : invert(b));
    }
    return out;
  }
};

struct HallCover {
  SubgroupGraph graph;
  CosetStructure cosets;
  Word conjugator;  // conjugator * cycle-core * conjugator^-1 = input word
};

// Builds the finite-index subgroup in which the cyclic core of `gamma`
// becomes a free basis element: the core cycle graph with each generator's
// partial edge map completed to a permutation (unmatched sources mapped to
// unmatched targets in ascending vertex order). Index = max(1, core length).
HallCover hall_completion(const Word& gamma, int rank);

// Reads coset representatives off the spanning tree and computes the
// permutation action and Schreier elements; verifies the defining relation
// rep_j * x = alpha * rep_{sigma(j)} for every generator before returning.
CosetStructure coset_structure(const SubgroupGraph& g);

// Membership with rewriting: the expression of w in the subgroup basis if
// the path of w from the base vertex closes up, otherwise nullopt.
std::optional<BasisWord> membership(const Word& w, const SubgroupGraph& g);

}  // namespace conjtrace
