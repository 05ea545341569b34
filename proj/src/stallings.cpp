#include "conjtrace/stallings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace conjtrace {

namespace {

// Rewriting table: non-tree edges carry the basis letters. The marked edge
// is basis element 1, oriented along the distinguished cycle; the remaining
// non-tree edges follow in (generator, source) order with positive
// orientation.
struct RewriteTable {
  std::map<std::pair<int, int>, std::pair<int, int>> emit;  // (g,u) -> (index, orient)
  int basis_size = 0;
};

RewriteTable build_rewrite_table(const SubgroupGraph& g) {
  RewriteTable t;
  auto is_tree = [&](int gen, int u) {
    return std::find(g.tree_edges.begin(), g.tree_edges.end(),
                     EdgeRef{gen, u}) != g.tree_edges.end();
  };
  t.emit[{g.marked_edge.gen, g.marked_edge.source}] = {1, g.marked_orientation};
  int next = 2;
  for (int gen = 1; gen <= g.rank; ++gen)
    for (int u = 0; u < g.vertex_count; ++u) {
      if (EdgeRef{gen, u} == g.marked_edge || is_tree(gen, u)) continue;
      t.emit[{gen, u}] = {next++, 1};
    }
  t.basis_size = next - 1;
  return t;
}

std::vector<Word> tree_representatives(const SubgroupGraph& g) {
  std::vector<Word> reps(static_cast<std::size_t>(g.vertex_count), Word(g.rank));
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count), false);
  seen[static_cast<std::size_t>(g.base_vertex)] = true;
  std::vector<int> queue{g.base_vertex};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (const EdgeRef& e : g.tree_edges) {
      int w = g.target(e.gen, e.source);
      if (e.source == v && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        reps[static_cast<std::size_t>(w)] =
            multiply(reps[static_cast<std::size_t>(v)],
                     Word(g.rank, {e.gen}));
        queue.push_back(w);
      } else if (w == v && !seen[static_cast<std::size_t>(e.source)]) {
        seen[static_cast<std::size_t>(e.source)] = true;
        reps[static_cast<std::size_t>(e.source)] =
            multiply(reps[static_cast<std::size_t>(v)],
                     Word(g.rank, {-e.gen}));
        queue.push_back(e.source);
      }
    }
  }
  for (bool s : seen)
    if (!s) fail(ErrorKind::NotACover, "spanning tree does not span");
  return reps;
}

}  // namespace

void SubgroupGraph::check_invariants() const {
  if (rank < 1 || vertex_count < 1) fail(ErrorKind::NotACover, "empty graph");
  if (static_cast<int>(edge_to.size()) != rank ||
      static_cast<int>(edge_from.size()) != rank)
    fail(ErrorKind::NotACover, "missing edge maps");
  for (int g = 0; g < rank; ++g) {
    const auto& to = edge_to[static_cast<std::size_t>(g)];
    if (static_cast<int>(to.size()) != vertex_count)
      fail(ErrorKind::NotACover, "incomplete edge map");
    std::vector<bool> hit(static_cast<std::size_t>(vertex_count), false);
    for (int v = 0; v < vertex_count; ++v) {
      int w = to[static_cast<std::size_t>(v)];
      if (w < 0 || w >= vertex_count)
        fail(ErrorKind::NotACover, "edge target out of range");
      if (hit[static_cast<std::size_t>(w)])
        fail(ErrorKind::NotACover, "edge map is not a permutation");
      hit[static_cast<std::size_t>(w)] = true;
      if (edge_from[static_cast<std::size_t>(g)][static_cast<std::size_t>(w)] != v)
        fail(ErrorKind::NotACover, "inverse edge map inconsistent");
    }
  }
  if (static_cast<int>(tree_edges.size()) != vertex_count - 1)
    fail(ErrorKind::NotACover, "tree edge count wrong");
  for (const EdgeRef& e : tree_edges)
    if (e == marked_edge)
      fail(ErrorKind::NotACover, "marked edge inside spanning tree");
  tree_representatives(*this);  // throws if the tree does not span
}

namespace {

std::optional<BasisWord> rewrite_path(const Word& w, const SubgroupGraph& g,
                                      const RewriteTable& table, int from) {
  int v = from;
  BasisWord out;
  for (int l : w.letters()) {
    int gen = l > 0 ? l : -l;
    int u = l > 0 ? v : g.source_of(gen, v);
    auto it = table.emit.find({gen, u});
    if (it != table.emit.end()) {
      int letter = it->second.first * it->second.second * (l > 0 ? 1 : -1);
      if (!out.empty() && out.back() == -letter)
        out.pop_back();
      else
        out.push_back(letter);
    }
    v = g.step(l, v);
  }
  if (v != from) return std::nullopt;
  return out;
}

}  // namespace

std::optional<BasisWord> membership(const Word& w, const SubgroupGraph& g) {
  if (w.rank() != g.rank) fail(ErrorKind::RankMismatch, "membership: rank");
  RewriteTable table = build_rewrite_table(g);
  return rewrite_path(w, g, table, g.base_vertex);
}

CosetStructure coset_structure(const SubgroupGraph& g) {
  g.check_invariants();
  RewriteTable table = build_rewrite_table(g);
  CosetStructure cs;
  cs.rank = g.rank;
  cs.index = g.vertex_count;
  cs.reps = tree_representatives(g);
  cs.action = g.edge_to;

  // Basis words: dual of each non-tree edge, marked edge first and oriented
  // along the distinguished cycle.
  std::vector<std::pair<int, int>> order(static_cast<std::size_t>(table.basis_size));
  for (const auto& [edge, ind] : table.emit)
    order[static_cast<std::size_t>(ind.first - 1)] = edge;
  cs.basis.clear();
  for (int i = 0; i < table.basis_size; ++i) {
    auto [gen, u] = order[static_cast<std::size_t>(i)];
    int v = g.target(gen, u);
    Word dual = multiply(multiply(cs.reps[static_cast<std::size_t>(u)],
                                  Word(g.rank, {gen})),
                         invert(cs.reps[static_cast<std::size_t>(v)]));
    int orient = table.emit.at({gen, u}).second;
    cs.basis.push_back(orient == 1 ? dual : invert(dual));
  }

  cs.schreier.assign(static_cast<std::size_t>(g.rank), {});
  for (int gen = 1; gen <= g.rank; ++gen) {
    auto& row = cs.schreier[static_cast<std::size_t>(gen - 1)];
    row.resize(static_cast<std::size_t>(cs.index));
    for (int j = 0; j < cs.index; ++j) {
      int k = g.target(gen, j);
      Word lhs = multiply(cs.reps[static_cast<std::size_t>(j)], Word(g.rank, {gen}));
      Word alpha_word = multiply(lhs, invert(cs.reps[static_cast<std::size_t>(k)]));
      auto bw = rewrite_path(alpha_word, g, table, g.base_vertex);
      if (!bw)
        fail(ErrorKind::NotACover, "Schreier element escapes the subgroup");
      row[static_cast<std::size_t>(j)] = *bw;
      // Defining relation check: rep_j g == alpha * rep_{sigma(j)}.
      Word rhs = multiply(cs.expand(*bw), cs.reps[static_cast<std::size_t>(k)]);
      if (lhs != rhs)
        fail(ErrorKind::NotACover, "coset relation failed verification");
    }
  }
  return cs;
}

HallCover hall_completion(const Word& gamma, int rank) {
  if (gamma.rank() != rank)
    fail(ErrorKind::RankMismatch, "hall_completion: rank");
  if (gamma.is_identity())
    fail(ErrorKind::TrivialElement, "hall_completion: identity input");
  CanonicalForm cf = cyclic_canonical(gamma);
  const Word& core = cf.cls.core;
  int m = std::max(1, core.length());

  SubgroupGraph g;
  g.rank = rank;
  g.vertex_count = m;
  g.base_vertex = 0;
  g.edge_to.assign(static_cast<std::size_t>(rank),
                   std::vector<int>(static_cast<std::size_t>(m), -1));

  auto edge_of_position = [&](int i) -> EdgeRef {
    int l = core.letter(i);
    if (l > 0) return EdgeRef{l, i};
    return EdgeRef{-l, (i + 1) % m};
  };
  for (int i = 0; i < core.length(); ++i) {
    int l = core.letter(i);
    EdgeRef e = edge_of_position(i);
    int tgt = l > 0 ? (i + 1) % m : i;
    int& slot = g.edge_to[static_cast<std::size_t>(e.gen - 1)]
                         [static_cast<std::size_t>(e.source)];
    if (slot != -1 && slot != tgt)
      fail(ErrorKind::NotACover, "core cycle is not folded");
    slot = tgt;
  }

  // Complete each generator to a permutation: unmatched sources to unmatched
  // targets in ascending vertex order.
  for (int gen = 0; gen < rank; ++gen) {
    auto& to = g.edge_to[static_cast<std::size_t>(gen)];
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int v = 0; v < m; ++v)
      if (to[static_cast<std::size_t>(v)] != -1)
        used[static_cast<std::size_t>(to[static_cast<std::size_t>(v)])] = true;
    std::vector<int> targets;
    for (int v = 0; v < m; ++v)
      if (!used[static_cast<std::size_t>(v)]) targets.push_back(v);
    std::size_t next = 0;
    for (int v = 0; v < m; ++v)
      if (to[static_cast<std::size_t>(v)] == -1)
        to[static_cast<std::size_t>(v)] = targets[next++];
  }
  g.edge_from.assign(static_cast<std::size_t>(rank),
                     std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int gen = 0; gen < rank; ++gen)
    for (int v = 0; v < m; ++v)
      g.edge_from[static_cast<std::size_t>(gen)][static_cast<std::size_t>(
          g.edge_to[static_cast<std::size_t>(gen)][static_cast<std::size_t>(v)])] = v;

  // Spanning tree: the cycle path without its closing edge, so the core is
  // dual to exactly the marked edge.
  for (int i = 0; i + 1 < core.length(); ++i)
    g.tree_edges.push_back(edge_of_position(i));
  g.marked_edge = edge_of_position(core.length() - 1);
  g.marked_orientation = core.letter(core.length() - 1) > 0 ? 1 : -1;

  g.check_invariants();
  auto member = membership(core, g);
  if (!member || member->size() != 1 || (*member)[0] != 1)
    fail(ErrorKind::NotACover, "core is not dual to the marked edge");

  return HallCover{g, coset_structure(g), cf.conjugator};
}

std::string SubgroupGraph::to_text() const {
  std::ostringstream os;
  os << "subgroup-graph v1\n";
  os << "rank " << rank << "\n";
  os << "vertices " << vertex_count << "\n";
  os << "base " << base_vertex << "\n";
  for (int g = 1; g <= rank; ++g) {
    os << "perm " << g;
    for (int v = 0; v < vertex_count; ++v) os << " " << target(g, v);
    os << "\n";
  }
  os << "marked " << marked_edge.gen << " " << marked_edge.source << " "
     << marked_orientation << "\n";
  for (const EdgeRef& e : tree_edges)
    os << "tree-edge " << e.gen << " " << e.source << "\n";
  os << "end\n";
  return os.str();
}

SubgroupGraph SubgroupGraph::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  SubgroupGraph g;
  if (!std::getline(is, line) || line != "subgroup-graph v1")
    fail(ErrorKind::ParseError, "bad graph header");
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "end") break;
    if (key == "rank") {
      ls >> g.rank;
    } else if (key == "vertices") {
      ls >> g.vertex_count;
      if (g.rank >= 1 && g.vertex_count >= 1) {
        g.edge_to.assign(static_cast<std::size_t>(g.rank),
                         std::vector<int>(static_cast<std::size_t>(g.vertex_count), -1));
      }
    } else if (key == "base") {
      ls >> g.base_vertex;
    } else if (key == "perm") {
      int gen = 0;
      ls >> gen;
      if (gen < 1 || gen > g.rank) fail(ErrorKind::ParseError, "bad perm line");
      for (int v = 0; v < g.vertex_count; ++v)
        ls >> g.edge_to[static_cast<std::size_t>(gen - 1)][static_cast<std::size_t>(v)];
    } else if (key == "marked") {
      ls >> g.marked_edge.gen >> g.marked_edge.source >> g.marked_orientation;
    } else if (key == "tree-edge") {
      EdgeRef e;
      ls >> e.gen >> e.source;
      g.tree_edges.push_back(e);
    } else {
      fail(ErrorKind::ParseError, "unknown graph line: " + key);
    }
    if (!ls) fail(ErrorKind::ParseError, "malformed graph line: " + line);
  }
  g.edge_from.assign(static_cast<std::size_t>(g.rank),
                     std::vector<int>(static_cast<std::size_t>(g.vertex_count), -1));
  for (int gen = 0; gen < g.rank; ++gen)
    for (int v = 0; v < g.vertex_count; ++v) {
      int w = g.edge_to[static_cast<std::size_t>(gen)][static_cast<std::size_t>(v)];
      if (w < 0 || w >= g.vertex_count)
        fail(ErrorKind::NotACover, "incomplete edge map");
      g.edge_from[static_cast<std::size_t>(gen)][static_cast<std::size_t>(w)] = v;
    }
  return g;
}

}  // namespace conjtrace
