#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "smlab/whitehead.hpp"

using namespace smlab;
using namespace smlab::whitehead;

namespace {

// A word over rank 2 whose 12 successive two-letter factors are exactly the
// 12 reduced two-letter words (an Eulerian circuit on the letter digraph).
const std::vector<int> kCoveringWord = {1, 1, 2, 2, 1, -2, -2, -1, -1, 2, -1, -2, 1};

Word repeat_covering_word(int copies) {
  std::vector<int> letters;
  for (int i = 0; i < copies; ++i)
    letters.insert(letters.end(), kCoveringWord.begin(), kCoveringWord.end());
  return Word::from_signed(letters);
}

// Independent cut-vertex oracle: deleting v strictly increases the number of
// connected components (isolated vertices count as components throughout).
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int component_count(int vertices, const std::vector<std::pair<int, int>>& edges,
                    int deleted) {
  UnionFind uf(vertices);
  for (const auto& [a, b] : edges) {
    if (a == deleted || b == deleted) continue;
    uf.unite(a, b);
  }
  int count = 0;
  for (int v = 0; v < vertices; ++v) {
    if (v == deleted) continue;
    if (uf.find(v) == v) ++count;
  }
  return count;
}

std::set<int> oracle_cut_vertices(int vertices,
                                  const std::vector<std::pair<int, int>>& edges) {
  // A non-isolated v is a cut vertex iff deleting it leaves strictly more
  // components among the remaining vertices than the whole graph had:
  // removing a non-isolated vertex can only split its own component.
  int base = component_count(vertices, edges, -1);
  std::set<int> cuts;
  std::vector<int> degree(vertices, 0);
  for (const auto& [a, b] : edges) {
    if (a == b) {
      degree[a] += 2;
    } else {
      ++degree[a];
      ++degree[b];
    }
  }
  for (int v = 0; v < vertices; ++v) {
    if (degree[v] == 0) continue;
    if (component_count(vertices, edges, v) > base) cuts.insert(v);
  }
  return cuts;
}

std::set<std::pair<int, int>> oracle_isolated_edges(
    int vertices, const std::vector<std::pair<int, int>>& edges) {
  // An isolated edge is a whole component consisting of two distinct
  // vertices joined by exactly one edge.
  UnionFind uf(vertices);
  for (const auto& [a, b] : edges) uf.unite(a, b);
  std::vector<int> component_vertices(vertices, 0);
  std::vector<int> component_edges(vertices, 0);
  for (int v = 0; v < vertices; ++v) ++component_vertices[uf.find(v)];
  for (const auto& [a, b] : edges) ++component_edges[uf.find(a)];
  std::set<std::pair<int, int>> isolated;
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    int root = uf.find(a);
    if (component_vertices[root] == 2 && component_edges[root] == 1)
      isolated.insert({std::min(a, b), std::max(a, b)});
  }
  return isolated;
}

void check_against_oracles(int rank, const std::vector<std::pair<int, int>>& edges) {
  WhiteheadGraph g(rank, edges, false);
  int vertices = 2 * rank;

  std::set<int> cuts = oracle_cut_vertices(vertices, edges);
  std::optional<int> found = has_cut_vertex(g);
  CHECK(found.has_value() == !cuts.empty());
  if (found) CHECK(cuts.count(*found) == 1);

  std::set<std::pair<int, int>> isolated = oracle_isolated_edges(vertices, edges);
  std::optional<std::pair<int, int>> edge = has_isolated_edge(g);
  CHECK(edge.has_value() == !isolated.empty());
  if (edge) {
    std::pair<int, int> norm{std::min(edge->first, edge->second),
                             std::max(edge->first, edge->second)};
    CHECK(isolated.count(norm) == 1);
  }
}

}  // namespace

TEST_CASE("vertex numbering round trips") {
  for (int g = 1; g <= 3; ++g) {
    for (int sign : {1, -1}) {
      Letter l{g, sign};
      int v = vertex_of(l);
      CHECK(letter_of_vertex(v) == l);
      CHECK(inverse_vertex(v) == vertex_of(l.inverse()));
    }
  }
  CHECK(vertex_of(Letter{1, 1}) == 0);
  CHECK(vertex_of(Letter{1, -1}) == 1);
  CHECK(vertex_of(Letter{2, 1}) == 2);
  CHECK(vertex_of(Letter{2, -1}) == 3);
}

TEST_CASE("build_whitehead_graph edge rules") {
  Alphabet alphabet{2};
  SUBCASE("single letter has only the external edge") {
    WhiteheadGraph g = build_whitehead_graph(Word::from_signed({1}), alphabet, true);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0] == std::pair<int, int>{0, 1});
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
  }
  SUBCASE("two letters") {
    // x1 x2: internal edge {x1, x2^{-1}}, external edge {x2, x1^{-1}}.
    WhiteheadGraph g = build_whitehead_graph(Word::from_signed({1, 2}), alphabet, true);
    REQUIRE(g.edges().size() == 2);
    std::set<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
    CHECK(edges.count({0, 3}) == 1);
    CHECK(edges.count({1, 2}) == 1);
  }
  SUBCASE("commutator gives a four-cycle") {
    WhiteheadGraph g =
        build_whitehead_graph(Word::from_signed({1, 2, -1, -2}), alphabet, true);
    REQUIRE(g.edges().size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
  }
  SUBCASE("edge count equals word length with the external edge") {
    Rng rng = make_rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
      Word w = random_reduced_word(alphabet, 1 + uniform_index(rng, 30), rng);
      Word core = cyclic_reduce(w).core;
      if (core.empty()) continue;
      CHECK(build_whitehead_graph(core, alphabet, true).edges().size() == core.size());
      CHECK(build_whitehead_graph(core, alphabet, false).edges().size() ==
            core.size() - 1);
    }
  }
  SUBCASE("rejects non-cyclically-reduced input") {
    CHECK_THROWS_AS(build_whitehead_graph(Word::from_signed({1, 2, -1}), alphabet, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_whitehead_graph(Word(), alphabet, true), std::invalid_argument);
  }
}

TEST_CASE("cut vertex detection on hand-built graphs") {
  SUBCASE("path graph: middle vertex separates") {
    WhiteheadGraph g(2, {{0, 2}, {2, 1}}, false);
    std::optional<int> v = has_cut_vertex(g);
    REQUIRE(v.has_value());
    CHECK(*v == 2);
  }
  SUBCASE("complete graph on four vertices has none") {
    WhiteheadGraph g(2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, false);
    CHECK_FALSE(has_cut_vertex(g).has_value());
  }
  SUBCASE("parallel edges do not create cut vertices") {
    // Two vertices joined twice: neither separates.
    WhiteheadGraph g(2, {{0, 1}, {0, 1}}, false);
    CHECK_FALSE(has_cut_vertex(g).has_value());
  }
  SUBCASE("loops are ignored") {
    WhiteheadGraph g(2, {{0, 0}, {0, 2}, {2, 1}}, false);
    std::optional<int> v = has_cut_vertex(g);
    REQUIRE(v.has_value());
    CHECK(*v == 2);
  }
  SUBCASE("empty graph") {
    WhiteheadGraph g(2, {}, false);
    CHECK_FALSE(has_cut_vertex(g).has_value());
  }
}

TEST_CASE("cut vertices and isolated edges agree with component-count oracles") {
  SUBCASE("exhaustive simple graphs on four vertices") {
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) all_pairs.push_back({a, b});
    for (unsigned mask = 0; mask < (1u << all_pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < all_pairs.size(); ++i)
        if (mask & (1u << i)) edges.push_back(all_pairs[i]);
      check_against_oracles(2, edges);
    }
  }
  SUBCASE("exhaustive simple graphs on six vertices with at most five edges") {
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) all_pairs.push_back({a, b});
    // 15 possible edges; enumerate subsets of size <= 5.
    for (unsigned mask = 0; mask < (1u << all_pairs.size()); ++mask) {
      if (__builtin_popcount(mask) > 5) continue;
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < all_pairs.size(); ++i)
        if (mask & (1u << i)) edges.push_back(all_pairs[i]);
      check_against_oracles(3, edges);
    }
  }
  SUBCASE("random multigraphs with loops and parallel edges") {
    Rng rng = make_rng(2024);
    for (int trial = 0; trial < 3000; ++trial) {
      int rank = 2 + static_cast<int>(uniform_index(rng, 2));
      int vertices = 2 * rank;
      std::size_t edge_count = uniform_index(rng, 9);
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < edge_count; ++i) {
        int a = static_cast<int>(uniform_index(rng, vertices));
        int b = static_cast<int>(uniform_index(rng, vertices));
        edges.push_back({a, b});
      }
      check_against_oracles(rank, edges);
    }
  }
}

TEST_CASE("isolated edge detection") {
  SUBCASE("single edge is isolated") {
    WhiteheadGraph g(2, {{0, 1}}, false);
    auto e = has_isolated_edge(g);
    REQUIRE(e.has_value());
    CHECK(std::min(e->first, e->second) == 0);
    CHECK(std::max(e->first, e->second) == 1);
  }
  SUBCASE("doubled edge is not isolated") {
    WhiteheadGraph g(2, {{0, 1}, {0, 1}}, false);
    CHECK_FALSE(has_isolated_edge(g).has_value());
  }
  SUBCASE("loop is not an isolated edge") {
    WhiteheadGraph g(2, {{3, 3}}, false);
    CHECK_FALSE(has_isolated_edge(g).has_value());
  }
}

TEST_CASE("two_letter_coverage tracks reduced factors") {
  Alphabet alphabet{2};
  SUBCASE("empty and single-letter words cover nothing") {
    CHECK(two_letter_coverage(Word(), alphabet).covered() == 0);
    CHECK(two_letter_coverage(Word::from_signed({1}), alphabet).covered() == 0);
    CHECK_FALSE(two_letter_coverage(Word(), alphabet).total());
  }
  SUBCASE("the covering word reaches all 12 reduced pairs") {
    CoverageTable t = two_letter_coverage(Word::from_signed(kCoveringWord), alphabet);
    CHECK(t.covered() == 12);
    CHECK(t.total());
  }
  SUBCASE("duplicates count once") {
    CoverageTable t = two_letter_coverage(Word::from_signed({1, 1, 1, 1}), alphabet);
    CHECK(t.covered() == 1);
    CHECK(t.seen(Letter{1, 1}, Letter{1, 1}));
    CHECK_FALSE(t.seen(Letter{1, 1}, Letter{2, 1}));
  }
  SUBCASE("record ignores cancelling pairs") {
    CoverageTable t(2);
    t.record(Letter{1, 1}, Letter{1, -1});
    CHECK(t.covered() == 0);
  }
}

TEST_CASE("full certifier on fixed words") {
  Alphabet alphabet{2};
  SUBCASE("basis letters and short words are inconclusive") {
    PrimitivityVerdict v = certify_nonprimitive_full(Word::from_signed({1}), alphabet);
    CHECK(v.kind == VerdictKind::Inconclusive);
    v = certify_nonprimitive_full(Word::from_signed({1, 2}), alphabet);
    CHECK(v.kind == VerdictKind::Inconclusive);
  }
  SUBCASE("x1 x1 x2 x2 is not primitive") {
    PrimitivityVerdict v =
        certify_nonprimitive_full(Word::from_signed({1, 1, 2, 2}), alphabet);
    CHECK(v.kind == VerdictKind::NotPrimitive);
    CHECK(v.certificate == CertificateKind::NoCutVertexNoIsolatedEdge);
    CHECK(v.letters_read == 4);
  }
  SUBCASE("commutator is not primitive") {
    PrimitivityVerdict v =
        certify_nonprimitive_full(Word::from_signed({1, 2, -1, -2}), alphabet);
    CHECK(v.kind == VerdictKind::NotPrimitive);
  }
  SUBCASE("proper powers of a basis letter are flagged") {
    // x1^5 yields five parallel edges between the x1 vertices: no cut
    // vertex, no isolated edge, and the word is indeed not primitive.
    PrimitivityVerdict v =
        certify_nonprimitive_full(Word::from_signed({1, 1, 1, 1, 1}), alphabet);
    CHECK(v.kind == VerdictKind::NotPrimitive);
  }
  SUBCASE("conjugates are reduced to their core first") {
    // x2 (x1 x1 x2 x2) x2^{-1} is conjugate to a non-primitive word.
    Word w = free_reduce(Word::from_signed({2, 1, 1, 2, 2, -2}));
    PrimitivityVerdict v = certify_nonprimitive_full(w, alphabet);
    CHECK(v.kind == VerdictKind::NotPrimitive);
    CHECK(v.letters_read == w.size());
  }
  SUBCASE("primitive words are never flagged") {
    // Images of x1 under random basis moves are primitive by construction.
    Rng rng = make_rng(31);
    for (int trial = 0; trial < 400; ++trial) {
      Word primitive =
          apply_random_nielsen_moves(Word::from_signed({1}), alphabet, 8, rng);
      PrimitivityVerdict v = certify_nonprimitive_full(primitive, alphabet);
      CHECK(v.kind == VerdictKind::Inconclusive);
    }
  }
}

TEST_CASE("sublinear tester contract") {
  Alphabet alphabet{2};
  Rng rng = make_rng(7);
  SUBCASE("words shorter than three letters are inconclusive") {
    for (const std::vector<int>& letters :
         {std::vector<int>{}, std::vector<int>{1}, std::vector<int>{1, 2}}) {
      PrimitivityVerdict v =
          sublinear_nonprimitivity_test(Word::from_signed(letters), alphabet, 0.5, rng);
      CHECK(v.kind == VerdictKind::Inconclusive);
      CHECK(v.certificate == CertificateKind::None);
      CHECK(v.letters_read == 0);
    }
  }
  SUBCASE("powers of one letter never reach coverage") {
    std::vector<int> letters(200, 1);
    PrimitivityVerdict v =
        sublinear_nonprimitivity_test(Word::from_signed(letters), alphabet, 0.6, rng);
    CHECK(v.kind == VerdictKind::Inconclusive);
  }
  SUBCASE("repeated covering word is flagged from any window") {
    Word w = repeat_covering_word(16);  // 208 letters, no end cancellation
    for (int trial = 0; trial < 50; ++trial) {
      PrimitivityVerdict v = sublinear_nonprimitivity_test(w, alphabet, 0.6, rng);
      REQUIRE(v.kind == VerdictKind::NotPrimitive);
      CHECK(v.certificate == CertificateKind::CompleteSampledGraph);
      CHECK(v.cancellation_depth == 0);
      // ceil(208^0.6) = 25-letter window, read after one boundary pair.
      CHECK(v.window_length == 25);
      CHECK(v.letters_read == 2 + 25);
      CHECK(replay_certificate(w, alphabet, v));
    }
  }
  SUBCASE("deep conjugation exhausts the budget") {
    // c core c^{-1} with |c| = 10: budget ceil(100^0.3) = 4 < 10.
    Word conjugator = Word::from_signed({1, 2, 1, 2, 1, 2, 1, 2, 1, 2});
    Word core = repeat_covering_word(6);  // 78 letters
    Word w = free_reduce(concat(concat(conjugator, core), inverse(conjugator)));
    REQUIRE(w.size() == 98);
    PrimitivityVerdict v = sublinear_nonprimitivity_test(w, alphabet, 0.3, rng);
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(v.letters_read == 2 * 4);
  }
  SUBCASE("shallow conjugation is trimmed and then flagged") {
    Word conjugator = Word::from_signed({1, 2});
    Word core = repeat_covering_word(16);
    Word w = free_reduce(concat(concat(conjugator, core), inverse(conjugator)));
    REQUIRE(w.size() == 212);
    PrimitivityVerdict v = sublinear_nonprimitivity_test(w, alphabet, 0.6, rng);
    REQUIRE(v.kind == VerdictKind::NotPrimitive);
    CHECK(v.cancellation_depth == 2);
    // Trimmed core has 208 letters: ceil(208^0.6) = 25.
    CHECK(v.window_length == 25);
    CHECK(v.letters_read == 2 * 3 + 25);
    CHECK(replay_certificate(w, alphabet, v));
  }
  SUBCASE("letters_read matches the verdict fields") {
    for (int trial = 0; trial < 500; ++trial) {
      Word w = random_reduced_word(alphabet, 3 + uniform_index(rng, 400), rng);
      PrimitivityVerdict v = sublinear_nonprimitivity_test(w, alphabet, 0.5, rng);
      if (v.certificate == CertificateKind::CompleteSampledGraph)
        CHECK(v.letters_read == 2 * (v.cancellation_depth + 1) + v.window_length);
    }
  }
}

TEST_CASE("sublinear NotPrimitive is confirmed by the full certifier") {
  Alphabet alphabet{2};
  Rng rng = make_rng(404);
  int flagged = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_reduced_word(alphabet, 2000 + uniform_index(rng, 2000), rng);
    PrimitivityVerdict fast = sublinear_nonprimitivity_test(w, alphabet, 0.6, rng);
    if (fast.kind == VerdictKind::NotPrimitive) {
      ++flagged;
      CHECK(replay_certificate(w, alphabet, fast));
      PrimitivityVerdict full = certify_nonprimitive_full(w, alphabet);
      CHECK(full.kind == VerdictKind::NotPrimitive);
    }
  }
  // At these lengths the sampled window all but surely covers every
  // two-letter word, so random words are flagged near-certainly.
  CHECK(flagged > 450);
}

TEST_CASE("replay_certificate rejects tampered verdicts") {
  Alphabet alphabet{2};
  Rng rng = make_rng(55);
  Word conjugator = Word::from_signed({1, 2});
  Word w = free_reduce(
      concat(concat(conjugator, repeat_covering_word(16)), inverse(conjugator)));
  PrimitivityVerdict v = sublinear_nonprimitivity_test(w, alphabet, 0.6, rng);
  REQUIRE(v.kind == VerdictKind::NotPrimitive);
  REQUIRE(replay_certificate(w, alphabet, v));

  PrimitivityVerdict bad = v;
  bad.cancellation_depth = 0;  // boundary no longer mismatches
  CHECK_FALSE(replay_certificate(w, alphabet, bad));

  bad = v;
  bad.window_length = w.size();  // window escapes the trimmed core
  CHECK_FALSE(replay_certificate(w, alphabet, bad));

  bad = v;
  bad.window_start = w.size();  // out of range
  CHECK_FALSE(replay_certificate(w, alphabet, bad));

  bad = v;
  bad.certificate = CertificateKind::NoCutVertexNoIsolatedEdge;
  CHECK_FALSE(replay_certificate(w, alphabet, bad));

  // A window over a coverage-free stretch must not replay.
  std::vector<int> mixed;
  for (int i = 0; i < 100; ++i) mixed.push_back(1);
  mixed.insert(mixed.end(), kCoveringWord.begin(), kCoveringWord.end());
  for (int i = 0; i < 100; ++i) mixed.push_back(2);
  Word skewed = Word::from_signed(mixed);
  PrimitivityVerdict fake;
  fake.kind = VerdictKind::NotPrimitive;
  fake.certificate = CertificateKind::CompleteSampledGraph;
  fake.cancellation_depth = 0;
  fake.window_start = 0;  // inside the x1^100 prefix: no coverage
  fake.window_length = 30;
  fake.letters_read = 32;
  CHECK_FALSE(replay_certificate(skewed, alphabet, fake));
}
