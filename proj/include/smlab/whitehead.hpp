#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "smlab/rng.hpp"
#include "smlab/words.hpp"

namespace smlab::whitehead {

/// Vertices of the Whitehead graph over rank r are the 2r letters
/// x_1, x_1^{-1}, ..., x_r, x_r^{-1}, numbered so that x_g -> 2(g-1) and
/// x_g^{-1} -> 2(g-1)+1.
int vertex_of(const Letter& l);
Letter letter_of_vertex(int v);
inline int inverse_vertex(int v) { return v ^ 1; }

/// Undirected multigraph on the 2r letter vertices.  For a cyclically
/// reduced word u it has one edge {a, b^{-1}} per length-2 factor ab of u,
/// plus (when requested) the external edge {last(u), first(u)^{-1}} closing
/// the cycle.
class WhiteheadGraph {
 public:
  WhiteheadGraph(int rank, std::vector<std::pair<int, int>> edges,
                 bool includes_external_edge);

  int rank() const { return rank_; }
  std::size_t vertex_count() const { return 2 * static_cast<std::size_t>(rank_); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool includes_external_edge() const { return external_; }
  std::size_t degree(int v) const;

 private:
  int rank_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::size_t> degrees_;
  bool external_;
};

/// Requires u cyclically reduced and nonempty, letters within the alphabet.
WhiteheadGraph build_whitehead_graph(const Word& u, const Alphabet& alphabet,
                                     bool with_external_edge);

/// Vertex whose removal disconnects some component of the multigraph
/// (isolated vertices never qualify), or nullopt.
std::optional<int> has_cut_vertex(const WhiteheadGraph& g);

/// Edge {a, b} with deg(a) == deg(b) == 1, or nullopt.  (A loop at a
/// degree-2 vertex does not qualify.)
std::optional<std::pair<int, int>> has_isolated_edge(const WhiteheadGraph& g);

/// Which of the 2r(2r-1) reduced two-letter words occur as factors of v
/// (wraparound factor excluded; v need not be reduced, but inverse pairs
/// are not counted).
class CoverageTable {
 public:
  explicit CoverageTable(int rank);

  void record(const Letter& a, const Letter& b);
  bool seen(const Letter& a, const Letter& b) const;
  std::size_t covered() const { return covered_; }
  /// True when every reduced two-letter word over the alphabet occurred.
  bool total() const;
  int rank() const { return rank_; }

 private:
  int rank_;
  std::vector<std::uint8_t> table_;
  std::size_t covered_ = 0;
};

CoverageTable two_letter_coverage(const Word& v, const Alphabet& alphabet);

enum class VerdictKind { NotPrimitive, Inconclusive };

enum class CertificateKind {
  None,
  /// Full graph of the cyclically reduced core has no cut vertex and no
  /// isolated edge.
  NoCutVertexNoIsolatedEdge,
  /// A sampled window achieved total two-letter coverage, so the core's
  /// Whitehead graph contains the complete graph on all 2r vertices.
  CompleteSampledGraph,
};

struct PrimitivityVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  CertificateKind certificate = CertificateKind::None;
  /// Letters of the input inspected to reach the verdict.
  std::size_t letters_read = 0;
  /// CompleteSampledGraph only: how the certificate was found.
  std::size_t cancellation_depth = 0;
  std::size_t window_start = 0;   // offset into the trimmed core
  std::size_t window_length = 0;
};

/// Whole-word certifier.  Cyclically reduces u and inspects the full
/// Whitehead graph (external edge included).  NotPrimitive is sound for
/// |core| > 2; anything else is Inconclusive.  Requires u freely reduced
/// and rank >= 2.
PrimitivityVerdict certify_nonprimitive_full(const Word& u, const Alphabet& alphabet);

/// Sublinear tester.  Matches end letters lazily up to a budget of
/// ceil(|u|^delta) cancellations to expose a prefix/suffix-trimmed core,
/// then samples one uniformly placed window of length ceil(|core|^delta)
/// and checks two-letter coverage.  Total coverage forces the complete
/// graph on 2r vertices inside the core's Whitehead graph, which rules out
/// cut vertices and isolated edges, hence NotPrimitive.  Reads
/// 2*(depth+1) + window letters.  Words of length < 3 are Inconclusive
/// outright.  Requires u freely reduced, 0 < delta < 1, rank >= 2.
PrimitivityVerdict sublinear_nonprimitivity_test(const Word& u,
                                                 const Alphabet& alphabet,
                                                 double delta, Rng& rng);

/// Re-checks a CompleteSampledGraph verdict against u by re-reading only
/// the certificate's own letters: the matched end pairs, the boundary
/// mismatch, and the window.  O(letters_read).
bool replay_certificate(const Word& u, const Alphabet& alphabet,
                        const PrimitivityVerdict& verdict);

}  // namespace smlab::whitehead
