#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pms/graph.hpp"
#include "pms/matchable.hpp"
#include "pms/polytope.hpp"

namespace pms {

// The oracles below share no decision logic with the characterizations they
// validate: their own matching search, rank computation, and level loop.

inline constexpr int kMaxSullivantVertices = 13;
inline constexpr int kMaxBruteForceVertices = 16;

struct LevelWitness {
  AffineInequality facet;
  std::vector<std::int64_t> levels;     // distinct values of a.x - b
  std::vector<VertexSet> realizing;     // one subset per level, first three
};

struct SullivantResult {
  bool compressed = true;
  std::optional<LevelWitness> witness;
  std::size_t facets_checked = 0;
};

// Two-level test: every facet functional takes at most two values on the
// lattice points. Facets are detected by rank among the candidate
// inequalities, ignoring the criterion flags.
SullivantResult sullivant_compressed(const Graph& g);

// W(G) by testing every even subset independently.
MatchableFamily brute_force_matchable(const Graph& g);

// Explicit search for an odd cycle of length >= 5 as a subgraph.
bool has_odd_cycle_ge5_by_search(const Graph& g);

enum class Family { All, Bipartite, Pseudotree, Multipartite };

const char* to_string(Family f) noexcept;
std::optional<Family> family_from_string(const std::string& s);
int max_corpus_vertices(Family f);

struct CorpusSpec {
  int max_n = 6;
  bool connected_only = true;  // only connected graphs are generated
  Family family = Family::All;
  bool dedup = true;           // isomorphism classes (canonical form)
};

inline constexpr int kMaxCanonicalVertices = 11;

// Relabelling minimising the adjacency code; equal for isomorphic graphs.
Graph canonical_form(const Graph& g);
std::uint64_t canonical_code(const Graph& g);

// Connected graphs with 1..max_n vertices in the family, one per isomorphism
// class, ordered by (n, canonical code).
std::vector<Graph> generate_corpus(const CorpusSpec& spec);

struct SweepRecord {
  Graph graph;
  std::string property;
  bool theorem_value = false;
  bool oracle_value = false;
  bool agree = false;
  std::optional<std::int64_t> theorem_delta;
  std::optional<std::int64_t> oracle_delta;
  std::optional<std::int64_t> micros;
};

struct SweepReport {
  std::vector<SweepRecord> records;
  std::size_t disagreements = 0;
};

// Theorem-versus-oracle comparisons over the corpus: W(G), compressedness,
// Gorensteinness (with index), and the facet flags.
SweepReport agreement_sweep(const CorpusSpec& spec, bool timing = false);

}  // namespace pms
