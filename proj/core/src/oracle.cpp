#include "pms/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "pms/classify.hpp"
#include "pms/error.hpp"

namespace pms {

namespace {

// Rank over F_p for p = 2^31 - 1. For matrices with entries in {-1, 0, 1}
// and at most 13 columns every k x k minor is bounded by k^(k/2) <= 1.8e7 < p
// in absolute value (Hadamard), so the rank over F_p equals the rank over Q.
constexpr std::uint64_t kPrime = 2147483647ULL;
static_assert(kMaxSullivantVertices <= 13, "modular rank exactness bound");

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e != 0) {
    if (e & 1U) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1U;
  }
  return r;
}

int modular_affine_rank(const std::vector<const IntVec*>& pts) {
  if (pts.empty()) return -1;
  const std::size_t n = pts[0]->size();
  std::vector<std::vector<std::uint64_t>> m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<std::uint64_t> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t d = (*pts[i])[j] - (*pts[0])[j];
      row[j] = static_cast<std::uint64_t>((d % static_cast<std::int64_t>(kPrime) +
                                           static_cast<std::int64_t>(kPrime))) %
               kPrime;
    }
    m.push_back(std::move(row));
  }
  int r = 0;
  for (std::size_t c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    std::uint64_t inv = mod_pow(m[r][c], kPrime - 2);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      std::uint64_t f = m[i][c] * inv % kPrime;
      for (std::size_t j = c; j < n; ++j)
        m[i][j] = (m[i][j] + kPrime - f * m[r][j] % kPrime) % kPrime;
    }
    ++r;
  }
  return r;
}

// Plain branching over the partner of the minimum vertex; no memo.
bool matchable_by_search(const Graph& g, std::uint64_t s) {
  if (s == 0) return true;
  int u = std::countr_zero(s);
  std::uint64_t rest = s & ~(std::uint64_t{1} << u);
  for (std::uint64_t b = g.adjacency(u) & rest; b != 0; b &= b - 1)
    if (matchable_by_search(g, rest & ~(b & -b))) return true;
  return false;
}

}  // namespace

MatchableFamily brute_force_matchable(const Graph& g) {
  if (g.n() > kMaxBruteForceVertices) {
    throw Error(ErrorKind::TooLarge, "brute-force W(G) is limited to " +
                                         std::to_string(kMaxBruteForceVertices) +
                                         " vertices");
  }
  MatchableFamily family;
  family.graph_n = g.n();
  const std::uint64_t total = std::uint64_t{1} << g.n();
  for (std::uint64_t s = 0; s < total; ++s) {
    if (std::popcount(s) % 2 == 0 && matchable_by_search(g, s))
      family.subsets.emplace_back(g.n(), s);
  }
  std::sort(family.subsets.begin(), family.subsets.end());
  return family;
}

SullivantResult sullivant_compressed(const Graph& g) {
  if (g.n() > kMaxSullivantVertices) {
    throw Error(ErrorKind::TooLarge, "the two-level oracle is limited to " +
                                         std::to_string(kMaxSullivantVertices) +
                                         " vertices");
  }
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  const MatchableFamily family = brute_force_matchable(g);
  std::vector<IntVec> points;
  for (VertexSet s : family.subsets) {
    IntVec x(g.n(), 0);
    s.for_each([&](int v) { x[v] = 1; });
    points.push_back(std::move(x));
  }
  std::vector<const IntVec*> all;
  for (const auto& x : points) all.push_back(&x);
  const int dim = modular_affine_rank(all);

  SullivantResult result;
  for (AffineInequality ineq : inequality_system(g)) {
    std::vector<const IntVec*> active;
    for (const auto& x : points)
      if (dot(ineq.normal, x) == ineq.rhs) active.push_back(&x);
    if (active.empty() || active.size() == points.size()) continue;
    if (modular_affine_rank(active) != dim - 1) continue;
    ++result.facets_checked;
    std::vector<std::int64_t> levels;
    std::vector<VertexSet> realizing;
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::int64_t level = dot(ineq.normal, points[i]) - ineq.rhs;
      if (std::find(levels.begin(), levels.end(), level) == levels.end()) {
        levels.push_back(level);
        realizing.push_back(family.subsets[i]);
      }
    }
    if (levels.size() > 2 && result.compressed) {
      result.compressed = false;
      ineq.facet = true;
      std::vector<std::size_t> order(levels.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return levels[a] > levels[b]; });
      LevelWitness w;
      w.facet = ineq;
      for (std::size_t i : order) {
        w.levels.push_back(levels[i]);
        if (w.realizing.size() < 3) w.realizing.push_back(realizing[i]);
      }
      std::sort(w.levels.begin(), w.levels.end());
      result.witness = std::move(w);
    }
  }
  return result;
}

bool has_odd_cycle_ge5_by_search(const Graph& g) {
  const int n = g.n();
  // Simple paths from the minimum vertex of the cycle through larger vertices.
  std::function<bool(int, int, std::uint64_t, int)> extend =
      [&](int start, int cur, std::uint64_t used, int len) {
        if (len >= 5 && len % 2 == 1 && g.adjacent(cur, start)) return true;
        for (std::uint64_t b = g.adjacency(cur) & ~used; b != 0; b &= b - 1) {
          int w = std::countr_zero(b);
          if (w <= start) continue;
          if (extend(start, w, used | (std::uint64_t{1} << w), len + 1)) return true;
        }
        return false;
      };
  for (int s = 0; s < n; ++s)
    if (extend(s, s, std::uint64_t{1} << s, 1)) return true;
  return false;
}

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::All: return "all";
    case Family::Bipartite: return "bipartite";
    case Family::Pseudotree: return "pseudotree";
    case Family::Multipartite: return "multipartite";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : {Family::All, Family::Bipartite, Family::Pseudotree, Family::Multipartite})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

int max_corpus_vertices(Family f) {
  switch (f) {
    case Family::All: return 8;
    case Family::Bipartite: return 9;
    case Family::Pseudotree: return 10;
    case Family::Multipartite: return 10;
  }
  return 0;
}

SweepReport agreement_sweep(const CorpusSpec& spec, bool timing) {
  using Clock = std::chrono::steady_clock;
  SweepReport report;
  auto record = [&](const Graph& g, std::string property, auto&& compute) {
    auto start = Clock::now();
    SweepRecord r;
    r.graph = g;
    r.property = std::move(property);
    compute(r);
    if (timing) {
      r.micros = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)
                     .count();
    }
    r.agree = r.theorem_value == r.oracle_value &&
              (!r.theorem_delta || !r.oracle_delta || *r.theorem_delta == *r.oracle_delta);
    if (!r.agree) ++report.disagreements;
    report.records.push_back(std::move(r));
  };
  auto oracle_gorenstein = [](const Graph& g, SweepRecord& r) {
    auto cert = gorenstein_geometric(g);
    r.oracle_value = cert.has_value();
    if (cert && cert->delta) r.oracle_delta = *cert->delta;
  };

  for (const Graph& g : generate_corpus(spec)) {
    if (g.n() <= kMaxBruteForceVertices) {
      record(g, "matchable", [&](SweepRecord& r) {
        r.theorem_value = true;
        r.oracle_value = matchable_subsets(g).subsets == brute_force_matchable(g).subsets;
      });
    }
    record(g, "facet-flags", [&](SweepRecord& r) {
      r.theorem_value = true;
      r.oracle_value = verify_facet_flags(g, inequality_system(g), lattice_points(g)).ok();
    });
    if (g.n() <= kMaxSullivantVertices) {
      record(g, "compressed", [&](SweepRecord& r) {
        r.theorem_value = compressed_by_theorem(g).value;
        r.oracle_value = sullivant_compressed(g).compressed;
      });
    }
    std::optional<Verdict> verdict;
    switch (spec.family) {
      case Family::Bipartite: verdict = gorenstein_bipartite(g); break;
      case Family::Pseudotree: verdict = gorenstein_pseudotree(g); break;
      case Family::Multipartite:
        try {
          verdict = gorenstein_complete_multipartite(*complete_multipartite_shape(g));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::Unsupported) throw;
        }
        break;
      case Family::All: verdict = gorenstein_dispatch(g); break;
    }
    if (verdict) {
      record(g, "gorenstein", [&](SweepRecord& r) {
        r.theorem_value = verdict->value;
        if (verdict->certificate && verdict->certificate->delta)
          r.theorem_delta = *verdict->certificate->delta;
        oracle_gorenstein(g, r);
      });
    }
    if (spec.family == Family::Bipartite) {
      record(g, "gorenstein-alpha", [&](SweepRecord& r) {
        auto cert = alpha_system_solve(g);
        r.theorem_value = cert.has_value();
        if (cert && cert->delta) r.theorem_delta = *cert->delta;
        oracle_gorenstein(g, r);
      });
    }
  }
  return report;
}

}  // namespace pms
