#include <algorithm>

#include "pms/error.hpp"
#include "pms/polytope.hpp"

namespace pms {

namespace {

// Vectors with coordinates in [0, k] packed in base k+1.
struct Packing {
  int n;
  std::int64_t base;
  std::size_t size;

  std::size_t encode(const IntVec& x) const {
    std::size_t code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * base + static_cast<std::size_t>(x[i]);
    return code;
  }
};

class DilateEnumerator {
 public:
  DilateEnumerator(const std::vector<AffineInequality>& sys, int n, int k)
      : sys_(sys), n_(n), k_(k), partial_(sys.size(), 0),
        suffix_min_(sys.size(), std::vector<std::int64_t>(n + 1, 0)) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
      for (int j = n - 1; j >= 0; --j) {
        suffix_min_[i][j] =
            suffix_min_[i][j + 1] + std::min<std::int64_t>(0, sys[i].normal[j] * k);
      }
    }
  }

  template <typename F>
  void run(F&& visit) {
    IntVec x(n_, 0);
    recurse(0, x, visit);
  }

 private:
  template <typename F>
  void recurse(int j, IntVec& x, F& visit) {
    for (std::size_t i = 0; i < sys_.size(); ++i) {
      if (partial_[i] + suffix_min_[i][j] > k_ * sys_[i].rhs) return;
    }
    if (j == n_) {
      visit(x);
      return;
    }
    for (int value = 0; value <= k_; ++value) {
      x[j] = value;
      for (std::size_t i = 0; i < sys_.size(); ++i) partial_[i] += sys_[i].normal[j] * value;
      recurse(j + 1, x, visit);
      for (std::size_t i = 0; i < sys_.size(); ++i) partial_[i] -= sys_[i].normal[j] * value;
    }
    x[j] = 0;
  }

  const std::vector<AffineInequality>& sys_;
  int n_;
  std::int64_t k_;
  std::vector<std::int64_t> partial_;
  std::vector<std::vector<std::int64_t>> suffix_min_;
};

}  // namespace

IdpResult idp_check(const Graph& g, int k, DilateLattice lattice) {
  if (g.n() > kMaxIdpVertices || k < 1 || k > kMaxIdpDilate) {
    throw Error(ErrorKind::TooLarge,
                "dilate enumeration is limited to n <= " +
                    std::to_string(kMaxIdpVertices) + " and 1 <= k <= " +
                    std::to_string(kMaxIdpDilate));
  }
  const int n = g.n();
  PointSet pts = lattice_points(g);
  // Facets plus the affine-hull equation describe P exactly.
  std::vector<AffineInequality> sys;
  for (auto& ineq : inequality_system(g))
    if (ineq.facet || ineq.source.kind == SourceKind::Balance) sys.push_back(std::move(ineq));

  Packing pack{n, k + 1, 1};
  for (int i = 0; i < n; ++i) pack.size *= static_cast<std::size_t>(k + 1);

  // sums[c] != 0 iff code c is a sum of j points, j growing to k.
  std::vector<std::uint8_t> sums(pack.size, 0);
  std::vector<IntVec> level{IntVec(n, 0)};
  for (int j = 1; j <= k; ++j) {
    std::vector<std::uint8_t> next_mark(pack.size, 0);
    std::vector<IntVec> next;
    for (const auto& base : level) {
      for (const auto& p : pts.points) {
        IntVec s(n);
        for (int i = 0; i < n; ++i) s[i] = base[i] + p[i];
        std::size_t code = pack.encode(s);
        if (!next_mark[code]) {
          next_mark[code] = 1;
          next.push_back(std::move(s));
        }
      }
    }
    level = std::move(next);
    sums = std::move(next_mark);
  }

  IdpResult result;
  DilateEnumerator enumerate(sys, n, k);
  enumerate.run([&](const IntVec& x) {
    if (lattice == DilateLattice::Polytope && !pts.affine_lattice.contains(x)) return;
    ++result.dilate_points;
    if (!sums[pack.encode(x)] && result.value) {
      result.value = false;
      result.counterexample = x;
    }
  });
  return result;
}

}  // namespace pms
