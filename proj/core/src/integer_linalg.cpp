#include "pms/integer_linalg.hpp"

#include <numeric>
#include <stdexcept>

#include "pms/error.hpp"

namespace pms {

namespace {

struct Overflow {};

// Arithmetic helpers: checked for int64, plain for Integer.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer add(const Integer& a, const Integer& b) { return a + b; }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Extended gcd: s*a + t*b = g >= 0.
template <typename T>
void ext_gcd(const T& a, const T& b, T& g, T& s, T& t) {
  T old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    T q = old_r / r;
    T tmp = sub(old_r, mul(q, r));
    old_r = r;
    r = tmp;
    tmp = sub(old_s, mul(q, s1));
    old_s = s1;
    s1 = tmp;
    tmp = sub(old_t, mul(q, t1));
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

template <typename T>
std::vector<std::vector<T>> convert(const std::vector<IntVec>& rows) {
  std::vector<std::vector<T>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

// Fraction-free elimination; returns the pivot row indices in input order.
template <typename T>
std::vector<std::size_t> bareiss_pivots(std::vector<std::vector<T>> m) {
  std::vector<std::size_t> pivot_rows;
  if (m.empty()) return pivot_rows;
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    std::swap(order[p], order[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = sub(mul(m[r][c], m[i][j]), mul(m[i][c], m[r][j])) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  pivot_rows.assign(order.begin(), order.begin() + r);
  return pivot_rows;
}

template <typename T>
struct Hermite {
  int ambient;
  std::vector<std::vector<T>> rows;  // echelon rows, sorted by pivot
  std::vector<int> pivots;

  void insert(std::vector<T> v) {
    std::size_t idx = 0;
    for (int c = 0; c < ambient; ++c) {
      if (v[c] == 0) continue;
      while (idx < pivots.size() && pivots[idx] < c) ++idx;
      if (idx < pivots.size() && pivots[idx] == c) {
        auto& r = rows[idx];
        T g, s, t;
        ext_gcd(r[c], v[c], g, s, t);
        T rc = r[c] / g;
        T vc = v[c] / g;
        std::vector<T> merged(ambient), rest(ambient);
        for (int j = c; j < ambient; ++j) {
          merged[j] = add(mul(s, r[j]), mul(t, v[j]));
          rest[j] = sub(mul(rc, v[j]), mul(vc, r[j]));
        }
        r = std::move(merged);
        v = std::move(rest);
        continue;
      }
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
      pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(idx), c);
      return;
    }
  }

  void reduce() {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const int pc = pivots[j];
      for (std::size_t i = 0; i < j; ++i) {
        T q = floor_div(rows[i][pc], rows[j][pc]);
        if (q == 0) continue;
        for (int c = pc; c < ambient; ++c)
          rows[i][c] = sub(rows[i][c], mul(q, rows[j][c]));
      }
    }
  }
};

template <typename T>
HermiteBasis hermite_with(const std::vector<IntVec>& input, int ambient) {
  Hermite<T> h{ambient, {}, {}};
  for (const auto& row : input) h.insert(std::vector<T>(row.begin(), row.end()));
  h.reduce();
  HermiteBasis out;
  out.ambient = ambient;
  out.pivots = h.pivots;
  for (const auto& row : h.rows) {
    IntVec r(ambient);
    for (int c = 0; c < ambient; ++c) {
      if constexpr (std::is_same_v<T, Integer>) {
        if (row[c] > INT64_MAX || row[c] < INT64_MIN) {
          throw Error(ErrorKind::TooLarge, "lattice basis entry exceeds 64 bits");
        }
        r[c] = static_cast<std::int64_t>(row[c]);
      } else {
        r[c] = row[c];
      }
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> independent_rows(const std::vector<IntVec>& rows) {
  try {
    return bareiss_pivots(convert<std::int64_t>(rows));
  } catch (const Overflow&) {
    return bareiss_pivots(convert<Integer>(rows));
  }
}

int rank(const std::vector<IntVec>& rows) {
  return static_cast<int>(independent_rows(rows).size());
}

int affine_rank(const std::vector<IntVec>& points) {
  if (points.empty()) return -1;
  std::vector<IntVec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVec d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(diffs);
}

HermiteBasis hermite_normal_form(const std::vector<IntVec>& rows, int ambient) {
  try {
    return hermite_with<std::int64_t>(rows, ambient);
  } catch (const Overflow&) {
    return hermite_with<Integer>(rows, ambient);
  }
}

std::optional<IntVec> HermiteBasis::coordinates(const IntVec& x) const {
  IntVec rest = x;
  IntVec y(rows.size(), 0);
  std::size_t next_pivot = 0;
  for (int c = 0; c < ambient; ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      const IntVec& r = rows[next_pivot];
      if (rest[c] % r[c] != 0) return std::nullopt;
      std::int64_t k = rest[c] / r[c];
      y[next_pivot] = k;
      for (int j = c; j < ambient; ++j) rest[j] -= k * r[j];
      ++next_pivot;
    } else if (rest[c] != 0) {
      return std::nullopt;
    }
  }
  return y;
}

IntVec HermiteBasis::combine(const IntVec& y) const {
  IntVec x(ambient, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < ambient; ++c) x[c] += y[i] * rows[i][c];
  return x;
}

std::int64_t gcd_of(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<std::vector<Rational>> solve_rational(
    const std::vector<IntVec>& a, const std::vector<Rational>& b) {
  const std::size_t d = a.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = a[i][j];
    m[i][d] = b[i];
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) return std::nullopt;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= d; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = m[i][d] / m[i][i];
  return y;
}

}  // namespace pms
