#include "grptopo/smith.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <queue>

#include <boost/multiprecision/cpp_int.hpp>

#include "grptopo/errors.hpp"

namespace grptopo {

namespace {

using bigint = boost::multiprecision::cpp_int;

struct Int64Overflow {};

inline long long chk_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline long long chk_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}
inline bigint chk_add(const bigint& a, const bigint& b) { return a + b; }
inline bigint chk_mul(const bigint& a, const bigint& b) { return a * b; }

inline long long abs_of(long long v) { return v < 0 ? -v : v; }
inline bigint abs_of(const bigint& v) { return boost::multiprecision::abs(v); }

template <typename T>
void ext_gcd(T a, T b, T& g, T& u, T& v) {
  // Invariant: old_r = old_u*a + old_v*b.
  T old_r = a, r = b, old_u = 1, u1 = 0, old_v = 0, v1 = 1;
  while (r != 0) {
    T q = old_r / r;
    T tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_u - q * u1;
    old_u = u1;
    u1 = tmp;
    tmp = old_v - q * v1;
    old_v = v1;
    v1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  g = old_r;
  u = old_u;
  v = old_v;
}

template <typename T>
class Eliminator {
 public:
  explicit Eliminator(const SparseIntMatrix& m)
      : rows_(m.rows), cols_(m.cols), row_(size_t(m.rows)), col_rows_(size_t(m.cols)),
        col_count_(size_t(m.cols), 0), row_live_(size_t(m.rows), 1),
        col_live_(size_t(m.cols), 1) {
    for (const Triplet& t : m.entries) {
      row_[size_t(t.row)][t.col] = T(t.val);
      col_rows_[size_t(t.col)].push_back(t.row);
      ++col_count_[size_t(t.col)];
    }
    for (int c = 0; c < cols_; ++c)
      if (col_count_[size_t(c)] > 0) heap_.push({col_count_[size_t(c)], c});
  }

  std::vector<T> run(long long early_stop, bool* early_stopped) {
    std::vector<T> divisors;
    while (true) {
      int c = pop_pivot_col();
      if (c < 0) break;
      int r = choose_pivot_row(c);
      reduce_to_divisor(r, c);

      // Clear the pivot column with exact quotients.
      T p = row_[size_t(r)].at(c);
      auto carriers = live_rows_of(c);
      for (int s : carriers) {
        if (s == r) continue;
        T q = row_[size_t(s)].at(c) / p;
        row_axpy(s, r, -q);
      }

      // Retire: remaining entries of the pivot row are multiples of p and
      // vanish under implicit unimodular column operations.
      divisors.push_back(abs_of(p));
      retire(r, c);

      if (early_stop > 0 && (long long)divisors.size() == early_stop) {
        bool all_units = true;
        for (const T& d : divisors)
          if (d != 1) {
            all_units = false;
            break;
          }
        if (all_units) {
          *early_stopped = true;
          break;
        }
      }
    }
    return divisors;
  }

 private:
  int pop_pivot_col() {
    while (!heap_.empty()) {
      auto [cnt, c] = heap_.top();
      if (!col_live_[size_t(c)] || col_count_[size_t(c)] != cnt || cnt == 0) {
        heap_.pop();
        continue;
      }
      return c;
    }
    return -1;
  }

  std::vector<int> live_rows_of(int c) {
    auto& list = col_rows_[size_t(c)];
    std::vector<int> out;
    out.reserve(list.size());
    for (int r : list)
      if (row_live_[size_t(r)] && row_[size_t(r)].count(c)) out.push_back(r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    list.assign(out.begin(), out.end());  // compaction
    col_count_[size_t(c)] = int(out.size());
    return out;
  }

  int choose_pivot_row(int c) {
    int best = -1;
    size_t best_size = 0;
    bool best_unit = false;
    for (int r : live_rows_of(c)) {
      bool unit = abs_of(row_[size_t(r)].at(c)) == 1;
      size_t size = row_[size_t(r)].size();
      if (best < 0 || (unit && !best_unit) ||
          (unit == best_unit && size < best_size)) {
        best = r;
        best_size = size;
        best_unit = unit;
      }
    }
    if (best < 0) throw DomainError("pivot column unexpectedly empty");
    return best;
  }

  void set_entry(int r, int c, T v) {
    auto& row = row_[size_t(r)];
    auto it = row.find(c);
    if (v == 0) {
      if (it != row.end()) {
        row.erase(it);
        --col_count_[size_t(c)];
        heap_.push({col_count_[size_t(c)], c});
      }
      return;
    }
    if (it == row.end()) {
      row.emplace(c, std::move(v));
      col_rows_[size_t(c)].push_back(r);
      ++col_count_[size_t(c)];
      heap_.push({col_count_[size_t(c)], c});
    } else {
      it->second = std::move(v);
    }
  }

  /// row_s += factor * row_r
  void row_axpy(int s, int r, const T& factor) {
    for (const auto& [c, v] : row_[size_t(r)]) {
      T add = chk_mul(factor, v);
      auto it = row_[size_t(s)].find(c);
      T next = (it == row_[size_t(s)].end()) ? add : chk_add(it->second, add);
      set_entry(s, c, std::move(next));
    }
  }

  /// [row_r; row_s] = [[a11 a12],[a21 a22]] * [row_r; row_s], det = ±1.
  void row_combine(int r, int s, const T& a11, const T& a12, const T& a21, const T& a22) {
    std::vector<int> cols;
    for (const auto& [c, v] : row_[size_t(r)]) cols.push_back(c);
    for (const auto& [c, v] : row_[size_t(s)]) cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (int c : cols) {
      auto ir = row_[size_t(r)].find(c);
      auto is = row_[size_t(s)].find(c);
      T x = (ir == row_[size_t(r)].end()) ? T(0) : ir->second;
      T y = (is == row_[size_t(s)].end()) ? T(0) : is->second;
      set_entry(r, c, chk_add(chk_mul(a11, x), chk_mul(a12, y)));
      set_entry(s, c, chk_add(chk_mul(a21, x), chk_mul(a22, y)));
    }
  }

  /// [col_c, col_d] = [col_c, col_d] * [[a11 a21],[a12 a22]]^T, i.e. per row
  /// (x,y) -> (a11 x + a12 y, a21 x + a22 y), det = ±1.
  void col_combine(int c, int d, const T& a11, const T& a12, const T& a21, const T& a22) {
    std::vector<int> rows = live_rows_of(c);
    std::vector<int> rows_d = live_rows_of(d);
    rows.insert(rows.end(), rows_d.begin(), rows_d.end());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (int s : rows) {
      auto& row = row_[size_t(s)];
      auto ic = row.find(c);
      auto id = row.find(d);
      T x = (ic == row.end()) ? T(0) : ic->second;
      T y = (id == row.end()) ? T(0) : id->second;
      set_entry(s, c, chk_add(chk_mul(a11, x), chk_mul(a12, y)));
      set_entry(s, d, chk_add(chk_mul(a21, x), chk_mul(a22, y)));
    }
  }

  /// Unimodular fixups until the pivot divides its whole column and row.
  void reduce_to_divisor(int& r, int c) {
    while (true) {
      T p = row_[size_t(r)].at(c);
      bool fixed = false;
      for (int s : live_rows_of(c)) {
        if (s == r) continue;
        T a = row_[size_t(s)].at(c);
        if (a % p != 0) {
          T g, u, v;
          ext_gcd(p, a, g, u, v);
          row_combine(r, s, u, v, -(a / g), p / g);
          fixed = true;
          break;
        }
      }
      if (fixed) continue;
      p = row_[size_t(r)].at(c);
      for (const auto& [d, val] : row_[size_t(r)]) {
        if (d == c) continue;
        if (val % p != 0) {
          T g, u, v;
          ext_gcd(p, val, g, u, v);
          col_combine(c, d, u, v, -(val / g), p / g);
          fixed = true;
          break;
        }
      }
      if (!fixed) return;
    }
  }

  void retire(int r, int c) {
    col_live_[size_t(c)] = 0;
    row_live_[size_t(r)] = 0;
    for (const auto& [d, v] : row_[size_t(r)]) {
      --col_count_[size_t(d)];
      heap_.push({col_count_[size_t(d)], d});
    }
    row_[size_t(r)].clear();
  }

  int rows_, cols_;
  std::vector<std::map<int, T>> row_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<int> col_count_;
  std::vector<char> row_live_, col_live_;
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                      std::greater<>> heap_;
};

inline long long to_int64(long long v) { return v; }
inline long long to_int64(const bigint& v) {
  if (v > bigint(std::numeric_limits<long long>::max()))
    throw DomainError("elementary divisor exceeds int64");
  return v.convert_to<long long>();
}

template <typename T>
std::vector<long long> run_elimination(const SparseIntMatrix& m, const SmithOptions& opts,
                                       bool* early_stopped) {
  Eliminator<T> elim(m);
  std::vector<T> divisors = elim.run(opts.early_stop_unimodular_rank, early_stopped);

  // Normalize into a divisibility chain; only the non-unit part needs work.
  std::vector<T> big;
  long long units = 0;
  for (T& d : divisors) {
    if (d == 1)
      ++units;
    else
      big.push_back(std::move(d));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < big.size(); ++i)
      for (size_t j = i + 1; j < big.size(); ++j) {
        if (big[j] % big[i] == 0) continue;
        T g, u, v;
        ext_gcd(big[i], big[j], g, u, v);
        T l = chk_mul(big[i] / g, big[j]);
        big[i] = std::move(g);
        big[j] = std::move(l);
        changed = true;
      }
  }
  std::sort(big.begin(), big.end());
  while (!big.empty() && big.front() == 1) {
    big.erase(big.begin());
    ++units;
  }

  std::vector<long long> out(size_t(units), 1);
  for (const T& d : big) out.push_back(to_int64(d));
  return out;
}

}  // namespace

SNFResult smith_normal_form(const SparseIntMatrix& m, SmithOptions opts) {
  SNFResult res;
  try {
    res.divisors = run_elimination<long long>(m, opts, &res.early_stopped);
  } catch (const Int64Overflow&) {
    res.early_stopped = false;
    res.divisors = run_elimination<bigint>(m, opts, &res.early_stopped);
    res.used_bignum = true;
  }
  res.rank = (long long)res.divisors.size();
  return res;
}

}  // namespace grptopo
