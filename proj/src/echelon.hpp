#pragma once

// Sparse incremental Gaussian elimination over a native coefficient type.
// Rows are kept in semi-echelon form: every stored row is normalized to 1 at
// its leading column and no two rows share a leading column.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "syzlab/errors.hpp"
#include "syzlab/field.hpp"
#include "syzlab/matrix.hpp"

namespace syz::detail {

struct RationalOps {
  using T = mpq_class;
  static bool is_zero(const T& x) { return sgn(x) == 0; }
  static T zero() { return T(0); }
  // acc -= f * v
  void submul(T& acc, const T& f, const T& v) {
    mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), v.get_mpq_t());
    mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }
  static T inverse(const T& x) { return T(1) / x; }
  static void scale(T& x, const T& f) { x *= f; }
  static void clear(T& x) { x = 0; }
  static T from(const FieldElement& e) { return e.rational(); }
  static FieldElement to(const T& x) { return FieldElement(x); }
  Field field() const { return Field::rationals(); }
  T tmp;
};

struct PrimeOps {
  using T = std::uint32_t;
  std::uint32_t p;
  static bool is_zero(T x) { return x == 0; }
  static T zero() { return 0; }
  void submul(T& acc, T f, T v) const {
    std::uint64_t prod = std::uint64_t(f) * v % p;
    acc = static_cast<T>((std::uint64_t(acc) + p - prod) % p);
  }
  T inverse(T x) const { return inverse_mod(x, p); }
  void scale(T& x, T f) const { x = static_cast<T>(std::uint64_t(x) * f % p); }
  static void clear(T& x) { x = 0; }
  T from(const FieldElement& e) const {
    if (e.field() != Field{FieldKind::prime, p}) throw MalformedInput("entry outside the matrix field");
    return e.residue_value();
  }
  FieldElement to(T x) const { return FieldElement::residue(x, p); }
  Field field() const { return {FieldKind::prime, p}; }
};

template <class Ops>
class Echelon {
 public:
  using T = typename Ops::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  Echelon(std::size_t dim, Ops ops) : dim_(dim), ops_(std::move(ops)), pivot_row_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  std::int64_t pivot_row(std::uint32_t col) const { return pivot_row_[col]; }
  const Ops& ops() const { return ops_; }

  // Returns true when v is independent of the stored rows (it is then stored).
  bool insert(const Row& v) {
    Row r = reduce_impl(v, /*stop_at_free=*/true);
    if (r.empty()) return false;
    T inv = ops_.inverse(r.front().second);
    for (auto& e : r) ops_.scale(e.second, inv);
    pivot_row_[r.front().first] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(r));
    reduced_ = false;
    return true;
  }

  // Remainder of v modulo the span; zero at every pivot column.
  Row reduce(const Row& v) { return reduce_impl(v, /*stop_at_free=*/false); }

  // Turns the stored rows into reduced row echelon form.
  void make_reduced() {
    if (reduced_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
    for (std::size_t idx : order) {
      Row& row = rows_[idx];
      std::uint32_t lead = row.front().first;
      bool touches = false;
      for (std::size_t k = 1; k < row.size() && !touches; ++k) touches = pivot_row_[row[k].first] >= 0;
      if (!touches) continue;
      T lead_value = row.front().second;
      Row tail(row.begin() + 1, row.end());
      pivot_row_[lead] = -1;
      Row rest = reduce_impl(tail, false);
      pivot_row_[lead] = static_cast<std::int64_t>(idx);
      Row fresh;
      fresh.reserve(rest.size() + 1);
      fresh.emplace_back(lead, lead_value);
      for (auto& e : rest) fresh.push_back(std::move(e));
      row = std::move(fresh);
    }
    reduced_ = true;
  }

  std::vector<std::uint32_t> pivot_columns() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.front().first);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  Row reduce_impl(const Row& v, bool stop_at_free) {
    if (acc_.size() != dim_) {
      acc_.assign(dim_, Ops::zero());
      mark_.assign(dim_, 0);
    }
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    std::vector<std::uint32_t> touched;
    for (const auto& [c, x] : v) {
      acc_[c] = x;
      if (!mark_[c]) {
        mark_[c] = 1;
        touched.push_back(c);
        heap.push(c);
      }
    }
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      heap.pop();
      if (Ops::is_zero(acc_[c])) continue;
      std::int64_t pr = pivot_row_[c];
      if (pr < 0) {
        if (stop_at_free) break;
        continue;
      }
      T f = acc_[c];
      for (const auto& [cc, y] : rows_[pr]) {
        if (!mark_[cc]) {
          mark_[cc] = 1;
          touched.push_back(cc);
          heap.push(cc);
        }
        ops_.submul(acc_[cc], f, y);
      }
    }
    std::sort(touched.begin(), touched.end());
    Row out;
    for (std::uint32_t c : touched) {
      if (!Ops::is_zero(acc_[c])) out.emplace_back(c, std::move(acc_[c]));
      Ops::clear(acc_[c]);
      mark_[c] = 0;
    }
    return out;
  }

  std::size_t dim_;
  Ops ops_;
  std::vector<Row> rows_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<T> acc_;
  std::vector<char> mark_;
  bool reduced_ = true;
};

template <class Ops>
typename Echelon<Ops>::Row to_native(const SparseVector& v, const Ops& ops) {
  typename Echelon<Ops>::Row out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) out.emplace_back(c, ops.from(x));
  return out;
}

template <class Ops>
SparseVector from_native(const typename Echelon<Ops>::Row& v, const Ops& ops) {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) out.emplace_back(c, ops.to(x));
  return out;
}

// Calls fn(ops) with the native arithmetic matching `field`.
template <class Fn>
decltype(auto) with_ops(const Field& field, Fn&& fn) {
  if (field.is_rational()) return fn(RationalOps{});
  return fn(PrimeOps{field.p});
}

}  // namespace syz::detail
