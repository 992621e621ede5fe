#include "cycount/matmul.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cycount/errors.hpp"

namespace cycount {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();
constexpr u128 kU128Max = ~static_cast<u128>(0);

std::string shape_str(int a, int b, int c) {
  return std::to_string(a) + "x" + std::to_string(b) + "x" + std::to_string(c);
}

// bound(A)*bound(B)*inner, saturating at u128 max.
u128 product_bound(u128 ba, u128 bb, std::int64_t inner) {
  if (ba == 0 || bb == 0 || inner == 0) return 0;
  u128 r;
  if (__builtin_mul_overflow(ba, bb, &r)) return kU128Max;
  if (__builtin_mul_overflow(r, static_cast<u128>(inner), &r)) return kU128Max;
  return r;
}

}  // namespace

void WorkCounter::merge(const WorkCounter& other) {
  scalar_mults_ += other.scalar_mults_;
  mm_calls_.insert(mm_calls_.end(), other.mm_calls_.begin(), other.mm_calls_.end());
}

CountMatrix::CountMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw input_error("CountMatrix: negative dimension");
  lo_.assign(static_cast<std::size_t>(rows_) * cols_, 0);
}

CountMatrix CountMatrix::identity(int n) {
  CountMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.lo_[m.idx(i, i)] = 1;
  m.bound_ = n > 0 ? 1 : 0;
  return m;
}

void CountMatrix::widen() {
  if (hi_.empty()) hi_.assign(lo_.size(), 0);
}

void CountMatrix::set(int r, int c, u128 v) {
  const std::size_t i = idx(r, c);
  lo_[i] = static_cast<std::uint64_t>(v);
  const std::uint64_t high = static_cast<std::uint64_t>(v >> 64);
  if (high != 0) widen();
  if (!hi_.empty()) hi_[i] = high;
  bound_ = std::max(bound_, v);
}

std::uint64_t CountMatrix::at_u64(int r, int c) const {
  const u128 v = at(r, c);
  if (v > kU64Max) throw overflow_error("CountMatrix entry exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

CountMatrix CountMatrix::transposed() const {
  CountMatrix t(cols_, rows_);
  if (!hi_.empty()) t.widen();
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      t.lo_[t.idx(c, r)] = lo_[idx(r, c)];
      if (!hi_.empty()) t.hi_[t.idx(c, r)] = hi_[idx(r, c)];
    }
  t.bound_ = bound_;
  return t;
}

CountMatrix multiply(const CountMatrix& A, const CountMatrix& B, WorkCounter& wc) {
  if (A.cols() != B.rows())
    throw input_error("multiply: inner dimensions disagree (" +
                      shape_str(A.rows(), A.cols(), B.cols()) + " vs " +
                      std::to_string(B.rows()) + " rows)");
  const int a = A.rows(), b = A.cols(), c = B.cols();
  wc.record(a, b, c);

  CountMatrix C(a, c);
  const u128 bound = product_bound(A.entry_bound(), B.entry_bound(), b);

  if (bound <= kU64Max && !A.wide() && !B.wide()) {
    // Entries provably fit 64 bits; plain blocked-row kernel.
    const std::uint64_t* pa = A.lo_data();
    const std::uint64_t* pb = B.lo_data();
    std::uint64_t* pc = C.lo_data();
    for (int i = 0; i < a; ++i) {
      const std::uint64_t* arow = pa + static_cast<std::size_t>(i) * b;
      std::uint64_t* crow = pc + static_cast<std::size_t>(i) * c;
      for (int k = 0; k < b; ++k) {
        const std::uint64_t aik = arow[k];
        if (aik == 0) continue;
        const std::uint64_t* brow = pb + static_cast<std::size_t>(k) * c;
        for (int j = 0; j < c; ++j) crow[j] += aik * brow[j];
      }
    }
    u128 maxv = 0;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < c; ++j) maxv = std::max<u128>(maxv, C.lo_[C.idx(i, j)]);
    C.bound_ = maxv;
    return C;
  }

  // Wide path: 128-bit accumulation with explicit overflow checks.
  u128 maxv = 0;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < c; ++j) {
      u128 acc = 0;
      for (int k = 0; k < b; ++k) {
        u128 term;
        if (__builtin_mul_overflow(A.at(i, k), B.at(k, j), &term) ||
            __builtin_add_overflow(acc, term, &acc))
          throw overflow_error("multiply: entry exceeds 128 bits in product " +
                               shape_str(a, b, c));
      }
      C.set(i, j, acc);
      maxv = std::max(maxv, acc);
    }
  C.bound_ = maxv;
  return C;
}

std::vector<u128> diag_product(const CountMatrix& P, const CountMatrix& Q, WorkCounter& wc) {
  if (P.cols() != Q.rows() || P.rows() != Q.cols())
    throw input_error("diag_product: shape mismatch");
  const int a = P.rows(), b = P.cols();
  wc.record(a, b, 1);
  std::vector<u128> diag(a, 0);
  for (int i = 0; i < a; ++i) {
    u128 acc = 0;
    for (int k = 0; k < b; ++k) {
      u128 term;
      if (__builtin_mul_overflow(P.at(i, k), Q.at(k, i), &term) ||
          __builtin_add_overflow(acc, term, &acc))
        throw overflow_error("diag_product: entry exceeds 128 bits");
    }
    diag[i] = acc;
  }
  return diag;
}

bool rebalance_cost_check(double p1, double p2, double p3, double n) {
  if (p1 <= 0 || p1 > 1 || p2 <= 0 || p2 > 1 || p3 <= 0 || p3 > 1)
    throw input_error("rebalance_cost_check: probabilities must be in (0,1]");
  const long double lhs = (static_cast<long double>(n) * p1) * (n * p2) * (n * p3);
  const long double rhs = static_cast<long double>(n) * n * (n * p1 * p2 * p3);
  return lhs <= rhs * (1.0L + 1e-12L);
}

}  // namespace cycount
