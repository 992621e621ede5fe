#pragma once

#include <cstdint>
#include <vector>

namespace cycount {

using u128 = unsigned __int128;

struct MMCall {
  std::int64_t a, b, c;
};

// Concrete cost accounting for matrix work: scalar multiply-adds of the
// classical kernel plus the list of product shapes.
class WorkCounter {
 public:
  void record(std::int64_t a, std::int64_t b, std::int64_t c) {
    scalar_mults_ += static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b) *
                     static_cast<std::uint64_t>(c);
    mm_calls_.push_back({a, b, c});
  }

  std::uint64_t scalar_mults() const { return scalar_mults_; }
  const std::vector<MMCall>& mm_calls() const { return mm_calls_; }

  // Deterministic sequential merge for externally synchronized parallelism.
  void merge(const WorkCounter& other);

 private:
  std::uint64_t scalar_mults_ = 0;
  std::vector<MMCall> mm_calls_;
};

// Exact non-negative integer matrix. Entries carry 128 bits of range: values
// live in a 64-bit array with a second array of high words that is allocated
// only when some entry outgrows 64 bits, so the common case stays fast.
// Arithmetic that would exceed 128 bits is a hard error, never a wraparound.
class CountMatrix {
 public:
  CountMatrix(int rows, int cols);
  static CountMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  u128 at(int r, int c) const {
    const std::size_t i = idx(r, c);
    u128 v = lo_[i];
    if (!hi_.empty()) v |= static_cast<u128>(hi_[i]) << 64;
    return v;
  }
  void set(int r, int c, u128 v);

  // Checked narrow; throws overflow_error if the entry needs more than 64 bits.
  std::uint64_t at_u64(int r, int c) const;

  CountMatrix transposed() const;

  bool wide() const { return !hi_.empty(); }
  u128 entry_bound() const { return bound_; }

  const std::uint64_t* lo_data() const { return lo_.data(); }
  std::uint64_t* lo_data() { return lo_.data(); }

 private:
  friend CountMatrix multiply(const CountMatrix&, const CountMatrix&, WorkCounter&);
  friend std::vector<u128> diag_product(const CountMatrix&, const CountMatrix&, WorkCounter&);

  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
  void widen();

  int rows_, cols_;
  u128 bound_ = 0;  // conservative max entry; tightened after products
  std::vector<std::uint64_t> lo_;
  std::vector<std::uint64_t> hi_;  // empty until an entry needs it
};

// Exact product; wc takes a*b*c scalar multiply-adds and the (a,b,c) shape.
CountMatrix multiply(const CountMatrix& A, const CountMatrix& B, WorkCounter& wc);

// diag(P*Q) for P: a x b, Q: b x a, without forming the full product.
// Costs a*b multiply-adds, logged as shape (a, b, 1).
std::vector<u128> diag_product(const CountMatrix& P, const CountMatrix& Q, WorkCounter& wc);

// Cost-model self-check: (n p1)(n p2)(n p3) <= n * n * (n p1 p2 p3) under the
// classical kernel. Holds with equality; kept as a guard on the accounting.
bool rebalance_cost_check(double p1, double p2, double p3, double n);

}  // namespace cycount
