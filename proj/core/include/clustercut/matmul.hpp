#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clustercut/counters.hpp"
#include "clustercut/errors.hpp"

namespace clustercut {

enum class MatmulKernel { kNaive, kStrassen, kBitpacked };

MatmulKernel kernel_from_name(const std::string& name);  // "naive"|"strassen"|"bitpacked"
std::string kernel_name(MatmulKernel k);

struct MatmulOptions {
  // Strassen recurses above this size and falls back to the cubic loop at or
  // below it. Inputs are padded to the next power of two.
  int strassen_crossover = 64;
};

class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_, cols_;
  std::vector<std::int64_t> a_;
};

// Exact integer product. The bitpacked kernel requires 0/1 entries (it packs
// rows into words and multiplies with AND + popcount); on such inputs all
// three kernels return identical matrices. Entries must be small enough that
// intermediate sums stay in int64; the caller is responsible for that.
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b, MatmulKernel kernel,
                 OpCounters* counters = nullptr, const MatmulOptions& opts = {});

class BitMatrix {
 public:
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        bits_(static_cast<std::size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_; }
  bool get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(int r, int c, bool v) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)];
    std::uint64_t bit = std::uint64_t{1} << (c & 63);
    w = v ? (w | bit) : (w & ~bit);
  }
  const std::uint64_t* row(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }
  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

// boolean (OR of ANDs) product of 0/1 matrices
BitMatrix bool_matmul(const BitMatrix& a, const BitMatrix& b, OpCounters* counters = nullptr);
// integer product of 0/1 matrices via packed AND + popcount
IntMatrix popcount_matmul(const BitMatrix& a, const BitMatrix& b, OpCounters* counters = nullptr);

struct Triangle {
  int i, j, k;  // row of a12 / middle index / column of a23
};

// Given a tripartite adjacency (a12: n1 x n2, a23: n2 x n3, a13: n1 x n3),
// finds the lexicographically least (i,k,j) triangle, if any: a12(i,j) &&
// a23(j,k) && a13(i,k). Uses the requested kernel for the path-count product.
std::optional<Triangle> triangle_detect(const BitMatrix& a12, const BitMatrix& a23,
                                        const BitMatrix& a13, MatmulKernel kernel,
                                        OpCounters* counters = nullptr,
                                        const MatmulOptions& opts = {});

}  // namespace clustercut
