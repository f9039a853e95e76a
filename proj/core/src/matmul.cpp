#include "clustercut/matmul.hpp"

#include <algorithm>
#include <bit>

namespace clustercut {

MatmulKernel kernel_from_name(const std::string& name) {
  if (name == "naive") return MatmulKernel::kNaive;
  if (name == "strassen") return MatmulKernel::kStrassen;
  if (name == "bitpacked") return MatmulKernel::kBitpacked;
  throw PreconditionError("unknown matmul kernel: " + name);
}

std::string kernel_name(MatmulKernel k) {
  switch (k) {
    case MatmulKernel::kNaive: return "naive";
    case MatmulKernel::kStrassen: return "strassen";
    case MatmulKernel::kBitpacked: return "bitpacked";
  }
  return "?";
}

namespace {

using i64 = std::int64_t;

void naive_block(const i64* a, const i64* b, i64* c, int n, std::uint64_t& mults) {
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      i64 aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      const i64* brow = b + static_cast<std::size_t>(k) * n;
      i64* crow = c + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  mults += static_cast<std::uint64_t>(n) * n * n;
}

// c = a*b for n x n blocks, n a power of two
void strassen_rec(const i64* a, const i64* b, i64* c, int n, int crossover,
                  std::uint64_t& mults) {
  if (n <= crossover) {
    std::fill(c, c + static_cast<std::size_t>(n) * n, 0);
    naive_block(a, b, c, n, mults);
    return;
  }
  int h = n / 2;
  std::size_t hs = static_cast<std::size_t>(h) * h;
  auto idx = [n](int r, int cc) { return static_cast<std::size_t>(r) * n + cc; };
  // gather quadrant (qr,qc) of src into dst
  auto quad = [&](const i64* src, int qr, int qc, i64* dst) {
    for (int r = 0; r < h; ++r)
      std::copy_n(src + idx(qr * h + r, qc * h), h, dst + static_cast<std::size_t>(r) * h);
  };
  std::vector<i64> buf(hs * 11);
  i64* t1 = buf.data();
  i64* t2 = t1 + hs;
  i64* q1 = t2 + hs;
  i64* q2 = q1 + hs;
  i64* m = q2 + hs;  // m1..m7
  auto add = [&](const i64* x, const i64* y, i64* out) {
    for (std::size_t t = 0; t < hs; ++t) out[t] = x[t] + y[t];
  };
  auto sub = [&](const i64* x, const i64* y, i64* out) {
    for (std::size_t t = 0; t < hs; ++t) out[t] = x[t] - y[t];
  };

  i64* m1 = m + 0 * hs;
  i64* m2 = m + 1 * hs;
  i64* m3 = m + 2 * hs;
  i64* m4 = m + 3 * hs;
  i64* m5 = m + 4 * hs;
  i64* m6 = m + 5 * hs;
  i64* m7 = m + 6 * hs;

  quad(a, 0, 0, q1);  // A11 stays in q1 across several uses
  // M1 = (A11 + A22)(B11 + B22)
  quad(a, 1, 1, q2);
  add(q1, q2, t1);
  quad(b, 0, 0, m1);  // reuse m1 as scratch for B11
  quad(b, 1, 1, m2);
  add(m1, m2, t2);
  strassen_rec(t1, t2, m1, h, crossover, mults);  // overwrites scratch afterwards; m1 = result
  // careful: recompute scratch quadrants per product below

  // M2 = (A21 + A22) B11
  quad(a, 1, 0, t1);
  quad(a, 1, 1, q2);
  add(t1, q2, t1);
  quad(b, 0, 0, t2);
  strassen_rec(t1, t2, m2, h, crossover, mults);

  // M3 = A11 (B12 - B22)
  quad(b, 0, 1, t1);
  quad(b, 1, 1, t2);
  sub(t1, t2, t2);
  strassen_rec(q1, t2, m3, h, crossover, mults);

  // M4 = A22 (B21 - B11)
  quad(a, 1, 1, q2);
  quad(b, 1, 0, t1);
  quad(b, 0, 0, t2);
  sub(t1, t2, t2);
  strassen_rec(q2, t2, m4, h, crossover, mults);

  // M5 = (A11 + A12) B22
  quad(a, 0, 1, t1);
  add(q1, t1, t1);
  quad(b, 1, 1, t2);
  strassen_rec(t1, t2, m5, h, crossover, mults);

  // M6 = (A21 - A11) (B11 + B12)
  quad(a, 1, 0, t1);
  sub(t1, q1, t1);
  quad(b, 0, 0, t2);
  quad(b, 0, 1, q2);
  add(t2, q2, t2);
  strassen_rec(t1, t2, m6, h, crossover, mults);

  // M7 = (A12 - A22) (B21 + B22)
  quad(a, 0, 1, t1);
  quad(a, 1, 1, q2);
  sub(t1, q2, t1);
  quad(b, 1, 0, t2);
  quad(b, 1, 1, q2);
  add(t2, q2, t2);
  strassen_rec(t1, t2, m7, h, crossover, mults);

  // scatter C quadrants
  auto scatter = [&](int qr, int qc, const i64* src) {
    for (int r = 0; r < h; ++r)
      std::copy_n(src + static_cast<std::size_t>(r) * h, h, c + idx(qr * h + r, qc * h));
  };
  // C11 = M1 + M4 - M5 + M7
  for (std::size_t t = 0; t < hs; ++t) t1[t] = m1[t] + m4[t] - m5[t] + m7[t];
  scatter(0, 0, t1);
  // C12 = M3 + M5
  add(m3, m5, t1);
  scatter(0, 1, t1);
  // C21 = M2 + M4
  add(m2, m4, t1);
  scatter(1, 0, t1);
  // C22 = M1 - M2 + M3 + M6
  for (std::size_t t = 0; t < hs; ++t) t1[t] = m1[t] - m2[t] + m3[t] + m6[t];
  scatter(1, 1, t1);
}

int next_pow2(int v) {
  int p = 1;
  while (p < v) p <<= 1;
  return p;
}

BitMatrix pack_01(const IntMatrix& a) {
  BitMatrix out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      i64 v = a.at(r, c);
      if (v != 0 && v != 1)
        throw PreconditionError("bitpacked kernel requires 0/1 matrix entries");
      if (v) out.set(r, c, true);
    }
  return out;
}

}  // namespace

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b, MatmulKernel kernel,
                 OpCounters* counters, const MatmulOptions& opts) {
  if (a.cols() != b.rows()) throw PreconditionError("matmul shape mismatch");
  switch (kernel) {
    case MatmulKernel::kNaive: {
      IntMatrix c(a.rows(), b.cols());
      std::uint64_t mults = 0;
      for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
          i64 aik = a.at(i, k);
          for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
      mults = static_cast<std::uint64_t>(a.rows()) * a.cols() * b.cols();
      if (counters) counters->add_mults(mults);
      return c;
    }
    case MatmulKernel::kStrassen: {
      int n = next_pow2(std::max({a.rows(), a.cols(), b.cols(), 1}));
      std::vector<i64> pa(static_cast<std::size_t>(n) * n, 0);
      std::vector<i64> pb(static_cast<std::size_t>(n) * n, 0);
      std::vector<i64> pc(static_cast<std::size_t>(n) * n, 0);
      for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) pa[static_cast<std::size_t>(r) * n + c] = a.at(r, c);
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) pb[static_cast<std::size_t>(r) * n + c] = b.at(r, c);
      std::uint64_t mults = 0;
      strassen_rec(pa.data(), pb.data(), pc.data(), n, std::max(1, opts.strassen_crossover), mults);
      if (counters) counters->add_mults(mults);
      IntMatrix c(a.rows(), b.cols());
      for (int r = 0; r < c.rows(); ++r)
        for (int cc = 0; cc < c.cols(); ++cc) c.at(r, cc) = pc[static_cast<std::size_t>(r) * n + cc];
      return c;
    }
    case MatmulKernel::kBitpacked:
      return popcount_matmul(pack_01(a), pack_01(b), counters);
  }
  throw PreconditionError("bad kernel");
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(c, r, true);
  return out;
}

BitMatrix bool_matmul(const BitMatrix& a, const BitMatrix& b, OpCounters* counters) {
  if (a.cols() != b.rows()) throw PreconditionError("matmul shape mismatch");
  BitMatrix bt = b.transposed();
  BitMatrix out(a.rows(), b.cols());
  int words = a.words_per_row();
  std::uint64_t word_ops = 0;
  for (int i = 0; i < a.rows(); ++i) {
    const std::uint64_t* ra = a.row(i);
    for (int k = 0; k < b.cols(); ++k) {
      const std::uint64_t* rb = bt.row(k);
      for (int w = 0; w < words; ++w) {
        ++word_ops;
        if (ra[w] & rb[w]) {
          out.set(i, k, true);
          break;
        }
      }
    }
  }
  if (counters) counters->add_words(word_ops);
  return out;
}

IntMatrix popcount_matmul(const BitMatrix& a, const BitMatrix& b, OpCounters* counters) {
  if (a.cols() != b.rows()) throw PreconditionError("matmul shape mismatch");
  BitMatrix bt = b.transposed();
  IntMatrix out(a.rows(), b.cols());
  int words = a.words_per_row();
  std::uint64_t word_ops = 0;
  for (int i = 0; i < a.rows(); ++i) {
    const std::uint64_t* ra = a.row(i);
    for (int k = 0; k < b.cols(); ++k) {
      const std::uint64_t* rb = bt.row(k);
      i64 sum = 0;
      for (int w = 0; w < words; ++w) sum += std::popcount(ra[w] & rb[w]);
      word_ops += static_cast<std::uint64_t>(words);
      out.at(i, k) = sum;
    }
  }
  if (counters) counters->add_words(word_ops);
  return out;
}

std::optional<Triangle> triangle_detect(const BitMatrix& a12, const BitMatrix& a23,
                                        const BitMatrix& a13, MatmulKernel kernel,
                                        OpCounters* counters, const MatmulOptions& opts) {
  int n1 = a12.rows(), n2 = a12.cols(), n3 = a23.cols();
  if (a23.rows() != n2 || a13.rows() != n1 || a13.cols() != n3)
    throw PreconditionError("triangle_detect shape mismatch");
  if (counters) counters->triangle_probes.fetch_add(1, std::memory_order_relaxed);

  auto witness_j = [&](int i, int k) {
    for (int j = 0; j < n2; ++j)
      if (a12.get(i, j) && a23.get(j, k)) return j;
    return -1;  // unreachable when the path count is positive
  };

  if (kernel == MatmulKernel::kBitpacked) {
    BitMatrix paths = bool_matmul(a12, a23, counters);
    for (int i = 0; i < n1; ++i)
      for (int k = 0; k < n3; ++k)
        if (a13.get(i, k) && paths.get(i, k)) return Triangle{i, witness_j(i, k), k};
    return std::nullopt;
  }

  IntMatrix ia(n1, n2), ib(n2, n3);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      if (a12.get(i, j)) ia.at(i, j) = 1;
  for (int j = 0; j < n2; ++j)
    for (int k = 0; k < n3; ++k)
      if (a23.get(j, k)) ib.at(j, k) = 1;
  IntMatrix paths = matmul(ia, ib, kernel, counters, opts);
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n3; ++k)
      if (a13.get(i, k) && paths.at(i, k) > 0) return Triangle{i, witness_j(i, k), k};
  return std::nullopt;
}

}  // namespace clustercut
