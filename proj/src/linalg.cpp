#include "hypercone/linalg.hpp"

#include <sstream>

namespace hypercone {

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) out << ',';
    out << v(k);
  }
  out << ')';
  return out.str();
}

std::size_t bareiss_rank_inplace(BigIntMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  BigInt prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const BigInt p = m(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const BigInt lead = m(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        // Exact division: every entry stays a minor of the input.
        m(i, j) = (p * m(i, j) - lead * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return static_cast<std::size_t>(r);
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& input) {
  RationalMatrix m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Rational inv = 1 / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<RationalVector> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RationalVector v = RationalVector::Constant(cols, Rational(0));
    v(f) = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v(pivot_cols[i]) = -m(static_cast<Eigen::Index>(i), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector<BigInt> primitive_integer(const RationalVector& v) {
  BigInt lcm = 1;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(v(k))));
  }
  Vector<BigInt> out(v.size());
  BigInt g = 0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    out(k) = boost::multiprecision::numerator(v(k)) * (lcm / boost::multiprecision::denominator(v(k)));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(out(k)));
  }
  if (g > 1) {
    for (Eigen::Index k = 0; k < v.size(); ++k) out(k) /= g;
  }
  return out;
}

IntVector primitive_int64(const RationalVector& v) {
  const Vector<BigInt> big = primitive_integer(v);
  IntVector out(big.size());
  for (Eigen::Index k = 0; k < big.size(); ++k) {
    if (boost::multiprecision::msb(boost::multiprecision::abs(big(k)) + 1) >= 62) {
      throw OverflowError("primitive_int64: entry does not fit in int64");
    }
    out(k) = big(k).convert_to<std::int64_t>();
  }
  return out;
}

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

std::uint64_t mod_reduce(std::int64_t x) {
  std::int64_t r = x % static_cast<std::int64_t>(kPrime);
  if (r < 0) r += static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (e) {
    if (e & 1) result = result * base % kPrime;
    base = base * base % kPrime;
    e >>= 1;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t x) { return mod_pow(x, kPrime - 2); }

// Incremental row echelon form mod p, remembering which input rows were kept.
class ModularEchelon {
 public:
  explicit ModularEchelon(std::size_t cols) : cols_(cols), scratch_(cols) {}

  bool add(const std::int64_t* row) {
    for (std::size_t j = 0; j < cols_; ++j) scratch_[j] = mod_reduce(row[j]);
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const std::size_t pc = pivot_cols_[b];
      const std::uint64_t factor = scratch_[pc];
      if (factor == 0) continue;
      const auto& brow = basis_[b];
      for (std::size_t j = pc; j < cols_; ++j) {
        scratch_[j] = (scratch_[j] + kPrime - factor * brow[j] % kPrime) % kPrime;
      }
    }
    std::size_t pc = 0;
    while (pc < cols_ && scratch_[pc] == 0) ++pc;
    if (pc == cols_) return false;
    const std::uint64_t inv = mod_inverse(scratch_[pc]);
    for (std::size_t j = pc; j < cols_; ++j) scratch_[j] = scratch_[j] * inv % kPrime;
    // Keep the basis fully reduced so later rows need one pass.
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      auto& brow = basis_[b];
      const std::uint64_t factor = brow[pc];
      if (factor == 0) continue;
      for (std::size_t j = pc; j < cols_; ++j) {
        brow[j] = (brow[j] + kPrime - factor * scratch_[j] % kPrime) % kPrime;
      }
    }
    basis_.push_back(scratch_);
    pivot_cols_.push_back(pc);
    return true;
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  std::size_t cols_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::vector<std::uint64_t>> basis_;
  std::vector<std::size_t> pivot_cols_;
};

bool fits_small(const Vector<BigInt>& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (boost::multiprecision::msb(boost::multiprecision::abs(v(k)) + 1) >= 62) return false;
  }
  return true;
}

}  // namespace

std::size_t integer_rank(const IntMatrix& m, std::span<const std::size_t> rows,
                         std::size_t stop_at) {
  const auto cols = static_cast<std::size_t>(m.cols());
  ModularEchelon echelon(cols);
  std::vector<std::size_t> basis_rows;
  for (std::size_t id : rows) {
    if (echelon.add(m.row(static_cast<Eigen::Index>(id)).data())) {
      basis_rows.push_back(id);
      if (echelon.rank() >= stop_at) return stop_at;
    }
  }
  const std::size_t candidate = echelon.rank();
  if (candidate == cols) return candidate;

  // Certificate: every row must vanish on the exact nullspace of the basis rows.
  RationalMatrix basis(static_cast<Eigen::Index>(basis_rows.size()), m.cols());
  for (std::size_t i = 0; i < basis_rows.size(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      basis(static_cast<Eigen::Index>(i), j) = m(static_cast<Eigen::Index>(basis_rows[i]), j);
    }
  }
  bool certified = true;
  for (const RationalVector& kernel : nullspace_basis(basis)) {
    const Vector<BigInt> k = primitive_integer(kernel);
    const bool small = fits_small(k);
    std::vector<std::int64_t> k64;
    if (small) {
      for (Eigen::Index j = 0; j < k.size(); ++j) k64.push_back(k(j).convert_to<std::int64_t>());
    }
    for (std::size_t id : rows) {
      const std::int64_t* row = m.row(static_cast<Eigen::Index>(id)).data();
      bool zero;
      if (small) {
        __int128 acc = 0;
        bool overflow_risk = false;
        for (std::size_t j = 0; j < cols; ++j) {
          if (row[j] > (1LL << 31) || row[j] < -(1LL << 31)) overflow_risk = true;
          acc += static_cast<__int128>(row[j]) * k64[j];
        }
        if (overflow_risk) {
          BigInt big = 0;
          for (std::size_t j = 0; j < cols; ++j) big += BigInt(row[j]) * k(static_cast<Eigen::Index>(j));
          zero = big == 0;
        } else {
          zero = acc == 0;
        }
      } else {
        BigInt big = 0;
        for (std::size_t j = 0; j < cols; ++j) big += BigInt(row[j]) * k(static_cast<Eigen::Index>(j));
        zero = big == 0;
      }
      if (!zero) {
        certified = false;
        break;
      }
    }
    if (!certified) break;
  }
  std::size_t exact = candidate;
  if (!certified) {
    BigIntMatrix all(static_cast<Eigen::Index>(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        all(static_cast<Eigen::Index>(i), j) = m(static_cast<Eigen::Index>(rows[i]), j);
      }
    }
    exact = bareiss_rank_inplace(all);
  }
  return std::min(exact, stop_at);
}

std::size_t integer_rank(const IntMatrix& m) {
  std::vector<std::size_t> rows(static_cast<std::size_t>(m.rows()));
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return integer_rank(m, rows);
}

}  // namespace hypercone
