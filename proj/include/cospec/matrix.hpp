#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "cospec/integer.hpp"

namespace cospec {

/// Dense square matrix, row-major.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, T(0)) {
    if (n < 0) throw std::invalid_argument("negative matrix dimension");
  }

  SquareMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : SquareMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("matrix is not square");
      int j = 0;
      for (long long v : r) (*this)(i, j++) = T(v);
      ++i;
    }
  }

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int size() const { return n_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  template <typename U>
  SquareMatrix<U> cast() const {
    SquareMatrix<U> out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out(i, j) = convert<U>((*this)(i, j));
    return out;
  }

  SquareMatrix operator-() const {
    SquareMatrix out(n_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = T(0) - data_[k];
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    SquareMatrix out(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (int j = 0; j < a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  T trace() const {
    T t(0);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  template <typename U, typename V>
  static U convert(const V& v) {
    if constexpr (std::is_same_v<U, V>) {
      return v;
    } else if constexpr (std::is_same_v<U, BigInt>) {
      return to_bigint(v);
    } else if constexpr (std::is_same_v<V, BigInt>) {
      return narrow<U>(v);
    } else {
      return U(static_cast<long long>(v.value()));
    }
  }

  template <typename U>
  static U narrow(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<long long>::max()) || v < BigInt(std::numeric_limits<long long>::min()))
      throw IntegerOverflow();
    return U(static_cast<long long>(v));
  }

  int n_ = 0;
  std::vector<T> data_;
};

using BigIntMatrix = SquareMatrix<BigInt>;

template <typename T>
std::ostream& operator<<(std::ostream& os, const SquareMatrix<T>& m) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j) os << ' ';
      os << to_bigint(m(i, j));
    }
    os << '\n';
  }
  return os;
}

}  // namespace cospec
