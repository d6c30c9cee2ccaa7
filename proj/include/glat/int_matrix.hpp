#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace glat {

// Dense matrix over Z with arbitrary-precision entries. Row-major storage.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;
  IntMatrix col(int j) const;
  IntMatrix row(int i) const;

  // Stacks o to the right / below; dimensions must agree.
  IntMatrix hstack(const IntMatrix& o) const;
  IntMatrix vstack(const IntMatrix& o) const;
  static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }
  // Exactly one 1 per row and per column, all other entries 0.
  bool is_permutation() const;

  // Signed determinant by fraction-free elimination. Requires square.
  mpz_class determinant() const;

  // Total ordering for use as a map key: by shape, then entries.
  static int compare(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

struct IntMatrixLess {
  bool operator()(const IntMatrix& a, const IntMatrix& b) const {
    return IntMatrix::compare(a, b) < 0;
  }
};

}  // namespace glat
