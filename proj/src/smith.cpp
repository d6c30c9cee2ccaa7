#include "glat/smith.hpp"

#include <algorithm>
#include <sstream>

#include "glat/errors.hpp"

namespace glat {

namespace {

// Quotient rounded to nearest (ties toward the floor quotient), so the
// remainder after one elimination step has magnitude at most |b|/2.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (b > 0) {
    if (2 * r > b) q += 1;
  } else {
    if (2 * r < b) q += 1;
  }
  return q;
}

mpz_class abs_val(const mpz_class& a) { return a < 0 ? mpz_class(-a) : a; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const int m = a.rows(), n = a.cols();
  SmithForm s;
  s.diag = a;
  s.left = IntMatrix::identity(m);
  s.right = IntMatrix::identity(n);
  IntMatrix& d = s.diag;
  IntMatrix& u = s.left;
  IntMatrix& v = s.right;

  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) mpz_swap(d.at(i, c).get_mpz_t(), d.at(j, c).get_mpz_t());
    for (int c = 0; c < m; ++c) mpz_swap(u.at(i, c).get_mpz_t(), u.at(j, c).get_mpz_t());
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) mpz_swap(d.at(r, i).get_mpz_t(), d.at(r, j).get_mpz_t());
    for (int r = 0; r < n; ++r) mpz_swap(v.at(r, i).get_mpz_t(), v.at(r, j).get_mpz_t());
  };
  // row i -= q * row t  /  col j -= q * col t
  auto row_sub = [&](int i, int t, const mpz_class& q) {
    if (q == 0) return;
    for (int c = 0; c < n; ++c) mpz_submul(d.at(i, c).get_mpz_t(), q.get_mpz_t(), d.at(t, c).get_mpz_t());
    for (int c = 0; c < m; ++c) mpz_submul(u.at(i, c).get_mpz_t(), q.get_mpz_t(), u.at(t, c).get_mpz_t());
  };
  auto col_sub = [&](int j, int t, const mpz_class& q) {
    if (q == 0) return;
    for (int r = 0; r < m; ++r) mpz_submul(d.at(r, j).get_mpz_t(), q.get_mpz_t(), d.at(r, t).get_mpz_t());
    for (int r = 0; r < n; ++r) mpz_submul(v.at(r, j).get_mpz_t(), q.get_mpz_t(), v.at(r, t).get_mpz_t());
  };
  auto row_negate = [&](int i) {
    for (int c = 0; c < n; ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < m; ++c) u.at(i, c) = -u.at(i, c);
  };

  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    bool submatrix_zero = false;
    while (true) {
      // Minimal-absolute-value nonzero pivot in d[t.., t..].
      int pi = -1, pj = -1;
      mpz_class best;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          if (d.at(i, j) == 0) continue;
          mpz_class av = abs_val(d.at(i, j));
          if (pi < 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        submatrix_zero = true;
        break;
      }
      row_swap(t, pi);
      col_swap(t, pj);

      bool clear = true;
      for (int i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        row_sub(i, t, round_div(d.at(i, t), d.at(t, t)));
        if (d.at(i, t) != 0) clear = false;
      }
      if (!clear) continue;  // a strictly smaller pivot exists now
      for (int j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        col_sub(j, t, round_div(d.at(t, j), d.at(t, t)));
        if (d.at(t, j) != 0) clear = false;
      }
      if (!clear) continue;

      // Pivot isolated; force it to divide the rest of the submatrix.
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_sub(t, bad, mpz_class(-1));  // row t += row bad, reopens the pivot row
    }
    if (submatrix_zero) break;
    if (d.at(t, t) < 0) row_negate(t);
  }

  for (int t = 0; t < steps; ++t)
    if (d.at(t, t) != 0) ++s.rank;

  // The factorization is cheap to certify; do it on every call.
  if (!(u * a * v == d)) throw CheckFailed("smith form: U*A*V != D");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && d.at(i, j) != 0) throw CheckFailed("smith form: not diagonal");
  for (int t = 0; t < steps; ++t) {
    if (d.at(t, t) < 0) throw CheckFailed("smith form: negative diagonal");
    if (t + 1 < steps && d.at(t + 1, t + 1) != 0 &&
        (d.at(t, t) == 0 ||
         !mpz_divisible_p(d.at(t + 1, t + 1).get_mpz_t(), d.at(t, t).get_mpz_t())))
      throw CheckFailed("smith form: divisibility chain broken");
  }
  return s;
}

IntMatrix hermite_column(const IntMatrix& b) {
  const int m = b.rows(), n = b.cols();
  IntMatrix w = b;

  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) mpz_swap(w.at(r, i).get_mpz_t(), w.at(r, j).get_mpz_t());
  };
  auto col_sub = [&](int j, int t, const mpz_class& q) {
    if (q == 0) return;
    for (int r = 0; r < m; ++r) mpz_submul(w.at(r, j).get_mpz_t(), q.get_mpz_t(), w.at(r, t).get_mpz_t());
  };

  int c = 0;
  for (int row = 0; row < m && c < n; ++row) {
    while (true) {
      int jmin = -1;
      mpz_class best;
      for (int j = c; j < n; ++j) {
        if (w.at(row, j) == 0) continue;
        mpz_class av = abs_val(w.at(row, j));
        if (jmin < 0 || av < best) {
          best = av;
          jmin = j;
        }
      }
      if (jmin < 0) break;
      col_swap(jmin, c);
      bool others = false;
      for (int j = c + 1; j < n; ++j) {
        if (w.at(row, j) == 0) continue;
        col_sub(j, c, round_div(w.at(row, j), w.at(row, c)));
        if (w.at(row, j) != 0) others = true;
      }
      if (others) continue;
      // Single nonzero at (row, c): normalize and reduce earlier columns.
      if (w.at(row, c) < 0)
        for (int r = 0; r < m; ++r) w.at(r, c) = -w.at(r, c);
      for (int j = 0; j < c; ++j) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.at(row, j).get_mpz_t(), w.at(row, c).get_mpz_t());
        col_sub(j, c, q);
      }
      ++c;
      break;
    }
  }

  IntMatrix h(m, c);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < c; ++j) h.at(i, j) = w.at(i, j);
  return h;
}

namespace {

struct EchelonRow {
  int pivot;
  std::vector<mpz_class> v;
};

// Maintains the row span of everything fed in; scaling a row does not
// change the solution set of the homogeneous system.
class RowEchelon {
 public:
  explicit RowEchelon(int cols) : cols_(cols) {}

  void add(std::vector<mpz_class> v) {
    int pos = 0;
    while (true) {
      int p = -1;
      for (int j = pos; j < cols_; ++j)
        if (v[j] != 0) {
          p = j;
          break;
        }
      if (p < 0) return;  // reduced to zero
      auto it = std::lower_bound(
          rows_.begin(), rows_.end(), p,
          [](const EchelonRow& r, int key) { return r.pivot < key; });
      if (it == rows_.end() || it->pivot != p) {
        normalize(v, p);
        rows_.insert(it, EchelonRow{p, std::move(v)});
        return;
      }
      const std::vector<mpz_class>& e = it->v;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), e[p].get_mpz_t(), v[p].get_mpz_t());
      mpz_class alpha = e[p] / g, beta = v[p] / g;
      for (int j = p; j < cols_; ++j) {
        if (alpha != 1) v[j] *= alpha;
        if (e[j] != 0) mpz_submul(v[j].get_mpz_t(), beta.get_mpz_t(), e[j].get_mpz_t());
      }
      pos = p + 1;
    }
  }

  IntMatrix matrix() const {
    IntMatrix e(static_cast<int>(rows_.size()), cols_);
    for (size_t i = 0; i < rows_.size(); ++i)
      for (int j = 0; j < cols_; ++j) e.at(static_cast<int>(i), j) = rows_[i].v[j];
    return e;
  }

 private:
  void normalize(std::vector<mpz_class>& v, int p) {
    mpz_class g = 0;
    for (int j = p; j < cols_; ++j)
      if (v[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
    if (g > 1)
      for (int j = p; j < cols_; ++j)
        if (v[j] != 0) mpz_divexact(v[j].get_mpz_t(), v[j].get_mpz_t(), g.get_mpz_t());
    if (v[p] < 0)
      for (int j = p; j < cols_; ++j) v[j] = -v[j];
  }

  int cols_;
  std::vector<EchelonRow> rows_;
};

}  // namespace

IntMatrix kernel_basis(const IntMatrix& a) {
  const int m = a.rows(), n = a.cols();
  RowEchelon ech(n);
  std::vector<mpz_class> row(n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) row[j] = a.at(i, j);
    ech.add(row);
  }
  IntMatrix e = ech.matrix();
  SmithForm s = smith_normal_form(e);
  IntMatrix k(n, n - s.rank);
  for (int j = s.rank; j < n; ++j)
    for (int i = 0; i < n; ++i) k.at(i, j - s.rank) = s.right.at(i, j);
  k = hermite_column(k);
  if (!(a * k).is_zero()) throw CheckFailed("kernel basis does not annihilate");
  if (k.cols() != n - s.rank) throw CheckFailed("kernel basis rank drop");
  return k;
}

mpz_class FiniteAbelianGroup::order() const {
  if (!finite()) throw InputError("order of an infinite group");
  mpz_class o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

FiniteAbelianGroup FiniteAbelianGroup::direct_sum(const FiniteAbelianGroup& o) const {
  std::vector<mpz_class> all = invariant_factors;
  all.insert(all.end(), o.invariant_factors.begin(), o.invariant_factors.end());
  const int n = static_cast<int>(all.size());
  IntMatrix diag(n, n);
  for (int i = 0; i < n; ++i) diag.at(i, i) = all[static_cast<size_t>(i)];
  FiniteAbelianGroup r = quotient_structure(IntMatrix::identity(n), diag);
  r.free_rank += free_rank + o.free_rank;
  return r;
}

std::string FiniteAbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  if (free_rank > 0) os << "Z^" << free_rank;
  if (!invariant_factors.empty()) {
    if (free_rank > 0) os << " x ";
    os << "(";
    for (size_t i = 0; i < invariant_factors.size(); ++i)
      os << (i ? "," : "") << invariant_factors[i];
    os << ")";
  }
  return os.str();
}

FiniteAbelianGroup quotient_structure(const IntMatrix& ambient_basis,
                                      const IntMatrix& sub_generators) {
  if (ambient_basis.rows() != sub_generators.rows())
    throw InputError("quotient: ambient and sub live in different ambient spaces");
  SmithForm sa = smith_normal_form(ambient_basis);
  if (sa.rank != ambient_basis.cols())
    throw InputError("quotient: ambient basis columns are dependent");
  auto x = solve_integer(ambient_basis, sub_generators);
  if (!x)
    throw SubNotContained("quotient: generators not contained in ambient lattice");
  SmithForm sx = smith_normal_form(*x);
  FiniteAbelianGroup q;
  for (int t = 0; t < sx.rank; ++t)
    if (sx.diag.at(t, t) >= 2) q.invariant_factors.push_back(sx.diag.at(t, t));
  q.free_rank = ambient_basis.cols() - sx.rank;
  return q;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve: shape mismatch");
  const int m = a.rows(), n = a.cols(), k = b.cols();
  SmithForm s = smith_normal_form(a);
  IntMatrix c = s.left * b;
  IntMatrix y(n, k);
  const int steps = std::min(m, n);
  for (int i = 0; i < m; ++i) {
    const mpz_class* di = (i < steps) ? &s.diag.at(i, i) : nullptr;
    for (int j = 0; j < k; ++j) {
      if (di && *di != 0) {
        if (!mpz_divisible_p(c.at(i, j).get_mpz_t(), di->get_mpz_t()))
          return std::nullopt;
        mpz_divexact(y.at(i, j).get_mpz_t(), c.at(i, j).get_mpz_t(), di->get_mpz_t());
      } else if (c.at(i, j) != 0) {
        return std::nullopt;
      }
    }
  }
  IntMatrix x = s.right * y;
  if (!(a * x == b)) throw CheckFailed("solve: verification failed");
  return x;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("inverse of non-square matrix");
  mpz_class det = a.determinant();
  if (det != 1 && det != -1) throw NotUnimodular("matrix determinant is not +-1");
  auto inv = solve_integer(a, IntMatrix::identity(a.rows()));
  if (!inv || !((*inv) * a).is_identity())
    throw CheckFailed("unimodular inverse failed");
  return *inv;
}

}  // namespace glat
