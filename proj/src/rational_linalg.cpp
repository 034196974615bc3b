#include "cyclink/rational_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace cyclink {

namespace {

// Fraction-free (Bareiss) row echelon form. Rows are swapped toward the first
// nonzero entry; columns without a pivot are skipped. Columns at index >=
// pivot_cols are carried along but never pivoted on (augmented part).
struct Echelon {
  IntMatrix m;
  std::vector<std::size_t> pivots;
  int swaps = 0;
};

Echelon bareiss(IntMatrix m, std::size_t pivot_cols) {
  Echelon e;
  const std::size_t rows = m.rows(), cols = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  BigInt t;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.swap_rows(p, r);
      ++e.swaps;
    }
    const BigInt piv = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt f = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt& x = m(i, j);
        if (f == 0) {
          if (x == 0) continue;
          x *= piv;
        } else {
          x *= piv;
          t = f * m(r, j);
          x -= t;
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

// Row i of a rational system scaled by the lcm of its denominators.
IntMatrix clear_denominators(const RationalMatrix& a, std::span<const BigRational> b) {
  const bool aug = !b.empty();
  IntMatrix m(a.rows(), a.cols() + (aug ? 1 : 0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    if (aug) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
    if (aug) m(i, a.cols()) = b[i].get_num() * (l / b[i].get_den());
  }
  return m;
}

// Back substitution on an echelon form; `rhs` gives the value of the augmented
// column (or zero) for each pivot row, free variables come preset in x.
void back_substitute(const Echelon& e, std::size_t n, std::vector<BigRational>& x,
                     const std::vector<BigInt>& rhs) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const std::size_t c = e.pivots[k];
    BigRational acc(rhs[k]);
    for (std::size_t j = c + 1; j < n; ++j)
      if (e.m(k, j) != 0 && x[j] != 0) acc -= e.m(k, j) * x[j];
    acc /= e.m(k, c);
    x[c] = acc;
  }
}

std::optional<std::vector<BigRational>> solve_augmented(IntMatrix aug) {
  const std::size_t n = aug.cols() - 1;
  Echelon e = bareiss(std::move(aug), n);
  for (std::size_t i = e.pivots.size(); i < e.m.rows(); ++i)
    if (e.m(i, n) != 0) return std::nullopt;
  std::vector<BigRational> x(n);
  std::vector<BigInt> rhs(e.pivots.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = e.m(k, n);
  back_substitute(e, n, x, rhs);
  return x;
}

// Working state of a Smith reduction: S = L A R with inverses tracked on demand.
class SmithReduction {
 public:
  SmithReduction(const IntMatrix& a, bool track_left_inverse, bool track_right)
      : S(a),
        L(IntMatrix::identity(a.rows())),
        track_linv_(track_left_inverse),
        track_r_(track_right) {
    if (track_linv_) Linv = IntMatrix::identity(a.rows());
    if (track_r_) {
      R = IntMatrix::identity(a.cols());
      Rinv = IntMatrix::identity(a.cols());
    }
  }

  void run() {
    const std::size_t m = S.rows(), n = S.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      if (!move_smallest(t, t, m, t, n)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i)
          if (S(i, t) != 0) {
            BigInt q = S(i, t) / S(t, t);
            add_row(i, t, -q);
            if (S(i, t) != 0) dirty = true;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(t, j) != 0) {
            BigInt q = S(t, j) / S(t, t);
            add_col(j, t, -q);
            if (S(t, j) != 0) dirty = true;
          }
        if (dirty) {
          move_smallest_cross(t);
          continue;
        }
        if (auto bad = non_divisible(t)) {
          add_row(t, *bad, 1);
          continue;
        }
        break;
      }
      if (S(t, t) < 0) negate_row(t);
    }
  }

  IntMatrix S, L, Linv, R, Rinv;

 private:
  bool track_linv_, track_r_;

  void add_row(std::size_t i, std::size_t k, const BigInt& f) {  // row i += f row k
    for (std::size_t j = 0; j < S.cols(); ++j)
      if (S(k, j) != 0) S(i, j) += f * S(k, j);
    for (std::size_t j = 0; j < L.cols(); ++j)
      if (L(k, j) != 0) L(i, j) += f * L(k, j);
    if (track_linv_)
      for (std::size_t r = 0; r < Linv.rows(); ++r)
        if (Linv(r, i) != 0) Linv(r, k) -= f * Linv(r, i);
  }
  void add_col(std::size_t j, std::size_t k, const BigInt& f) {  // col j += f col k
    for (std::size_t r = 0; r < S.rows(); ++r)
      if (S(r, k) != 0) S(r, j) += f * S(r, k);
    if (track_r_) {
      for (std::size_t r = 0; r < R.rows(); ++r)
        if (R(r, k) != 0) R(r, j) += f * R(r, k);
      for (std::size_t c = 0; c < Rinv.cols(); ++c)
        if (Rinv(j, c) != 0) Rinv(k, c) -= f * Rinv(j, c);
    }
  }
  void swap_rows(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    L.swap_rows(a, b);
    if (track_linv_) Linv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    if (track_r_) {
      R.swap_cols(a, b);
      Rinv.swap_rows(a, b);
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < S.cols(); ++j) S(i, j) = -S(i, j);
    for (std::size_t j = 0; j < L.cols(); ++j) L(i, j) = -L(i, j);
    if (track_linv_)
      for (std::size_t r = 0; r < Linv.rows(); ++r) Linv(r, i) = -Linv(r, i);
  }

  bool move_smallest(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j)
        if (S(i, j) != 0 && (!found || mpz_cmpabs(S(i, j).get_mpz_t(), S(bi, bj).get_mpz_t()) < 0)) {
          bi = i;
          bj = j;
          found = true;
        }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }
  void move_smallest_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < S.rows(); ++i)
      if (S(i, t) != 0 && mpz_cmpabs(S(i, t).get_mpz_t(), S(bi, bj).get_mpz_t()) < 0) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < S.cols(); ++j)
      if (S(t, j) != 0 && mpz_cmpabs(S(t, j).get_mpz_t(), S(bi, bj).get_mpz_t()) < 0) {
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }
  std::optional<std::size_t> non_divisible(std::size_t t) const {
    for (std::size_t i = t + 1; i < S.rows(); ++i)
      for (std::size_t j = t + 1; j < S.cols(); ++j)
        if (S(i, j) != 0 && !mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) return i;
    return std::nullopt;
  }
};

}  // namespace

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  Echelon e = bareiss(a, a.cols());
  if (e.pivots.size() < a.rows()) return 0;
  BigInt d = e.m(a.rows() - 1, a.cols() - 1);
  return e.swaps % 2 ? BigInt(-d) : d;
}

std::optional<std::vector<BigRational>> solve_particular(const RationalMatrix& a,
                                                         std::span<const BigRational> b) {
  if (b.size() != a.rows()) throw InvalidInput("solve_particular: rhs length differs from row count");
  if (a.rows() == 0) return std::vector<BigRational>(a.cols());
  return solve_augmented(clear_denominators(a, b));
}

std::optional<std::vector<BigRational>> solve_particular(const IntMatrix& a, std::span<const BigInt> b) {
  if (b.size() != a.rows()) throw InvalidInput("solve_particular: rhs length differs from row count");
  IntMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  return solve_augmented(std::move(aug));
}

std::vector<std::vector<BigRational>> nullspace_basis(const RationalMatrix& a) {
  const std::size_t n = a.cols();
  Echelon e = bareiss(clear_denominators(a, {}), n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<BigInt> zero(e.pivots.size());
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> x(n);
    x[f] = 1;
    back_substitute(e, n, x, zero);
    basis.push_back(std::move(x));
  }
  return basis;
}

SNFResult smith_normal_form(const IntMatrix& a) {
  SmithReduction red(a, true, true);
  red.run();
  return {std::move(red.Linv), std::move(red.S), std::move(red.Rinv)};
}

std::optional<BigInt> minimal_scalar_integer_solution(const IntMatrix& a, std::span<const BigInt> b) {
  if (b.size() != a.rows())
    throw InvalidInput("minimal_scalar_integer_solution: rhs length differs from row count");
  SmithReduction red(a, false, false);
  red.run();
  std::vector<BigInt> c = mat_vec(red.L, b);
  const std::size_t diag = std::min(a.rows(), a.cols());
  BigInt d = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const BigInt s = i < diag ? red.S(i, i) : BigInt(0);
    if (s == 0) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), c[i].get_mpz_t());
    BigInt need = s / g;
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), need.get_mpz_t());
  }
  return d;
}

}  // namespace cyclink
