#include "orbifolder/linalg.hpp"

namespace orbifolder {

namespace {

// Index of the entry with smallest non-zero absolute value in the trailing
// block starting at (t, t); (-1, -1) if the block is zero.
std::pair<Eigen::Index, Eigen::Index> smallest_pivot(const IMat& s, Eigen::Index t) {
  std::pair<Eigen::Index, Eigen::Index> best{-1, -1};
  Int best_abs = 0;
  for (Eigen::Index i = t; i < s.rows(); ++i) {
    for (Eigen::Index j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int a = abs(s(i, j));
      if (best.first < 0 || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithDecomposition d{m, imat_identity(rows), imat_identity(cols)};
  IMat& s = d.S;
  const Eigen::Index steps = std::min(rows, cols);

  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      auto [pi, pj] = smallest_pivot(s, t);
      if (pi < 0) break;
      if (pi != t) {
        s.row(t).swap(s.row(pi));
        d.U.row(t).swap(d.U.row(pi));
      }
      if (pj != t) {
        s.col(t).swap(s.col(pj));
        d.V.col(t).swap(d.V.col(pj));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);  // truncated division keeps remainders small
        if (q != 0) {
          s.row(i) -= (q * s.row(t)).eval();
          d.U.row(i) -= (q * d.U.row(t)).eval();
        }
        if (s(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        if (q != 0) {
          s.col(j) -= (q * s.col(t)).eval();
          d.V.col(j) -= (q * d.V.col(t)).eval();
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (Eigen::Index i = t + 1; i < rows && divisible; ++i) {
        for (Eigen::Index j = t + 1; j < cols && divisible; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            s.row(t) += s.row(i);
            d.U.row(t) += d.U.row(i);
            divisible = false;
          }
        }
      }
      if (divisible) break;
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      d.U.row(t) = -d.U.row(t);
    }
  }
  return d;
}

IMat hnf_rows(const IMat& a) {
  IMat h = a;
  const Eigen::Index rows = h.rows(), cols = h.cols();
  Eigen::Index r = 0;  // next pivot row
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Reduce column c below row r to a single entry via gcd row operations.
    for (;;) {
      Eigen::Index piv = -1;
      Int best;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int v = abs(h(i, c));
        if (piv < 0 || v < best) {
          piv = i;
          best = v;
        }
      }
      if (piv < 0) break;
      if (piv != r) h.row(r).swap(h.row(piv));
      bool done = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = h(i, c) / h(r, c);
        if (q != 0) h.row(i) -= (q * h.row(r)).eval();
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.row(r) = -h.row(r);
    // Reduce the entries above the pivot into [0, pivot).
    for (Eigen::Index i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q != 0) h.row(i) -= (q * h.row(r)).eval();
    }
    ++r;
  }
  return h.topRows(r).eval();
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_integer: dimension mismatch");
  SmithDecomposition d = smith_normal_form(a);
  IVec c = d.U * b;
  IVec z = IVec::Zero(a.cols());
  const Eigen::Index k = std::min(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Int s = (i < k) ? d.S(i, i) : Int(0);
    if (s == 0) {
      if (c(i) != 0) return std::nullopt;
    } else {
      if (c(i) % s != 0) return std::nullopt;
      z(i) = c(i) / s;
    }
  }
  return (d.V * z).eval();
}

std::optional<RVec> solve_rational(const RMat& a, const RVec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_rational: dimension mismatch");
  RMat m(a.rows(), a.cols() + 1);
  m.leftCols(a.cols()) = a;
  m.col(a.cols()) = b;
  const Eigen::Index rows = m.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(r).swap(m.row(piv));
    Rat pv = m(r, c);
    m.row(r) /= pv;
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && m(i, c) != 0) m.row(i) -= (m(i, c) * m.row(r)).eval();
    pivot_col.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    if (m(i, cols) != 0) return std::nullopt;
  RVec x = RVec::Zero(cols);
  for (Eigen::Index i = 0; i < r; ++i) x(pivot_col[i]) = m(i, cols);
  return x;
}

// Exact Gram-based lattice reduction (LLL with delta = 3/4 over the
// rationals, followed by size reduction).  Hermite-form bases coming out of
// kernel computations are far too skew to enumerate directly.
GramReduction lll_gram(const RMat& g) {
  const Eigen::Index n = g.rows();
  GramReduction red{g, imat_identity(n), imat_identity(n)};
  if (n <= 1) return red;

  RMat mu = RMat::Zero(n, n);
  RVec b = RVec::Zero(n);  // squared GSO norms
  auto gso = [&]() {
    for (Eigen::Index i = 0; i < n; ++i) {
      Rat bi = red.gram(i, i);
      for (Eigen::Index j = 0; j < i; ++j) {
        Rat v = red.gram(i, j);
        for (Eigen::Index k = 0; k < j; ++k) v -= mu(i, k) * mu(j, k) * b(k);
        mu(i, j) = v / b(j);
        bi -= mu(i, j) * mu(i, j) * b(j);
      }
      b(i) = bi;
    }
  };
  auto translate = [&](Eigen::Index i, Eigen::Index j, const Int& q) {
    // b_i <- b_i - q b_j
    Rat qq(q);
    red.gram.col(i) -= (qq * red.gram.col(j)).eval();
    red.gram.row(i) -= (qq * red.gram.row(j)).eval();
    red.u.col(i) -= (q * red.u.col(j)).eval();
    red.uinv.row(j) += (q * red.uinv.row(i)).eval();
    for (Eigen::Index k = 0; k < j; ++k) mu(i, k) -= qq * mu(j, k);
    mu(i, j) -= qq;
  };
  gso();
  const Rat delta(3, 4);
  Eigen::Index k = 1;
  long guard = 0;
  while (k < n) {
    if (++guard > 2000000) throw std::logic_error("lll_reduce: no convergence");
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      Int q = round_rat(mu(k, j));
      if (q != 0) translate(k, j, q);
    }
    if (b(k) >= (delta - mu(k, k - 1) * mu(k, k - 1)) * b(k - 1)) {
      ++k;
    } else {
      red.gram.col(k).swap(red.gram.col(k - 1));
      red.gram.row(k).swap(red.gram.row(k - 1));
      red.u.col(k).swap(red.u.col(k - 1));
      red.uinv.row(k).swap(red.uinv.row(k - 1));
      gso();
      k = std::max<Eigen::Index>(k - 1, 1);
    }
  }
  // final size-reduction pass
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = i - 1; j >= 0; --j) {
      Int q = round_rat(mu(i, j));
      if (q != 0) translate(i, j, q);
    }
  return red;
}


IMat integer_kernel(const IMat& a) {
  // Kernel rows of the Hermite form of [a^T | I]: combinations c with a c = 0.
  const Eigen::Index m = a.rows(), n = a.cols();
  IMat stack(n, m + n);
  stack.leftCols(m) = a.transpose();
  stack.rightCols(n) = imat_identity(n);
  IMat h = hnf_rows(stack);
  std::vector<Eigen::Index> zero_rows;
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    if (h.row(i).head(m).isZero()) zero_rows.push_back(i);
  IMat ker(n, static_cast<Eigen::Index>(zero_rows.size()));
  for (size_t idx = 0; idx < zero_rows.size(); ++idx)
    ker.col(static_cast<Eigen::Index>(idx)) = h.row(zero_rows[idx]).tail(n).transpose();
  if (ker.cols() > 0) {
    // shrink the basis: exact LLL with respect to the standard inner product
    RMat form = (ker.transpose() * ker).cast<Rat>();
    ker = (ker * lll_gram(form).u).eval();
  }
  return ker;
}

RMat rational_kernel(const RMat& a) {
  RMat m = a;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivot_of_col(cols, -1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(r).swap(m.row(piv));
    Rat pv = m(r, c);
    m.row(r) /= pv;
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && m(i, c) != 0) m.row(i) -= (m(i, c) * m.row(r)).eval();
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (pivot_of_col[c] < 0) free_cols.push_back(c);
  RMat ker = RMat::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (size_t idx = 0; idx < free_cols.size(); ++idx) {
    Eigen::Index f = free_cols[idx];
    ker(f, idx) = 1;
    for (Eigen::Index c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) ker(c, idx) = -m(pivot_of_col[c], f);
  }
  return ker;
}

Eigen::Index rank_of(const RMat& a) { return a.cols() - rational_kernel(a).cols(); }

Rat determinant(const RMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  RMat m = a;
  const Eigen::Index n = m.rows();
  Rat det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      m.row(c).swap(m.row(piv));
      det = -det;
    }
    det *= m(c, c);
    RVec row = m.row(c) / m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i)
      if (m(i, c) != 0) m.row(i) -= (m(i, c) * row.transpose()).eval();
  }
  return det;
}

Int determinant(const IMat& a) {
  Rat d = determinant(to_rational(a));
  return num(d);
}

RMat inverse(const RMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  const Eigen::Index n = a.rows();
  RMat m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n) = RMat::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
    if (piv != c) m.row(c).swap(m.row(piv));
    Rat pv = m(c, c);
    m.row(c) /= pv;
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != c && m(i, c) != 0) m.row(i) -= (m(i, c) * m.row(c)).eval();
  }
  return m.rightCols(n).eval();
}

IPoly char_poly(const IMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: not square");
  const Eigen::Index n = m.rows();
  // Samuelson-Berkowitz: division-free, coefficients exact.
  // p holds coefficients highest degree first.
  std::vector<Int> p{Int(1)};
  for (Eigen::Index k = 1; k <= n; ++k) {
    std::vector<Int> t(k + 1);
    t[0] = 1;
    t[1] = -m(k - 1, k - 1);
    if (k >= 2) {
      IVec s = m.block(0, k - 1, k - 1, 1);
      for (Eigen::Index i = 2; i <= k; ++i) {
        Int dot = 0;
        for (Eigen::Index j = 0; j < k - 1; ++j) dot += m(k - 1, j) * s(j);
        t[i] = -dot;
        if (i < k) s = (m.topLeftCorner(k - 1, k - 1) * s).eval();
      }
    }
    std::vector<Int> np(k + 1, Int(0));
    for (Eigen::Index i = 0; i <= k; ++i)
      for (size_t j = 0; j < p.size(); ++j)
        if (i >= static_cast<Eigen::Index>(j) && i - j <= k) np[i] += t[i - j] * p[j];
    p = std::move(np);
  }
  std::vector<Int> low_first(p.rbegin(), p.rend());
  return IPoly(std::move(low_first));
}

}  // namespace orbifolder
