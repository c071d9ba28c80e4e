#include "orbifolder/enumeration.hpp"

#include <algorithm>
#include <functional>

namespace orbifolder {

namespace {

// G = L D L^T with L unit lower triangular; stored as R(i,j) = L(j,i) for j > i.
struct LdlForm {
  RMat r;
  RVec d;
};

LdlForm ldl(const RMat& g) {
  const Eigen::Index n = g.rows();
  LdlForm f{RMat::Zero(n, n), RVec::Zero(n)};
  RMat l = RMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Rat di = g(i, i);
    for (Eigen::Index k = 0; k < i; ++k) di -= f.d(k) * l(i, k) * l(i, k);
    if (di <= 0) throw std::invalid_argument("enumeration: form not positive definite");
    f.d(i) = di;
    l(i, i) = 1;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Rat v = g(j, i);
      for (Eigen::Index k = 0; k < i; ++k) v -= f.d(k) * l(j, k) * l(i, k);
      l(j, i) = v / di;
    }
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) f.r(i, j) = l(j, i);
  return f;
}

// Upper bound on sqrt(q) for q >= 0: isqrt(num*den)+1 over den.
Rat sqrt_upper(const Rat& q) {
  Int prod = num(q) * den(q);
  Int root;
  mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
  return frac(root + 1, den(q));
}

enum class Mode { Collect, Minimum, Count };

// Depth-first enumeration of x with (x+t)^T Q (x+t) <= bound, last coordinate
// outermost, candidates in ascending order.
struct Enumerator {
  const LdlForm& f;
  RVec t;
  Mode mode;
  Rat bound;           // current pruning bound (shrinks in Minimum mode)
  Rat target;          // Count mode: exact norm wanted
  bool found = false;  // Minimum mode: any vector seen
  Int count = 0;
  std::vector<IVec> out;
  IVec x;

  explicit Enumerator(const LdlForm& form) : f(form) {}

  void run() {
    const Eigen::Index n = f.d.size();
    x = IVec::Zero(n);
    if (n == 0) {
      visit(Rat(0));
      return;
    }
    descend(n - 1, Rat(0));
  }

  void visit(const Rat& norm) {
    switch (mode) {
      case Mode::Collect:
        if (norm > 0) out.push_back(x);
        break;
      case Mode::Minimum:
        if (!found || norm < bound) bound = norm;
        found = true;
        break;
      case Mode::Count:
        if (norm == target) count += 1;
        break;
    }
  }

  void descend(Eigen::Index i, const Rat& used) {
    Rat rem = bound - used;
    if (rem < 0) return;
    // center for this coordinate given the choices above it
    Rat c = t(i);
    for (Eigen::Index j = i + 1; j < f.d.size(); ++j) c += f.r(i, j) * (Rat(x(j)) + t(j));
    Rat radius = sqrt_upper(rem / f.d(i));
    Int lo = ceil_rat(-c - radius);
    Int hi = floor_rat(-c + radius);
    for (Int v = lo; v <= hi; v += 1) {
      Rat z = Rat(v) + c;
      Rat term = f.d(i) * z * z;
      if (term > rem) continue;
      x(i) = v;
      if (i == 0) {
        visit(used + term);
      } else {
        descend(i - 1, used + term);
      }
    }
  }
};

RVec coords_in_basis(const Sublattice& m, const RVec& h) {
  auto x = solve_rational(m.basis, h);
  if (!x.has_value()) throw std::invalid_argument("coset: h not in the span of the sublattice");
  return *x;
}

}  // namespace

std::vector<IVec> short_form_vectors(const RMat& q, const Rat& bound) {
  if (q.rows() == 0) return {};
  return FormEnumerator(q).shorter_than(bound);
}

// Nearest-plane rounding; gives the branch-and-bound a finite starting bound.
Rat babai_norm(const LdlForm& f, const RVec& t) {
  const Eigen::Index n = f.d.size();
  IVec x = IVec::Zero(n);
  Rat norm = 0;
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rat c = t(i);
    for (Eigen::Index j = i + 1; j < n; ++j) c += f.r(i, j) * (Rat(x(j)) + t(j));
    x(i) = -round_rat(c);
    Rat z = Rat(x(i)) + c;
    norm += f.d(i) * z * z;
  }
  return norm;
}

Rat min_coset_norm_form(const RMat& q, const RVec& t) {
  if (q.rows() == 0) return Rat(0);
  return FormEnumerator(q).min_coset(t);
}

Int count_coset_norm_form(const RMat& q, const RVec& t, const Rat& norm) {
  if (q.rows() == 0) return norm == 0 ? 1 : 0;
  return FormEnumerator(q).count_coset(t, norm);
}

FormEnumerator::FormEnumerator(const RMat& gram) : gram_(gram) {
  red_ = lll_gram(gram);
  LdlForm f = ldl(red_.gram);
  r_ = f.r;
  d_ = f.d;
}

std::vector<IVec> FormEnumerator::shorter_than(const Rat& bound) const {
  LdlForm f{r_, d_};
  Enumerator en(f);
  en.t = RVec::Zero(gram_.rows());
  en.mode = Mode::Collect;
  en.bound = bound;
  en.run();
  std::vector<IVec> result;
  result.reserve(en.out.size());
  for (const IVec& v : en.out) result.push_back(red_.u * v);
  std::sort(result.begin(), result.end(),
            [](const IVec& a, const IVec& b) { return lex_less(a, b); });
  return result;
}

Rat FormEnumerator::min_coset(const RVec& t) const {
  LdlForm f{r_, d_};
  Enumerator en(f);
  en.t = to_rational(red_.uinv) * t;
  en.mode = Mode::Minimum;
  en.bound = babai_norm(f, en.t);
  en.run();
  return en.bound;
}

Int FormEnumerator::count_coset(const RVec& t, const Rat& norm) const {
  if (norm < 0) return 0;
  LdlForm f{r_, d_};
  Enumerator en(f);
  en.t = to_rational(red_.uinv) * t;
  en.mode = Mode::Count;
  en.bound = norm;
  en.target = norm;
  en.run();
  return en.count;
}

std::vector<IVec> vectors_up_to_norm(const Lattice& l, const Rat& bound) {
  if (bound < 0) throw std::invalid_argument("vectors_up_to_norm: negative bound");
  return short_form_vectors(to_rational(l.gram), bound);
}

Rat min_coset_norm(const Sublattice& m, const RVec& h) {
  if (m.rank() == 0) {
    if (!h.isZero()) throw std::invalid_argument("coset: h not in the span of the sublattice");
    return Rat(0);
  }
  return min_coset_norm_form(m.gram, coords_in_basis(m, h));
}

Rat min_coset_norm(const GeneratedLattice& m, const RVec& h) {
  return min_coset_norm(sublattice_from_generators(m.ambient_gram, m.generators), h);
}

Int count_coset_vectors_of_norm(const Sublattice& m, const RVec& h, const Rat& norm) {
  if (m.rank() == 0) {
    if (!h.isZero()) throw std::invalid_argument("coset: h not in the span of the sublattice");
    return norm == 0 ? 1 : 0;
  }
  return count_coset_norm_form(m.gram, coords_in_basis(m, h), norm);
}

Int count_coset_vectors_of_norm(const GeneratedLattice& m, const RVec& h, const Rat& norm) {
  return count_coset_vectors_of_norm(sublattice_from_generators(m.ambient_gram, m.generators), h,
                                     norm);
}

}  // namespace orbifolder
