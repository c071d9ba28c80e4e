#include <numeric>
#include "orbifolder/isometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "orbifolder/polynomial.hpp"

namespace orbifolder {

namespace {

std::map<int, int> cyclotomic_parts(const IMat& mat) {
  auto mult = cyclotomic_multiplicities(char_poly(mat));
  if (!mult.has_value())
    throw std::invalid_argument("isometry: characteristic polynomial is not a product of cyclotomics");
  return *mult;
}

}  // namespace

Isometry make_isometry(const Lattice& l, IMat mat) {
  if (mat.rows() != l.rank() || mat.cols() != l.rank())
    throw std::invalid_argument("isometry: dimension mismatch");
  if (mat.transpose() * l.gram * mat != l.gram)
    throw std::invalid_argument("isometry: matrix does not preserve the form");
  auto mult = cyclotomic_parts(mat);
  int order = 1;
  for (auto& [s, a] : mult)
    if (a > 0) order = static_cast<int>(lcm(order, s).get_si());
  IMat p = imat_identity(l.rank());
  for (int i = 0; i < order; ++i) p = (mat * p).eval();
  if (p != imat_identity(l.rank())) throw std::logic_error("isometry: order computation failed");
  return Isometry{std::move(mat), order};
}

std::string to_string(const FrameShape& f) {
  std::ostringstream os;
  bool first = true;
  for (auto& [t, b] : f.exponents) {
    if (!first) os << " ";
    os << t;
    if (b != 1) os << "^" << b;
    first = false;
  }
  return first ? "1^0" : os.str();
}

namespace {

FrameShape frame_shape_of_matrix(const Lattice& l, const IMat& mat, int order) {
  auto mult = cyclotomic_parts(mat);
  FrameShape f;
  f.order = order;
  for (int t : divisors(order)) {
    int b = 0;
    for (int s : divisors(order)) {
      if (s % t != 0) continue;
      auto it = mult.find(s);
      int a = it == mult.end() ? 0 : it->second;
      if (a) b += moebius(s / t) * a;
    }
    if (b != 0) f.exponents[t] = b;
  }
  // verification: product of (x^t-1)^{b_t} equals the characteristic polynomial
  IPoly lhs = IPoly::one(), rhs = char_poly(mat);
  Int total = 0;
  for (auto& [t, b] : f.exponents) {
    if (b > 0)
      lhs = mul(lhs, pow(IPoly::xt_minus_one(t), b));
    else
      rhs = mul(rhs, pow(IPoly::xt_minus_one(t), -b));
    total += Int(t) * b;
  }
  if (!(lhs == rhs)) throw std::logic_error("frame_shape: verification product mismatch");
  if (total != l.rank()) throw std::logic_error("frame_shape: exponents do not sum to the rank");
  return f;
}

}  // namespace

FrameShape frame_shape(const Lattice& l, const Isometry& nu) {
  return frame_shape_of_matrix(l, nu.mat, nu.order);
}

FrameShape frame_shape_of_power(const Lattice& l, const Isometry& nu, int i) {
  int ii = ((i % nu.order) + nu.order) % nu.order;
  IMat p = imat_identity(l.rank());
  for (int k = 0; k < ii; ++k) p = (nu.mat * p).eval();
  int order = nu.order / std::gcd(nu.order, ii == 0 ? nu.order : ii);
  if (ii == 0) order = 1;
  return frame_shape_of_matrix(l, p, order);
}

bool order_doubling(const Lattice& l, const Isometry& nu) {
  if (nu.order % 2 != 0) return false;
  IMat half = imat_identity(l.rank());
  for (int i = 0; i < nu.order / 2; ++i) half = (nu.mat * half).eval();
  IMat q = l.gram * half;  // <alpha, nu^{m/2} beta> = alpha^T q beta
  auto parity = [&](const IVec& a) {
    Int v = (a.transpose() * q * a).eval()(0, 0);
    Int r = v % 2;
    return r == 0 ? 0 : 1;
  };
  const Eigen::Index n = l.rank();
  for (Eigen::Index i = 0; i < n; ++i) {
    IVec e = IVec::Zero(n);
    e(i) = 1;
    if (parity(e) != 0) return true;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      IVec s = e;
      s(j) = 1;
      if (parity(s) != 0) return true;
    }
  }
  return false;
}

namespace {

long functional_value(const std::vector<long>& c, const IVec& v) {
  long acc = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += c[i] * v(i).get_si();
  return acc;
}

}  // namespace

std::vector<IVec> simple_roots(const Lattice& l, const std::vector<IVec>& roots) {
  if (roots.empty()) return {};
  const int n = static_cast<int>(l.rank());
  static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  std::vector<long> c(n);
  for (long seed = 0;; ++seed) {
    for (int k = 0; k < n; ++k) c[k] = primes[k % 24] + seed * (k * k + 1);
    bool generic = true;
    for (const IVec& r : roots)
      if (functional_value(c, r) == 0) {
        generic = false;
        break;
      }
    if (generic) break;
    if (seed > 1000) throw std::logic_error("simple_roots: no generic functional found");
  }
  std::set<std::vector<long>> positive;
  std::vector<IVec> pos;
  for (const IVec& r : roots) {
    if (functional_value(c, r) > 0) {
      pos.push_back(r);
      std::vector<long> key(n);
      for (int i = 0; i < n; ++i) key[i] = r(i).get_si();
      positive.insert(key);
    }
  }
  std::vector<IVec> delta;
  for (const IVec& a : pos) {
    bool decomposable = false;
    for (const IVec& b : pos) {
      if (b == a) continue;
      IVec diff = a - b;
      std::vector<long> key(n);
      for (int i = 0; i < n; ++i) key[i] = diff(i).get_si();
      if (positive.count(key)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) delta.push_back(a);
  }
  std::sort(delta.begin(), delta.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
  return delta;
}

bool stabilizes_simple_roots(const Isometry& nu, const std::vector<IVec>& delta) {
  std::set<std::vector<long>> set;
  for (const IVec& d : delta) {
    std::vector<long> key(d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) key[i] = d(i).get_si();
    set.insert(key);
  }
  for (const IVec& d : delta) {
    IVec img = nu.mat * d;
    std::vector<long> key(img.size());
    for (Eigen::Index i = 0; i < img.size(); ++i) key[i] = img(i).get_si();
    if (!set.count(key)) return false;
  }
  return true;
}

IMat conjugate_into_stabilizer(const Lattice& l, const std::vector<IVec>& delta, const IMat& nu) {
  const Eigen::Index n = l.rank();
  if (static_cast<Eigen::Index>(delta.size()) != n)
    throw std::invalid_argument("conjugate_into_stabilizer: root system does not span");
  RMat dmat(n, n);
  for (Eigen::Index j = 0; j < n; ++j) dmat.col(j) = to_rational(delta[j]);
  // regular chamber point rho: <rho, delta_j> = 1 for all j
  auto rho = solve_rational(RMat(dmat.transpose() * to_rational(l.gram)), RVec(RVec::Ones(n)));
  if (!rho.has_value()) throw std::logic_error("conjugate_into_stabilizer: no chamber point");
  RVec y = to_rational(nu) * *rho;
  IMat w = imat_identity(n);
  RMat gq = to_rational(l.gram);
  long guard = 0;
  for (;;) {
    if (++guard > 10000000) throw std::logic_error("conjugate_into_stabilizer: descent stuck");
    Eigen::Index neg = -1;
    for (Eigen::Index j = 0; j < n; ++j) {
      Rat ip = (to_rational(delta[j]).transpose() * gq * y).eval()(0, 0);
      if (ip < 0) {
        neg = j;
        break;
      }
      if (ip == 0) throw std::logic_error("conjugate_into_stabilizer: chamber point on a wall");
    }
    if (neg < 0) break;
    // reflect in delta_neg: x -> x - <delta, x> delta
    IMat refl = imat_identity(n) - delta[neg] * (delta[neg].transpose() * l.gram);
    y = to_rational(refl) * y;
    w = (refl * w).eval();
  }
  return w * nu;
}

namespace {

std::string coset_key(const Sublattice& dual_fixed, const RVec& h) {
  auto x = solve_rational(dual_fixed.basis, h);
  if (!x.has_value()) throw std::invalid_argument("power_equivalence: h not in the fixed space");
  std::ostringstream os;
  for (Eigen::Index i = 0; i < x->size(); ++i) os << rat_to_string(mod1((*x)(i))) << ",";
  return os.str();
}

}  // namespace

std::vector<std::vector<int>> power_equivalence_classes(const Lattice& l, const Isometry& nu,
                                                        const std::vector<RVec>& hs,
                                                        const std::vector<IMat>& normalizer_gens) {
  Sublattice fixed = fixed_sublattice(l, nu.mat);
  Sublattice dual = dual_in_span(fixed);
  const int m = nu.order;
  // validate generators and derive the unit i with tau nu tau^-1 = nu^i
  struct Action {
    RMat map;  // h -> (i^{-1} mod m) * tau h
  };
  std::vector<Action> actions;
  for (const IMat& tau : normalizer_gens) {
    make_isometry(l, tau);  // validation only
    RMat conj = to_rational(tau) * to_rational(nu.mat) * inverse(to_rational(tau));
    int unit = -1;
    IMat p = nu.mat;  // nu^i, starting at i = 1
    for (int i = 1; i <= m; ++i) {
      if (std::gcd(i, m) == 1 && to_rational(p) == conj) {
        unit = i;
        break;
      }
      p = (nu.mat * p).eval();
    }
    if (unit < 0) throw std::invalid_argument("power_equivalence: generator does not normalize <nu>");
    int inv = 1;
    while ((inv * unit) % m != 1 % m) ++inv;
    actions.push_back({to_rational(tau) * Rat(inv)});
  }
  // orbits: BFS over coset keys
  std::vector<int> cls(hs.size(), -1);
  std::map<std::string, std::vector<int>> key_to_h;
  for (size_t i = 0; i < hs.size(); ++i) key_to_h[coset_key(dual, hs[i])].push_back(int(i));
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < hs.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(classes.size());
    classes.push_back({});
    std::set<std::string> seen;
    std::vector<RVec> frontier{hs[i]};
    while (!frontier.empty()) {
      RVec h = frontier.back();
      frontier.pop_back();
      std::string key = coset_key(dual, h);
      if (seen.count(key)) continue;
      seen.insert(key);
      auto it = key_to_h.find(key);
      if (it != key_to_h.end()) {
        for (int member : it->second) {
          if (cls[static_cast<size_t>(member)] < 0) {
            cls[static_cast<size_t>(member)] = id;
            classes[static_cast<size_t>(id)].push_back(member);
          }
        }
      }
      for (const Action& a : actions) frontier.push_back(a.map * h);
      if (seen.size() > 100000) throw std::logic_error("power_equivalence: orbit too large");
    }
    std::sort(classes[id].begin(), classes[id].end());
  }
  return classes;
}

}  // namespace orbifolder
