#include "cmreal/cherednik.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cmreal/roots.hpp"

namespace cmreal {

namespace {

Perm compose(const Perm& w, const Perm& s) {
  Perm out(s.size());
  for (size_t k = 0; k < s.size(); ++k) out[k] = w[static_cast<size_t>(s[k])];
  return out;
}

Perm swap_perm(int n, int i, int j) {
  Perm s(static_cast<size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[static_cast<size_t>(i)], s[static_cast<size_t>(j)]);
  return s;
}

// (sigma.v)_k = v_{sigma^{-1}(k)}
std::vector<Gq> act(const Perm& sigma, const std::vector<Gq>& v) {
  std::vector<Gq> out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[static_cast<size_t>(sigma[k])] = v[k];
  return out;
}

int index_of(const std::vector<Perm>& perms, const Perm& w) {
  auto it = std::lower_bound(perms.begin(), perms.end(), w);
  return static_cast<int>(it - perms.begin());
}

}  // namespace

MatQ DunklRep::perm_matrix(const Perm& w) const {
  MatQ m(dim(), dim());
  for (int col = 0; col < dim(); ++col) m(index_of(perms, compose(w, perms[static_cast<size_t>(col)])), col) = Gq(1);
  return m;
}

MatQ DunklRep::transposition(int i, int j) const { return perm_matrix(swap_perm(n, i, j)); }

std::vector<MatQ> DunklRep::generators() const {
  std::vector<MatQ> g(x);
  g.insert(g.end(), y.begin(), y.end());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.push_back(transposition(i, j));
  return g;
}

std::vector<std::string> check_relations(const DunklRep& rep) {
  std::vector<std::string> bad;
  const int n = rep.n;
  auto name = [](const char* what, int i, int j) {
    return std::string(what) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  std::map<std::pair<int, int>, MatQ> s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s[{i, j}] = rep.transposition(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const MatQ& sij = s[{i, j}];
      for (int k = 0; k < n; ++k) {
        int sk = k == i ? j : k == j ? i : k;
        if (sij * rep.x[static_cast<size_t>(k)] != rep.x[static_cast<size_t>(sk)] * sij) bad.push_back(name("s x", i, j));
        if (sij * rep.y[static_cast<size_t>(k)] != rep.y[static_cast<size_t>(sk)] * sij) bad.push_back(name("s y", i, j));
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const MatQ& xi = rep.x[static_cast<size_t>(i)];
      const MatQ& yj = rep.y[static_cast<size_t>(j)];
      MatQ expect(rep.dim(), rep.dim());
      if (i != j) {
        expect = rep.c * s[{i, j}];
      } else {
        for (int k = 0; k < n; ++k)
          if (k != i) expect -= rep.c * s[{i, k}];
      }
      if (commutator(xi, yj) != expect) bad.push_back(name("[x,y]", i, j));
      if (i < j && !commutator(xi, rep.x[static_cast<size_t>(j)]).is_zero()) bad.push_back(name("[x,x]", i, j));
      if (i < j && !commutator(rep.y[static_cast<size_t>(i)], yj).is_zero()) bad.push_back(name("[y,y]", i, j));
    }
  return bad;
}

DunklRep build_dunkl_rep(const std::vector<Gq>& lambda, const std::vector<Gq>& mu, const Gq& c) {
  const int n = static_cast<int>(lambda.size());
  if (n == 0 || mu.size() != lambda.size()) throw std::invalid_argument("build_dunkl_rep: need n lambdas and n mus");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lambda[static_cast<size_t>(i)] == lambda[static_cast<size_t>(j)])
        throw std::domain_error("build_dunkl_rep: lambda is not regular");
  DunklRep rep;
  rep.n = n;
  rep.lambda = lambda;
  rep.mu = mu;
  rep.c = c;
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do rep.perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int d = rep.dim();
  for (int k = 0; k < n; ++k) {
    MatQ xk(d, d), yk(d, d);
    for (int col = 0; col < d; ++col) {
      const Perm& sigma = rep.perms[static_cast<size_t>(col)];
      std::vector<Gq> sl = act(sigma, lambda), sm = act(sigma, mu);
      const Gq& lk = sl[static_cast<size_t>(k)];
      xk(col, col) = lk;
      Gq diag = sm[static_cast<size_t>(k)];
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const Gq& lj = sl[static_cast<size_t>(j)];
        diag += c / (lk - lj);
        int row = index_of(rep.perms, compose(swap_perm(n, k, j), sigma));
        yk(row, col) -= c / (lj - lk);
      }
      yk(col, col) += diag;
    }
    rep.x.push_back(std::move(xk));
    rep.y.push_back(std::move(yk));
  }
  std::vector<std::string> bad = check_relations(rep);
  if (!bad.empty()) throw std::logic_error("build_dunkl_rep: relation " + bad.front() + " fails");
  return rep;
}

MatQ symmetrizer_full(const DunklRep& rep) {
  MatQ e(rep.dim(), rep.dim());
  for (const Perm& w : rep.perms) e += rep.perm_matrix(w);
  return Gq(Rational(1, rep.dim())) * e;
}

MatQ symmetrizer_bar(const DunklRep& rep) {
  MatQ e(rep.dim(), rep.dim());
  int count = 0;
  for (const Perm& w : rep.perms)
    if (w[0] == 0) {
      e += rep.perm_matrix(w);
      ++count;
    }
  return Gq(Rational(1, count)) * e;
}

CMPair extract_cm_pair(const DunklRep& rep) {
  MatQ e = symmetrizer_bar(rep);
  std::vector<int> pivots = rref(e).pivots;
  const int d = rep.dim();
  const int m = static_cast<int>(pivots.size());
  MatQ b(d, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < d; ++i) b(i, j) = e(i, pivots[static_cast<size_t>(j)]);
  // left inverse of the real full-rank basis
  MatQ bt = b.transpose();
  MatQ left = inverse(bt * b) * bt;
  MatQ x = left * rep.x[0] * b;
  MatQ z = Gq(-1) * (left * rep.y[0] * b);
  if (rep.c != Gq(1)) z = rep.c.inverse() * z;
  return validate(x, z);
}

bool regular_character(const DunklRep& rep) {
  for (const Perm& w : rep.perms) {
    bool identity = std::is_sorted(w.begin(), w.end());
    Gq tr = rep.perm_matrix(w).trace();
    if (tr != (identity ? Gq(rep.dim()) : Gq(0))) return false;
  }
  return true;
}

namespace {

bool certified_real_rooted(const MatQ& m) {
  PolyQ chi = char_poly(m);
  return chi.has_real_coeffs() && real_roots_certified(chi).all_real;
}

std::vector<Gq> real_parts(const std::vector<Gq>& v) {
  std::vector<Gq> out;
  for (const Gq& a : v) out.push_back(Gq(a.re));
  return out;
}

// Basis of {g : a_j g = g b_j for all j}, each solution as a matrix.
std::vector<MatQ> intertwiners(const std::vector<MatQ>& as, const std::vector<MatQ>& bs) {
  const int d = as.front().rows();
  const int unknowns = d * d;
  auto var = [d](int r, int c) { return r * d + c; };
  MatQ system(static_cast<int>(as.size()) * unknowns, unknowns);
  int row = 0;
  for (size_t j = 0; j < as.size(); ++j)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c, ++row) {
        for (int k = 0; k < d; ++k) {
          if (!as[j](r, k).is_zero()) system(row, var(k, c)) += as[j](r, k);
          if (!bs[j](k, c).is_zero()) system(row, var(r, k)) -= bs[j](k, c);
        }
      }
  MatQ null = nullspace(system);
  std::vector<MatQ> out;
  for (int s = 0; s < null.cols(); ++s) {
    MatQ g(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) g(r, c) = null(var(r, c), s);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

CherednikReport reality_harness(const DunklRep& rep) {
  CherednikReport r;
  r.pair = extract_cm_pair(rep);
  r.hypothesis = certified_real_rooted(r.pair.X) && certified_real_rooted(r.pair.Z);
  try {
    realify_regular(r.pair, false);
  } catch (const NonRegularError&) {
    return r;
  } catch (const std::domain_error&) {
    r.evaluated = true;
    return r;
  }
  if (!rep.c.is_real()) return r;
  DunklRep real_rep;
  try {
    real_rep = build_dunkl_rep(real_parts(rep.lambda), real_parts(rep.mu), rep.c);
  } catch (const std::domain_error&) {
    return r;
  }
  r.evaluated = true;
  std::vector<MatQ> gens = rep.generators(), real_gens = real_rep.generators();
  for (const MatQ& g : intertwiners(real_gens, gens)) {
    if (det(g).is_zero()) continue;
    bool all_real = std::all_of(gens.begin(), gens.end(), [](const MatQ& m) { return is_real_matrix(m); });
    r.real_form = all_real ? realify_conjugation(gens, real_gens, g) : g;
    r.conclusion = true;
    break;
  }
  return r;
}

}  // namespace cmreal
