#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "exla/errors.hpp"
#include "exla/liedata.hpp"
#include "exla/poly.hpp"

namespace exla {

// A root: the functional values alpha(H_j) on the Cartan generators, plus a
// spanning vector of its (one-dimensional) root space.
struct Root {
  std::vector<GaussRat> values;
  std::vector<GaussRat> vec;
};

struct RootSystem {
  std::size_t dim = 0, rank = 0;
  std::vector<std::vector<GaussRat>> cartan_basis;
  Matrix<GaussRat> cartan_gram;  // Killing form restricted to the Cartan basis
  std::vector<Root> roots;
};

namespace detail {

// Annihilator polynomial of v under A by incremental Krylov elimination; the
// stored rows remember their expansion in the Krylov vectors, so the first
// dependence hands back a monic polynomial directly.
inline Poly krylov_annihilator(const Matrix<GaussRat>& a, std::vector<GaussRat> v) {
  const std::size_t n = a.rows();
  struct Row {
    std::vector<GaussRat> vec;
    std::vector<GaussRat> expr;  // coefficients on v, Av, A^2 v, ...
    std::size_t pivot;
  };
  std::vector<Row> rows;
  for (std::size_t d = 0; d <= n; ++d) {
    if (d > 0) v = a.apply(v);
    std::vector<GaussRat> w = v;
    std::vector<GaussRat> expr(n + 1);
    expr[d] = GaussRat(1);
    for (const Row& r : rows) {
      if (w[r.pivot].is_zero()) continue;
      GaussRat f = w[r.pivot] / r.vec[r.pivot];
      for (std::size_t k = 0; k < n; ++k) w[k] -= f * r.vec[k];
      for (std::size_t k = 0; k <= d; ++k) expr[k] -= f * r.expr[k];
    }
    std::size_t p = 0;
    while (p < n && w[p].is_zero()) ++p;
    if (p == n) {
      expr.resize(d + 1);
      return Poly(std::move(expr));
    }
    rows.push_back(Row{std::move(w), std::move(expr), p});
  }
  throw Error("krylov annihilator not found");  // unreachable: d = n always depends
}

// Scale a vector to primitive Gaussian-integer form: clears denominators and
// divides out the integer content. Keeps downstream bracket arithmetic on
// root vectors small.
inline void normalize_primitive(std::vector<GaussRat>& v) {
  mpz_class l(1);
  for (const auto& x : v) {
    l = lcm(l, x.re.denominator());
    l = lcm(l, x.im.denominator());
  }
  mpz_class g(0);
  for (auto& x : v) {
    x.re = x.re * Rat(l);
    x.im = x.im * Rat(l);
    g = gcd(g, x.re.numerator());
    g = gcd(g, x.im.numerator());
  }
  if (g > 1)
    for (auto& x : v) {
      x.re = x.re / Rat(g);
      x.im = x.im / Rat(g);
    }
}

}  // namespace detail

// Exact root-space decomposition. The generic element only certifies
// separation: roots are re-evaluated as functionals against each Cartan
// generator, with exact simultaneous-eigenvector checks.
inline RootSystem decompose(const LieAlgebraData& alg, const CartanDatum& cartan) {
  const std::size_t n = alg.dim();
  const std::size_t rank = cartan.basis.size();
  RootSystem rs;
  rs.dim = n;
  rs.rank = rank;
  rs.cartan_basis = cartan.basis;

  // Cartan validity: pairwise commuting, independent
  {
    Matrix<GaussRat> m(rank, n);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = cartan.basis[i][j];
    if (exla::rank(m) != rank)
      throw NonGenericCartanElement("cartan basis is not independent");
  }
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      auto br = alg.bracket(cartan.basis[i], cartan.basis[j]);
      for (const auto& v : br)
        if (!v.is_zero()) throw NonGenericCartanElement("cartan basis does not commute");
    }

  // Killing form on the Cartan
  rs.cartan_gram = Matrix<GaussRat>(rank, rank);
  {
    std::vector<Matrix<GaussRat>> ads;
    for (const auto& h : cartan.basis) ads.push_back(alg.ad(h));
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) rs.cartan_gram(i, j) = (ads[i] * ads[j]).trace();
    if (exla::rank(rs.cartan_gram) != rank) throw DegenerateCartanForm();
  }

  // generic element and its ad
  std::vector<GaussRat> g(n);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < n; ++j) g[j] += cartan.generic[i] * cartan.basis[i][j];
  Matrix<GaussRat> a = alg.ad(g);

  // The spectrum of ad(g) is the union of the roots of the annihilator
  // polynomials of the basis start vectors. Each annihilator stays small
  // (degree and coefficients), unlike the assembled minimal polynomial whose
  // cleared denominators would blow up the divisor enumeration. The
  // eigenspace dimension count below certifies completeness exactly.
  std::vector<GaussRat> eigenvalues;
  {
    auto known = [&](const GaussRat& lambda) {
      for (const auto& seen : eigenvalues)
        if (seen == lambda) return true;
      return false;
    };
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<GaussRat> v(n);
      v[start] = GaussRat(1);
      Poly ann = detail::krylov_annihilator(a, v);
      RootsResult rr = gaussian_rational_roots(ann);
      if (!rr.splits) throw NonSplitSpectrum();
      for (const auto& [lambda, mult] : rr.roots)
        if (!known(lambda)) eigenvalues.push_back(lambda);
    }
  }
  std::vector<std::vector<std::vector<GaussRat>>> eigenspaces;
  std::size_t total = 0;
  for (const GaussRat& lambda : eigenvalues) {
    Matrix<GaussRat> shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    auto ker = kernel(shifted);
    for (auto& kv : ker) detail::normalize_primitive(kv);
    total += ker.size();
    eigenspaces.push_back(std::move(ker));
  }
  if (total != n)
    throw NonGenericCartanElement("ad of the generic element is not diagonalizable");

  // zero eigenspace must be exactly the Cartan span
  for (std::size_t e = 0; e < eigenvalues.size(); ++e) {
    if (!eigenvalues[e].is_zero()) continue;
    if (eigenspaces[e].size() != rank)
      throw NonGenericCartanElement("zero eigenspace exceeds the Cartan");
    Matrix<GaussRat> span(rank + eigenspaces[e].size(), n);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < n; ++j) span(i, j) = cartan.basis[i][j];
    for (std::size_t i = 0; i < eigenspaces[e].size(); ++i)
      for (std::size_t j = 0; j < n; ++j) span(rank + i, j) = eigenspaces[e][i][j];
    if (exla::rank(span) != rank)
      throw NonGenericCartanElement("zero eigenspace differs from the Cartan span");
  }

  // nonzero eigenspaces are 1-dimensional root spaces; evaluate the
  // functional on every generator and insist on exact joint eigenvectors
  bool has_zero = false;
  for (std::size_t e = 0; e < eigenvalues.size(); ++e) {
    if (eigenvalues[e].is_zero()) {
      has_zero = true;
      continue;
    }
    if (eigenspaces[e].size() != 1)
      throw NonGenericCartanElement("repeated nonzero eigenvalue");
    Root root;
    root.vec = eigenspaces[e][0];
    std::size_t lead = 0;
    while (root.vec[lead].is_zero()) ++lead;
    GaussRat check;
    for (std::size_t i = 0; i < rank; ++i) {
      auto w = alg.bracket(cartan.basis[i], root.vec);
      GaussRat value = w[lead] / root.vec[lead];
      for (std::size_t j = 0; j < n; ++j)
        if (w[j] != value * root.vec[j])
          throw NonGenericCartanElement("root vector is not a joint eigenvector");
      check += cartan.generic[i] * value;
      root.values.push_back(std::move(value));
    }
    if (check != eigenvalues[e])
      throw NonGenericCartanElement("functional does not reproduce the eigenvalue");
    rs.roots.push_back(std::move(root));
  }
  if ((has_zero ? rank : 0) + rs.roots.size() != n)
    throw NonGenericCartanElement("eigenspace dimensions do not sum to dim");
  return rs;
}

// Canonical element t_alpha with B(t_alpha, H) = alpha(H), as coefficients on
// the Cartan basis.
inline std::vector<GaussRat> coroot(const RootSystem& rs, const std::vector<GaussRat>& values) {
  return solve_linear(rs.cartan_gram, values);
}

inline GaussRat root_inner(const RootSystem& rs, const std::vector<GaussRat>& a,
                           const std::vector<GaussRat>& b) {
  auto ta = coroot(rs, a), tb = coroot(rs, b);
  GaussRat acc;
  for (std::size_t i = 0; i < ta.size(); ++i)
    for (std::size_t j = 0; j < tb.size(); ++j) acc += ta[i] * rs.cartan_gram(i, j) * tb[j];
  return acc;
}

// positivity by lexicographic order on (re, im) across the value vector
inline bool is_positive(const std::vector<GaussRat>& values) {
  for (const auto& v : values) {
    if (v.is_zero()) continue;
    if (!v.re.is_zero()) return v.re > Rat(0);
    return v.im > Rat(0);
  }
  return false;
}

struct PositiveSplit {
  std::vector<Root> positive, negative;
};

inline PositiveSplit positive_split(const RootSystem& rs) {
  PositiveSplit out;
  std::map<std::vector<std::string>, int> seen;
  auto key = [](const std::vector<GaussRat>& values) {
    std::vector<std::string> k;
    for (const auto& v : values) k.push_back(v.str());
    return k;
  };
  for (const Root& r : rs.roots) ++seen[key(r.values)];
  for (const Root& r : rs.roots) {
    std::vector<GaussRat> neg;
    for (const auto& v : r.values) neg.push_back(-v);
    if (seen.find(key(neg)) == seen.end() || seen[key(neg)] != seen[key(r.values)])
      throw UnpairedRoot();
    (is_positive(r.values) ? out.positive : out.negative).push_back(r);
  }
  return out;
}

// simple roots: positive roots that are not a sum of two positive roots
inline std::vector<Root> simple_roots(const std::vector<Root>& positive) {
  std::vector<Root> simple;
  for (const Root& r : positive) {
    bool decomposable = false;
    for (const Root& p : positive) {
      for (const Root& q : positive) {
        bool eq = true;
        for (std::size_t i = 0; i < r.values.size(); ++i)
          if (p.values[i] + q.values[i] != r.values[i]) eq = false;
        if (eq) decomposable = true;
      }
      if (decomposable) break;
    }
    if (!decomposable) simple.push_back(r);
  }
  return simple;
}

// A_ij = 2(alpha_i, alpha_j)/(alpha_j, alpha_j), entries must be integers
inline Matrix<GaussRat> cartan_matrix(const RootSystem& rs, const std::vector<Root>& simple) {
  const std::size_t n = simple.size();
  Matrix<GaussRat> gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = root_inner(rs, simple[i].values, simple[j].values);
  // positive-definiteness on the real span via leading principal minors
  {
    Matrix<GaussRat> minor(0, 0);
    for (std::size_t k = 1; k <= n; ++k) {
      Matrix<GaussRat> mk(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          if (!gram(i, j).is_real()) throw NotCrystallographic();
          mk(i, j) = gram(i, j);
        }
      // det via char poly constant term: det = (-1)^k * p(0)
      Poly p = char_poly(mk);
      GaussRat det0 = p.coeff(0);
      if (k % 2 == 1) det0 = -det0;
      if (!(det0.re > Rat(0))) throw NotCrystallographic();
    }
  }
  Matrix<GaussRat> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GaussRat v = (GaussRat(2) * gram(i, j)) / gram(j, j);
      if (!v.is_real() || !v.re.is_integer()) throw NotCrystallographic();
      a(i, j) = v;
    }
  return a;
}

struct DynkinDiagram {
  std::string type;     // e.g. "A1", "C3", "F4"
  std::size_t rank = 0;
  // edges in catalog numbering: (i, j, multiplicity, arrow_to_j)
  struct Edge {
    std::size_t i, j;
    int multiplicity;
    bool arrow_to_j;  // arrow points toward the shorter root j
  };
  std::vector<Edge> edges;
};

namespace detail {

// Gram matrices of the standard simple systems, Bourbaki-style chains.
inline Matrix<GaussRat> standard_gram(char family, std::size_t n) {
  Matrix<GaussRat> g(n, n);
  auto set_norm = [&](std::size_t i, long v) { g(i, i) = GaussRat(Rat(v, 2)); };
  auto link = [&](std::size_t i, std::size_t j, long num, long den) {
    g(i, j) = g(j, i) = GaussRat(Rat(num, den));
  };
  switch (family) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) set_norm(i, 4);
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1, 1);
      break;
    case 'B':  // last root short
      for (std::size_t i = 0; i + 1 < n; ++i) set_norm(i, 4);
      set_norm(n - 1, 2);
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1, 1);
      break;
    case 'C':  // last root long
      for (std::size_t i = 0; i + 1 < n; ++i) set_norm(i, 2);
      set_norm(n - 1, 4);
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, 2);
      if (n >= 2) link(n - 2, n - 1, -1, 1);
      break;
    case 'D':
      for (std::size_t i = 0; i < n; ++i) set_norm(i, 4);
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, 1);
      if (n >= 2) link(n - 3, n - 1, -1, 1);
      break;
    case 'E':
      for (std::size_t i = 0; i < n; ++i) set_norm(i, 4);
      // chain 0-2-3-4-...-(n-1), node 1 attached to node 3
      link(0, 2, -1, 1);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1, -1, 1);
      link(1, 3, -1, 1);
      break;
    case 'F':
      set_norm(0, 4);
      set_norm(1, 4);
      set_norm(2, 2);
      set_norm(3, 2);
      link(0, 1, -1, 1);
      link(1, 2, -1, 1);
      link(2, 3, -1, 2);
      break;
    case 'G':
      set_norm(0, 2);
      set_norm(1, 6);
      link(0, 1, -3, 2);
      break;
  }
  return g;
}

inline Matrix<GaussRat> cartan_from_gram(const Matrix<GaussRat>& g) {
  std::size_t n = g.rows();
  Matrix<GaussRat> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (GaussRat(2) * g(i, j)) / g(j, j);
  return a;
}

struct CatalogEntry {
  std::string type;
  Matrix<GaussRat> cartan;
  Matrix<GaussRat> gram;
};

inline const std::vector<CatalogEntry>& dynkin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> v;
    auto add = [&](char f, std::size_t lo, std::size_t hi) {
      for (std::size_t n = lo; n <= hi; ++n) {
        Matrix<GaussRat> g = standard_gram(f, n);
        v.push_back({std::string(1, f) + std::to_string(n), cartan_from_gram(g), g});
      }
    };
    add('A', 1, 8);
    add('B', 2, 8);
    add('C', 3, 8);
    add('D', 4, 8);
    add('E', 6, 8);
    add('F', 4, 4);
    add('G', 2, 2);
    return v;
  }();
  return catalog;
}

inline bool permutation_match(const Matrix<GaussRat>& a, const Matrix<GaussRat>& b,
                              std::vector<std::size_t>& perm_out) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (a(perm[i], perm[j]) != b(i, j)) ok = false;
    if (ok) {
      perm_out = perm;
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace detail

// Classification by exhaustive permutation match against the standard Cartan
// matrices of rank <= 8; label plus edge data for rendering.
inline DynkinDiagram classify_dynkin(const Matrix<GaussRat>& cm) {
  const std::size_t n = cm.rows();
  for (const auto& entry : detail::dynkin_catalog()) {
    if (entry.cartan.rows() != n) continue;
    std::vector<std::size_t> perm;
    if (!detail::permutation_match(cm, entry.cartan, perm)) continue;
    DynkinDiagram d;
    d.type = entry.type;
    d.rank = n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        GaussRat aij = entry.cartan(i, j), aji = entry.cartan(j, i);
        if (aij.is_zero()) continue;
        long m = (aij * aji).re.numerator().get_si();
        // arrow toward the shorter root
        bool to_j = entry.gram(j, j).re < entry.gram(i, i).re;
        d.edges.push_back({i, j, int(m), to_j});
      }
    return d;
  }
  throw UnknownType();
}

// ASCII rendering: chains as o-o=>o, branched types as an edge list.
inline std::string render_dynkin(const DynkinDiagram& d) {
  std::vector<std::vector<std::size_t>> adj(d.rank);
  for (const auto& e : d.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  bool chain = true;
  for (const auto& a : adj)
    if (a.size() > 2) chain = false;
  std::string out = d.type + ": ";
  if (!chain || d.rank == 0) {
    for (const auto& e : d.edges)
      out += "(" + std::to_string(e.i + 1) + ")" + (e.multiplicity == 1 ? "-" : "=") + "(" +
             std::to_string(e.j + 1) + ") ";
    return out;
  }
  // find an end of the chain and walk it
  std::size_t cur = 0;
  for (std::size_t i = 0; i < d.rank; ++i)
    if (adj[i].size() <= 1) {
      cur = i;
      break;
    }
  std::vector<bool> used(d.rank, false);
  out += "o";
  used[cur] = true;
  for (std::size_t step = 1; step < d.rank; ++step) {
    std::size_t next = d.rank;
    for (std::size_t cand : adj[cur])
      if (!used[cand]) next = cand;
    if (next == d.rank) break;
    const DynkinDiagram::Edge* edge = nullptr;
    for (const auto& e : d.edges)
      if ((e.i == cur && e.j == next) || (e.i == next && e.j == cur)) edge = &e;
    if (edge->multiplicity == 1)
      out += "-";
    else {
      bool arrow_forward = (edge->i == cur) ? edge->arrow_to_j : !edge->arrow_to_j;
      std::string bond = (edge->multiplicity == 2) ? "=" : "#";
      out += arrow_forward ? bond + ">" : "<" + bond;
    }
    out += "o";
    used[next] = true;
    cur = next;
  }
  return out;
}

inline nlohmann::json root_system_to_json(const RootSystem& rs) {
  nlohmann::json j;
  j["dim"] = rs.dim;
  j["rank"] = rs.rank;
  nlohmann::json roots = nlohmann::json::array();
  for (const Root& r : rs.roots) {
    nlohmann::json values = nlohmann::json::array(), vec = nlohmann::json::array();
    for (const auto& v : r.values) values.push_back({{"re", v.re.str()}, {"im", v.im.str()}});
    for (const auto& v : r.vec) vec.push_back({{"re", v.re.str()}, {"im", v.im.str()}});
    roots.push_back({{"values", values}, {"vector", vec}});
  }
  j["roots"] = roots;
  return j;
}

}  // namespace exla
