#pragma once

#include <json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "exla/quaternion.hpp"
#include "exla/roots.hpp"

namespace exla {

struct CheckResult {
  std::string id;
  std::string claim;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass;
    return n;
  }
  std::size_t failed() const { return checks.size() - passed(); }
  bool all_passed() const { return failed() == 0; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["total"] = checks.size();
    j["passed"] = passed();
    j["failed"] = failed();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json e;
      e["id"] = c.id;
      e["claim"] = c.claim;
      e["status"] = c.pass ? "pass" : "fail";
      if (!c.pass) e["witness"] = c.witness;
      arr.push_back(e);
    }
    j["checks"] = arr;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << passed() << "/" << checks.size() << " checks passed\n";
    for (const auto& c : checks) {
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << " - " << c.claim;
      if (!c.pass) os << "\n         witness: " << c.witness;
      os << "\n";
    }
    return os.str();
  }
};

namespace verify_detail {

// cached algebra bundles: building e8r costs seconds
inline const AlgebraBundle& bundle(const std::string& name) {
  static std::map<std::string, AlgebraBundle> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_algebra(name)).first;
  return it->second;
}

inline const RootSystem& root_system(const std::string& name) {
  static std::map<std::string, RootSystem> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    const AlgebraBundle& b = bundle(name);
    it = cache.emplace(name, decompose(b.data, b.cartan)).first;
  }
  return it->second;
}

inline std::vector<Matrix<GaussRat>> basis_ads(const LieAlgebraData& alg) {
  std::vector<Matrix<GaussRat>> ads;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    std::vector<GaussRat> e(alg.dim());
    e[i] = GaussRat(1);
    ads.push_back(alg.ad(e));
  }
  return ads;
}

struct Failure {
  std::string witness;
};

inline void expect(bool ok, const std::string& witness) {
  if (!ok) throw Failure{witness};
}

template <typename T>
std::string str_of(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---- root-system oracle: the root tables as linear functionals ----

struct RootFunctional {
  Rat t1, t2, t3, nu, r;
  Rat eval(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& n, const Rat& rr) const {
    return t1 * a1 + t2 * a2 + t3 * a3 + nu * n + r * rr;
  }
  std::vector<GaussRat> values(std::size_t rank) const {
    std::vector<GaussRat> v;
    v.push_back(GaussRat(eval(1, -1, 0, 0, 0)));
    if (rank >= 2) v.push_back(GaussRat(eval(0, 1, -1, 0, 0)));
    if (rank >= 3) v.push_back(GaussRat(eval(0, 0, 0, 1, 0)));
    if (rank >= 4) v.push_back(GaussRat(eval(0, 0, 0, 0, 1)));
    return v;
  }
  RootFunctional operator-() const { return {-t1, -t2, -t3, -nu, -r}; }
};

inline std::vector<RootFunctional> positive_root_table(const std::string& name) {
  std::vector<RootFunctional> f;
  if (name == "f4r") {
    f.push_back({Rat(1, 2), 0, 0, 0, 0});  // functional value (1/2)a on the h4 generator
    return f;
  }
  f = {{0, Rat(1, 2), Rat(-1, 2), 0, 0},
       {Rat(-1, 2), 0, Rat(1, 2), 0, 0},
       {Rat(1, 2), Rat(-1, 2), 0, 0, 0}};
  if (name == "e6r") return f;
  for (int i = 0; i < 3; ++i) {
    RootFunctional a{0, 0, 0, Rat(2, 3), 0};   // tau_i + (2/3)nu
    RootFunctional b{0, 0, 0, Rat(-2, 3), 0};  // (1/2)tau_i - (2/3)nu
    (i == 0 ? a.t1 : i == 1 ? a.t2 : a.t3) = Rat(1);
    (i == 0 ? b.t1 : i == 1 ? b.t2 : b.t3) = Rat(1, 2);
    f.push_back(a);
    f.push_back(b);
  }
  if (name == "e7r") return f;
  for (int i = 0; i < 3; ++i) {
    RootFunctional a{0, 0, 0, Rat(-1, 3), Rat(1)};  // tau_i - (1/3)nu + r
    RootFunctional b{0, 0, 0, Rat(-1, 3), Rat(1)};  // -(1/2)tau_i - (1/3)nu + r
    RootFunctional c{0, 0, 0, Rat(1, 3), Rat(1)};   // (1/2)tau_i + (1/3)nu + r
    RootFunctional d{0, 0, 0, Rat(1, 3), Rat(1)};   // -tau_i + (1/3)nu + r
    (i == 0 ? a.t1 : i == 1 ? a.t2 : a.t3) = Rat(1);
    (i == 0 ? b.t1 : i == 1 ? b.t2 : b.t3) = Rat(-1, 2);
    (i == 0 ? c.t1 : i == 1 ? c.t2 : c.t3) = Rat(1, 2);
    (i == 0 ? d.t1 : i == 1 ? d.t2 : d.t3) = Rat(-1);
    f.push_back(a);
    f.push_back(b);
    f.push_back(c);
    f.push_back(d);
  }
  f.push_back({0, 0, 0, Rat(1), Rat(1)});
  f.push_back({0, 0, 0, Rat(-1), Rat(1)});
  f.push_back({0, 0, 0, 0, Rat(2)});
  if (name == "e8r") return f;
  throw Error("no root table for " + name);
}

inline std::string values_key(const std::vector<GaussRat>& v) {
  std::string k;
  for (const auto& x : v) k += x.str() + ";";
  return k;
}

inline std::multiset<std::string> expected_root_values(const std::string& name,
                                                       std::size_t rank) {
  std::multiset<std::string> out;
  for (const RootFunctional& f : positive_root_table(name)) {
    out.insert(values_key(f.values(rank)));
    out.insert(values_key((-f).values(rank)));
  }
  return out;
}

// the paper's simple systems, in paper order
inline std::vector<RootFunctional> paper_simple_system(const std::string& name) {
  if (name == "f4r") return {{Rat(1, 2), 0, 0, 0, 0}};
  if (name == "e6r")
    return {{0, Rat(1, 2), Rat(-1, 2), 0, 0}, {Rat(-1, 2), 0, Rat(1, 2), 0, 0}};
  if (name == "e7r")
    return {{Rat(-1, 2), 0, Rat(1, 2), 0, 0},
            {0, 0, Rat(-1, 2), Rat(2, 3), 0},
            {0, Rat(-1), 0, Rat(-2, 3), 0}};
  if (name == "e8r")
    return {{Rat(-1), 0, 0, Rat(1, 3), Rat(1)},
            {0, 0, 0, 0, Rat(-2)},
            {0, Rat(-1, 2), 0, Rat(-1, 3), Rat(1)},
            {0, 0, Rat(-1, 2), Rat(2, 3), 0}};
  throw Error("no simple system table for " + name);
}

// expected pairwise inner products of the paper's simple roots (upper triangle)
inline std::vector<Rat> paper_simple_inners(const std::string& name) {
  if (name == "e6r") return {Rat(1, 3), Rat(-1, 6), Rat(1, 3)};
  if (name == "e7r")
    return {Rat(1, 8), Rat(-1, 16), Rat(0), Rat(1, 8), Rat(-1, 8), Rat(1, 4)};
  if (name == "e8r")
    return {Rat(1, 9),  Rat(-1, 18), Rat(0),      Rat(0),      Rat(1, 9),
            Rat(-1, 18), Rat(0),     Rat(1, 18), Rat(-1, 36), Rat(1, 18)};
  throw Error("no inner product table for " + name);
}

inline bool is_base_of(const RootSystem& rs, const std::vector<std::vector<GaussRat>>& pi) {
  Matrix<GaussRat> m(rs.rank, pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j)
    for (std::size_t i = 0; i < rs.rank; ++i) m(i, j) = pi[j][i];
  for (const Root& root : rs.roots) {
    std::vector<GaussRat> x;
    try {
      x = solve_linear(m, root.values);
    } catch (const Inconsistent&) {
      return false;
    }
    int sign = 0;
    for (const auto& c : x) {
      if (!c.is_real() || !c.re.is_integer()) return false;
      if (c.re > Rat(0)) {
        if (sign < 0) return false;
        sign = 1;
      } else if (c.re < Rat(0)) {
        if (sign > 0) return false;
        sign = -1;
      }
    }
    if (sign == 0) return false;
  }
  return true;
}

inline JordanElem random_jordan(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  JordanElem e;
  for (int i = 0; i < 3; ++i) {
    e.xi[i] = GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
    e.x[i] = GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  }
  return e;
}

inline Mat3 random_skew3(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return a_matrix(1, GaussRat(Rat(num(rng), den(rng)))) +
         a_matrix(2, GaussRat(Rat(num(rng), den(rng)))) +
         a_matrix(3, GaussRat(Rat(num(rng), den(rng))));
}

inline Mat3 cayley_orthogonal(std::mt19937& rng) {
  Mat3 s = random_skew3(rng);
  Mat3 e = Mat3::identity(3);
  Mat3 es = e + s;
  Mat3 inv(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<GaussRat> col(3);
    col[j] = GaussRat(1);
    auto x = solve_linear(es, col);
    for (std::size_t i = 0; i < 3; ++i) inv(i, j) = x[i];
  }
  return (e - s) * inv;
}

// ---------------------------------------------------------------------------
// reusable check bodies (shared between the CLI suites and the acceptance run)
// ---------------------------------------------------------------------------

inline void check_dims() {
  {
    Matrix<GaussRat> m(3, 36);
    for (int k = 0; k < 3; ++k) {
      JordanOperator op = F4Elem::basis(k + 1).to_operator();
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(k, 6 * i + j) = op.m(i, j);
    }
    expect(rank(m) == 3, "f4 basis operators rank != 3");
  }
  {
    Matrix<GaussRat> m(8, 36);
    for (int k = 0; k < 8; ++k) {
      JordanOperator op = E6Elem::basis(k).to_operator();
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(k, 6 * i + j) = op.m(i, j);
    }
    expect(rank(m) == 8, "e6 basis operators rank != 8");
  }
  {
    Matrix<GaussRat> m(21, 196);
    for (int k = 0; k < 21; ++k) {
      const Matrix<GaussRat>& op = e7_basis_matrices()[k];
      for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j) m(k, 14 * i + j) = op(i, j);
    }
    expect(rank(m) == 21, "e7 basis operators rank != 21");
  }
  {
    Matrix<GaussRat> m(52, 52);
    for (int k = 0; k < 52; ++k) {
      auto c = E8Elem::basis(k).coords();
      for (int j = 0; j < 52; ++j) m(k, j) = c[j];
    }
    expect(rank(m) == 52, "e8 coordinate basis rank != 52");
  }
}

inline void check_killing_f4() {
  F4Elem a1 = F4Elem::basis(1);
  expect(f4_killing(a1, a1) == GaussRat(Rat(-1, 2)), "B4(A~1,A~1) != -1/2");
  expect((a1.to_operator().m * a1.to_operator().m).trace() == GaussRat(Rat(-5, 2)),
         "tr(A~1 A~1) != -5/2");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      f4_killing(F4Elem::basis(i), F4Elem::basis(j));  // throws on route mismatch
}

inline void check_killing_e6() {
  E6Elem e12 = e6_from_parts(F4Elem{}, JordanElem::E(1) - JordanElem::E(2));
  expect(e6_killing(e12, e12) == GaussRat(3), "B6(E~1-E~2, same) != 3");
  expect((e12.to_operator().m * e12.to_operator().m).trace() == GaussRat(Rat(5, 2)),
         "tr != 5/2");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) e6_killing(E6Elem::basis(i), E6Elem::basis(j));
}

inline void check_killing_e7() {
  E7Elem phi0 = E7Elem::from_nu(GaussRat(1));
  expect(e7_inner(phi0, phi0) == GaussRat(Rat(-8, 3)), "(Phi0,Phi0)7 != -8/3");
  expect((e7_to_matrix(phi0) * e7_to_matrix(phi0)).trace() == GaussRat(Rat(10, 3)),
         "tr(Phi0 Phi0) != 10/3");
  // full 21x21 three-way sweep on the structure-constant realization
  const LieAlgebraData& alg = bundle("e7r").data;
  std::vector<Matrix<GaussRat>> ads = basis_ads(alg);
  expect(e7_killing(phi0, phi0) == GaussRat(Rat(16, 3)), "B7(Phi0,Phi0) != 16/3");
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j) {
      GaussRat ad_trace = (ads[i] * ads[j]).trace();
      E7Elem bi = E7Elem::basis(i), bj = E7Elem::basis(j);
      GaussRat via_inner = GaussRat(-2) * e7_inner(bi, bj);
      GaussRat via_op =
          GaussRat(Rat(8, 5)) * (e7_basis_matrices()[i] * e7_basis_matrices()[j]).trace();
      expect(ad_trace == via_inner && ad_trace == via_op,
             "B7 routes disagree at pair " + std::to_string(i) + "," + std::to_string(j));
    }
}

inline void check_killing_e8(bool full_sweep) {
  E8Elem one = E8Elem::one_tilde();
  expect(inner8(one, one) == GaussRat(-8), "(1~,1~)8 != -8");
  expect(killing8(one, one) == GaussRat(36), "B8(1~,1~) != 36");
  const LieAlgebraData& alg = bundle("e8r").data;
  std::vector<Matrix<GaussRat>> ads = basis_ads(alg);
  auto check_pair = [&](int i, int j) {
    GaussRat ad_trace = (ads[i] * ads[j]).trace();
    GaussRat closed = killing8(E8Elem::basis(i), E8Elem::basis(j));
    expect(ad_trace == closed,
           "B8 ad-trace differs from -(9/2)(,)8 at pair " + std::to_string(i) + "," +
               std::to_string(j));
  };
  if (full_sweep) {
    for (int i = 0; i < 52; ++i)
      for (int j = 0; j < 52; ++j) check_pair(i, j);
  } else {
    for (int i = 0; i < 52; ++i) check_pair(i, i);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> idx(0, 51);
    for (int it = 0; it < 300; ++it) check_pair(idx(rng), idx(rng));
  }
}

inline void check_roots_engine(const std::string& name, std::size_t expected_count) {
  const RootSystem& rs = root_system(name);
  expect(rs.roots.size() == expected_count,
         name + " root count " + std::to_string(rs.roots.size()));
  std::multiset<std::string> got;
  for (const Root& r : rs.roots) got.insert(values_key(r.values));
  expect(got == expected_root_values(name, rs.rank), name + " root values differ from table");
  expect(rs.dim == rs.rank + rs.roots.size(), name + " dim != rank + #roots");
}

inline void check_dynkin(const std::string& name, const std::string& expected_type) {
  const RootSystem& rs = root_system(name);
  PositiveSplit split = positive_split(rs);
  std::vector<Root> simple = simple_roots(split.positive);
  expect(simple.size() == rs.rank, name + " simple root count != rank");
  DynkinDiagram d = classify_dynkin(cartan_matrix(rs, simple));
  expect(d.type == expected_type, name + " classified as " + d.type);

  if (name != "f4r") {
    auto pi = paper_simple_system(name);
    auto inners = paper_simple_inners(name);
    std::size_t at = 0;
    for (std::size_t i = 0; i < pi.size(); ++i)
      for (std::size_t j = i; j < pi.size(); ++j) {
        GaussRat v = root_inner(rs, pi[i].values(rs.rank), pi[j].values(rs.rank));
        expect(v == GaussRat(inners[at]),
               name + " paper inner product (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + ") = " + v.str());
        ++at;
      }
    std::vector<std::vector<GaussRat>> pv;
    for (const auto& f : pi) pv.push_back(f.values(rs.rank));
    expect(is_base_of(rs, pv), name + " paper simple system is not a base");
  }
}

inline void check_coroots() {
  const RootSystem& rs6 = root_system("e6r");
  RootFunctional a1{0, Rat(1, 2), Rat(-1, 2), 0, 0};
  auto t = coroot(rs6, a1.values(2));
  expect(t == std::vector<GaussRat>{GaussRat(0), GaussRat(Rat(1, 3))},
         "e6 coroot of alpha1 is not (1/3)(E2-E3)~");
  const RootSystem& rs8 = root_system("e8r");
  RootFunctional a2{0, 0, 0, 0, Rat(-2)};
  expect(coroot(rs8, a2.values(4)) ==
             std::vector<GaussRat>{GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(Rat(-1, 18))},
         "e8 coroot of alpha2 is not r = -2/36");
}

inline void check_hom_f4cstar() {
  std::array<Mat3, 3> sk{a_matrix(1, 1), a_matrix(2, 1), a_matrix(3, 1)};
  Matrix<GaussRat> images(3, 3);
  for (int i = 0; i < 3; ++i) {
    F4Elem fi = f4cstar(sk[i]);
    for (int k = 0; k < 3; ++k) images(i, k) = fi.c[k];
    for (int j = 0; j < 3; ++j) {
      Mat3 br = sk[i] * sk[j] - sk[j] * sk[i];
      expect(f4cstar(br) == f4_bracket(f4cstar(sk[i]), f4cstar(sk[j])),
             "f4cstar bracket mismatch");
    }
  }
  expect(rank(images) == 3, "f4cstar not injective");
}

inline void check_hom_f6cstar() {
  std::vector<Mat3> sl3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Mat3 m(3, 3);
      m(i, j) = GaussRat(1);
      sl3.push_back(m);
    }
  for (int k = 0; k < 2; ++k) {
    Mat3 m(3, 3);
    m(k, k) = GaussRat(1);
    m(k + 1, k + 1) = GaussRat(-1);
    sl3.push_back(m);
  }
  Matrix<GaussRat> images(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    auto c = f6cstar(sl3[i]).coords();
    for (int k = 0; k < 8; ++k) images(i, k) = c[k];
    for (std::size_t j = 0; j < 8; ++j) {
      Mat3 br = sl3[i] * sl3[j] - sl3[j] * sl3[i];
      expect(f6cstar(br) == e6_bracket(f6cstar(sl3[i]), f6cstar(sl3[j])),
             "f6cstar bracket mismatch");
    }
  }
  expect(rank(images) == 8, "f6cstar not injective");
}

inline void check_hom_f7cstar() {
  const auto& basis = sp3_real_basis();
  std::vector<E7Elem> images;
  for (const auto& d : basis) images.push_back(f7cstar(d));
  Matrix<GaussRat> m(21, 21);
  for (int k = 0; k < 21; ++k) {
    auto c = images[k].coords();
    for (int i = 0; i < 21; ++i) m(k, i) = c[i];
  }
  expect(rank(m) == 21, "f7cstar not injective");
  for (std::size_t i = 0; i < 21; ++i)
    for (std::size_t j = 0; j < 21; ++j) {
      QuatMat br = basis[i] * basis[j] - basis[j] * basis[i];
      expect(f7cstar(br) == e7_bracket(images[i], images[j]), "f7cstar bracket mismatch");
    }
}

inline void check_f4c_multiplicative(int pairs) {
  std::mt19937 rng(42);
  std::mt19937 rng2(43);
  for (int it = 0; it < pairs; ++it) {
    Mat3 a = cayley_orthogonal(rng), b = cayley_orthogonal(rng2);
    expect(f4c_group_map(a * b) == f4c_group_map(a) * f4c_group_map(b),
           "f4c not multiplicative on cayley pair " + std::to_string(it));
  }
}

inline void check_derivation_law() {
  for (int i = 1; i <= 3; ++i) {
    JordanOperator a = a_tilde(i, 1);
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) {
        std::array<GaussRat, 6> cp{}, cq{};
        cp[p] = GaussRat(1);
        cq[q] = GaussRat(1);
        JordanElem x = JordanElem::from_coords(cp), y = JordanElem::from_coords(cq);
        expect(a.apply(jordan_mul(x, y)) ==
                   jordan_mul(a.apply(x), y) + jordan_mul(x, a.apply(y)),
               "derivation law fails for A~" + std::to_string(i));
      }
  }
}

inline void check_adjugate_identity(int samples) {
  std::mt19937 rng(11);
  for (int it = 0; it < samples; ++it) {
    JordanElem x = random_jordan(rng);
    expect(jordan_mul(x, cross(x, x)) == det(x) * JordanElem::unit(),
           "X o (X x X) != det(X) E at sample " + std::to_string(it));
  }
}

inline void check_e8_jacobi(bool deep) {
  const LieAlgebraData& alg = bundle("e8r").data;
  if (deep) {
    for (std::size_t i = 0; i < 52; ++i)
      for (std::size_t j = 0; j < 52; ++j)
        for (std::size_t k = 0; k < 52; ++k)
          expect(alg.jacobi_triple(i, j, k), "jacobi fails at " + std::to_string(i) + "," +
                                                 std::to_string(j) + "," + std::to_string(k));
  } else {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<std::size_t> idx(0, 51);
    for (int it = 0; it < 2000; ++it) {
      std::size_t i = idx(rng), j = idx(rng), k = idx(rng);
      expect(alg.jacobi_triple(i, j, k), "jacobi fails at " + std::to_string(i) + "," +
                                             std::to_string(j) + "," + std::to_string(k));
    }
  }
}

inline void check_e8_ad_invariance() {
  std::array<E8Elem, 4> cartan{
      h8_element(GaussRat(1), GaussRat(-1), GaussRat(0), GaussRat(0)),
      h8_element(GaussRat(0), GaussRat(1), GaussRat(0), GaussRat(0)),
      h8_element(GaussRat(0), GaussRat(0), GaussRat(1), GaussRat(0)),
      h8_element(GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1))};
  for (const E8Elem& h : cartan)
    for (int i = 0; i < 52; ++i) {
      E8Elem bi = E8Elem::basis(i);
      E8Elem hbi = e8_bracket(h, bi);
      for (int j = 0; j < 52; ++j) {
        E8Elem bj = E8Elem::basis(j);
        expect(inner8(hbi, bj) + inner8(bi, e8_bracket(h, bj)) == GaussRat(0),
               "(,)8 not ad-invariant at " + std::to_string(i) + "," + std::to_string(j));
      }
    }
}

inline void check_orbit_formula(int samples) {
  std::mt19937 rng(23);
  for (int it = 0; it < samples; ++it) {
    JordanElem b = random_jordan(rng);
    Matrix<GaussRat> g = exp_nilpotent(E7Elem::from_b(b));
    std::vector<GaussRat> d1(14);
    d1[12] = GaussRat(1);
    auto img = g.apply(d1);
    std::array<GaussRat, 14> arr;
    for (int i = 0; i < 14; ++i) arr[i] = img[i];
    FreudElem r = FreudElem::from_coords(arr);
    JordanElem bxb = cross(b, b);
    expect(r.x == bxb && r.y == b && r.xi == GaussRat(1) &&
               r.eta == GaussRat(Rat(1, 3)) * inner(bxb, b),
           "orbit image mismatch at sample " + std::to_string(it));
    std::vector<GaussRat> u1(14);
    u1[13] = GaussRat(1);
    expect(g.apply(u1) == u1, "exp does not fix underdot-1");
  }
}

inline void check_w_membership() {
  expect(lemma67_check(E8Elem::one_lower()).all(), "1_- fails a membership condition");
  for (int k = 0; k < 52; ++k)
    expect(r_cross_r(E8Elem::one_lower(), E8Elem::basis(k)).is_zero(),
           "(1_- x 1_-) probe " + std::to_string(k) + " nonzero");
  WMembership w = lemma67_check(E8Elem::one_tilde());
  expect(!w.cond[5], "condition (6) unexpectedly holds for 1~");
}

inline void check_real_forms() {
  auto sigma6 = [](const std::vector<GaussRat>& v) {
    std::array<GaussRat, 8> c;
    for (int i = 0; i < 8; ++i) c[i] = v[i];
    auto w = tau_e6(lambda_e6(E6Elem::from_coords(c))).coords();
    return std::vector<GaussRat>(w.begin(), w.end());
  };
  expect(fixed_subspace_dim_q(8, sigma6) == 8, "e6 tau-lambda fixed dim != 8");

  std::vector<std::vector<GaussRat>> su3_images;
  for (const QuatMat& b : su3cc_basis()) {
    E6Elem e = f6cstar(g_map(b));
    expect(tau_fixed_check(e).second, "su(3) image not tau-lambda fixed");
    auto c = e.coords();
    su3_images.emplace_back(c.begin(), c.end());
  }
  expect(rank_over_q(su3_images) == 8, "su(3) images not independent over Q");

  F7RealFormReport rep = f7rstar_check();
  expect(rep.images_tau_lambda_fixed, "an sp(3) image is not tau-lambda fixed");
  expect(rep.image_rank_over_q == 21, "sp(3) images rank over Q != 21");
  expect(rep.fixed_subspace_dim == 21, "e7 tau-lambda fixed dim != 21");
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

struct SuiteCheck {
  std::string id;
  std::string claim;
  std::function<void()> run;
};

inline std::vector<SuiteCheck> suite_checks(const std::string& suite, bool deep) {
  namespace vd = verify_detail;
  std::vector<SuiteCheck> out;
  auto add = [&](std::string id, std::string claim, std::function<void()> fn) {
    out.push_back({std::move(id), std::move(claim), std::move(fn)});
  };

  if (suite == "f4" || suite == "all") {
    add("jordan_gram", "inner product gram matrix is diag(1,1,1,2,2,2)", [] {
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
          std::array<GaussRat, 6> ci{}, cj{};
          ci[i] = GaussRat(1);
          cj[j] = GaussRat(1);
          vd::expect(inner(JordanElem::from_coords(ci), JordanElem::from_coords(cj)) ==
                         jordan_gram()(i, j),
                     "gram mismatch");
        }
    });
    add("jordan_adjugate", "X o (X x X) = det(X) E on 100 random elements",
        [] { vd::check_adjugate_identity(100); });
    add("f4_derivation_law", "A~i(1) is a derivation of the jordan product on basis pairs",
        [] { vd::check_derivation_law(); });
    add("f4_bracket_rule", "[A~1(1), A~2(1)] = -(1/2) A~3(1) and operator commutators agree",
        [] {
          vd::expect(f4_bracket(F4Elem::basis(1), F4Elem::basis(2)) ==
                         GaussRat(Rat(-1, 2)) * F4Elem::basis(3),
                     "cycle rule broken");
          for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
              F4Elem a = F4Elem::basis(i), b = F4Elem::basis(j);
              vd::expect(f4_bracket(a, b).to_operator() ==
                             commutator(a.to_operator(), b.to_operator()),
                         "operator commutator disagrees");
            }
        });
    add("killing_f4_constants",
        "B4 = (1/4)(,)4 = (1/5)tr with B4(A~1(1),A~1(1)) = -1/2 and tr = -5/2",
        [] { vd::check_killing_f4(); });
    add("f4_dim_3", "3 independent derivations", [] {
      Matrix<GaussRat> m(3, 36);
      for (int k = 0; k < 3; ++k) {
        JordanOperator op = F4Elem::basis(k + 1).to_operator();
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) m(k, 6 * i + j) = op.m(i, j);
      }
      vd::expect(rank(m) == 3, "rank != 3");
    });
  }

  if (suite == "e6" || suite == "all") {
    add("e6_decompose_roundtrip", "phi = delta + T~ decomposition inverts assembly", [] {
      for (int k = 0; k < 8; ++k)
        vd::expect(e6_decompose(E6Elem::basis(k).to_operator()) == E6Elem::basis(k),
                   "round trip fails at basis " + std::to_string(k));
    });
    add("killing_e6_constants",
        "B6 = (3/2)(,)6 = (6/5)tr with B6(E~1-E~2, same) = 3 and tr = 5/2",
        [] { vd::check_killing_e6(); });
    add("e6_jacobi", "jacobi identity on all 8^3 basis triples", [] {
      const LieAlgebraData& alg = vd::bundle("e6r").data;
      alg.validate();
    });
    add("e6_lambda_involution", "lambda is an involutive automorphism with T~ -> -T~", [] {
      for (int k = 0; k < 8; ++k) {
        E6Elem e = E6Elem::basis(k);
        vd::expect(lambda_e6(lambda_e6(e)) == e, "lambda^2 != id");
      }
      JordanElem t = JordanElem::E(1) - JordanElem::E(2);
      E6Elem tt = e6_from_parts(F4Elem{}, t);
      vd::expect(lambda_e6(tt) == -tt, "lambda(T~) != -T~");
    });
    add("e6_real_form_dim_8", "tau-lambda fixed subspace has real dimension 8", [] {
      auto sigma = [](const std::vector<GaussRat>& v) {
        std::array<GaussRat, 8> c;
        for (int i = 0; i < 8; ++i) c[i] = v[i];
        auto w = tau_e6(lambda_e6(E6Elem::from_coords(c))).coords();
        return std::vector<GaussRat>(w.begin(), w.end());
      };
      vd::expect(fixed_subspace_dim_q(8, sigma) == 8, "dim != 8");
    });
    add("e6_dim_8", "8 independent operators", [] {
      Matrix<GaussRat> m(8, 36);
      for (int k = 0; k < 8; ++k) {
        JordanOperator op = E6Elem::basis(k).to_operator();
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) m(k, 6 * i + j) = op.m(i, j);
      }
      vd::expect(rank(m) == 8, "rank != 8");
    });
  }

  if (suite == "e7" || suite == "all") {
    add("killing_e7_constants",
        "B7 = -2(,)7 = (8/5)tr with (Phi0,Phi0)7 = -8/3, B7 = 16/3, tr = 10/3",
        [] { vd::check_killing_e7(); });
    add("e7_jacobi", "jacobi identity on all 21^3 basis triples", [] {
      const LieAlgebraData& alg = vd::bundle("e7r").data;
      alg.validate();
    });
    add("e7_orbit_formula", "exp(Phi(0,0,B,0)) maps dot-1 to (BxB, B, 1, (1/3)(BxB,B))",
        [] { vd::check_orbit_formula(20); });
    add("e7_stabilizer_dim_14", "annihilator of underdot-1 is {Phi(phi,0,B,0)}", [] {
      Matrix<GaussRat> m(14, 21);
      for (int k = 0; k < 21; ++k) {
        auto img = phi_action(E7Elem::basis(k), FreudElem::underdot1()).coords();
        for (int i = 0; i < 14; ++i) m(i, k) = img[i];
      }
      vd::expect(kernel(m).size() == 14, "stabilizer dim != 14");
    });
    add("e7_derivation_law", deep ? "[Phi, PxQ] = PhiP x Q + P x PhiQ on all basis triples"
                                  : "[Phi, PxQ] = PhiP x Q + P x PhiQ on sampled triples",
        [deep] {
          std::mt19937 rng(5);
          std::uniform_int_distribution<int> kf(0, 20), kp(0, 13);
          int n = deep ? -1 : 400;
          auto one = [&](int k, int i, int j) {
            E7Elem f = E7Elem::basis(k);
            FreudElem p = FreudElem::basis(i), q = FreudElem::basis(j);
            vd::expect(e7_bracket(f, p_cross_q(p, q)) ==
                           p_cross_q(phi_action(f, p), q) + p_cross_q(p, phi_action(f, q)),
                       "derivation law fails");
          };
          if (deep) {
            for (int k = 0; k < 21; ++k)
              for (int i = 0; i < 14; ++i)
                for (int j = 0; j < 14; ++j) one(k, i, j);
          } else {
            for (int it = 0; it < n; ++it) one(kf(rng), kp(rng), kp(rng));
          }
        });
    add("e7_real_form_dim_21", "tau-lambda fixed subspace has real dimension 21", [] {
      F7RealFormReport rep = f7rstar_check();
      vd::expect(rep.ok(), "real form certification failed");
    });
    add("e7_in_m_atoms", "dot-1 lies in M, E-unit slot does not", [] {
      vd::expect(in_m(FreudElem::dot1()), "dot-1 not in M");
      vd::expect(!in_m(FreudElem::from_x(JordanElem::unit())), "(E,0,0,0) in M");
    });
  }

  if (suite == "e8" || suite == "all") {
    add("killing_e8_constants",
        deep ? "B8 = -(9/2)(,)8 vs ad-trace on all 52x52 pairs; (1~,1~)8 = -8, B8 = 36"
             : "B8 = -(9/2)(,)8 vs ad-trace on sampled pairs; (1~,1~)8 = -8, B8 = 36",
        [deep] { vd::check_killing_e8(deep); });
    add("e8_jacobi", deep ? "jacobi identity on all 140608 ordered basis triples"
                          : "jacobi identity on 2000 sampled basis triples",
        [deep] { vd::check_e8_jacobi(deep); });
    add("e8_ad_invariance", "(,)8 is ad-invariant for the cartan generators against the basis",
        [] { vd::check_e8_ad_invariance(); });
    add("e8_w_membership", "1_- passes all 13 conditions and annihilates all probes; 1~ fails (6)",
        [] { vd::check_w_membership(); });
    add("e8_centralizer_dim_36", "centralizer of 1_- is {(Phi,0,Q,0,0,t)}", [] {
      const LieAlgebraData& alg = vd::bundle("e8r").data;
      Matrix<GaussRat> m(52, 52);
      for (int j = 0; j < 52; ++j) {
        for (const auto& [k, v] : alg.row(j, 51)) m(k, j) = v;
      }
      vd::expect(kernel(m).size() == 36, "centralizer dim != 36");
    });
    add("e8_h8_abelian", "the four h8 generators commute", [] {
      std::array<E8Elem, 4> gen{
          h8_element(GaussRat(1), GaussRat(-1), GaussRat(0), GaussRat(0)),
          h8_element(GaussRat(0), GaussRat(1), GaussRat(0), GaussRat(0)),
          h8_element(GaussRat(0), GaussRat(0), GaussRat(1), GaussRat(0)),
          h8_element(GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1))};
      for (const auto& a : gen)
        for (const auto& b : gen)
          vd::expect(e8_bracket(a, b).is_zero(), "h8 generators do not commute");
    });
  }

  if (suite == "roots" || suite == "all") {
    add("f4r_roots", "2 roots with functional values +-(1/2)a",
        [] { vd::check_roots_engine("f4r", 2); });
    add("e6r_roots", "6 roots matching +-(1/2)(tau_i - tau_j)",
        [] { vd::check_roots_engine("e6r", 6); });
    add("e7r_roots", "18 roots matching the displayed value table",
        [] { vd::check_roots_engine("e7r", 18); });
    add("e8r_roots", "48 roots matching the displayed value table",
        [] { vd::check_roots_engine("e8r", 48); });
    add("f4r_dynkin_is_A1", "one-node diagram", [] { vd::check_dynkin("f4r", "A1"); });
    add("e6r_dynkin_is_A2", "simple inner products (1/3, -1/6, 1/3)",
        [] { vd::check_dynkin("e6r", "A2"); });
    add("e7r_dynkin_is_C3", "simple inner products (1/8, -1/16, 0, 1/8, -1/8, 1/4)",
        [] { vd::check_dynkin("e7r", "C3"); });
    add("e8r_dynkin_is_F4", "simple inner products down to (alpha4,alpha4) = 1/18",
        [] { vd::check_dynkin("e8r", "F4"); });
    add("coroot_values", "canonical elements (1/3)(E2-E3)~ and r = -2/36 reproduced",
        [] { vd::check_coroots(); });
  }

  if (suite == "maps" || suite == "all") {
    add("f4cstar_hom", "bracket preserving on 3x3 skew basis pairs, injective",
        [] { vd::check_hom_f4cstar(); });
    add("f6cstar_hom", "bracket preserving on 8x8 sl(3) basis pairs, injective",
        [] { vd::check_hom_f6cstar(); });
    add("f7cstar_hom", "bracket preserving on 21x21 sp(3) basis pairs, injective",
        [] { vd::check_hom_f7cstar(); });
    add("f4c_multiplicative", "f(AB) = f(A)f(B) on 20 cayley-generated orthogonal pairs",
        [] { vd::check_f4c_multiplicative(20); });
    add("g_map_hom", "g is bracket preserving on su(3,C^C) basis pairs", [] {
      const auto& basis = su3cc_basis();
      for (const auto& x : basis)
        for (const auto& y : basis) {
          Mat3 lhs = g_map(x * y - y * x);
          Mat3 rhs = g_map(x) * g_map(y) - g_map(y) * g_map(x);
          vd::expect(lhs == rhs, "g bracket mismatch");
        }
    });
    add("dims_3_8_21_52", "independent basis counts across the tower",
        [] { vd::check_dims(); });
  }

  return out;
}

inline bool is_suite_name(const std::string& s) {
  return s == "all" || s == "f4" || s == "e6" || s == "e7" || s == "e8" || s == "roots" ||
         s == "maps";
}

inline VerificationReport run_suite(const std::string& suite, bool deep = false) {
  VerificationReport rep;
  rep.suite = suite;
  for (const SuiteCheck& c : suite_checks(suite, deep)) {
    CheckResult r;
    r.id = c.id;
    r.claim = c.claim;
    try {
      c.run();
      r.pass = true;
    } catch (const verify_detail::Failure& f) {
      r.pass = false;
      r.witness = f.witness;
    } catch (const std::exception& e) {
      r.pass = false;
      r.witness = e.what();
    }
    rep.checks.push_back(std::move(r));
  }
  return rep;
}

}  // namespace exla
