#pragma once

#include <json.hpp>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "exla/e8.hpp"
#include "exla/errors.hpp"
#include "exla/matrix.hpp"

namespace exla {

// Named basis plus exact structure constants: the carrier every algebra is
// exported into and the input format of the root engine.
class LieAlgebraData {
 public:
  using SparseRow = std::vector<std::pair<int, GaussRat>>;

  LieAlgebraData() = default;
  LieAlgebraData(std::vector<std::string> names,
                 std::vector<std::vector<SparseRow>> constants)
      : names_(std::move(names)), c_(std::move(constants)) {}

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const SparseRow& row(int i, int j) const { return c_[i][j]; }

  std::vector<GaussRat> bracket(const std::vector<GaussRat>& a,
                                const std::vector<GaussRat>& b) const {
    std::vector<GaussRat> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j].is_zero()) continue;
        GaussRat f = a[i] * b[j];
        for (const auto& [k, v] : c_[i][j]) out[k] += f * v;
      }
    }
    return out;
  }

  Matrix<GaussRat> ad(const std::vector<GaussRat>& x) const {
    Matrix<GaussRat> m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, v] : c_[i][j]) m(k, j) += x[i] * v;
    }
    return m;
  }

  // Killing form by ad-trace.
  GaussRat killing(const std::vector<GaussRat>& x, const std::vector<GaussRat>& y) const {
    return (ad(x) * ad(y)).trace();
  }

  // Antisymmetry always checked in full; Jacobi in full up to dim 21 and on a
  // seeded subsample beyond (the exhaustive e8 sweep lives behind --deep).
  void validate(bool deep = false, std::size_t sample = 2000) const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        std::vector<GaussRat> sum(dim());
        for (const auto& [k, v] : c_[i][j]) sum[k] += v;
        for (const auto& [k, v] : c_[j][i]) sum[k] += v;
        for (const auto& v : sum)
          if (!v.is_zero()) throw Error("structure constants not antisymmetric");
      }
    if (deep || dim() <= 21) {
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
          for (std::size_t k = 0; k < dim(); ++k)
            if (!jacobi_triple(i, j, k)) throw Error("jacobi identity failed");
    } else {
      std::mt19937 rng(2026);
      std::uniform_int_distribution<std::size_t> idx(0, dim() - 1);
      for (std::size_t it = 0; it < sample; ++it)
        if (!jacobi_triple(idx(rng), idx(rng), idx(rng)))
          throw Error("jacobi identity failed");
    }
  }

  bool jacobi_triple(std::size_t i, std::size_t j, std::size_t k) const {
    std::vector<GaussRat> acc(dim());
    auto add_nested = [&](std::size_t a, const SparseRow& inner) {
      for (const auto& [m, v] : inner)
        for (const auto& [l, w] : c_[a][m]) acc[l] += v * w;
    };
    add_nested(i, c_[j][k]);
    add_nested(j, c_[k][i]);
    add_nested(k, c_[i][j]);
    for (const auto& v : acc)
      if (!v.is_zero()) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["basis"] = names_;
    nlohmann::json cs = nlohmann::json::array();
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t jj = 0; jj < dim(); ++jj)
        for (const auto& [k, v] : c_[i][jj])
          cs.push_back({i, jj, k, {{"re", v.re.str()}, {"im", v.im.str()}}});
    j["constants"] = cs;
    return j;
  }

  // Construction from external data validates (antisymmetry always, Jacobi
  // in full up to dim 21, sampled beyond).
  static LieAlgebraData from_json(const nlohmann::json& j) {
    std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
    std::size_t n = names.size();
    std::vector<std::vector<SparseRow>> c(n, std::vector<SparseRow>(n));
    for (const auto& entry : j.at("constants")) {
      int a = entry.at(0).get<int>(), b = entry.at(1).get<int>(), k = entry.at(2).get<int>();
      GaussRat v(Rat::parse(entry.at(3).at("re").get<std::string>()),
                 Rat::parse(entry.at(3).at("im").get<std::string>()));
      c[a][b].emplace_back(k, v);
    }
    LieAlgebraData out(std::move(names), std::move(c));
    out.validate();
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<SparseRow>> c_;
};

// A Cartan subalgebra handed to the root engine: basis vectors in algebra
// coordinates plus the coefficients of the generic element.
struct CartanDatum {
  std::vector<std::vector<GaussRat>> basis;
  std::vector<GaussRat> generic;
};

struct AlgebraBundle {
  std::string name;
  LieAlgebraData data;
  CartanDatum cartan;
};

namespace detail {

template <std::size_t N, typename Elem, typename Bracket>
LieAlgebraData build_from_bracket(std::vector<std::string> names, Bracket&& br) {
  std::vector<std::vector<LieAlgebraData::SparseRow>> c(N,
                                                        std::vector<LieAlgebraData::SparseRow>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      auto coords = br(i, j);
      for (std::size_t k = 0; k < N; ++k)
        if (!coords[k].is_zero()) c[i][j].emplace_back(int(k), coords[k]);
    }
  return LieAlgebraData(std::move(names), std::move(c));
}

inline std::vector<std::string> jordan_names(const std::string& prefix) {
  std::vector<std::string> n;
  for (const char* s : {"E1", "E2", "E3", "F1(1)", "F2(1)", "F3(1)"}) n.push_back(prefix + s);
  return n;
}

inline std::vector<std::string> freud_names(const std::string& prefix) {
  std::vector<std::string> n;
  for (const auto& s : jordan_names("X:")) n.push_back(prefix + s);
  for (const auto& s : jordan_names("Y:")) n.push_back(prefix + s);
  n.push_back(prefix + "xi");
  n.push_back(prefix + "eta");
  return n;
}

inline std::vector<std::string> e6_names() {
  return {"A~1(1)", "A~2(1)", "A~3(1)", "(E1-E2)~", "(E2-E3)~", "F~1(1)", "F~2(1)", "F~3(1)"};
}

inline std::vector<std::string> e7_names() {
  std::vector<std::string> n = e6_names();
  for (const auto& s : jordan_names("A:")) n.push_back(s);
  for (const auto& s : jordan_names("B:")) n.push_back(s);
  n.push_back("nu");
  return n;
}

inline std::vector<std::string> e8_names() {
  std::vector<std::string> n = e7_names();
  for (const auto& s : freud_names("P:")) n.push_back(s);
  for (const auto& s : freud_names("Q:")) n.push_back(s);
  n.push_back("1~");
  n.push_back("1^-");
  n.push_back("1_-");
  return n;
}

template <std::size_t N>
std::vector<GaussRat> vec_of(const std::array<GaussRat, N>& a) {
  return std::vector<GaussRat>(a.begin(), a.end());
}

}  // namespace detail

// (f4_R)^C on the basis A~1(1), A~2(1), A~3(1); h4 = span{ A~1(-i) }.
inline AlgebraBundle build_f4r(GaussRat a = GaussRat(2)) {
  AlgebraBundle b;
  b.name = "f4r";
  b.data = detail::build_from_bracket<3, F4Elem>(
      {"A~1(1)", "A~2(1)", "A~3(1)"}, [](std::size_t i, std::size_t j) {
        return f4_bracket(F4Elem::basis(int(i) + 1), F4Elem::basis(int(j) + 1)).c;
      });
  b.cartan.basis = {{-GaussRat::i(), GaussRat(0), GaussRat(0)}};
  b.cartan.generic = {std::move(a)};
  return b;
}

// (e6_R)^C, 8-dimensional; h6 = the diagonal T~ part, generic tau = (1,2,-3).
inline AlgebraBundle build_e6r(GaussRat tau1 = GaussRat(1), GaussRat tau2 = GaussRat(2)) {
  AlgebraBundle b;
  b.name = "e6r";
  b.data = detail::build_from_bracket<8, E6Elem>(
      detail::e6_names(), [](std::size_t i, std::size_t j) {
        return e6_bracket(E6Elem::basis(int(i)), E6Elem::basis(int(j))).coords();
      });
  // (E1-E2)~ and (E2-E3)~ are coordinates 3 and 4
  std::vector<GaussRat> h1(8), h2(8);
  h1[3] = GaussRat(1);
  h2[4] = GaussRat(1);
  b.cartan.basis = {h1, h2};
  // tau = (t1, t2, -t1-t2) = a(1,-1,0) + c(0,1,-1) with a = t1, c = t1 + t2
  b.cartan.generic = {tau1, tau1 + tau2};
  return b;
}

// (e7_R)^C, 21-dimensional; h7 adds nu, generic tau = (1,2,-3), nu = 5.
inline AlgebraBundle build_e7r(GaussRat tau1 = GaussRat(1), GaussRat tau2 = GaussRat(2),
                               GaussRat nu = GaussRat(5)) {
  AlgebraBundle b;
  b.name = "e7r";
  b.data = detail::build_from_bracket<21, E7Elem>(
      detail::e7_names(), [](std::size_t i, std::size_t j) {
        return e7_bracket(E7Elem::basis(int(i)), E7Elem::basis(int(j))).coords();
      });
  std::vector<GaussRat> h1(21), h2(21), h3(21);
  h1[3] = GaussRat(1);
  h2[4] = GaussRat(1);
  h3[20] = GaussRat(1);
  b.cartan.basis = {h1, h2, h3};
  b.cartan.generic = {tau1, tau1 + tau2, std::move(nu)};
  return b;
}

// (e8_R)^C, 52-dimensional; h8 adds r, generic tau = (1,5,-6), nu = 2, r = 17.
inline AlgebraBundle build_e8r(GaussRat tau1 = GaussRat(1), GaussRat tau2 = GaussRat(5),
                               GaussRat nu = GaussRat(2), GaussRat r = GaussRat(17)) {
  AlgebraBundle b;
  b.name = "e8r";
  b.data = detail::build_from_bracket<52, E8Elem>(
      detail::e8_names(), [](std::size_t i, std::size_t j) {
        return e8_bracket(E8Elem::basis(int(i)), E8Elem::basis(int(j))).coords();
      });
  std::vector<GaussRat> h1(52), h2(52), h3(52), h4(52);
  h1[3] = GaussRat(1);
  h2[4] = GaussRat(1);
  h3[20] = GaussRat(1);
  h4[49] = GaussRat(1);
  b.cartan.basis = {h1, h2, h3, h4};
  b.cartan.generic = {tau1, tau1 + tau2, std::move(nu), std::move(r)};
  return b;
}

inline AlgebraBundle build_algebra(const std::string& name) {
  if (name == "f4r") return build_f4r();
  if (name == "e6r") return build_e6r();
  if (name == "e7r") return build_e7r();
  if (name == "e8r") return build_e8r();
  throw Error("unknown algebra: " + name);
}

inline bool is_algebra_name(const std::string& name) {
  return name == "f4r" || name == "e6r" || name == "e7r" || name == "e8r";
}

}  // namespace exla
