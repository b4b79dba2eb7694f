#include "gabi/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace gabi {

using nlohmann::json;

json field_to_json(const FieldTower& tw) {
  return json{{"p", tw.p()}, {"e", tw.e()}, {"n", tw.n()}, {"modulus", tw.modulus()}};
}

std::unique_ptr<FieldTower> field_from_json(const json& j, std::uint64_t size_cap) {
  auto tw = std::make_unique<FieldTower>(j.at("p").get<int>(), j.at("e").get<int>(),
                                         j.at("n").get<int>(), size_cap);
  if (j.contains("modulus") && j.at("modulus").get<std::vector<int>>() != tw->modulus())
    throw std::invalid_argument("field_from_json: modulus does not match canonical choice");
  return tw;
}

json linpoly_to_json(const LinPoly& f) {
  json arr = json::array();
  for (Elem c : f.c) arr.push_back(f.tw->repr(c));
  return arr;
}

LinPoly linpoly_from_json(const FieldTower& tw, const json& j) {
  LinPoly f(tw);
  for (const auto& item : j) {
    auto digits = item.get<std::vector<int>>();
    f.c.push_back(tw.from_repr(digits));
  }
  f.trim();
  return f;
}

json subspace_to_json(const Subspace& U) {
  json rows = json::array();
  int n = U.tower().n();
  for (int i = 0; i < U.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(U.row(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Subspace subspace_from_json(const FieldTower& tw, const json& j) {
  std::vector<std::uint32_t> rows;
  int m = int(j.size());
  for (const auto& row : j) {
    if (int(row.size()) != tw.n())
      throw std::invalid_argument("subspace_from_json: row width must be n");
    for (const auto& v : row) rows.push_back(v.get<std::uint32_t>());
  }
  return Subspace::from_rows(tw, m, rows);
}

json matrix_code_to_json(const MatrixCode& C) {
  json words = json::array();
  for (const auto& w : C.words) words.push_back(w);
  return json{{"q", C.q}, {"m", C.m}, {"n", C.n}, {"linear", C.linear}, {"words", words}};
}

json nucleus_to_json(const Nucleus& N) {
  json elems = json::array();
  for (const auto& f : N.elements) elems.push_back(linpoly_to_json(f));
  return json{{"kind", N.kind == Nucleus::Kind::middle ? "middle" : "right"},
              {"order", N.elements.size()},
              {"t", N.t},
              {"r", N.r},
              {"elements", elems}};
}

namespace {
json kmatrix_to_json(const KMatrix& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols; ++j) row.push_back(M.a[size_t(i) * M.cols + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}
}  // namespace

json witness_to_json(const EquivalenceWitness& w) {
  json j{{"A", kmatrix_to_json(w.A)},
         {"B", kmatrix_to_json(w.B)},
         {"rho", w.rho},
         {"transpose", w.transpose}};
  if (w.poly_form)
    j["poly_form"] = json{{"phi2", linpoly_to_json(w.poly_form->phi2)},
                          {"phi1", linpoly_to_json(w.poly_form->phi1)},
                          {"rho", w.poly_form->rho}};
  return j;
}

json census_to_json(const std::vector<CensusRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back(json{{"q", r.q},
                       {"n", r.n},
                       {"m", r.m},
                       {"k", r.k},
                       {"d", r.d},
                       {"subspaces", r.subspaces},
                       {"orbits", r.orbits},
                       {"bound_num", r.bound.num},
                       {"bound_den", r.bound.den},
                       {"bound_satisfied", r.bound_satisfied},
                       {"note", r.note}});
  }
  return arr;
}

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "q,n,m,k,d,subspaces,orbits,bound_num,bound_den,bound_satisfied\n";
  for (const auto& r : rows)
    os << r.q << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.d << ',' << r.subspaces
       << ',' << r.orbits << ',' << r.bound.num << ',' << r.bound.den << ','
       << r.bound_satisfied << '\n';
  return os.str();
}

Subspace parse_subspace_inline(const FieldTower& tw, const std::string& text) {
  std::vector<std::uint32_t> rows;
  int m = 0;
  std::istringstream stream(text);
  std::string rowtext;
  while (std::getline(stream, rowtext, ';')) {
    ++m;
    if (rowtext.find(',') != std::string::npos) {
      std::istringstream rs(rowtext);
      std::string cell;
      while (std::getline(rs, cell, ',')) rows.push_back(std::uint32_t(std::stoul(cell)));
    } else {
      for (char ch : rowtext) {
        if (ch == ' ') continue;
        if (ch < '0' || ch > '9')
          throw std::invalid_argument("parse_subspace_inline: bad character");
        rows.push_back(std::uint32_t(ch - '0'));
      }
    }
  }
  if (m == 0 || int(rows.size()) != m * tw.n())
    throw std::invalid_argument("parse_subspace_inline: expected m rows of n entries");
  return Subspace::from_rows(tw, m, rows);
}

}  // namespace gabi
