#include "scring/serialize.hpp"

#include <fstream>

#include "scring/invariants.hpp"

namespace scring {

json field_to_json(const Field& f) {
  switch (f->kind()) {
    case FieldKind::rationals:
      return {{"kind", "rationals"}};
    case FieldKind::prime:
      return {{"kind", "prime_field"}, {"p", f->p()}};
    case FieldKind::galois:
      return {{"kind", "galois_field"}, {"p", f->p()}, {"k", f->degree()},
              {"modulus", f->modulus()}};
    case FieldKind::rational_functions:
      return {{"kind", "rational_functions"}, {"base", field_to_json(f->base())}};
  }
  throw error("bad field kind");
}

Field field_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime_field") return FieldSpec::prime(j.at("p").get<std::int64_t>());
  if (kind == "galois_field") {
    if (j.contains("modulus"))
      return FieldSpec::galois(j.at("p").get<std::int64_t>(), j.at("k").get<int>(),
                               j.at("modulus").get<std::vector<std::int64_t>>());
    return FieldSpec::galois(j.at("p").get<std::int64_t>(), j.at("k").get<int>());
  }
  if (kind == "rational_functions")
    return FieldSpec::rational_functions(field_from_json(j.at("base")));
  throw error("unknown field kind '" + kind + "'");
}

json algebra_to_json(const Algebra& a) {
  json mult = json::array();
  for (const auto& e : a.tensor())
    mult.push_back(json::array({e.i, e.j, e.k, e.c.str()}));
  return {{"field", field_to_json(a.field())},
          {"dim", a.dim()},
          {"basis", a.basis_names()},
          {"mult", mult}};
}

Algebra algebra_from_json(const json& j) {
  Field f = field_from_json(j.at("field"));
  auto names = j.at("basis").get<std::vector<std::string>>();
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != names.size())
    throw error("dim does not match the basis list");
  std::vector<TensorEntry> tensor;
  for (const auto& e : j.at("mult")) {
    if (!e.is_array() || e.size() != 4) throw error("mult entries are [i,j,k,\"scalar\"]");
    tensor.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                      e[2].get<std::size_t>(), f->parse(e[3].get<std::string>())});
  }
  return Algebra(f, std::move(names), std::move(tensor));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const Field& f) {
  std::vector<Vec> rows;
  for (const auto& row : j) {
    Vec v;
    for (const auto& cell : row) v.push_back(f->parse(cell.get<std::string>()));
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(f, rows);
}

json subspace_to_json(const Subspace& s) {
  return {{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", matrix_to_json(s.basis())}};
}

json additive_matrix_to_json(const AdditiveMatrix& m) {
  json j{{"lin", matrix_to_json(m.lin)}};
  if (m.der) j["der"] = matrix_to_json(*m.der);
  return j;
}

AdditiveMatrix additive_matrix_from_json(const json& j, const Field& f) {
  AdditiveMatrix m{matrix_from_json(j.at("lin"), f), std::nullopt};
  if (j.contains("der")) m.der = matrix_from_json(j.at("der"), f);
  return m;
}

namespace {

ConstructionKind kind_from_string(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(ConstructionKind::local_sum); ++k)
    if (kind_name(static_cast<ConstructionKind>(k)) == s)
      return static_cast<ConstructionKind>(k);
  throw error("unknown construction kind '" + s + "'");
}

json tag_to_json(const ConstructionTag& t) {
  json j{{"kind", kind_name(t.kind)}};
  if (t.is_triangular()) {
    j["r_dim"] = t.left_dim;
    j["m_dim"] = t.right_dim;
  }
  if (t.embedding) {
    json imgs = json::array();
    for (const auto& m : t.embedding->images) imgs.push_back(matrix_to_json(m));
    j["embedding"] = {{"n", t.embedding->n}, {"images", imgs}};
  }
  if (t.inner) j["inner"] = tag_to_json(*t.inner);
  return j;
}

ConstructionTag tag_from_json(const json& j, const Field& f) {
  ConstructionTag t;
  t.kind = kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("r_dim")) t.left_dim = j.at("r_dim").get<std::size_t>();
  if (j.contains("m_dim")) t.right_dim = j.at("m_dim").get<std::size_t>();
  if (j.contains("embedding")) {
    MatrixEmbedding e;
    e.n = j.at("embedding").at("n").get<std::size_t>();
    for (const auto& m : j.at("embedding").at("images"))
      e.images.push_back(matrix_from_json(m, f));
    t.embedding = std::move(e);
  }
  if (j.contains("inner"))
    t.inner = std::make_shared<ConstructionTag>(tag_from_json(j.at("inner"), f));
  return t;
}

}  // namespace

json construction_to_json(const Construction& c) {
  json j = algebra_to_json(c.algebra);
  if (c.tag.kind != ConstructionKind::plain) {
    json tags = tag_to_json(c.tag);
    // name the distinguished subspaces (informative; the loader rebuilds
    // them from the split)
    if (c.is_triangular()) {
      tags["split"] = subspace_to_json(c.r_part());
      tags[c.tag.kind == ConstructionKind::local_sum ? "maximal_ideal" : "module_ideal"] =
          subspace_to_json(c.m_ideal());
    }
    switch (c.tag.kind) {
      case ConstructionKind::heisenberg:
      case ConstructionKind::two_dim_lie:
      case ConstructionKind::matrix_lie:
      case ConstructionKind::semidirect_double:
      case ConstructionKind::semidirect_rho:
        tags["center"] = subspace_to_json(center_lie(c.algebra));
        break;
      default:
        break;
    }
    j["tags"] = std::move(tags);
  }
  return j;
}

Construction construction_from_json(const json& j) {
  Construction c;
  c.algebra = algebra_from_json(j);
  if (j.contains("tags")) c.tag = tag_from_json(j.at("tags"), c.algebra.field());
  return c;
}

Vec parse_vector(const Field& f, const std::string& s, std::size_t expect_len) {
  Vec out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(f->parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(f->parse(cur));
  if (out.size() != expect_len)
    throw error("expected " + std::to_string(expect_len) + " coordinates, got " +
                std::to_string(out.size()));
  return out;
}

Subspace parse_subspace(const Field& f, const std::string& s, std::size_t ambient) {
  std::vector<Vec> rows;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      rows.push_back(parse_vector(f, cur, ambient));
      cur.clear();
    }
  };
  for (char ch : s) {
    if (ch == ';')
      flush();
    else
      cur += ch;
  }
  flush();
  return Subspace::span(f, ambient, rows);
}

Construction load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw error("parse error in '" + path + "': " + e.what());
  }
  return construction_from_json(j);
}

void save_algebra_file(const Construction& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot open '" + path + "' for writing");
  out << construction_to_json(c).dump(2) << "\n";
}

}  // namespace scring
