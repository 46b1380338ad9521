#ifndef SCRING_SERIALIZE_HPP
#define SCRING_SERIALIZE_HPP

#include <json.hpp>

#include "scring/constructions.hpp"

namespace scring {

using json = nlohmann::json;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

/// Canonical algebra serialization:
/// {"field": ..., "dim": n, "basis": [names], "mult": [[i,j,k,"scalar"],...]}
/// plus an optional "tags" object carrying the construction split.
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

json construction_to_json(const Construction& c);
Construction construction_from_json(const json& j);

json subspace_to_json(const Subspace& s);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const Field& f);

json additive_matrix_to_json(const AdditiveMatrix& m);
AdditiveMatrix additive_matrix_from_json(const json& j, const Field& f);

/// Comma-separated scalar literals, e.g. "t,0,1/2".
Vec parse_vector(const Field& f, const std::string& s, std::size_t expect_len);
/// Semicolon-separated vectors spanning a subspace.
Subspace parse_subspace(const Field& f, const std::string& s, std::size_t ambient);

Construction load_algebra_file(const std::string& path);
void save_algebra_file(const Construction& c, const std::string& path);

}  // namespace scring

#endif
