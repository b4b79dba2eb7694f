// Stable machine-readable formats: JSON for field specs, polynomials,
// subspaces, codes, nuclei and witnesses; CSV (plus a JSON mirror) for
// census tables.

#ifndef GABI_IO_HPP
#define GABI_IO_HPP

#include <memory>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gabi/equivalence.hpp"
#include "gabi/gabidulin.hpp"

namespace gabi {

nlohmann::json field_to_json(const FieldTower& tw);
// Rebuilds the tower from {p,e,n,modulus}; the modulus must equal the
// canonical one (construction is deterministic).
std::unique_ptr<FieldTower> field_from_json(const nlohmann::json& j,
                                            std::uint64_t size_cap = kDefaultFieldCap);

nlohmann::json linpoly_to_json(const LinPoly& f);
LinPoly linpoly_from_json(const FieldTower& tw, const nlohmann::json& j);

nlohmann::json subspace_to_json(const Subspace& U);
Subspace subspace_from_json(const FieldTower& tw, const nlohmann::json& j);

nlohmann::json matrix_code_to_json(const MatrixCode& C);
nlohmann::json nucleus_to_json(const Nucleus& N);
nlohmann::json witness_to_json(const EquivalenceWitness& w);

nlohmann::json census_to_json(const std::vector<CensusRow>& rows);
std::string census_to_csv(const std::vector<CensusRow>& rows);

// Inline subspace syntax for the CLI: rows separated by ';', entries either
// comma-separated K indices or single digits ("1,0,0,0;0,1,0,0" or
// "1000;0100").
Subspace parse_subspace_inline(const FieldTower& tw, const std::string& text);

}  // namespace gabi

#endif  // GABI_IO_HPP
