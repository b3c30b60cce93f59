#pragma once

#include <string>

#include <json.hpp>

#include "fvec/combinat.hpp"
#include "fvec/dim4.hpp"
#include "fvec/fvector.hpp"
#include "fvec/lattice.hpp"
#include "fvec/monoid.hpp"
#include "fvec/simplicial.hpp"

namespace fvec {

// Scalars.  Integers that fit in 64 bits are emitted as JSON numbers;
// anything larger becomes a decimal string.  Rationals with denominator 1
// follow the integer rule; all others become a "p/q" string.
nlohmann::json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& value);
Rat rat_from_json(const nlohmann::json& j);

// Vectors and matrices are plain arrays (of arrays).
nlohmann::json to_json(const FVector& f);
FVector fvector_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExtendedFVector& f);
ExtendedFVector extended_fvector_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const nlohmann::json& j);
// A g-vector serializes as a bare array; its entry count fits two ambient
// dimensions (d and d+1 share floor(d/2)+1 entries when d is even), so the
// reader takes the dimension from context.
nlohmann::json to_json(const GVector& g);
GVector gvector_from_json(int d, const nlohmann::json& j);

// Vertex-facet descriptions: {"d": 3, "vertices": 6, "facets": [[0,1,2], ...]}.
nlohmann::json to_json(const VertexFacetPolytope& p);
VertexFacetPolytope polytope_from_json(const nlohmann::json& j);

// Datasets: {"d": 4, "complete_up_to": {"f0_plus_f3": N}, "vectors": [...]}
// when the collection is complete below the bound.  Partial collections are
// written with a "window" object plus "complete": false instead; the reader
// accepts either spelling.
nlohmann::json to_json(const FVectorDataset& ds);
FVectorDataset dataset_from_json(const nlohmann::json& j);

// Reduction bases are named after the CLI operation flags.
std::string reduction_variant_name(ReductionVariant variant);
ReductionVariant reduction_variant_from_name(const std::string& name);

// Reports.
nlohmann::json to_json(const ClosureReport& report);
ClosureReport closure_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ApproximateSemigroupReport& report);
ApproximateSemigroupReport approximate_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const GeneratorSet& set);
GeneratorSet generator_set_from_json(const nlohmann::json& j);

// File helpers.  Loaders throw fvec::error with the offending path on
// missing files or malformed content.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);
VertexFacetPolytope load_polytope(const std::string& path);
FVectorDataset load_dataset(const std::string& path);

}  // namespace fvec
