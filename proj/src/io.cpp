#include "fvec/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <utility>

namespace fvec {

namespace {

[[noreturn]] void bad_json(const std::string& what) { throw error("invalid JSON: " + what); }

std::vector<Int> int_vector_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) bad_json(what + " must be an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(int_from_json(item));
  return out;
}

nlohmann::json int_vector_to_json(const std::vector<Int>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const Int& x : v) j.push_back(int_to_json(x));
  return j;
}

}  // namespace

nlohmann::json int_to_json(const Int& value) {
  static const Int kMin = (std::numeric_limits<std::int64_t>::min)();
  static const Int kMax = (std::numeric_limits<std::int64_t>::max)();
  if (value >= kMin && value <= kMax) return value.convert_to<std::int64_t>();
  return value.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      bad_json("not an integer: \"" + j.get<std::string>() + "\"");
    }
  }
  bad_json("expected an integer, got " + j.dump());
}

nlohmann::json rat_to_json(const Rat& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return int_to_json(numerator(value));
  return numerator(value).str() + "/" + denominator(value).str();
}

Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(text));
      return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::exception&) {
      bad_json("not a rational: \"" + text + "\"");
    }
  }
  return Rat(int_from_json(j));
}

nlohmann::json to_json(const FVector& f) { return int_vector_to_json(f.entries()); }

FVector fvector_from_json(const nlohmann::json& j) {
  return FVector(int_vector_from_json(j, "f-vector"));
}

nlohmann::json to_json(const ExtendedFVector& f) { return int_vector_to_json(f.entries()); }

ExtendedFVector extended_fvector_from_json(const nlohmann::json& j) {
  return ExtendedFVector(int_vector_from_json(j, "extended f-vector"));
}

nlohmann::json to_json(const IntegerMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(int_vector_to_json(m.row(r)));
  return rows;
}

IntegerMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) bad_json("matrix must be an array of arrays");
  std::vector<std::vector<Int>> rows;
  rows.reserve(j.size());
  for (const auto& row : j) rows.push_back(int_vector_from_json(row, "matrix row"));
  return IntegerMatrix::from_rows(rows);
}

nlohmann::json to_json(const GVector& g) { return int_vector_to_json(g.entries()); }

GVector gvector_from_json(int d, const nlohmann::json& j) {
  return GVector(d, int_vector_from_json(j, "g-vector"));
}

nlohmann::json to_json(const VertexFacetPolytope& p) {
  nlohmann::json facets = nlohmann::json::array();
  for (const VertexSet& facet : p.facets()) facets.push_back(facet.to_list());
  return {{"d", p.dimension()}, {"vertices", p.vertex_count()}, {"facets", std::move(facets)}};
}

VertexFacetPolytope polytope_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad_json("polytope must be an object");
  if (!j.contains("d") || !j.contains("vertices") || !j.contains("facets"))
    bad_json("polytope needs keys d, vertices, facets");
  std::vector<VertexSet> facets;
  for (const auto& facet : j.at("facets")) {
    if (!facet.is_array()) bad_json("facet must be an array of vertex indices");
    VertexSet set;
    for (const auto& v : facet) set.insert(v.get<int>());
    facets.push_back(set);
  }
  return VertexFacetPolytope(j.at("d").get<int>(), j.at("vertices").get<int>(),
                             std::move(facets));
}

nlohmann::json to_json(const FVectorDataset& ds) {
  nlohmann::json vectors = nlohmann::json::array();
  for (const FVector& f : ds.vectors) vectors.push_back(to_json(f));
  nlohmann::json j = {{"d", ds.d}, {"vectors", std::move(vectors)}};
  if (ds.f03_window) {
    nlohmann::json bound = {{"f0_plus_f3", int_to_json(*ds.f03_window)}};
    if (ds.complete) {
      j["complete_up_to"] = std::move(bound);
    } else {
      j["window"] = std::move(bound);
      j["complete"] = false;
    }
  } else {
    j["complete"] = ds.complete;
  }
  return j;
}

FVectorDataset dataset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("vectors"))
    bad_json("dataset needs keys d and vectors");
  const int d = j.at("d").get<int>();
  std::vector<FVector> vectors;
  for (const auto& v : j.at("vectors")) vectors.push_back(fvector_from_json(v));

  std::optional<Int> window;
  bool complete = false;
  const auto read_bound = [&](const nlohmann::json& bound) {
    if (!bound.is_object() || !bound.contains("f0_plus_f3"))
      bad_json("completeness bound needs key f0_plus_f3");
    window = int_from_json(bound.at("f0_plus_f3"));
  };
  if (j.contains("complete_up_to")) {
    read_bound(j.at("complete_up_to"));
    complete = true;
  } else if (j.contains("window")) {
    read_bound(j.at("window"));
  }
  if (j.contains("complete")) complete = j.at("complete").get<bool>();
  return make_dataset(d, std::move(vectors), window, complete);
}

std::string reduction_variant_name(ReductionVariant variant) {
  switch (variant) {
    case ReductionVariant::Simplex:
      return "box";
    case ReductionVariant::SimplexFacetSphere:
      return "box-prime";
    case ReductionVariant::VertexFacet:
      return "box-dblprime";
  }
  throw error("unknown reduction variant");
}

ReductionVariant reduction_variant_from_name(const std::string& name) {
  if (name == "box") return ReductionVariant::Simplex;
  if (name == "box-prime") return ReductionVariant::SimplexFacetSphere;
  if (name == "box-dblprime") return ReductionVariant::VertexFacet;
  throw error("unknown reduction base \"" + name + "\" (expected box, box-prime or box-dblprime)");
}

nlohmann::json to_json(const ClosureReport& report) {
  nlohmann::json absent = nlohmann::json::array();
  for (const AbsentSum& a : report.absent)
    absent.push_back({{"x", to_json(a.x)}, {"y", to_json(a.y)}, {"sum", to_json(a.sum)}});
  return {{"base", reduction_variant_name(report.base)},
          {"pairs_checked", report.pairs_checked},
          {"absent_sums", std::move(absent)}};
}

ClosureReport closure_report_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("pairs_checked") ||
      !j.contains("absent_sums"))
    bad_json("closure report needs keys base, pairs_checked, absent_sums");
  ClosureReport report;
  report.base = reduction_variant_from_name(j.at("base").get<std::string>());
  report.pairs_checked = j.at("pairs_checked").get<std::size_t>();
  for (const auto& a : j.at("absent_sums"))
    report.absent.push_back({fvector_from_json(a.at("x")), fvector_from_json(a.at("y")),
                             fvector_from_json(a.at("sum"))});
  return report;
}

nlohmann::json to_json(const ApproximateSemigroupReport& report) {
  nlohmann::json unmatched = nlohmann::json::array();
  for (const UnmatchedPair& u : report.unmatched)
    unmatched.push_back({{"v", to_json(u.v)}, {"w", to_json(u.w)}, {"sum", to_json(u.sum)}});
  return {{"pairs_checked", report.pairs_checked}, {"unmatched", std::move(unmatched)}};
}

ApproximateSemigroupReport approximate_report_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pairs_checked") || !j.contains("unmatched"))
    bad_json("approximate-closure report needs keys pairs_checked, unmatched");
  ApproximateSemigroupReport report;
  report.pairs_checked = j.at("pairs_checked").get<std::size_t>();
  for (const auto& u : j.at("unmatched"))
    report.unmatched.push_back({fvector_from_json(u.at("v")), fvector_from_json(u.at("w")),
                                fvector_from_json(u.at("sum"))});
  return report;
}

nlohmann::json to_json(const ConditionReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const ConditionCheck& c : report.checks)
    checks.push_back({{"name", c.name}, {"holds", c.holds}, {"slack", rat_to_json(c.slack)}});
  return {{"vector", to_json(report.vector)},
          {"verdict", report.verdict == Verdict::Excluded ? "EXCLUDED" : "NOT_EXCLUDED"},
          {"checks", std::move(checks)}};
}

nlohmann::json to_json(const GeneratorSet& set) {
  nlohmann::json generators = nlohmann::json::array();
  for (const FVector& g : set.generators) generators.push_back(to_json(g));
  return {{"d", set.d}, {"generators", std::move(generators)}};
}

GeneratorSet generator_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("generators"))
    bad_json("generator set needs keys d and generators");
  GeneratorSet set;
  set.d = j.at("d").get<int>();
  for (const auto& g : j.at("generators")) set.generators.push_back(fvector_from_json(g));
  std::sort(set.generators.begin(), set.generators.end());
  return set;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw error("cannot parse " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw error("cannot open file for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw error("write failed: " + path);
}

VertexFacetPolytope load_polytope(const std::string& path) {
  try {
    return polytope_from_json(load_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw error("cannot read polytope from " + path + ": " + e.what());
  }
}

FVectorDataset load_dataset(const std::string& path) {
  try {
    return dataset_from_json(load_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw error("cannot read dataset from " + path + ": " + e.what());
  }
}

}  // namespace fvec
