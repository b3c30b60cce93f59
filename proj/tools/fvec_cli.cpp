// Command-line front end: constructions, membership queries, matrix dumps,
// Hilbert bases, glueing, and dataset reports.  Text output by default,
// machine-readable output with --json.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fvec/combinat.hpp"
#include "fvec/constructions.hpp"
#include "fvec/dim4.hpp"
#include "fvec/fvector.hpp"
#include "fvec/io.hpp"
#include "fvec/lattice.hpp"
#include "fvec/monoid.hpp"
#include "fvec/simplicial.hpp"

namespace {

using namespace fvec;

struct Globals {
  bool json = false;
  long long seed = 0;  // reserved for sampling subcommands
};

void emit_fvector(const Globals& g, const FVector& f) {
  if (g.json)
    std::cout << to_json(f).dump() << '\n';
  else
    std::cout << f.str() << '\n';
}

void emit_generators(const Globals& g, const GeneratorSet& set) {
  if (g.json) {
    std::cout << to_json(set).dump() << '\n';
    return;
  }
  for (const FVector& f : set.generators) std::cout << f.str() << '\n';
}

ReductionBase base_for(const std::string& op, int d) {
  switch (reduction_variant_from_name(op)) {
    case ReductionVariant::Simplex:
      return ReductionBase::simplex(d);
    case ReductionVariant::SimplexFacetSphere:
      return ReductionBase::simplex_facet_sphere(d);
    case ReductionVariant::VertexFacet:
      return ReductionBase::vertex_facet(d);
  }
  throw error("unknown reduction base");
}

VertexSet first_simplex_facet(const VertexFacetPolytope& p, const char* label) {
  const std::vector<VertexSet> candidates = simplex_facets(p);
  if (candidates.empty())
    throw not_applicable_error(std::string(label) + " has no simplex facet");
  return candidates.front();
}

void register_construct(CLI::App& app, const Globals& g) {
  CLI::App* construct = app.add_subcommand("construct", "build an f-vector from a closed form");
  construct->require_subcommand(1);

  auto* pklm = construct->add_subcommand("pklm", "simplex join of a free sum of two simplices");
  auto k = std::make_shared<long long>(0);
  auto l = std::make_shared<long long>(0);
  auto m = std::make_shared<long long>(0);
  pklm->add_option("--k", *k, "first summand dimension")->required();
  pklm->add_option("--l", *l, "second summand dimension")->required();
  pklm->add_option("--m", *m, "joined simplex dimension plus one")->required();
  pklm->callback([&g, k, l, m] { emit_fvector(g, pklm_fvector({*k, *l, *m})); });

  auto* pkd = construct->add_subcommand("pkd", "family interpolating simplex and cross-polytope");
  auto pk = std::make_shared<long long>(0);
  auto pd = std::make_shared<int>(0);
  pkd->add_option("--k", *pk, "family parameter")->required();
  pkd->add_option("--d", *pd, "dimension")->required();
  pkd->callback([&g, pk, pd] { emit_fvector(g, pkd_fvector(*pk, *pd).fvector()); });

  auto* skd = construct->add_subcommand("skd", "simplicial family spanning the even-part lattice");
  auto sk = std::make_shared<long long>(0);
  auto sd = std::make_shared<int>(0);
  skd->add_option("--k", *sk, "family parameter")->required();
  skd->add_option("--d", *sd, "dimension")->required();
  skd->callback([&g, sk, sd] { emit_fvector(g, skd_fvector(*sk, *sd).fvector()); });

  const auto add_binary = [&](const char* name, const char* help,
                              FVector (*op)(const FVector&, const FVector&)) {
    auto* sub = construct->add_subcommand(name, help);
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    sub->add_option("x", *x, "first f-vector")->required();
    sub->add_option("y", *y, "second f-vector")->required();
    sub->callback([&g, x, y, op] { emit_fvector(g, op(FVector::parse(*x), FVector::parse(*y))); });
  };
  add_binary("product", "cartesian product", product_fvector);
  add_binary("join", "free join", join_fvector);
  add_binary("sum", "free (direct) sum", direct_sum_fvector);

  auto* pyramid = construct->add_subcommand("pyramid", "pyramid over a base");
  auto base = std::make_shared<std::string>();
  pyramid->add_option("x", *base, "base f-vector")->required();
  pyramid->callback([&g, base] { emit_fvector(g, pyramid_fvector(FVector::parse(*base))); });

  auto* jp = construct->add_subcommand("join-polygons", "join of two n-gons (dimension 5)");
  auto n = std::make_shared<long long>(0);
  jp->add_option("--n", *n, "polygon vertex count")->required();
  jp->callback([&g, n] { emit_fvector(g, join_polygons_fvector(*n)); });
}

void register_member(CLI::App& app, const Globals& g) {
  CLI::App* member = app.add_subcommand("member", "membership queries for f-vector families");
  auto cls = std::make_shared<std::string>();
  auto text = std::make_shared<std::string>();
  member
      ->add_option("--class", *cls, "family to test against")
      ->required()
      ->check(CLI::IsMember({"euler-monoid", "steinitz", "polygon", "simplicial", "euler-lattice",
                             "ds-lattice", "filter4"}));
  member->add_option("vector", *text, "f-vector to test")->required();
  member->callback([&g, cls, text] {
    const FVector f = FVector::parse(*text);
    if (*cls == "filter4") {
      const ConditionReport report = necessary_conditions_4(f);
      if (g.json) {
        std::cout << to_json(report).dump() << '\n';
      } else if (report.verdict == Verdict::Excluded) {
        std::string names;
        for (const std::string& name : report.failed_names()) {
          if (!names.empty()) names += "; ";
          names += name;
        }
        std::cout << "EXCLUDED: " << names << '\n';
      } else {
        std::cout << "NOT_EXCLUDED" << '\n';
      }
      return;
    }
    bool verdict = false;
    std::optional<std::string> violated;
    if (*cls == "euler-monoid") {
      verdict = euler_monoid_member(f);
    } else if (*cls == "steinitz") {
      violated = steinitz_violation(f);
      verdict = !violated.has_value();
    } else if (*cls == "polygon") {
      verdict = polygon_member(f);
    } else if (*cls == "simplicial") {
      verdict = simplicial_member(f);
    } else if (*cls == "euler-lattice") {
      verdict = euler_lattice_member(f);
    } else {
      verdict = ds_lattice_member(f);
    }
    if (g.json) {
      nlohmann::json j = {{"class", *cls}, {"vector", to_json(f)}, {"member", verdict}};
      if (violated) j["violated"] = *violated;
      std::cout << j.dump() << '\n';
    } else if (violated) {
      std::cout << "false: " << *violated << " violated" << '\n';
    } else {
      std::cout << (verdict ? "true" : "false") << '\n';
    }
  });
}

void register_add(CLI::App& app, const Globals& g) {
  CLI::App* add = app.add_subcommand("add", "reduced addition of two f-vectors");
  auto op = std::make_shared<std::string>();
  auto x = std::make_shared<std::string>();
  auto y = std::make_shared<std::string>();
  add->add_option("--op", *op, "reduction base")
      ->required()
      ->check(CLI::IsMember({"box", "box-prime", "box-dblprime"}));
  add->add_option("x", *x, "first summand")->required();
  add->add_option("y", *y, "second summand")->required();
  add->callback([&g, op, x, y] {
    const FVector fx = FVector::parse(*x);
    const ReducedSum sum = reduced_add(fx, FVector::parse(*y), base_for(*op, fx.dimension()));
    if (g.json) {
      std::cout << nlohmann::json{{"sum", to_json(sum.value)},
                                  {"candidate", sum.fvector_candidate}}
                       .dump()
                << '\n';
    } else {
      std::cout << sum.value.str();
      if (!sum.fvector_candidate) std::cout << " (not a candidate)";
      std::cout << '\n';
    }
  });
}

void register_matrix(CLI::App& app, const Globals& g) {
  CLI::App* matrix = app.add_subcommand("matrix", "lattice basis matrices, raw and triangular");
  auto which = std::make_shared<std::string>();
  auto d = std::make_shared<int>(0);
  matrix->add_option("--which", *which, "matrix family")
      ->required()
      ->check(CLI::IsMember({"N", "M"}));
  matrix->add_option("--d", *d, "dimension")->required();
  matrix->callback([&g, which, d] {
    const IntegerMatrix raw = (*which == "N") ? build_n_matrix(*d) : build_m_matrix(*d);
    const IntegerMatrix tri = triangularize_by_row_subtraction(raw);
    if (g.json) {
      std::cout << nlohmann::json{{"which", *which},
                                  {"d", *d},
                                  {"raw", to_json(raw)},
                                  {"triangular", to_json(tri)}}
                       .dump()
                << '\n';
    } else {
      std::cout << "raw:" << '\n' << raw.str() << '\n';
      std::cout << "triangular:" << '\n' << tri.str() << '\n';
    }
  });
}

void register_hilbert(CLI::App& app, const Globals& g) {
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert basis of an f-vector monoid");
  auto d = std::make_shared<int>(0);
  auto radius = std::make_shared<int>(0);
  auto cls = std::make_shared<std::string>("euler-monoid");
  hilbert->add_option("--d", *d, "dimension")->required();
  auto* radius_opt =
      hilbert->add_option("--bruteforce-radius", *radius,
                          "recompute by brute-force search inside the given box radius");
  hilbert->add_option("--class", *cls, "monoid family")
      ->check(CLI::IsMember({"euler-monoid", "steinitz"}));
  hilbert->callback([&g, d, radius, cls, radius_opt] {
    const bool brute = radius_opt->count() > 0;
    GeneratorSet set;
    if (*cls == "steinitz") {
      if (*d != 3) throw dimension_error("the edge-count monoid lives in dimension 3");
      set = brute ? steinitz_hilbert_basis_bruteforce(*radius) : steinitz_hilbert_basis();
    } else {
      set = brute ? hilbert_basis_bruteforce(*d, *radius) : euler_monoid_hilbert_basis(*d);
    }
    emit_generators(g, set);
  });
}

void register_glue(CLI::App& app, const Globals& g) {
  CLI::App* glue = app.add_subcommand("glue", "glue two polytopes given as JSON files");
  glue->require_subcommand(1);

  const auto add_mode = [&](const char* name, const char* help, auto combine) {
    auto* sub = glue->add_subcommand(name, help);
    auto p_path = std::make_shared<std::string>();
    auto q_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    sub->add_option("p", *p_path, "first polytope (JSON file)")->required();
    sub->add_option("q", *q_path, "second polytope (JSON file)")->required();
    sub->add_option("--out", *out_path, "write the glued polytope to this JSON file");
    sub->callback([&g, p_path, q_path, out_path, combine] {
      const VertexFacetPolytope p = load_polytope(*p_path);
      const VertexFacetPolytope q = load_polytope(*q_path);
      const VertexFacetPolytope result = combine(p, q);
      if (!out_path->empty()) save_json_file(*out_path, to_json(result));
      if (g.json)
        std::cout << to_json(result).dump() << '\n';
      else
        std::cout << fvector_of(result).str() << '\n';
    });
  };

  add_mode("adapter", "delete a deletable simple vertex of P, glue Q into the hole",
           [](const VertexFacetPolytope& p, const VertexFacetPolytope& q) {
             const std::optional<int> v = find_adapter_vertex(p);
             if (!v) throw not_applicable_error("P has no deletable simple vertex");
             return adapter_glue(p, *v, q, first_simplex_facet(q, "Q"));
           });
  add_mode("simplex-facet", "identify a simplex facet of P with one of Q",
           [](const VertexFacetPolytope& p, const VertexFacetPolytope& q) {
             return glue_in_simplex_facet(p, first_simplex_facet(p, "P"), q,
                                          first_simplex_facet(q, "Q"));
           });
  add_mode("connected-sum", "truncate a simple vertex of P, glue Q into the cut",
           [](const VertexFacetPolytope& p, const VertexFacetPolytope& q) {
             const std::optional<int> v = find_simple_vertex(p);
             if (!v) throw not_applicable_error("P has no simple vertex");
             return connected_sum(p, *v, q, first_simplex_facet(q, "Q"));
           });
}

void register_closure_report(CLI::App& app, const Globals& g) {
  CLI::App* sub = app.add_subcommand("closure-report",
                                     "reduced sums of dataset pairs that leave the dataset");
  auto path = std::make_shared<std::string>();
  auto op = std::make_shared<std::string>();
  sub->add_option("--dataset", *path, "dataset JSON file")->required();
  sub->add_option("--op", *op, "reduction base")
      ->required()
      ->check(CLI::IsMember({"box", "box-prime", "box-dblprime"}));
  sub->callback([&g, path, op] {
    const FVectorDataset ds = load_dataset(*path);
    const ClosureReport report = closure_report(ds, base_for(*op, ds.d));
    if (g.json) {
      std::cout << to_json(report).dump() << '\n';
      return;
    }
    std::cout << "pairs checked: " << report.pairs_checked << '\n';
    std::cout << "sums in window: " << report.in_window << '\n';
    std::cout << "absent sums: " << report.absent.size() << '\n';
    for (const AbsentSum& a : report.absent)
      std::cout << a.x.str() << " + " << a.y.str() << " -> " << a.sum.str() << '\n';
  });
}

void register_approx_check(CLI::App& app, const Globals& g) {
  CLI::App* sub = app.add_subcommand(
      "approx-check", "check that plain pair sums stay near the dataset");
  auto path = std::make_shared<std::string>();
  sub->add_option("--dataset", *path, "dataset JSON file")->required();
  sub->callback([&g, path] {
    const ApproximateSemigroupReport report = approximate_semigroup_check(load_dataset(*path));
    if (g.json) {
      std::cout << to_json(report).dump() << '\n';
      return;
    }
    std::cout << "pairs checked: " << report.pairs_checked << '\n';
    std::cout << "unmatched: " << report.unmatched.size() << '\n';
    for (const UnmatchedPair& u : report.unmatched)
      std::cout << u.v.str() << " + " << u.w.str() << " -> " << u.sum.str() << '\n';
  });
}

void enable_fallthrough(CLI::App* app) {
  app->fallthrough();
  for (CLI::App* sub : app->get_subcommands([](const CLI::App*) { return true; }))
    enable_fallthrough(sub);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for the additive structure of polytope face-count vectors"};
  app.require_subcommand(1);

  Globals globals;
  app.add_flag("--json", globals.json, "emit JSON instead of text");
  app.add_option("--seed", globals.seed, "random seed for sampling subcommands");

  register_construct(app, globals);
  register_member(app, globals);
  register_add(app, globals);
  register_matrix(app, globals);
  register_hilbert(app, globals);
  register_glue(app, globals);
  register_closure_report(app, globals);
  register_approx_check(app, globals);
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const fvec::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
