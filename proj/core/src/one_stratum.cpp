#include "stablegraph/one_stratum.hpp"

#include "stablegraph/enumeration.hpp"
#include "stablegraph/error.hpp"
#include "stablegraph/moves.hpp"

namespace stablegraph {

std::string to_string(ComponentKind k) { return k == ComponentKind::Deg4 ? "deg4" : "weight1"; }

S3Subgroup residual_subgroup(const WeightedGraph& g) {
  const auto v0 = degree_four_vertex(g);
  if (!v0) throw PreconditionError("no unique weight-0 vertex of degree 4");
  const auto aut = automorphism_group(g);
  std::vector<S3Elem> gens;
  for (const auto& alpha : aut.generators()) gens.push_back(s3_from_s4(sigma_of(g, *v0, alpha)));
  return S3Subgroup::generated_by(gens);
}

OneStratumReport classify(const WeightedGraph& g) {
  const auto diag = is_stable(g);
  if (!diag.stable) throw PreconditionError("unstable graph: " + diag.failures.front());
  if (dimension(g) != 1) throw PreconditionError("not a 1-stratum graph");

  OneStratumReport r;
  r.key = canonical_key(g);
  const auto aut = automorphism_group(g);
  r.aut_order = static_cast<int>(aut.order());
  r.normalization_degree = r.aut_order;

  if (const auto v0 = degree_four_vertex(g)) {
    r.kind = ComponentKind::Deg4;
    r.kernel_or_gerbe_order = kernel_v4_order(g, *v0);
    r.r_type = s3_type_from_order(r.aut_order / r.kernel_or_gerbe_order);
    r.orbifold = orbifold_signature(S3Subgroup::of_type(*r.r_type));
  } else {
    // Aut(G) fixes the weight-1 vertex and acts trivially on M_{1,1}.
    r.kind = ComponentKind::Weight1;
    r.kernel_or_gerbe_order = 2 * r.aut_order;
    r.orbifold = Signature{{1}, {2, 3}};
  }
  for (const auto& bp : boundary_graphs(g)) {
    r.boundary.push_back({bp.key, bp.ord, is_smooth_point(bp.ord)});
  }
  return r;
}

std::vector<OneStratumReport> classify_all(int genus) {
  std::vector<OneStratumReport> out;
  for (const auto& cls : enumerate_stratum_classes(genus, 1)) out.push_back(classify(cls.graph));
  return out;
}

std::map<std::string, std::optional<OrbifoldWitness>> find_orbifold_examples(int max_genus) {
  std::map<std::string, std::optional<OrbifoldWitness>> found;
  for (S3Type t : {S3Type::Trivial, S3Type::C2, S3Type::C3, S3Type::Full}) {
    found[to_string(orbifold_signature(S3Subgroup::of_type(t)))] = std::nullopt;
  }
  for (int genus = 2; genus <= max_genus; ++genus) {
    bool missing = false;
    for (const auto& [sig, w] : found) missing |= !w.has_value();
    if (!missing) break;
    for (const auto& cls : enumerate_stratum_classes(genus, 1)) {
      if (!degree_four_vertex(cls.graph)) continue;
      const auto sig = to_string(orbifold_signature(residual_subgroup(cls.graph)));
      auto& slot = found[sig];
      if (!slot) slot = OrbifoldWitness{genus, cls.key};
    }
  }
  return found;
}

}  // namespace stablegraph
