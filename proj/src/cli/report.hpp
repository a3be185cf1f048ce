#pragma once

// JSON encodings of library results.

#include "json.hpp"

#include "gqw/covering.hpp"
#include "gqw/distribution.hpp"
#include "gqw/ideals.hpp"
#include "gqw/rep_matrix.hpp"

namespace gqw::report {

using Json = nlohmann::ordered_json;

Json vertex_list(const Graph& g, const std::vector<Vertex>& vs);
Json vertex_list(const Graph& g, const VertexSet& vs);
Json cycle(const Graph& g, const CycleClass& c);
Json signature(const Signature& s);
Json candidate(const Graph& g1, const Graph& g2, const CandidateResult& r);
Json lattice(const Graph& g, const HSatLattice& l);
Json talmax(const Graph& g, const TalMax& t);
Json window(const DoubleGraph& dg, const CoveringWindow& w);
Json lifted(const DoubleGraph& dg, const CKRelationSet& rel, const LiftedRelations& l);
Json level_map(const LevelMap& m);
Json datum(const Graph& g, const RepDatum& d);
Json distribution(const DimDistribution& d);
Json flow(const Graph& g, const FlowResult& r);
Json rational(const mpq_class& q);
Json matrix(const RationalMatrix& m);
Json ck(const CKResult& r);
Json shape(const Graph& g, const ShapeResult& r);

Json envelope(const std::string& command, const std::vector<std::string>& args, Json result);

}  // namespace gqw::report
