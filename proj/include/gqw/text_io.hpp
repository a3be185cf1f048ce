#pragma once

// Text formats for graphs, datum files, distribution tables and matrix
// representations. Parsers throw ParseError with a 1-based line and column.

#include <string>

#include "gqw/distribution.hpp"
#include "gqw/graph.hpp"
#include "gqw/rep_matrix.hpp"

namespace gqw {

// graph F
// vertices: a b c
// edges:
//   e1: a -> b
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// threshold=1
// [isolated x]  default=abs
// [sink w]      threshold=1, default=const(1)
// [cycle e1.e2] tuple=(2,3)
RepDatum parse_datum(const Graph& g, const std::string& text);
std::string serialize_datum(const Graph& g, const RepDatum& datum);

// distribution F
// window -2 4
// threshold 1
// tail sink w threshold=1 default=const(1)
// rows
// u,-2,4
DimDistribution parse_distribution(const Graph& g, const std::string& text);
std::string serialize_distribution(const DimDistribution& d);

// dim v = 2
// matrix e = [[1,1],[0,1]]
// matrix e* = [[1,-1],[0,1]]
FiniteRep parse_rep(const Graph& g, const std::string& text);
std::string serialize_rep(const FiniteRep& rep);

// Key/value items of a level map: threshold=t, default=<rule>, <level>=<value>.
std::string serialize_level_map(const LevelMap& m);

// Throws PreconditionError if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace gqw
