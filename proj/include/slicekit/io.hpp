#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "slicekit/classes.hpp"
#include "slicekit/natural_slice.hpp"
#include "slicekit/residual.hpp"
#include "slicekit/slices.hpp"

namespace slicekit {

using Json = nlohmann::ordered_json;

// Rationals travel as strings "p/q" or "p"; bare JSON integers are accepted
// on input. Every parse_* throws MalformedInput on a bad document.

Json to_json(const Rational& q);
Rational parse_rational_json(const Json& j);

Json to_json(const RationalMatrix& m);
RationalMatrix parse_matrix(const Json& j);

Json to_json(const Partition& p);
Partition parse_partition(const Json& j);
/// "1,1,2" style lists for CLI flags.
std::vector<int> parse_int_list(const std::string& text);

Json to_json(const ClassLabel& label);
ClassLabel parse_label(const Json& j);

Json to_json(const RationalPolynomial& p);
Json to_json(const Subspace& s);
Json to_json(const Sl2Triple& t);
Json to_json(const AffineSlice& s);
Json to_json(const NaturalSliceDescriptor& d);
Json to_json(const SubquotientData& d);
Json to_json(const AxPresentations& p);

/// Canonical text form of a document (two-space indent).
std::string emit(const Json& j);
Json parse_document(const std::string& text);

struct AtlasNode {
  ClassLabel label;
  int dimension = 0;
};

struct Atlas {
  LieAlgebraSpec algebra;
  std::vector<AtlasNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, higher)
  bool acyclic() const;
};

/// Nodes: every decomposition class with its dimension. Edges: from the
/// class of x to each other class listed by the natural slice at x, i.e.
/// closure relations certified by the induced-orbit criterion. A
/// PreconditionError is raised when n exceeds `bound`.
Atlas build_atlas(const LieAlgebraSpec& g, int bound = 6);
std::string atlas_to_dot(const Atlas& a);
Json atlas_to_json(const Atlas& a);

}  // namespace slicekit
