#include "slicekit/io.hpp"

#include <map>
#include <sstream>

#include "slicekit/errors.hpp"

namespace slicekit {

Json to_json(const Rational& q) { return q.get_str(); }

Rational parse_rational_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw MalformedInput("expected a rational string, got " + j.dump());
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) throw MalformedInput("matrix must be a non-empty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw MalformedInput("matrix rows must be non-empty arrays");
  RationalMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw MalformedInput("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_rational_json(j[i][c]);
  }
  return m;
}

Json to_json(const Partition& p) { return Json(p); }

Partition parse_partition(const Json& j) {
  if (!j.is_array()) throw MalformedInput("partition must be an array of integers");
  Partition p;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw MalformedInput("partition parts must be integers");
    p.push_back(v.get<int>());
  }
  if (!is_partition(p)) throw MalformedInput("not a partition: " + j.dump());
  return p;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw MalformedInput("expected a comma-separated list of positive integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw MalformedInput("empty integer list");
  return out;
}

Json to_json(const ClassLabel& label) {
  Json arr = Json::array();
  for (const auto& p : label) arr.push_back({{"size", p.size}, {"partition", to_json(p.partition)}});
  return arr;
}

ClassLabel parse_label(const Json& j) {
  if (!j.is_array() || j.empty()) throw MalformedInput("label must be a non-empty array");
  ClassLabel label;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("size") || !item.contains("partition") ||
        !item["size"].is_number_integer())
      throw MalformedInput("label entries must be {size, partition} records");
    LabelPair p{item["size"].get<int>(), parse_partition(item["partition"])};
    if (size_of(p.partition) != p.size) throw MalformedInput("label partition does not match its size");
    label.push_back(p);
  }
  ClassLabel canon = canonical_label(label);
  if (!(canon == label)) throw MalformedInput("label entries must be sorted canonically");
  return label;
}

Json to_json(const RationalPolynomial& p) {
  Json c = Json::array();
  for (const auto& a : p.coefficients()) c.push_back(to_json(a));
  return {{"coefficients", c}, {"text", p.to_string()}};
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& e : s.elements()) basis.push_back(to_json(e));
  return {{"algebra", s.ambient().name()}, {"dimension", s.dim()}, {"basis", basis}};
}

Json to_json(const Sl2Triple& t) {
  return {{"e", to_json(t.e.matrix())}, {"h", to_json(t.h.matrix())}, {"f", to_json(t.f.matrix())}};
}

Json to_json(const AffineSlice& s) {
  Json basis = Json::array();
  for (const auto& e : s.directions.elements()) basis.push_back(to_json(e));
  return {{"base", to_json(s.base.matrix())}, {"dimension", s.dim()}, {"direction_basis", basis}};
}

Json to_json(const NaturalSliceDescriptor& d) {
  Json I = Json::array();
  for (std::size_t i = 0; i < d.levi.blocks.size(); ++i)
    I.push_back({{"eigenvalue", to_json(d.eigenvalues[i])},
                 {"size", d.levi.blocks[i]},
                 {"orbit", to_json(d.orbit[i])}});
  Json pairs = Json::array();
  for (const auto& pair : d.pairs) {
    Json J = Json::array(), orbits = Json::array();
    for (const auto& label : pair) {
      Json Jb = Json::array(), Ob = Json::array();
      for (const auto& lp : label) {
        Jb.push_back(lp.size);
        Ob.push_back(to_json(lp.partition));
      }
      J.push_back(Jb);
      orbits.push_back(Ob);
    }
    pairs.push_back({{"J", J}, {"orbits", orbits}});
  }
  return {{"I", I}, {"pairs", pairs}};
}

Json to_json(const SubquotientData& d) {
  return {{"dim_L", d.dim_L},
          {"dim_Lprime", d.dim_Lprime},
          {"rank_G", d.rank_G},
          {"rank_Lprime", d.rank_Lprime},
          {"rank_T", d.rank_T},
          {"dim_center_L", d.dim_center_L},
          {"dim_gx", d.dim_gx},
          {"dim_N", d.dim_N},
          {"dim_A", d.dim_A},
          {"C_factors", d.C_factors},
          {"C_order", d.C_order},
          {"C_cyclic", d.C_cyclic},
          {"exact_sequence", {{"C_order", d.C_order}, {"rank_T", d.rank_T}}}};
}

Json to_json(const AxPresentations& p) {
  return {{"rank_center_L", p.rank_center_L},
          {"components_center_L", p.components_center_L},
          {"center_Lprime", p.center_Lprime},
          {"C_factors", p.C_factors},
          {"fibered", {{"free_rank", p.fibered.free_rank}, {"torsion_order", p.fibered.torsion_order}}},
          {"extension", {{"free_rank", p.extension.free_rank}, {"torsion_order", p.extension.torsion_order}}},
          {"agree", p.agree()}};
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

bool Atlas::acyclic() const {
  // Kahn's algorithm.
  std::vector<int> indeg(nodes.size(), 0);
  for (const auto& [a, b] : edges) ++indeg[b];
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (indeg[i] == 0) queue.push_back(i);
  std::size_t seen = 0;
  while (!queue.empty()) {
    std::size_t v = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& [a, b] : edges)
      if (a == v && --indeg[b] == 0) queue.push_back(b);
  }
  return seen == nodes.size();
}

Atlas build_atlas(const LieAlgebraSpec& g, int bound) {
  if (g.n > bound) throw PreconditionError("atlas: n = " + std::to_string(g.n) + " exceeds the bound " + std::to_string(bound));
  Atlas a{g, {}, {}};
  std::map<ClassLabel, std::size_t> index;
  for (const auto& label : enumerate_classes(g)) {
    index[label] = a.nodes.size();
    a.nodes.push_back({label, class_dimension(label, g)});
  }
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    LieElement x(g, class_representative(a.nodes[i].label, g));
    std::set<std::size_t> targets;
    for (const auto& pair : natural_slice(x).pairs) {
      ClassLabel global;
      for (const auto& local : pair) global.insert(global.end(), local.begin(), local.end());
      std::size_t j = index.at(canonical_label(global));
      if (j != i) targets.insert(j);
    }
    for (std::size_t j : targets) a.edges.emplace_back(i, j);
  }
  return a;
}

std::string atlas_to_dot(const Atlas& a) {
  std::ostringstream os;
  os << "digraph atlas {\n";
  os << "  label=\"" << a.algebra.name() << " decomposition classes: partial order (certified subset)\";\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << to_string(a.nodes[i].label) << "\\ndim " << a.nodes[i].dimension << "\"];\n";
  for (const auto& [from, to] : a.edges) os << "  n" << from << " -> n" << to << ";\n";
  os << "}\n";
  return os.str();
}

Json atlas_to_json(const Atlas& a) {
  Json nodes = Json::array(), edges = Json::array();
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
    nodes.push_back({{"id", i}, {"label", to_json(a.nodes[i].label)}, {"dimension", a.nodes[i].dimension}});
  for (const auto& [from, to] : a.edges) edges.push_back({{"from", from}, {"to", to}});
  return {{"algebra", a.algebra.name()},
          {"order", "partial order (certified subset)"},
          {"nodes", nodes},
          {"edges", edges}};
}

}  // namespace slicekit
