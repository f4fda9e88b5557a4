#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "slicekit/errors.hpp"
#include "slicekit/io.hpp"
#include "slicekit/jordan.hpp"
#include "slicekit/residual.hpp"
#include "slicekit/verify.hpp"

using namespace slicekit;

namespace {

struct Options {
  int n = 3;
  std::string algebra = "gl";
  std::uint64_t seed = 1;
  std::size_t samples = 50;
  std::string format = "json";
  int bound = 6;
  std::string blocks;
  std::string orbits;
  std::string matrix;
  std::string y;
  std::string label;
  std::string suite;
};

std::optional<Json> stdin_document;

const Json& read_stdin() {
  if (!stdin_document) {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    stdin_document = parse_document(text);
  }
  return *stdin_document;
}

// A flag value, or the given field of the standard-input document (the
// document itself when it is not an object).
Json input(const std::string& flag, const std::string& field) {
  if (!flag.empty()) return parse_document(flag);
  const Json& doc = read_stdin();
  if (doc.is_object()) {
    if (!doc.contains(field)) throw MalformedInput("input document has no \"" + field + "\" field");
    return doc.at(field);
  }
  return doc;
}

LieAlgebraSpec algebra_for(const Options& o, const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw MalformedInput("matrix must be square");
  return {parse_family(o.algebra), static_cast<int>(m.rows())};
}

LieElement element(const Options& o, const std::string& flag, const std::string& field) {
  const auto m = parse_matrix(input(flag, field));
  return LieElement(algebra_for(o, m), m);
}

LieAlgebraSpec sized_algebra(const Options& o) {
  if (o.n < 1) throw MalformedInput("--n must be positive");
  return {parse_family(o.algebra), o.n};
}

int run(const std::string& command, const Options& o) {
  Json out;
  if (command == "jordan") {
    const auto d = jordan_decompose(element(o, o.matrix, "matrix"));
    out["x_s"] = to_json(d.x_s.matrix());
    out["x_n"] = to_json(d.x_n.matrix());
    out["witness"] = to_json(d.witness);
  } else if (command == "jm") {
    out = to_json(jm_complete(element(o, o.matrix, "matrix")));
  } else if (command == "slodowy") {
    const auto e = element(o, o.matrix, "matrix");
    const auto t = jm_complete(e);
    out["triple"] = to_json(t);
    out["slice"] = to_json(slodowy_slice(t, e.algebra()));
    out["contracting_weights"] = contracting_weights(t, e.algebra());
  } else if (command == "classify") {
    out["label"] = to_json(classify(element(o, o.matrix, "matrix")));
  } else if (command == "class-dim") {
    const auto g = sized_algebra(o);
    const auto label = parse_label(input(o.label, "label"));
    out["label"] = to_json(label);
    out["dimension"] = class_dimension(label, g);
  } else if (command == "enumerate") {
    const auto g = sized_algebra(o);
    Json list = Json::array();
    for (const auto& label : enumerate_classes(g)) {
      Json item;
      item["label"] = to_json(label);
      item["dimension"] = class_dimension(label, g);
      list.push_back(item);
    }
    out["algebra"] = g.name();
    out["count"] = list.size();
    out["classes"] = list;
  } else if (command == "induce") {
    const auto blocks = parse_int_list(o.blocks);
    const Json orbits = input(o.orbits, "orbits");
    if (!orbits.is_array()) throw MalformedInput("orbits must be an array of partitions");
    LeviOrbitPair pair{blocks, {}};
    for (const auto& p : orbits) pair.orbit_parts.push_back(parse_partition(p));
    if (!pair.valid()) throw MalformedInput("orbits do not match the block sizes");
    out["induced"] = to_json(ls_induce(pair));
  } else if (command == "richardson") {
    const auto blocks = parse_int_list(o.blocks);
    out["richardson"] = to_json(richardson(blocks));
  } else if (command == "natural-slice") {
    out = to_json(natural_slice(element(o, o.matrix, "matrix")));
  } else if (command == "comp-slice") {
    const auto c = complementary_slice(element(o, o.matrix, "matrix"));
    out["natural"] = to_json(c.natural);
    out["slodowy"] = to_json(c.slodowy);
  } else if (command == "membership") {
    const auto x = element(o, o.matrix, "x");
    const auto y = element(o, o.y, "y");
    const auto v = membership_Sx(y, x);
    out["member"] = v.member();
    out["descriptor"] = v.descriptor;
    out["rank_test"] = v.rank_test ? Json(*v.rank_test) : Json(nullptr);
    out["agree"] = v.agree();
  } else if (command == "residual") {
    const auto x = element(o, o.matrix, "matrix");
    const auto c = trivial_action_core(x);
    out["subquotients"] = to_json(subquotient_data(x));
    out["A"] = to_json(ax_presentation(x));
    out["trivial_action"] = {{"perp", to_json(c.perp)}, {"n_x", to_json(c.n_x)}, {"equal", c.equal()}};
  } else if (command == "verify") {
    SuiteOptions opt{o.n, parse_family(o.algebra), o.seed, o.samples};
    const auto report = run_suite(o.suite, opt);
    std::cout << emit(to_json(report));
    return report.passed() ? 0 : 1;
  } else if (command == "atlas") {
    const auto atlas = build_atlas(sized_algebra(o), o.bound);
    if (o.format == "dot") {
      std::cout << atlas_to_dot(atlas);
      return 0;
    }
    out = atlas_to_json(atlas);
  }
  std::cout << emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Jordan data, slices and residual groups in gl_n and sl_n"};
  app.require_subcommand(1);
  Options o;

  auto matrix_opt = [&](CLI::App* sub) {
    sub->add_option("--matrix", o.matrix, "Matrix as a JSON array of rows (default: read standard input)");
    sub->add_option("--algebra", o.algebra, "gl or sl")->check(CLI::IsMember({"gl", "sl"}));
  };
  auto sized = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
    sub->add_option("--algebra", o.algebra, "gl or sl")->check(CLI::IsMember({"gl", "sl"}));
  };

  for (const char* name : {"jordan", "jm", "slodowy", "classify", "natural-slice", "comp-slice", "residual"})
    matrix_opt(app.add_subcommand(name));

  auto* class_dim = app.add_subcommand("class-dim", "Dimension of a decomposition class");
  sized(class_dim);
  class_dim->add_option("--label", o.label, "Label as JSON (default: read standard input)");

  sized(app.add_subcommand("enumerate", "All decomposition classes with their dimensions"));

  auto* induce = app.add_subcommand("induce", "Induced nilpotent orbit");
  induce->add_option("--blocks", o.blocks, "Levi block sizes, e.g. 2,1")->required();
  induce->add_option("--orbits", o.orbits, "Partitions per block as JSON (default: read standard input)");

  auto* rich = app.add_subcommand("richardson", "Richardson orbit of a parabolic");
  rich->add_option("--blocks", o.blocks, "Levi block sizes, e.g. 1,1,1")->required();

  auto* member = app.add_subcommand("membership", "Is y in the natural slice at x");
  matrix_opt(member);
  member->add_option("--y", o.y, "Second matrix as JSON (default: field \"y\" of standard input)");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  sized(verify);
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--samples", o.samples, "Samples per check");

  auto* atlas = app.add_subcommand("atlas", "Export the certified closure relations between classes");
  sized(atlas);
  atlas->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  atlas->add_option("--bound", o.bound, "Largest n accepted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const DomainError& e) {
    std::cout << emit({{"error", {{"kind", e.kind()}, {"message", e.what()}}}});
    return 1;
  } catch (const MalformedInput& e) {
    std::cerr << emit({{"error", {{"kind", "MalformedInput"}, {"message", e.what()}}}});
    return 2;
  }
}
