#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicekit/io.hpp"

namespace slicekit {

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty() && checks > 0; }
  /// Records one check; `what` is kept only on failure.
  void expect(bool ok, const std::string& what);
};

Json to_json(const SuiteReport& r);

struct SuiteOptions {
  int n = 3;
  Family family = Family::gl;
  std::uint64_t seed = 1;
  std::size_t samples = 50;
};

std::vector<std::string> suite_names();
/// Throws MalformedInput for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

SuiteReport verify_jordan(const SuiteOptions& opt);
SuiteReport verify_jm(const SuiteOptions& opt);
SuiteReport verify_slodowy(const SuiteOptions& opt);
SuiteReport verify_fundamental(const SuiteOptions& opt);
SuiteReport verify_contracting(const SuiteOptions& opt);
SuiteReport verify_induction(const SuiteOptions& opt);
SuiteReport verify_classes(const SuiteOptions& opt);
SuiteReport verify_perp(const SuiteOptions& opt);
SuiteReport verify_natural(const SuiteOptions& opt);
SuiteReport verify_saturation(const SuiteOptions& opt);
SuiteReport verify_residual(const SuiteOptions& opt);
SuiteReport verify_weyl(const SuiteOptions& opt);
SuiteReport verify_sp(const SuiteOptions& opt);
SuiteReport verify_groupoid(const SuiteOptions& opt);
SuiteReport verify_slice_theorem(const SuiteOptions& opt);

}  // namespace slicekit
