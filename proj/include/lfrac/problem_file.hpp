// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfrac/scalar.hpp"

namespace lfrac {

/// JSON problem description consumed by the CLI. Scalars may be given as
/// strings ("1/2", "-0.25") or JSON numbers; sequences are arrays of the
/// same. "N" is the truncation and "mode" selects exact or float arithmetic.
struct ProblemFile {
  std::optional<Rational> a;
  std::optional<Rational> l;
  std::optional<Rational> b;
  std::optional<std::vector<Rational>> v;
  std::optional<std::vector<Rational>> x;
  std::optional<std::vector<Rational>> y;
  std::optional<std::vector<Rational>> z;
  std::optional<long> truncation;
  std::optional<std::string> mode;
};

ProblemFile load_problem_file(const std::string& path);
ProblemFile parse_problem_json(const std::string& text);

}  // namespace lfrac
