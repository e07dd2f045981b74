// SPDX-License-Identifier: Apache-2.0
#include "lfrac/problem_file.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace lfrac {

namespace {

Rational rational_from_json(const nlohmann::json& value, const std::string& field) {
  if (value.is_string()) {
    return parse_rational(value.get<std::string>(), field);
  }
  if (value.is_number_integer()) {
    return Rational(static_cast<long>(value.get<std::int64_t>()));
  }
  if (value.is_number_float()) {
    // A JSON float is a binary double; convert its exact dyadic value.
    Rational q;
    mpq_set_d(q.get_mpq_t(), value.get<double>());
    return q;
  }
  throw ParseError("expected a rational (string or number)", field);
}

std::vector<Rational> sequence_from_json(const nlohmann::json& value, const std::string& field) {
  if (!value.is_array()) throw ParseError("expected an array", field);
  std::vector<Rational> terms;
  terms.reserve(value.size());
  for (size_t i = 0; i < value.size(); ++i) {
    terms.push_back(rational_from_json(value[i], field + "[" + std::to_string(i) + "]"));
  }
  return terms;
}

}  // namespace

ProblemFile parse_problem_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "file");
  }
  if (!j.is_object()) throw ParseError("problem file must be a JSON object", "file");

  ProblemFile problem;
  for (const auto& [key, value] : j.items()) {
    if (key == "a") {
      problem.a = rational_from_json(value, key);
    } else if (key == "l") {
      problem.l = rational_from_json(value, key);
    } else if (key == "b") {
      problem.b = rational_from_json(value, key);
    } else if (key == "v") {
      problem.v = sequence_from_json(value, key);
    } else if (key == "x") {
      problem.x = sequence_from_json(value, key);
    } else if (key == "y") {
      problem.y = sequence_from_json(value, key);
    } else if (key == "z") {
      problem.z = sequence_from_json(value, key);
    } else if (key == "N") {
      if (!value.is_number_integer()) throw ParseError("expected an integer", key);
      problem.truncation = value.get<long>();
    } else if (key == "mode") {
      if (!value.is_string()) throw ParseError("expected \"exact\" or \"float\"", key);
      std::string mode = value.get<std::string>();
      if (mode != "exact" && mode != "float") {
        throw ParseError("expected \"exact\" or \"float\", got \"" + mode + "\"", key);
      }
      problem.mode = mode;
    } else {
      throw ParseError("unknown key", key);
    }
  }
  return problem;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", "file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_json(buffer.str());
}

}  // namespace lfrac
