// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "lfrac/duals.hpp"
#include "lfrac/spaces.hpp"

namespace lfrac {

inline constexpr int kReportSchemaVersion = 1;

const char* condition_name(Condition c);
const char* space_name(SpaceTag s);
const char* dual_kind_name(DualKind k);
/// "satisfied-at-truncation" family for condition reports,
/// "consistent-at-truncation" family for membership reports.
const char* verdict_name(Verdict v, bool membership);

SpaceTag parse_space_tag(std::string_view text);
DualKind parse_dual_kind(std::string_view text);

template <class T>
nlohmann::json scalar_to_json(const T& value) {
  if constexpr (scalar_traits<T>::exact) {
    return to_string(value);
  } else {
    return value;
  }
}

template <class T>
nlohmann::json evidence_to_json(const std::vector<Evidence<T>>& evidence) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : evidence) {
    rows.push_back({{"N", e.truncation}, {"value", scalar_to_json(e.value)}});
  }
  return rows;
}

template <class T>
nlohmann::json verdict_to_json(const ConditionVerdict<T>& verdict) {
  nlohmann::json j{
      {"schema", kReportSchemaVersion},
      {"kind", "condition"},
      {"condition", condition_name(verdict.condition)},
      {"status", verdict_name(verdict.status, false)},
      {"evidence", evidence_to_json(verdict.evidence)},
      {"tolerance", scalar_to_json(verdict.tolerance)},
      {"mode", scalar_traits<T>::mode_name},
  };
  if (verdict.condition == Condition::a1) {
    j["exhaustive"] = verdict.exhaustive;
    if (verdict.upper_bound) j["upper_bound"] = scalar_to_json(*verdict.upper_bound);
  }
  return j;
}

template <class T>
nlohmann::json membership_to_json(const MembershipReport<T>& report) {
  return nlohmann::json{
      {"schema", kReportSchemaVersion},
      {"kind", "membership"},
      {"space", space_name(report.space)},
      {"status", verdict_name(report.status, true)},
      {"norm_estimate", scalar_to_json(report.norm_estimate)},
      {"trend", evidence_to_json(report.trend)},
      {"detail", evidence_to_json(report.detail)},
      {"mode", scalar_traits<T>::mode_name},
  };
}

template <class T>
nlohmann::json dual_to_json(const DualMembership<T>& membership) {
  nlohmann::json conditions = nlohmann::json::array();
  for (const auto& c : membership.conditions) conditions.push_back(verdict_to_json(c));
  return nlohmann::json{
      {"schema", kReportSchemaVersion},
      {"kind", "dual"},
      {"space", space_name(membership.space)},
      {"dual", dual_kind_name(membership.kind)},
      {"status", verdict_name(membership.status, false)},
      {"conditions", conditions},
      {"mode", scalar_traits<T>::mode_name},
  };
}

}  // namespace lfrac
