// SPDX-License-Identifier: Apache-2.0
#include "lfrac/report.hpp"

namespace lfrac {

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::a1: return "A1";
    case Condition::a2: return "A2";
    case Condition::a3: return "A3";
    case Condition::a4: return "A4";
    case Condition::a5: return "A5";
  }
  return "?";
}

const char* space_name(SpaceTag s) {
  switch (s) {
    case SpaceTag::linf: return "linf";
    case SpaceTag::c0: return "c0";
    case SpaceTag::c: return "c";
  }
  return "?";
}

const char* dual_kind_name(DualKind k) {
  switch (k) {
    case DualKind::alpha: return "alpha";
    case DualKind::beta: return "beta";
    case DualKind::gamma: return "gamma";
  }
  return "?";
}

const char* verdict_name(Verdict v, bool membership) {
  switch (v) {
    case Verdict::satisfied:
      return membership ? "consistent-at-truncation" : "satisfied-at-truncation";
    case Verdict::violated:
      return "violated-growth";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

SpaceTag parse_space_tag(std::string_view text) {
  if (text == "linf") return SpaceTag::linf;
  if (text == "c0") return SpaceTag::c0;
  if (text == "c") return SpaceTag::c;
  throw ParseError("unknown space '" + std::string(text) + "' (expected linf, c0, or c)", "space");
}

DualKind parse_dual_kind(std::string_view text) {
  if (text == "alpha") return DualKind::alpha;
  if (text == "beta") return DualKind::beta;
  if (text == "gamma") return DualKind::gamma;
  throw ParseError("unknown dual kind '" + std::string(text) + "' (expected alpha, beta, or gamma)",
                   "kind");
}

}  // namespace lfrac
