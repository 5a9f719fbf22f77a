#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "qaw/awfamily.hpp"
#include "qaw/opseq.hpp"
#include "qaw/qparam.hpp"

namespace qaw {

/// Input-file problem; the message names the offending field.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorollaryInput {
  std::string case_name;  // "I", "II-a", "II-b"
  Rational B0, B1;
  int k = 1;
  std::optional<Rational> C1;
};

struct FamilySpec {
  QParam qp;
  std::variant<RecurrencePair, AWParams, CorollaryInput, PearsonPair> family;
};

FamilySpec parse_family_spec(const nlohmann::json& j);
FamilySpec load_family_spec(const std::string& path);

nlohmann::json xpoly_to_json(const XPoly& p);
XPoly xpoly_from_json(const nlohmann::json& j);

}  // namespace qaw
