#include "qaw/familyspec.hpp"

#include <fstream>
#include <sstream>

namespace qaw {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& key) {
  if (!j.contains(key)) throw SpecError("missing field \"" + key + "\"");
  const json& v = j.at(key);
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::exception& e) {
    throw SpecError("field \"" + key + "\": " + e.what());
  }
  throw SpecError("field \"" + key + "\" must be a \"num/den\" string or integer");
}

Rational rational_entry(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::exception& e) {
    throw SpecError(where + ": " + e.what());
  }
  throw SpecError(where + " must be a \"num/den\" string or integer");
}

std::vector<Rational> rational_array(const json& j, const std::string& key) {
  if (!j.contains(key)) throw SpecError("missing field \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_array()) throw SpecError("field \"" + key + "\" must be an array");
  std::vector<Rational> out;
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(rational_entry(v[i], "field \"" + key + "\"[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

FamilySpec parse_family_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecError("family spec must be a JSON object");
  QParam qp = [&] {
    const Rational t = rational_field(j, "t");
    try {
      return QParam(t);
    } catch (const std::domain_error& e) {
      throw SpecError(std::string("field \"t\": ") + e.what());
    }
  }();
  if (!j.contains("type") || !j.at("type").is_string())
    throw SpecError("missing or non-string field \"type\"");
  const std::string type = j.at("type").get<std::string>();

  if (type == "recurrence") {
    std::vector<Rational> B = rational_array(j, "B");
    std::vector<Rational> C = rational_array(j, "C");
    if (B.empty()) throw SpecError("field \"B\" must be non-empty");
    if (C.size() + 1 != B.size())
      throw SpecError("field \"C\" must have one entry fewer than \"B\"");
    return {qp, RecurrencePair(std::move(B), std::move(C))};
  }
  if (type == "askey-wilson") {
    std::vector<Rational> a = rational_array(j, "a");
    if (a.size() != 4) throw SpecError("field \"a\" must have exactly 4 entries");
    return {qp, AWParams({a[0], a[1], a[2], a[3]}, qp)};
  }
  if (type == "corollary") {
    if (!j.contains("case") || !j.at("case").is_string())
      throw SpecError("missing or non-string field \"case\"");
    CorollaryInput in;
    in.case_name = j.at("case").get<std::string>();
    if (in.case_name != "I" && in.case_name != "II-a" && in.case_name != "II-b")
      throw SpecError("field \"case\" must be \"I\", \"II-a\" or \"II-b\"");
    in.B0 = rational_field(j, "B0");
    in.B1 = rational_field(j, "B1");
    if (j.contains("k")) {
      if (!j.at("k").is_number_integer()) throw SpecError("field \"k\" must be an integer");
      in.k = j.at("k").get<int>();
      if (in.k != 1 && in.k != -1) throw SpecError("field \"k\" must be 1 or -1");
    }
    if (j.contains("C1")) in.C1 = rational_field(j, "C1");
    return {qp, std::move(in)};
  }
  if (type == "pearson") {
    XPoly phi(rational_array(j, "phi"));
    XPoly psi(rational_array(j, "psi"));
    try {
      return {qp, PearsonPair(std::move(phi), std::move(psi))};
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
  }
  throw SpecError("unknown family type \"" + type + "\"");
}

FamilySpec load_family_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open family spec file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SpecError("invalid JSON in " + path + ": " + e.what());
  }
  return parse_family_spec(j);
}

nlohmann::json xpoly_to_json(const XPoly& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_string(p.coeff(i)));
  if (arr.empty()) arr.push_back("0");
  return arr;
}

XPoly xpoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SpecError("polynomial must be a JSON array");
  std::vector<Rational> c;
  for (size_t i = 0; i < j.size(); ++i)
    c.push_back(rational_entry(j[i], "polynomial[" + std::to_string(i) + "]"));
  return XPoly(std::move(c));
}

}  // namespace qaw
