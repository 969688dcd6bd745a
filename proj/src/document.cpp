#include "giz/document.hpp"

#include <json.hpp>

#include "giz/error.hpp"

namespace giz {
namespace {

using Json = nlohmann::ordered_json;

void require_keys(const Json& obj, const char* where,
                  std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known)
      throw ValidationError(std::string("unknown key \"") + item.key() + "\" in " + where);
  }
}

Rat rat_field(const Json& obj, const char* where, const char* key) {
  if (!obj.contains(key))
    throw ValidationError(std::string(where) + " is missing \"" + key + "\"");
  const Json& v = obj.at(key);
  if (!v.is_string())
    throw ValidationError(std::string(where) + " field \"" + key +
                          "\" must be a rational string like \"3/2\"");
  return parse_rat(v.get<std::string>());
}

std::vector<int> int_array(const Json& v, const char* what) {
  if (!v.is_array()) throw ValidationError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const Json& x : v) {
    if (!x.is_number_integer())
      throw ValidationError(std::string(what) + " must contain only integers");
    out.push_back(x.get<int>());
  }
  return out;
}

bool divisor_is_smooth(const ExtendedDivisor& d) {
  for (const Feather& f : d.feathers)
    if (!f.tail.empty()) return false;
  return true;
}

}  // namespace

ExtendedDivisor parse_surface_document(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("document must be a JSON object");
  require_keys(doc, "the document", {"weights", "feathers", "smooth", "condition_star"});
  if (!doc.contains("weights")) throw ValidationError("document is missing \"weights\"");

  ExtendedDivisor d;
  d.chain = int_array(doc.at("weights"), "\"weights\"");

  if (doc.contains("feathers")) {
    const Json& fs = doc.at("feathers");
    if (!fs.is_array()) throw ValidationError("\"feathers\" must be an array");
    for (const Json& fj : fs) {
      if (!fj.is_object()) throw ValidationError("each feather must be a JSON object");
      require_keys(fj, "a feather", {"component", "bridge", "tail", "point", "mother"});
      Feather f;
      if (!fj.contains("component") || !fj.at("component").is_number_integer())
        throw ValidationError("each feather needs an integer \"component\"");
      f.component = fj.at("component").get<int>();
      if (fj.contains("bridge")) {
        if (!fj.at("bridge").is_number_integer())
          throw ValidationError("feather \"bridge\" must be an integer");
        f.bridge = fj.at("bridge").get<int>();
      }
      if (fj.contains("tail")) f.tail = int_array(fj.at("tail"), "feather \"tail\"");
      if (!fj.contains("point") || !fj.at("point").is_object())
        throw ValidationError("each feather needs a \"point\" object");
      const Json& pt = fj.at("point");
      require_keys(pt, "a feather point", {"r", "theta"});
      Rat theta = rat_field(pt, "a feather point", "theta");
      if (theta < 0 || theta >= 1)
        throw ValidationError("feather point \"theta\" must lie in [0,1), got " + rat_str(theta));
      f.point = cstar(rat_field(pt, "a feather point", "r"), theta);
      if (fj.contains("mother")) {
        if (!fj.at("mother").is_number_integer())
          throw ValidationError("feather \"mother\" must be an integer");
        f.mother = fj.at("mother").get<int>();
      }
      d.feathers.push_back(std::move(f));
    }
  }

  validate(d);

  if (doc.contains("smooth")) {
    if (!doc.at("smooth").is_boolean())
      throw ValidationError("\"smooth\" must be a boolean");
    if (doc.at("smooth").get<bool>() != divisor_is_smooth(d))
      throw ValidationError("\"smooth\" contradicts the feather tails");
  }
  if (doc.contains("condition_star")) {
    if (!doc.at("condition_star").is_boolean())
      throw ValidationError("\"condition_star\" must be a boolean");
    if (doc.at("condition_star").get<bool>() != condition_star(d))
      throw ValidationError("\"condition_star\" contradicts the divisor");
  }
  return d;
}

std::string emit_surface_document(const ExtendedDivisor& d) {
  validate(d);
  Json doc = Json::object();
  doc["weights"] = d.chain;
  Json fs = Json::array();
  for (const Feather& f : d.feathers) {
    Json fj = Json::object();
    fj["component"] = f.component;
    fj["bridge"] = f.bridge;
    fj["tail"] = f.tail;
    fj["point"] = Json::object({{"r", rat_str(f.point.modulus)},
                                {"theta", rat_str(f.point.angle)}});
    if (f.mother) fj["mother"] = *f.mother;
    fs.push_back(std::move(fj));
  }
  doc["feathers"] = std::move(fs);
  doc["smooth"] = divisor_is_smooth(d);
  doc["condition_star"] = condition_star(d);
  return doc.dump(2) + "\n";
}

std::string export_dot(const ExtendedDivisor& d) {
  validate(d);
  std::string s = "graph divisor {\n  node [shape=box];\n";
  for (int i = 0; i <= d.n(); ++i)
    s += "  c" + std::to_string(i) + " [label=\"C_" + std::to_string(i) + " (" +
         std::to_string(d.chain[i]) + ")\"];\n";
  for (int i = 0; i + 1 <= d.n(); ++i)
    s += "  c" + std::to_string(i) + " -- c" + std::to_string(i + 1) + ";\n";
  for (std::size_t k = 0; k < d.feathers.size(); ++k) {
    const Feather& f = d.feathers[k];
    std::string base = "f" + std::to_string(k);
    s += "  " + base + "_0 [label=\"F_" + std::to_string(k) + " (" +
         std::to_string(f.bridge) + ")\"];\n";
    for (std::size_t t = 0; t < f.tail.size(); ++t)
      s += "  " + base + "_" + std::to_string(t + 1) + " [label=\"F_" + std::to_string(k) +
           " (" + std::to_string(f.tail[t]) + ")\"];\n";
    s += "  c" + std::to_string(f.component) + " -- " + base + "_0 [label=\"" +
         cstar_str(f.point) + "\"];\n";
    for (std::size_t t = 0; t < f.tail.size(); ++t)
      s += "  " + base + "_" + std::to_string(t) + " -- " + base + "_" +
           std::to_string(t + 1) + ";\n";
  }
  s += "}\n";
  return s;
}

}  // namespace giz
