#include "lensurg/diagram.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lensurg {

using nlohmann::json;

void SurgeryDiagram::set_linking(const std::string& a, const std::string& b, long long value) {
  linking[{a, b}] = value;
  linking[{b, a}] = value;
}

long long SurgeryDiagram::q_plus() const {
  long long q = 0;
  for (const auto& c : components)
    if (c.contact_coeff == 1) ++q;
  return q;
}

IntVector SurgeryDiagram::rot_vector() const {
  IntVector v(static_cast<Eigen::Index>(components.size()));
  for (std::size_t i = 0; i < components.size(); ++i) v(static_cast<Eigen::Index>(i)) = components[i].rot;
  return v;
}

IntVector SurgeryDiagram::lk_vector() const {
  if (!knot) throw MissingKnotError("diagram has no distinguished knot");
  IntVector v(static_cast<Eigen::Index>(components.size()));
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto it = knot->lk.find(components[i].id);
    if (it == knot->lk.end()) {
      throw ValidationError("knot linking number missing",
                            {{"knot-lk-missing", "lk(" + knot->id + ", " + components[i].id + ") is not given"}});
    }
    v(static_cast<Eigen::Index>(i)) = it->second;
  }
  return v;
}

std::vector<Violation> validate(const SurgeryDiagram& d) {
  std::vector<Violation> out;
  std::set<std::string> ids;

  for (const auto& c : d.components) {
    if (!ids.insert(c.id).second) out.push_back({"duplicate-id", "component id '" + c.id + "' repeats"});
    if (c.contact_coeff != 1 && c.contact_coeff != -1) {
      out.push_back({"contact-coeff", "component '" + c.id + "' has contact coefficient " +
                                          std::to_string(c.contact_coeff) + ", expected +1 or -1"});
    }
    if (c.contact_coeff == 1 && c.tb == 0) {
      out.push_back({"d3-precondition",
                     "(+1)-component '" + c.id + "' has tb = 0; the d3 formula does not apply", Severity::warning});
    }
  }

  for (const auto& [key, value] : d.linking) {
    const auto& [a, b] = key;
    if (a == b) {
      out.push_back({"linking-self", "self-linking entry for '" + a + "'"});
      continue;
    }
    if (!ids.count(a) || !ids.count(b)) {
      out.push_back({"linking-unknown-id", "linking entry (" + a + ", " + b + ") names an unknown component"});
      continue;
    }
    const auto rev = d.linking.find({b, a});
    if (rev != d.linking.end() && rev->second != value && a < b) {
      out.push_back({"linking-symmetry", "lk(" + a + ", " + b + ") = " + std::to_string(value) + " but lk(" + b +
                                             ", " + a + ") = " + std::to_string(rev->second)});
    }
  }
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    for (std::size_t j = i + 1; j < d.components.size(); ++j) {
      const auto& a = d.components[i].id;
      const auto& b = d.components[j].id;
      if (a == b) continue;
      if (!d.linking.count({a, b}) && !d.linking.count({b, a}))
        out.push_back({"linking-missing", "no linking number for (" + a + ", " + b + ")"});
    }
  }

  if (d.knot) {
    if (ids.count(d.knot->id)) out.push_back({"knot-id-collision", "knot id '" + d.knot->id + "' is also a component id"});
    for (const auto& c : d.components)
      if (!d.knot->lk.count(c.id)) out.push_back({"knot-lk-missing", "knot has no lk with '" + c.id + "'"});
    for (const auto& [id, value] : d.knot->lk)
      if (!ids.count(id)) out.push_back({"knot-lk-unknown-id", "knot lk names unknown component '" + id + "'"});
  }
  return out;
}

bool is_valid(const std::vector<Violation>& violations) {
  for (const auto& v : violations)
    if (v.severity == Severity::error) return false;
  return true;
}

namespace {

long long lookup_linking(const SurgeryDiagram& d, const std::string& a, const std::string& b) {
  const auto ab = d.linking.find({a, b});
  const auto ba = d.linking.find({b, a});
  if (ab == d.linking.end() && ba == d.linking.end())
    throw ValidationError("missing linking number", {{"linking-missing", "no linking number for (" + a + ", " + b + ")"}});
  if (ab != d.linking.end() && ba != d.linking.end() && ab->second != ba->second)
    throw ValidationError("asymmetric linking data", {{"linking-symmetry", "lk(" + a + ", " + b + ") is not symmetric"}});
  return ab != d.linking.end() ? ab->second : ba->second;
}

}  // namespace

IntMatrix linking_matrix(const SurgeryDiagram& d) {
  const auto n = static_cast<Eigen::Index>(d.components.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = d.components[static_cast<std::size_t>(i)].framing();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const long long v =
          lookup_linking(d, d.components[static_cast<std::size_t>(i)].id, d.components[static_cast<std::size_t>(j)].id);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

IntMatrix extended_matrix(const SurgeryDiagram& d) {
  if (!d.knot) throw MissingKnotError("extended matrix needs a distinguished knot");
  const IntVector lk = d.lk_vector();
  const auto n = lk.rows();
  IntMatrix m0(n + 1, n + 1);
  m0(0, 0) = 0;
  m0.block(0, 1, 1, n) = lk.transpose();
  m0.block(1, 0, n, 1) = lk;
  m0.bottomRightCorner(n, n) = linking_matrix(d);
  return m0;
}

SurgeryDiagram promote_knot(const SurgeryDiagram& d, int contact_coeff) {
  if (!d.knot) throw MissingKnotError("no distinguished knot to promote");
  const auto& k = *d.knot;
  SurgeryDiagram out;
  out.components.push_back({k.id, k.tb0, k.rot0, contact_coeff});
  out.components.insert(out.components.end(), d.components.begin(), d.components.end());
  out.linking = d.linking;
  for (const auto& c : d.components) {
    const auto it = k.lk.find(c.id);
    if (it == k.lk.end())
      throw ValidationError("knot linking number missing", {{"knot-lk-missing", "knot has no lk with '" + c.id + "'"}});
    out.set_linking(k.id, c.id, it->second);
  }
  return out;
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

template <typename T>
T require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  const json& v = obj.at(key);
  if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
  } else {
    if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
  }
  return v.get<T>();
}

}  // namespace

SurgeryDiagram diagram_from_json(const json& j) {
  reject_unknown(j, {"components", "linking", "knot"}, "diagram");
  SurgeryDiagram d;

  if (j.contains("components")) {
    if (!j["components"].is_array()) throw ParseError("diagram: 'components' must be an array");
    std::size_t index = 0;
    for (const auto& c : j["components"]) {
      const std::string where = "components[" + std::to_string(index++) + "]";
      reject_unknown(c, {"id", "tb", "rot", "coeff"}, where);
      d.components.push_back({require<std::string>(c, "id", where), require<long long>(c, "tb", where),
                              require<long long>(c, "rot", where), require<int>(c, "coeff", where)});
    }
  }

  if (j.contains("linking")) {
    if (!j["linking"].is_array()) throw ParseError("diagram: 'linking' must be an array");
    std::size_t index = 0;
    for (const auto& e : j["linking"]) {
      const std::string where = "linking[" + std::to_string(index++) + "]";
      reject_unknown(e, {"a", "b", "lk"}, where);
      const auto a = require<std::string>(e, "a", where);
      const auto b = require<std::string>(e, "b", where);
      if (d.linking.count({a, b}))
        throw ParseError(where + ": pair (" + a + ", " + b + ") appears more than once");
      d.set_linking(a, b, require<long long>(e, "lk", where));
    }
  }

  if (j.contains("knot") && !j["knot"].is_null()) {
    const json& k = j["knot"];
    reject_unknown(k, {"id", "tb0", "rot0", "lk"}, "knot");
    DistinguishedKnot knot{require<std::string>(k, "id", "knot"), require<long long>(k, "tb0", "knot"),
                           require<long long>(k, "rot0", "knot"), {}};
    if (!k.contains("lk") || !k["lk"].is_object()) throw ParseError("knot: 'lk' must be an object");
    for (const auto& [id, value] : k["lk"].items()) {
      if (!value.is_number_integer()) throw ParseError("knot: lk['" + id + "'] must be an integer");
      knot.lk[id] = value.get<long long>();
    }
    d.knot = std::move(knot);
  }
  return d;
}

json diagram_to_json(const SurgeryDiagram& d) {
  json j;
  j["components"] = json::array();
  for (const auto& c : d.components)
    j["components"].push_back({{"id", c.id}, {"tb", c.tb}, {"rot", c.rot}, {"coeff", c.contact_coeff}});
  j["linking"] = json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i)
    for (std::size_t k = i + 1; k < d.components.size(); ++k) {
      const auto& a = d.components[i].id;
      const auto& b = d.components[k].id;
      j["linking"].push_back({{"a", a}, {"b", b}, {"lk", lookup_linking(d, a, b)}});
    }
  if (d.knot) {
    json lk = json::object();
    for (const auto& c : d.components) {
      const auto it = d.knot->lk.find(c.id);
      if (it != d.knot->lk.end()) lk[c.id] = it->second;
    }
    j["knot"] = {{"id", d.knot->id}, {"tb0", d.knot->tb0}, {"rot0", d.knot->rot0}, {"lk", lk}};
  }
  return j;
}

SurgeryDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return diagram_from_json(j);
}

void save_diagram(const SurgeryDiagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << diagram_to_json(d).dump(2) << '\n';
}

}  // namespace lensurg
