#include "lensurg/invariants.hpp"

namespace lensurg {

using nlohmann::json;

namespace {

RatVector solve_or_nontorsion(const IntMatrix& m, const IntVector& b) {
  try {
    return solve(m, b);
  } catch (const SingularMatrixError&) {
    throw NonTorsionError("linking matrix is singular; the Euler class is not torsion");
  }
}

Integer nonsingular_det(const IntMatrix& m) {
  Integer dm = det(m);
  if (dm == 0) throw NonTorsionError("linking matrix is singular");
  return dm;
}

void require_d3_precondition(const SurgeryDiagram& d) {
  for (const auto& c : d.components) {
    if (c.contact_coeff == 1 && c.tb == 0)
      throw PreconditionError("d3-precondition: (+1)-component '" + c.id + "' has tb = 0");
  }
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational acc = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) acc += Rational(a(i)) * b(i);
  return acc;
}

Rational c_squared_of(const IntMatrix& m, const IntVector& rot) {
  // x^t M x = x^t rot
  return dot(rot, solve_or_nontorsion(m, rot));
}

IntVector unit_vector(Eigen::Index n, Eigen::Index i) {
  IntVector e = IntVector::Constant(n, Integer(0));
  e(i) = 1;
  return e;
}

// Multiplier g with [meridian] = g * (Smith generator), in a cyclic H1.
Integer meridian_coordinate(const Cokernel& coker, Eigen::Index n, Eigen::Index i) {
  return coker.classify(unit_vector(n, i)).coords.front();
}

std::optional<Integer> residue_against(const Integer& coord, const Integer& g, const Integer& order) {
  if (order == 0) {
    if (g == 1) return coord;
    if (g == -1) return Integer(-coord);
    return std::nullopt;
  }
  if (order == 1) return Integer(0);
  if (gcd(g, order) != 1) return std::nullopt;
  return mod_floor(Integer(coord * mod_inverse(g, order)), order);
}

}  // namespace

Rational c_squared(const SurgeryDiagram& d) { return c_squared_of(linking_matrix(d), d.rot_vector()); }

Rational d3_from_parts(const Rational& c2, long long sigma, long long chi, long long q_plus) {
  return (c2 - Rational(3 * sigma) - Rational(2 * chi)) / 4 + Rational(q_plus);
}

Rational d3(const SurgeryDiagram& d) {
  require_d3_precondition(d);
  const IntMatrix m = linking_matrix(d);
  const Rational c2 = c_squared_of(m, d.rot_vector());
  const auto chi = static_cast<long long>(d.size()) + 1;
  return d3_from_parts(c2, static_cast<long long>(signature(m)), chi, d.q_plus());
}

Rational tb_surgered(const SurgeryDiagram& d) {
  if (!d.knot) throw MissingKnotError("tb_surgered needs a distinguished knot");
  const Integer dm = nonsingular_det(linking_matrix(d));
  return Rational(d.knot->tb0) + make_rational(det(extended_matrix(d)), dm);
}

Rational rot_surgered(const SurgeryDiagram& d) {
  if (!d.knot) throw MissingKnotError("rot_surgered needs a distinguished knot");
  const IntVector lk = d.lk_vector();
  const RatVector y = solve_or_nontorsion(linking_matrix(d), lk);
  return Rational(d.knot->rot0) - dot(d.rot_vector(), y);
}

EulerClass euler_class(const SurgeryDiagram& d) {
  const IntMatrix m = linking_matrix(d);
  const Cokernel coker(m);
  EulerClass out;
  out.smith = coker.classify(d.rot_vector());
  if (!coker.is_cyclic()) return out;

  const Integer& order = coker.orders().front();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const auto r = residue_against(out.smith.coords.front(), meridian_coordinate(coker, m.rows(), i), order);
    if (r) {
      out.residue = *r;
      out.generator = d.components[static_cast<std::size_t>(i)].id;
      break;
    }
  }
  return out;
}

Integer euler_residue(const SurgeryDiagram& d, const std::string& generator_id) {
  const IntMatrix m = linking_matrix(d);
  const Cokernel coker(m);
  if (!coker.is_cyclic()) throw std::domain_error("euler_residue: H1 is not cyclic");
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    if (d.components[i].id != generator_id) continue;
    const auto idx = static_cast<Eigen::Index>(i);
    const auto r = residue_against(coker.classify(d.rot_vector()).coords.front(),
                                   meridian_coordinate(coker, m.rows(), idx), coker.orders().front());
    if (!r) throw std::domain_error("euler_residue: meridian of '" + generator_id + "' does not generate H1");
    return *r;
  }
  throw std::invalid_argument("euler_residue: no component '" + generator_id + "'");
}

std::optional<std::string> InvariantReport::failure() const {
  for (const char* field : {"c_squared", "d3"}) {
    const auto it = absent.find(field);
    if (it == absent.end()) continue;
    return it->second.rfind("d3-precondition", 0) == 0 ? std::string("d3-precondition") : std::string("non-torsion");
  }
  return std::nullopt;
}

InvariantReport report(const SurgeryDiagram& d) {
  const auto violations = validate(d);
  if (!is_valid(violations)) throw ValidationError("invalid diagram", violations);

  const IntMatrix m = linking_matrix(d);
  InvariantReport r;
  r.chi = static_cast<long long>(d.size()) + 1;
  r.sigma = static_cast<long long>(signature(m));
  r.det_m = det(m);
  r.q_plus = d.q_plus();
  r.euler = euler_class(d);
  r.h1 = r.euler.smith.orders;

  if (r.det_m == 0) {
    r.absent["c_squared"] = "non-torsion: linking matrix is singular";
    r.absent["d3"] = "non-torsion: linking matrix is singular";
    return r;
  }
  r.c_squared = c_squared_of(m, d.rot_vector());
  try {
    require_d3_precondition(d);
    r.d3 = d3_from_parts(*r.c_squared, r.sigma, r.chi, r.q_plus);
  } catch (const PreconditionError& e) {
    r.absent["d3"] = e.what();
  }
  return r;
}

namespace {

json integer_to_json(const Integer& z) {
  if (fits_int64(z)) return json(static_cast<std::int64_t>(z));
  return json(z.str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json integers_to_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(integer_to_json(z));
  return a;
}

std::vector<Integer> integers_from_json(const json& j) {
  std::vector<Integer> v;
  for (const auto& e : j) v.push_back(integer_from_json(e));
  return v;
}

}  // namespace

json report_to_json(const InvariantReport& r) {
  json j;
  j["chi"] = r.chi;
  j["sigma"] = r.sigma;
  j["detM"] = integer_to_json(r.det_m);
  j["q_plus"] = r.q_plus;
  j["c_squared"] = r.c_squared ? json(to_string(*r.c_squared)) : json(nullptr);
  j["d3"] = r.d3 ? json(to_string(*r.d3)) : json(nullptr);
  j["h1"] = integers_to_json(r.h1);
  json e;
  e["orders"] = integers_to_json(r.euler.smith.orders);
  e["coords"] = integers_to_json(r.euler.smith.coords);
  e["residue"] = r.euler.residue ? integer_to_json(*r.euler.residue) : json(nullptr);
  e["generator"] = r.euler.generator ? json(*r.euler.generator) : json(nullptr);
  j["euler_class"] = e;
  j["absent"] = r.absent;
  return j;
}

InvariantReport report_from_json(const json& j) {
  InvariantReport r;
  r.chi = j.at("chi").get<long long>();
  r.sigma = j.at("sigma").get<long long>();
  r.det_m = integer_from_json(j.at("detM"));
  r.q_plus = j.at("q_plus").get<long long>();
  if (!j.at("c_squared").is_null()) r.c_squared = parse_rational(j.at("c_squared").get<std::string>());
  if (!j.at("d3").is_null()) r.d3 = parse_rational(j.at("d3").get<std::string>());
  r.h1 = integers_from_json(j.at("h1"));
  const json& e = j.at("euler_class");
  r.euler.smith.orders = integers_from_json(e.at("orders"));
  r.euler.smith.coords = integers_from_json(e.at("coords"));
  if (!e.at("residue").is_null()) r.euler.residue = integer_from_json(e.at("residue"));
  if (!e.at("generator").is_null()) r.euler.generator = e.at("generator").get<std::string>();
  r.absent = j.at("absent").get<std::map<std::string, std::string>>();
  return r;
}

bool operator==(const InvariantReport& a, const InvariantReport& b) {
  return a.chi == b.chi && a.sigma == b.sigma && a.det_m == b.det_m && a.q_plus == b.q_plus &&
         a.c_squared == b.c_squared && a.d3 == b.d3 && a.h1 == b.h1 && a.euler.smith == b.euler.smith &&
         a.euler.residue == b.euler.residue && a.euler.generator == b.euler.generator && a.absent == b.absent;
}

}  // namespace lensurg
