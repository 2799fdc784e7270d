#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lensurg/exactla.hpp"

namespace lensurg {

/// A Legendrian knot in (S^3, xi_st) carrying a contact (+1) or (-1) surgery.
struct LegendrianComponent {
  std::string id;
  long long tb = 0;
  long long rot = 0;
  int contact_coeff = -1;

  /// Topological surgery framing.
  long long framing() const { return tb + contact_coeff; }
};

/// A Legendrian knot that is not surgered; its invariants are measured
/// before surgery, lk against each surgered component.
struct DistinguishedKnot {
  std::string id;
  long long tb0 = 0;
  long long rot0 = 0;
  std::map<std::string, long long> lk;
};

/// Linking numbers keyed by ordered pairs of component ids. A well-formed
/// table holds both orders of every distinct pair with equal values.
using LinkingTable = std::map<std::pair<std::string, std::string>, long long>;

struct SurgeryDiagram {
  std::vector<LegendrianComponent> components;
  LinkingTable linking;
  std::optional<DistinguishedKnot> knot;

  /// Records lk(a, b) = lk(b, a) = value.
  void set_linking(const std::string& a, const std::string& b, long long value);

  std::size_t size() const { return components.size(); }
  /// Number of contact (+1) surgeries.
  long long q_plus() const;
  IntVector rot_vector() const;
  /// Knot linking numbers in component order; missing entries throw.
  IntVector lk_vector() const;
};

enum class Severity { error, warning };

struct Violation {
  std::string code;
  std::string detail;
  Severity severity = Severity::error;
};

struct ValidationError : std::invalid_argument {
  ValidationError(const std::string& what, std::vector<Violation> v)
      : std::invalid_argument(what), violations(std::move(v)) {}
  std::vector<Violation> violations;
};

struct MissingKnotError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed diagram file (bad JSON, wrong types, unknown fields, duplicate pairs).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All type-invariant violations, plus the non-fatal "d3-precondition"
/// warning when some (+1)-component has tb = 0.
std::vector<Violation> validate(const SurgeryDiagram& d);

/// True when validate() reports no errors (warnings allowed).
bool is_valid(const std::vector<Violation>& violations);

/// Diagonal: topological framings. Off-diagonal: pairwise linking numbers.
IntMatrix linking_matrix(const SurgeryDiagram& d);

/// Linking matrix bordered by the knot's lk vector in row/column 0, with a
/// zero corner entry.
IntMatrix extended_matrix(const SurgeryDiagram& d);

/// The diagram in which the distinguished knot becomes the first surgered
/// component (tb = tb0, rot = rot0) with the given contact coefficient.
SurgeryDiagram promote_knot(const SurgeryDiagram& d, int contact_coeff = -1);

SurgeryDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const SurgeryDiagram& d);
SurgeryDiagram load_diagram(const std::string& path);
void save_diagram(const SurgeryDiagram& d, const std::string& path);

}  // namespace lensurg
