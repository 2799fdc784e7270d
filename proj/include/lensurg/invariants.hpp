#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "lensurg/diagram.hpp"
#include "lensurg/exactla.hpp"

namespace lensurg {

/// The linking matrix is singular, so the Euler class of the surgered
/// structure is not torsion and c^2, d3 are undefined.
struct NonTorsionError : SingularMatrixError {
  using SingularMatrixError::SingularMatrixError;
};

/// A (+1)-surgery along a component with tb = 0.
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

/// x^t M x where M x = rot.
Rational c_squared(const SurgeryDiagram& d);

/// (c^2 - 3 sigma - 2 chi) / 4 + q_plus, from its ingredients.
Rational d3_from_parts(const Rational& c2, long long sigma, long long chi, long long q_plus);

Rational d3(const SurgeryDiagram& d);

/// Thurston-Bennequin invariant of the distinguished knot after surgery:
/// tb0 + det M0 / det M.
Rational tb_surgered(const SurgeryDiagram& d);

/// Rotation number of the distinguished knot after surgery:
/// rot0 - <rot, M^-1 lk>.
Rational rot_surgered(const SurgeryDiagram& d);

/// Poincare dual of the Euler class: the rot vector read in H1 of the
/// surgered manifold, i.e. in coker(M).
///
/// When H1 is cyclic the class is also given as a single residue times the
/// meridian of `generator`, the first component (in diagram order) whose
/// meridian generates H1.
struct EulerClass {
  CokernelClass smith;
  std::optional<Integer> residue;
  std::optional<std::string> generator;
};

EulerClass euler_class(const SurgeryDiagram& d);

/// Residue of the Euler class as a multiple of the meridian of a chosen
/// component. Requires H1 cyclic and that meridian to generate it.
Integer euler_residue(const SurgeryDiagram& d, const std::string& generator_id);

/// Every invariant of a diagram. Fields whose preconditions fail are left
/// empty and the reason is recorded in `absent` under the field name.
struct InvariantReport {
  long long chi = 1;
  long long sigma = 0;
  Integer det_m = 1;
  long long q_plus = 0;
  std::optional<Rational> c_squared;
  std::optional<Rational> d3;
  std::vector<Integer> h1;
  EulerClass euler;
  std::map<std::string, std::string> absent;

  /// Failure class of the first absent field, if any: "non-torsion" or "d3-precondition".
  std::optional<std::string> failure() const;
};

InvariantReport report(const SurgeryDiagram& d);

nlohmann::json report_to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::json& j);
bool operator==(const InvariantReport& a, const InvariantReport& b);

}  // namespace lensurg
