#pragma once

#include <string>
#include <vector>

#include "lensurg/diagram.hpp"
#include "lensurg/lens.hpp"

namespace lensurg {

/// Parameters of the exceptional Legendrian torus knots T(s, -(sn-1)):
/// k + l = n - 2 zigzags on the (-n)-framed unknot and
/// p_stab + q_stab = s - 1 (with q_stab >= 1) on the (-(s+1))-framed one.
struct FamilyParams {
  long long n = 2;
  long long s = 2;
  long long k = 0;
  long long l = 0;
  long long p_stab = 0;
  long long q_stab = 1;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws DomainError unless the parameters satisfy the family constraints.
void check_params(const FamilyParams& fp);

/// Every admissible (k, l, p_stab, q_stab) for the given n, s >= 2.
std::vector<FamilyParams> family_params(long long n, long long s);

/// ns^2 - s + 1.
Integer lens_order(long long n, long long s);

/// Legendrian torus knot T(s, -(sn-1)) in (S^3, xi_st) with maximal tb.
struct StandardRealization {
  long long tb = 0;
  long long rot = 0;
};

/// All 2(n-1) maximal-tb realizations (n-1 stabilized unknots for s = 1).
std::vector<StandardRealization> standard_realizations(long long n, long long s);

/// One-component diagram: Legendrian surgery on a standard realization.
SurgeryDiagram standard_diagram(long long n, long long s, long long rot);

/// Contact surgery diagram of an overtwisted S^3 containing the exceptional
/// realization as its distinguished knot "L". Components, in order:
/// mu1, mu2 (contact +1), nu1..nu{s-1}, alpha, beta (contact -1).
SurgeryDiagram exceptional_diagram(const FamilyParams& fp);

/// Closed-form values for an exceptional diagram.
struct ExceptionalExpectations {
  long long chi = 0;
  long long sigma = 0;
  Integer det_m;
  Integer det_m0;
  Rational c_squared;
  Rational d3;
  Integer tb;
  /// ns^2 - s + 1
  Integer order;
  /// rot(L) after surgery, reduced mod order.
  Integer rot_mod;
  /// Euler class residue, as a multiple of the meridian of L.
  Integer euler;
};

ExceptionalExpectations exceptional_expectations(const FamilyParams& fp);

struct CensusCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// One tight structure on L(ns^2 - s + 1, s^2), obtained by Legendrian
/// surgery on a standard realization.
struct StandardEntry {
  long long rot = 0;
  Rational d3;
  Integer residue;
};

/// One tight structure from an exceptional realization.
struct ExceptionalEntry {
  FamilyParams params;
  Rational d3;
  Integer residue;
};

struct TightStructureCensus {
  LensSpace lens;
  std::vector<StandardEntry> standard;
  std::vector<ExceptionalEntry> exceptional;
  Integer expected_count;
  std::vector<CensusCheck> checks;

  bool ok() const;
};

/// All structures obtained from standard and exceptional realizations, with
/// their Euler class residues, checked against the tight count.
TightStructureCensus census(long long n, long long s);

struct DistinctnessBounds {
  Integer e_min;
  Integer e_max;
  std::vector<CensusCheck> checks;

  bool ok() const;
};

/// Integer bounds on the exceptional Euler numbers and the inequalities
/// separating them from each other and from the standard ones mod p.
DistinctnessBounds distinctness_bounds(long long n, long long s);

}  // namespace lensurg
