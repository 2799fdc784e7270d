#include "lensurg/families.hpp"

#include <algorithm>
#include <map>

#include "lensurg/invariants.hpp"

namespace lensurg {

namespace {

std::string params_string(const FamilyParams& fp) {
  return "(n=" + std::to_string(fp.n) + ", s=" + std::to_string(fp.s) + ", k=" + std::to_string(fp.k) +
         ", l=" + std::to_string(fp.l) + ", pstab=" + std::to_string(fp.p_stab) +
         ", qstab=" + std::to_string(fp.q_stab) + ")";
}

void check_ns(long long n, long long s, long long min_s) {
  if (n < 2 || s < min_s) {
    throw DomainError("need n >= 2 and s >= " + std::to_string(min_s) + ", got n = " + std::to_string(n) +
                      ", s = " + std::to_string(s));
  }
}

long long max_tb(long long n, long long s) { return -s * (s * n - 1); }

// e(k, l, p, q) before reduction.
Integer euler_number(const FamilyParams& fp) {
  return Integer((fp.p_stab - fp.q_stab + 1) * fp.n * fp.s + (fp.l - fp.k) * fp.s);
}

CensusCheck check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

}  // namespace

void check_params(const FamilyParams& fp) {
  check_ns(fp.n, fp.s, 2);
  if (fp.k < 0 || fp.l < 0 || fp.k + fp.l != fp.n - 2)
    throw DomainError("need k, l >= 0 with k + l = n - 2: " + params_string(fp));
  if (fp.p_stab < 0 || fp.q_stab < 1 || fp.p_stab + fp.q_stab != fp.s - 1)
    throw DomainError("need pstab >= 0, qstab >= 1 with pstab + qstab = s - 1: " + params_string(fp));
}

std::vector<FamilyParams> family_params(long long n, long long s) {
  check_ns(n, s, 2);
  std::vector<FamilyParams> out;
  for (long long k = 0; k <= n - 2; ++k)
    for (long long p = 0; p <= s - 2; ++p) out.push_back({n, s, k, n - 2 - k, p, s - 1 - p});
  return out;
}

Integer lens_order(long long n, long long s) { return Integer(n * s * s - s + 1); }

std::vector<StandardRealization> standard_realizations(long long n, long long s) {
  check_ns(n, s, 1);
  std::vector<StandardRealization> out;
  const long long tb = max_tb(n, s);
  if (s == 1) {
    for (long long r = -n + 2; r <= n - 2; r += 2) out.push_back({tb, r});
    return out;
  }
  out.push_back({tb, -(n - 1) * s + 1});
  for (long long j = -(n - 3); j <= n - 3; j += 2) {
    out.push_back({tb, j * s - 1});
    out.push_back({tb, j * s + 1});
  }
  out.push_back({tb, (n - 1) * s - 1});
  return out;
}

SurgeryDiagram standard_diagram(long long n, long long s, long long rot) {
  check_ns(n, s, 1);
  SurgeryDiagram d;
  d.components.push_back({"K", max_tb(n, s), rot, -1});
  return d;
}

SurgeryDiagram exceptional_diagram(const FamilyParams& fp) {
  check_params(fp);
  SurgeryDiagram d;
  std::vector<std::string> chain;
  d.components.push_back({"mu1", -1, 0, 1});
  d.components.push_back({"mu2", -1, 0, 1});
  for (long long i = 1; i <= fp.s - 1; ++i) {
    chain.push_back("nu" + std::to_string(i));
    d.components.push_back({chain.back(), -2, 1, -1});
  }
  d.components.push_back({"alpha", -fp.s, fp.q_stab - fp.p_stab, -1});
  d.components.push_back({"beta", -(fp.n - 1), fp.l - fp.k, -1});

  d.set_linking("mu1", "mu2", -1);
  for (const char* mu : {"mu1", "mu2"}) {
    for (const auto& nu : chain) d.set_linking(mu, nu, -1);
    d.set_linking(mu, "alpha", -1);
    d.set_linking(mu, "beta", 0);
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) d.set_linking(chain[i], chain[j], -2);
    d.set_linking(chain[i], "alpha", -1);
    d.set_linking(chain[i], "beta", 0);
  }
  d.set_linking("alpha", "beta", -1);

  DistinguishedKnot knot{"L", -1, 0, {}};
  for (const auto& c : d.components) knot.lk[c.id] = c.id == "beta" ? 0 : -1;
  d.knot = std::move(knot);
  return d;
}

ExceptionalExpectations exceptional_expectations(const FamilyParams& fp) {
  check_params(fp);
  const long long n = fp.n, s = fp.s, q = fp.q_stab;
  const long long sign = (s - 1) % 2 == 0 ? 1 : -1;
  ExceptionalExpectations e;
  e.chi = 4 + s;
  e.sigma = 1 - s;
  e.det_m = sign;
  e.det_m0 = Integer(sign * (1 - s * (s * n - 1)));
  e.c_squared = Rational(4 * n * q * q + 4 * q * (fp.k - fp.l) - s + 1);
  e.d3 = Rational(n * q * q + q * (fp.k - fp.l)) - make_rational(1, 2);
  e.tb = max_tb(n, s);
  e.order = lens_order(n, s);
  e.euler = mod_floor(euler_number(fp), e.order);
  e.rot_mod = e.euler;
  return e;
}

bool TightStructureCensus::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CensusCheck& c) { return c.passed; });
}

bool DistinctnessBounds::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CensusCheck& c) { return c.passed; });
}

TightStructureCensus census(long long n, long long s) {
  check_ns(n, s, 1);
  const Integer p = lens_order(n, s);
  TightStructureCensus c{LensSpace(p, Integer(s * s)), {}, {}, 0, {}};
  c.expected_count = tight_count(c.lens);

  for (const auto& r : standard_realizations(n, s)) {
    const SurgeryDiagram d = standard_diagram(n, s, r.rot);
    c.standard.push_back({r.rot, d3(d), *euler_class(d).residue});
  }
  if (s >= 2) {
    for (const auto& fp : family_params(n, s)) {
      const Rational lens_d3 = d3(promote_knot(exceptional_diagram(fp)));
      c.exceptional.push_back({fp, lens_d3, exceptional_expectations(fp).euler});
    }
  }

  const long long std_expected = s == 1 ? n - 1 : 2 * (n - 1);
  c.checks.push_back(check("standard-count", static_cast<long long>(c.standard.size()) == std_expected,
                           std::to_string(c.standard.size()) + " of " + std::to_string(std_expected)));
  const long long exc_expected = (s - 1) * (n - 1);
  c.checks.push_back(check("exceptional-count", static_cast<long long>(c.exceptional.size()) == exc_expected,
                           std::to_string(c.exceptional.size()) + " of " + std::to_string(exc_expected)));
  const Integer total(c.standard.size() + c.exceptional.size());
  c.checks.push_back(check("tight-count", total == c.expected_count,
                           total.str() + " structures, tight count " + c.expected_count.str()));

  std::map<Integer, std::string> seen;
  std::string collisions;
  auto record = [&](const Integer& residue, const std::string& label) {
    const auto [it, fresh] = seen.emplace(residue, label);
    if (!fresh) {
      if (!collisions.empty()) collisions += "; ";
      collisions += it->second + " and " + label + " share residue " + residue.str();
    }
  };
  for (const auto& e : c.standard) record(e.residue, "standard rot=" + std::to_string(e.rot));
  for (const auto& e : c.exceptional) record(e.residue, "exceptional " + params_string(e.params));
  c.checks.push_back(check("distinct-residues", collisions.empty(), collisions));

  if (s >= 2) {
    const auto bounds = distinctness_bounds(n, s);
    std::string failed;
    for (const auto& b : bounds.checks)
      if (!b.passed) failed += (failed.empty() ? "" : ", ") + b.name;
    c.checks.push_back(check("distinctness-bounds", bounds.ok(), failed));
  }
  return c;
}

DistinctnessBounds distinctness_bounds(long long n, long long s) {
  check_ns(n, s, 2);
  const Integer p = lens_order(n, s);
  DistinctnessBounds b;
  b.e_min = Integer(-n * s * s + (n + 2) * s);
  b.e_max = Integer(n * s * s - (n + 2) * s);

  std::vector<Integer> values;
  for (const auto& fp : family_params(n, s)) values.push_back(euler_number(fp));

  const bool in_range = std::all_of(values.begin(), values.end(),
                                    [&](const Integer& e) { return b.e_min <= e && e <= b.e_max; });
  b.checks.push_back(check("integer-range", in_range, "e_min = " + b.e_min.str() + ", e_max = " + b.e_max.str()));

  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  b.checks.push_back(
      check("integer-distinct", std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()));

  b.checks.push_back(check("span", b.e_max - b.e_min < 2 * p));

  const Integer low = b.e_min + p;
  b.checks.push_back(check("lower-gap", low == (n + 1) * s + 1 && low > (n - 1) * s - 1,
                           "e_min + p = " + low.str()));

  const Integer high = Integer(-(n - 1) * s + 1) + p;
  b.checks.push_back(check("upper-gap", high == n * s * s - n * s + 2 && high > b.e_max,
                           "-(n-1)s + 1 + p = " + high.str()));

  bool congruent = true;
  for (const auto& e : values) {
    if (e < 0)
      congruent = congruent && mod_floor(Integer(e + p), Integer(s)) == 1;
    else
      congruent = congruent && e % s == 0;
  }
  b.checks.push_back(check("residues-mod-s", congruent));
  return b;
}

}  // namespace lensurg
