#pragma once

// Cohomology dimensions of line bundles on a smooth cubic surface.
//
// h0 is computed by peeling off fixed lines: if D.l < 0 for a line l, then l is a
// fixed component of |D| and h0(D) = h0(D - l). The loop ends at D = 0 (h0 = 1), at
// a class of non-positive anticanonical degree (h0 = 0), or at a nef class N, where
// Kawamata-Viehweg gives h1(N) = h2(N) = 0 and hence h0 = chi(N).

#include "cubic/errors.hpp"
#include "cubic/lattice.hpp"

#include <optional>
#include <vector>

namespace cubic {

/// Riemann-Roch: chi(O_S(D)) = D.(D - K)/2 + 1.
template <typename Scalar>
Scalar euler_char(BasicDivisorClass<Scalar> const& d) {
  return (self_intersection(d) - canonical_pairing(d)) / 2 + 1;
}

template <typename Scalar>
bool is_nef(BasicDivisorClass<Scalar> const& d) {
  for (auto const& p : pair_with_lines(d))
    if (p < 0) return false;
  return true;
}

/// Index into lines27() of the first line meeting `d` negatively, or -1.
template <typename Scalar>
int first_negative_line(BasicDivisorClass<Scalar> const& d) {
  auto const pairings = pair_with_lines(d);
  for (int i = 0; i < kLineCount; ++i)
    if (pairings[i] < 0) return i;
  return -1;
}

/// The nef class left after removing fixed lines one copy at a time, or nullopt when
/// |D| is empty.
template <typename Scalar>
std::optional<BasicDivisorClass<Scalar>> moving_residue(BasicDivisorClass<Scalar> d) {
  auto const& lines = lines27<Scalar>();
  while (true) {
    if (d.is_zero()) return d;
    if (anticanonical_degree(d) <= 0) return std::nullopt;
    int const idx = first_negative_line(d);
    if (idx < 0) return d;
    d -= lines[idx];
  }
}

template <typename Scalar>
bool is_effective(BasicDivisorClass<Scalar> const& d) {
  return moving_residue(d).has_value();
}

template <typename Scalar>
Scalar h0(BasicDivisorClass<Scalar> const& d) {
  auto const residue = moving_residue(d);
  return residue ? euler_char(*residue) : Scalar(0);
}

template <typename Scalar>
struct FixedComponent {
  BasicDivisorClass<Scalar> line;
  Scalar multiplicity;

  friend bool operator==(FixedComponent const&, FixedComponent const&) = default;
};

template <typename Scalar>
struct BasicZariskiDecomposition {
  BasicDivisorClass<Scalar> nef_part;
  std::vector<FixedComponent<Scalar>> fixed;  // lines27() order

  BasicDivisorClass<Scalar> fixed_divisor() const {
    BasicDivisorClass<Scalar> f;
    for (auto const& c : fixed) f += c.multiplicity * c.line;
    return f;
  }

  /// h0(F, O_F) for F = sum m_i E_i on disjoint (-1)-curves: sum m_i (m_i + 1) / 2.
  Scalar structure_sheaf_h0() const {
    Scalar total = 0;
    for (auto const& c : fixed) total += c.multiplicity * (c.multiplicity + 1) / 2;
    return total;
  }

  bool reduced() const {
    for (auto const& c : fixed)
      if (c.multiplicity != 1) return false;
    return true;
  }
};

/// Fixed part F = -sum_{D.l<0} (D.l) l of an effective class and its nef complement.
template <typename Scalar>
BasicZariskiDecomposition<Scalar> fixed_part(BasicDivisorClass<Scalar> const& d) {
  if (!is_effective(d)) throw PreconditionError(Errc::NotEffective, to_string(d));
  auto const& lines = lines27<Scalar>();
  auto const pairings = pair_with_lines(d);
  BasicZariskiDecomposition<Scalar> out;
  out.nef_part = d;
  for (int i = 0; i < kLineCount; ++i) {
    if (pairings[i] < 0) {
      out.fixed.push_back({lines[i], -pairings[i]});
      out.nef_part -= (-pairings[i]) * lines[i];
    }
  }
  check_internal(out.fixed.size() <= kBlownUpPoints, "fixed part has more than six lines");
  check_internal(is_nef(out.nef_part), "nef part of Zariski decomposition is not nef");
  for (std::size_t i = 0; i < out.fixed.size(); ++i) {
    check_internal(intersect(out.nef_part, out.fixed[i].line) == 0,
                   "nef part meets a fixed line");
    for (std::size_t j = i + 1; j < out.fixed.size(); ++j)
      check_internal(intersect(out.fixed[i].line, out.fixed[j].line) == 0,
                     "fixed lines are not disjoint");
  }
  return out;
}

/// Zariski decomposition of the adjoint class D + nK. Fixed lines are those with
/// D.l < n, each with multiplicity n - D.l.
template <typename Scalar>
BasicZariskiDecomposition<Scalar> adjoint_fixed_part(BasicDivisorClass<Scalar> const& d,
                                                    Scalar const& n) {
  BasicDivisorClass<Scalar> const adjoint = d + n * canonical<Scalar>();
  if (!is_effective(adjoint))
    throw PreconditionError(Errc::NotEffective,
                            "D + " + cubic::to_string(n) + "K = " + to_string(adjoint));
  return fixed_part(adjoint);
}

template <typename Scalar>
struct BasicCohomologyTriple {
  Scalar h0, h1, h2, chi;
  friend bool operator==(BasicCohomologyTriple const&, BasicCohomologyTriple const&) = default;
};

/// h0 by fixed-line reduction, h2(D) = h0(K - D) by Serre duality, h1 from chi.
template <typename Scalar>
BasicCohomologyTriple<Scalar> cohomology(BasicDivisorClass<Scalar> const& d) {
  BasicCohomologyTriple<Scalar> out;
  out.h0 = h0(d);
  out.h2 = h0(canonical<Scalar>() - d);
  out.chi = euler_char(d);
  out.h1 = out.h0 + out.h2 - out.chi;
  check_internal(out.h1 >= 0, "negative h1");
  return out;
}

using ZariskiDecomposition = BasicZariskiDecomposition<Integer>;
using CohomologyTriple = BasicCohomologyTriple<Integer>;

}  // namespace cubic
