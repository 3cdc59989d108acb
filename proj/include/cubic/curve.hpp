#pragma once

#include "cubic/cohomology.hpp"
#include "cubic/errors.hpp"
#include "cubic/lattice.hpp"

#include <map>

namespace cubic {

template <typename Scalar>
struct BasicCurveInvariants {
  Scalar degree;
  Scalar genus;
  friend bool operator==(BasicCurveInvariants const&, BasicCurveInvariants const&) = default;
};

/// Degree and arithmetic genus of a curve class: d = -K.C, g = 1 + (C^2 + K.C)/2.
template <typename Scalar>
BasicCurveInvariants<Scalar> invariants(BasicDivisorClass<Scalar> const& c) {
  Scalar const degree = anticanonical_degree(c);
  Scalar const genus = 1 + (self_intersection(c) + canonical_pairing(c)) / 2;
  // Same genus from the plane-curve form (a-1)(a-2)/2 - sum b_i(b_i-1)/2.
  Scalar plane = (c.a() - 1) * (c.a() - 2) / 2;
  for (int i = 1; i <= kBlownUpPoints; ++i) plane -= c.b(i) * (c.b(i) - 1) / 2;
  check_internal(plane == genus, "genus formulas disagree");
  return {degree, genus};
}

/// |C| contains a smooth connected curve other than a line iff, in standard form,
/// a > b1 and b6 >= 0.
template <typename Scalar>
bool has_smooth_member(BasicDivisorClass<Scalar> const& c) {
  auto const s = standard_form(c);
  return s.a() > s.b(1) && s.b(6) >= 0;
}

template <typename Scalar>
void require_smooth_member(BasicDivisorClass<Scalar> const& c) {
  if (!has_smooth_member(c)) throw PreconditionError(Errc::NotSmoothMember, to_string(c));
}

/// h1(P^3, I_C(n)) = h1(S, -(C + nK)).
template <typename Scalar>
Scalar abnormality(BasicDivisorClass<Scalar> const& c, Scalar const& n) {
  return cohomology(BasicDivisorClass<Scalar>(-(c + n * canonical<Scalar>()))).h1;
}

/// True when C + nK is effective with positive square, the setting in which the
/// n-abnormality equals h0 of the structure sheaf of the adjoint fixed part.
template <typename Scalar>
bool adjoint_is_big(BasicDivisorClass<Scalar> const& c, Scalar const& n) {
  auto const l = c + n * canonical<Scalar>();
  return is_effective(l) && self_intersection(l) > 0;
}

template <typename Scalar>
Scalar hodge_genus_bound(Scalar const& d) {
  if (d <= 0) throw PreconditionError(Errc::NonPositiveDegree, "d = " + cubic::to_string(d));
  return 1 + (d - 3) * d / 2;
}

/// h0(P^3, O(k)).
template <typename Scalar>
Scalar projective_sections(Scalar const& k) {
  if (k < 0) return 0;
  return (k + 1) * (k + 2) * (k + 3) / 6;
}

/// h0(P^3, I_C(n)) = h0(O(n-3)) + h0(S, -(C + nK)), from 0 -> I_S(n) -> I_C(n) -> O_S(-L) -> 0.
template <typename Scalar>
Scalar ideal_sections(BasicDivisorClass<Scalar> const& c, Scalar const& n) {
  return projective_sections<Scalar>(n - 3) +
         h0(BasicDivisorClass<Scalar>(-(c + n * canonical<Scalar>())));
}

template <typename Scalar>
struct BasicCurveReport {
  BasicDivisorClass<Scalar> cls;  // standard form
  Scalar degree;
  Scalar genus;
  bool smooth_member = false;
  std::map<int, Scalar> abnormality;  // n -> h1(I_C(n)), n = 1, 2, 3
  int s_invariant = 3;
  bool s_from_cubic = true;  // s = 3 because C lies on the cubic itself

  bool n_normal(int n) const { return abnormality.at(n) == 0; }
};

template <typename Scalar>
BasicCurveReport<Scalar> normality_profile(BasicDivisorClass<Scalar> const& c) {
  require_smooth_member(c);
  BasicCurveReport<Scalar> out;
  out.cls = standard_form(c);
  auto const inv = invariants(out.cls);
  out.degree = inv.degree;
  out.genus = inv.genus;
  out.smooth_member = true;
  for (int n = 1; n <= 3; ++n) out.abnormality[n] = abnormality(out.cls, Scalar(n));

  // n-normal with a nef and big adjoint implies m-normal for all m < n.
  for (int n = 2; n <= 3; ++n) {
    if (adjoint_is_big(out.cls, Scalar(n)) && out.abnormality[n] == 0)
      for (int m = 1; m < n; ++m)
        check_internal(out.abnormality[m] == 0, "normality does not descend");
  }

  out.s_invariant = 3;
  out.s_from_cubic = true;
  for (int n = 1; n <= 2; ++n) {
    if (ideal_sections(out.cls, Scalar(n)) > 0) {
      out.s_invariant = n;
      out.s_from_cubic = false;
      break;
    }
  }
  return out;
}

using CurveInvariants = BasicCurveInvariants<Integer>;
using CurveReport = BasicCurveReport<Integer>;

}  // namespace cubic
