#pragma once

// Obstructedness of curves on a smooth cubic surface S in P^3 and the local dimension
// of the Hilbert scheme H(d,g)^sc at such curves.
//
// Throughout, L = C + 3K. The obstruction space of C is H^2(S, -L) and the
// abnormality h1(I_C(3)) is h1(S, -L). All verdicts describe the general member of |C|
// on a general cubic surface.

#include "cubic/cohomology.hpp"
#include "cubic/curve.hpp"
#include "cubic/errors.hpp"
#include "cubic/lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cubic {

/// Exact surjectivity test for H^0(S, Delta) -> H^0(E, Delta|_E) on a line E = P^1:
/// the image has dimension h0(Delta) - h0(Delta - E).
template <typename Scalar>
bool restriction_surjective(BasicDivisorClass<Scalar> const& delta,
                            BasicDivisorClass<Scalar> const& line) {
  if (!is_line_class(line)) throw PreconditionError(Errc::NotALine, to_string(line));
  Scalar const degree = intersect(delta, line);
  Scalar const target = degree >= 0 ? Scalar(degree + 1) : Scalar(0);
  return h0(delta) - h0(delta - line) == target;
}

/// Sufficient condition for surjectivity: some conic q with q.E = 1 and
/// Delta - (Delta.E) q effective, where Delta.E >= 0.
template <typename Scalar>
std::optional<BasicDivisorClass<Scalar>> surjectivity_conic(
    BasicDivisorClass<Scalar> const& delta, BasicDivisorClass<Scalar> const& line) {
  Scalar const n = intersect(delta, line);
  if (n < 0) return std::nullopt;
  for (auto const& q : conics27<Scalar>())
    if (intersect(q, line) == 1 && is_effective(delta - n * q)) return q;
  return std::nullopt;
}

enum class ObstructionRule { MEqualsOne, RhoSurjective };

constexpr std::string_view rule_name(ObstructionRule r) {
  return r == ObstructionRule::MEqualsOne ? "m=1" : "rho-surjective";
}

template <typename Scalar>
struct BasicObstructionVerdict {
  struct Unobstructed {
    bool h1_vanishes = false;  // h1(S, -L) = 0
    bool h2_vanishes = false;  // h2(S, -L) = 0
  };
  struct Obstructed {
    BasicDivisorClass<Scalar> witness_line;
    int m = 0;  // -L.E
    ObstructionRule rule = ObstructionRule::MEqualsOne;
  };
  struct Undetermined {
    std::string reason;
  };

  std::variant<Unobstructed, Obstructed, Undetermined> value;
  std::vector<Obstructed> witnesses;  // every line that fires, lines27() order
  Scalar h1;                          // h1(S, -L)
  Scalar h2;                          // h2(S, -L)

  bool obstructed() const { return std::holds_alternative<Obstructed>(value); }
  bool unobstructed() const { return std::holds_alternative<Unobstructed>(value); }
  bool undetermined() const { return std::holds_alternative<Undetermined>(value); }
  Obstructed const& witness() const { return std::get<Obstructed>(value); }
};

template <typename Scalar>
BasicDivisorClass<Scalar> adjoint(BasicDivisorClass<Scalar> const& c, int n) {
  return c + Scalar(n) * canonical<Scalar>();
}

/// Obstructedness of the general member of |C| in P^3.
///
/// Unobstructed when h1(S,-L) or h2(S,-L) vanishes. Otherwise each line E with
/// m = -L.E > 0 is tested: m = 1 always obstructs; m in {2, 3} obstructs when the
/// restriction H^0(S, L + K - 2mE) -> H^0(E, .) is surjective. When no line fires the
/// criterion is silent and the verdict is Undetermined.
template <typename Scalar>
BasicObstructionVerdict<Scalar> classify(BasicDivisorClass<Scalar> const& c) {
  using Verdict = BasicObstructionVerdict<Scalar>;
  require_smooth_member(c);
  auto const l = adjoint(c, 3);
  auto const coh = cohomology(BasicDivisorClass<Scalar>(-l));
  Verdict out{typename Verdict::Undetermined{}, {}, coh.h1, coh.h2};
  if (coh.h1 == 0 || coh.h2 == 0) {
    out.value = typename Verdict::Unobstructed{coh.h1 == 0, coh.h2 == 0};
    return out;
  }
  auto const lk = l + canonical<Scalar>();
  check_internal(is_effective(lk) && !is_nef(l), "h1 and h2 nonzero but L+K not effective or L nef");

  auto const& lines = lines27<Scalar>();
  auto const pairings = pair_with_lines(l);
  for (int i = 0; i < kLineCount; ++i) {
    if (pairings[i] >= 0) continue;
    Scalar const m = -pairings[i];
    check_internal(m <= 3, "-L.E exceeds 3 for a curve with a smooth member");
    int const mi = to_int64(m);
    if (mi == 1) {
      out.witnesses.push_back({lines[i], 1, ObstructionRule::MEqualsOne});
    } else {
      auto const delta = lk - Scalar(2 * mi) * lines[i];
      if (restriction_surjective(delta, lines[i]))
        out.witnesses.push_back({lines[i], mi, ObstructionRule::RhoSurjective});
    }
  }
  if (out.witnesses.empty()) {
    out.value = typename Verdict::Undetermined{
        "no line E with -L.E = 1 or with a surjective restriction to E"};
  } else {
    out.value = out.witnesses.front();
  }
  return out;
}

/// h1(C, N_C) = h0(S, C + 4K).
template <typename Scalar>
Scalar h1_normal(BasicDivisorClass<Scalar> const& c) {
  require_smooth_member(c);
  return h0(adjoint(c, 4));
}

/// h0(C, N_C) = chi(N_C) + h1(N_C) with chi(N_C) = 4d. For d > 9 this equals
/// dim W + h1(I_C(3)).
template <typename Scalar>
Scalar h0_normal(BasicDivisorClass<Scalar> const& c) {
  Scalar const h1n = h1_normal(c);
  auto const inv = invariants(c);
  Scalar const out = 4 * inv.degree + h1n;
  if (inv.degree > 9)
    check_internal(out == inv.degree + inv.genus + 18 + abnormality(c, Scalar(3)),
                   "h0(N_C) differs from dim W + h1(I_C(3))");
  return out;
}

/// Dimension d + g + 18 of the Hilbert-flag scheme at (C, S); equals dim W when d > 9.
template <typename Scalar>
Scalar flag_dim(BasicDivisorClass<Scalar> const& c) {
  require_smooth_member(c);
  auto const inv = invariants(c);
  return inv.degree + inv.genus + 18;
}

enum class DimMethod { SmoothPoint, Theorem11, Prop45, Theorem43 };

constexpr std::string_view method_name(DimMethod m) {
  switch (m) {
    case DimMethod::SmoothPoint: return "smooth-point";
    case DimMethod::Theorem11: return "theorem-1.1";
    case DimMethod::Prop45: return "prop-4.5";
    case DimMethod::Theorem43: return "theorem-4.3";
  }
  return "";
}

template <typename Scalar>
struct BasicHilbertDimResult {
  bool exact = false;
  Scalar lo;  // equals hi when exact
  Scalar hi;
  DimMethod method = DimMethod::SmoothPoint;

  Scalar const& value() const { return lo; }
};

/// Hypotheses of the generically-non-reduced-component theorem beyond d > 9 and
/// h1(I_C(3)) != 0: g >= 3d - 18, linear and quadratic normality.
template <typename Scalar>
bool component_theorem_applies(BasicDivisorClass<Scalar> const& c) {
  auto const inv = invariants(c);
  return inv.genus >= 3 * inv.degree - 18 && abnormality(c, Scalar(1)) == 0 &&
         abnormality(c, Scalar(2)) == 0;
}

/// dim_[C] H(d,g)^sc for the general member of a 3-maximal family, d > 9.
template <typename Scalar>
BasicHilbertDimResult<Scalar> hilbert_dim(BasicDivisorClass<Scalar> const& c) {
  using Result = BasicHilbertDimResult<Scalar>;
  require_smooth_member(c);
  auto const inv = invariants(c);
  if (inv.degree <= 9)
    throw PreconditionError(Errc::DegreeTooSmall, "d = " + cubic::to_string(inv.degree));

  Scalar const h1l = abnormality(c, Scalar(3));
  Scalar const h2l = h0(adjoint(c, 4));
  Scalar const dim_w = inv.degree + inv.genus + 18;
  Scalar const lower = dim_w + h1l - h2l;
  Scalar const upper = dim_w + h1l;

  auto exact = [&](Scalar v, DimMethod m) {
    check_internal(lower <= v && v <= upper, "exact dimension outside the Kleppe interval");
    check_internal(v >= 4 * inv.degree, "exact dimension below 4d");
    return Result{true, v, v, m};
  };

  if (h1l == 0 || h2l == 0) return exact(4 * inv.degree + h2l, DimMethod::SmoothPoint);

  auto const verdict = classify(c);
  if (verdict.obstructed()) {
    if (component_theorem_applies(c)) {
      if (h2l == 1)
        check_internal(dim_w == inv.degree + inv.genus + 17 + h1l,
                       "component and codimension formulas disagree");
      return exact(dim_w, DimMethod::Theorem11);
    }
    if (h2l == 1) return exact(inv.degree + inv.genus + 17 + h1l, DimMethod::Prop45);
    // The upper bound is strict at obstructed points.
    return Result{false, lower, Scalar(upper - 1), DimMethod::Theorem43};
  }
  return Result{false, lower, upper, DimMethod::Theorem43};
}

enum class KleppeKind { NotApplicable, ProvenTheorem1, KnownRange, Open };

constexpr std::string_view kleppe_name(KleppeKind k) {
  switch (k) {
    case KleppeKind::NotApplicable: return "not-applicable";
    case KleppeKind::ProvenTheorem1: return "proven-theorem-1";
    case KleppeKind::KnownRange: return "known-range";
    case KleppeKind::Open: return "open";
  }
  return "";
}

template <typename Scalar>
struct BasicKleppeVerdict {
  KleppeKind kind = KleppeKind::Open;
  std::string failed_hypothesis;  // NotApplicable
  Scalar dim = 0;                 // ProvenTheorem1
  std::string range_tag;          // KnownRange
};

/// Status of the conjecture that W is a generically non-reduced component.
template <typename Scalar>
BasicKleppeVerdict<Scalar> kleppe_verdict(BasicDivisorClass<Scalar> const& c) {
  using Verdict = BasicKleppeVerdict<Scalar>;
  require_smooth_member(c);
  auto const inv = invariants(c);
  auto const& d = inv.degree;
  auto const& g = inv.genus;
  auto not_applicable = [](std::string why) {
    Verdict v;
    v.kind = KleppeKind::NotApplicable;
    v.failed_hypothesis = std::move(why);
    return v;
  };
  if (d <= 9) return not_applicable("d <= 9");
  if (g < 3 * d - 18) return not_applicable("g < 3d-18");
  if (abnormality(c, Scalar(1)) != 0) return not_applicable("not linearly normal");
  if (abnormality(c, Scalar(3)) == 0) return not_applicable("h1(I_C(3)) = 0");

  Verdict v;
  if (abnormality(c, Scalar(2)) == 0) {
    v.kind = KleppeKind::ProvenTheorem1;
    v.dim = d + g + 18;
    return v;
  }
  // g > -1 + (d^2 - 4)/8 for 14 <= d <= 17;  g > 7 + (d - 2)^2/8 for d >= 18.
  if (d >= 14 && d <= 17 && 8 * g + 12 > d * d) {
    v.kind = KleppeKind::KnownRange;
    v.range_tag = "14<=d<=17";
    return v;
  }
  if (d >= 18 && 8 * g > 56 + (d - 2) * (d - 2)) {
    v.kind = KleppeKind::KnownRange;
    v.range_tag = "d>=18";
    return v;
  }
  v.kind = KleppeKind::Open;
  return v;
}

/// Nef class (a; b1..b5) on the blow-down of e6: a >= b1 + b2 + b3, b1 >= ... >= b5 >= 0.
template <typename Scalar>
struct BasicBlownDownClass {
  Scalar a = 0;
  std::array<Scalar, 5> b{};

  bool nef() const {
    for (int i = 0; i + 1 < 5; ++i)
      if (b[i] < b[i + 1]) return false;
    return b[4] >= 0 && a >= b[0] + b[1] + b[2];
  }

  static BasicBlownDownClass parse(std::string const& text) {
    auto const values = parse_tuple<Scalar>(text, 5);
    BasicBlownDownClass out;
    out.a = values[0];
    for (int i = 0; i < 5; ++i) out.b[i] = values[i + 1];
    return out;
  }

  std::string str() const {
    std::string out = cubic::to_string(a) + ";";
    for (int i = 0; i < 5; ++i) out += (i ? "," : "") + cubic::to_string(b[i]);
    return out;
  }
};

/// The class -4K + 2(3-k)E + (2-k)q + pullback(D') with E = e6, q = l - e6, i.e.
/// (14-k+a; b1+4, ..., b5+4, k). Its general member is smooth, meets e6 in k points
/// and is obstructed.
template <typename Scalar>
BasicDivisorClass<Scalar> gen_obstructed(int k, BasicBlownDownClass<Scalar> const& dprime) {
  if (k < 0 || k > 2) throw PreconditionError(Errc::InvalidK, "k = " + std::to_string(k));
  if (!dprime.nef()) throw PreconditionError(Errc::DprimeNotNef, dprime.str());
  BasicDivisorClass<Scalar> c;
  c.a() = 14 - k + dprime.a;
  for (int i = 1; i <= 5; ++i) c.b(i) = dprime.b[i - 1] + 4;
  c.b(6) = k;
  check_internal(intersect(c, exceptional<Scalar>(6)) == k, "C.e6 != k");
  return c;
}

using ObstructionVerdict = BasicObstructionVerdict<Integer>;
using HilbertDimResult = BasicHilbertDimResult<Integer>;
using KleppeVerdict = BasicKleppeVerdict<Integer>;
using BlownDownClass = BasicBlownDownClass<Integer>;

}  // namespace cubic
