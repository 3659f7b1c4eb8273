#include "truncmul/lattice2d.hpp"

#include <algorithm>
#include <string>

#include "truncmul/error.hpp"

namespace truncmul {

IVec2 operator+(const IVec2& a, const IVec2& b) { return {a.x + b.x, a.y + b.y}; }
IVec2 operator-(const IVec2& a, const IVec2& b) { return {a.x - b.x, a.y - b.y}; }
IVec2 operator-(const IVec2& a) { return {-a.x, -a.y}; }
IVec2 operator*(const Int& c, const IVec2& a) { return {c * a.x, c * a.y}; }

Int determinant(const IVec2& a, const IVec2& b) { return a.x * b.y - a.y * b.x; }

bool in_congruence_lattice(const IVec2& v, const Int& z, unsigned p) {
  return sgn(mod_pow2(v.x * z - v.y, p)) == 0;
}

WeightedForm WeightedForm::from_bounds(const Int& b1, const Int& b2) {
  if (sgn(b1) <= 0 || sgn(b2) <= 0) {
    throw Error(ErrorKind::DegenerateInput, "bounds must be positive");
  }
  return {b2 * b2, b1 * b1};
}

WeightedForm WeightedForm::scaled(const Int& k) const {
  if (sgn(k) <= 0) {
    throw Error(ErrorKind::DegenerateInput, "scale must be positive");
  }
  return {wx * k, wy * k};
}

Int WeightedForm::operator()(const IVec2& a, const IVec2& b) const {
  return wx * a.x * b.x + wy * a.y * b.y;
}

SolutionFamily solution_basis(const Int& z, unsigned p, unsigned q, const Int& u,
                              GeneratorRule rule) {
  if (sgn(z) <= 0) {
    throw Error(ErrorKind::DegenerateInput, "z must be >= 1");
  }
  if (sgn(u) < 0) {
    throw Error(ErrorKind::DegenerateInput, "token must be >= 0");
  }
  const Int shifted = u * pow2(q);
  const Int modulus = pow2(p);

  SolutionFamily f;
  f.v0.x = ceil_div(shifted, z);
  f.v0.y = z * f.v0.x - shifted;

  const Int x1 = rule == GeneratorRule::FromToken ? floor_div(shifted, z)
                                                  : floor_div(modulus, z);
  f.g1 = {x1, z * x1 - modulus};
  const Int x2 = x1 + 1;
  f.g2 = {x2, z * x2 - modulus};
  return f;
}

namespace {

void require_nonsingular(const LatticeBasis& basis) {
  if (sgn(basis.determinant()) == 0) {
    throw Error(ErrorKind::SingularBasis, "basis determinant is zero");
  }
}

}  // namespace

ReductionResult gauss_reduce(const LatticeBasis& basis, const WeightedForm& form,
                             const StepObserver& observer) {
  require_nonsingular(basis);
  if (sgn(form.wx) <= 0 || sgn(form.wy) <= 0) {
    throw Error(ErrorKind::DegenerateInput, "form weights must be positive");
  }

  ReductionResult out{basis, 0};
  LatticeBasis& b = out.basis;
  const std::size_t cap = 64 * static_cast<std::size_t>(std::max(1u, basis.modulus_exp));

  while (true) {
    if (++out.iterations > cap) {
      throw Error(ErrorKind::IterationCapExceeded,
                  "more than " + std::to_string(cap) + " passes");
    }

    const Int c1 = round_half_to_zero(form(b.u1, b.u2), form.norm2(b.u2));
    if (observer) {
      ReductionStep step{out.iterations, 1, c1, b, b};
      if (sgn(c1) != 0) step.after.u1 = b.u1 - c1 * b.u2;
      b = step.after;
      observer(step);
    } else if (sgn(c1) != 0) {
      b.u1 -= c1 * b.u2;
    }

    const Int c2 = round_half_to_zero(form(b.u1, b.u2), form.norm2(b.u1));
    if (observer) {
      ReductionStep step{out.iterations, 2, c2, b, b};
      if (sgn(c2) != 0) step.after.u2 = b.u2 - c2 * b.u1;
      b = step.after;
      observer(step);
    } else if (sgn(c2) != 0) {
      b.u2 -= c2 * b.u1;
    }

    if (sgn(c1) == 0 && sgn(c2) == 0) return out;
  }
}

Coefficients solve_coeffs(const LatticeBasis& basis, const IVec2& v) {
  const Int det = basis.determinant();
  if (sgn(det) == 0) {
    throw Error(ErrorKind::SingularBasis, "basis determinant is zero");
  }
  const IVec2& u1 = basis.u1;
  const IVec2& u2 = basis.u2;
  return {Rational(v.x * u2.y - v.y * u2.x, det),
          Rational(u1.x * v.y - u1.y * v.x, det)};
}

IntCoefficients round_coefficients(const LatticeBasis& basis, const IVec2& v) {
  const auto c = solve_coeffs(basis, v);
  return {round_half_to_zero(c.alpha1), round_half_to_zero(c.alpha2)};
}

IntCoefficients floor_coefficients(const LatticeBasis& basis, const IVec2& v) {
  const auto c = solve_coeffs(basis, v);
  return {c.alpha1.floor(), c.alpha2.floor()};
}

IVec2 residual(const LatticeBasis& basis, const IVec2& v, const IntCoefficients& a) {
  return {v.x - a.a1 * basis.u1.x - a.a2 * basis.u2.x,
          v.y - a.a1 * basis.u1.y - a.a2 * basis.u2.y};
}

IntCoefficients nearest_lattice_point(const LatticeBasis& basis, const IVec2& v,
                                      const WeightedForm& form) {
  const auto c = solve_coeffs(basis, v);
  IntCoefficients best{round_half_to_zero(c.alpha1), round_half_to_zero(c.alpha2)};
  Int best_norm = form.norm2(residual(basis, v, best));

  // On a reduced basis the Voronoi cell of the origin lies inside the
  // coefficient box [-1,1]^2, so the optimum has |a_i - alpha_i| <= 1.
  const Rational one(1);
  const Int lo1 = (c.alpha1 - one).ceil(), hi1 = (c.alpha1 + one).floor();
  const Int lo2 = (c.alpha2 - one).ceil(), hi2 = (c.alpha2 + one).floor();
  for (Int a1 = lo1; a1 <= hi1; ++a1) {
    for (Int a2 = lo2; a2 <= hi2; ++a2) {
      IntCoefficients cand{a1, a2};
      Int n = form.norm2(residual(basis, v, cand));
      if (n < best_norm) {
        best_norm = std::move(n);
        best = std::move(cand);
      }
    }
  }
  return best;
}

std::array<Coefficients, 4> corner_coefficients(const LatticeBasis& basis,
                                                const IVec2& v, const Int& b1,
                                                const Int& b2) {
  return {solve_coeffs(basis, v),
          solve_coeffs(basis, {v.x - b1, v.y}),
          solve_coeffs(basis, {v.x, v.y - b2}),
          solve_coeffs(basis, {v.x - b1, v.y - b2})};
}

RectSearchResult rect_search(const LatticeBasis& basis, const IVec2& v,
                             const Int& b1, const Int& b2, std::uint64_t cap) {
  if (b1 < 1 || b2 < 1) {
    throw Error(ErrorKind::DegenerateInput, "bounds must be >= 1");
  }
  const auto corners = corner_coefficients(basis, v, b1, b2);

  auto [min1, max1] = std::minmax_element(
      corners.begin(), corners.end(),
      [](const Coefficients& a, const Coefficients& b) { return a.alpha1 < b.alpha1; });
  auto [min2, max2] = std::minmax_element(
      corners.begin(), corners.end(),
      [](const Coefficients& a, const Coefficients& b) { return a.alpha2 < b.alpha2; });

  const Int lo1 = min1->alpha1.floor() - 1, hi1 = max1->alpha1.ceil() + 1;
  const Int lo2 = min2->alpha2.floor() - 1, hi2 = max2->alpha2.ceil() + 1;

  const Int box = (hi1 - lo1 + 1) * (hi2 - lo2 + 1);
  if (box > Int(static_cast<unsigned long>(cap))) {
    throw Error(ErrorKind::SearchSpaceExceeded,
                to_decimal(box) + " coefficient pairs exceed cap " +
                    std::to_string(cap));
  }

  RectSearchResult out;
  out.searched = box.get_ui();

  const IVec2& u1 = basis.u1;
  const IVec2& u2 = basis.u2;
  for (Int a1 = lo1; a1 <= hi1; ++a1) {
    // s = v - a1*u1 - a2*u2, stepped along a2.
    IVec2 s{v.x - a1 * u1.x - lo2 * u2.x, v.y - a1 * u1.y - lo2 * u2.y};
    for (Int a2 = lo2; a2 <= hi2; ++a2) {
      if (sgn(s.x) >= 0 && s.x < b1 && sgn(s.y) >= 0 && s.y < b2) {
        out.points.push_back(s);
      }
      s.x -= u2.x;
      s.y -= u2.y;
    }
  }

  std::sort(out.points.begin(), out.points.end(), [](const IVec2& a, const IVec2& b) {
    const int c = cmp(a.x, b.x);
    return c != 0 ? c < 0 : a.y < b.y;
  });
  return out;
}

}  // namespace truncmul
