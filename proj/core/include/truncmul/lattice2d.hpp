#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "truncmul/bigint.hpp"
#include "truncmul/rational.hpp"

namespace truncmul {

struct IVec2 {
  Int x;
  Int y;

  IVec2& operator-=(const IVec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  friend bool operator==(const IVec2& a, const IVec2& b) {
    return a.x == b.x && a.y == b.y;
  }
};

IVec2 operator+(const IVec2& a, const IVec2& b);
IVec2 operator-(const IVec2& a, const IVec2& b);
IVec2 operator-(const IVec2& a);
IVec2 operator*(const Int& c, const IVec2& a);

/// a.x * b.y - a.y * b.x
Int determinant(const IVec2& a, const IVec2& b);

/// True iff v.x * z == v.y (mod 2^p), i.e. v lies in the congruence lattice.
bool in_congruence_lattice(const IVec2& v, const Int& z, unsigned p);

/// Ordered basis {u1, u2} of a congruence lattice with determinant +-2^p.
struct LatticeBasis {
  IVec2 u1;
  IVec2 u2;
  unsigned modulus_exp = 0;

  Int determinant() const { return truncmul::determinant(u1, u2); }

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.u1 == b.u1 && a.u2 == b.u2 && a.modulus_exp == b.modulus_exp;
  }
};

/// Positive definite form wx*a.x*b.x + wy*a.y*b.y.
///
/// The weighted inner product a.x*b.x + (B1/B2)^2 a.y*b.y is stored multiplied
/// through by B2^2 (wx = B2^2, wy = B1^2), which keeps every value an integer
/// without changing any ratio, rounding or comparison made with it.
struct WeightedForm {
  Int wx = 1;
  Int wy = 1;

  static WeightedForm unit() { return {}; }
  static WeightedForm from_bounds(const Int& b1, const Int& b2);

  WeightedForm scaled(const Int& k) const;

  Int operator()(const IVec2& a, const IVec2& b) const;
  Int norm2(const IVec2& a) const { return (*this)(a, a); }
};

/// Which generator pair to derive for the homogeneous lattice.
enum class GeneratorRule {
  /// x1 = floor(2^q u / z)
  FromToken,
  /// x1 = floor(2^p / z); used to cross-check that both rules span one lattice.
  FromModulus,
};

/// Particular solution v0 of x*z == 2^q*u + y (mod 2^p) and two generators of
/// the homogeneous lattice x*z == y (mod 2^p); every solution is v0 + a*g1 + b*g2.
struct SolutionFamily {
  IVec2 v0;
  IVec2 g1;
  IVec2 g2;

  LatticeBasis basis(unsigned p) const { return {g1, g2, p}; }
};

SolutionFamily solution_basis(const Int& z, unsigned p, unsigned q, const Int& u,
                              GeneratorRule rule = GeneratorRule::FromToken);

/// One size-reduction step of gauss_reduce. `side` is 1 for u1 -= c*u2 and 2
/// for u2 -= c*u1; steps with c == 0 are reported too.
struct ReductionStep {
  std::size_t pass = 0;
  int side = 0;
  Int coefficient;
  LatticeBasis before;
  LatticeBasis after;
};

using StepObserver = std::function<void(const ReductionStep&)>;

struct ReductionResult {
  LatticeBasis basis;
  std::size_t iterations = 0;
};

/// Gaussian (Lagrange) reduction under `form`. Alternates
///   c1 = Round(<u1,u2>/<u2,u2>), u1 -= c1*u2
///   c2 = Round(<u1,u2>/<u1,u1>), u2 -= c2*u1
/// until a pass leaves both unchanged. On exit
///   |<u1,u2>| <= min(<u1,u1>, <u2,u2>) / 2
/// and the lattice and |det| are unchanged. `iterations` counts passes,
/// including the final no-op pass.
///
/// Throws SingularBasis for det == 0 and IterationCapExceeded past 64*p passes.
ReductionResult gauss_reduce(const LatticeBasis& basis, const WeightedForm& form,
                             const StepObserver& observer = {});

struct Coefficients {
  Rational alpha1;
  Rational alpha2;
};

/// Exact (alpha1, alpha2) with alpha1*u1 + alpha2*u2 == v.
Coefficients solve_coeffs(const LatticeBasis& basis, const IVec2& v);

struct IntCoefficients {
  Int a1;
  Int a2;

  friend bool operator==(const IntCoefficients& a, const IntCoefficients& b) {
    return a.a1 == b.a1 && a.a2 == b.a2;
  }
};

/// Componentwise round_half_to_zero of solve_coeffs (Babai rounding).
IntCoefficients round_coefficients(const LatticeBasis& basis, const IVec2& v);

/// Componentwise floor of solve_coeffs. Not used by the attack; kept so tests
/// can show why rounding, not flooring, recovers the solution.
IntCoefficients floor_coefficients(const LatticeBasis& basis, const IVec2& v);

/// Closest lattice point to v under `form` on a reduced basis, as coefficients
/// (a1, a2) minimizing form-norm of v - a1*u1 - a2*u2.
///
/// Starts from round_coefficients and checks the 3x3 coefficient neighbourhood
/// inside [alpha-1, alpha+1]; rounding alone is not always optimal (e.g. on
/// near-hexagonal lattices). The rounded point is kept unless strictly beaten.
IntCoefficients nearest_lattice_point(const LatticeBasis& basis, const IVec2& v,
                                      const WeightedForm& form);

/// v - a1*u1 - a2*u2
IVec2 residual(const LatticeBasis& basis, const IVec2& v, const IntCoefficients& a);

/// Coefficients of the rectangle corners v, v-(B1,0), v-(0,B2), v-(B1,B2).
std::array<Coefficients, 4> corner_coefficients(const LatticeBasis& basis,
                                                const IVec2& v, const Int& b1,
                                                const Int& b2);

inline constexpr std::uint64_t kDefaultSearchCap = std::uint64_t{1} << 20;

struct RectSearchResult {
  /// Every s = v - a1*u1 - a2*u2 with 0 <= s.x < B1, 0 <= s.y < B2, sorted by
  /// (x, y).
  std::vector<IVec2> points;
  /// Number of coefficient pairs enumerated.
  std::uint64_t searched = 0;
};

/// Enumerates the coefficient box spanned by the four corner coefficients,
/// padded by one on each side. Throws SearchSpaceExceeded if the box holds
/// more than `cap` pairs.
RectSearchResult rect_search(const LatticeBasis& basis, const IVec2& v,
                             const Int& b1, const Int& b2,
                             std::uint64_t cap = kDefaultSearchCap);

}  // namespace truncmul
