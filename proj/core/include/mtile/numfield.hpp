#pragma once

#include <memory>
#include <vector>

#include "mtile/rational.hpp"

namespace mtile {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// A real algebraic number field Q(a): the monic polynomial A with
/// A(a) = 0 and a rational interval isolating the real root a.
///
/// A is assumed irreducible. That is not checked here; a nontrivial factor
/// surfaces later as ReducibleMinpoly from inversion or bisection.
class FieldSpec {
 public:
  /// `minpoly` holds c_0..c_d of A(X) = c_0 + c_1 X + ... + c_d X^d.
  /// Throws SpecificationError unless d >= 1, c_d == 1, lo < hi and
  /// A(lo) * A(hi) < 0.
  static Field make(std::vector<Rational> minpoly, Rational lo, Rational hi);

  /// Q itself, as the degree-1 field with A(X) = X.
  static Field rationals();

  /// Q(sqrt(2)) with A(X) = X^2 - 2 and root interval [1, 2].
  static Field sqrt2();

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  const Interval& root_interval() const { return root_interval_; }

  /// Tightened enclosure of a, computed once at construction.
  const Interval& root_enclosure() const { return enclosure_; }

  /// Value of A at a rational point.
  Rational eval_minpoly(const Rational& x) const;

  /// Halves an enclosure of a, keeping the half where A changes sign.
  /// Throws ReducibleMinpoly if the midpoint is a root and d > 1.
  void bisect(Interval& enclosure) const;

  bool same_as(const FieldSpec& other) const;

 private:
  FieldSpec(std::vector<Rational> minpoly, Interval root_interval);

  std::vector<Rational> minpoly_;
  Interval root_interval_;
  Interval enclosure_;
  int lo_sign_ = 0;
};

/// x_0 + x_1 a + ... + x_{d-1} a^{d-1} in a fixed field. Equality is
/// coordinate equality; no interval refinement ever decides it.
class FieldElement {
 public:
  explicit FieldElement(Field field);
  FieldElement(Field field, Rational value);
  FieldElement(Field field, std::vector<Rational> coords);

  static FieldElement generator(Field field);

  const Field& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// x_0; throws SpecificationError if the element is not rational.
  const Rational& to_rational() const;

  /// Throws DivisionByZero for zero, ReducibleMinpoly if gcd(x, A) != 1.
  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& y);
  FieldElement& operator-=(const FieldElement& y);
  FieldElement& operator*=(const FieldElement& y);
  FieldElement& operator*=(const Rational& q);

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(FieldElement x, const Rational& q) { return x *= q; }
  friend FieldElement operator*(const Rational& q, FieldElement x) { return x *= q; }
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    return x * y.inverse();
  }

  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  void check_same_field(const FieldElement& y) const;

  Field field_;
  std::vector<Rational> coords_;
};

/// Sign under the real embedding a -> root of A in the isolating interval.
int sign(const FieldElement& x);

/// sign(x - y).
inline int compare(const FieldElement& x, const FieldElement& y) { return sign(x - y); }

/// Unique integer m with m <= x < m + 1.
Integer floor(const FieldElement& x);
Integer ceil(const FieldElement& x);

/// A rational within `eps` of x. Requires eps > 0.
Rational approx(const FieldElement& x, const Rational& eps);

/// Closed rational interval containing x with width at most `max_width`.
Interval enclose(const FieldElement& x, const Rational& max_width);

double to_double(const FieldElement& x);

}  // namespace mtile
