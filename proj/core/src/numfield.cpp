#include "mtile/numfield.hpp"

#include <algorithm>
#include <utility>

#include "mtile/errors.hpp"

namespace mtile {

namespace {

// Pre-refinement width of the stored root enclosure: 2^-48.
const Rational kEnclosureWidth = Rational(1) / (Integer(1) << 48);

// A nonzero element whose enclosure still straddles zero after this many
// bisections means A has a factor vanishing at the root.
constexpr int kMaxBisections = 20000;
constexpr int kBisectionsPerRound = 8;

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// Long division over Q; b must be nonzero after trimming.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  const int db = deg(b);
  if (deg(a) < db) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational lead_inv = 1 / b.back();
  for (int k = deg(a); k >= db; --k) {
    const Rational c = a[k] * lead_inv;
    q[k - db] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Interval interval_mul(const Interval& x, const Interval& y) {
  Rational p[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

// Horner evaluation of x_0 + x_1 a + ... over an enclosure of a.
Interval eval_interval(const std::vector<Rational>& coords, const Interval& root) {
  Interval acc{coords.back(), coords.back()};
  for (int j = static_cast<int>(coords.size()) - 2; j >= 0; --j) {
    acc = interval_mul(acc, root);
    acc.lo += coords[j];
    acc.hi += coords[j];
  }
  return acc;
}

// Refines a private copy of the root enclosure until `done` accepts the
// enclosure of x. x must be irrational.
template <class Done>
Interval refine_until(const FieldElement& x, Done done) {
  const FieldSpec& f = *x.field();
  Interval root = f.root_enclosure();
  for (int steps = 0;; steps += kBisectionsPerRound) {
    Interval value = eval_interval(x.coords(), root);
    if (done(value)) return value;
    if (steps > kMaxBisections) throw ReducibleMinpoly();
    for (int i = 0; i < kBisectionsPerRound; ++i) f.bisect(root);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec::FieldSpec(std::vector<Rational> minpoly, Interval root_interval)
    : minpoly_(std::move(minpoly)), root_interval_(std::move(root_interval)) {
  lo_sign_ = sgn(eval_minpoly(root_interval_.lo));
  enclosure_ = root_interval_;
  if (degree() == 1) {
    // The root is -c_0; collapse the enclosure onto it.
    const Rational root = -minpoly_[0];
    enclosure_ = {root, root};
    return;
  }
  while (enclosure_.width() > kEnclosureWidth) bisect(enclosure_);
}

Field FieldSpec::make(std::vector<Rational> minpoly, Rational lo, Rational hi) {
  if (minpoly.size() < 2) throw SpecificationError("field degree must be at least 1");
  if (minpoly.back() != 1) throw SpecificationError("minimal polynomial must be monic");
  if (!(lo < hi)) throw SpecificationError("root interval must satisfy lo < hi");
  Poly p = minpoly;
  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  if (sgn(eval(lo)) * sgn(eval(hi)) >= 0) {
    throw SpecificationError("minimal polynomial has no sign change on the root interval");
  }
  return Field(new FieldSpec(std::move(minpoly), Interval{std::move(lo), std::move(hi)}));
}

Field FieldSpec::rationals() {
  static const Field q = make({Rational(0), Rational(1)}, Rational(-1), Rational(1));
  return q;
}

Field FieldSpec::sqrt2() {
  static const Field f = make({Rational(-2), Rational(0), Rational(1)}, Rational(1), Rational(2));
  return f;
}

Rational FieldSpec::eval_minpoly(const Rational& x) const {
  Rational acc = 0;
  for (auto it = minpoly_.rbegin(); it != minpoly_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void FieldSpec::bisect(Interval& enclosure) const {
  Rational mid = (enclosure.lo + enclosure.hi) / 2;
  const int s = sgn(eval_minpoly(mid));
  if (s == 0) {
    if (degree() > 1) throw ReducibleMinpoly();
    enclosure = {mid, mid};
    return;
  }
  if (s == lo_sign_) {
    enclosure.lo = std::move(mid);
  } else {
    enclosure.hi = std::move(mid);
  }
}

bool FieldSpec::same_as(const FieldSpec& other) const {
  return this == &other || (minpoly_ == other.minpoly_ &&
                            root_interval_.lo == other.root_interval_.lo &&
                            root_interval_.hi == other.root_interval_.hi);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(Field field)
    : field_(std::move(field)), coords_(static_cast<std::size_t>(field_->degree())) {}

FieldElement::FieldElement(Field field, Rational value) : FieldElement(std::move(field)) {
  coords_[0] = std::move(value);
}

FieldElement::FieldElement(Field field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree()) {
    throw SpecificationError("field element needs exactly " +
                             std::to_string(field_->degree()) + " coordinates");
  }
}

FieldElement FieldElement::generator(Field field) {
  FieldElement a(std::move(field));
  if (a.field_->degree() == 1) {
    a.coords_[0] = -a.field_->minpoly()[0];
  } else {
    a.coords_[1] = 1;
  }
  return a;
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& c) { return c == 0; });
}

const Rational& FieldElement::to_rational() const {
  if (!is_rational()) throw SpecificationError("field element is not rational");
  return coords_[0];
}

void FieldElement::check_same_field(const FieldElement& y) const {
  if (!field_->same_as(*y.field_)) {
    throw SpecificationError("field elements belong to different fields");
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& y) {
  check_same_field(y);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += y.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& y) {
  check_same_field(y);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= y.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& y) { return *this = *this * y; }

FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  x.check_same_field(y);
  const std::size_t d = x.coords_.size();
  if (d == 1) return FieldElement(x.field_, x.coords_[0] * y.coords_[0]);
  if (x.is_rational()) return y * x.coords_[0];
  if (y.is_rational()) return x * y.coords_[0];

  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (x.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += x.coords_[i] * y.coords_[j];
  }
  // a^d = -(c_0 + c_1 a + ... + c_{d-1} a^{d-1})
  const auto& m = x.field_->minpoly();
  for (std::size_t k = 2 * d - 2; k >= d; --k) {
    const Rational c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= c * m[i];
  }
  prod.resize(d);
  return FieldElement(x.field_, std::move(prod));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElement(field_, 1 / coords_[0]);

  // Extended Euclid on (A, p): track s with s * p == r (mod A).
  Poly r0 = field_->minpoly();
  Poly r1 = coords_;
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (deg(r0) > 0) throw ReducibleMinpoly();
  const Rational scale = 1 / r0[0];
  Poly inv = divmod(s0, field_->minpoly()).second;
  std::vector<Rational> coords(coords_.size());
  for (std::size_t i = 0; i < inv.size(); ++i) coords[i] = inv[i] * scale;
  return FieldElement(field_, std::move(coords));
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.field_->same_as(*y.field_) && x.coords_ == y.coords_;
}

// ---------------------------------------------------------------------------
// Real embedding

int sign(const FieldElement& x) {
  if (x.is_rational()) return sgn(x.coords()[0]);
  const Interval v = refine_until(x, [](const Interval& iv) { return !iv.contains_zero(); });
  return sgn(v.lo) > 0 ? 1 : -1;
}

Integer floor(const FieldElement& x) {
  if (x.is_rational()) return floor(x.coords()[0]);
  // x is irrational, so an enclosure with floor(lo) == floor(hi) pins it.
  const Interval v =
      refine_until(x, [](const Interval& iv) { return floor(iv.lo) == floor(iv.hi); });
  return floor(v.lo);
}

Integer ceil(const FieldElement& x) {
  if (x.is_rational()) return ceil(x.coords()[0]);
  return floor(x) + 1;
}

Interval enclose(const FieldElement& x, const Rational& max_width) {
  if (sgn(max_width) <= 0) throw SpecificationError("enclosure width must be positive");
  if (x.is_rational()) return {x.coords()[0], x.coords()[0]};
  return refine_until(x, [&](const Interval& iv) { return iv.width() <= max_width; });
}

Rational approx(const FieldElement& x, const Rational& eps) {
  if (sgn(eps) <= 0) throw SpecificationError("approximation tolerance must be positive");
  const Interval v = enclose(x, eps);
  return (v.lo + v.hi) / 2;
}

double to_double(const FieldElement& x) {
  static const Rational eps = Rational(1) / (Integer(1) << 60);
  return approx(x, eps).get_d();
}

}  // namespace mtile
