#pragma once

#include <optional>
#include <utility>

#include "qtwist/rat.hpp"

namespace qtwist {

// Chord-tangent group law over any field type K supporting +,-,*,/ and ==.
// Used with K = Rat for certification and K = QuadExt / RatFunc for the
// symbolic checks over function fields.

template <class K>
bool field_is_zero(const K& k) {
  if constexpr (requires { k.is_zero(); })
    return k.is_zero();
  else
    return k == 0;
}

template <class K>
struct GenPoint {
  std::optional<std::pair<K, K>> aff;  // empty = point at infinity

  static GenPoint infinity() { return {}; }
  static GenPoint affine(K x, K y) {
    return {std::make_pair(std::move(x), std::move(y))};
  }
  bool is_infinity() const { return !aff.has_value(); }
  const K& x() const { return aff->first; }
  const K& y() const { return aff->second; }
  bool operator==(const GenPoint& o) const {
    if (is_infinity() || o.is_infinity())
      return is_infinity() == o.is_infinity();
    return x() == o.x() && y() == o.y();
  }
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with K coefficients
template <class K>
struct GenWeierstrass {
  K a1, a2, a3, a4, a6;
};

template <class K>
bool gen_on_curve(const GenWeierstrass<K>& e, const GenPoint<K>& p) {
  if (p.is_infinity()) return true;
  const K& x = p.x();
  const K& y = p.y();
  K lhs = y * y + e.a1 * x * y + e.a3 * y;
  K rhs = x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
  return lhs == rhs;
}

template <class K>
GenPoint<K> gen_neg(const GenWeierstrass<K>& e, const GenPoint<K>& p) {
  if (p.is_infinity()) return p;
  return GenPoint<K>::affine(p.x(), -(p.y() + e.a1 * p.x() + e.a3));
}

template <class K>
GenPoint<K> gen_add(const GenWeierstrass<K>& e, const GenPoint<K>& p,
                    const GenPoint<K>& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const K &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  K lambda = x1, nu = x1;  // overwritten below
  if (x1 == x2) {
    K ny = y2 + e.a1 * x2 + e.a3;
    if (field_is_zero<K>(y1 + ny)) return GenPoint<K>::infinity();
    // tangent line (P == Q here: two points with equal x are equal or inverse)
    K den = y1 + y1 + e.a1 * x1 + e.a3;
    K x1sq = x1 * x1;
    lambda = (x1sq + x1sq + x1sq + (e.a2 + e.a2) * x1 + e.a4 - e.a1 * y1) / den;
    nu = (-(x1sq * x1) + e.a4 * x1 + e.a6 + e.a6 - e.a3 * y1) / den;
  } else {
    K den = x2 - x1;
    lambda = (y2 - y1) / den;
    nu = (y1 * x2 - y2 * x1) / den;
  }
  K x3 = lambda * lambda + e.a1 * lambda - e.a2 - x1 - x2;
  K y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return GenPoint<K>::affine(std::move(x3), std::move(y3));
}

template <class K>
GenPoint<K> gen_mul(const GenWeierstrass<K>& e, long n, GenPoint<K> p) {
  if (n < 0) {
    p = gen_neg(e, p);
    n = -n;
  }
  GenPoint<K> acc = GenPoint<K>::infinity();
  while (n > 0) {
    if (n & 1) acc = gen_add(e, acc, p);
    n >>= 1;
    if (n) p = gen_add(e, p, p);
  }
  return acc;
}

// d y^2 = f3 x^3 + f2 x^2 + f1 x + f0 over K; carries the exact isomorphism
// with a Weierstrass model (x,y) -> (d f3 x, d^2 f3 y)
template <class K>
struct GenTwisted {
  K d, f3, f2, f1, f0;

  bool is_on(const GenPoint<K>& p) const {
    if (p.is_infinity()) return true;
    const K& x = p.x();
    const K& y = p.y();
    return d * y * y == f3 * x * x * x + f2 * x * x + f1 * x + f0;
  }

  GenWeierstrass<K> weierstrass() const {
    // scale to the monic twist d Y^2 = X^3 + f2 X^2 + f1 f3 X + f0 f3^2,
    // then absorb d via (X, Y) -> (d X, d^2 Y)
    K zero = d - d;
    return GenWeierstrass<K>{zero,           f2 * d,  zero,
                             f1 * f3 * d * d, f0 * f3 * f3 * d * d * d};
  }
  GenPoint<K> to_w(const GenPoint<K>& p) const {
    if (p.is_infinity()) return p;
    return GenPoint<K>::affine(d * f3 * p.x(), d * d * f3 * p.y());
  }
  GenPoint<K> from_w(const GenPoint<K>& p) const {
    if (p.is_infinity()) return p;
    return GenPoint<K>::affine(p.x() / (d * f3), p.y() / (d * d * f3));
  }

  GenPoint<K> neg(const GenPoint<K>& p) const {
    if (p.is_infinity()) return p;
    return GenPoint<K>::affine(p.x(), -p.y());
  }
  GenPoint<K> add(const GenPoint<K>& p, const GenPoint<K>& q) const {
    return from_w(gen_add(weierstrass(), to_w(p), to_w(q)));
  }
  GenPoint<K> mul(long n, const GenPoint<K>& p) const {
    return from_w(gen_mul(weierstrass(), n, to_w(p)));
  }
};

}  // namespace qtwist
