#pragma once

#include "qtwist/curves.hpp"
#include "qtwist/ecgroup.hpp"

namespace qtwist {

// Birational map between v^2 = quartic(t) with a rational point (t0, v0),
// v0 != 0, and a Weierstrass model. Writing the shifted quartic as
// a s^4 + b s^3 + c s^2 + d s + q^2 with s = t - t0 and q = v0, the model is
//
//   y^2 + (d/q) xy + (2qb) y = x^3 + (c - d^2/(4q^2)) x^2
//                              - 4q^2 a x + a(d^2 - 4q^2 c)
// via
//   x = (2q(v + q) + d s)/s^2
//   y = (4q^2(v + q) + 2qd s + (2qc - d^2/(2q)) s^2)/s^3.
//
// (t0, q) maps to the point at infinity; (t0, -q) to the finite point given
// by the tangent expansion. Affine curve points with y = 0 other than that
// one have no affine preimage (the exceptional locus) and are reported as
// such. K is any field type constructible from long (Rat, RatFunc).
template <class K>
struct QuarticMap {
  K a, b, c, d, q, t0;
  GenWeierstrass<K> curve;

  std::optional<GenPoint<K>> forward(const K& t, const K& v) const {
    K s = t - t0;
    if (field_is_zero(s)) {
      if (v == q) return GenPoint<K>::infinity();
      if (v == -q) return second_branch_image();
      return std::nullopt;  // not on the quartic
    }
    K vq = v + q;
    K s2 = s * s;
    K two_q = q + q;
    K x = (two_q * vq + d * s) / s2;
    K y = (K(4) * q * q * vq + two_q * d * s + (two_q * c - d * d / two_q) * s2) /
          (s2 * s);
    return GenPoint<K>::affine(std::move(x), std::move(y));
  }

  std::optional<std::pair<K, K>> inverse(const GenPoint<K>& p) const {
    if (p.is_infinity()) return std::make_pair(t0, q);
    K two_q = q + q;
    if (field_is_zero(p.y())) {
      GenPoint<K> sb = second_branch_image();
      if (field_is_zero(sb.y()) && p.x() == sb.x())
        return std::make_pair(t0, -q);
      return std::nullopt;  // exceptional: no affine preimage
    }
    K s = (two_q * p.x() + two_q * c - d * d / two_q) / p.y();
    K v = (p.x() * s * s - d * s - K(2) * q * q) / two_q;
    return std::make_pair(s + t0, v);
  }

  // image of (t0, -q); 2-torsion exactly when its y vanishes
  GenPoint<K> second_branch_image() const {
    K two_q = q + q;
    K mu = d / two_q;
    K nu = (c - mu * mu) / two_q;
    K x0 = -two_q * nu;
    K y0 = two_q * (mu * nu + mu * nu - b);
    return GenPoint<K>::affine(std::move(x0), std::move(y0));
  }
};

// Generic construction from v^2 = c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0 and a
// seed (t0, v0), v0 != 0, lying on it.
template <class K>
QuarticMap<K> quartic_map(const K& c4, const K& c3, const K& c2, const K& c1,
                          const K& c0, const K& t0, const K& v0) {
  if (field_is_zero(v0))
    throw DomainError("quartic seed with v = 0 is not supported");
  K value = (((c4 * t0 + c3) * t0 + c2) * t0 + c1) * t0 + c0;
  if (!(value == v0 * v0))
    throw PointNotOnCurve("seed does not satisfy the quartic equation");
  K t2 = t0 * t0;
  K t3 = t2 * t0;
  // Taylor shift t -> s + t0
  K a = c4;
  K b = K(4) * c4 * t0 + c3;
  K c = K(6) * c4 * t2 + K(3) * c3 * t0 + c2;
  K d = K(4) * c4 * t3 + K(3) * c3 * t2 + K(2) * c2 * t0 + c1;
  const K& q = v0;
  K q2 = q * q;
  GenWeierstrass<K> curve{d / q, c - d * d / (K(4) * q2), K(2) * q * b,
                          K(-4) * q2 * a, a * (d * d - K(4) * q2 * c)};
  return QuarticMap<K>{a, b, c, d, q, t0, std::move(curve)};
}

// Rat facade with checked inputs and the concrete curve type.
struct QuarticWeierstrass {
  QuarticMap<Rat> map;
  WeierstrassCurve curve;

  std::optional<ECPointQ> forward(const Rat& t, const Rat& v) const;
  std::optional<std::pair<Rat, Rat>> inverse(const ECPointQ& p) const;
  ECPointQ second_branch_image() const;
};

QuarticWeierstrass quartic_to_weierstrass(const QuarticCurve& quartic,
                                          const Rat& seed_t, const Rat& seed_v);

}  // namespace qtwist
