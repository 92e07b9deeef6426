#include "qtwist/certify.hpp"

#include <cmath>

#include "qtwist/ecgroup.hpp"

namespace qtwist {

namespace {

GenWeierstrass<Rat> as_gen(const WeierstrassCurve& e) {
  return {e.a1, e.a2, e.a3, e.a4, e.a6};
}

GenPoint<Rat> as_gen(const ECPointQ& p) {
  if (p.infinity) return GenPoint<Rat>::infinity();
  return GenPoint<Rat>::affine(p.x, p.y);
}

OrderCertificate scan_multiples(const GenWeierstrass<Rat>& e,
                                const GenPoint<Rat>& p,
                                const ECPointQ& original) {
  OrderCertificate cert;
  cert.point = original;
  if (p.is_infinity()) {
    cert.verdict = OrderVerdict::Torsion;
    cert.torsion_order = 1;
    return cert;
  }
  cert.witnesses.push_back(1);
  GenPoint<Rat> acc = p;
  for (int n = 2; n <= 12; ++n) {
    acc = gen_add(e, acc, p);
    if (acc.is_infinity()) {
      cert.verdict = OrderVerdict::Torsion;
      cert.torsion_order = n;
      cert.witnesses.clear();
      return cert;
    }
    if (n != 11) cert.witnesses.push_back(n);
  }
  cert.verdict = OrderVerdict::InfiniteOrder;
  return cert;
}

}  // namespace

OrderCertificate mazur_infinite_order(const WeierstrassCurve& e,
                                      const ECPointQ& p) {
  if (!e.is_on(p)) throw PointNotOnCurve("mazur scan: point not on curve");
  return scan_multiples(as_gen(e), as_gen(p), p);
}

OrderCertificate mazur_infinite_order(const TwistedCurve& e, const ECPointQ& p) {
  if (!e.is_on(p)) throw PointNotOnCurve("mazur scan: point not on curve");
  WeierstrassCurve w = e.weierstrass();
  return scan_multiples(as_gen(w), as_gen(e.to_weierstrass_point(p)), p);
}

long count_points_mod_p(const WeierstrassCurve& integral, long p) {
  if (integral.a1 != 0 || integral.a3 != 0)
    throw DomainError("point counting expects a1 = a3 = 0");
  for (const Rat* c : {&integral.a2, &integral.a4, &integral.a6})
    if (!is_integer(*c))
      throw DomainError("point counting expects integral coefficients");
  if (p < 3) throw DomainError("point counting needs an odd prime");
  auto red = [&](const Rat& c) {
    IntZ m = c.get_num() % p;
    long v = m.get_si();
    return v < 0 ? v + p : v;
  };
  long a2 = red(integral.a2), a4 = red(integral.a4), a6 = red(integral.a6);
  std::vector<char> is_sq(static_cast<size_t>(p), 0);
  for (long y = 0; y <= p / 2; ++y) is_sq[static_cast<size_t>(y * y % p)] = 1;
  long count = 1;  // the point at infinity
  for (long x = 0; x < p; ++x) {
    long fx = (((x + a2) % p * x + a4) % p * x + a6) % p;
    if (fx == 0)
      count += 1;
    else if (is_sq[static_cast<size_t>(fx)])
      count += 2;
  }
  return count;
}

IntZ modp_torsion_bound(const WeierstrassCurve& integral,
                        const std::vector<long>& primes) {
  IntZ disc_num = integral.disc().get_num();
  IntZ g(0);
  int used = 0;
  for (long p : primes) {
    if (p <= 3 || p % 2 == 0) continue;
    if (disc_num % p == 0) continue;  // bad reduction: prime rejected
    IntZ n(count_points_mod_p(integral, p));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ++used;
  }
  if (used == 0) throw DomainError("no valid prime of good reduction supplied");
  return g;
}

std::vector<long> good_odd_primes(const WeierstrassCurve& integral, int count,
                                  long min_exclusive) {
  IntZ disc_num = integral.disc().get_num();
  if (disc_num == 0) throw SingularCurveError("singular curve");
  std::vector<long> out;
  IntZ p(min_exclusive);
  while (static_cast<int>(out.size()) < count) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (disc_num % p == 0) continue;
    out.push_back(p.get_si());
  }
  return out;
}

IndependenceReport relation_scan(const TwistedCurve& e, const ECPointQ& p1,
                                 const ECPointQ& p2, int bound) {
  if (!e.is_on(p1) || !e.is_on(p2))
    throw PointNotOnCurve("relation scan: point not on curve");
  if (bound < 1) throw DomainError("relation bound must be positive");
  IndependenceReport rep;
  rep.relation_bound = bound;
  WeierstrassCurve w = e.weierstrass();
  GenWeierstrass<Rat> gw = as_gen(w);
  GenPoint<Rat> g1 = as_gen(e.to_weierstrass_point(p1));
  GenPoint<Rat> g2 = as_gen(e.to_weierstrass_point(p2));
  std::vector<GenPoint<Rat>> m1(static_cast<size_t>(bound) + 1,
                                GenPoint<Rat>::infinity());
  for (int a = 1; a <= bound; ++a) m1[a] = gen_add(gw, m1[a - 1], g1);
  // index b + bound holds b * P2 for b in [-bound, bound]
  std::vector<GenPoint<Rat>> m2(static_cast<size_t>(2 * bound) + 1,
                                GenPoint<Rat>::infinity());
  for (int b = 1; b <= bound; ++b) {
    m2[bound + b] = gen_add(gw, m2[bound + b - 1], g2);
    m2[bound - b] = gen_neg(gw, m2[bound + b]);
  }
  for (int a = 0; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      if (a == 0 && b <= 0) continue;  // (0,0) and (-a,-b) mirrors
      GenPoint<Rat> s = gen_add(gw, m1[a], m2[bound + b]);
      ECPointQ sq =
          s.is_infinity() ? ECPointQ::infty() : ECPointQ::affine(s.x(), s.y());
      OrderCertificate c = mazur_infinite_order(w, sq);
      if (c.verdict == OrderVerdict::Torsion) rep.relations.push_back({a, b});
    }
  }
  if (!rep.relations.empty()) rep.verdict = IndependenceVerdict::RelationFound;
  return rep;
}

namespace {

struct IntegralScene {
  WeierstrassCurve curve;
  GenWeierstrass<Rat> gen;
  GenPoint<Rat> point;
};

IntegralScene integral_scene(const TwistedCurve& e, const ECPointQ& p) {
  WeierstrassCurve w = e.weierstrass();
  auto [shrt, t1] = to_short(w);
  auto [integral, t2] = to_integral_short(shrt);
  ECPointQ wp = t2.fwd(t1.fwd(e.to_weierstrass_point(p)));
  return {integral, as_gen(integral), as_gen(wp)};
}

double naive_height(const GenPoint<Rat>& p) {
  if (p.is_infinity()) return 0.0;
  const Rat& x = p.x();
  IntZ n = abs(x.get_num());
  IntZ d = x.get_den();
  const IntZ& m = n > d ? n : d;
  if (m <= 1) return 0.0;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, m.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

std::optional<double> canonical_height_estimate(const TwistedCurve& e,
                                                const ECPointQ& p,
                                                int n_doublings,
                                                size_t digit_budget) {
  if (!e.is_on(p)) throw PointNotOnCurve("height estimate: point not on curve");
  if (n_doublings < 1) throw DomainError("need at least one doubling");
  IntegralScene sc = integral_scene(e, p);
  GenPoint<Rat> q = sc.point;
  double scale = 1.0;
  for (int i = 0; i < n_doublings; ++i) {
    q = gen_add(sc.gen, q, q);
    scale *= 4.0;
    if (q.is_infinity()) return 0.0;  // the point was torsion
    size_t digits = mpz_sizeinbase(q.x().get_num_mpz_t(), 10) +
                    mpz_sizeinbase(q.x().get_den_mpz_t(), 10);
    if (digits > digit_budget) return std::nullopt;
  }
  return naive_height(q) / scale;
}

IndependenceReport regulator_evidence(const TwistedCurve& e,
                                      const ECPointQ& p1, const ECPointQ& p2,
                                      const CertifyConfig& cfg) {
  IndependenceReport rep = relation_scan(e, p1, p2, cfg.relation_bound);
  rep.tolerance = cfg.regulator_tolerance;
  if (rep.verdict == IndependenceVerdict::RelationFound) return rep;

  auto h1 = canonical_height_estimate(e, p1, cfg.n_doublings, cfg.digit_budget);
  auto h2 = canonical_height_estimate(e, p2, cfg.n_doublings, cfg.digit_budget);
  ECPointQ sum = ec_add(e, p1, p2);
  auto h12 =
      canonical_height_estimate(e, sum, cfg.n_doublings, cfg.digit_budget);
  if (!h1 || !h2 || !h12) {
    rep.verdict = IndependenceVerdict::Inconclusive;
    return rep;
  }
  rep.height1 = *h1;
  rep.height2 = *h2;
  rep.pairing = (*h12 - *h1 - *h2) / 2.0;
  rep.regulator = rep.height1 * rep.height2 - rep.pairing * rep.pairing;
  rep.verdict = rep.regulator > rep.tolerance
                    ? IndependenceVerdict::IndependentEvidence
                    : IndependenceVerdict::Inconclusive;
  return rep;
}

QuadExt symbolic_curve_residual(const SymbolicTwistedCurve& curve,
                                const SymbolicPoint& p) {
  const MPoly& q = curve.modulus;
  QuadExt one = QuadExt::constant(Rat(1), q);
  QuadExt lam(curve.lambda, RatFunc(), q);
  QuadExt d(curve.d, RatFunc(), q);
  const QuadExt& x = p.x;
  const QuadExt& y = p.y;
  return d * y * y - x * (x - one) * (x - lam);
}

bool verify_function_field_independence(const SymbolicTwistedCurve& curve,
                                        const SymbolicPoint& p1,
                                        const SymbolicPoint& p2) {
  if (!symbolic_curve_residual(curve, p1).is_zero() ||
      !symbolic_curve_residual(curve, p2).is_zero())
    throw DomainError("points do not satisfy the symbolic twisted equation");
  if (p1.y.is_zero() || p2.y.is_zero()) return false;  // 2-torsion shapes
  bool fixes_p1 = p1.x.conj() == p1.x && p1.y.conj() == p1.y;
  bool negates_p2 = p2.x.conj() == p2.x && p2.y.conj() == -p2.y;
  return fixes_p1 && negates_p2;
}

}  // namespace qtwist
