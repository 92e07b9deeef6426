#include <doctest.h>

#include <random>

#include "qtwist/quartic.hpp"

using namespace qtwist;

TEST_CASE("j-invariants of short curves") {
  CHECK(WeierstrassCurve::short_form(Rat(0), Rat(1)).j_invariant() == 0);
  CHECK(WeierstrassCurve::short_form(Rat(1), Rat(0)).j_invariant() == 1728);
  CHECK_THROWS_AS(WeierstrassCurve::short_form(Rat(0), Rat(0)).j_invariant(),
                  SingularCurveError);
}

TEST_CASE("legendre orbit") {
  auto orbit = legendre_orbit(Rat(2));
  REQUIRE(orbit.size() == 3);
  CHECK(orbit[0] == -1);
  CHECK(orbit[1] == rat_from_long(1, 2));
  CHECK(orbit[2] == 2);
  CHECK(legendre_orbit(Rat(-1)) == orbit);
  // closure: the orbit of every member is the same set
  for (const Rat& m : orbit) CHECK(legendre_orbit(m) == orbit);
  CHECK(legendre_isomorphic(Rat(2), rat_from_long(1, 2)));
  CHECK(!legendre_isomorphic(Rat(2), Rat(3)));
  CHECK_THROWS_AS(legendre_orbit(Rat(1)), DomainError);
}

TEST_CASE("group law basics on a twisted Legendre curve") {
  TwistedCurve e = twist(CubicPoly::legendre(Rat(5)), Rat(1));
  ECPointQ t2 = ECPointQ::affine(Rat(0), Rat(0));  // 2-torsion
  CHECK(ec_add(e, t2, ECPointQ::infty()) == t2);
  CHECK(ec_add(e, t2, ec_neg(e, t2)) == ECPointQ::infty());
  CHECK(ec_mul(e, 2, t2) == ECPointQ::infty());
  CHECK(ec_mul(e, 1, t2) == t2);
  CHECK(ec_mul(e, 0, t2) == ECPointQ::infty());
  CHECK_THROWS_AS(ec_add(e, ECPointQ::affine(Rat(1), Rat(1)), t2),
                  PointNotOnCurve);
}

TEST_CASE("n P + m P == (n+m) P on a derived curve") {
  // construct a curve through a chosen point, then check multiples
  Rat x0(2), y0(3);
  // y^2 = x^3 + a4 x + a6 with a6 fixed by the point
  Rat a4(-1);
  Rat a6 = y0 * y0 - x0 * x0 * x0 - a4 * x0;
  WeierstrassCurve e = WeierstrassCurve::short_form(a4, a6);
  REQUIRE(e.disc() != 0);
  ECPointQ p = ECPointQ::affine(x0, y0);
  for (long n = -3; n <= 3; ++n) {
    for (long m = -3; m <= 3; ++m) {
      ECPointQ lhs = ec_add(e, ec_mul(e, n, p), ec_mul(e, m, p));
      CHECK(lhs == ec_mul(e, n + m, p));
    }
  }
}

TEST_CASE("twist scaling identities") {
  CubicPoly f = CubicPoly::legendre(rat_from_long(-25, 9));
  Rat d(-5);
  TwistedCurve e = twist(f, d);
  TwistedCurve e1 = twist(f, Rat(1));
  // same j for every twist
  CHECK(e.j_invariant() == e1.j_invariant());
  CHECK(twist(f, rat_from_long(7, 3)).j_invariant() == e1.j_invariant());
  // E^{c^2 d} ~ E^d via (x, y) -> (x, y/c)
  Rat c(3);
  TwistedCurve ec2d = twist(f, c * c * d);
  // find a point on e: x with d f(x) square... use the 2-torsion (0,0)
  ECPointQ p = ECPointQ::affine(Rat(1), Rat(0));
  CHECK(e.is_on(p));
  CHECK(ec2d.is_on(p));
  // a non-torsion check via the Weierstrass model round trip
  ECPointQ w = e.to_weierstrass_point(p);
  CHECK(e.weierstrass().is_on(w));
  CHECK(e.from_weierstrass_point(w) == p);
}

TEST_CASE("genus bound") {
  MPoly u = MPoly::variable(Var::u);
  MPoly g6 = (u.pow(2) - MPoly(1L)) * (u.pow(2) - MPoly(2L)) *
             (MPoly(2L) * u.pow(2) - MPoly(3L));
  CHECK(genus_bound(g6) == 2);
  MPoly t = MPoly::variable(Var::t);
  MPoly g3 = t * (t - MPoly(1L)) * (t + MPoly(1L));
  CHECK(genus_bound(g3) == 1);
  // degree 12, square-free
  MPoly g12 = (t.pow(4) + MPoly(4L)) * (t.pow(4) + MPoly(1L)) *
              (t.pow(4) + MPoly(2L) * t * t + MPoly(4L));
  CHECK(genus_bound(g12, Var::t) == 5);
  CHECK_THROWS_AS(genus_bound(t * t), DomainError);
  CHECK_THROWS_AS(genus_bound(MPoly(3L)), DomainError);
}

TEST_CASE("weierstrass transforms compose and invert") {
  WeierstrassCurve e{Rat(1), Rat(-2), Rat(3), rat_from_long(1, 2), Rat(-7)};
  auto [shrt, tr] = to_short(e);
  CHECK(shrt.is_short());
  CHECK(shrt.j_invariant() == e.j_invariant());
  // transforms carry points faithfully both ways: build a point on e by
  // solving y from the quadratic at a crafted x... instead verify on the
  // curve equation transported from a point found on the short model side
  Rat x0(1);
  // pick a6 so that (1, 2) is on a *new* short curve, then map back
  WeierstrassCurve s2 = WeierstrassCurve::short_form(
      shrt.a4, Rat(4) - Rat(1) - shrt.a4 * Rat(1));
  ECPointQ ps = ECPointQ::affine(x0, Rat(2));
  REQUIRE(s2.is_on(ps));
  // round-trip through the transform pair
  CHECK(tr.fwd(tr.back(ps)) == ps);
}

TEST_CASE("short isomorphism search") {
  WeierstrassCurve a = WeierstrassCurve::short_form(Rat(-37611), Rat(2266650));
  // scale by mu = 1/3: A' = A/81, B' = B/729
  WeierstrassCurve b = WeierstrassCurve::short_form(
      Rat(-37611) / 81, Rat(2266650) / 729);
  auto iso = find_short_isomorphism(a, b);
  REQUIRE(iso.has_value());
  WeierstrassCurve mapped = iso->apply(a);
  CHECK(mapped == b);
  // no isomorphism to a quadratic twist (scale by non-square)
  WeierstrassCurve c = WeierstrassCurve::short_form(
      Rat(-37611) * 4, Rat(2266650) * 8);
  CHECK(!find_short_isomorphism(a, c).has_value());
}

TEST_CASE("quartic to weierstrass at alpha = 2") {
  QuarticCurve c2{Rat(4), Rat(0), Rat(-25), Rat(0), Rat(16)};
  auto qw = quartic_to_weierstrass(c2, Rat(0), Rat(4));
  // the model is y^2 = x^3 - 25x^2 - 256x + 6400
  CHECK(qw.curve.a1 == 0);
  CHECK(qw.curve.a3 == 0);
  CHECK(qw.curve.a2 == -25);
  CHECK(qw.curve.a4 == -256);
  CHECK(qw.curve.a6 == 6400);

  WeierstrassCurve paper_model =
      WeierstrassCurve::short_form(Rat(-37611), Rat(2266650));
  CHECK(qw.curve.j_invariant() == paper_model.j_invariant());

  // (X, Y) lies on that model
  ECPointQ xy = ECPointQ::affine(rat_from_long(92625, 64),
                                 rat_from_long(27946215, 512));
  REQUIRE(paper_model.is_on(xy));

  // pull (X, Y) back to the quartic model through the isomorphism
  auto [wshort, tr] = to_short(qw.curve);
  auto iso = find_short_isomorphism(paper_model, wshort);
  REQUIRE(iso.has_value());
  ECPointQ on_w = tr.back(iso->fwd(xy));
  REQUIRE(qw.curve.is_on(on_w));

  // walk a few multiples and round-trip through the birational maps
  ECPointQ g = on_w;
  for (int k = 1; k <= 4; ++k) {
    auto tv = qw.inverse(g);
    REQUIRE(tv.has_value());
    auto [t, v] = *tv;
    CHECK(v * v == c2.eval(t));
    auto back = qw.forward(t, v);
    REQUIRE(back.has_value());
    CHECK(*back == g);
    g = ec_add(qw.curve, g, on_w);
  }

  // second branch image is the 2-torsion point (25, 0)
  ECPointQ sb = qw.second_branch_image();
  CHECK(sb == ECPointQ::affine(Rat(25), Rat(0)));
  CHECK(qw.curve.is_on(sb));
  CHECK(ec_mul(qw.curve, 2, sb) == ECPointQ::infty());
  CHECK(qw.inverse(sb).value() == std::make_pair(Rat(0), Rat(-4)));
}

TEST_CASE("quartic map round trip on random quartics") {
  std::mt19937_64 rng(99);
  int built = 0;
  while (built < 10) {
    Rat a(static_cast<long>(rng() % 9) + 1);
    Rat b(static_cast<long>(rng() % 7) - 3);
    Rat c(static_cast<long>(rng() % 11) - 5);
    Rat d(static_cast<long>(rng() % 7) - 3);
    Rat q(static_cast<long>(rng() % 5) + 1);
    try {
      QuarticCurve quartic{a, b, c, d, q * q};
      auto qw = quartic_to_weierstrass(quartic, Rat(0), q);
      ECPointQ t2 = qw.second_branch_image();
      REQUIRE(qw.curve.is_on(t2));
      ECPointQ g = t2;
      for (int k = 1; k <= 3; ++k) {
        auto tv = qw.inverse(g);
        if (tv) {
          auto [t, v] = *tv;
          CHECK(v * v == quartic.eval(t));
          auto back = qw.forward(t, v);
          REQUIRE(back.has_value());
          CHECK(*back == g);
        }
        g = ec_add(qw.curve, g, t2);
        if (g.infinity) break;
      }
      ++built;
    } catch (const SingularCurveError&) {
      continue;  // rare singular draw; try another
    }
  }
}
