#include <doctest.h>

#include <random>

#include "qtwist/intfactor.hpp"
#include "qtwist/parser.hpp"
#include "qtwist/quadext.hpp"

using namespace qtwist;

static MPoly V(Var v) { return MPoly::variable(v); }

TEST_CASE("rational scalar basics") {
  CHECK(rat_str(make_rat(IntZ(-50), IntZ(18))) == "-25/9");
  CHECK(rat_parse("-25/9").value() == rat_from_long(-25, 9));
  CHECK(rat_parse("7").value() == 7);
  CHECK(!rat_parse("1/0"));
  CHECK(!rat_parse(""));
  CHECK(!rat_parse("2.5"));
  CHECK(rat_is_square(rat_from_long(4, 9)));
  CHECK(!rat_is_square(rat_from_long(-4, 9)));
  CHECK(rat_sqrt(rat_from_long(4, 9)).value() == rat_from_long(2, 3));
}

TEST_CASE("square-free kernel of integers") {
  auto k = square_free_kernel_int(IntZ(72));
  CHECK(k.kernel == 2);
  CHECK(k.cofactor_sq == 6);
  CHECK(k.complete);

  k = square_free_kernel_int(IntZ(-180));
  CHECK(k.kernel == -5);
  CHECK(k.cofactor_sq == 6);
  CHECK(k.complete);

  k = square_free_kernel_int(IntZ(101));
  CHECK(k.kernel == 101);
  CHECK(k.cofactor_sq == 1);
  CHECK(k.complete);
}

TEST_CASE("square-free kernel beyond the trial bound") {
  // p, q primes above any small trial bound
  IntZ p("1000003");
  IntZ q("1000033");
  FactorBudget b;
  b.trial_bound = 1000;
  auto k = square_free_kernel_int(p * p * q, b);
  CHECK(k.kernel == q);
  CHECK(k.cofactor_sq == p);
  CHECK(k.complete);
  // exact identity always holds
  CHECK(k.kernel * k.cofactor_sq * k.cofactor_sq == p * p * q);
}

TEST_CASE("square-free kernel invariant on random values") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    long a = static_cast<long>(rng() % 10000) + 1;
    long b = static_cast<long>(rng() % 1000) + 1;
    IntZ n = IntZ(a) * IntZ(b) * IntZ(b) * (rng() % 2 ? 1 : -1);
    auto k = square_free_kernel_int(n);
    CHECK(k.kernel * k.cofactor_sq * k.cofactor_sq == n);
    REQUIRE(k.complete);
    // kernel square-free: no prime square below 100 divides it
    for (long pr : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
      CHECK(k.kernel % (pr * pr) != 0);
    }
  }
}

TEST_CASE("polynomial arithmetic and printing") {
  MPoly x = V(Var::x);
  MPoly p = x * (x - MPoly(1L)) * (x - MPoly(2L));
  CHECK(p.str() == "x^3 - 3*x^2 + 2*x");
  CHECK(p.deg(Var::x) == 3);
  CHECK(p.eval_var(Var::x, Rat(3)).constant_value() == 6);
  MPoly d = p.derivative(Var::x);
  CHECK(d == MPoly(3L) * x * x - MPoly(6L) * x + MPoly(2L));
}

TEST_CASE("exact division") {
  MPoly t = V(Var::t);
  MPoly a = (t * t - MPoly(1L)) * (t + MPoly(2L));
  CHECK(divide_exact(a, t + MPoly(2L)).value() == t * t - MPoly(1L));
  CHECK(!divide_exact(a, t + MPoly(3L)));
}

TEST_CASE("gcd of polynomials") {
  MPoly t = V(Var::t);
  CHECK(poly_gcd(t * t - MPoly(1L), t - MPoly(1L)) == t - MPoly(1L));
  CHECK(poly_gcd(t * t - MPoly(1L), t + MPoly(2L)) == MPoly(1L));
  // (t-alpha)^2 vs (t-alpha)(t-1), gcd in t
  MPoly al = V(Var::alpha);
  MPoly f = (t - al) * (t - al);
  MPoly g = (t - al) * (t - MPoly(1L));
  MPoly gc = poly_gcd_in(f, g, Var::t);
  CHECK(gc == t - al);
  CHECK(divide_exact(f, gc).has_value());
  CHECK(divide_exact(g, gc).has_value());
}

TEST_CASE("squarefree part modulo squares") {
  MPoly t = V(Var::t);
  MPoly sq = (t * t - MPoly(1L));
  MPoly p = sq * sq * (t - MPoly(2L));
  auto sf = squarefree_part(p);
  CHECK(sf.part == t - MPoly(2L));
  // p == constant * part * cofactor^2
  CHECK(MPoly(sf.constant) * sf.part * sf.cofactor * sf.cofactor == p);
}

TEST_CASE("squarefree part invariance under square multiples") {
  std::mt19937_64 rng(7);
  MPoly t = V(Var::t);
  auto rand_poly = [&](int deg) {
    MPoly p;
    for (int k = 0; k <= deg; ++k) {
      long c = static_cast<long>(rng() % 11) - 5;
      if (c != 0) p += MPoly(Rat(c)) * t.pow(k);
    }
    if (p.is_zero()) p = t + MPoly(1L);
    return p;
  };
  for (int i = 0; i < 40; ++i) {
    MPoly p = rand_poly(4);
    MPoly w = rand_poly(2);
    auto s1 = squarefree_part(p);
    auto s2 = squarefree_part(p * w * w);
    CHECK(s1.part == s2.part);
    CHECK(rat_is_square(abs(s1.constant / s2.constant)));
    CHECK(s1.constant / s2.constant > 0);
  }
}

TEST_CASE("polynomial square root") {
  MPoly t = V(Var::t);
  MPoly al = V(Var::alpha);
  MPoly s = (t * t + al * t + MPoly(3L));
  CHECK(poly_sqrt(s * s).value() == s);
  CHECK(!poly_sqrt(s * s * t));
  CHECK(poly_sqrt(MPoly(Rat(0))).value() == MPoly());
}

TEST_CASE("rational roots") {
  MPoly a = V(Var::alpha);
  // (alpha - 2)(2 alpha + 3) alpha
  MPoly p = (a - MPoly(2L)) * (MPoly(2L) * a + MPoly(3L)) * a;
  auto roots = rational_roots(p, Var::alpha);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == rat_from_long(-3, 2));
  CHECK(roots[1] == 0);
  CHECK(roots[2] == 2);
}

TEST_CASE("parser examples") {
  RatFunc p = parse_expr("x*(x-1)*(x-2)");
  MPoly x = V(Var::x);
  CHECK(p.is_poly());
  CHECK(p.num() == x * (x - MPoly(1L)) * (x - MPoly(2L)));

  RatFunc r = parse_expr("(-25)/9");
  CHECK(r.is_constant());
  CHECK(r.constant_value() == rat_from_long(-25, 9));

  CHECK_THROWS_AS(parse_expr("x*(x"), ParseError);
  try {
    parse_expr("x*(x");
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
  }
  CHECK_THROWS_AS(parse_expr("1/(x-x)"), ParseError);
  CHECK_THROWS_AS(parse_expr("y+1"), ParseError);
  CHECK(parse_expr("alpha^2") == parse_expr("\xce\xb1*\xce\xb1"));
  CHECK(parse_expr("t^-2") == RatFunc(MPoly(1L)) / RatFunc(V(Var::t).pow(2)));
}

TEST_CASE("parse/render round trip on random polynomials") {
  std::mt19937_64 rng(2024);
  std::vector<Var> vars{Var::t, Var::alpha, Var::x};
  for (int i = 0; i < 60; ++i) {
    MPoly p;
    int terms = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < terms; ++k) {
      Exp e{};
      for (Var v : vars) e[static_cast<int>(v)] = static_cast<int>(rng() % 4);
      long num = static_cast<long>(rng() % 19) - 9;
      long den = 1 + static_cast<long>(rng() % 6);
      p += MPoly::term(make_rat(IntZ(num), IntZ(den)), e);
    }
    RatFunc back = parse_expr(p.str());
    CHECK(back.is_poly());
    CHECK(back.num() == p);
  }
}

TEST_CASE("rational function normal form and equality") {
  MPoly t = V(Var::t);
  RatFunc r = RatFunc::quotient((t * t - MPoly(1L)) * (t + MPoly(3L)),
                                (t - MPoly(1L)) * (t + MPoly(3L)) * MPoly(2L));
  RatFunc s = RatFunc::quotient(t + MPoly(1L), MPoly(2L));
  CHECK(r == s);
  RatFunc red = r.reduced();
  CHECK(red.num() == (t + MPoly(1L)) * Rat(1, 2));
  CHECK(red.den() == MPoly(1L));
  CHECK(r.str() == "(1/2)*t + 1/2");
}

TEST_CASE("fractional-linear composition") {
  MPoly t = V(Var::t);
  // f = t, h = (2t+1)/(t+1)
  FracLinMap h(RatFunc(2L), RatFunc(1L), RatFunc(1L), RatFunc(1L), Var::t);
  RatFunc c = compose_fraclin(t, h);
  CHECK(c == RatFunc::quotient(MPoly(2L) * t + MPoly(1L), t + MPoly(1L)));
  // identity map
  FracLinMap id(RatFunc(1L), RatFunc(0L), RatFunc(0L), RatFunc(1L), Var::x);
  MPoly x = V(Var::x);
  MPoly f = x * (x - MPoly(1L)) * (x - MPoly(2L));
  CHECK(compose_fraclin(f, id) == RatFunc(f));
  CHECK(id.is_identity());
  CHECK_THROWS_AS(FracLinMap(RatFunc(1L), RatFunc(1L), RatFunc(1L), RatFunc(1L), Var::t),
                  DomainError);
}

TEST_CASE("root-permuting composition identity") {
  // f = x(x-1)(x-a), h(z) = a z/((a+1)z - a) sends the roots 0,1,a to 0,a,1.
  // For any root-permuting (az+b)/(cz+d): f(h(z)) = c^3 f(a/c) f(z)/(cz+d)^3,
  // so f(h)/f is a square times c f(a/c) (cz+d).
  MPoly x = V(Var::x), z = V(Var::z), a = V(Var::alpha);
  MPoly f = x * (x - MPoly(1L)) * (x - a);
  RatFunc c{a + MPoly(1L)};
  FracLinMap h(RatFunc(a), RatFunc(), c, RatFunc(-a), Var::z);
  RatFunc lhs = compose_fraclin(f.subst(Var::x, z), h);
  RatFunc f_at = RatFunc(f).subst(Var::x, RatFunc(a) / c);
  RatFunc fz = RatFunc(f.subst(Var::x, z));
  RatFunc lin{(a + MPoly(1L)) * z - a};
  CHECK(lhs == c.pow(3) * f_at * fz / lin.pow(3));
  CHECK(same_square_class(lhs / fz, c * f_at * lin));
}

TEST_CASE("quadratic extension ring") {
  MPoly t = V(Var::t), al = V(Var::alpha);
  // q = alpha^2 t^4 - (alpha^2+1)^2 t^2 + 4 alpha^2
  MPoly a2 = al * al;
  MPoly q = a2 * t.pow(4) - (a2 + MPoly(1L)).pow(2) * t * t + MPoly(4L) * a2;
  QuadExt u = QuadExt::gen(q);
  QuadExt one = QuadExt::constant(Rat(1), q);

  CHECK(u * u == QuadExt(RatFunc(q), RatFunc(), q));
  CHECK((one + u) * (one - u) == QuadExt(RatFunc(MPoly(1L) - q), RatFunc(), q));
  CHECK(u.pow(4) == QuadExt(RatFunc(q * q), RatFunc(), q));
  CHECK(u.conj() == -u);
  CHECK(u * u.inverse() == one);

  // embedding expressions with u powers
  RatFunc expr = parse_expr("(1+u)^2") ;
  QuadExt e = QuadExt::from_ratfunc(expr, q);
  CHECK(e.a() == RatFunc(MPoly(1L) + q));
  CHECK(e.b() == RatFunc(2L));

  // ring axioms on pseudo-random triples
  std::mt19937_64 rng(5);
  auto rand_elem = [&]() {
    RatFunc a1(MPoly(Rat(static_cast<long>(rng() % 7) - 3)) * t +
               MPoly(Rat(static_cast<long>(rng() % 5))));
    RatFunc b1(MPoly(Rat(static_cast<long>(rng() % 7) - 3)));
    return QuadExt(a1, b1, q);
  };
  for (int i = 0; i < 25; ++i) {
    QuadExt A = rand_elem(), B = rand_elem(), C = rand_elem();
    CHECK((A + B) * C == A * C + B * C);
    CHECK((A * B) * C == A * (B * C));
    CHECK(A * B == B * A);
  }
  CHECK_THROWS_AS(u * QuadExt::gen(t + MPoly(1L)), DomainError);
}

TEST_CASE("square class helpers") {
  MPoly t = V(Var::t);
  RatFunc r{(t + MPoly(1L)) * (t + MPoly(1L)) * MPoly(4L)};
  CHECK(r.is_square());
  CHECK(r.sqrt().value() == RatFunc((t + MPoly(1L)) * MPoly(2L)));
  RatFunc nr{(t + MPoly(1L)) * MPoly(3L)};
  CHECK(!nr.is_square());
  CHECK(same_square_class(r * nr, nr));
  CHECK(!same_square_class(r * nr, r));
  auto sf = ratfunc_squarefree_part(RatFunc::quotient(t * t * (t - MPoly(2L)), MPoly(9L)));
  CHECK(sf.part == t - MPoly(2L));
}
