#include "qtwist/families.hpp"

#include <algorithm>

#include "qtwist/parser.hpp"

namespace qtwist {

namespace {

SymbolicPoint make_point(const std::string& x_src, const std::string& y_src,
                         const MPoly& q) {
  return SymbolicPoint{QuadExt::from_ratfunc(parse_expr(x_src), q),
                       QuadExt::from_ratfunc(parse_expr(y_src), q)};
}

// rational alphas where the pair collides with itself: lambda_i degenerate,
// a pole, or lambda2 landing in the isomorphism orbit of lambda1
std::vector<Rat> compute_excluded_alpha(const RatFunc& l1, const RatFunc& l2) {
  std::vector<Rat> out;
  auto add_roots = [&out](const RatFunc& expr) {
    RatFunc r = expr.reduced();
    if (r.is_zero()) return;
    const MPoly& num = r.num();
    if (!num.depends_on(Var::alpha)) return;
    for (const Rat& root : rational_roots(num, Var::alpha)) out.push_back(root);
  };
  RatFunc one(1L);
  for (const RatFunc* l : {&l1, &l2}) {
    add_roots(*l);
    add_roots(*l - one);
    if (!l->den().is_constant()) add_roots(RatFunc{l->den()});
  }
  const std::array<RatFunc, 6> orbit{l1,
                                     one - l1,
                                     one / l1,
                                     one / (one - l1),
                                     l1 / (l1 - one),
                                     (l1 - one) / l1};
  for (const RatFunc& s : orbit) add_roots(l2 - s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PairFamily build_theorem51() {
  MPoly q = parse_expr("alpha^2*t^4 - (alpha^2+1)^2*t^2 + 4*alpha^2").num();
  PairFamily fam{
      "thm51",
      parse_expr("-(alpha^2+1)^2/(alpha^2-1)^2"),
      parse_expr("(alpha^2+1)^2/(4*alpha^2)"),
      // h_i(z) = lambda_i z / ((lambda_i + 1) z - lambda_i)
      FracLinMap(parse_expr("-(alpha^2+1)^2/(alpha^2-1)^2"), RatFunc(0L),
                 parse_expr("-(alpha^2+1)^2/(alpha^2-1)^2 + 1"),
                 parse_expr("(alpha^2+1)^2/(alpha^2-1)^2"), Var::z),
      FracLinMap(parse_expr("(alpha^2+1)^2/(4*alpha^2)"), RatFunc(0L),
                 parse_expr("(alpha^2+1)^2/(4*alpha^2) + 1"),
                 parse_expr("-(alpha^2+1)^2/(4*alpha^2)"), Var::z),
      parse_expr("(alpha^2-1)*t/(alpha*(t^2-2))"),
      parse_expr("(t^4+4)*(t^4*(alpha^2-1)^2 + 4*t^2*(alpha^2+1)^2 + "
                 "4*(alpha^2-1)^2)*(alpha^2*t^4 - (alpha^2+1)^2*t^2 + "
                 "4*alpha^2)")
          .num(),
      q,
      {make_point("(t^4+4)*(alpha^2+1)^2/(4*u^2)",
                  "(t^2-2)*(alpha^2+1)^3/(8*(alpha^2-1)*u^4)", q),
       make_point("t^2/4 + 1/t^2", "(t^2-2)/(8*t^3*(alpha^2-1)*u)", q),
       make_point("(t^4+4)*(alpha^2+1)^2/(4*u^2)",
                  "t*(alpha^2+1)^3/(8*alpha*u^4)", q),
       make_point("(t^4+4)/(t^2+2)^2", "t/((t^2+2)^3*alpha*u)", q)},
      {}};
  fam.excluded_alpha = compute_excluded_alpha(fam.lambda1, fam.lambda2);
  return fam;
}

PairFamily build_theorem53() {
  MPoly q = parse_expr("alpha^2*t^4 - (alpha^2+1)^2*t^2 + 4*alpha^2").num();
  const std::string big =
      "((alpha^2-1)^2*t^4 + 4*(alpha^2+1)^2*t^2 + 4*(alpha^2-1)^2)";
  PairFamily fam{
      "thm53",
      parse_expr("2*(1+alpha^4)/(alpha^2-1)^2"),
      parse_expr("-(alpha^2-1)^2/(4*alpha^2)"),
      // h_i(z) = (z - lambda_i)/((2 - lambda_i) z - 1)
      FracLinMap(RatFunc(1L), parse_expr("-(2*(1+alpha^4)/(alpha^2-1)^2)"),
                 parse_expr("2 - 2*(1+alpha^4)/(alpha^2-1)^2"), RatFunc(-1L),
                 Var::z),
      FracLinMap(RatFunc(1L), parse_expr("(alpha^2-1)^2/(4*alpha^2)"),
                 parse_expr("2 + (alpha^2-1)^2/(4*alpha^2)"), RatFunc(-1L),
                 Var::z),
      parse_expr("(alpha^2-1)*t/(alpha*(t^2-2))"),
      parse_expr("-(t^4+4)*" + big +
                 "*(alpha^2*t^4 - (alpha^2+1)^2*t^2 + 4*alpha^2)")
          .num(),
      q,
      {make_point("-" + big + "/(4*u^2)",
                  "(t^2-2)*(alpha^2+1)^3/(8*(alpha^2-1)*u^4)", q),
       make_point("-(t^2-2)^2/(4*t^2)", "(t^2-2)/(8*t^3*(alpha^2-1)*u)", q),
       make_point("-" + big + "/(4*u^2)", "t*(alpha^2+1)^3/(8*alpha*u^4)", q),
       make_point("4*t^2/(t^2+2)^2", "t/((t^2+2)^3*alpha*u)", q)},
      {}};
  fam.excluded_alpha = compute_excluded_alpha(fam.lambda1, fam.lambda2);
  return fam;
}

}  // namespace

const PairFamily& family_theorem51() {
  static const PairFamily fam = build_theorem51();
  return fam;
}

const PairFamily& family_theorem53() {
  static const PairFamily fam = build_theorem53();
  return fam;
}

const PairFamily* family_by_id(const std::string& id) {
  if (id == "thm51") return &family_theorem51();
  if (id == "thm53") return &family_theorem53();
  return nullptr;
}

bool FamilyIdentityReport::all() const {
  for (bool b : point_on_curve)
    if (!b) return false;
  for (bool b : sigma_independent)
    if (!b) return false;
  return true;
}

FamilyIdentityReport verify_family_identities(const PairFamily& fam) {
  FamilyIdentityReport rep;
  SymbolicTwistedCurve c1 = fam.curve1();
  SymbolicTwistedCurve c2 = fam.curve2();
  for (int i = 0; i < 4; ++i) {
    const SymbolicTwistedCurve& c = i < 2 ? c1 : c2;
    rep.point_on_curve[i] = symbolic_curve_residual(c, fam.points[i]).is_zero();
  }
  if (rep.point_on_curve[0] && rep.point_on_curve[1])
    rep.sigma_independent[0] =
        verify_function_field_independence(c1, fam.points[0], fam.points[1]);
  if (rep.point_on_curve[2] && rep.point_on_curve[3])
    rep.sigma_independent[1] =
        verify_function_field_independence(c2, fam.points[2], fam.points[3]);
  return rep;
}

bool alpha_admissible(const PairFamily& fam, const Rat& alpha,
                      std::string* why) {
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (alpha == 0 || alpha == 1 || alpha == -1)
    return reject("alpha must avoid {0, 1, -1}");
  if (std::find(fam.excluded_alpha.begin(), fam.excluded_alpha.end(), alpha) !=
      fam.excluded_alpha.end())
    return reject("alpha makes the Legendre pair degenerate or isomorphic");
  return true;
}

SpecializedPair specialize(const PairFamily& fam, const Rat& alpha) {
  std::string why;
  if (!alpha_admissible(fam, alpha, &why)) throw DomainError(why);
  SpecializedPair sp;
  sp.alpha = alpha;
  auto l1 = fam.lambda1.eval({{Var::alpha, alpha}});
  auto l2 = fam.lambda2.eval({{Var::alpha, alpha}});
  if (!l1 || !l2) throw DomainError("lambda undefined at alpha");
  sp.lambda1 = *l1;
  sp.lambda2 = *l2;
  if (legendre_isomorphic(sp.lambda1, sp.lambda2))
    throw DomainError("specialized Legendre curves are isomorphic");
  sp.f1 = CubicPoly::legendre(sp.lambda1);
  sp.f2 = CubicPoly::legendre(sp.lambda2);
  sp.g_t = fam.g.eval_var(Var::alpha, alpha);
  sp.q_t = fam.modulus.eval_var(Var::alpha, alpha);
  if (sp.g_t.is_zero() || sp.g_t.deg(Var::t) != fam.g.deg(Var::t))
    throw DomainError("twist polynomial degenerates at alpha");
  return sp;
}

bool lemma31_pair_criterion(const MPoly& f1, const MPoly& f2, const RatFunc& h1,
                            const RatFunc& h2, const RatFunc& M, Var var) {
  if (h1.is_constant() || h2.is_constant())
    throw DomainError("pair criterion needs non-constant substitutions");
  RatFunc top = subst_into_poly(f2, var, h2);
  RatFunc bot = subst_into_poly(f1, var, h1);
  if (bot.is_zero()) throw DomainError("f1 composed with h1 vanishes");
  return top / bot == M * M;
}

Lemma41Data lemma41_construct(const Rat& lambda1, const Rat& lambda2) {
  for (const Rat* l : {&lambda1, &lambda2})
    if (*l == 0 || *l == 1)
      throw DomainError("Legendre parameter must avoid {0, 1}");
  if (legendre_isomorphic(lambda1, lambda2))
    throw DomainError("Legendre curves are isomorphic; pair is degenerate");
  MPoly u = MPoly::variable(Var::u);
  MPoly u2 = u * u;
  MPoly l1{lambda1}, l2{lambda2};
  Lemma41Data out;
  out.g = (l1 - l2) * (u2 - MPoly(1L)) *
          (MPoly(Rat(1 - lambda2)) + (l1 - MPoly(1L)) * u2) * (l1 * u2 - l2);
  RatFunc den{u2 - MPoly(1L)};
  out.x = RatFunc{l1 * u2 - l2} / den;
  out.y1 = RatFunc(1L) / (den * den);
  out.y2 = RatFunc{u} / (den * den);
  // both twists must carry their point: g y^2 == x (x-1)(x-lambda)
  RatFunc g{out.g};
  RatFunc one(1L);
  RatFunc fx1 = out.x * (out.x - one) * (out.x - RatFunc(l1));
  RatFunc fx2 = out.x * (out.x - one) * (out.x - RatFunc(l2));
  if (!(g * out.y1 * out.y1 == fx1) || !(g * out.y2 * out.y2 == fx2))
    throw DomainError("twist point identity failed");
  return out;
}

AuxCurveData aux_curve(const Rat& alpha) {
  if (alpha == 0 || alpha == 1 || alpha == -1)
    throw DomainError("alpha must avoid {0, 1, -1}");
  Rat a2 = alpha * alpha;
  Rat s = 1 + a2;  // 1 + alpha^2
  AuxCurveData out{
      QuarticCurve{a2, Rat(0), -s * s, Rat(0), 4 * a2},
      Rat(0),
      2 * alpha,
      WeierstrassCurve::short_form(
          -27 * (48 * a2 * a2 + s * s * s * s),
          -54 * s * s * (s * s * s * s - 144 * a2 * a2)),
      ECPointQ::infty()};
  Rat a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
  Rat X = Rat(3) / (4 * a4) * s * s *
          (3 + 12 * a2 - 22 * a4 + 12 * a6 + 3 * a8);
  Rat Y = Rat(27) / (8 * a6) * (a2 - 1) * (a2 - 1) *
          (1 + 11 * a2 + 37 * a4 + 47 * a6 + 47 * a8 + 37 * a8 * a2 +
           11 * a8 * a4 + a8 * a6);
  out.xy = ECPointQ::affine(X, Y);
  if (!out.printed.is_on(out.xy))
    throw DomainError("printed auxiliary point fails its curve equation");
  return out;
}

MPoly aux_quartic_symbolic() {
  return parse_expr("alpha^2*t^4 - (alpha^2+1)^2*t^2 + 4*alpha^2").num();
}

GenWeierstrass<RatFunc> aux_printed_symbolic() {
  RatFunc zero;
  return GenWeierstrass<RatFunc>{
      zero, zero, zero,
      parse_expr("-27*(48*alpha^4 + (1+alpha^2)^4)"),
      parse_expr("-54*(1+alpha^2)^2*((1+alpha^2)^4 - 144*alpha^4)")};
}

GenPoint<RatFunc> aux_xy_symbolic() {
  return GenPoint<RatFunc>::affine(
      parse_expr("3/(4*alpha^4)*(1+alpha^2)^2*(3 + 12*alpha^2 - 22*alpha^4 + "
                 "12*alpha^6 + 3*alpha^8)"),
      parse_expr("27/(8*alpha^6)*(-1+alpha^2)^2*(1 + 11*alpha^2 + 37*alpha^4 "
                 "+ 47*alpha^6 + 47*alpha^8 + 37*alpha^10 + 11*alpha^12 + "
                 "alpha^14)"));
}

bool PipelineReport::all_pass() const {
  for (const PipelineStep& s : steps)
    if (!s.pass) return false;
  return true;
}

PipelineReport remark52_pipeline(const RatFunc& lambda1, const RatFunc& lambda2,
                                 const FracLinMap& h1, const FracLinMap& h2,
                                 const RatFunc& T_subst,
                                 const MPoly* expected_g) {
  if (h1.var != Var::z || h2.var != Var::z)
    throw DomainError("pipeline expects root maps in the variable z");
  PipelineReport rep;
  auto step = [&rep](const std::string& name, bool pass,
                     const std::string& detail = "") {
    rep.steps.push_back({name, pass, detail});
    return pass;
  };
  RatFunc one(1L);
  RatFunc zv{MPoly::variable(Var::z)};
  auto f_of = [&one](const RatFunc& lam, const RatFunc& arg) {
    return arg * (arg - one) * (arg - lam);
  };

  // 1. each h_i permutes the roots {0, 1, lambda_i}
  for (int i = 0; i < 2; ++i) {
    const RatFunc& lam = i ? lambda2 : lambda1;
    const FracLinMap& h = i ? h2 : h1;
    bool ok = true;
    std::string perm;
    std::array<RatFunc, 3> roots{RatFunc(0L), one, lam};
    try {
      for (const RatFunc& r : roots) {
        RatFunc img = h.apply(r);
        auto hit = std::find(roots.begin(), roots.end(), img);
        if (hit == roots.end()) {
          ok = false;
          break;
        }
        perm += std::to_string(hit - roots.begin());
      }
    } catch (const DomainError&) {
      ok = false;
    }
    step("h" + std::to_string(i + 1) + " permutes the roots of f" +
             std::to_string(i + 1),
         ok, ok ? "image order " + perm : "");
  }

  // 2. square-free parts k_i of f_i(h_i(z))/f_i(z)
  std::array<RatFunc, 2> ks;
  for (int i = 0; i < 2; ++i) {
    const RatFunc& lam = i ? lambda2 : lambda1;
    const FracLinMap& h = i ? h2 : h1;
    RatFunc ratio = f_of(lam, h.as_ratfunc()) / f_of(lam, zv);
    auto sf = ratfunc_squarefree_part(ratio);
    ks[i] = (RatFunc(sf.constant) * RatFunc{sf.part}).reduced();
    bool ok = !ks[i].is_zero() && same_square_class(ratio, ks[i]);
    step("k" + std::to_string(i + 1) + " extracted", ok,
         "k" + std::to_string(i + 1) + " = " + ks[i].str());
  }
  rep.k1 = ks[0];
  rep.k2 = ks[1];

  // 3. k1, k2 distinct modulo squares
  bool distinct = !rep.k1.is_zero() && !rep.k2.is_zero() &&
                  !same_square_class(rep.k1, rep.k2);
  step("k1 and k2 distinct modulo squares", distinct);
  if (!distinct) return rep;

  // 4. z(T) makes f2 a square multiple of f1
  RatFunc Tv{MPoly::variable(Var::T)};
  rep.z_of_T = (-lambda2 + lambda1 * Tv * Tv) / (Tv * Tv - one);
  step("f2(z) = T^2 f1(z)",
       f_of(lambda2, rep.z_of_T) == Tv * Tv * f_of(lambda1, rep.z_of_T));

  // 5. substitute the T(t) parametrization
  RatFunc z_t;
  try {
    z_t = rep.z_of_T.subst(Var::T, T_subst);
  } catch (const DomainError&) {
    step("T(t) substitution well-defined", false);
    return rep;
  }
  rep.z_t = z_t;
  RatFunc K1 = rep.k1.subst(Var::z, z_t);
  RatFunc K2 = rep.k2.subst(Var::z, z_t);
  RatFunc K3 = f_of(lambda2, z_t) / f_of(lambda1, z_t);
  step("T(t) substitution well-defined", true);
  step("f2/f1 at z(t) is the square of T(t)", K3 == T_subst * T_subst);

  // 6. the quadratic extension needed to split k1(z(t)) and k2(z(t))
  if (K1.is_zero() || K2.is_zero()) {
    step("k_i(z(t)) nonzero", false);
    return rep;
  }
  rep.derived_modulus = MPoly(Rat(1));
  for (const RatFunc* K : {&K1, &K2}) {
    if (K->is_square()) continue;
    auto sf = ratfunc_squarefree_part(*K);
    rep.derived_modulus = MPoly(sf.constant) * sf.part;
    break;
  }
  bool both_split = true;
  for (const RatFunc* K : {&K1, &K2})
    both_split &= K->is_square() ||
                  same_square_class(*K, RatFunc(rep.derived_modulus));
  step("k1(z(t)) and k2(z(t)) split in one quadratic extension", both_split,
       "u^2 = " + rep.derived_modulus.str());
  if (!both_split) return rep;

  // 7. construct and verify a point on the curve C
  MPoly ring_mod =
      rep.derived_modulus.is_constant() ? MPoly(Rat(2)) : rep.derived_modulus;
  RatFunc mod_rf{ring_mod};
  auto split = [&](const RatFunc& K) -> std::optional<QuadExt> {
    if (K.is_square()) return QuadExt(*K.sqrt(), RatFunc(), ring_mod);
    auto w = (K * mod_rf).sqrt();
    if (!w) return std::nullopt;
    return QuadExt(RatFunc(), *w / mod_rf, ring_mod);
  };
  auto z1 = split(K1);
  auto z2 = split(K2);
  QuadExt z3 = QuadExt(T_subst, RatFunc(), ring_mod);
  rep.has_c_point = z1.has_value() && z2.has_value();
  bool cpoint_ok = rep.has_c_point;
  if (rep.has_c_point) {
    rep.c_point = {*z1, *z2, z3};
    QuadExt K1e(K1, RatFunc(), ring_mod);
    QuadExt K2e(K2, RatFunc(), ring_mod);
    QuadExt K3e(K3, RatFunc(), ring_mod);
    cpoint_ok = (*z1 * *z1 == K1e) && (*z2 * *z2 == K2e) && (z3 * z3 == K3e);
  }
  step("point on C: z1^2 = k1(z(t)), z2^2 = k2(z(t)), z3^2 = f2/f1",
       cpoint_ok);

  // 8. the twist class of f1(z(t))
  rep.twist_value = f_of(lambda1, z_t);
  if (expected_g) {
    rep.matches_g = !rep.twist_value.is_zero() &&
                    same_square_class(rep.twist_value, RatFunc(*expected_g));
    step("twist polynomial matches g modulo squares", rep.matches_g);
  }
  return rep;
}

}  // namespace qtwist
