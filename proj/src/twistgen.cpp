#include "qtwist/twistgen.hpp"

#include <sstream>

namespace qtwist {

TwistedCurve TwistRecord::curve1() const {
  return twist(CubicPoly::legendre(lambda1), d_used);
}

TwistedCurve TwistRecord::curve2() const {
  return twist(CubicPoly::legendre(lambda2), d_used);
}

namespace {

struct Walker {
  WeierstrassCurve curve;
  ECPointQ q0;  // infinite-order generator
  ECPointQ q1;  // 2-torsion toggle
  long n = 0;
  int m = 0;

  // next (n, m) in the order |n|+|m| ascending, then (n, m) lexicographic:
  // (-1,0), (0,1), (1,0), (-2,0), (-1,1), (1,1), (2,0), (-3,0), ...
  void advance() {
    if (m == 0 && n == 0) {
      n = -1;  // first candidate
    } else if (m == 0 && n < 0) {
      n += 1;
      m = 1;
    } else if (m == 1 && n < 0) {
      n = -n;
    } else if (m == 1) {
      n += 1;
      m = 0;
    } else {
      n = -(n + 1);
    }
  }

  ECPointQ current() const {
    ECPointQ p = ec_mul(curve, n, q0);
    if (m) p = ec_add(curve, p, q1);
    return p;
  }
};

std::string rat_s(const Rat& r) { return rat_str(r); }

}  // namespace

GenerateResult generate_twists(const PairFamily& fam, const Rat& alpha,
                               const GenerateConfig& cfg) {
  GenerateResult out;
  SpecializedPair sp = specialize(fam, alpha);
  AuxCurveData aux = aux_curve(alpha);
  QuarticWeierstrass qw =
      quartic_to_weierstrass(aux.quartic, aux.seed_t, aux.seed_v);

  // pull the printed infinite-order point into the walk model
  auto [wshort, to_short_tr] = to_short(qw.curve);
  auto iso = find_short_isomorphism(aux.printed, wshort);
  if (!iso)
    throw DomainError("printed model is not isomorphic to the reduction");
  ECPointQ q0 = to_short_tr.back(iso->fwd(aux.xy));
  if (!qw.curve.is_on(q0))
    throw DomainError("generator transport failed the curve equation");
  ECPointQ q1 = qw.second_branch_image();

  // the T(t) substitution at this alpha, for the degeneracy checks
  auto T_alpha = fam.T_subst.eval_var(Var::alpha, alpha);
  if (!T_alpha) throw DomainError("T substitution undefined at alpha");

  std::vector<IntZ> seen_kernels;
  Walker walk{qw.curve, q0, q1, 0, 0};
  int examined = 0;
  auto skip = [&out](long n, int m, const std::string& why) {
    std::ostringstream os;
    os << "walk point (n=" << n << ", m=" << m << ") skipped: " << why;
    out.log.push_back(os.str());
  };

  while (static_cast<int>(out.records.size()) < cfg.count) {
    if (++examined > cfg.max_candidates)
      throw DomainError(
          "walk budget exhausted before enough certified twists were found");
    walk.advance();
    ECPointQ r = walk.current();
    long n = walk.n;
    int m = walk.m;
    if (r.infinity) {
      skip(n, m, "point at infinity");
      continue;
    }
    auto tv = qw.inverse(r);
    if (!tv) {
      skip(n, m, "exceptional point of the birational map");
      continue;
    }
    auto [t, u] = *tv;
    if (u * u != aux.quartic.eval(t))
      throw DomainError("inverse map left the quartic");  // internal check
    if (t == 0) {
      skip(n, m, "t = 0 (point coordinates undefined)");
      continue;
    }
    if (u == 0) {
      skip(n, m, "u = 0 (twist value vanishes)");
      continue;
    }
    // T(t) must be defined and distinct from +-1 for z(T) to exist
    auto T_val = T_alpha->eval({{Var::t, t}});
    if (!T_val || *T_val == 1 || *T_val == -1) {
      skip(n, m, "T(t) undefined or equal to +-1");
      continue;
    }
    Rat d_raw = sp.g_t.eval_var(Var::t, t).constant_value();
    if (d_raw == 0) {
      skip(n, m, "g(t) = 0");
      continue;
    }

    // square-free reduction of the twist value
    RatSquareClass cls = rat_square_class(d_raw, cfg.factor);
    Rat d_used = cls.complete ? Rat(cls.kernel) : d_raw;
    Rat scale = cls.complete ? cls.scale : Rat(1);
    if (cls.complete) {
      bool dup = false;
      for (const IntZ& k : seen_kernels) dup |= (k == cls.kernel);
      if (dup) {
        skip(n, m, "duplicate square-free class d = " + int_str(cls.kernel));
        continue;
      }
    }

    TwistRecord rec;
    rec.index = static_cast<int>(out.records.size());
    rec.family = fam.id;
    rec.alpha = alpha;
    rec.t = t;
    rec.u = u;
    rec.walk_n = n;
    rec.walk_m = m;
    rec.d_raw = d_raw;
    rec.d_squarefree = cls.kernel;
    rec.sqrt_scale = cls.scale;
    rec.reduction_complete = cls.complete;
    rec.d_used = d_used;
    rec.lambda1 = sp.lambda1;
    rec.lambda2 = sp.lambda2;

    // specialize the four symbolic points; adjust y for the square class
    std::map<Var, Rat> at{{Var::t, t}, {Var::alpha, alpha}};
    bool bad_point = false;
    for (int i = 0; i < 4 && !bad_point; ++i) {
      auto px = fam.points[i].x.eval(at, u);
      auto py = fam.points[i].y.eval(at, u);
      if (!px || !py) {
        bad_point = true;
        break;
      }
      rec.points[i] = ECPointQ::affine(*px, *py * scale);
    }
    if (bad_point) {
      skip(n, m, "point specialization hit a vanishing denominator");
      continue;
    }

    TwistedCurve e1 = rec.curve1();
    TwistedCurve e2 = rec.curve2();
    bool all_on = e1.is_on(rec.points[0]) && e1.is_on(rec.points[1]) &&
                  e2.is_on(rec.points[2]) && e2.is_on(rec.points[3]);
    if (!all_on)
      throw DomainError("specialized point fails its curve equation");
    if (e1.j_invariant() == e2.j_invariant()) {
      skip(n, m, "twisted curves share a j-invariant");
      continue;
    }

    // exact order certificates
    bool torsion_hit = false;
    for (int i = 0; i < 4; ++i) {
      const TwistedCurve& e = i < 2 ? e1 : e2;
      rec.order_certs[i] = mazur_infinite_order(e, rec.points[i]);
      torsion_hit |= rec.order_certs[i].verdict == OrderVerdict::Torsion;
    }
    if (torsion_hit) {
      skip(n, m, "a specialized point is torsion (exceptional fiber)");
      continue;
    }

    // independence evidence per curve
    rec.independence[0] =
        regulator_evidence(e1, rec.points[0], rec.points[1], cfg.certify);
    rec.independence[1] =
        regulator_evidence(e2, rec.points[2], rec.points[3], cfg.certify);
    if (rec.independence[0].verdict != IndependenceVerdict::IndependentEvidence ||
        rec.independence[1].verdict != IndependenceVerdict::IndependentEvidence) {
      skip(n, m, "independence evidence not conclusive at t = " + rat_s(t));
      continue;
    }

    // mod-p torsion cross-check, recorded with the primes used
    for (int i = 0; i < 2; ++i) {
      const TwistedCurve& e = i == 0 ? e1 : e2;
      auto [shrt, tr1] = to_short(e.weierstrass());
      auto [integral, tr2] = to_integral_short(shrt);
      rec.modp_primes[i] =
          good_odd_primes(integral, cfg.certify.modp_prime_count);
      rec.modp_bounds[i] = modp_torsion_bound(integral, rec.modp_primes[i]);
    }

    if (cls.complete) seen_kernels.push_back(cls.kernel);
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::string> recheck_record(const TwistRecord& rec,
                                        const CertifyConfig& cfg) {
  std::vector<std::string> bad;
  auto expect = [&bad](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };

  const PairFamily* fam = family_by_id(rec.family);
  expect(fam != nullptr, "unknown family id");
  if (!fam) return bad;

  // quartic membership and square-class bookkeeping
  MPoly q_t = fam->modulus.eval_var(Var::alpha, rec.alpha);
  expect(rec.u * rec.u == q_t.eval_var(Var::t, rec.t).constant_value(),
         "u^2 = q(t)");
  MPoly g_t = fam->g.eval_var(Var::alpha, rec.alpha);
  expect(rec.d_raw == g_t.eval_var(Var::t, rec.t).constant_value(),
         "d_raw = g(t)");
  expect(rec.d_raw == Rat(rec.d_squarefree) * rec.sqrt_scale * rec.sqrt_scale,
         "d_raw = d_squarefree * scale^2");
  expect(rec.d_used != 0, "d nonzero");

  auto l1 = fam->lambda1.eval({{Var::alpha, rec.alpha}});
  auto l2 = fam->lambda2.eval({{Var::alpha, rec.alpha}});
  expect(l1 && *l1 == rec.lambda1, "lambda1 consistent with alpha");
  expect(l2 && *l2 == rec.lambda2, "lambda2 consistent with alpha");

  TwistedCurve e1 = rec.curve1();
  TwistedCurve e2 = rec.curve2();
  for (int i = 0; i < 4; ++i) {
    const TwistedCurve& e = i < 2 ? e1 : e2;
    expect(e.is_on(rec.points[i]),
           "point " + std::to_string(i) + " on its twisted curve");
  }

  // reproduce the order certificates
  for (int i = 0; i < 4; ++i) {
    const TwistedCurve& e = i < 2 ? e1 : e2;
    if (!e.is_on(rec.points[i])) continue;
    OrderCertificate fresh = mazur_infinite_order(e, rec.points[i]);
    expect(fresh.verdict == rec.order_certs[i].verdict &&
               fresh.torsion_order == rec.order_certs[i].torsion_order,
           "order certificate " + std::to_string(i) + " reproduces");
  }

  // reproduce relation scans and regulator verdicts
  for (int i = 0; i < 2; ++i) {
    const TwistedCurve& e = i == 0 ? e1 : e2;
    const ECPointQ& a = rec.points[i == 0 ? 0 : 2];
    const ECPointQ& b = rec.points[i == 0 ? 1 : 3];
    if (!e.is_on(a) || !e.is_on(b)) continue;
    CertifyConfig local = cfg;
    local.relation_bound = rec.independence[i].relation_bound;
    local.regulator_tolerance = rec.independence[i].tolerance;
    IndependenceReport fresh = regulator_evidence(e, a, b, local);
    expect(fresh.verdict == rec.independence[i].verdict,
           "independence verdict " + std::to_string(i) + " reproduces");
    expect(fresh.relations == rec.independence[i].relations,
           "relation list " + std::to_string(i) + " reproduces");
  }

  for (int i = 0; i < 2; ++i) {
    if (rec.modp_primes[i].empty()) {
      expect(false, "mod-p primes recorded");
      continue;
    }
    const TwistedCurve& e = i == 0 ? e1 : e2;
    auto [shrt, tr1] = to_short(e.weierstrass());
    auto [integral, tr2] = to_integral_short(shrt);
    expect(modp_torsion_bound(integral, rec.modp_primes[i]) ==
               rec.modp_bounds[i],
           "mod-p bound " + std::to_string(i) + " reproduces");
  }
  return bad;
}

}  // namespace qtwist
