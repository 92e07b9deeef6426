#include "qtwist/quartic.hpp"

namespace qtwist {

static ECPointQ from_gen_pt(const GenPoint<Rat>& p) {
  if (p.is_infinity()) return ECPointQ::infty();
  return ECPointQ::affine(p.x(), p.y());
}

static GenPoint<Rat> to_gen_pt(const ECPointQ& p) {
  if (p.infinity) return GenPoint<Rat>::infinity();
  return GenPoint<Rat>::affine(p.x, p.y);
}

std::optional<ECPointQ> QuarticWeierstrass::forward(const Rat& t,
                                                    const Rat& v) const {
  auto p = map.forward(t, v);
  if (!p) return std::nullopt;
  return from_gen_pt(*p);
}

std::optional<std::pair<Rat, Rat>> QuarticWeierstrass::inverse(
    const ECPointQ& p) const {
  return map.inverse(to_gen_pt(p));
}

ECPointQ QuarticWeierstrass::second_branch_image() const {
  return from_gen_pt(map.second_branch_image());
}

QuarticWeierstrass quartic_to_weierstrass(const QuarticCurve& quartic,
                                          const Rat& seed_t, const Rat& seed_v) {
  if (!quartic.is_on(seed_t, seed_v))
    throw PointNotOnCurve("seed does not lie on the quartic");
  QuarticMap<Rat> m = quartic_map(quartic.c4, quartic.c3, quartic.c2,
                                  quartic.c1, quartic.c0, seed_t, seed_v);
  WeierstrassCurve e{m.curve.a1, m.curve.a2, m.curve.a3, m.curve.a4,
                     m.curve.a6};
  if (e.disc() == 0)
    throw SingularCurveError("quartic reduction produced a singular model");
  return QuarticWeierstrass{std::move(m), std::move(e)};
}

}  // namespace qtwist
