#include "qtwist/quadext.hpp"

#include <sstream>

namespace qtwist {

QuadExt::QuadExt(RatFunc a, RatFunc b, MPoly modulus)
    : a_(a.reduced()), b_(b.reduced()), mod_(std::move(modulus)) {
  if (mod_.is_zero()) throw DomainError("quadratic extension needs a modulus");
  if (mod_.depends_on(Var::u))
    throw DomainError("modulus must be free of u");
  if (a_.depends_on(Var::u) || b_.depends_on(Var::u))
    throw DomainError("components must be reduced (free of u)");
}

QuadExt QuadExt::constant(const Rat& c, const MPoly& modulus) {
  return QuadExt(RatFunc(c), RatFunc(), modulus);
}

QuadExt QuadExt::gen(const MPoly& modulus) {
  return QuadExt(RatFunc(), RatFunc(1L), modulus);
}

// split a u-polynomial into even and odd parts, reducing u^2 -> q
static void reduce_u(const MPoly& p, const MPoly& q, MPoly& even, MPoly& odd) {
  even = MPoly();
  odd = MPoly();
  auto cs = p.coeffs_in(Var::u);
  // powers of q, built on demand
  std::vector<MPoly> qpow{MPoly(Rat(1))};
  auto qp = [&](int k) -> const MPoly& {
    while (static_cast<int>(qpow.size()) <= k) qpow.push_back(qpow.back() * q);
    return qpow[k];
  };
  for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
    if (cs[k].is_zero()) continue;
    if (k % 2 == 0)
      even += cs[k] * qp(k / 2);
    else
      odd += cs[k] * qp((k - 1) / 2);
  }
}

QuadExt QuadExt::from_ratfunc(const RatFunc& r, const MPoly& modulus) {
  MPoly ne, no, de, do_;
  reduce_u(r.num(), modulus, ne, no);
  reduce_u(r.den(), modulus, de, do_);
  // 1/(de + do*u) = (de - do*u)/(de^2 - do^2 q)
  MPoly norm = de * de - do_ * do_ * modulus;
  if (norm.is_zero())
    throw DomainError("denominator is a zero divisor; modulus is a square");
  RatFunc a = RatFunc::quotient(ne * de - no * do_ * modulus, norm);
  RatFunc b = RatFunc::quotient(no * de - ne * do_, norm);
  return QuadExt(std::move(a), std::move(b), modulus);
}

QuadExt QuadExt::conj() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

const MPoly& QuadExt::merge_mod(const QuadExt& x, const QuadExt& y) {
  if (x.mod_.is_zero()) return y.mod_;
  if (y.mod_.is_zero()) return x.mod_;
  if (!(x.mod_ == y.mod_)) throw DomainError("modulus mismatch");
  return x.mod_;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  const MPoly& m = QuadExt::merge_mod(x, y);
  if (m.is_zero()) return QuadExt();
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, m);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  const MPoly& m = QuadExt::merge_mod(x, y);
  if (m.is_zero()) return QuadExt();
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, m);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  const MPoly& m = QuadExt::merge_mod(x, y);
  if (m.is_zero()) return QuadExt();
  RatFunc q{m};
  return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * q, x.a_ * y.b_ + x.b_ * y.a_, m);
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  RatFunc n = norm();
  if (n.is_zero())
    throw DomainError("zero divisor; modulus is a square in the base field");
  return QuadExt(a_ / n, -b_ / n, mod_);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  return x * y.inverse();
}

QuadExt QuadExt::pow(int n) const {
  if (mod_.is_zero()) throw DomainError("pow on unbound zero");
  if (n < 0) return inverse().pow(-n);
  QuadExt r = QuadExt::constant(Rat(1), mod_);
  QuadExt base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool QuadExt::operator==(const QuadExt& o) const {
  if (!mod_.is_zero() && !o.mod_.is_zero() && !(mod_ == o.mod_))
    throw DomainError("modulus mismatch");
  return a_ == o.a_ && b_ == o.b_;
}

RatFunc QuadExt::norm() const {
  return a_ * a_ - b_ * b_ * RatFunc{mod_};
}

std::optional<Rat> QuadExt::eval(const std::map<Var, Rat>& base_point,
                                 const Rat& u_value) const {
  if (u_value * u_value != mod_.eval(base_point)) return std::nullopt;
  auto av = a_.eval(base_point);
  auto bv = b_.eval(base_point);
  if (!av || !bv) return std::nullopt;
  return *av + *bv * u_value;
}

std::string QuadExt::str() const {
  std::ostringstream os;
  if (b_.is_zero()) return a_.str();
  if (!a_.is_zero()) os << a_.str() << " + ";
  os << "(" << b_.str() << ")*u";
  return os.str();
}

}  // namespace qtwist
