#include "qtwist/ratfunc.hpp"

#include <sstream>

namespace qtwist {

void RatFunc::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(Rat(1));
    return;
  }
  if (den_.is_constant()) {
    num_ *= 1 / den_.constant_value();
    den_ = MPoly(Rat(1));
    return;
  }
  // strip the common monomial factor
  Exp mn{}, md{};
  auto min_exp = [](const MPoly& p, Exp& out) {
    bool first = true;
    for (auto& [e, c] : p.terms()) {
      (void)c;
      if (first) {
        out = e;
        first = false;
      } else {
        for (int i = 0; i < kNumVars; ++i) out[i] = std::min(out[i], e[i]);
      }
    }
  };
  min_exp(num_, mn);
  min_exp(den_, md);
  Exp common{};
  bool any = false;
  for (int i = 0; i < kNumVars; ++i) {
    common[i] = std::min(mn[i], md[i]);
    any |= common[i] > 0;
  }
  if (any) {
    MPoly mono = MPoly::term(Rat(1), common);
    num_ = *divide_exact(num_, mono);
    den_ = *divide_exact(den_, mono);
  }
  Rat lc = den_.lead_coeff();
  if (lc != 1) {
    Rat inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::quotient(MPoly num, MPoly den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("constant_value on non-constant");
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc::quotient(a.num_ + b.num_, a.den_);
  return RatFunc::quotient(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc::quotient(a.num_ - b.num_, a.den_);
  return RatFunc::quotient(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc::quotient(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  return RatFunc::quotient(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return quotient(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r(1L);
  RatFunc base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::reduced() const {
  if (num_.is_zero()) return RatFunc();
  MPoly g = poly_gcd(num_, den_);
  if (g.is_constant()) {
    RatFunc r = *this;
    return r;
  }
  return quotient(*divide_exact(num_, g), *divide_exact(den_, g));
}

RatFunc subst_into_poly(const MPoly& f, Var v, const RatFunc& value) {
  auto cs = f.coeffs_in(v);
  RatFunc out(cs.back());
  for (int k = static_cast<int>(cs.size()) - 2; k >= 0; --k)
    out = out * value + RatFunc(cs[k]);
  return out;
}

RatFunc RatFunc::subst(Var v, const RatFunc& value) const {
  RatFunc n = subst_into_poly(num_, v, value);
  RatFunc d = subst_into_poly(den_, v, value);
  if (d.is_zero())
    throw DomainError("substitution sends denominator to zero");
  return n / d;
}

std::optional<Rat> RatFunc::eval(const std::map<Var, Rat>& point) const {
  Rat d = den_.eval(point);
  if (d == 0) return std::nullopt;
  return num_.eval(point) / d;
}

std::optional<RatFunc> RatFunc::eval_var(Var v, const Rat& value) const {
  MPoly d = den_.eval_var(v, value);
  if (d.is_zero()) return std::nullopt;
  return quotient(num_.eval_var(v, value), d);
}

bool RatFunc::is_square() const {
  if (is_zero()) return true;
  return poly_sqrt(num_ * den_).has_value();
}

std::optional<RatFunc> RatFunc::sqrt() const {
  if (is_zero()) return RatFunc();
  // num/den == num*den / den^2
  auto r = poly_sqrt(num_ * den_);
  if (!r) return std::nullopt;
  return quotient(*r, den_);
}

std::string RatFunc::str() const {
  RatFunc r = reduced();
  if (r.is_poly()) return r.num_.str();
  std::ostringstream os;
  bool wrap_num = r.num_.terms().size() > 1;
  if (wrap_num) os << "(";
  os << r.num_.str();
  if (wrap_num) os << ")";
  os << "/(" << r.den_.str() << ")";
  return os.str();
}

FracLinMap::FracLinMap(RatFunc a_, RatFunc b_, RatFunc c_, RatFunc d_, Var v)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), var(v) {
  for (const RatFunc* e : {&a, &b, &c, &d})
    if (e->depends_on(var))
      throw DomainError("fractional-linear map entries must not contain the map variable");
  if (determinant().is_zero())
    throw DomainError("degenerate fractional-linear map (zero determinant)");
}

FracLinMap FracLinMap::from_ratfunc(const RatFunc& r, Var v) {
  RatFunc rr = r.reduced();
  const MPoly& n = rr.num();
  const MPoly& d = rr.den();
  if (n.deg(v) > 1 || d.deg(v) > 1)
    throw DomainError("expression is not fractional-linear in the variable");
  auto coeff = [&](const MPoly& p, int k) {
    return RatFunc(p.coeff_of(v, k));
  };
  return FracLinMap(coeff(n, 1), coeff(n, 0), coeff(d, 1), coeff(d, 0), v);
}

RatFunc FracLinMap::as_ratfunc() const {
  RatFunc tv{MPoly::variable(var)};
  return (a * tv + b) / (c * tv + d);
}

RatFunc FracLinMap::apply(const RatFunc& arg) const {
  RatFunc den = c * arg + d;
  if (den.is_zero()) throw DomainError("fractional-linear map pole");
  return (a * arg + b) / den;
}

bool FracLinMap::is_identity() const {
  return b.is_zero() && c.is_zero() && a == d;
}

RatFunc compose_fraclin(const MPoly& f, const FracLinMap& h) {
  // f(h(t)) = sum f_k (a t + b)^k (c t + d)^(deg-k) / (c t + d)^deg
  RatFunc tv{MPoly::variable(h.var)};
  RatFunc top = h.a * tv + h.b;
  RatFunc bot = h.c * tv + h.d;
  auto cs = f.coeffs_in(h.var);
  int deg = static_cast<int>(cs.size()) - 1;
  RatFunc acc;
  for (int k = 0; k <= deg; ++k) {
    if (cs[k].is_zero()) continue;
    acc += RatFunc(cs[k]) * top.pow(k) * bot.pow(deg - k);
  }
  return (acc / bot.pow(deg)).reduced();
}

RatFuncSquareFree ratfunc_squarefree_part(const RatFunc& r) {
  if (r.is_zero()) throw DomainError("square-free part of zero");
  MPoly p = r.num() * r.den();
  SquareFreePart sf = squarefree_part(p);
  RatFuncSquareFree out;
  out.part = sf.part;
  out.constant = sf.constant;
  out.square = RatFunc::quotient(sf.cofactor, r.den());
  return out;
}

bool same_square_class(const RatFunc& r1, const RatFunc& r2) {
  if (r1.is_zero() || r2.is_zero()) throw DomainError("zero has no square class");
  return (r1 / r2).is_square();
}

}  // namespace qtwist
