#include "qtwist/mpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "qtwist/intfactor.hpp"

namespace qtwist {

static const char* kVarNames[kNumVars] = {"t", "u", "alpha", "z", "T", "x"};

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  if (name == "\xce\xb1") name = "alpha";  // UTF-8 alpha
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

static const Exp kZeroExp{};

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_[kZeroExp] = c;
}

MPoly::MPoly(long c) : MPoly(Rat(c)) {}

MPoly MPoly::variable(Var v, int power) {
  if (power < 0) throw DomainError("negative exponent");
  MPoly p;
  if (power == 0) return MPoly(Rat(1));
  Exp e{};
  e[static_cast<int>(v)] = power;
  p.terms_[e] = 1;
  return p;
}

MPoly MPoly::term(const Rat& c, const Exp& e) {
  MPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == kZeroExp);
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw DomainError("constant_value on non-constant");
  return terms_.begin()->second;
}

bool MPoly::depends_on(Var v) const {
  int i = static_cast<int>(v);
  for (auto& [e, c] : terms_)
    if (e[i] > 0) return true;
  return false;
}

std::vector<Var> MPoly::support() const {
  std::vector<Var> out;
  for (int i = 0; i < kNumVars; ++i)
    if (depends_on(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
  return out;
}

int MPoly::deg(Var v) const {
  int i = static_cast<int>(v), d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, e[i]);
  return terms_.empty() ? -1 : d;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < kNumVars; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

const Exp& MPoly::lead_exp() const {
  if (terms_.empty()) throw DomainError("lead_exp of zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& MPoly::lead_coeff() const {
  if (terms_.empty()) throw DomainError("lead_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

MPoly MPoly::coeff_of(Var v, int k) const {
  int i = static_cast<int>(v);
  MPoly out;
  for (auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exp e2 = e;
    e2[i] = 0;
    out.terms_[e2] = c;
  }
  return out;
}

MPoly MPoly::lead_coeff_in(Var v) const {
  return coeff_of(v, deg(v));
}

std::vector<MPoly> MPoly::coeffs_in(Var v) const {
  int d = deg(v);
  std::vector<MPoly> out(static_cast<size_t>(std::max(d, 0)) + 1);
  int i = static_cast<int>(v);
  for (auto& [e, c] : terms_) {
    Exp e2 = e;
    e2[i] = 0;
    out[e[i]].add_term(e2, c);
  }
  return out;
}

MPoly MPoly::derivative(Var v) const {
  int i = static_cast<int>(v);
  MPoly out;
  for (auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exp e2 = e;
    e2[i] -= 1;
    out.add_term(e2, c * e[i]);
  }
  return out;
}

MPoly MPoly::pow(int n) const {
  if (n < 0) throw DomainError("negative power of polynomial");
  MPoly r(Rat(1));
  MPoly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

void MPoly::add_term(const Exp& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly mul_term(const MPoly& p, const Exp& e, const Rat& c) {
  MPoly out;
  for (auto& [pe, pc] : p.terms_) {
    Exp ne;
    for (int i = 0; i < kNumVars; ++i) ne[i] = pe[i] + e[i];
    out.terms_[ne] = pc * c;
  }
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  const MPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const MPoly& big = a.terms_.size() <= b.terms_.size() ? b : a;
  for (auto& [e, c] : small.terms_) out += mul_term(big, e, c);
  return out;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::subst(Var v, const MPoly& value) const {
  auto cs = coeffs_in(v);
  if (cs.empty()) return MPoly();
  MPoly out = cs.back();
  for (int k = static_cast<int>(cs.size()) - 2; k >= 0; --k)
    out = out * value + cs[k];
  return out;
}

Rat MPoly::eval(const std::map<Var, Rat>& point) const {
  Rat out(0);
  for (auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(static_cast<Var>(i));
      if (it == point.end()) throw DomainError("eval: unbound variable");
      Rat p = it->second;
      for (int k = 0; k < e[i]; ++k) term *= p;
    }
    out += term;
  }
  return out;
}

MPoly MPoly::eval_var(Var v, const Rat& value) const {
  MPoly out;
  int i = static_cast<int>(v);
  for (auto& [e, c] : terms_) {
    Rat term = c;
    for (int k = 0; k < e[i]; ++k) term *= value;
    Exp e2 = e;
    e2[i] = 0;
    out.add_term(e2, term);
  }
  return out;
}

Rat MPoly::rational_content() const {
  if (terms_.empty()) return Rat(0);
  Rat g(0);
  for (auto& [e, c] : terms_) g = rat_content_pair(g, c);
  if (lead_coeff() < 0) g = -g;
  return g;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  MPoly out = *this;
  Rat inv = 1 / lead_coeff();
  return out *= inv;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print leading terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = e != kZeroExp;
    bool coeff_shown = !has_var || a != 1;
    if (coeff_shown) {
      if (is_integer(a))
        os << a.get_num().get_str();
      else if (has_var)
        os << "(" << rat_str(a) << ")";
      else
        os << rat_str(a);
    }
    bool star = coeff_shown;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << kVarNames[i];
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return MPoly();
  if (q.is_constant()) {
    MPoly out = p;
    out *= 1 / q.constant_value();
    return out;
  }
  MPoly rem = p, quot;
  const Exp& qe = q.lead_exp();
  const Rat& qc = q.lead_coeff();
  while (!rem.is_zero()) {
    const Exp& re = rem.lead_exp();
    Exp de;
    for (int i = 0; i < kNumVars; ++i) {
      de[i] = re[i] - qe[i];
      if (de[i] < 0) return std::nullopt;
    }
    Rat dc = rem.lead_coeff() / qc;
    quot += MPoly::term(dc, de);
    rem -= mul_term(q, de, dc);
  }
  return quot;
}

MPoly prem(const MPoly& p, const MPoly& q, Var v) {
  int dq = q.deg(v);
  if (dq < 0) throw DomainError("prem by polynomial free of the variable");
  MPoly r = p;
  MPoly lq = q.lead_coeff_in(v);
  int dr = r.deg(v);
  while (!r.is_zero() && (dr = r.deg(v)) >= dq) {
    MPoly lr = r.lead_coeff_in(v);
    // r <- lq * r - lr * v^(dr-dq) * q
    MPoly shift = MPoly::variable(v, dr - dq);
    r = lq * r - lr * shift * q;
    if (!r.is_zero() && r.deg(v) >= dr)
      throw DomainError("prem failed to reduce degree");
  }
  return r;
}

// forward
static MPoly gcd_rec(const MPoly& p, const MPoly& q);

// ----- modular coprimality filter -----
//
// Evaluating all variables but one at random points modulo a word-size prime
// maps the gcd into a divisor of the univariate image gcd, so a degree-zero
// image certifies that the true gcd is free of that variable (provided the
// evaluation preserved leading degrees). If that certificate holds for every
// shared variable, the gcd is a constant and the expensive PRS can be
// skipped.

namespace {

constexpr unsigned long kFilterPrimes[3] = {2147483647UL, 2147483629UL,
                                            2147483587UL};

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return static_cast<unsigned long>(
      static_cast<unsigned __int128>(a) * b % p);
}

unsigned long powmod(unsigned long b, unsigned long e, unsigned long p) {
  unsigned long r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::optional<unsigned long> rat_mod(const Rat& c, unsigned long p) {
  unsigned long d = mpz_fdiv_ui(c.get_den_mpz_t(), p);
  if (d == 0) return std::nullopt;
  unsigned long n = mpz_fdiv_ui(c.get_num_mpz_t(), p);
  return mulmod(n, powmod(d, p - 2, p), p);
}

// dense univariate image of p in v with the other variables bound
std::optional<std::vector<unsigned long>> eval_image(
    const MPoly& p, Var v, const std::array<unsigned long, kNumVars>& point,
    unsigned long prime) {
  std::vector<unsigned long> out(static_cast<size_t>(p.deg(v)) + 1, 0);
  int vi = static_cast<int>(v);
  for (auto& [e, c] : p.terms()) {
    auto cm = rat_mod(c, prime);
    if (!cm) return std::nullopt;
    unsigned long val = *cm;
    for (int i = 0; i < kNumVars; ++i) {
      if (i == vi || e[i] == 0) continue;
      val = mulmod(val, powmod(point[i], e[i], prime), prime);
    }
    size_t k = static_cast<size_t>(e[vi]);
    out[k] = (out[k] + val) % prime;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int gcd_degree_mod(std::vector<unsigned long> a, std::vector<unsigned long> b,
                   unsigned long p) {
  while (!b.empty()) {
    // a mod b
    unsigned long inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      unsigned long f = mulmod(a.back(), inv, p);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        unsigned long s = mulmod(f, b[i], p);
        a[off + i] = (a[off + i] + p - s) % p;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool certified_free_of(const MPoly& p, const MPoly& q, Var v) {
  static thread_local std::mt19937_64 rng(0xC0FFEE);
  for (unsigned long prime : kFilterPrimes) {
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::array<unsigned long, kNumVars> point{};
      for (auto& x : point) x = rng() % (prime - 2) + 1;
      auto pa = eval_image(p, v, point, prime);
      auto pb = eval_image(q, v, point, prime);
      if (!pa || !pb) continue;
      if (static_cast<int>(pa->size()) - 1 != p.deg(v)) continue;
      if (static_cast<int>(pb->size()) - 1 != q.deg(v)) continue;
      if (gcd_degree_mod(*pa, *pb, prime) == 0) return true;
    }
  }
  return false;
}

bool certified_coprime(const MPoly& p, const MPoly& q) {
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (!p.depends_on(v) || !q.depends_on(v)) continue;
    if (!certified_free_of(p, q, v)) return false;
  }
  return true;
}

// ----- modular gcd (Brown) for one or two shared variables -----

constexpr unsigned long kCrtPrimes[14] = {
    2147483647UL, 2147483629UL, 2147483587UL, 2147483579UL, 2147483563UL,
    2147483549UL, 2147483543UL, 2147483497UL, 2147483489UL, 2147483477UL,
    2147483423UL, 2147483399UL, 2147483353UL, 2147483323UL};

using UPoly = std::vector<unsigned long>;  // dense, index = exponent

void upoly_trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly upoly_gcd_mod(UPoly a, UPoly b, unsigned long p) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    unsigned long inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      unsigned long f = mulmod(a.back(), inv, p);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[off + i] = (a[off + i] + p - mulmod(f, b[i], p)) % p;
      upoly_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    unsigned long inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

// mpz residue helper with symmetric lift done at reconstruction time
unsigned long int_mod(const IntZ& n, unsigned long p) {
  return mpz_fdiv_ui(n.get_mpz_t(), p);
}

// dense coefficient matrix candidate[v_exp][w_exp] (w column 0 only for the
// univariate case)
struct ModularImage {
  std::vector<std::vector<unsigned long>> coeff;
  int deg_v = -1;
};

// integer-primitive polynomial as dense coefficients in (v, w)
struct DenseView {
  std::vector<std::vector<IntZ>> c;  // [v][w]
  int dv, dw;
};

DenseView dense_view(const MPoly& p, Var v, Var w) {
  DenseView out;
  out.dv = std::max(p.deg(v), 0);
  out.dw = std::max(w == v ? 0 : p.deg(w), 0);
  out.c.assign(out.dv + 1, std::vector<IntZ>(out.dw + 1, IntZ(0)));
  for (auto& [e, coef] : p.terms()) {
    if (!is_integer(coef))
      throw DomainError("dense_view expects integral coefficients");
    int ev = e[static_cast<int>(v)];
    int ew = w == v ? 0 : e[static_cast<int>(w)];
    out.c[ev][ew] += coef.get_num();
  }
  return out;
}

// evaluate the w variable at x modulo p, producing a dense v-polynomial
UPoly eval_w(const DenseView& d, unsigned long x, unsigned long p) {
  UPoly out(d.dv + 1, 0);
  for (int i = 0; i <= d.dv; ++i) {
    unsigned long acc = 0;
    for (int j = d.dw; j >= 0; --j)
      acc = (mulmod(acc, x, p) + int_mod(d.c[i][j], p)) % p;
    out[i] = acc;
  }
  upoly_trim(out);
  return out;
}

// Lagrange interpolation of the w-dependence from samples (x_k, value rows)
std::optional<ModularImage> interpolate_w(
    const std::vector<unsigned long>& xs,
    const std::vector<UPoly>& samples, int deg_v, unsigned long p) {
  size_t n = xs.size();
  ModularImage img;
  img.deg_v = deg_v;
  img.coeff.assign(deg_v + 1, std::vector<unsigned long>(n, 0));
  // Lagrange basis polynomials, accumulated coefficient-wise
  for (size_t k = 0; k < n; ++k) {
    // numerator poly prod_{j != k} (w - x_j), denominator prod (x_k - x_j)
    std::vector<unsigned long> basis{1};
    unsigned long denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      basis.push_back(0);
      for (size_t i = basis.size() - 1; i > 0; --i)
        basis[i] = (basis[i - 1] + mulmod(basis[i], p - xs[j], p)) % p;
      basis[0] = mulmod(basis[0], p - xs[j], p);
      denom = mulmod(denom, (xs[k] + p - xs[j]) % p, p);
    }
    if (denom == 0) return std::nullopt;
    unsigned long scale = powmod(denom, p - 2, p);
    for (int i = 0; i <= deg_v; ++i) {
      unsigned long val =
          i < static_cast<int>(samples[k].size()) ? samples[k][i] : 0;
      val = mulmod(val, scale, p);
      if (val == 0) continue;
      for (size_t j = 0; j < basis.size(); ++j) {
        img.coeff[i][j] =
            (img.coeff[i][j] + mulmod(val, basis[j], p)) % p;
      }
    }
  }
  return img;
}

// gcd image modulo one prime; univariate case uses a single sample with no
// interpolation. gamma is the leading-coefficient correction polynomial.
std::optional<ModularImage> gcd_image_mod(const DenseView& P, const DenseView& Q,
                                          const DenseView& gamma, bool bivar,
                                          unsigned long p,
                                          std::mt19937_64& rng) {
  if (!bivar) {
    UPoly a = eval_w(P, 0, p), b = eval_w(Q, 0, p);
    if (static_cast<int>(a.size()) - 1 != P.dv) return std::nullopt;
    if (static_cast<int>(b.size()) - 1 != Q.dv) return std::nullopt;
    UPoly g = upoly_gcd_mod(a, b, p);
    if (g.empty()) return std::nullopt;
    unsigned long gm = int_mod(gamma.c[0][0], p);
    if (gm == 0) return std::nullopt;
    ModularImage img;
    img.deg_v = static_cast<int>(g.size()) - 1;
    img.coeff.assign(g.size(), std::vector<unsigned long>(1, 0));
    for (size_t i = 0; i < g.size(); ++i) img.coeff[i][0] = mulmod(g[i], gm, p);
    return img;
  }
  int need = std::min(P.dw, Q.dw) + gamma.dw + 1;
  std::vector<unsigned long> xs;
  std::vector<UPoly> samples;
  int dmin = INT32_MAX;
  int guard = 0;
  while (static_cast<int>(xs.size()) < need) {
    if (++guard > 32 * need) return std::nullopt;
    unsigned long x = rng() % (p - 1) + 1;
    if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
    UPoly a = eval_w(P, x, p), b = eval_w(Q, x, p);
    // require the leading v-coefficients to survive the evaluation
    if (static_cast<int>(a.size()) - 1 != P.dv ||
        static_cast<int>(b.size()) - 1 != Q.dv)
      continue;
    UPoly g = upoly_gcd_mod(a, b, p);
    if (g.empty()) continue;
    int d = static_cast<int>(g.size()) - 1;
    if (d < dmin) {
      dmin = d;
      xs.clear();
      samples.clear();
    } else if (d > dmin) {
      continue;  // unlucky evaluation point
    }
    // normalize by gamma(x)
    unsigned long gm = 0;
    for (int j = gamma.dw; j >= 0; --j)
      gm = (mulmod(gm, x, p) + int_mod(gamma.c[0][j], p)) % p;
    if (gm == 0) continue;
    for (auto& cc : g) cc = mulmod(cc, gm, p);
    xs.push_back(x);
    samples.push_back(std::move(g));
  }
  return interpolate_w(xs, samples, dmin, p);
}

}  // namespace

MPoly content_in(const MPoly& p, Var v) {
  MPoly c;
  for (const MPoly& coeff : p.coeffs_in(v)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff : gcd_rec(c, coeff);
    if (c.is_constant()) break;
  }
  if (c.is_zero()) return c;
  // fold the rational content too, keeping the result primitive over Z
  Rat rc = c.rational_content();
  MPoly out = c;
  out *= 1 / rc;
  // reattach the shared rational content of the whole polynomial
  Rat whole = p.rational_content();
  out *= abs(whole) == 0 ? Rat(1) : whole;
  return out;
}

// modular gcd of integer-primitive polynomials supported on exactly one or
// two variables; nullopt when the CRT primes run out before verification
static std::optional<MPoly> gcd_modular(const MPoly& p, const MPoly& q,
                                        const std::vector<Var>& vars) {
  static thread_local std::mt19937_64 rng(0xB05EED);
  Var v = vars[0];
  bool bivar = vars.size() == 2;
  Var w = bivar ? vars[1] : vars[0];
  DenseView P = dense_view(p, v, w);
  DenseView Q = dense_view(q, v, w);
  MPoly lp = p.lead_coeff_in(v);
  MPoly lq = q.lead_coeff_in(v);
  MPoly gamma = gcd_rec(lp, lq);
  gamma *= 1 / gamma.rational_content();
  DenseView G = dense_view(gamma, w == v ? v : w, w);
  if (bivar) {
    // dense_view(gamma, w, w) puts w exponents on the v axis; flip it
    DenseView flip;
    flip.dv = 0;
    flip.dw = G.dv;
    flip.c.assign(1, std::vector<IntZ>(G.dv + 1, IntZ(0)));
    for (int i = 0; i <= G.dv; ++i) flip.c[0][i] = G.c[i][0];
    G = std::move(flip);
  }

  std::vector<std::vector<IntZ>> acc;
  IntZ modulus(0);
  int dmin = INT32_MAX;
  for (unsigned long prime : kCrtPrimes) {
    auto img = gcd_image_mod(P, Q, G, bivar, prime, rng);
    if (!img) continue;
    if (img->deg_v == 0) return MPoly(Rat(1));
    if (img->deg_v > dmin) continue;  // unlucky prime
    size_t cols = img->coeff[0].size();
    if (img->deg_v < dmin || acc.empty()) {
      dmin = img->deg_v;
      acc.assign(dmin + 1, std::vector<IntZ>(cols, IntZ(0)));
      modulus = 1;
    }
    // cell-wise CRT merge
    IntZ pz(static_cast<unsigned long>(prime));
    IntZ minv;
    if (modulus == 1) {
      for (int i = 0; i <= dmin; ++i)
        for (size_t j = 0; j < cols && j < img->coeff[i].size(); ++j)
          acc[i][j] = IntZ(img->coeff[i][j]);
    } else {
      if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
        continue;
      for (int i = 0; i <= dmin; ++i) {
        for (size_t j = 0; j < cols; ++j) {
          IntZ b(j < img->coeff[i].size() ? img->coeff[i][j] : 0UL);
          IntZ delta = ((b - acc[i][j]) % pz * minv) % pz;
          if (delta < 0) delta += pz;
          acc[i][j] += modulus * delta;
        }
      }
    }
    modulus *= pz;
    // symmetric lift, strip integer content, verify by division
    IntZ half = modulus / 2;
    MPoly cand;
    IntZ content(0);
    std::vector<std::vector<IntZ>> lifted(acc);
    for (auto& row : lifted)
      for (auto& cell : row) {
        if (cell > half) cell -= modulus;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), cell.get_mpz_t());
      }
    if (content == 0) continue;
    for (int i = 0; i <= dmin; ++i) {
      for (size_t j = 0; j < lifted[i].size(); ++j) {
        if (lifted[i][j] == 0) continue;
        Exp e{};
        e[static_cast<int>(v)] = i;
        if (bivar) e[static_cast<int>(w)] = static_cast<int>(j);
        cand += MPoly::term(Rat(lifted[i][j] / content), e);
      }
    }
    if (cand.is_zero()) continue;
    if (divide_exact(p, cand) && divide_exact(q, cand)) return cand;
  }
  return std::nullopt;
}

// full-ring gcd, unnormalized up to a rational unit
static MPoly gcd_rec(const MPoly& p, const MPoly& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  auto content_gcd = [&]() {
    Rat a =
        p.is_constant() ? abs(p.constant_value()) : abs(p.rational_content());
    Rat b =
        q.is_constant() ? abs(q.constant_value()) : abs(q.rational_content());
    return MPoly(rat_content_pair(a, b));
  };
  if (p.is_constant() || q.is_constant()) return content_gcd();
  // cheap win: exact divisibility one way or the other
  if (p.terms().size() <= q.terms().size()) {
    if (divide_exact(q, p)) return p;
  } else if (divide_exact(p, q)) {
    return q;
  }
  // the gcd can only involve variables shared by both inputs
  Var v = Var::t;
  bool shared = false;
  for (int i = 0; i < kNumVars && !shared; ++i) {
    v = static_cast<Var>(i);
    shared = p.depends_on(v) && q.depends_on(v);
  }
  if (!shared || certified_coprime(p, q)) return content_gcd();

  Rat rc = rat_content_pair(abs(p.rational_content()), abs(q.rational_content()));

  // modular fast path when the supports span at most two variables
  {
    std::vector<Var> sup;
    bool pure = true;
    for (int i = 0; i < kNumVars && pure; ++i) {
      Var vv = static_cast<Var>(i);
      bool in_p = p.depends_on(vv), in_q = q.depends_on(vv);
      if (!in_p && !in_q) continue;
      if (in_p != in_q) pure = false;  // one-sided variable: fall back
      sup.push_back(vv);
    }
    if (pure && !sup.empty() && sup.size() <= 2) {
      MPoly P1 = p;
      P1 *= 1 / p.rational_content();
      MPoly Q1 = q;
      Q1 *= 1 / q.rational_content();
      MPoly cw(Rat(1));
      if (sup.size() == 2) {
        // split off the content w.r.t. the main variable
        MPoly cp = content_in(P1, sup[0]);
        MPoly cq = content_in(Q1, sup[0]);
        cw = gcd_rec(cp, cq);
        P1 = *divide_exact(P1, cp);
        Q1 = *divide_exact(Q1, cq);
        if (!P1.depends_on(sup[0]) || !Q1.depends_on(sup[0]))
          return content_gcd() * cw;
      }
      auto g = gcd_modular(P1, Q1, sup);
      if (g) return MPoly(rc) * cw * *g;
    }
  }

  // primitive pseudo-remainder sequence fallback
  MPoly cp = content_in(p, v), cq = content_in(q, v);
  MPoly c = gcd_rec(cp, cq);
  MPoly a = *divide_exact(p, cp);
  MPoly b = *divide_exact(q, cq);
  if (a.deg(v) < b.deg(v)) std::swap(a, b);
  while (!b.is_zero()) {
    MPoly r = prem(a, b, v);
    a = b;
    if (r.is_zero()) {
      b = MPoly();
    } else {
      MPoly cr = content_in(r, v);
      b = *divide_exact(r, cr);
    }
  }
  MPoly ca = content_in(a, v);
  a = *divide_exact(a, ca);
  return c * a;
}

MPoly poly_gcd(const MPoly& p, const MPoly& q) {
  if (p.is_zero() && q.is_zero())
    throw DomainError("gcd(0,0) is undefined");
  return gcd_rec(p, q).monic();
}

MPoly poly_gcd_in(const MPoly& p, const MPoly& q, Var main_var) {
  if (p.is_zero() && q.is_zero())
    throw DomainError("gcd(0,0) is undefined");
  MPoly a = p, b = q;
  if (!a.is_zero() && a.depends_on(main_var))
    a = *divide_exact(a, content_in(a, main_var));
  if (!b.is_zero() && b.depends_on(main_var))
    b = *divide_exact(b, content_in(b, main_var));
  MPoly g = gcd_rec(a, b);
  if (!g.depends_on(main_var)) return MPoly(Rat(1));
  MPoly lc = g.lead_coeff_in(main_var);
  if (lc.is_constant()) {
    MPoly out = g;
    out *= 1 / lc.constant_value();
    return out;
  }
  return g.monic();
}

SquareFreeDecomposition squarefree_decompose(const MPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
  SquareFreeDecomposition out;
  out.constant = 1;
  if (p.is_constant()) {
    out.constant = p.constant_value();
    return out;
  }
  auto gcd_with_partials = [](const MPoly& f) {
    MPoly g = f;
    for (Var v : f.support()) g = gcd_rec(g, f.derivative(v));
    return g;
  };
  MPoly g = gcd_with_partials(p).monic();
  MPoly c = *divide_exact(p, g);  // product of the distinct factors
  while (true) {
    if (g.is_constant()) {
      out.factors.push_back(c.monic());
      break;
    }
    MPoly g2 = gcd_with_partials(g).monic();
    MPoly c2 = *divide_exact(g, g2);
    // factors of multiplicity exactly this level
    MPoly a = *divide_exact(c, c2);
    out.factors.push_back(a.monic());
    c = c2;
    g = g2;
  }
  // constant := p / prod factors[i]^(i+1)
  MPoly prod(Rat(1));
  for (size_t i = 0; i < out.factors.size(); ++i)
    prod = prod * out.factors[i].pow(static_cast<int>(i) + 1);
  auto q = divide_exact(p, prod);
  if (!q || !q->is_constant())
    throw DomainError("squarefree decomposition internal failure");
  out.constant = q->constant_value();
  return out;
}

SquareFreePart squarefree_part(const MPoly& p) {
  auto dec = squarefree_decompose(p);
  SquareFreePart out;
  out.part = MPoly(Rat(1));
  out.cofactor = MPoly(Rat(1));
  out.constant = dec.constant;
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    int mult = static_cast<int>(i) + 1;
    if (mult & 1) out.part = out.part * dec.factors[i];
    out.cofactor = out.cofactor * dec.factors[i].pow(mult / 2);
  }
  return out;
}

std::optional<MPoly> poly_sqrt(const MPoly& p) {
  if (p.is_zero()) return MPoly();
  if (p.is_constant()) {
    auto r = rat_sqrt(p.constant_value());
    if (!r) return std::nullopt;
    return MPoly(*r);
  }
  auto dec = squarefree_decompose(p);
  auto c = rat_sqrt(dec.constant);
  if (!c) return std::nullopt;
  MPoly out(*c);
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    int mult = static_cast<int>(i) + 1;
    if (mult & 1 && !dec.factors[i].is_constant()) return std::nullopt;
    out = out * dec.factors[i].pow(mult / 2);
  }
  return out;
}

std::vector<Rat> rational_roots(const MPoly& p, Var v) {
  if (p.is_zero()) throw DomainError("rational_roots of zero polynomial");
  for (Var w : p.support())
    if (w != v) throw DomainError("rational_roots: polynomial not univariate");
  std::vector<Rat> roots;
  MPoly f = p;
  // strip v^k: root 0
  int low = 0;
  {
    int min_e = INT32_MAX;
    for (auto& [e, c] : f.terms()) min_e = std::min(min_e, e[static_cast<int>(v)]);
    low = min_e;
  }
  if (low > 0) {
    roots.push_back(Rat(0));
    MPoly shifted;
    for (auto& [e, c] : f.terms()) {
      Exp e2 = e;
      e2[static_cast<int>(v)] -= low;
      shifted += MPoly::term(c, e2);
    }
    f = shifted;
  }
  if (f.is_constant()) return roots;
  // integer-primitive form
  Rat content = f.rational_content();
  f *= 1 / content;
  IntZ a0 = f.coeff_of(v, 0).constant_value().get_num();
  IntZ an = f.lead_coeff_in(v).constant_value().get_num();
  auto ds0 = divisors(abs(a0));
  auto dsn = divisors(abs(an));
  if (ds0.empty() || dsn.empty())
    throw DomainError("rational_roots: coefficient factorization overflow");
  for (const IntZ& num : ds0) {
    for (const IntZ& den : dsn) {
      for (int sign : {1, -1}) {
        Rat cand = make_rat(sign * num, den);
        if (f.eval_var(v, cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace qtwist
