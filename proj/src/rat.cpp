#include "qtwist/rat.hpp"

#include <cctype>

namespace qtwist {

Rat make_rat(const IntZ& num, const IntZ& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_long(long num, long den) {
  return make_rat(IntZ(num), IntZ(den));
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string int_str(const IntZ& n) { return n.get_str(); }

static bool valid_rat_chars(std::string_view s) {
  if (s.empty()) return false;
  size_t i = 0;
  if (s[0] == '-') i = 1;
  if (i == s.size()) return false;
  bool seen_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash || i + 1 == s.size()) return false;
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<Rat> rat_parse(std::string_view s) {
  if (!valid_rat_chars(s)) return std::nullopt;
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    return std::nullopt;
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

std::optional<IntZ> int_parse(std::string_view s) {
  auto r = rat_parse(s);
  if (!r || !is_integer(*r)) return std::nullopt;
  return r->get_num();
}

bool rat_is_square(const Rat& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) &&
         mpz_perfect_square_p(r.get_den_mpz_t());
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (!rat_is_square(r)) return std::nullopt;
  IntZ n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  return make_rat(n, d);
}

Rat rat_content_pair(const Rat& a, const Rat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  IntZ g, l;
  mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  return make_rat(g, l);
}

std::optional<long> to_long(const IntZ& n) {
  if (!n.fits_slong_p()) return std::nullopt;
  return n.get_si();
}

}  // namespace qtwist
