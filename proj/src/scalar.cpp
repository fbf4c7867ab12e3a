#include "bidisk/scalar.hpp"

#include <cctype>

#include "bidisk/errors.hpp"

namespace bidisk {

namespace {

// Accepts "a", "a/b" and finite decimals such as "-0.75" or "1.5e-3".
mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class q;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
      throw InputError("malformed rational literal '" + text + "'");
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    q = mpq_class(num, den);
    q.canonicalize();
    return q;
  }
  std::string mant = s;
  long exp10 = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    mant = s.substr(0, e);
    try {
      exp10 = std::stol(s.substr(e + 1));
    } catch (const std::exception&) {
      throw InputError("malformed exponent in '" + text + "'");
    }
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  mpz_class num;
  if (mant.empty() || mant == "-" || mant == "+" || num.set_str(mant[0] == '+' ? mant.substr(1) : mant, 10) != 0)
    throw InputError("malformed rational literal '" + text + "'");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  q = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return q;
}

}  // namespace

GaussRat GaussRat::parse(const std::string& re_text, const std::string& im_text) {
  return GaussRat(parse_rational(re_text), parse_rational(im_text));
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  mpq_class d = o.re * o.re + o.im * o.im;
  if (sgn(d) == 0) throw DomainError("GaussRat: division by zero");
  mpq_class r = (re * o.re + im * o.im) / d;
  mpq_class i = (im * o.re - re * o.im) / d;
  re = r;
  im = i;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& x) {
  return os << "(" << x.re.get_str() << ", " << x.im.get_str() << ")";
}

}  // namespace bidisk
