#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace bidisk {

using cplx = std::complex<double>;

// Gaussian rational: re + i*im with re, im in Q.
struct GaussRat {
  mpq_class re;
  mpq_class im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussRat parse(const std::string& re_text, const std::string& im_text);

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

inline GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
inline GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
inline GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
inline GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
inline GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
inline bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const GaussRat& x);

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, GaussRat>;

inline cplx sconj(const cplx& x) { return std::conj(x); }
inline GaussRat sconj(const GaussRat& x) { return GaussRat(x.re, -x.im); }

inline bool is_zero(const cplx& x) { return x == cplx(0.0, 0.0); }
inline bool is_zero(const GaussRat& x) { return x.is_zero(); }

inline cplx to_cplx(const cplx& x) { return x; }
inline cplx to_cplx(const GaussRat& x) { return {x.re.get_d(), x.im.get_d()}; }

// Magnitude as a double in both backends.
inline double sabs(const cplx& x) { return std::abs(x); }
inline double sabs(const GaussRat& x) { return std::abs(to_cplx(x)); }

// |x|^2 computed in the backend itself (exact for GaussRat).
inline cplx norm2(const cplx& x) { return std::norm(x); }
inline GaussRat norm2(const GaussRat& x) { return GaussRat(x.re * x.re + x.im * x.im); }

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace bidisk
