#include "sfn/scalar.hpp"

#include <stdexcept>

namespace sfn {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(10); }

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(q_.get_num().get_str(16));
  return h * 31 + std::hash<std::string>{}(q_.get_den().get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm2();
  if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string out = re_.str();
  if (im_.sign() < 0)
    out += "-" + (-im_).str();
  else
    out += "+" + im_.str();
  return out + "*i";
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("GaussianRational: empty input");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // split at the last sign that is not the leading one
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      cut = k;
      break;
    }
  }
  auto parse_im = [](std::string t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    if (t[0] == '+') t.erase(0, 1);
    return Rational::parse(t);
  };
  if (cut == std::string::npos) return {Rational(0), parse_im(s)};
  return {Rational::parse(s.substr(0, cut)), parse_im(s.substr(cut))};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace sfn
