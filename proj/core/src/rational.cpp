#include "relfrac/rational.hpp"

#include <ostream>

#include "relfrac/error.hpp"

namespace relfrac {

Rational::Rational(long long v) {
  q_ = mpq_class(mpz_class(std::to_string(v)));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::kInvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  auto parse_int = [&](const std::string& s, mpz_class& out) {
    if (s.empty() || out.set_str(s, 10) != 0) {
      throw Error(ErrorKind::kParseError, "not a rational: '" + text + "'");
    }
  };
  if (slash == std::string::npos) {
    parse_int(text, num);
  } else {
    parse_int(text.substr(0, slash), num);
    parse_int(text.substr(slash + 1), den);
    if (den <= 0) {
      throw Error(ErrorKind::kParseError, "bad denominator: '" + text + "'");
    }
  }
  return Rational(num, den);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::kInvalidArgument, "reciprocal of 0");
  return Rational(den(), num());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::kInvalidArgument, "division by 0");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int places) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  // Round half away from zero at the requested precision.
  mpq_class scaled = abs().q_ * scale;
  mpz_class whole;
  mpz_class twice_num = scaled.get_num() * 2 + scaled.get_den();
  mpz_class twice_den = scaled.get_den() * 2;
  mpz_fdiv_q(whole.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
  std::string digits = whole.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = sign() < 0 && whole != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<size_t>(places));
  if (places > 0) {
    out += ".";
    out += digits.substr(digits.size() - static_cast<size_t>(places));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

mpz_class lcm_of_denominators(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_class d = v.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace relfrac
