#include "difinv/rational.hpp"

#include <stdexcept>

namespace difinv {

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return r;
}

}  // namespace difinv
