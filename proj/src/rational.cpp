#include "crnx/rational.hpp"

namespace crnx {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::vector<Integer> scale_to_integers(std::span<const Rational> values) {
  Integer denominator_lcm = 1;
  for (const Rational& v : values) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
            v.get_den_mpz_t());
  }
  std::vector<Integer> scaled;
  scaled.reserve(values.size());
  Integer content = 0;
  for (const Rational& v : values) {
    Integer n = v.get_num() * (denominator_lcm / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    scaled.push_back(std::move(n));
  }
  if (content > 1) {
    for (Integer& n : scaled) n /= content;
  }
  return scaled;
}

std::vector<Rational> to_rationals(std::span<const Integer> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const Integer& v : values) out.emplace_back(v);
  return out;
}

}  // namespace crnx
