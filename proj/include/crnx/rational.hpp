#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace crnx {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Smallest positive multiple of `values` with integer entries and content 1.
// The zero vector maps to itself.
std::vector<Integer> scale_to_integers(std::span<const Rational> values);

std::vector<Rational> to_rationals(std::span<const Integer> values);

}  // namespace crnx
