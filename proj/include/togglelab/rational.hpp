#ifndef TOGGLELAB_RATIONAL_HPP
#define TOGGLELAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tgl {

// All statistics and all linear algebra in this project are exact; the
// dimension results are rank statements over Q, so nothing here may ever
// touch floating point.
using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

/// Canonical text form: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string to_string(const Rational& q);

/// Inverse of to_string. Accepts "a" and "a/b". Throws parse_error.
Rational rational_from_string(const std::string& text);

bool is_zero_vector(const QVector& v);

} // namespace tgl

#endif
