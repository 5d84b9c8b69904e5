#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mckay::exact {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical num/den; throws std::domain_error on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Accepts "p", "-p", "p/q"; the result is canonical. Throws ParseError.
Rat parse_rat(std::string_view text);

Int parse_int(std::string_view text);

Int floor(const Rat& r);

/// r - floor(r), in [0, 1).
Rat frac(const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Lexicographic order on equal-length vectors.
bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace mckay::exact
