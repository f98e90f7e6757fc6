#pragma once

// Text literals shared by the command line tool and the Python bindings.
//
//   matrix        "a11,a12;a21,a22"        integers
//   moebius       "a,b;c,d"                rationals allowed ("31/30,0;-1/30,1")
//   rational      "n" or "n/d"
//   vertex        "M=num/den,r=g/h"        M may be an integer
//   supernatural  "2^4*5^2*7^inf", "1", "0"
//
// Every parser throws ParseError on malformed input.

#include <string>
#include <string_view>

#include "bigpic/arith.hpp"
#include "bigpic/bigpicture.hpp"
#include "bigpic/lattice.hpp"
#include "bigpic/supernatural.hpp"

namespace bigpic {

Int parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
IntMatrix2 parse_matrix(std::string_view text);
MoebiusMatrix parse_moebius(std::string_view text);
BigPictureVertex parse_vertex(std::string_view text);
/// Rejects repeated primes and composite or non-prime bases.
ComponentwiseProfinite parse_supernatural(std::string_view text);

/// "a,b;c,d"
std::string format_matrix(const IntMatrix2& m);
/// "M=num/den,r=g/h"
std::string format_vertex(const BigPictureVertex& v);

}  // namespace bigpic
