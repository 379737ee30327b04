#ifndef SPLICE_TEXT_FORMAT_HPP
#define SPLICE_TEXT_FORMAT_HPP

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored. Keywords:
//
//   complex <name>                       starts an F[U] complex
//   gen <id> <grading>                   grading is an integer or p/q
//   d <src> -> <tgt> : <poly>            adds <poly> * tgt to ∂(src)
//   iota <src> -> <tgt> : <poly>         adds <poly> * tgt to ι(src)
//
//   knot <name>                          starts a knot-like complex
//   kgen <id> <gr_w> <gr_z>
//   kd <src> -> <tgt> : <poly in U, V>
//
//   presentation <name>                  starts a framed link
//   comp <label> framing=<k> companion=<0|1>
//   lk <i> <j> <v>                       components by label or 0-based index
//   note <text>
//
// Polynomials are sums of monomials such as 1, U, U^3, V^2, UV, U^2 V.
// A complex without iota lines gets the identity involution. Errors are
// reported as ParseError with the 1-based line number.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "splice/iota_complex.hpp"
#include "splice/kirby.hpp"
#include "splice/knot_like.hpp"

namespace splice {

// Throw std::invalid_argument.
UPoly parse_upoly(std::string_view text);
UVPoly parse_uvpoly(std::string_view text);

struct ParsedComplex {
    IotaComplex x;
    bool has_iota = false;
};

std::vector<ParsedComplex> parse_complexes(std::string_view text);
// Exactly one complex block.
ParsedComplex parse_complex(std::string_view text);
KnotLikeComplex parse_knot(std::string_view text);
SurgeryPresentation parse_presentation(std::string_view text);

std::string format_complex(const GradedComplex& c);
// Includes iota lines.
std::string format_iota(const IotaComplex& x);
std::string format_knot(const KnotLikeComplex& c);
std::string format_presentation(const SurgeryPresentation& p, const std::string& name = "");

// Reads a whole file; throws InvalidInput when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace splice

#endif
