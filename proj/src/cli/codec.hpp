#pragma once

#include "mpls/field.hpp"
#include "mpls/integral.hpp"
#include "mpls/lfunc.hpp"
#include "mpls/matrix.hpp"
#include "mpls/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mpls::cli {

using json = nlohmann::ordered_json;

// "re,im", "re", or "e:t" for exp(2 pi i t) with t rational.
cd parse_complex(const std::string& s);
// Semicolon-separated list of complex numbers.
std::vector<cd> parse_complex_list(const std::string& s);

// trivial | unramified:<z> | legendre[:<z>] | generator:<m>:<z>[:<z>] | two-adic:<m>:<+-1>:<z>[:<z>]
// where the last <z> is the value at the uniformizer.
MultiplicativeCharacter parse_character(long p, const std::string& spec);

// A JSON document given inline or as a path to a file holding one.
json load_json(const std::string& inline_or_path);
QMatrix matrix_from_json(const json& j);

json to_json(cd z);
json to_json(const Q& x);
json to_json(const QMatrix& m);
json to_json(const GammaRat& g);
json to_json(const LocalCoefDecomposition& d);
json to_json(const verify::Report& r);

// Aligned plain-text rendering. Arrays of objects become columns, everything else key: value lines.
std::string render_table(const json& j);

}  // namespace mpls::cli
