#ifndef NEWTONCYCLES_JSON_IO_HPP
#define NEWTONCYCLES_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "newtoncycles/family.hpp"
#include "newtoncycles/polynomial.hpp"
#include "newtoncycles/sharpness.hpp"
#include "newtoncycles/verify.hpp"

namespace newtoncycles::json_io {

using Json = nlohmann::ordered_json;

/// "[[re, im], ...]" -> complex list. Throws InvalidArgument on malformed text.
[[nodiscard]] std::vector<Complex> parse_complex_list(std::string_view text);
[[nodiscard]] Polynomial parse_polynomial(std::string_view text);

/// "re,im" (or a bare real).
[[nodiscard]] Complex parse_complex_pair(std::string_view text);

[[nodiscard]] Json to_json(Complex z);
[[nodiscard]] Json to_json(const std::vector<Complex>& zs);
[[nodiscard]] Json to_json(const Polynomial& p);
[[nodiscard]] Json to_json(const CycleReport& report);
[[nodiscard]] Json to_json(const BracketTable& table);
[[nodiscard]] Json to_json(const SharpnessCertificate& cert);

/// Serializer printing every float with 17 significant digits; NaN and
/// infinities become null.
[[nodiscard]] std::string dump(const Json& value, int indent = 2);

}  // namespace newtoncycles::json_io

#endif  // NEWTONCYCLES_JSON_IO_HPP
