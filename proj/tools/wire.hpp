#pragma once

#include <string>
#include <vector>

#include "cblocks/cblocks.hpp"
#include "json.hpp"

namespace cblocks::cli {

using Json = nlohmann::ordered_json;

/// Raised for malformed user input; mapped to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

/// Canonical JSON encoding of one bundle:
///   {"family": "sl2"|"spc", "level": N, "weights": [...]}
/// Round-trips losslessly.
struct BundleSpecWire {
  std::string family;
  int level = 1;
  std::vector<int> weights;

  bool operator==(const BundleSpecWire&) const = default;
};

Json emit_wire(const BundleSpecWire& wire);
BundleSpecWire parse_wire(const Json& value);

BundleSpecWire to_wire(const BundleSpec& bundle);
Family parse_family(const std::string& name);

/// "4,4,3,1" -> {4,4,3,1}; rejects anything but comma-separated
/// nonnegative integers.
std::vector<int> parse_weights(const std::string& text);

/// "1|2|3|456" (single-digit points) or "1|2|3|4.10.11".
FCurve parse_blocks(const std::string& text, int n);

/// One boundary subset per line, indices separated by spaces or commas.
std::vector<std::vector<int>> parse_basis_file(const std::string& content);

/// RFC 4180 field quoting: wraps in quotes when the field contains a
/// comma, quote, or newline; embedded quotes are doubled.
std::string csv_field(const std::string& field);

std::string rational_str(const Rational& value);

Json report_to_json(const VerificationReport& report, bool timings);

}  // namespace cblocks::cli
