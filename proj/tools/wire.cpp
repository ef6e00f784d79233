#include "wire.hpp"

#include <array>
#include <sstream>

namespace cblocks::cli {

Json emit_wire(const BundleSpecWire& wire) {
  Json out;
  out["family"] = wire.family;
  out["level"] = wire.level;
  out["weights"] = wire.weights;
  return out;
}

BundleSpecWire parse_wire(const Json& value) {
  if (!value.is_object() || !value.contains("family") || !value.contains("level") ||
      !value.contains("weights"))
    throw UsageError("bundle spec needs family, level, weights");
  BundleSpecWire wire;
  try {
    wire.family = value.at("family").get<std::string>();
    wire.level = value.at("level").get<int>();
    wire.weights = value.at("weights").get<std::vector<int>>();
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed bundle spec: ") + e.what());
  }
  if (wire.family != "sl2" && wire.family != "spc")
    throw UsageError("family must be \"sl2\" or \"spc\"");
  return wire;
}

BundleSpecWire to_wire(const BundleSpec& bundle) {
  return BundleSpecWire{family_name(bundle.family), bundle.level, bundle.weights};
}

Family parse_family(const std::string& name) {
  if (name == "sl2") return Family::Sl2;
  if (name == "spc") return Family::Spc;
  throw UsageError("unknown family \"" + name + "\" (expected sl2 or spc)");
}

std::vector<int> parse_weights(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size() || value < 0) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("bad weight \"" + item + "\" in \"" + text + "\"");
    }
  }
  if (out.empty()) throw UsageError("no weights given");
  return out;
}

FCurve parse_blocks(const std::string& text, int n) {
  std::array<std::vector<int>, 4> blocks;
  std::istringstream in(text);
  std::string part;
  std::size_t index = 0;
  while (std::getline(in, part, '|')) {
    if (index >= 4) throw UsageError("more than 4 blocks in \"" + text + "\"");
    std::vector<int>& block = blocks[index++];
    if (part.find('.') != std::string::npos) {
      std::istringstream bin(part);
      std::string point;
      while (std::getline(bin, point, '.')) {
        try {
          block.push_back(std::stoi(point));
        } catch (const std::exception&) {
          throw UsageError("bad point \"" + point + "\" in blocks");
        }
      }
    } else {
      for (char c : part) {
        if (c < '1' || c > '9')
          throw UsageError("bad point '" + std::string(1, c) +
                           "' in blocks (use dots for points above 9)");
        block.push_back(c - '0');
      }
    }
  }
  if (index != 4) throw UsageError("expected 4 blocks in \"" + text + "\"");
  try {
    return FCurve(n, std::move(blocks));
  } catch (const Error& e) {
    throw UsageError(std::string("bad blocks: ") + e.what());
  }
}

std::vector<std::vector<int>> parse_basis_file(const std::string& content) {
  std::vector<std::vector<int>> basis;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream fields(line);
    std::vector<int> subset;
    int value;
    while (fields >> value) subset.push_back(value);
    if (!subset.empty()) basis.push_back(std::move(subset));
  }
  if (basis.empty()) throw UsageError("basis file lists no subsets");
  return basis;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string rational_str(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

namespace {

Json failure_to_json(const CheckFailure& failure) {
  Json out;
  Json bundles = Json::array();
  for (const BundleSpec& b : failure.bundles) bundles.push_back(emit_wire(to_wire(b)));
  out["bundles"] = bundles;
  if (failure.curve) out["fcurve"] = failure.curve->to_string();
  if (failure.level) out["level"] = *failure.level;
  out["expected"] = failure.expected;
  out["got"] = failure.got;
  return out;
}

Json witness_to_json(const StrictWitness& witness) {
  Json out;
  out["weights"] = witness.weights.entries();
  out["level"] = witness.level;
  out["fcurve"] = witness.curve.to_string();
  out["sl2_degree"] = witness.sl2_degree.str();
  out["spc_degree"] = witness.spc_degree.str();
  return out;
}

}  // namespace

Json report_to_json(const VerificationReport& report, bool timings) {
  Json out;
  out["proposition"] = report.proposition_id;
  out["instances_checked"] = report.instances_checked;
  out["passed"] = report.passed();
  Json failures = Json::array();
  for (const CheckFailure& f : report.failures) failures.push_back(failure_to_json(f));
  out["failures"] = failures;
  if (!report.witnesses.empty()) {
    Json witnesses = Json::array();
    for (const StrictWitness& w : report.witnesses) witnesses.push_back(witness_to_json(w));
    out["witnesses"] = witnesses;
  }
  if (!report.notes.empty()) out["notes"] = report.notes;
  // elapsed is nondeterministic, so byte-stable output omits it by default
  if (timings) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

}  // namespace cblocks::cli
