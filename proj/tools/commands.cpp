#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cblocks/parallel.hpp"
#include "wire.hpp"

namespace cblocks::cli {

namespace {

struct WeightFlags {
  std::string weights;
  bool strict_order = false;
  bool labeled = false;
};

void add_bundle_options(CLI::App* cmd, std::string& family, int& level,
                        WeightFlags& flags, bool with_labeled) {
  cmd->add_option("--family", family, "bundle family: sl2 or spc")->required();
  cmd->add_option("--level", level, "level (sl2) or Lie rank (spc)")->required();
  cmd->add_option("--weights", flags.weights, "comma-separated weights")->required();
  cmd->add_flag("--strict-order", flags.strict_order,
                "reject weights that are not weakly decreasing");
  if (with_labeled)
    cmd->add_flag("--labeled", flags.labeled,
                  "keep the given weight order as the marked-point assignment");
}

BundleSpec bundle_from_flags(const std::string& family, int level,
                             const WeightFlags& flags) {
  std::vector<int> weights = parse_weights(flags.weights);
  if (flags.strict_order && !std::is_sorted(weights.begin(), weights.end(),
                                            std::greater_equal<int>()))
    throw UsageError("weights are not weakly decreasing (--strict-order)");
  Family fam = parse_family(family);
  return flags.labeled ? make_labeled_bundle(fam, level, std::move(weights))
                       : make_bundle(fam, level, std::move(weights));
}

std::string degrees_csv(const BundleSpec& bundle) {
  std::ostringstream os;
  os << "blocks,degree\n";
  for (const FCurve& curve : enumerate_fcurves(bundle.n()))
    os << csv_field(curve.to_string()) << ',' << intersect(bundle, curve) << '\n';
  return os.str();
}

std::string coords_line(const DivisorClass& cls) {
  std::string out;
  for (std::size_t i = 0; i < cls.coords.size(); ++i) {
    if (i) out += ',';
    out += rational_str(cls.coords[i]);
  }
  out += '\n';
  return out;
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  file << content;
}

std::string scan_csv(int n, int level_max) {
  struct Row {
    std::vector<int> weights;
    Family family;
    int level;
  };
  std::vector<Row> rows;
  for (int level = 1; level <= level_max; ++level)
    for (Family family : {Family::Sl2, Family::Spc})
      for_each_weight_vector(n, level, [&](const WeightVector& wv) {
        rows.push_back({wv.entries(), family, level});
      });

  std::vector<std::string> lines(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const Row& row = rows[i];
    const BundleSpec bundle = make_bundle(row.family, row.level, row.weights);
    const IntersectionVector iv = intersection_vector(bundle);
    std::string digest_input;
    bool trivial = true;
    for (const Integer& d : iv.degrees) {
      if (d != 0) trivial = false;
      digest_input += d.str();
      digest_input += '|';
    }
    std::ostringstream os;
    std::string weights;
    for (std::size_t j = 0; j < row.weights.size(); ++j) {
      if (j) weights += ',';
      weights += std::to_string(row.weights[j]);
    }
    os << csv_field(weights) << ',' << family_name(row.family) << ',' << row.level
       << ',' << rank(bundle.canonical(), row.level) << ','
       << (trivial ? "true" : "false") << ',' << std::hex << std::setw(16)
       << std::setfill('0') << fnv1a64(digest_input) << '\n';
    lines[i] = os.str();
  });

  std::string csv = "weights,family,level,rank,trivial,class_hash\n";
  for (const std::string& line : lines) csv += line;
  return csv;
}

int run_verify(const std::string& prop, int n, int level_max, int level,
               const std::string& weights_text, int extra, int r_hi, bool timings,
               const std::string& out_path, std::ostream& out) {
  std::vector<VerificationReport> reports;
  auto weights = [&] {
    if (weights_text.empty()) throw UsageError("--weights required for this check");
    return WeightVector(parse_weights(weights_text));
  };
  if (prop == "main") {
    reports.push_back(check_prop_main(n, level_max));
  } else if (prop == "stab") {
    reports.push_back(check_stabilization(weights(), extra));
  } else if (prop == "mono") {
    WeightVector wv = weights();
    int hi = r_hi > 0 ? r_hi : stabilizing_lie_rank(wv) + 3;
    reports.push_back(check_rank_monotonicity(wv, hi));
  } else if (prop == "plussing") {
    reports.push_back(check_plussing(n, level));
  } else if (prop == "examples") {
    reports.push_back(check_reference_examples());
  } else if (prop == "all") {
    reports.push_back(check_reference_examples());
    reports.push_back(check_prop_main(4, 5));
    reports.push_back(check_prop_main(5, 4));
    reports.push_back(check_plussing(5, 4));
    reports.push_back(check_stabilization(WeightVector({5, 4, 3, 2, 1, 1}), 3));
    reports.push_back(check_rank_monotonicity(WeightVector({5, 4, 3, 2, 1, 1}), 10));
  } else {
    throw UsageError("unknown proposition \"" + prop +
                     "\" (main|stab|mono|plussing|examples|all)");
  }

  bool passed = true;
  Json body;
  if (reports.size() == 1) {
    body = report_to_json(reports[0], timings);
    passed = reports[0].passed();
  } else {
    Json arr = Json::array();
    for (const VerificationReport& r : reports) {
      arr.push_back(report_to_json(r, timings));
      passed = passed && r.passed();
    }
    body["reports"] = arr;
    body["passed"] = passed;
  }
  write_output(out_path, body.dump(2) + "\n", out);
  return passed ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact ranks, F-curve degrees, and divisor classes of "
               "conformal-blocks bundles on M0,n"};
  app.set_version_flag("--version", std::string("cblocks ") + kVersion);
  app.require_subcommand(1);

  std::string family;
  int level = 1;
  WeightFlags flags;
  std::string blocks_text;
  std::string format = "coords";
  std::string basis_path;
  std::string out_path;

  CLI::App* rank_cmd = app.add_subcommand("rank", "exact vector-bundle rank");
  add_bundle_options(rank_cmd, family, level, flags, false);

  CLI::App* deg_cmd = app.add_subcommand("degree4", "four-point degree on M0,4");
  add_bundle_options(deg_cmd, family, level, flags, false);

  CLI::App* int_cmd = app.add_subcommand("intersect", "degree against one F-curve");
  add_bundle_options(int_cmd, family, level, flags, true);
  int_cmd->add_option("--blocks", blocks_text, "F-curve blocks, e.g. 1|2|3|456")
      ->required();

  CLI::App* div_cmd = app.add_subcommand("divisor", "divisor class of c1");
  add_bundle_options(div_cmd, family, level, flags, true);
  div_cmd->add_option("--format", format, "coords (basis coordinates) or fvec (CSV)")
      ->check(CLI::IsMember({"coords", "fvec"}));
  div_cmd->add_option("--basis", basis_path,
                      "file of boundary subsets, one per line (needed for coords when n != 6)");
  div_cmd->add_option("--out", out_path, "output path (default stdout)");

  std::string prop;
  int verify_n = 4;
  int verify_lmax = 5;
  int verify_level = 3;
  int extra = 3;
  int r_hi = 0;
  bool timings = false;
  CLI::App* ver_cmd = app.add_subcommand("verify", "run a proposition scan");
  ver_cmd->add_option("prop", prop, "main|stab|mono|plussing|examples|all")->required();
  ver_cmd->add_option("--n", verify_n, "number of marked points");
  ver_cmd->add_option("--lmax", verify_lmax, "largest level to scan");
  ver_cmd->add_option("--level", verify_level, "level for the plussing scan");
  ver_cmd->add_option("--weights", flags.weights, "comma-separated weights");
  ver_cmd->add_option("--extra", extra, "levels beyond the stabilizing Lie rank");
  ver_cmd->add_option("--rhi", r_hi, "largest Lie rank for the monotonicity scan");
  ver_cmd->add_flag("--timings", timings, "include elapsed_ms in the report");
  ver_cmd->add_option("--out", out_path, "output path (default stdout)");

  int scan_n = 4;
  int scan_lmax = 0;
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "CSV sweep of ranks and class digests");
  scan_cmd->add_option("--n", scan_n, "number of marked points")->required();
  scan_cmd->add_option("--lmax", scan_lmax, "largest level to scan")->required();
  scan_cmd->add_option("--out", out_path, "output path (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("cblocks");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (*rank_cmd) {
      const BundleSpec bundle = bundle_from_flags(family, level, flags);
      out << rank(bundle.canonical(), bundle.level) << '\n';
      return 0;
    }
    if (*deg_cmd) {
      const BundleSpec bundle = bundle_from_flags(family, level, flags);
      out << deg4(bundle.family, bundle.canonical(), bundle.level) << '\n';
      return 0;
    }
    if (*int_cmd) {
      const BundleSpec bundle = bundle_from_flags(family, level, flags);
      const FCurve curve = parse_blocks(blocks_text, bundle.n());
      out << intersect(bundle, curve) << '\n';
      return 0;
    }
    if (*div_cmd) {
      const BundleSpec bundle = bundle_from_flags(family, level, flags);
      if (format == "fvec") {
        write_output(out_path, degrees_csv(bundle), out);
        return 0;
      }
      DivisorClass cls;
      if (!basis_path.empty()) {
        std::ifstream file(basis_path);
        if (!file) throw UsageError("cannot read basis file " + basis_path);
        std::stringstream buffer;
        buffer << file.rdbuf();
        cls = divisor_class(bundle, parse_basis_file(buffer.str()));
      } else {
        cls = divisor_class(bundle);
      }
      write_output(out_path, coords_line(cls), out);
      return 0;
    }
    if (*ver_cmd) {
      return run_verify(prop, verify_n, verify_lmax, verify_level, flags.weights,
                        extra, r_hi, timings, out_path, out);
    }
    if (*scan_cmd) {
      if (scan_n < 4) throw UsageError("scan needs --n >= 4");
      if (scan_lmax < 0) throw UsageError("scan needs --lmax >= 0");
      write_output(out_path, scan_csv(scan_n, scan_lmax), out);
      return 0;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const BasisUnavailable& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cblocks::cli
