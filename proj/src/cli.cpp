#include "alf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "alf/classification.hpp"
#include "alf/error.hpp"
#include "alf/io.hpp"

namespace alf::cli {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open pair file '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bodies of ample angles and ALF classification of log pairs on rational surfaces", "alf"};
  app.require_subcommand(1);

  std::string aa_file = "-";
  auto* aa = app.add_subcommand("aa", "Compute the body of ample angles of a pair");
  aa->add_option("pair-file", aa_file, "Pair description (JSON, '-' for stdin)");

  std::string classify_file = "-";
  bool expect_alf = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a pair as NotALF, ALF or StronglyALF");
  classify_cmd->add_option("pair-file", classify_file, "Pair description (JSON, '-' for stdin)");
  classify_cmd->add_flag("--expect-alf", expect_alf, "Exit with status 1 when the pair is not ALF");

  std::string family_kind;
  int family_n = 0;
  bool family_emit = false;
  auto* family_cmd = app.add_subcommand("family", "Build a member of a rank-two family");
  family_cmd->add_option("kind", family_kind, "ALdP1, ALdP2, ALdP3 or ALdP4")->required();
  family_cmd->add_option("--n", family_n, "Hirzebruch index")->required();
  family_cmd->add_flag("--emit", family_emit, "Print the pair description instead of its report");

  std::string blowup_file = "-";
  std::string blowup_type;
  std::vector<std::string> blowup_on;
  std::string blowup_label;
  auto* blowup_cmd = app.add_subcommand("blowup", "Apply a structure blow-up and print the new description");
  blowup_cmd->add_option("pair-file", blowup_file, "Pair description (JSON, '-' for stdin)");
  blowup_cmd->add_option("--type", blowup_type, "i (smooth boundary point) or ii (boundary crossing)")
      ->required()
      ->check(CLI::IsMember({"i", "ii"}));
  blowup_cmd->add_option("--on", blowup_on, "Curve through the centre (repeatable)")->required();
  blowup_cmd->add_option("--fiber-label", blowup_label, "Name of the fiber through the centre");

  int verify_n_max = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the classification battery");
  verify_cmd->add_option("--n-max", verify_n_max, "Largest Hirzebruch index")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (aa->parsed()) {
      const LogPair pair = io::parse_pair(read_input(aa_file, in));
      out << io::dump(io::aa_report(pair, classify(pair)));
      return kOk;
    }
    if (classify_cmd->parsed()) {
      const LogPair pair = io::parse_pair(read_input(classify_file, in));
      const Verdict verdict = classify(pair);
      out << io::dump(io::classify_report(pair, verdict));
      return expect_alf && verdict.status == Status::NotALF ? kNotAlf : kOk;
    }
    if (family_cmd->parsed()) {
      const auto kind = parse_family(family_kind);
      if (!kind) throw PreconditionError("unknown family '" + family_kind + "'", "kind");
      const PairDescription d = family_description(*kind, family_n);
      if (family_emit) {
        out << io::emit_pair(d);
      } else {
        const LogPair pair = build_pair(d);
        out << io::dump(io::classify_report(pair, classify(pair)));
      }
      return kOk;
    }
    if (blowup_cmd->parsed()) {
      const LogPair pair = io::parse_pair(read_input(blowup_file, in));
      BlowUpSpec spec{blowup_on, std::nullopt, blowup_type == "ii"};
      if (!blowup_label.empty()) spec.fiber_label = blowup_label;
      const LogPair next = blowup_type == "i" ? blow_up_type_i(pair, spec) : blow_up_type_ii(pair, spec);
      out << io::emit_pair(next.description());
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const VerificationReport report = verify_theorems(verify_n_max);
      out << io::dump(io::verify_report(report));
      return report.all_passed() ? kOk : kNotAlf;
    }
  } catch (const Error& e) {
    out << io::dump(io::error_report(e));
    err << "alf: " << e.kind() << (e.location().empty() ? "" : " at " + e.location()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "alf: internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

}  // namespace alf::cli
