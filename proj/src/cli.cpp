#include "pqk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "pqk/error.hpp"
#include "pqk/formats.hpp"
#include "pqk/text.hpp"

namespace pqk::cli {
namespace {

constexpr const char* kDefaultBox = "2:3,0:1/10,0:1/10,0:1/10";

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw ParseError("side must be \"left\" or \"right\", got \"" + s + "\"");
}

Chirality parse_chirality(const std::string& s) { return parse_side(s) == Side::Left ? Chirality::LeftJ : Chirality::RightJ; }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    formats::write_file(out_path, text);
  }
}

PQPolyMap load_pqmap(const std::string& path) {
  return formats::pqmap_from_json(formats::parse_json(formats::read_file(path)));
}

std::string equation_names(const RegularityVerdict& v) {
  static constexpr const char* kNames[] = {"real", "i1", "i2", "i3"};
  std::string names;
  for (int k : v.failing_equations()) {
    if (!names.empty()) names += ", ";
    names += kNames[k];
  }
  return names;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

ExitStatus run_mul(const MulCommand& c, std::ostream& out) {
  out << format(mul(c.lhs, c.rhs)) << "\n";
  return ExitStatus::Pass;
}

ExitStatus run_classify(const ClassifyCommand& c, std::ostream& out) {
  const Paraquaternion& x = c.value;
  const NormValue n = norm(x);
  const ElementClass cls = classify(x);
  out << "value: " << format(x) << "\n";
  out << "normsq: " << to_string(normsq(x)) << "\n";
  out << "norm: ";
  switch (n.kind) {
    case NormKind::Zero: out << "0 (zero)"; break;
    case NormKind::Real: out << formats::decimal_string(n.magnitude) << " (real)"; break;
    case NormKind::Imaginary: out << formats::decimal_string(n.magnitude) << "*i (imaginary)"; break;
  }
  out << "\n";
  out << "invertible: " << yes_no(cls.invertible) << "\n";
  out << "zero_divisor: " << yes_no(cls.zero_divisor) << "\n";
  out << "nilpotent: " << yes_no(cls.nilpotent) << "\n";
  out << "idempotent: " << yes_no(cls.idempotent) << "\n";
  if (cls.invertible) out << "inverse: " << format(inverse(x)) << "\n";
  return ExitStatus::Pass;
}

ExitStatus run_check(const CheckCommand& c, std::ostream& out) {
  const RegularityVerdict v = check_regularity(load_pqmap(c.file), c.side);
  if (v.is_regular()) {
    out << "Regular\n";
    return ExitStatus::Pass;
  }
  out << "Not " << to_string(c.side) << "-regular; failing equation(s): " << equation_names(v) << "\n";
  out << formats::serialize(formats::to_json(v.residual));
  return ExitStatus::Fail;
}

ExitStatus run_fueter(const FueterCommand& c, std::ostream& out) {
  emit(formats::serialize(formats::to_json(fueter_sum(c.terms))), c.out, out);
  return ExitStatus::Pass;
}

ExitStatus run_build(const BuildCommand& c, std::ostream& out) {
  const PQPolyMap f = std::holds_alternative<BuiltinExample>(c.source)
                          ? builtin_example(std::get<BuiltinExample>(c.source))
                          : load_pqmap(std::get<std::string>(c.source));
  const EpsilonStructure s = build_structure(f, c.chirality, c.box);
  emit(formats::serialize(formats::to_json(s)), c.out, out);
  return ExitStatus::Pass;
}

ExitStatus run_verify(const VerifyCommand& c, std::ostream& out) {
  const EpsilonStructure s = formats::structure_from_json(formats::parse_json(formats::read_file(c.file)));
  const StructureReport report = verify_structure(s, c.options);
  emit(formats::serialize(formats::to_json(report)), c.out, out);
  return report.passed() ? ExitStatus::Pass : ExitStatus::Fail;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

FueterTerm parse_fueter_term(const std::string& text, Side side) {
  FueterTerm term;
  term.side = side;
  const auto colon = text.find(':');
  const std::string indices = trim(text.substr(0, colon));
  if (indices.empty()) throw ParseError("Fueter term \"" + text + "\" has no indices");
  for (char ch : indices) {
    if (ch < '1' || ch > '3') throw ParseError("Fueter index must be 1, 2 or 3 in \"" + text + "\"");
    term.indices.push_back(ch - '0');
  }
  term.coefficient = colon == std::string::npos ? Paraquaternion::one() : parse_paraquaternion(text.substr(colon + 1));
  return term;
}

Box parse_box(const std::string& text) {
  Box box;
  std::size_t axis = 0;
  std::size_t begin = 0;
  while (true) {
    const auto comma = text.find(',', begin);
    const std::string range = text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    if (axis >= 4) throw ParseError("box needs exactly 4 ranges");
    const auto colon = range.find(':');
    if (colon == std::string::npos) throw ParseError("box range \"" + range + "\" must be lo:hi");
    box.lower[axis] = parse_rational(trim(range.substr(0, colon)));
    box.upper[axis] = parse_rational(trim(range.substr(colon + 1)));
    ++axis;
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (axis != 4) throw ParseError("box needs exactly 4 ranges");
  try {
    box.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return box;
}

ParsedArgs parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Paraquaternionic calculus and conformally flat almost epsilon-Kaehler structures", "pqk"};
  app.require_subcommand(1);

  std::string mul_lhs;
  std::string mul_rhs;
  auto* mul_cmd = app.add_subcommand("mul", "Multiply two paraquaternions");
  mul_cmd->add_option("lhs", mul_lhs, "Left factor, e.g. 1+2*i1-3/2*i3")->required();
  mul_cmd->add_option("rhs", mul_rhs, "Right factor")->required();

  std::string classify_value;
  auto* classify_cmd = app.add_subcommand("classify", "Norm, inverse and element class of a paraquaternion");
  classify_cmd->add_option("value", classify_value)->required();

  std::string check_side;
  std::string check_file;
  auto* check_cmd = app.add_subcommand("check", "Check left or right regularity of a polynomial map file");
  check_cmd->add_option("--side", check_side, "left or right")->required();
  check_cmd->add_option("file", check_file, "Polynomial map file")->required();

  std::string fueter_side;
  std::vector<std::string> fueter_terms;
  std::string fueter_out;
  auto* fueter_cmd = app.add_subcommand("fueter", "Write a truncated Fueter series as a polynomial map");
  fueter_cmd->add_option("--side", fueter_side, "left or right")->required();
  fueter_cmd->add_option("--term", fueter_terms, "<indices>[:<coefficient>], repeatable")->required();
  fueter_cmd->add_option("--out", fueter_out, "Output file (default: standard output)");

  std::string build_example;
  std::string build_input;
  std::string build_chirality;
  std::string build_box = kDefaultBox;
  std::string build_out;
  auto* build_cmd = app.add_subcommand("build", "Build an almost epsilon-Kaehler structure");
  auto* example_opt = build_cmd->add_option("--example", build_example, "Built-in example: a or b");
  auto* input_opt = build_cmd->add_option("--input", build_input, "Polynomial map file");
  example_opt->excludes(input_opt);
  build_cmd->add_option("--chirality", build_chirality, "left or right (default: a -> left, b -> right)");
  build_cmd->add_option("--box", build_box, "Domain lo:hi,lo:hi,lo:hi,lo:hi")->capture_default_str();
  build_cmd->add_option("--out", build_out, "Output file (default: standard output)");

  std::string verify_file;
  std::string verify_out;
  VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a structure file and write a report");
  verify_cmd->add_option("file", verify_file, "Structure file")->required();
  verify_cmd->add_option("--samples", verify_options.samples, "Sample points")->capture_default_str();
  verify_cmd->add_option("--tol", verify_options.tol, "Tolerance for pointwise identities")->capture_default_str();
  verify_cmd->add_option("--weyl-step", verify_options.weyl_step, "Finite-difference step")->capture_default_str();
  verify_cmd->add_option("--weyl-tol", verify_options.weyl_tol, "Tolerance for max |Weyl|")->capture_default_str();
  verify_cmd->add_option("--weyl-points", verify_options.weyl_points, "Interior points for the Weyl check")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_options.seed, "Sampler offset")->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "Output file (default: standard output)");

  ParsedArgs parsed;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    parsed.help_text = subs.empty() ? app.help() : subs.front()->help();
    return parsed;
  } catch (const CLI::CallForAllHelp&) {
    parsed.help_text = app.help("", CLI::AppFormatMode::All);
    return parsed;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  if (*mul_cmd) {
    parsed.command = MulCommand{parse_paraquaternion(mul_lhs), parse_paraquaternion(mul_rhs)};
  } else if (*classify_cmd) {
    parsed.command = ClassifyCommand{parse_paraquaternion(classify_value)};
  } else if (*check_cmd) {
    if (check_file.empty()) throw ParseError("check: empty file path");
    parsed.command = CheckCommand{parse_side(check_side), check_file};
  } else if (*fueter_cmd) {
    FueterCommand c;
    c.side = parse_side(fueter_side);
    for (const auto& t : fueter_terms) c.terms.push_back(parse_fueter_term(t, c.side));
    c.out = fueter_out;
    parsed.command = std::move(c);
  } else if (*build_cmd) {
    BuildCommand c;
    if (*example_opt) {
      if (build_example == "a") {
        c.source = BuiltinExample::A;
      } else if (build_example == "b") {
        c.source = BuiltinExample::B;
      } else {
        throw ParseError("build: --example must be a or b");
      }
    } else if (*input_opt) {
      if (build_input.empty()) throw ParseError("build: empty --input path");
      c.source = build_input;
    } else {
      throw ParseError("build: one of --example or --input is required");
    }
    if (!build_chirality.empty()) {
      c.chirality = parse_chirality(build_chirality);
    } else if (std::holds_alternative<BuiltinExample>(c.source)) {
      c.chirality = std::get<BuiltinExample>(c.source) == BuiltinExample::A ? Chirality::LeftJ : Chirality::RightJ;
    } else {
      throw ParseError("build: --chirality is required with --input");
    }
    c.box = parse_box(build_box);
    c.out = build_out;
    parsed.command = std::move(c);
  } else if (*verify_cmd) {
    if (verify_file.empty()) throw ParseError("verify: empty file path");
    if (!(verify_options.tol > 0) || !(verify_options.weyl_tol > 0) || !(verify_options.weyl_step > 0))
      throw ParseError("verify: tolerances and step must be positive");
    parsed.command = VerifyCommand{verify_file, verify_options, verify_out};
  }
  return parsed;
}

ExitStatus run(const Command& command, std::ostream& out, std::ostream& err) {
  (void)err;
  return std::visit(
      [&out](const auto& c) -> ExitStatus {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, MulCommand>) return run_mul(c, out);
        if constexpr (std::is_same_v<T, ClassifyCommand>) return run_classify(c, out);
        if constexpr (std::is_same_v<T, CheckCommand>) return run_check(c, out);
        if constexpr (std::is_same_v<T, FueterCommand>) return run_fueter(c, out);
        if constexpr (std::is_same_v<T, BuildCommand>) return run_build(c, out);
        if constexpr (std::is_same_v<T, VerifyCommand>) return run_verify(c, out);
      },
      command);
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExitStatus status = ExitStatus::UsageError;
  try {
    const ParsedArgs parsed = parse_command(args);
    if (!parsed.help_text.empty()) {
      out << parsed.help_text;
      return 0;
    }
    status = run(std::get<Command>(parsed.command), out, err);
  } catch (const NotRegular& e) {
    err << "pqk: " << e.what() << "\n";
    status = ExitStatus::DomainError;
  } catch (const SignChange& e) {
    err << "pqk: " << e.what() << "\n";
    status = ExitStatus::DomainError;
  } catch (const DegeneratePoint& e) {
    err << "pqk: " << e.what() << "\n";
    status = ExitStatus::DomainError;
  } catch (const NonzeroRealPart& e) {
    err << "pqk: " << e.what() << "\n";
    status = ExitStatus::DomainError;
  } catch (const SingularMetric& e) {
    err << "pqk: " << e.what() << "\n";
    status = ExitStatus::DomainError;
  } catch (const std::exception& e) {
    // ParseError, MixedSides, out-of-range indices and the like.
    err << "pqk: " << e.what() << "\n";
    status = ExitStatus::UsageError;
  }
  return static_cast<int>(status);
}

}  // namespace pqk::cli
