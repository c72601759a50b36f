#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "pqk/geometry.hpp"
#include "pqk/pqmap.hpp"

namespace pqk::cli {

enum class ExitStatus : int {
  Pass = 0,         // product printed, function regular, structure verified
  Fail = 1,         // not regular, verification residual over tolerance
  UsageError = 2,   // bad flags, malformed input or files
  DomainError = 3,  // sign change, degenerate point, wrong-side regularity in build
};

struct MulCommand {
  Paraquaternion lhs;
  Paraquaternion rhs;
};

struct ClassifyCommand {
  Paraquaternion value;
};

struct CheckCommand {
  Side side = Side::Left;
  std::string file;
};

struct FueterCommand {
  Side side = Side::Left;
  std::vector<FueterTerm> terms;
  std::string out;  // empty: standard output
};

struct BuildCommand {
  std::variant<BuiltinExample, std::string> source;  // built-in example or polynomial-map file
  Chirality chirality = Chirality::LeftJ;
  Box box;
  std::string out;
};

struct VerifyCommand {
  std::string file;
  VerifyOptions options;
  std::string out;
};

using Command = std::variant<MulCommand, ClassifyCommand, CheckCommand, FueterCommand, BuildCommand, VerifyCommand>;

/// `<indices>[:<paraquaternion>]`, e.g. `12:-i2+i3`; the coefficient
/// defaults to 1.
FueterTerm parse_fueter_term(const std::string& text, Side side);

/// `lo:hi,lo:hi,lo:hi,lo:hi` with rational or decimal bounds.
Box parse_box(const std::string& text);

/// Arguments exclude the program name. Throws ParseError on bad usage;
/// `--help` leaves the command empty and fills help_text.
struct ParsedArgs {
  std::variant<std::monostate, Command> command;
  std::string help_text;
};
ParsedArgs parse_command(const std::vector<std::string>& args);

ExitStatus run(const Command& command, std::ostream& out, std::ostream& err);

/// parse_command + run with every error mapped onto an exit status and a
/// one-line diagnostic on `err`.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqk::cli
