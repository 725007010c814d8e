#pragma once

#include "hopf/hopfcore.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf {

/// Syntax or name error at a byte offset of the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

/// Names visible to an expression.
struct ParseContext {
  const Alphabet* alphabet = nullptr;
  FieldSpec field;
  const std::map<std::string, NcPoly>* aliases = nullptr;
  std::optional<FieldElement> p;
  std::optional<FieldElement> q;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*' | '/') factor | factor)*
///   factor := atom ('^' nat)?
///   atom   := ident | integer | '(' expr ')'
/// A letter run is first looked up as one identifier (generator, alias, r, p,
/// q); otherwise it is split into single-letter identifiers, so "axa^2" is
/// a*x*a^2. Division is by nonzero scalars only.
NcPoly parse_expression(std::string_view text, const ParseContext& context);
/// Parses over a presentation's generators, named elements and (p, q).
NcPoly parse_expression(std::string_view text, const HopfPresentation& presentation);

/// Error in a presentation file, with its source and line.
class PresentationError : public std::runtime_error {
 public:
  PresentationError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadOptions {
  /// Replaces the file's field.
  std::optional<FieldSpec> field;
  /// Replaces the file's (p, q).
  std::optional<std::pair<long, long>> pq;
};

/// Reads a .hpf presentation:
///
///   [header]      name = ..., field = Qr|Q|F7|F13, p = 0, q = 0, complete = N
///   [generators]  a : grouplike | F : skew(a, a^2) | s : skew(1, a, q, a)
///   [order]       weight = a:0 b:0 F:2 s:2 t:3   (one line per weight vector)
///   [aliases]     x = s - q*a
///   [aliases.root] E = xa - r*ax + ...   (read only if the field contains r)
///   [rules]       ba -> ab
///   [relations]   F^3 = 0
///   [antipode]    s = s*a^2
///
/// Rules are taken verbatim and must decrease in the order. Relations are
/// reduced, oriented and added, then the system is interreduced; with
/// `complete = N` a non-confluent result is completed up to degree N.
HopfPresentation load_presentation(const std::string& path, const LoadOptions& options = {});
HopfPresentation parse_presentation(std::string_view text, const LoadOptions& options = {},
                                    const std::string& source = "<text>");

/// Directory holding the shipped .hpf files.
std::string data_directory();

}  // namespace hopf
