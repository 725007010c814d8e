#include "hopf/parser.hpp"

#include "hopf/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hopf {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset),
      message_(message) {}

PresentationError::PresentationError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ParseContext& ctx) : s_(text), ctx_(ctx) {}

  NcPoly parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
    NcPoly out = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  NcPoly expr() {
    NcPoly acc;
    bool first = true;
    for (;;) {
      char op = '+';
      const char c = peek();
      if (c == '+' || c == '-') {
        op = c;
        ++pos_;
      } else if (!first) {
        break;
      }
      const NcPoly t = term();
      acc = op == '-' ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  NcPoly term() {
    NcPoly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        const NcPoly d = factor();
        const auto scalar = d.as_scalar(ctx_.field);
        if (!scalar) throw ParseError(at, "division by a non-scalar");
        if (scalar->is_zero()) throw ParseError(at, "division by zero");
        acc = scalar->inverse() * acc;
      } else if (c == '(' || is_digit(c) || ident_start(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  NcPoly factor() {
    std::vector<NcPoly> pieces = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      unsigned long n = 0;
      if (pos_ == s_.size() || !is_digit(s_[pos_])) throw ParseError(at, "expected a natural exponent");
      while (pos_ < s_.size() && is_digit(s_[pos_])) {
        n = n * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
        if (n > 4096) throw ParseError(at, "exponent too large");
      }
      pieces.back() = pieces.back().pow(static_cast<unsigned>(n), ctx_.field);
    }
    NcPoly out = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) out = out * pieces[i];
    return out;
  }

  // Several pieces when a letter run is split into single-letter names; an
  // exponent then binds to the last one.
  std::vector<NcPoly> atom() {
    const char c = peek();
    if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of input");
    if (c == '(') {
      ++pos_;
      NcPoly inner = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return {inner};
    }
    if (is_digit(c)) {
      std::string digits;
      while (pos_ < s_.size() && is_digit(s_[pos_])) digits += s_[pos_++];
      return {NcPoly::constant(FieldElement(ctx_.field, mpq_class(digits)))};
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      const std::string run(s_.substr(start, pos_ - start));
      if (auto v = resolve(run, start)) return {*v};
      bool letters = true;
      for (char ch : run) letters = letters && std::isalpha(static_cast<unsigned char>(ch));
      if (!letters || run.size() == 1) throw ParseError(start, "unknown identifier '" + run + "'");
      std::vector<NcPoly> pieces;
      for (std::size_t i = 0; i < run.size(); ++i) {
        auto v = resolve(std::string(1, run[i]), start + i);
        if (!v) throw ParseError(start + i, "unknown identifier '" + std::string(1, run[i]) + "'");
        pieces.push_back(*v);
      }
      return pieces;
    }
    throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  std::optional<NcPoly> resolve(const std::string& name, std::size_t at) const {
    if (ctx_.alphabet)
      if (auto g = ctx_.alphabet->find(name)) return NcPoly::monomial(Word::letter(*g), FieldElement::one(ctx_.field));
    if (ctx_.aliases)
      if (auto it = ctx_.aliases->find(name); it != ctx_.aliases->end()) return it->second;
    if (name == "r") {
      if (!ctx_.field.has_root()) throw ParseError(at, "r needs a field with a primitive cube root of unity");
      return NcPoly::constant(FieldElement::root(ctx_.field));
    }
    if (name == "p" && ctx_.p) return NcPoly::constant(*ctx_.p);
    if (name == "q" && ctx_.q) return NcPoly::constant(*ctx_.q);
    return std::nullopt;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const ParseContext& ctx_;
};

// ---------------------------------------------------------------------------

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct Line {
  std::size_t number;
  std::string text;
};

struct Sections {
  std::map<std::string, std::vector<Line>> body;
};

const std::vector<std::string> kSections{"header", "generators", "order", "aliases", "aliases.root", "rules", "relations", "antipode"};

Sections split_sections(std::string_view text, const std::string& source) {
  Sections out;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw PresentationError(source, number, "malformed section header");
      current = trim(std::string_view(line).substr(1, line.size() - 2));
      if (std::find(kSections.begin(), kSections.end(), current) == kSections.end())
        throw PresentationError(source, number, "unknown section [" + current + "]");
      if (out.body.count(current)) throw PresentationError(source, number, "duplicate section [" + current + "]");
      out.body[current];
      continue;
    }
    if (current.empty()) throw PresentationError(source, number, "content before the first section");
    out.body[current].push_back({number, line});
  }
  return out;
}

std::pair<std::string, std::string> split_once(const Line& line, std::string_view sep, const std::string& source) {
  const auto at = line.text.find(sep);
  if (at == std::string::npos)
    throw PresentationError(source, line.number, "expected '" + std::string(sep) + "' in '" + line.text + "'");
  return {trim(std::string_view(line.text).substr(0, at)), trim(std::string_view(line.text).substr(at + sep.size()))};
}

long parse_long(const std::string& text, const Line& line, const std::string& source) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw PresentationError(source, line.number, "expected an integer, got '" + text + "'");
  }
}

}  // namespace

NcPoly parse_expression(std::string_view text, const ParseContext& context) {
  return ExpressionParser(text, context).parse();
}

NcPoly parse_expression(std::string_view text, const HopfPresentation& presentation) {
  ParseContext ctx{&presentation.alphabet(), presentation.field(), &presentation.named, std::nullopt, std::nullopt};
  if (presentation.params) {
    ctx.p = presentation.params->p;
    ctx.q = presentation.params->q;
  }
  return parse_expression(text, ctx);
}

HopfPresentation parse_presentation(std::string_view text, const LoadOptions& options, const std::string& source) {
  Sections sections = split_sections(text, source);
  auto section = [&](const std::string& name) -> const std::vector<Line>& { return sections.body[name]; };

  // Header.
  std::string name = "unnamed";
  std::optional<FieldSpec> field;
  std::optional<long> p_value, q_value;
  std::optional<int> complete_degree;
  for (const Line& line : section("header")) {
    const auto [key, value] = split_once(line, "=", source);
    if (key == "name") {
      name = value;
    } else if (key == "field") {
      try {
        field = FieldSpec::preset(value);
      } catch (const FieldError& e) {
        throw PresentationError(source, line.number, e.what());
      }
    } else if (key == "p") {
      p_value = parse_long(value, line, source);
    } else if (key == "q") {
      q_value = parse_long(value, line, source);
    } else if (key == "complete") {
      complete_degree = static_cast<int>(parse_long(value, line, source));
    } else {
      throw PresentationError(source, line.number, "unknown header key '" + key + "'");
    }
  }
  if (options.field) field = options.field;
  if (!field) throw PresentationError(source, 0, "header does not name a field");
  if (options.pq) {
    p_value = options.pq->first;
    q_value = options.pq->second;
  }
  std::optional<Parameters> checked;
  try {
    checked = Parameters::make(*field, p_value.value_or(0), q_value.value_or(0));
    checked->validate();
  } catch (const std::invalid_argument& e) {
    throw PresentationError(source, 0, e.what());
  }
  const Parameters params = *checked;

  ParseContext ctx{nullptr, *field, nullptr, params.p, params.q};
  auto parse_at = [&](const std::string& expr, const Line& line) {
    try {
      return parse_expression(expr, ctx);
    } catch (const ParseError& e) {
      throw PresentationError(source, line.number, "'" + expr + "': " + e.what());
    } catch (const FieldError& e) {
      throw PresentationError(source, line.number, "'" + expr + "': " + e.what());
    }
  };

  // Generators and their coalgebra tags.
  Alphabet alphabet;
  std::vector<std::pair<std::string, Line>> tag_specs;
  for (const Line& line : section("generators")) {
    const auto [gen, spec] = split_once(line, ":", source);
    if (gen.empty() || !ident_start(gen.front()) ||
        !std::all_of(gen.begin(), gen.end(), [](char c) { return ident_char(c); }))
      throw PresentationError(source, line.number, "bad generator name '" + gen + "'");
    if (gen == "r" || gen == "p" || gen == "q")
      throw PresentationError(source, line.number, "'" + gen + "' is reserved for a scalar");
    if (alphabet.find(gen)) throw PresentationError(source, line.number, "duplicate generator '" + gen + "'");
    alphabet.names.push_back(gen);
    tag_specs.emplace_back(spec, line);
  }
  if (alphabet.names.empty()) throw PresentationError(source, 0, "no generators declared");
  ctx.alphabet = &alphabet;

  auto word_of = [&](const std::string& expr, const Line& line) {
    const NcPoly f = parse_at(expr, line);
    if (f.size() != 1 || !f.terms().begin()->second.is_one())
      throw PresentationError(source, line.number, "'" + expr + "' is not a word");
    return f.terms().begin()->first;
  };

  std::vector<CoalgebraTag> tags;
  bool any_tag = false, all_tags = true;
  for (const auto& [spec, line] : tag_specs) {
    if (spec == "grouplike") {
      tags.push_back(CoalgebraTag::grouplike());
      any_tag = true;
      continue;
    }
    if (spec == "plain" || spec.empty()) {
      all_tags = false;
      continue;
    }
    if (spec.rfind("skew(", 0) != 0 || spec.back() != ')')
      throw PresentationError(source, line.number, "expected grouplike, plain or skew(L, R[, offset, shift])");
    std::vector<std::string> args;
    std::string cur;
    int depth = 0;
    for (char c : std::string_view(spec).substr(5, spec.size() - 6)) {
      if (c == ',' && depth == 0) {
        args.push_back(trim(cur));
        cur.clear();
        continue;
      }
      depth += c == '(' ? 1 : c == ')' ? -1 : 0;
      cur += c;
    }
    args.push_back(trim(cur));
    if (args.size() != 2 && args.size() != 4)
      throw PresentationError(source, line.number, "skew(...) takes 2 or 4 arguments");
    const Word left = word_of(args[0], line);
    const Word right = word_of(args[1], line);
    if (args.size() == 2) {
      tags.push_back(CoalgebraTag::skew(left, right));
    } else {
      const auto offset = parse_at(args[2], line).as_scalar(*field);
      if (!offset) throw PresentationError(source, line.number, "skew offset must be a scalar");
      tags.push_back(CoalgebraTag::skew(left, right, *offset, word_of(args[3], line)));
    }
    any_tag = true;
  }
  if (any_tag && !all_tags) throw PresentationError(source, 0, "either every generator or none carries a coalgebra tag");
  if (!any_tag) tags.clear();
  for (const auto& tag : tags) {
    for (const Word* w : {&tag.left, &tag.right, &tag.shift})
      for (std::size_t i = 0; i < w->size(); ++i)
        if (tags[(*w)[i]].kind != CoalgebraTag::Kind::grouplike)
          throw PresentationError(source, 0, "skew tag refers to the non-group-like generator " + alphabet.names[(*w)[i]]);
  }

  // Monomial order.
  std::vector<std::vector<int>> weights;
  for (const Line& line : section("order")) {
    const auto [key, value] = split_once(line, "=", source);
    if (key != "weight") throw PresentationError(source, line.number, "expected 'weight = g:n ...'");
    std::vector<int> vec(alphabet.size(), 0);
    std::istringstream items(value);
    std::string item;
    while (items >> item) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw PresentationError(source, line.number, "expected g:n, got '" + item + "'");
      const auto g = alphabet.find(item.substr(0, colon));
      if (!g) throw PresentationError(source, line.number, "unknown generator in '" + item + "'");
      vec[*g] = static_cast<int>(parse_long(item.substr(colon + 1), line, source));
    }
    weights.push_back(std::move(vec));
  }
  std::optional<MonomialOrder> order;
  try {
    order = weights.empty() ? MonomialOrder::deglex(alphabet.size()) : MonomialOrder(weights);
  } catch (const std::invalid_argument& e) {
    throw PresentationError(source, 0, e.what());
  }

  // Aliases, each visible to the later ones.
  std::map<std::string, NcPoly> named;
  ctx.aliases = &named;
  for (const Line& line : section("aliases")) {
    const auto [key, value] = split_once(line, "=", source);
    if (alphabet.find(key) || key == "r" || key == "p" || key == "q")
      throw PresentationError(source, line.number, "alias '" + key + "' shadows a generator or scalar");
    if (named.count(key)) throw PresentationError(source, line.number, "duplicate alias '" + key + "'");
    named.emplace(key, parse_at(value, line));
  }
  if (field->has_root()) {
    for (const Line& line : section("aliases.root")) {
      const auto [key, value] = split_once(line, "=", source);
      if (alphabet.find(key) || named.count(key))
        throw PresentationError(source, line.number, "alias '" + key + "' is already defined");
      named.emplace(key, parse_at(value, line));
    }
  }

  // Rules verbatim, then relations.
  RewriteSystem sys(alphabet, *order, *field);
  for (const Line& line : section("rules")) {
    const auto [lhs, rhs] = split_once(line, "->", source);
    try {
      sys.add_rule({word_of(lhs, line), parse_at(rhs, line)});
    } catch (const std::invalid_argument& e) {
      throw PresentationError(source, line.number, std::string("rule is not decreasing: ") + e.what());
    }
  }
  const auto& relations = section("relations");
  for (const Line& line : relations) {
    const auto [lhs, rhs] = split_once(line, "=", source);
    const NcPoly rel = parse_at(lhs, line) - parse_at(rhs, line);
    try {
      sys.add_relation(normal_form(sys, rel));
    } catch (const std::exception& e) {
      throw PresentationError(source, line.number, std::string("cannot orient relation: ") + e.what());
    }
  }
  if (!relations.empty()) {
    sys.interreduce();
    if (complete_degree && !check_confluence(sys).confluent()) sys = complete_system(sys, *complete_degree).system;
  }

  HopfPresentation out{name, std::move(sys), std::move(tags), std::move(named), params, {}};
  ParseContext final_ctx{&out.alphabet(), *field, &out.named, params.p, params.q};
  for (const Line& line : section("antipode")) {
    const auto [gen, value] = split_once(line, "=", source);
    const auto g = out.alphabet().find(gen);
    if (!g) throw PresentationError(source, line.number, "unknown generator '" + gen + "'");
    try {
      out.antipode_override[*g] = parse_expression(value, final_ctx);
    } catch (const ParseError& e) {
      throw PresentationError(source, line.number, e.what());
    }
  }
  return out;
}

HopfPresentation load_presentation(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw PresentationError(path, 0, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str(), options, path);
}

std::string data_directory() {
#ifdef HOPF_DATA_DIR
  return HOPF_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace hopf
