#include "cf/dsl.hpp"

#include "cf/error.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace cf {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string &path, const std::string &what) {
  throw Error(ErrorCode::SyntaxError, "at " + path + ": " + what);
}

const json &require_field(const json &doc, const char *field) {
  auto it = doc.find(field);
  if (it == doc.end())
    schema_error("/", std::string("missing field \"") + field + "\"");
  return *it;
}

std::string require_string(const json &value, const std::string &path) {
  if (!value.is_string())
    schema_error(path, "expected a string, found " + std::string(value.type_name()));
  return value.get<std::string>();
}

std::string line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

class FormulaScanner {
public:
  explicit FormulaScanner(std::string_view text) : text_(text) {}

  std::size_t position() {
    skip_space();
    return pos_;
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token)
      fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token)
      return false;
    pos_ += token.size();
    return true;
  }

  RoleTerm term() {
    skip_space();
    if (pos_ >= text_.size())
      fail("expected a role x, y, a or b");
    auto role = role_from_letter(text_[pos_]);
    if (!role)
      fail("expected a role x, y, a or b");
    ++pos_;
    return {*role, accept("^-1")};
  }

  /// `positions` receives the offsets of the function and argument terms.
  Application application(std::size_t *positions = nullptr) {
    expect("F_");
    if (positions)
      positions[0] = position();
    RoleTerm function = term();
    expect("(");
    if (positions)
      positions[1] = position();
    RoleTerm argument = term();
    expect(")");
    return {function, argument};
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string &what) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'"
                                            : "end of input";
    throw Error(ErrorCode::SyntaxError,
                "column " + std::to_string(pos_ + 1) + ": " + what + ", found " + found,
                {}, pos_);
  }

private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

FiniteGroup parse_group_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::SyntaxError,
                line_column(text, offset) + ": malformed JSON (" + e.what() + ")",
                {}, offset);
  }
  if (!doc.is_object())
    schema_error("/", "expected an object");

  const std::string name = require_string(require_field(doc, "name"), "/name");

  const json &elements = require_field(doc, "elements");
  if (!elements.is_array())
    schema_error("/elements", "expected an array");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i)
    labels.push_back(require_string(elements[i], "/elements/" + std::to_string(i)));

  // Maps the first occurrence of each label; duplicates are left for
  // build_group to report.
  auto lookup = [&](const std::string &label) -> std::optional<Element> {
    for (Element g = 0; g < labels.size(); ++g)
      if (labels[g] == label)
        return g;
    return std::nullopt;
  };

  const std::string identity_label =
      require_string(require_field(doc, "identity"), "/identity");
  auto identity = lookup(identity_label);
  if (!identity)
    throw Error(ErrorCode::NoIdentity,
                "at /identity: '" + identity_label + "' is not one of the elements");

  const json &rows = require_field(doc, "table");
  if (!rows.is_array())
    schema_error("/table", "expected an array of rows");
  std::vector<std::vector<Element>> table;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string row_path = "/table/" + std::to_string(r);
    if (!rows[r].is_array())
      schema_error(row_path, "expected an array");
    std::vector<Element> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::string path = row_path + "/" + std::to_string(c);
      const std::string label = require_string(rows[r][c], path);
      auto g = lookup(label);
      if (!g)
        throw Error(ErrorCode::ClosureViolation,
                    "at " + path + ": product '" + label + "' is not an element",
                    {r, c});
      row.push_back(*g);
    }
    table.push_back(std::move(row));
  }

  return build_group(name, std::move(labels), table, *identity);
}

FiniteGroup load_group_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::SyntaxError, "cannot open group file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_file(buffer.str());
}

std::string render_group_file(const FiniteGroup &group) {
  json table = json::array();
  for (Element r = 0; r < group.order(); ++r) {
    json row = json::array();
    for (Element c = 0; c < group.order(); ++c)
      row.push_back(group.label(group.mul(r, c)));
    table.push_back(std::move(row));
  }
  json doc = {{"name", group.name()},
              {"elements", group.labels()},
              {"identity", group.label(group.identity())},
              {"table", std::move(table)}};
  return doc.dump(2) + "\n";
}

CFVariant parse_formula(std::string_view text) {
  FormulaScanner scanner(text);
  FormulaSide lhs, rhs;
  lhs.first = scanner.application();
  scanner.expect(":");
  lhs.second = scanner.application();
  scanner.expect("=>");

  std::array<std::size_t, 4> rhs_positions{};
  rhs.first = scanner.application(&rhs_positions[0]);
  scanner.expect(":");
  rhs.second = scanner.application(&rhs_positions[2]);
  scanner.finish();

  RoleRule rule = identity_rule();
  std::array<bool, 4> bound{};
  const auto from = lhs.terms();
  const auto to = rhs.terms();
  for (std::size_t t = 0; t < 4; ++t) {
    const RoleTerm image = from[t].inverted ? to[t].inverse() : to[t];
    const std::size_t r = index(from[t].role);
    if (bound[r] && rule[r] != image)
      throw Error(ErrorCode::InconsistentRule,
                  std::string("role ") + role_letter(from[t].role) + " is sent to " +
                      to_string(rule[r]) + " and to " + to_string(image),
                  {}, rhs_positions[t]);
    rule[r] = image;
    bound[r] = true;
  }

  for (const auto &builtin : builtin_variants())
    if (builtin.lhs() == lhs && builtin.rhs() == rhs && builtin.rule() == rule)
      return builtin;
  return CFVariant::make("custom", lhs, rhs, rule);
}

std::string render_formula(const CFVariant &variant) {
  return to_string(variant.lhs()) + " => " + to_string(variant.rhs());
}

} // namespace cf
