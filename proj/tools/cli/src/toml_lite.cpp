#include "lopq_cli/toml_lite.hpp"

#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lopq::cli {

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t number) : s_(line), line_(number) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("line " + std::to_string(line_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool at_end_or_comment() {
    skip_ws();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string key() {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '"' || s_[pos_] == '\'')) return string_value();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a key");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::vector<std::string> dotted_key() {
    std::vector<std::string> parts{key()};
    while (consume('.')) parts.push_back(key());
    return parts;
  }

  std::string string_value() {
    const char quote = s_[pos_++];
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != quote) {
      char c = s_[pos_++];
      if (quote == '"' && c == '\\') {
        if (pos_ >= s_.size()) fail("dangling escape");
        const char esc = s_[pos_++];
        switch (esc) {
          case 'n': c = '\n'; break;
          case 't': c = '\t'; break;
          case '"': c = '"'; break;
          case '\\': c = '\\'; break;
          default: fail(std::string("unsupported escape \\") + esc);
        }
      }
      out.push_back(c);
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  Json value() {
    skip_ws();
    if (pos_ >= s_.size()) fail("missing value");
    const char c = s_[pos_];
    if (c == '"' || c == '\'') return string_value();
    if (c == '[') {
      ++pos_;
      Json arr = Json::array();
      if (consume(']')) return arr;
      do {
        arr.push_back(value());
      } while (consume(','));
      expect(']');
      return arr;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '#' &&
           s_[pos_] != ' ' && s_[pos_] != '\t') {
      ++pos_;
    }
    std::string word(s_.substr(start, pos_ - start));
    if (word == "true") return true;
    if (word == "false") return false;
    std::string digits;
    for (char ch : word) {
      if (ch != '_') digits.push_back(ch);
    }
    std::size_t i = (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) ? 1 : 0;
    if (i == digits.size()) fail("malformed value \"" + word + "\"");
    for (; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
        fail("unsupported value \"" + word + "\" (write rationals as quoted strings)");
      }
    }
    try {
      return std::stoll(digits);
    } catch (const std::out_of_range&) {
      fail("integer out of range; quote it as a string");
    }
  }

  void finish() {
    if (!at_end_or_comment()) fail("trailing characters");
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

Json& descend(Json& root, const std::vector<std::string>& path, LineParser& lp) {
  Json* node = &root;
  for (const std::string& part : path) {
    Json& next = (*node)[part];
    if (next.is_null()) next = Json::object();
    if (!next.is_object()) lp.fail("\"" + part + "\" is not a table");
    node = &next;
  }
  return *node;
}

}  // namespace

Json parse_toml(std::string_view text) {
  Json root = Json::object();
  Json* current = &root;
  std::set<std::vector<std::string>> headers;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    LineParser lp(line, number);
    if (!lp.at_end_or_comment()) {
      if (lp.consume('[')) {
        const auto path = lp.dotted_key();
        lp.expect(']');
        lp.finish();
        if (!headers.insert(path).second) lp.fail("table defined twice");
        current = &descend(root, path, lp);
      } else {
        auto path = lp.dotted_key();
        lp.expect('=');
        Json value = lp.value();
        lp.finish();
        const std::string leaf = path.back();
        path.pop_back();
        Json& table = descend(*current, path, lp);
        if (table.contains(leaf)) lp.fail("duplicate key \"" + leaf + "\"");
        table[leaf] = std::move(value);
      }
    }
    start = end + 1;
  }
  return root;
}

}  // namespace lopq::cli
