#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "leakaudit/error.hpp"
#include "leakaudit/util/fs.hpp"

namespace leakaudit::toml_lite {

// Subset: [section] and [a.b] headers, key = value, '#' comments, basic
// strings, integers, floats, booleans and (possibly multi-line) arrays.
// Parses into a JSON object tree.

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  nlohmann::json value() {
    skip_ws();
    if (eof()) fail("missing value");
    const char c = s_[pos_];
    if (c == '"') return string();
    if (c == '[') return array();
    if (s_.substr(pos_, 4) == "true") return pos_ += 4, nlohmann::json(true);
    if (s_.substr(pos_, 5) == "false") return pos_ += 5, nlohmann::json(false);
    return number();
  }

  void finish() {
    skip_ws();
    if (!eof()) fail("unexpected trailing text");
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse, with_line("config: " + what, line_));
  }

  void skip_ws() {
    while (!eof()) {
      const char c = s_[pos_];
      if (c == '#') {
        while (!eof() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  nlohmann::json string() {
    ++pos_;
    std::string out;
    while (!eof() && s_[pos_] != '"') {
      char c = s_[pos_++];
      if (c == '\n') fail("unterminated string");
      if (c == '\\') {
        if (eof()) fail("dangling escape");
        const char e = s_[pos_++];
        switch (e) {
          case 'n': c = '\n'; break;
          case 't': c = '\t'; break;
          case '"': c = '"'; break;
          case '\\': c = '\\'; break;
          default: fail(std::string("unsupported escape \\") + e);
        }
      }
      out += c;
    }
    if (eof()) fail("unterminated string");
    ++pos_;
    return out;
  }

  nlohmann::json array() {
    ++pos_;
    auto out = nlohmann::json::array();
    for (;;) {
      skip_ws();
      if (eof()) fail("unterminated array");
      if (s_[pos_] == ']') {
        ++pos_;
        return out;
      }
      out.push_back(value());
      skip_ws();
      if (!eof() && s_[pos_] == ',') ++pos_;
      else if (eof() || s_[pos_] != ']') fail("expected ',' or ']' in array");
    }
  }

  nlohmann::json number() {
    const auto start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                      s_[pos_] == '-' || s_[pos_] == '+' || s_[pos_] == '_')) {
      ++pos_;
    }
    std::string tok;
    for (char c : s_.substr(start, pos_ - start)) if (c != '_') tok += c;
    if (tok.empty()) fail("unrecognised value");
    try {
      std::size_t used = 0;
      if (tok.find_first_of(".eE") == std::string::npos || tok.rfind("0x", 0) == 0) {
        const long long v = std::stoll(tok, &used, 0);
        if (used == tok.size()) return v;
      } else {
        const double v = std::stod(tok, &used);
        if (used == tok.size()) return v;
      }
    } catch (const std::exception&) {
    }
    fail("unrecognised value '" + tok + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

inline bool valid_key(std::string_view k) {
  if (k.empty()) return false;
  for (char c : k) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

inline int bracket_depth(std::string_view s) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (c == '[') {
      ++depth;
    } else if (c == ']') {
      --depth;
    }
  }
  return depth;
}

}  // namespace detail

inline nlohmann::json parse(std::string_view text) {
  nlohmann::json root = nlohmann::json::object();
  nlohmann::json* table = &root;
  const auto lines = util::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    auto line = util::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      const auto close = line.find(']');
      if (close == std::string_view::npos) throw Error(ErrorKind::parse, with_line("config: bad section header", line_no));
      auto name = std::string(util::trim(line.substr(1, close - 1)));
      table = &root;
      std::size_t start = 0;
      for (;;) {
        const auto dot = name.find('.', start);
        const auto part = name.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (!detail::valid_key(part)) throw Error(ErrorKind::parse, with_line("config: bad section name", line_no));
        auto& next = (*table)[part];
        if (next.is_null()) next = nlohmann::json::object();
        if (!next.is_object()) throw Error(ErrorKind::parse, with_line("config: section clashes with key", line_no));
        table = &next;
        if (dot == std::string::npos) break;
        start = dot + 1;
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::parse, with_line("config: expected key = value", line_no));
    const auto key = std::string(util::trim(line.substr(0, eq)));
    if (!detail::valid_key(key)) throw Error(ErrorKind::parse, with_line("config: bad key '" + key + "'", line_no));
    if (table->contains(key)) throw Error(ErrorKind::parse, with_line("config: duplicate key '" + key + "'", line_no));
    std::string value(line.substr(eq + 1));
    while (detail::bracket_depth(value) > 0 && i + 1 < lines.size()) value += "\n" + std::string(lines[++i]);
    detail::Parser p(value, line_no);
    (*table)[key] = p.value();
    p.finish();
  }
  return root;
}

inline nlohmann::json parse_file(const std::filesystem::path& path) { return parse(util::read_file(path)); }

}  // namespace leakaudit::toml_lite
