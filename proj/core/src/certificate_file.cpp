#include "wzsum/certificate_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "wzsum/errors.hpp"
#include "wzsum/expr.hpp"

namespace wzsum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class TermScanner {
 public:
  explicit TermScanner(std::string_view text) : text_(text) {}

  HyperTerm parse() {
    expect_word("sign");
    expect('(');
    const AffineForm sign = affine_until(")");
    expect(')');
    expect('*');
    const Rational constant = rational();
    std::vector<BinomialFactor> factors;
    skip_space();
    if (!at_end()) {
      expect('*');
      expect_word("prod");
      for (;;) {
        skip_space();
        if (at_end()) break;
        if (peek() == '*') {
          ++pos_;
          continue;
        }
        factors.push_back(factor());
      }
    }
    try {
      return HyperTerm(constant, sign, std::move(factors));
    } catch (const NonHypergeometricError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message + " at offset " + std::to_string(at), at);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void expect_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'", pos_);
    pos_ += word.size();
  }

  // Text up to the first depth-0 character in `stops`, parsed as an affine form.
  AffineForm affine_until(std::string_view stops) {
    skip_space();
    const std::size_t start = pos_;
    int depth = 0;
    while (!at_end()) {
      const char c = peek();
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      ++pos_;
    }
    if (at_end()) fail("unterminated argument", start);
    const std::string_view body = text_.substr(start, pos_ - start);
    try {
      return AffineForm::parse(body);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.offset());
    } catch (const NonHypergeometricError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  Rational rational() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/' ||
                         ((peek() == '-' || peek() == '+') && pos_ == start)))
      ++pos_;
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail("expected rational constant", start);
    } catch (const ZeroDivisionError&) {
      fail("zero denominator in rational constant", start);
    }
  }

  BinomialFactor factor() {
    expect_word("binom");
    expect('(');
    BinomialFactor f;
    f.top = affine_until(",");
    expect(',');
    f.bottom = affine_until(")");
    expect(')');
    expect('^');
    skip_space();
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    if (at_end() || peek() != '1') fail("binomial exponent must be +1 or -1", start);
    ++pos_;
    f.exponent = text_[start] == '-' ? -1 : 1;
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Var> parse_var_list(std::string_view body, std::size_t line, std::size_t column) {
  std::vector<Var> vars;
  std::istringstream in{std::string(body)};
  std::string word;
  while (in >> word) {
    auto v = var_from_name(word);
    if (!v) throw ParseError("unknown variable '" + word + "'", 0, line, column);
    vars.push_back(*v);
  }
  return vars;
}

}  // namespace

HyperTerm parse_hyperterm(std::string_view text) { return TermScanner(text).parse(); }

WZPair parse_certificate(std::string_view text) {
  WZPair pair;
  bool have_term = false, have_cert = false, have_orientation = false;
  std::size_t line_no = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    ++line_no;
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t base = line_start;
    line_start = line_end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", base, line_no, 1);
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view raw_value = line.substr(colon + 1);
    std::size_t lead = raw_value.find_first_not_of(" \t");
    if (lead == std::string_view::npos) lead = 0;
    const std::string_view value = trim(raw_value);
    const std::size_t value_column = colon + 2 + lead;  // 1-based

    try {
      if (key == "name") {
        pair.name = std::string(value);
      } else if (key == "params") {
        pair.params = parse_var_list(value, line_no, value_column);
      } else if (key == "indices") {
        pair.indices = parse_var_list(value, line_no, value_column);
      } else if (key == "term") {
        pair.term = parse_hyperterm(value);
        have_term = true;
      } else if (key == "certificate") {
        pair.certificate = to_ratfunc(value);
        have_cert = true;
      } else if (key == "orientation") {
        if (value == "+1" || value == "1") {
          pair.orientation = 1;
        } else if (value == "-1") {
          pair.orientation = -1;
        } else {
          throw ParseError("orientation must be +1 or -1", 0);
        }
        have_orientation = true;
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'", 0);
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      const std::size_t column = value_column + e.offset();
      throw ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(column) + ": " +
                           e.what(),
                       base + column - 1, line_no, column);
    } catch (const ZeroDivisionError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), base, line_no, value_column);
    } catch (const NonHypergeometricError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), base, line_no, value_column);
    }
  }
  if (!have_term) throw ParseError("missing 'term:' line", text.size(), line_no, 1);
  if (!have_cert) throw ParseError("missing 'certificate:' line", text.size(), line_no, 1);
  if (!have_orientation) throw ParseError("missing 'orientation:' line", text.size(), line_no, 1);
  return pair;
}

WZPair load_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  WZPair pair = parse_certificate(buffer.str());
  if (pair.name.empty()) pair.name = path.stem().string();
  return pair;
}

std::string format_certificate(const WZPair& pair) {
  std::string out;
  if (!pair.name.empty()) out += "name: " + pair.name + "\n";
  auto vars = [](const std::vector<Var>& vs) {
    std::string s;
    for (Var v : vs) s += (s.empty() ? "" : " ") + std::string(var_name(v));
    return s;
  };
  if (!pair.params.empty()) out += "params: " + vars(pair.params) + "\n";
  if (!pair.indices.empty()) out += "indices: " + vars(pair.indices) + "\n";
  out += "term: " + pair.term.str() + "\n";
  out += "certificate: " + pair.certificate.str() + "\n";
  out += std::string("orientation: ") + (pair.orientation > 0 ? "+1" : "-1") + "\n";
  return out;
}

}  // namespace wzsum
