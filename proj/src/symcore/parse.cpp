#include "kstab/symcore/parse.hpp"

#include <algorithm>
#include <cctype>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly out(vars_.size());
    skip_ws();
    if (at_end()) return out;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      auto [m, c] = parse_term();
      out.add_term(m, negative ? -c : c);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Monomial, Rational> parse_term() {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coeff = 1;
    Monomial m(vars_.size());
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits(), 10);
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = Integer(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      skip_ws();
      if (at_end() || peek() != '*') return {m, coeff};
      ++pos_;
    }
    while (need_factor) {
      parse_factor(m);
      skip_ws();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return {m, coeff};
  }

  void parse_factor(Monomial& m) {
    skip_ws();
    if (at_end()) fail("expected a variable");
    const std::size_t start = pos_;
    const auto is_head = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    const auto is_tail = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (!is_head(peek())) fail("expected a variable");
    while (!at_end() && is_tail(peek())) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      throw ParseError("undeclared variable '" + std::string(name) + "'",
                       start);
    }
    unsigned long power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::size_t digits_at = pos_;
      const std::string d = digits();
      if (d.size() > 6) throw ParseError("exponent too large", digits_at);
      power = std::stoul(d);
    }
    m[static_cast<std::size_t>(it - vars_.begin())] +=
        static_cast<std::uint32_t>(power);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text,
                     const std::vector<std::string>& vars) {
  return PolyParser(text, vars).parse();
}

std::string to_string(const MultiPoly& f,
                      const std::vector<std::string>& vars) {
  if (vars.size() != f.nvars()) {
    throw PreconditionError("variable names do not match the ring");
  }
  if (f.is_zero()) return "0";
  std::vector<const MultiPoly::TermMap::value_type*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  const MonomialOrder order = MonomialOrder::grevlex();
  std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
    return order.less(b->first, a->first);
  });
  std::string out;
  bool first = true;
  for (const auto* term : terms) {
    const Monomial& m = term->first;
    const Rational& c = term->second;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    std::string factors;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += vars[i];
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += factors;
    } else {
      out += mag.str() + "*" + factors;
    }
  }
  return out;
}

std::vector<std::string> default_var_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) {
    names.push_back("x" + std::to_string(i));
  }
  return names;
}

}  // namespace kstab
