#include <cctype>
#include <map>
#include <vector>

#include "valtree/error.hpp"
#include "valtree/field_elem.hpp"

namespace valtree {

namespace {

using TermMap = std::map<std::vector<long>, Rational>;

class LiteralParser {
 public:
  LiteralParser(std::string text, const Field& field) : s_(std::move(text)), field_(field) {}

  FieldElem parse() {
    if (s_.empty()) fail("empty literal");
    if (s_[0] == '(') {
      const std::size_t close = matching_paren(0);
      if (close + 2 < s_.size() && s_[close + 1] == '/' && s_[close + 2] == '(' &&
          matching_paren(close + 2) == s_.size() - 1) {
        const FieldElem num = sub(1, close);
        const FieldElem den = sub(close + 3, s_.size() - 1);
        if (den.is_zero()) raise(Errc::division_by_zero, "literal '" + s_ + "' has zero denominator");
        return num / den;
      }
    }
    return convert(polynomial(0, s_.size()));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    raise(Errc::parse_error, why + " in literal '" + s_ + "'");
  }

  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < s_.size(); ++i) {
      if (s_[i] == '(') ++depth;
      if (s_[i] == ')' && --depth == 0) return i;
    }
    fail("unbalanced parentheses");
  }

  FieldElem sub(std::size_t begin, std::size_t end) const {
    return convert(polynomial(begin, end));
  }

  TermMap polynomial(std::size_t begin, std::size_t end) const {
    if (begin >= end) fail("empty polynomial");
    TermMap terms;
    std::size_t i = begin;
    bool first = true;
    while (i < end) {
      int sign = 1;
      if (s_[i] == '+' || s_[i] == '-') {
        sign = s_[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, exps] = term(i, end);
      auto& slot = terms[exps];
      slot += sign > 0 ? coeff : -coeff;
      if (slot.is_zero()) terms.erase(exps);
    }
    return terms;
  }

  std::string digits(std::size_t& i, std::size_t end) const {
    std::string out;
    while (i < end && std::isdigit(static_cast<unsigned char>(s_[i]))) out += s_[i++];
    return out;
  }

  std::pair<Rational, std::vector<long>> term(std::size_t& i, std::size_t end) const {
    Rational coeff(1);
    std::vector<long> exps;
    bool have_coeff = false;
    if (i < end && std::isdigit(static_cast<unsigned char>(s_[i]))) {
      std::string num = digits(i, end), den = "1";
      if (i < end && s_[i] == '/') {
        ++i;
        den = digits(i, end);
        if (den.empty()) fail("missing denominator");
      }
      coeff = Rational(Integer(num), Integer(den));
      have_coeff = true;
    }
    bool need_factor = false;
    if (have_coeff) {
      if (i < end && s_[i] == '*') {
        ++i;
        need_factor = true;
      }
    } else {
      need_factor = true;
    }
    while (need_factor) {
      const long var = variable(i, end);
      long e = 1;
      if (i < end && s_[i] == '^') {
        ++i;
        bool neg = false;
        if (i < end && s_[i] == '-') {
          neg = true;
          ++i;
        }
        const std::string d = digits(i, end);
        if (d.empty()) fail("missing exponent");
        e = std::stol(d) * (neg ? -1 : 1);
        if (neg && field_.kind() != FieldKind::ratfunc) fail("negative exponent outside Q(t)");
      }
      if (exps.size() <= static_cast<std::size_t>(var)) exps.resize(static_cast<std::size_t>(var) + 1, 0);
      exps[static_cast<std::size_t>(var)] += e;
      need_factor = i < end && s_[i] == '*';
      if (need_factor) ++i;
    }
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    return {coeff, exps};
  }

  long variable(std::size_t& i, std::size_t end) const {
    switch (field_.kind()) {
      case FieldKind::rational: fail("unexpected indeterminate over Q");
      case FieldKind::ratfunc:
        if (i < end && s_[i] == 't' && (i + 1 == end || !std::isalnum(static_cast<unsigned char>(s_[i + 1])))) {
          ++i;
          return 0;
        }
        fail("expected indeterminate 't'");
      case FieldKind::algebraic: {
        const std::string& sym = field_.number_field()->symbol();
        if (s_.compare(i, sym.size(), sym) == 0) {
          i += sym.size();
          return 0;
        }
        fail("expected indeterminate '" + sym + "'");
      }
      case FieldKind::multipoly: {
        if (i >= end || s_[i] != 't') fail("expected indeterminate 't<k>'");
        ++i;
        const std::string d = digits(i, end);
        if (d.empty() || std::stol(d) < 1) fail("variable index must be at least 1");
        return std::stol(d) - 1;
      }
    }
    fail("unsupported field");
  }

  FieldElem convert(const TermMap& terms) const {
    switch (field_.kind()) {
      case FieldKind::rational: {
        Rational acc;
        for (const auto& [e, c] : terms) acc += c;
        return acc;
      }
      case FieldKind::ratfunc: {
        long lowest = 0;
        for (const auto& [e, c] : terms) lowest = std::min(lowest, e.empty() ? 0L : e[0]);
        UniPoly num;
        for (const auto& [e, c] : terms)
          num += UniPoly::monomial(c, static_cast<std::size_t>((e.empty() ? 0L : e[0]) - lowest));
        return RatFunc(num, UniPoly::monomial(Rational(1), static_cast<std::size_t>(-lowest)));
      }
      case FieldKind::algebraic: {
        UniPoly p;
        for (const auto& [e, c] : terms) p += UniPoly::monomial(c, static_cast<std::size_t>(e.empty() ? 0L : e[0]));
        return AlgElem(field_.number_field(), p);
      }
      case FieldKind::multipoly: {
        MultiPoly p;
        for (const auto& [e, c] : terms) p += MultiPoly::term(c, Monomial(e.begin(), e.end()));
        return p;
      }
    }
    fail("unsupported field");
  }

  std::string s_;
  const Field& field_;
};

}  // namespace

FieldElem parse_literal(std::string_view text, const Field& field) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  return LiteralParser(std::move(compact), field).parse();
}

}  // namespace valtree
