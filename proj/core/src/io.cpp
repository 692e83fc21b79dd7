#include "shilov/io.hpp"

#include "shilov/errors.hpp"

#include <cctype>

namespace shilov {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError(what + " at position " + std::to_string(pos));
  }

  // numeric literal: digits with optional '.', 'e' exponent or '/' fraction
  Rat number() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    bool any = false;
    auto digits = [&]() {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        any = true;
      }
    };
    digits();
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      digits();
    }
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      ++pos;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
      digits();
    }
    if (any && pos < text.size() && text[pos] == '/') {
      ++pos;
      digits();
    }
    if (!any) fail("expected a number");
    auto r = rat_parse(text.substr(start, pos - start));
    if (!r) fail("bad numeric literal");
    return *r;
  }

  // exponent after '^': either a bare number or a parenthesized one
  Rat exponent() {
    if (eat('(')) {
      Rat e = number();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    return number();
  }
};

struct HahnTermOrTail {
  bool is_tail = false;
  Rat coeff;
  Rat exponent;
  Rat tail_prec;
};

// one additive piece: "3", "t", "2*t^(1/2)", "t^2", "O(t^(5))"
HahnTermOrTail hahn_piece(Cursor& cur, bool negate) {
  HahnTermOrTail out;
  char c = cur.peek();
  if (c == 'O') {
    ++cur.pos;
    if (!cur.eat('(')) cur.fail("expected '(' after O");
    if (cur.peek() != 't') cur.fail("expected t in tail marker");
    ++cur.pos;
    if (cur.eat('^'))
      out.tail_prec = cur.exponent();
    else
      out.tail_prec = 1;
    if (!cur.eat(')')) cur.fail("expected ')'");
    out.is_tail = true;
    return out;
  }
  if (c == 't') {
    ++cur.pos;
    out.coeff = negate ? -1 : 1;
    out.exponent = cur.eat('^') ? cur.exponent() : Rat(1);
    return out;
  }
  out.coeff = cur.number();
  if (negate) out.coeff = -out.coeff;
  out.exponent = 0;
  std::size_t save = cur.pos;
  if (cur.eat('*')) {
    if (cur.peek() == 't') {
      ++cur.pos;
      out.exponent = cur.eat('^') ? cur.exponent() : Rat(1);
    } else {
      cur.pos = save;  // the '*' belongs to an enclosing polynomial term
    }
  } else if (cur.peek() == 't') {
    ++cur.pos;
    out.exponent = cur.eat('^') ? cur.exponent() : Rat(1);
  }
  return out;
}

HahnSeries hahn_expr(Cursor& cur) {
  std::vector<HahnSeries::Term> terms;
  LogVal prec = LogVal::infinity();
  bool negate = cur.eat('-');
  while (true) {
    HahnTermOrTail piece = hahn_piece(cur, negate);
    if (piece.is_tail)
      prec = min(prec, LogVal(piece.tail_prec));
    else
      terms.push_back({piece.exponent, piece.coeff});
    if (cur.eat('+'))
      negate = false;
    else if (cur.eat('-'))
      negate = true;
    else
      break;
  }
  return HahnSeries::from_terms(std::move(terms), prec);
}

}  // namespace

HahnSeries hahn_parse(const std::string& text) {
  Cursor cur{text};
  if (cur.eof()) throw ValidationError("hahn_parse: empty input");
  if (cur.peek() == '0') {
    std::size_t save = cur.pos;
    ++cur.pos;
    if (cur.eof()) return HahnSeries::zero();
    cur.pos = save;
  }
  HahnSeries out = hahn_expr(cur);
  if (!cur.eof()) cur.fail("trailing input");
  return out;
}

namespace {

// monomial: sequence of x<k>[^e] factors, '*' or whitespace separated
bool parse_monomial_factors(Cursor& cur, int d, ExpVec& alpha) {
  bool any = false;
  while (true) {
    cur.skip_ws();
    std::size_t save = cur.pos;
    if (cur.peek() == '*' && any) {
      ++cur.pos;
      if (cur.peek() != 'x') {
        cur.pos = save;
        break;
      }
    }
    if (cur.peek() != 'x') break;
    ++cur.pos;
    std::size_t digit_start = cur.pos;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
      ++cur.pos;
    if (digit_start == cur.pos) cur.fail("expected variable index after x");
    int idx = std::stoi(cur.text.substr(digit_start, cur.pos - digit_start));
    if (idx < 0 || idx > d) cur.fail("variable index out of range");
    int e = 1;
    if (cur.eat('^')) {
      Rat ex = cur.exponent();
      if (rat_den(ex) != 1 || ex < 0) cur.fail("monomial exponent must be a nonnegative integer");
      e = static_cast<int>(BigInt(rat_num(ex)));
    }
    alpha[static_cast<std::size_t>(idx)] += e;
    any = true;
  }
  return any;
}

}  // namespace

HomPoly poly_parse(const std::string& text, int d) {
  Cursor cur{text};
  if (cur.eof()) throw ValidationError("poly_parse: empty input");

  struct RawTerm {
    ExpVec alpha;
    HahnSeries coeff;
  };
  std::vector<RawTerm> raw;
  bool negate = cur.eat('-');
  while (true) {
    HahnSeries coeff = HahnSeries::one();
    bool have_coeff = false;
    if (cur.eat('(')) {
      coeff = hahn_expr(cur);
      if (!cur.eat(')')) cur.fail("expected ')'");
      have_coeff = true;
      cur.eat('*');
    } else if (cur.peek() != 'x') {
      HahnTermOrTail piece = hahn_piece(cur, false);
      if (piece.is_tail)
        coeff = HahnSeries::tail(LogVal(piece.tail_prec));
      else
        coeff = HahnSeries::monomial(piece.coeff, piece.exponent);
      have_coeff = true;
      cur.eat('*');
    }
    if (negate) coeff = -coeff;

    ExpVec alpha(static_cast<std::size_t>(d) + 1, 0);
    bool have_mono = parse_monomial_factors(cur, d, alpha);
    if (!have_coeff && !have_mono) cur.fail("expected a term");
    raw.push_back({std::move(alpha), std::move(coeff)});

    if (cur.eat('+'))
      negate = false;
    else if (cur.eat('-'))
      negate = true;
    else
      break;
  }
  if (!cur.eof()) cur.fail("trailing input");

  int degree = exp_degree(raw[0].alpha);
  for (const auto& t : raw)
    if (exp_degree(t.alpha) != degree)
      throw ValidationError("poly_parse: terms of mixed degree (sections are homogeneous)");
  HomPoly out(d, degree);
  for (auto& t : raw) out.add_term(t.alpha, t.coeff);
  return out;
}

}  // namespace shilov
