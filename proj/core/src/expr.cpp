#include "hecke/expr.hpp"

#include <cctype>

namespace hecke {

namespace {

class Parser {
 public:
  Parser(const BLOps& ops, const std::string& text)
      : ops_(ops), rd_(ops.datum()), text_(text) {}

  BLElt run() {
    BLElt v = expr();
    skip_ws();
    check(pos_ == text_.size(), Errc::ParseError,
          "trailing input at position " + std::to_string(pos_));
    return v;
  }

 private:
  // A parsed primary: a plain element, or an invertible atom (generator,
  // q or t) that still admits a negative exponent.
  struct Value {
    enum class Kind { Elt, Gen, Q, T } kind = Kind::Elt;
    BLElt elt;
    int gen = -1;
  };

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void bad(const std::string& what) {
    fail(Errc::ParseError, what + " at position " + std::to_string(pos_));
  }

  long long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) bad("expected integer");
    return std::stoll(text_.substr(start, pos_ - start));
  }

  BLElt expr() {
    bool neg = eat('-');
    BLElt v = term();
    if (neg) v = -v;
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  BLElt term() {
    BLElt v = factor();
    while (eat('*')) v = ops_.mul(v, factor());
    return v;
  }

  BLElt factor() {
    Value p = primary();
    long long k = 1;
    if (eat('^')) k = integer();
    const long long N = rd_.N();
    switch (p.kind) {
      case Value::Kind::Q:
        return ops_.from_hw(HWElt::term(ops_.weyl().id(), LaurentT::q_pow(N, k)));
      case Value::Kind::T:
        return ops_.from_hw(HWElt::term(ops_.weyl().id(), LaurentT::t_pow(N, k)));
      case Value::Kind::Gen: {
        if (k == 0) return ops_.one();
        BLElt base =
            k > 0 ? ops_.from_hw(ops_.hecke().basis(ops_.weyl().gen(p.gen)))
                  : ops_.from_hw(ops_.hecke().t_inverse(ops_.weyl().gen(p.gen)));
        BLElt v = base;
        for (long long j = 1; j < (k > 0 ? k : -k); ++j) v = ops_.mul(v, base);
        return v;
      }
      case Value::Kind::Elt: {
        check(k >= 0, Errc::ParseError,
              "negative exponent needs an invertible atom (q, t or T[i])");
        if (k == 0) return ops_.one();
        BLElt v = p.elt;
        for (long long j = 1; j < k; ++j) v = ops_.mul(v, p.elt);
        return v;
      }
    }
    bad("unreachable");
  }

  Value primary() {
    skip_ws();
    if (pos_ >= text_.size()) bad("unexpected end of input");
    char c = text_[pos_];
    Value v;
    if (c == '(') {
      ++pos_;
      v.elt = expr();
      if (!eat(')')) bad("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      v.kind = Value::Kind::Q;
      return v;
    }
    if (c == 't') {
      ++pos_;
      v.kind = Value::Kind::T;
      return v;
    }
    if (c == 'T') {
      ++pos_;
      if (!eat('[')) bad("expected '[' after T");
      long long i = integer();
      if (!eat(']')) bad("expected ']'");
      check(i >= 0 && i < rd_.n_gen(), Errc::ParseError,
            "generator index " + std::to_string(i) + " out of range");
      v.kind = Value::Kind::Gen;
      v.gen = static_cast<int>(i);
      return v;
    }
    if (c == 'Z') {
      ++pos_;
      if (!eat('[')) bad("expected '[' after Z");
      Coweight z;
      z.push_back(integer());
      while (eat(',')) z.push_back(integer());
      if (!eat(']')) bad("expected ']'");
      check(static_cast<int>(z.size()) == rd_.rank(), Errc::ParseError,
            "Z exponent needs " + std::to_string(rd_.rank()) + " coordinates");
      v.elt = ops_.z_monomial(z, rd_.lt_one());
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long n = integer();
      v.elt = ops_.from_hw(
          HWElt::term(ops_.weyl().id(), LaurentT::constant(rd_.N(), Int(n))));
      return v;
    }
    bad(std::string("unexpected character '") + c + "'");
  }

  const BLOps& ops_;
  const RootDatum& rd_;
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

BLElt parse_expr(const BLOps& ops, const std::string& text) {
  return Parser(ops, text).run();
}

std::vector<int> parse_word(const std::string& text, int n_gen) {
  std::vector<int> out;
  if (text.empty() || text == "e" || text == "1") return out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      size_t used = 0;
      int i = std::stoi(tok, &used);
      while (used < tok.size() && std::isspace((unsigned char)tok[used]))
        ++used;
      check(used == tok.size(), Errc::ParseError,
            "bad word component '" + tok + "'");
      check(i >= 0 && i < n_gen, Errc::ParseError,
            "generator index " + tok + " out of range");
      out.push_back(i);
    } catch (const std::invalid_argument&) {
      fail(Errc::ParseError, "bad word component '" + tok + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

Coweight parse_coweight(const std::string& text, int rank) {
  Coweight out;
  size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    size_t next = text.find(',', pos);
    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      while (used < tok.size() && std::isspace((unsigned char)tok[used]))
        ++used;
      check(used == tok.size(), Errc::ParseError,
            "bad coordinate '" + tok + "'");
      out.push_back(v);
    } catch (const std::invalid_argument&) {
      fail(Errc::ParseError, "bad coordinate '" + tok + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  check(static_cast<int>(out.size()) == rank, Errc::ParseError,
        "coweight needs " + std::to_string(rank) + " coordinates, got " +
            std::to_string(out.size()));
  return out;
}

}  // namespace hecke
