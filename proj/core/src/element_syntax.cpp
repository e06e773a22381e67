#include "twistlab/element_syntax.hpp"

#include <cctype>
#include <functional>

#include <json.hpp>

namespace twistlab {

namespace {

template <class Elem>
struct Ops {
  std::function<Elem(const CycloScalar&)> scalar;
  std::function<Elem(char, int)> letter;  // 'x' or 'y', 0-based index
  std::function<Elem(const MonomialMatrix&)> group;
  std::function<Elem(const Elem&, const Elem&)> add, mul;
  std::function<Elem(const CycloScalar&, const Elem&)> scale;
};

template <class Elem>
class Parser {
 public:
  Parser(const std::string& text, const ContextPtr& ctx, int m, int n, const SymbolTable& symbols, Ops<Elem> ops)
      : s_(text), ctx_(ctx), m_(m), n_(n), symbols_(symbols), ops_(std::move(ops)) {}

  Elem parse() {
    Elem e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  Elem expr() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    Elem acc = term();
    if (negative) acc = ops_.scale(CycloScalar(ctx_, -1L), acc);
    while (true) {
      if (accept('+'))
        acc = ops_.add(acc, term());
      else if (accept('-'))
        acc = ops_.add(acc, ops_.scale(CycloScalar(ctx_, -1L), term()));
      else
        return acc;
    }
  }

  Elem term() {
    Elem acc = power();
    while (accept('*')) acc = ops_.mul(acc, power());
    return acc;
  }

  Elem power() {
    Elem base = atom();
    if (!accept('^')) return base;
    const long k = integer();
    Elem acc = ops_.scalar(CycloScalar(ctx_, 1L));
    for (long i = 0; i < k; ++i) acc = ops_.mul(acc, base);
    return acc;
  }

  Elem atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Elem e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long num = integer();
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        const long den = integer();
        if (den == 0) fail("zero denominator");
        return ops_.scalar(CycloScalar(ctx_, Rational(num, den)));
      }
      return ops_.scalar(CycloScalar(ctx_, num));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string word = s_.substr(start, pos_ - start);
    if ((word == "x" || word == "y") && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const long k = integer();
      if (k < 1 || k > n_) fail(word + std::to_string(k) + " is out of range");
      return ops_.letter(word[0], static_cast<int>(k - 1));
    }
    if ((word == "s" || word == "t" || word == "sg" || word == "w") && pos_ < s_.size() && s_[pos_] == '(') {
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) fail("unterminated group token");
      const std::string token = s_.substr(start, close + 1 - start);
      pos_ = close + 1;
      try {
        return ops_.group(parse_group_token(token, m_, n_));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (auto it = symbols_.find(word); it != symbols_.end()) return ops_.scalar(it->second);
    if (word == "i" && ctx_->conductor() % 4 == 0)
      return ops_.scalar(CycloScalar::root_of_unity(ctx_, ctx_->conductor() / 4));
    if (word == "zeta") return ops_.scalar(CycloScalar::root_of_unity(ctx_, 1));
    fail("unknown symbol '" + word + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  ContextPtr ctx_;
  int m_, n_;
  const SymbolTable& symbols_;
  Ops<Elem> ops_;
};

}  // namespace

CherednikElement parse_element(const CherednikAlgebra& H, const std::string& text, const SymbolTable& symbols) {
  Ops<CherednikElement> ops;
  ops.scalar = [&](const CycloScalar& c) { return H.scalar(c); };
  ops.letter = [&](char v, int i) { return v == 'x' ? H.x(i) : H.y(i); };
  ops.group = [&](const MonomialMatrix& g) { return H.group(g); };
  ops.add = [&](const CherednikElement& a, const CherednikElement& b) { return H.add(a, b); };
  ops.mul = [&](const CherednikElement& a, const CherednikElement& b) { return H.mul(a, b); };
  ops.scale = [&](const CycloScalar& c, const CherednikElement& a) { return H.scale(c, a); };
  return Parser<CherednikElement>(text, H.context(), H.spec().m, H.n(), symbols, ops).parse();
}

GroupAlgebraElement parse_group_element(const ContextPtr& ctx, int m, int n, const std::string& text,
                                        const SymbolTable& symbols) {
  Ops<GroupAlgebraElement> ops;
  const MonomialMatrix id(m, n);
  ops.scalar = [&](const CycloScalar& c) {
    GroupAlgebraElement e(ctx);
    e.add_term(id, c);
    return e;
  };
  ops.letter = [](char v, int) -> GroupAlgebraElement {
    throw ParseError(std::string("'") + v + "' is not allowed in a group algebra element");
  };
  ops.group = [&](const MonomialMatrix& g) { return GroupAlgebraElement(ctx, g); };
  ops.add = [](const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a + b; };
  ops.mul = [](const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a * b; };
  ops.scale = [](const CycloScalar& c, const GroupAlgebraElement& a) { return c * a; };
  return Parser<GroupAlgebraElement>(text, ctx, m, n, symbols, ops).parse();
}

std::string element_to_json(const CherednikElement& e, int n) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : e) {
    std::vector<int> x(w.x.begin(), w.x.begin() + n), y(w.y.begin(), w.y.begin() + n);
    out.push_back({x, w.g.token(), y, c.str()});
  }
  return out.dump();
}

}  // namespace twistlab
