#include <dop/parser.hpp>

#include <cctype>
#include <map>

namespace dop {

namespace {

// recursive-descent core shared by both grammars, parameterized over the
// value type and its atom/arithmetic hooks
template <typename V, typename Hooks>
struct Parser {
  const std::string& s;
  size_t i = 0;
  Hooks& h;
  Parser(const std::string& text, Hooks& hooks) : s(text), h(hooks) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i + 1); }
  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }

  V parse() {
    V v = sum();
    skip();
    if (i != s.size()) fail("unexpected trailing input");
    return v;
  }
  V sum() {
    skip();
    bool neg = false;
    while (true) {
      if (eat('-')) { neg = !neg; continue; }
      if (eat('+')) continue;
      break;
    }
    V v = product();
    if (neg) v = h.negate(v);
    while (true) {
      skip();
      if (eat('+')) v = h.add(v, product());
      else if (eat('-')) v = h.sub(v, product());
      else return v;
    }
  }
  V product() {
    V v = power();
    while (true) {
      skip();
      if (eat('*')) v = h.mul(v, power());
      else if (eat('/')) { size_t at = i; v = h.div(v, power(), at); }
      else return v;
    }
  }
  V power() {
    V v = atom();
    skip();
    if (eat('^')) {
      skip();
      size_t at = i;
      if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected nonnegative integer exponent");
      unsigned long e = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) e = e * 10 + (s[i++] - '0');
      (void)at;
      v = h.pow(v, e);
    }
    return v;
  }
  V atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    if (eat('(')) {
      V v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat('-')) return h.negate(atom());
    char c = s[i];
    if (std::isdigit((unsigned char)c)) {
      size_t start = i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
      return h.literal(s.substr(start, i - start));
    }
    if (std::isalpha((unsigned char)c)) {
      size_t start = i;
      while (i < s.size() && std::isalnum((unsigned char)s[i])) ++i;
      std::string name = s.substr(start, i - start);
      V v;
      if (!h.symbol(name, v)) { i = start; fail("unknown symbol '" + name + "'"); }
      return v;
    }
    fail("unexpected character");
  }
};

struct OpHooks {
  DiffOp negate(const DiffOp& a) { return -a; }
  DiffOp add(const DiffOp& a, const DiffOp& b) { return a + b; }
  DiffOp sub(const DiffOp& a, const DiffOp& b) { return a - b; }
  DiffOp mul(const DiffOp& a, const DiffOp& b) { return op_mul(a, b); }
  DiffOp div(const DiffOp& a, const DiffOp& b, size_t at) {
    if (b.order() != 0) throw ParseError("division only by order-0 operators", at);
    RatFun f = b.a[0];
    RatFun inv(f.den, f.num);
    return op_mul(a, DiffOp::mult(inv));
  }
  DiffOp pow(DiffOp a, unsigned long e) {
    DiffOp r = DiffOp::one();
    for (unsigned long k = 0; k < e; ++k) r = op_mul(r, a);
    return r;
  }
  DiffOp literal(const std::string& digits) {
    return DiffOp::mult(RatFun(BigQ(BigZ(digits, 10))));
  }
  bool symbol(const std::string& name, DiffOp& out) {
    if (name == "Dx") { out = DiffOp::Dx(); return true; }
    if (name == "theta") { out = DiffOp::theta(); return true; }
    if (name == "x") { out = DiffOp::mult(RatFun::x()); return true; }
    return false;
  }
};

// multivariate values as explicit num/den sparse maps
struct MPoly {
  std::map<std::vector<int>, BigQ> t;
};
struct MRat {
  MPoly num, den;  // den starts as 1
};

struct MrHooks {
  int k;
  explicit MrHooks(int nvars) : k(nvars) {}

  MPoly pone() {
    MPoly p;
    p.t[std::vector<int>(k, 0)] = BigQ(1);
    return p;
  }
  MPoly pmul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ea, ca] : a.t)
      for (auto& [eb, cb] : b.t) {
        std::vector<int> e(k);
        for (int v = 0; v < k; ++v) e[v] = ea[v] + eb[v];
        r.t[e] += ca * cb;
      }
    for (auto it = r.t.begin(); it != r.t.end();)
      it = is_zero(it->second) ? r.t.erase(it) : std::next(it);
    return r;
  }
  MPoly padd(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (auto& [e, c] : b.t) {
      r.t[e] += c;
      if (is_zero(r.t[e])) r.t.erase(e);
    }
    return r;
  }
  MPoly pneg(const MPoly& a) {
    MPoly r = a;
    for (auto& [e, c] : r.t) c = -c;
    return r;
  }

  MRat negate(const MRat& a) { return {pneg(a.num), a.den}; }
  MRat add(const MRat& a, const MRat& b) {
    return {padd(pmul(a.num, b.den), pmul(b.num, a.den)), pmul(a.den, b.den)};
  }
  MRat sub(const MRat& a, const MRat& b) { return add(a, negate(b)); }
  MRat mul(const MRat& a, const MRat& b) { return {pmul(a.num, b.num), pmul(a.den, b.den)}; }
  MRat div(const MRat& a, const MRat& b, size_t at) {
    if (b.num.t.empty()) throw ParseError("division by zero", at);
    return {pmul(a.num, b.den), pmul(a.den, b.num)};
  }
  MRat pow(const MRat& a, unsigned long e) {
    MRat r{pone(), pone()};
    for (unsigned long t = 0; t < e; ++t) r = mul(r, a);
    return r;
  }
  MRat literal(const std::string& digits) {
    MRat r{pone(), pone()};
    BigQ v(BigZ(digits, 10));
    if (is_zero(v)) r.num.t.clear();
    else r.num.t.begin()->second = v;
    return r;
  }
  bool symbol(const std::string& name, MRat& out) {
    static const std::string vars = "xyzw";
    if (name.size() != 1) return false;
    auto pos = vars.find(name[0]);
    if (pos == std::string::npos || (int)pos >= k) return false;
    out = {pone(), pone()};
    std::vector<int> e(k, 0);
    e[pos] = 1;
    out.num.t.clear();
    out.num.t[e] = BigQ(1);
    return true;
  }
};

}  // namespace

DiffOp parse_operator(const std::string& text) {
  OpHooks h;
  Parser<DiffOp, OpHooks> p(text, h);
  return p.parse();
}

MultiRat parse_multirat(const std::string& text, int nvars) {
  if (nvars < 1 || nvars > 4) throw std::invalid_argument("parse_multirat: 1..4 variables");
  MrHooks h(nvars);
  Parser<MRat, MrHooks> p(text, h);
  MRat v = p.parse();
  MultiRat R;
  R.nvars = nvars;
  for (auto& [e, c] : v.num.t) R.num.push_back({e, c});
  for (auto& [e, c] : v.den.t) R.den.push_back({e, c});
  return R;
}

}  // namespace dop
