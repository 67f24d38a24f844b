#include "bsk/zk.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace bsk {

namespace {

BigInt pow_k(int k, long e) {
  BigInt p = 1;
  for (long i = 0; i < e; ++i) p *= k;
  return p;
}

void check_k(int k) {
  if (k < 2) throw InputError("k must be >= 2, got " + std::to_string(k));
}

void check_same_k(int a, int b) {
  if (a != b)
    throw InputError("mixed bases: k=" + std::to_string(a) + " vs k=" + std::to_string(b));
}

}  // namespace

ZkRational::ZkRational(int k, BigInt num, int exp) : k_(k), num_(std::move(num)), exp_(exp) {
  check_k(k);
  if (exp_ < 0) throw InputError("ZkRational exponent must be non-negative");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % k_ == 0) {
    num_ /= k_;
    --exp_;
  }
}

ZkRational ZkRational::operator+(const ZkRational& o) const {
  check_same_k(k_, o.k_);
  int e = std::max(exp_, o.exp_);
  BigInt a = num_ * pow_k(k_, e - exp_);
  BigInt b = o.num_ * pow_k(k_, e - o.exp_);
  return ZkRational(k_, a + b, e);
}

ZkRational ZkRational::operator*(const ZkRational& o) const {
  check_same_k(k_, o.k_);
  return ZkRational(k_, num_ * o.num_, exp_ + o.exp_);
}

bool ZkRational::operator<(const ZkRational& o) const {
  check_same_k(k_, o.k_);
  int e = std::max(exp_, o.exp_);
  return num_ * pow_k(k_, e - exp_) < o.num_ * pow_k(k_, e - o.exp_);
}

std::string ZkRational::to_string() const {
  std::string s = num_.str();
  if (exp_ > 0) s += "/" + pow_k(k_, exp_).str();
  return s;
}

ZkRational zk_add(const ZkRational& x, const ZkRational& y) { return x + y; }

ZkRational zk_shift(const ZkRational& x, long e) {
  if (x.is_zero() || e == 0) return x;
  if (e < 0) return ZkRational(x.k(), x.num(), x.exp() + static_cast<int>(-e));
  long drop = std::min<long>(e, x.exp());
  return ZkRational(x.k(), x.num() * pow_k(x.k(), e - drop), x.exp() - static_cast<int>(drop));
}

std::vector<int> base_k_digits(BigInt n, int k) {
  std::vector<int> digits;
  while (n > 0) {
    digits.push_back(static_cast<int>(n % k));
    n /= k;
  }
  return digits;
}

ZkSplit zk_split(const ZkRational& x) {
  ZkSplit out;
  out.sign = x.sign() < 0 ? -1 : 1;
  BigInt n = x.num() < 0 ? BigInt(-x.num()) : x.num();
  int m = x.exp();
  BigInt km = pow_k(x.k(), m);
  out.int_part = n / km;
  BigInt frac = n % km;
  // frac / k^m = sum_j d_j k^(j-m) with d_j the base-k digits of frac, so the
  // digit at place value k^-(m-j) is d_j: listing i_m..i_1 is listing d_0 up.
  out.frac_digits.resize(m, 0);
  for (int j = 0; j < m; ++j) {
    out.frac_digits[j] = static_cast<int>(frac % x.k());
    frac /= x.k();
  }
  return out;
}

GroupElement::GroupElement(int k_, std::int64_t r_, ZkRational u_)
    : k(k_), r(r_), u(std::move(u_)) {
  check_k(k);
  check_same_k(k, u.k());
}

GroupElement bs_mul(const GroupElement& g, const GroupElement& h) {
  check_same_k(g.k, h.k);
  return GroupElement(g.k, g.r + h.r, zk_shift(g.u, h.r) + h.u);
}

GroupElement bs_inv(const GroupElement& g) {
  return GroupElement(g.k, -g.r, zk_shift(-g.u, -g.r));
}

GroupElement bs_pow(const GroupElement& g, std::int64_t n) {
  if (n < 0) return bs_pow(bs_inv(g), -n);
  // g^n = (rn, u * (1 + k^r + ... + k^((n-1)r))).
  ZkRational sum = ZkRational::zero(g.k);
  for (std::int64_t j = 0; j < n; ++j) sum = sum + zk_shift(ZkRational::one(g.k), g.r * j);
  return GroupElement(g.k, g.r * n, g.u * sum);
}

GroupElement bs_eval_word(int k, const std::string& word) {
  GroupElement acc = GroupElement::identity(k);
  for (size_t i = 0; i < word.size(); ++i) {
    GroupElement gen;
    switch (word[i]) {
      case 'a': gen = GroupElement(k, 0, ZkRational::one(k)); break;
      case 'A': gen = GroupElement(k, 0, -ZkRational::one(k)); break;
      case 'b': gen = GroupElement(k, 1, ZkRational::zero(k)); break;
      case 'B': gen = GroupElement(k, -1, ZkRational::zero(k)); break;
      default:
        throw InputError(std::string("invalid generator letter '") + word[i] + "'",
                         static_cast<long>(i));
    }
    acc = bs_mul(acc, gen);
  }
  return acc;
}

std::string element_to_string(const GroupElement& g) {
  return "(" + std::to_string(g.r) + "," + g.u.to_string() + ")";
}

GroupElement parse_element(int k, const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw InputError(std::string("expected '") + c + "' in element literal", static_cast<long>(i));
    ++i;
  };
  auto read_int = [&]() -> BigInt {
    skip_ws();
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw InputError("expected integer in element literal", static_cast<long>(start));
    return BigInt(text.substr(start, i - start));
  };

  expect('(');
  BigInt r = read_int();
  expect(',');
  BigInt num = read_int();
  BigInt den = 1;
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int();
    if (den <= 0) throw InputError("denominator must be positive", static_cast<long>(i));
  }
  expect(')');
  skip_ws();
  if (i != text.size()) throw InputError("trailing characters after element literal", static_cast<long>(i));
  if (r < std::numeric_limits<std::int64_t>::min() || r > std::numeric_limits<std::int64_t>::max())
    throw InputError("b-exponent out of range");
  auto u = zk_from_fraction(k, num, den);
  if (!u) throw InputError("denominator is not a power-of-k product: " + den.str());
  return GroupElement(k, static_cast<std::int64_t>(r), *u);
}

std::optional<ZkRational> zk_from_fraction(int k, const BigInt& num, const BigInt& den) {
  check_k(k);
  if (den == 0) return std::nullopt;
  BigInt n = num, d = den;
  if (d < 0) { d = -d; n = -n; }
  BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
  if (g > 1) { n /= g; d /= g; }
  // d must be k-smooth: strip factors shared with k until none remain.
  BigInt rest = d;
  for (;;) {
    BigInt f = boost::multiprecision::gcd(rest, BigInt(k));
    if (f <= 1) break;
    while (rest % f == 0) rest /= f;
  }
  if (rest != 1) return std::nullopt;
  // Find the least e with d | k^e, then n/d = n * (k^e / d) / k^e.
  int e = 0;
  BigInt ke = 1;
  while (ke % d != 0) { ke *= k; ++e; }
  return ZkRational(k, n * (ke / d), e);
}

CentralizerGenerator centralizer_generator(const GroupElement& g) {
  if (g.is_identity()) return {CentralizerGenerator::Whole, std::nullopt};
  if (g.r == 0) return {CentralizerGenerator::SubgroupN, std::nullopt};
  // h = (rho, v) commutes with g iff v (k^r - 1) = u (k^rho - 1); valid rho
  // form the multiples of some positive divisor d of |r|.  Scan divisors in
  // increasing order and pick the first whose v lands in Z[1/k]; the result
  // generates every commuting element (validated against the oracle).
  std::int64_t absr = g.r < 0 ? -g.r : g.r;
  int s = g.r < 0 ? -1 : 1;
  for (std::int64_t d = 1; d <= absr; ++d) {
    if (absr % d != 0) continue;
    // v = u (k^(s d) - 1)/(k^r - 1); for s = -1 this equals
    // u k^(|r|-d) (k^d - 1)/(k^|r| - 1) up to sign bookkeeping below.
    BigInt kd = pow_k(g.k, d);
    BigInt kr = pow_k(g.k, absr);
    BigInt num = g.u.num() * (kd - 1);
    BigInt den = (kr - 1) * pow_k(g.k, g.u.exp());
    if (s < 0) num *= pow_k(g.k, absr - d);
    auto v = zk_from_fraction(g.k, num, den);
    if (v) {
      GroupElement gen(g.k, s * d, *v);
      return {CentralizerGenerator::Cyclic, gen};
    }
  }
  // d = |r| always succeeds (v = u), so this is unreachable.
  throw FitError("centralizer divisor scan failed");
}

std::optional<GroupElement> solve_conjugacy(const GroupElement& g, const GroupElement& h) {
  check_same_k(g.k, h.k);
  if (g.r != h.r) return std::nullopt;
  const int k = g.k;
  // x0 = (rho, v) solves x0 h = g x0  iff  v (k^r - 1) = u_g k^rho - u_h.
  if (g.r == 0) {
    if (g.u.is_zero()) {
      if (h.u.is_zero()) return GroupElement::identity(k);
      return std::nullopt;
    }
    if (h.u.is_zero()) return std::nullopt;
    if ((g.u.sign() > 0) != (h.u.sign() > 0)) return std::nullopt;
    // Need u_h / u_g an exact (possibly negative) power of k.
    BigInt ng = g.u.num() < 0 ? BigInt(-g.u.num()) : g.u.num();
    BigInt nh = h.u.num() < 0 ? BigInt(-h.u.num()) : h.u.num();
    long c = 0;
    if (nh >= ng) {
      while (nh > ng && nh % k == 0) { nh /= k; ++c; }
    } else {
      while (ng > nh && ng % k == 0) { ng /= k; --c; }
    }
    if (ng != nh) return std::nullopt;
    long rho = c + g.u.exp() - h.u.exp();
    return GroupElement(k, rho, ZkRational::zero(k));
  }
  auto cg = centralizer_generator(g);
  std::int64_t period = cg.generator->r;
  if (period < 0) period = -period;
  BigInt kr_minus_1 = pow_k(k, g.r < 0 ? -g.r : g.r) - 1;
  for (std::int64_t rho = 0; rho < period; ++rho) {
    // v = (u_g k^rho - u_h) / (k^r - 1), exactly.
    ZkRational rhs = zk_shift(g.u, rho) - h.u;
    BigInt num = rhs.num();
    BigInt den = kr_minus_1 * pow_k(k, rhs.exp());
    if (g.r < 0) {
      // k^r - 1 = (1 - k^|r|)/k^|r|: fold the k^|r| into the numerator.
      num = -num * pow_k(k, -g.r);
    }
    auto v = zk_from_fraction(k, num, den);
    if (v) {
      GroupElement x0(k, rho, *v);
      // Exactness guard; cheap and keeps the contract honest.
      if (bs_mul(x0, h) == bs_mul(g, x0)) return x0;
    }
  }
  return std::nullopt;
}

}  // namespace bsk
