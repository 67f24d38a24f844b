#pragma once

// Exact arithmetic in Z[1/k] and in the solvable Baumslag-Solitar group
// BS(1,k) = < a, b | b^-1 a b = a^k >, k >= 2.  Every group element has a
// unique fractional representation b^r a^u with r an integer and u in Z[1/k];
// all operations below are exact and total on that representation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsk {

using BigInt = boost::multiprecision::cpp_int;

// Malformed input (words, element strings, JSON, CLI args).  `pos` is the
// offending character/token position when known, -1 otherwise.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg, long pos = -1)
      : std::runtime_error(pos >= 0 ? msg + " (at position " + std::to_string(pos) + ")" : msg),
        position(pos) {}
  long position;
};

// An empirical fit failed verification.  Always signals a bug in a fitter or
// a generator, never a legitimate outcome.
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value num / k^exp, canonical: num == 0 implies exp == 0, and exp > 0
// implies k does not divide num.  Closed under +, -, integer multiples and
// shifts by powers of k.
class ZkRational {
 public:
  ZkRational() : k_(2), num_(0), exp_(0) {}
  ZkRational(int k, BigInt num, int exp = 0);

  static ZkRational zero(int k) { return ZkRational(k, 0, 0); }
  static ZkRational one(int k) { return ZkRational(k, 1, 0); }

  int k() const { return k_; }
  const BigInt& num() const { return num_; }
  int exp() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  ZkRational operator-() const { return ZkRational(k_, -num_, exp_); }
  ZkRational operator+(const ZkRational& o) const;
  ZkRational operator-(const ZkRational& o) const { return *this + (-o); }
  ZkRational operator*(const ZkRational& o) const;

  bool operator==(const ZkRational& o) const {
    return k_ == o.k_ && num_ == o.num_ && exp_ == o.exp_;
  }
  bool operator!=(const ZkRational& o) const { return !(*this == o); }
  bool operator<(const ZkRational& o) const;

  std::string to_string() const;  // "num" or "num/k^exp" with k^exp evaluated

 private:
  int k_;
  BigInt num_;
  int exp_;  // >= 0
};

ZkRational zk_add(const ZkRational& x, const ZkRational& y);
// x * k^e (e may be negative).
ZkRational zk_shift(const ZkRational& x, long e);

// |x| = (i_m/k^m + ... + i_1/k) + s.  frac_digits holds i_m..i_1 in that
// order (i.e. lowest place value first, the order they appear in the
// fractional form); i_m != 0 whenever m > 0.  sign is +1, -1, or +1 for zero.
struct ZkSplit {
  std::vector<int> frac_digits;
  BigInt int_part;
  int sign;
  int m() const { return static_cast<int>(frac_digits.size()); }
};
ZkSplit zk_split(const ZkRational& x);

// Little-endian base-k digits of a non-negative integer (empty for 0).
std::vector<int> base_k_digits(BigInt n, int k);

// b^r a^u.  Equality is structural equality of (r, u).
struct GroupElement {
  int k;
  std::int64_t r;
  ZkRational u;

  GroupElement() : k(2), r(0), u(ZkRational::zero(2)) {}
  GroupElement(int k_, std::int64_t r_, ZkRational u_);

  static GroupElement identity(int k) { return GroupElement(k, 0, ZkRational::zero(k)); }
  bool is_identity() const { return r == 0 && u.is_zero(); }

  // Number of fractional base-k digits of u (the exponent of the canonical
  // denominator), and t = r + m.
  int m() const { return u.exp(); }
  std::int64_t t() const { return r + m(); }

  bool operator==(const GroupElement& o) const { return k == o.k && r == o.r && u == o.u; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

GroupElement bs_mul(const GroupElement& g, const GroupElement& h);
GroupElement bs_inv(const GroupElement& g);
GroupElement bs_pow(const GroupElement& g, std::int64_t n);

// Left-to-right product of generator letters a, A (= a^-1), b, B (= b^-1).
GroupElement bs_eval_word(int k, const std::string& word);

// Text form "(r,num)" / "(r,num/den)" with den = k^exp evaluated.
std::string element_to_string(const GroupElement& g);
GroupElement parse_element(int k, const std::string& text);

// Centralizer of g: the whole group (g = 1), the subgroup N of b-exponent
// zero (g in N \ {1}), or an infinite cyclic group with the given generator.
struct CentralizerGenerator {
  enum Kind { Whole, SubgroupN, Cyclic } kind;
  std::optional<GroupElement> generator;  // set iff kind == Cyclic
};
CentralizerGenerator centralizer_generator(const GroupElement& g);

// Some x0 with x0 h = g x0, when the equation w h = g w is solvable; nullopt
// otherwise.  The full solution set is then the coset C_g x0.
std::optional<GroupElement> solve_conjugacy(const GroupElement& g, const GroupElement& h);

// Exact X/Y as an element of Z[1/k], or nullopt when the reduced denominator
// has a prime factor not dividing k.
std::optional<ZkRational> zk_from_fraction(int k, const BigInt& num, const BigInt& den);

}  // namespace bsk
