#pragma once

// Generators for concrete EDT0L systems over BS(1,k): the normal-form
// language at a fixed b-exponent r, geometric exponent families
// b^{rn+c} w alpha^{s_n}, power/coset families (centralizers, conjugator
// cosets), and the left-multiplication-by-a relation { a # u # nf(a u) }.

#include "bsk/lsystem.hpp"
#include "bsk/nfa.hpp"
#include "bsk/zk.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bsk {

// One geometric family b^{rn+c} w alpha^{s_n} for n >= n_start, where the
// exponents obey s_{n+1} = k^r * s_n + lambda and increase strictly.
struct RecurrenceFit {
  long r = 1;                   // b-exponent step per index, must be positive
  long c = 0;                   // constant b-exponent offset
  long n_start = 0;             // first realized index
  long lambda = 0;              // additive constant of the recurrence
  std::string central_word;     // constant middle factor, letters in {a,A,b,B}
  BigInt s_start = 0;           // value of s at n = n_start
  bool alpha_negative = false;  // tail letter: a when false, A when true
};

// All normal-form words whose element has b-exponent exactly r.  Deterministic
// over terminals {a,A,b,B}; for r < 0 the finitely many words with a B-prefix
// form a regular sublanguage that is unioned in via regular_to_edt0l.
Et0lSystem nf_fixed_r_system(int k, long r);

// The word family described by the fit.  Rejects r <= 0, a negative initial
// b-exponent r*n_start + c, s_start below |lambda|, or letters outside
// {a,A,b,B} in central_word.
Et0lSystem exp_sequence_system(const RecurrenceFit& fit, int k);

// { a # nf(u) # nf(a u) : u = b^t a^s or b^t A^s, t,s >= 0 }, built as the
// union of three subsystems split by how a * u resolves: plain addition,
// subtraction with enough A's, and base-k borrowing.
Et0lSystem left_mult_a_system(int k);

enum class PowerDirection { pos, neg };

// Fitted structure of one power direction { nf(g'^n x0) : n >= 1 }: either
// an eventually-periodic word family as an NFA over a A b B that covers the
// whole direction (the b-exponent of the step is negative, so suffixes
// eventually cycle while a fixed chunk is inserted per period), or a
// RecurrenceFit covering n >= fit.n_start (positive step: the central word
// freezes and the tail obeys s_{n+1} = k^r s_n + lambda).  Both are
// extracted empirically from computed normal forms and re-verified on ten
// further powers; a mismatch throws FitError.
struct PowerFamily {
  bool regular = false;
  Nfa regular_part;   // set iff regular
  RecurrenceFit fit;  // set iff !regular
};

PowerFamily fit_power_recurrence(const GroupElement& g_prime, PowerDirection dir);
// Same fitting against the right-translated family nf(g'^n x0).
PowerFamily fit_coset_recurrence(const GroupElement& g_prime, const GroupElement& x0,
                                 PowerDirection dir);

// How a centralizer (or a conjugator coset over it) decomposes into
// generatable parts.  For the cyclic kind, regular_part carries the
// eventually-periodic direction, the finitely many powers below each
// recurrence window, and the n = 0 word; recurrence_parts carry the
// geometric direction(s).
struct CentralizerPlan {
  enum Kind { whole, subgroup_n, cyclic } kind = whole;
  std::optional<GroupElement> generator;        // cyclic only
  Nfa regular_part;                             // cyclic only
  std::vector<RecurrenceFit> recurrence_parts;  // cyclic only
};
CentralizerPlan centralizer_plan(int k, const GroupElement& g);

// Cyclic-kind plan for the two-sided family { nf(g'^n x0) : n in Z }; the
// centralizer plan of an element with cyclic centralizer is the x0 = 1 case.
CentralizerPlan cyclic_coset_plan(int k, const GroupElement& g_prime, const GroupElement& x0);

// { w in NF : w g = g w }, assembled from the plan: the whole normal-form
// language, the b-exponent-zero slice, or the union of the cyclic plan's
// parts.
Et0lSystem centralizer_system(int k, const GroupElement& g);

// { w in NF : w h = g w }.  Empty system when no conjugator exists;
// otherwise the coset C_g x0 realized by refitting every part against the
// right-translated power family.
Et0lSystem conjugator_system(int k, const GroupElement& g, const GroupElement& h);

// ---------------------------------------------------------------------------
// Fractional-form triple languages for multiplication and inversion.
//
// The triples { x#y#z : z = xy } (resp. z = (xy)^-1 ), written in fractional
// form, split into finitely many sign cases: the sign classes of the
// b-exponents r_x, r_y, of the Z[1/k] parts u_x, u_y, u_z, and — for
// inversion, where it decides the shape of z — of r_x + r_y.  Each
// admissible combination has its own deterministic system; multiplication
// has 24 of them, inversion 36.

enum class RSign { nonneg, neg };
// Sign class of a Z[1/k] part.  nonneg/nonpos are the zero-compatible
// classes used where a principal case admits the value 0; pos/neg are
// strict.
enum class USign { nonneg, nonpos, pos, neg };
enum class FracVariant { multiplication, inversion };

struct SignCase {
  FracVariant variant = FracVariant::multiplication;
  RSign rx = RSign::nonneg;
  RSign ry = RSign::nonneg;
  USign ux = USign::nonneg;
  USign uy = USign::nonneg;
  USign uz = USign::nonneg;
  // Sign of r_x + r_y.  Meaningful for inversion only; multiplication cases
  // keep the default nonneg and ignore it.
  RSign rsum = RSign::nonneg;

  bool operator==(const SignCase& o) const;
};

// Whether the combination is one of the principal cases: the u classes must
// form one of the six compatible families, and for inversion rsum must be
// consistent with (rx, ry).
bool sign_case_admissible(const SignCase& c);

// Do the sign classes of x, y, z (and of r_x + r_y, for inversion) lie in
// the case?  Pure class membership; whether z actually equals xy or (xy)^-1
// is not checked.
bool sign_case_matches(const SignCase& c, const GroupElement& x, const GroupElement& y,
                       const GroupElement& z);

// Human-readable label, e.g. "mult[rx>=0 ry<0 ux>0 uy<0 uz>=0]".
std::string sign_case_id(const SignCase& c);

std::vector<SignCase> mult_frac_cases();  // the 24, in a fixed order
std::vector<SignCase> inv_frac_cases();   // the 36, in a fixed order

// { x#y#z : z = xy, fractional forms, sign classes as in c }.  The engine
// sweeps digit positions upward, performing base-k addition or subtraction
// with the carry tracked in the control; the three decimal points are
// crossed by dedicated tables (the radix offset between x and the other two
// words is r_y), and b/B prefixes are inserted one letter per step in the
// phases whose lengths pin the matching exponents.  Requires 2 <= k <= 10
// (single-character digits); rejects inadmissible cases.
Et0lSystem mult_frac_system(int k, const SignCase& c);

// Same language construction for { x#y#z : z = (xy)^-1 }.
Et0lSystem inv_frac_system(int k, const SignCase& c);

}  // namespace bsk
