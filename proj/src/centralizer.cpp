#include "bsk/combinators.hpp"
#include "bsk/constructions.hpp"
#include "bsk/normal_form.hpp"
#include "bsk/zk.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace bsk {

namespace {

GroupElement coset_elem(const GroupElement& step, long n, const GroupElement& x0) {
  return bs_mul(bs_pow(step, n), x0);
}

int nf_symbol(char c) {
  switch (c) {
    case 'a': return 0;
    case 'A': return 1;
    case 'b': return 2;
    case 'B': return 3;
  }
  throw InputError(std::string("letter outside a A b B: '") + c + "'");
}

Nfa make_nf_nfa() {
  Nfa n;
  n.symbols = {"a", "A", "b", "B"};
  n.add_state();  // start
  return n;
}

// Fresh chain spelling `word` from `from`; returns the final state.
int append_chain(Nfa& n, int from, const std::string& word) {
  for (char c : word) {
    int to = n.add_state();
    n.add_edge(from, nf_symbol(c), to);
    from = to;
  }
  return from;
}

void accept_word(Nfa& n, const std::string& word) {
  n.accept[append_chain(n, n.start, word)] = true;
}

// Splice `part` into `n` as an alternative at n.start.
void splice_nfa(Nfa& n, const Nfa& part) {
  int off = n.num_states();
  for (int s = 0; s < part.num_states(); ++s) {
    int ns = n.add_state();
    n.accept[ns] = part.accept[s];
  }
  for (int s = 0; s < part.num_states(); ++s)
    for (auto [sym, dst] : part.edges[s]) n.add_edge(off + s, sym, off + dst);
  n.add_edge(n.start, -1, off + part.start);
}

// What one power of the family looks like, without spelling out the
// (potentially enormous) a-tail: b-exponent, fractional digits, integer tail.
struct TailProfile {
  std::int64_t t = 0;
  std::vector<int> digits;
  BigInt s = 0;
  int sign = 1;
};

TailProfile profile_of(const GroupElement& e) {
  ZkSplit sp = zk_split(e.u);
  TailProfile p;
  p.t = e.t();
  p.digits = sp.frac_digits;
  p.s = sp.int_part;
  p.sign = sp.sign;
  return p;
}

std::string central_word_of(const std::vector<int>& digits, bool alpha_negative) {
  std::string w;
  for (int d : digits) {
    w.append(static_cast<std::size_t>(d), alpha_negative ? 'A' : 'a');
    w.push_back('B');
  }
  return w;
}

constexpr long kFitWindowTries = 24;
constexpr long kFitVerifyPowers = 10;

// Positive b-exponent step: after the fractional digits freeze, the words are
// b^{r n + c} central a^{s_n} with s_{n+1} = k^r s_n + lambda.  The constants
// are read off two consecutive powers and checked on ten more; when the tail
// is instead constant forever (so s_start >= |lambda| can never hold) the
// family is a plain regular language b^{t0} (b^r)* central a^s.
PowerFamily fit_geometric(const GroupElement& step, const GroupElement& x0) {
  int k = step.k;
  long r = static_cast<long>(step.r);
  BigInt kr = 1;
  for (long i = 0; i < r; ++i) kr *= k;

  long n1 = std::max<long>(static_cast<long>(step.m()), static_cast<long>(x0.m()));
  n1 = std::max<long>(1, (n1 + r - 1) / r + 1);
  for (long tries = 0; tries < kFitWindowTries; ++tries, ++n1) {
    TailProfile p0 = profile_of(coset_elem(step, n1, x0));
    TailProfile p1 = profile_of(coset_elem(step, n1 + 1, x0));
    if (p0.t < 0 || p1.t != p0.t + r) continue;
    if (p0.digits != p1.digits || p0.sign != p1.sign) continue;

    BigInt lam_big = p1.s - kr * p0.s;
    if (lam_big > 1000000 || lam_big < -1000000) continue;
    long lambda = lam_big.convert_to<long>();

    if (lambda < 0 && p0.s < -lambda) {
      if (p1.s != p0.s) continue;  // shrinking toward the window; bump n1
      // Constant tail: verify and return the pumped b-run.
      bool ok = true;
      for (long j = 2; j <= kFitVerifyPowers + 1 && ok; ++j) {
        TailProfile pj = profile_of(coset_elem(step, n1 + j, x0));
        ok = pj.t == p0.t + r * j && pj.digits == p0.digits && pj.sign == p0.sign &&
             pj.s == p0.s;
      }
      if (!ok) throw FitError("constant-tail power family failed reverification");
      PowerFamily fam;
      fam.regular = true;
      Nfa n = make_nf_nfa();
      int head = append_chain(n, n.start, std::string(static_cast<std::size_t>(p0.t), 'b'));
      int cyc = append_chain(n, head, std::string(static_cast<std::size_t>(r), 'b'));
      n.add_edge(cyc, -1, head);
      std::string rest = central_word_of(p0.digits, p0.sign < 0);
      rest.append(p0.s.convert_to<std::size_t>(), p0.sign < 0 ? 'A' : 'a');
      n.accept[append_chain(n, head, rest)] = true;
      fam.regular_part = n;
      return fam;
    }

    RecurrenceFit fit;
    fit.r = r;
    fit.c = p0.t - r * n1;
    fit.n_start = n1;
    fit.lambda = lambda;
    fit.central_word = central_word_of(p0.digits, p0.sign < 0);
    fit.s_start = p0.s;
    fit.alpha_negative = p0.sign < 0;

    bool ok = true;
    BigInt s = p0.s;
    for (long j = 1; j <= kFitVerifyPowers + 1 && ok; ++j) {
      s = kr * s + lambda;
      TailProfile pj = profile_of(coset_elem(step, n1 + j, x0));
      ok = pj.t == fit.c + r * (n1 + j) && pj.digits == p0.digits && pj.sign == p0.sign &&
           pj.s == s;
    }
    if (!ok) continue;
    PowerFamily fam;
    fam.fit = fit;
    return fam;
  }
  throw FitError("no geometric window found for the power family");
}

constexpr long kShrinkSamples = 48;
constexpr long kShrinkMaxPeriod = 6;

// Negative b-exponent step: word lengths grow by a constant per period, with
// a fixed chunk inserted at a fixed position.  Detected over computed normal
// forms of n = 1..48 and returned as chains head (rep)* tail per residue,
// plus literal chains for the powers before the pattern starts.
PowerFamily fit_shrinking(const GroupElement& step, const GroupElement& x0) {
  std::vector<std::string> w(kShrinkSamples + 1);
  for (long n = 1; n <= kShrinkSamples; ++n) w[n] = nf_of(coset_elem(step, n, x0));

  for (long p = 1; p <= kShrinkMaxPeriod; ++p) {
    for (long n0 = 1; n0 + 5 * p - 1 <= kShrinkSamples; ++n0) {
      struct Part {
        std::string head, rep, tail;
      };
      std::vector<Part> parts;
      bool ok = true;
      for (long i = 0; i < p && ok; ++i) {
        const std::string& v0 = w[n0 + i];
        const std::string& v1 = w[n0 + i + p];
        long grow = static_cast<long>(v1.size()) - static_cast<long>(v0.size());
        if (grow <= 0) {
          ok = false;
          break;
        }
        std::size_t cs = 0;
        while (cs < v0.size() && v0[v0.size() - 1 - cs] == v1[v1.size() - 1 - cs]) ++cs;
        std::size_t q = v0.size() - cs;
        if (v0.compare(0, q, v1, 0, q) != 0) {
          ok = false;
          break;
        }
        Part part{v0.substr(0, q), v1.substr(q, static_cast<std::size_t>(grow)), v0.substr(q)};
        for (long j = 0; n0 + i + j * p <= kShrinkSamples && ok; ++j) {
          std::string expect = part.head;
          for (long t = 0; t < j; ++t) expect += part.rep;
          expect += part.tail;
          ok = expect == w[n0 + i + j * p];
        }
        parts.push_back(std::move(part));
      }
      if (!ok) continue;

      PowerFamily fam;
      fam.regular = true;
      Nfa n = make_nf_nfa();
      for (long e = 1; e < n0; ++e) accept_word(n, w[e]);
      for (const auto& part : parts) {
        int h = append_chain(n, n.start, part.head);
        int back = append_chain(n, h, part.rep);
        n.add_edge(back, -1, h);
        n.accept[append_chain(n, h, part.tail)] = true;
      }
      fam.regular_part = n;
      return fam;
    }
  }
  throw FitError("no insertion period found for the power family");
}

PowerFamily fit_family(const GroupElement& g_prime, const GroupElement& x0,
                       PowerDirection dir) {
  if (g_prime.r == 0)
    throw InputError("power-family fitting needs a generator with nonzero b-exponent");
  GroupElement step = dir == PowerDirection::pos ? g_prime : bs_inv(g_prime);
  return step.r > 0 ? fit_geometric(step, x0) : fit_shrinking(step, x0);
}

}  // namespace

PowerFamily fit_power_recurrence(const GroupElement& g_prime, PowerDirection dir) {
  return fit_family(g_prime, GroupElement::identity(g_prime.k), dir);
}

PowerFamily fit_coset_recurrence(const GroupElement& g_prime, const GroupElement& x0,
                                 PowerDirection dir) {
  if (g_prime.k != x0.k) throw InputError("mismatched arithmetic bases");
  return fit_family(g_prime, x0, dir);
}

CentralizerPlan cyclic_coset_plan(int k, const GroupElement& g_prime,
                                  const GroupElement& x0) {
  if (g_prime.k != k || x0.k != k) throw InputError("mismatched arithmetic bases");
  CentralizerPlan plan;
  plan.kind = CentralizerPlan::cyclic;
  plan.generator = g_prime;

  Nfa n = make_nf_nfa();
  accept_word(n, nf_of(x0));  // n = 0
  for (PowerDirection dir : {PowerDirection::pos, PowerDirection::neg}) {
    PowerFamily fam = fit_coset_recurrence(g_prime, x0, dir);
    if (fam.regular) {
      splice_nfa(n, fam.regular_part);
      continue;
    }
    GroupElement step = dir == PowerDirection::pos ? g_prime : bs_inv(g_prime);
    for (long j = 1; j < fam.fit.n_start; ++j) accept_word(n, nf_of(coset_elem(step, j, x0)));
    plan.recurrence_parts.push_back(fam.fit);
  }
  plan.regular_part = n;
  return plan;
}

CentralizerPlan centralizer_plan(int k, const GroupElement& g) {
  if (g.k != k) throw InputError("mismatched arithmetic bases");
  CentralizerGenerator cg = centralizer_generator(g);
  if (cg.kind == CentralizerGenerator::Whole) return {};
  if (cg.kind == CentralizerGenerator::SubgroupN) {
    CentralizerPlan plan;
    plan.kind = CentralizerPlan::subgroup_n;
    return plan;
  }
  return cyclic_coset_plan(k, *cg.generator, GroupElement::identity(k));
}

Et0lSystem centralizer_system(int k, const GroupElement& g) {
  CentralizerPlan plan = centralizer_plan(k, g);
  switch (plan.kind) {
    case CentralizerPlan::whole:
      return regular_to_edt0l(nf_recognizer(k), k);
    case CentralizerPlan::subgroup_n:
      return nf_fixed_r_system(k, 0);
    case CentralizerPlan::cyclic:
      break;
  }
  Et0lSystem sys = regular_to_edt0l(plan.regular_part, k);
  for (const RecurrenceFit& fit : plan.recurrence_parts)
    sys = et0l_union(sys, exp_sequence_system(fit, k));
  return sys;
}

}  // namespace bsk
