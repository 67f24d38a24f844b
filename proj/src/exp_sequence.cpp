#include "bsk/constructions.hpp"

#include "bsk/control.hpp"

#include <cstring>
#include <string>

namespace bsk {

Et0lSystem exp_sequence_system(const RecurrenceFit& fit, int k) {
  if (k < 2) throw InputError("exp_sequence_system: k must be at least 2");
  if (fit.r <= 0) throw InputError("exp_sequence_system: recurrence step r must be positive");
  long b0 = fit.r * fit.n_start + fit.c;
  if (b0 < 0)
    throw InputError("exp_sequence_system: initial b-exponent r*n_start + c is negative");
  for (char ch : fit.central_word)
    if (std::strchr("aAbB", ch) == nullptr)
      throw InputError("exp_sequence_system: central word letter outside a,A,b,B");
  long pad = fit.lambda < 0 ? -fit.lambda : 0;
  if (fit.s_start < pad)
    throw InputError("exp_sequence_system: s_start smaller than |lambda|");
  BigInt kr_big = pow(BigInt(k), static_cast<unsigned>(fit.r));
  if (kr_big > 1'000'000 || fit.s_start > 1'000'000 || b0 > 1'000'000)
    throw InputError("exp_sequence_system: parameters too large to materialize");
  long kr = kr_big.convert_to<long>();
  long s0 = fit.s_start.convert_to<long>();

  Et0lSystem sys;
  sys.k = k;
  Letter a = sys.add_letter("a", true);
  Letter A = sys.add_letter("A", true);
  Letter b = sys.add_letter("b", true);
  sys.add_letter("B", true);
  Letter S = sys.add_letter("S", false);
  Letter alpha = fit.alpha_negative ? A : a;

  // "grow" advances the family one index: r extra b's and a tail rescaled by
  // k^r.  A negative lambda cannot be appended directly, so |lambda| marker
  // letters each absorb a deficit of one: they emit k^r - 2 tail letters
  // instead of k^r and stand in for one tail letter themselves ("emit" turns
  // them back).  "emit" also places the constant central word.
  Word sim;
  sim.append(rep(b, fit.r));
  sim.push_back(static_cast<char>(S));
  if (fit.lambda > 0) sim.append(rep(alpha, fit.lambda));
  sys.table("grow").add(S, sim);
  sys.table("grow").add(alpha, rep(alpha, kr));
  Word wim;
  for (char ch : fit.central_word) wim.push_back(static_cast<char>(sys.letter(std::string(1, ch))));
  sys.table("emit").add(S, wim);
  if (pad > 0) {
    Letter mark = sys.add_letter("m", false);
    Word mim = rep(alpha, kr - 2);
    mim.push_back(static_cast<char>(mark));
    sys.table("grow").add(mark, mim);
    sys.table("emit").add(mark, rep(alpha, 1));
    sys.axiom = rep(b, b0);
    sys.axiom.push_back(static_cast<char>(S));
    sys.axiom.append(rep(alpha, s0 - pad));
    sys.axiom.append(rep(mark, pad));
  } else {
    sys.axiom = rep(b, b0);
    sys.axiom.push_back(static_cast<char>(S));
    sys.axiom.append(rep(alpha, s0));
  }
  sys.control = ce_cat({ce_star(ce_sym("grow")), ce_sym("emit")});
  return sys;
}

}  // namespace bsk
