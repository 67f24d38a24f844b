#include "bsk/combinators.hpp"
#include "bsk/constructions.hpp"
#include "bsk/control.hpp"
#include "bsk/normal_form.hpp"
#include "bsk/zk.hpp"

namespace bsk {

namespace {

// No conjugator exists: the empty language over the NF alphabet, with a
// control that accepts nothing so enumeration is vacuously exhaustive.
Et0lSystem empty_nf_system(int k) {
  Et0lSystem sys;
  sys.k = k;
  sys.add_letter("a", true);
  sys.add_letter("A", true);
  sys.add_letter("b", true);
  sys.add_letter("B", true);
  sys.control = ce_empty();
  return sys;
}

}  // namespace

Et0lSystem conjugator_system(int k, const GroupElement& g, const GroupElement& h) {
  if (g.k != k || h.k != k) throw InputError("mismatched arithmetic bases");
  std::optional<GroupElement> x0 = solve_conjugacy(g, h);
  if (!x0) return empty_nf_system(k);

  // Every solution of w h = g w is c x0 with c centralizing g, so the answer
  // language is the centralizer family translated on the right by x0.
  CentralizerGenerator cg = centralizer_generator(g);
  switch (cg.kind) {
    case CentralizerGenerator::Whole:
      // g = h = 1: every word conjugates.
      return regular_to_edt0l(nf_recognizer(k), k);
    case CentralizerGenerator::SubgroupN:
      // N x0 = all elements with the b-exponent of x0.
      return nf_fixed_r_system(k, x0->r);
    case CentralizerGenerator::Cyclic:
      break;
  }
  CentralizerPlan plan = cyclic_coset_plan(k, *cg.generator, *x0);
  Et0lSystem sys = regular_to_edt0l(plan.regular_part, k);
  for (const RecurrenceFit& fit : plan.recurrence_parts)
    sys = et0l_union(sys, exp_sequence_system(fit, k));
  return sys;
}

}  // namespace bsk
