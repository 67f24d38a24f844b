#include "bsk/constructions.hpp"

#include "bsk/combinators.hpp"
#include "bsk/control.hpp"

#include <string>
#include <vector>

namespace bsk {

namespace {

void push(Word& w, Letter l) { w.push_back(static_cast<char>(l)); }

// { a # b^t a^s # b^t a^{s+k^t} }: the marker x tracks the shared b-run and
// the insertion point for a^s in both parts; the axiom's trailing a is the
// carry, rescaled to a^{k^t} by "lift".
Et0lSystem lm_add_system(int k) {
  Et0lSystem sys;
  sys.k = k;
  Letter a = sys.add_letter("a", true);
  Letter b = sys.add_letter("b", true);
  Letter h = sys.add_letter("#", true);
  Letter T = sys.add_letter("T", false);
  Letter x = sys.add_letter("x", false);
  push(sys.axiom, T);
  push(sys.axiom, h);
  push(sys.axiom, x);
  push(sys.axiom, h);
  push(sys.axiom, x);
  push(sys.axiom, a);

  Word bx;
  push(bx, b);
  push(bx, x);
  sys.table("lift").add(x, bx);
  sys.table("lift").add(a, rep(a, k));
  sys.table("start").add(T, rep(a, 1));
  Word ax;
  push(ax, a);
  push(ax, x);
  sys.table("pad").add(x, ax);
  sys.table("drop").add(x, Word());
  sys.control = ce_cat({ce_star(ce_sym("lift")), ce_sym("start"), ce_star(ce_sym("pad")),
                        ce_sym("drop")});
  return sys;
}

// { a # b^t A^{k^t + s'} # b^t A^{s'} }: y tracks the b-run, the axiom's A is
// rescaled to A^{k^t}, and X marks where A^{s'} goes in both parts.
Et0lSystem lm_sub_system(int k) {
  Et0lSystem sys;
  sys.k = k;
  Letter a = sys.add_letter("a", true);
  Letter A = sys.add_letter("A", true);
  Letter b = sys.add_letter("b", true);
  Letter h = sys.add_letter("#", true);
  Letter T = sys.add_letter("T", false);
  Letter y = sys.add_letter("y", false);
  Letter X = sys.add_letter("X", false);
  push(sys.axiom, T);
  push(sys.axiom, h);
  push(sys.axiom, y);
  push(sys.axiom, A);
  push(sys.axiom, X);
  push(sys.axiom, h);
  push(sys.axiom, y);
  push(sys.axiom, X);

  Word by;
  push(by, b);
  push(by, y);
  sys.table("lift").add(y, by);
  sys.table("lift").add(A, rep(A, k));
  sys.table("start").add(T, rep(a, 1));
  sys.table("start").add(y, Word());
  Word AX;
  push(AX, A);
  push(AX, X);
  sys.table("pad").add(X, AX);
  sys.table("drop").add(X, Word());
  sys.control = ce_cat({ce_star(ce_sym("lift")), ce_sym("start"), ce_star(ce_sym("pad")),
                        ce_sym("drop")});
  return sys;
}

// { a # b^t A^s # b^t a^{k^t - s} : 0 < s < k^t }: base-k borrowing.  Each
// step rewrites every X into X^k plus this step's digit of s (as A's) and
// every x into x^k plus the complementary digit of k^t - s (as a's); the
// k-fold parallelism gives each step's emission its positional weight.  The
// borrow pivot is the lowest nonzero digit: below it digits are 0 and the
// complement is 0, at it the complement is k - d, above it k - d - 1.
Et0lSystem lm_borrow_system(int k) {
  Et0lSystem sys;
  sys.k = k;
  Letter a = sys.add_letter("a", true);
  Letter A = sys.add_letter("A", true);
  Letter b = sys.add_letter("b", true);
  Letter h = sys.add_letter("#", true);
  Letter X = sys.add_letter("X", false);
  Letter x = sys.add_letter("x", false);
  push(sys.axiom, a);
  push(sys.axiom, h);
  push(sys.axiom, X);
  push(sys.axiom, h);
  push(sys.axiom, x);

  Word hb;
  push(hb, h);
  push(hb, b);
  auto step = [&](const std::string& id, int digit, int comp) {
    Table& t = sys.table(id);
    t.add(h, hb);
    Word Xi = rep(X, k);
    Xi.append(rep(A, digit));
    t.add(X, Xi);
    Word xi = rep(x, k);
    xi.append(rep(a, comp));
    t.add(x, xi);
  };
  step("dig0", 0, 0);
  std::vector<ControlExpr> pivs, his;
  for (int d = 1; d < k; ++d) {
    step("piv" + std::to_string(d), d, k - d);
    pivs.push_back(ce_sym("piv" + std::to_string(d)));
  }
  for (int d = 0; d < k; ++d) {
    step("hi" + std::to_string(d), d, k - d - 1);
    his.push_back(ce_sym("hi" + std::to_string(d)));
  }
  sys.table("drop").add(X, Word());
  sys.table("drop").add(x, Word());
  sys.control = ce_cat({ce_star(ce_sym("dig0")), ce_union(pivs), ce_star(ce_union(his)),
                        ce_sym("drop")});
  return sys;
}

}  // namespace

Et0lSystem left_mult_a_system(int k) {
  if (k < 2) throw InputError("left_mult_a_system: k must be at least 2");
  return et0l_union(et0l_union(lm_add_system(k), lm_sub_system(k)), lm_borrow_system(k));
}

}  // namespace bsk
