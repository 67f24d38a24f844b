#include "bsk/constructions.hpp"

#include "bsk/combinators.hpp"
#include "bsk/control.hpp"
#include "bsk/nfa.hpp"

#include <string>
#include <vector>

namespace bsk {

namespace {

// Words with b-exponent r and a B-prefix (only possible when r < 0):
// B^{t'} c_m ... c_1 alpha^s with 1 <= t' <= |r|, where the c_i are digit
// components alpha^{d}B, exactly |r| - t' of them, the leftmost one nonzero,
// all over a single tail letter alpha in {a, A}.  Deterministic by
// construction so the converted system stays deterministic.
Nfa b_prefix_nfa(int R, int k) {
  Nfa n;
  n.symbols = {"a", "A", "b", "B"};
  const int sym_B = 3;
  std::vector<int> run(static_cast<size_t>(R) + 1);
  for (int j = 0; j <= R; ++j) run[static_cast<size_t>(j)] = n.add_state();
  for (int j = 1; j <= R; ++j)
    n.add_edge(run[static_cast<size_t>(j - 1)], sym_B, run[static_cast<size_t>(j)]);
  n.accept[static_cast<size_t>(run[static_cast<size_t>(R)])] = true;
  for (int sym_alpha : {0, 1}) {
    // between[c]: c components still to read, none currently open.
    // between[0] doubles as the integer tail and is the accepting state.
    // inside[c][d]: the current component (one of c still open) has d digit
    // letters so far; components hold at most k-1 of them.
    std::vector<int> between(static_cast<size_t>(std::max(R - 1, 1)));
    between[0] = n.add_state();
    n.accept[static_cast<size_t>(between[0])] = true;
    n.add_edge(between[0], sym_alpha, between[0]);
    for (int c = 1; c <= R - 2; ++c) between[static_cast<size_t>(c)] = n.add_state();
    std::vector<std::vector<int>> inside(static_cast<size_t>(R));
    for (int c = 1; c < R; ++c) {
      auto& row = inside[static_cast<size_t>(c)];
      row.resize(static_cast<size_t>(k));
      for (int d = 1; d < k; ++d) row[static_cast<size_t>(d)] = n.add_state();
      for (int d = 1; d + 1 < k; ++d)
        n.add_edge(row[static_cast<size_t>(d)], sym_alpha, row[static_cast<size_t>(d + 1)]);
      for (int d = 1; d < k; ++d)
        n.add_edge(row[static_cast<size_t>(d)], sym_B, between[static_cast<size_t>(c - 1)]);
    }
    for (int c = 1; c <= R - 2; ++c) {
      n.add_edge(between[static_cast<size_t>(c)], sym_alpha, inside[static_cast<size_t>(c)][1]);
      n.add_edge(between[static_cast<size_t>(c)], sym_B, between[static_cast<size_t>(c - 1)]);
    }
    // After j B's there are |r| - j components left; entering on a digit
    // letter opens the leftmost one, which is thereby nonzero.
    for (int j = 1; j < R; ++j)
      n.add_edge(run[static_cast<size_t>(j)], sym_alpha, inside[static_cast<size_t>(R - j)][1]);
    n.add_edge(run[static_cast<size_t>(R)], sym_alpha, between[0]);
  }
  return n;
}

}  // namespace

Et0lSystem nf_fixed_r_system(int k, long r) {
  if (k < 2) throw InputError("nf_fixed_r_system: k must be at least 2");
  Et0lSystem sys;
  sys.k = k;
  Letter a = sys.add_letter("a", true);
  Letter A = sys.add_letter("A", true);
  Letter b = sys.add_letter("b", true);
  Letter B = sys.add_letter("B", true);
  Letter S = sys.add_letter("S", false);
  Letter T = sys.add_letter("T", false);
  sys.axiom = Word();
  sys.axiom.push_back(static_cast<char>(S));
  sys.axiom.push_back(static_cast<char>(T));

  // Digit components grow inward next to S, so the last push writes the
  // leftmost (most significant) component; the control bans a zero there.
  // "push_<alpha><d>" raises the b-run and adds component d, "app_<alpha><d>"
  // adds component d without a b, "pushb" is a bare b, "tail_<alpha>" extends
  // the integer part, and "finish" drops the scaffolding.
  const Letter alpha_letter[2] = {a, A};
  const char* alpha_name[2] = {"a", "A"};
  std::vector<ControlExpr> branches;
  for (int s = 0; s < 2; ++s) {
    std::vector<ControlExpr> pushes;
    for (int d = 0; d < k; ++d) {
      std::string id = std::string("push_") + alpha_name[s] + std::to_string(d);
      Word im;
      im.push_back(static_cast<char>(b));
      im.push_back(static_cast<char>(S));
      im.append(rep(alpha_letter[s], d));
      im.push_back(static_cast<char>(B));
      sys.table(id).add(S, im);
      pushes.push_back(ce_sym(id));
    }
    std::string tail_id = std::string("tail_") + alpha_name[s];
    Word tail_im;
    tail_im.push_back(static_cast<char>(T));
    tail_im.push_back(static_cast<char>(alpha_letter[s]));
    sys.table(tail_id).add(T, tail_im);

    ControlExpr head;
    if (r >= 0) {
      head = ce_pow(ce_sym("pushb"), static_cast<int>(r));
    } else {
      std::vector<ControlExpr> apps;
      for (int d = 0; d < k; ++d) {
        std::string id = std::string("app_") + alpha_name[s] + std::to_string(d);
        Word im;
        im.push_back(static_cast<char>(S));
        im.append(rep(alpha_letter[s], d));
        im.push_back(static_cast<char>(B));
        sys.table(id).add(S, im);
        apps.push_back(ce_sym(id));
      }
      head = ce_pow(ce_union(apps), static_cast<int>(-r));
    }
    ControlExpr all_pushes = ce_star(ce_union(pushes));
    ControlExpr zero_last =
        ce_cat({ce_star(ce_union(pushes)), ce_sym(std::string("push_") + alpha_name[s] + "0")});
    branches.push_back(ce_cat({head, ce_diff(all_pushes, zero_last), ce_star(ce_sym(tail_id)),
                               ce_sym("finish")}));
  }
  if (r >= 0) {
    Word im;
    im.push_back(static_cast<char>(b));
    im.push_back(static_cast<char>(S));
    sys.table("pushb").add(S, im);
  }
  sys.table("finish").add(S, Word());
  sys.table("finish").add(T, Word());
  sys.control = ce_union(branches);

  if (r >= 0) return sys;
  return et0l_union(sys, regular_to_edt0l(b_prefix_nfa(static_cast<int>(-r), k), k));
}

}  // namespace bsk
