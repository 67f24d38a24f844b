#include "bsk/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace bsk {

namespace {

// Per-table execution view: image lists, image terminal counts, and the
// minimum terminal count reachable per letter (for exact prune decisions
// without materializing every child).
struct TableExec {
  std::vector<const std::vector<Word>*> images;  // per letter, null = fixed
  std::vector<std::vector<long>> tcounts;        // per letter, per image
  std::vector<long> min_tc;                      // per letter
};

std::vector<TableExec> build_exec(const Et0lSystem& sys) {
  std::vector<TableExec> out;
  int n = sys.num_letters();
  for (const auto& t : sys.tables) {
    TableExec te;
    te.images.assign(n, nullptr);
    te.tcounts.resize(n);
    te.min_tc.resize(n);
    for (int l = 0; l < n; ++l) te.min_tc[l] = sys.terminal[l] ? 1 : 0;
    for (const auto& [l, imgs] : t.rules) {
      te.images[l] = &imgs;
      long mn = -1;
      for (const auto& im : imgs) {
        long tc = sys.terminal_count(im);
        te.tcounts[l].push_back(tc);
        if (mn < 0 || tc < mn) mn = tc;
      }
      te.min_tc[l] = mn;
    }
    out.push_back(std::move(te));
  }
  return out;
}

long row_sum(const std::vector<long>& row, const Word& w, long cap) {
  long s = 0;
  for (char ch : w) {
    s += row[static_cast<Letter>(ch)];
    if (s >= cap) return cap;
  }
  return s;
}

// future_minima[state][letter]: exact lower bound on how many terminal
// letters one occurrence of the letter must contribute to any final word,
// minimized over every accepted continuation of the control run.  A letter
// either stops here (accepting state, terminal letter: exactly itself) or is
// rewritten by an enabled table and continues from the successor state with
// its cheapest image.  Computed by downward Kleene iteration of that min-plus
// recurrence from all-cap; values saturate at cap, so cap reads "more than
// any bound of interest".  Summing the entries of a form gives a sound prune:
// per-letter minimization over control paths only underestimates the joint
// derivation, so a sum above the bound proves no in-bound word is reachable.
std::vector<std::vector<long>> future_minima(const Et0lSystem& sys, const ControlAutomaton& ca,
                                             const std::vector<TableExec>& exec, long cap) {
  int nq = ca.dfa.num_states();
  int nl = sys.num_letters();
  std::vector<std::vector<long>> fm(static_cast<size_t>(nq),
                                    std::vector<long>(static_cast<size_t>(nl), cap));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int q = 0; q < nq; ++q) {
      if (ca.dead(q)) continue;
      for (int l = 0; l < nl; ++l) {
        long best = ca.accepting(q) && sys.terminal[static_cast<size_t>(l)] ? 1 : cap;
        for (size_t ti = 0; ti < sys.tables.size() && best > 0; ++ti) {
          int q2 = ca.next(q, static_cast<int>(ti));
          if (ca.dead(q2)) continue;
          const auto& row = fm[static_cast<size_t>(q2)];
          const TableExec& te = exec[ti];
          if (te.images[l])
            for (const Word& im : *te.images[l]) best = std::min(best, row_sum(row, im, cap));
          else
            best = std::min(best, row[static_cast<size_t>(l)]);
        }
        auto& cell = fm[static_cast<size_t>(q)][static_cast<size_t>(l)];
        if (best < cell) {
          cell = best;
          changed = true;
        }
      }
    }
  }
  return fm;
}

// Expands one (form, table) pair.  Emits every child kept by the pruning
// rules; sets *exhaustive = false exactly when a child with terminal count
// within tbound had to be dropped for length.
struct Expander {
  const TableExec& te;
  const Word& w;
  long tbound, hard;
  bool* exhaustive;
  // Future-aware accounting (BFS mode): per-letter future minima at the
  // successor control state — fstep bounds letters this application has not
  // yet rewritten, ffut prices letters already materialized in the child.
  // Null pointers fall back to plain one-step terminal counts.
  const std::vector<long>* fstep = nullptr;
  const std::vector<long>* ffut = nullptr;
  std::vector<long> smt;  // suffix minimal remaining contribution
  Word buf;

  long fixed_weight(Letter l) const { return ffut ? (*ffut)[l] : te.min_tc[l]; }
  long image_weight(Letter l, size_t c) const {
    if (!ffut) return te.tcounts[l][c];
    long s = 0;
    for (char ch : (*te.images[l])[c]) s += (*ffut)[static_cast<Letter>(ch)];
    return s;
  }

  template <typename Emit>
  void run(Emit&& emit) {
    smt.assign(w.size() + 1, 0);
    for (size_t i = w.size(); i-- > 0;) {
      Letter l = static_cast<Letter>(w[i]);
      smt[i] = smt[i + 1] + (fstep ? (*fstep)[l] : te.min_tc[l]);
    }
    buf.clear();
    step(0, 0, emit);
  }

  template <typename Emit>
  void step(size_t i, long tcount, Emit&& emit) {
    for (;;) {
      if (tcount + smt[i] > tbound) return;  // silent: every completion exceeds the bound
      if (static_cast<long>(buf.size()) > hard) {
        *exhaustive = false;  // a still-relevant child was cut for length
        return;
      }
      if (i == w.size()) {
        emit(buf);
        return;
      }
      Letter l = static_cast<Letter>(w[i]);
      if (!te.images[l]) {
        buf += static_cast<char>(l);
        tcount += fixed_weight(l);
        ++i;
        continue;
      }
      const auto& imgs = *te.images[l];
      if (imgs.size() == 1) {
        buf += imgs[0];
        tcount += image_weight(l, 0);
        ++i;
        continue;
      }
      size_t mark = buf.size();
      for (size_t c = 0; c < imgs.size(); ++c) {
        buf += imgs[c];
        step(i + 1, tcount + image_weight(l, c), emit);
        buf.resize(mark);
      }
      return;
    }
  }
};

// Terminal segments of the form must appear in the target, in order, with
// the first/last anchored when the form starts/ends with a terminal.  Sound
// only when no table rewrites terminals.
bool embeds(const Et0lSystem& sys, const Word& form, const Word& target) {
  std::vector<Word> segs;
  bool prefix_anchor = false, suffix_anchor = false;
  Word cur;
  for (size_t i = 0; i < form.size(); ++i) {
    if (sys.terminal[static_cast<Letter>(form[i])]) {
      if (i == 0) prefix_anchor = true;
      cur += form[i];
    } else {
      if (!cur.empty()) segs.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) {
    segs.push_back(std::move(cur));
    suffix_anchor = true;
  }
  if (form.empty()) return target.empty();
  if (segs.empty()) return true;
  size_t pos = 0;
  size_t last = segs.size() - 1;
  for (size_t s = 0; s < segs.size(); ++s) {
    const Word& seg = segs[s];
    bool is_first = s == 0, is_last = s == last;
    if (is_last && suffix_anchor) {
      if (seg.size() > target.size()) return false;
      size_t at = target.size() - seg.size();
      if (at < pos) return false;
      return target.compare(at, seg.size(), seg) == 0;
    }
    if (is_first && prefix_anchor) {
      if (target.compare(0, seg.size(), seg) != 0) return false;
      pos = seg.size();
    } else {
      size_t at = target.find(seg, pos);
      if (at == Word::npos) return false;
      pos = at + seg.size();
    }
  }
  return true;
}

struct Bfs {
  const Et0lSystem& sys;
  ControlAutomaton ca;
  std::vector<TableExec> exec;
  long tbound, hard, depth_cap;
  bool exhaustive = true;
  std::uint64_t explored = 0;

  std::unordered_set<std::string> seen;
  std::vector<std::string> keys;                 // 4-byte state + form
  std::vector<std::pair<int, int>> parent;       // (node, table) or (-1, -1)
  std::vector<int> frontier, next_frontier;

  const Word* target = nullptr;  // membership mode
  bool use_embedding = false;

  // Future minima per control state, and per (table, successor state) the
  // same bound taken one table application early.  use_future is cleared
  // only for membership targets that are not all-terminal, where "final
  // form" no longer means "all letters stopped as terminals".
  std::vector<std::vector<long>> fmin;
  std::vector<std::vector<std::vector<long>>> fstep;
  bool use_future = true;

  Bfs(const Et0lSystem& s, const EnumerationParams& p, long terminal_bound)
      : sys(s), ca(compile_control(s)), exec(build_exec(s)) {
    tbound = terminal_bound;
    hard = p.slack * terminal_bound + p.slack;
    depth_cap = p.max_control_depth;
    long cap = tbound + 1;
    fmin = future_minima(sys, ca, exec, cap);
    int nl = sys.num_letters();
    fstep.assign(sys.tables.size(), {});
    for (size_t ti = 0; ti < sys.tables.size(); ++ti) {
      fstep[ti].assign(fmin.size(), {});
      const TableExec& te = exec[ti];
      for (size_t q2 = 0; q2 < fmin.size(); ++q2) {
        if (ca.dead(static_cast<int>(q2))) continue;
        const auto& row = fmin[q2];
        auto& out = fstep[ti][q2];
        out.assign(static_cast<size_t>(nl), cap);
        for (int l = 0; l < nl; ++l) {
          if (te.images[l]) {
            long best = cap;
            for (const Word& im : *te.images[l]) best = std::min(best, row_sum(row, im, cap));
            out[static_cast<size_t>(l)] = best;
          } else {
            out[static_cast<size_t>(l)] = row[static_cast<size_t>(l)];
          }
        }
      }
    }
  }

  long future_min(int state, const Word& form) const {
    return row_sum(fmin[static_cast<size_t>(state)], form, tbound + 1);
  }

  static std::string make_key(int state, const Word& form) {
    std::string k;
    k.reserve(4 + form.size());
    for (int i = 0; i < 4; ++i) k += static_cast<char>((state >> (8 * i)) & 0xff);
    k += form;
    return k;
  }

  int add_node(int state, const Word& form, int par, int table) {
    std::string key = make_key(state, form);
    if (!seen.insert(key).second) return -1;
    keys.push_back(std::move(key));
    parent.emplace_back(par, table);
    ++explored;
    return static_cast<int>(keys.size()) - 1;
  }

  Word form_of(int node) const { return keys[static_cast<size_t>(node)].substr(4); }
  int state_of(int node) const {
    int s = 0;
    for (int i = 0; i < 4; ++i)
      s |= (static_cast<unsigned char>(keys[static_cast<size_t>(node)][static_cast<size_t>(i)]))
           << (8 * i);
    return s;
  }

  std::vector<std::string> witness_of(int node) const {
    std::vector<std::string> w;
    while (node >= 0) {
      auto [par, tab] = parent[static_cast<size_t>(node)];
      if (tab >= 0) w.push_back(sys.tables[static_cast<size_t>(tab)].id);
      node = par;
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  // visit(node, state, form) is called once per new node; returns true to
  // stop the whole search (membership hit).
  template <typename Visit>
  void run(Visit&& visit) {
    bool axiom_relevant = static_cast<long>(sys.terminal_count(sys.axiom)) <= tbound &&
                          (!use_future || future_min(ca.start(), sys.axiom) <= tbound);
    if (axiom_relevant && static_cast<long>(sys.axiom.size()) <= hard) {
      int root = add_node(ca.start(), sys.axiom, -1, -1);
      if (root >= 0) {
        if (visit(root, ca.start(), sys.axiom)) return;
        frontier.push_back(root);
      }
    } else if (axiom_relevant) {
      exhaustive = false;  // axiom itself over the hard cap
    }
    for (long depth = 0; depth < depth_cap && !frontier.empty(); ++depth) {
      next_frontier.clear();
      for (int node : frontier) {
        Word form = form_of(node);
        int state = state_of(node);
        for (size_t ti = 0; ti < sys.tables.size(); ++ti) {
          int s2 = ca.next(state, static_cast<int>(ti));
          if (ca.dead(s2)) continue;
          const std::vector<long>* step_row =
              use_future ? &fstep[ti][static_cast<size_t>(s2)] : nullptr;
          const std::vector<long>* fut_row = use_future ? &fmin[static_cast<size_t>(s2)] : nullptr;
          Expander ex{exec[ti], form, tbound, hard, &exhaustive, step_row, fut_row, {}, {}};
          bool stop = false;
          ex.run([&](const Word& child) {
            if (stop) return;
            if (use_embedding && target && !embeds(sys, child, *target)) return;
            int id = add_node(s2, child, node, static_cast<int>(ti));
            if (id < 0) return;
            if (visit(id, s2, child)) {
              stop = true;
              return;
            }
            next_frontier.push_back(id);
          });
          if (stop) return;
        }
      }
      frontier.swap(next_frontier);
    }
    if (!frontier.empty()) exhaustive = false;  // depth cap hit with work left
  }
};

}  // namespace

EnumerationResult enumerate_system(const Et0lSystem& sys, const EnumerationParams& p) {
  Bfs bfs(sys, p, p.max_word_len);
  EnumerationResult res;
  std::map<std::string, std::vector<std::string>> found;
  bfs.run([&](int node, int state, const Word& form) {
    if (bfs.ca.accepting(state) && sys.all_terminal(form) &&
        static_cast<long>(form.size()) <= p.max_word_len) {
      std::string disp = sys.display(form);
      if (!found.count(disp)) found[disp] = bfs.witness_of(node);
    }
    return false;
  });
  res.exhaustive_up_to_len = bfs.exhaustive;
  res.states_explored = bfs.explored;
  for (auto& [w, wit] : found) res.words.push_back(w);
  std::sort(res.words.begin(), res.words.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  res.witnesses = std::move(found);
  return res;
}

MembershipResult check_membership(const Et0lSystem& sys, const Word& target,
                                  const EnumerationParams& p) {
  Bfs bfs(sys, p, static_cast<long>(target.size()));
  bfs.target = &target;
  bfs.use_embedding = sys.validate().terminal_inert;
  bfs.use_future = sys.all_terminal(target);
  MembershipResult res;
  bfs.run([&](int node, int state, const Word& form) {
    if (bfs.ca.accepting(state) && form == target) {
      res.member = true;
      res.witness = bfs.witness_of(node);
      return true;
    }
    return false;
  });
  res.exhaustive = bfs.exhaustive;
  res.states_explored = bfs.explored;
  return res;
}

bool replay_witness(const Et0lSystem& sys, const std::vector<std::string>& control_word,
                    const Word& target, long slack) {
  ControlAutomaton ca = compile_control(sys);
  int state = ca.start();
  std::vector<int> table_of;
  for (const auto& id : control_word) {
    int ti = -1;
    for (size_t i = 0; i < sys.tables.size(); ++i)
      if (sys.tables[i].id == id) ti = static_cast<int>(i);
    if (ti < 0) return false;
    table_of.push_back(ti);
    state = ca.next(state, ti);
  }
  if (!ca.accepting(state)) return false;

  auto exec = build_exec(sys);
  bool inert = sys.validate().terminal_inert;
  long tbound = static_cast<long>(target.size());
  long hard = slack * tbound + slack;
  bool ignored = true;
  std::unordered_set<Word> forms{sys.axiom};
  for (int ti : table_of) {
    std::unordered_set<Word> next;
    for (const Word& f : forms) {
      Expander ex{exec[static_cast<size_t>(ti)], f, tbound, hard, &ignored,
                  nullptr,                       nullptr, {}, {}};
      ex.run([&](const Word& child) {
        if (!inert || embeds(sys, child, target)) next.insert(child);
      });
    }
    forms.swap(next);
    if (forms.empty()) return false;
  }
  return forms.count(target) != 0;
}

}  // namespace bsk
