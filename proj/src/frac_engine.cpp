#include "bsk/constructions.hpp"

#include "bsk/control.hpp"
#include "bsk/nfa.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

// Fractional-form triple systems.  One system covers one sign case; inside
// it, one machine ("lane") per zero-pattern of the three u parts.  A lane
// derives the triple left to right in lockstep: every digit table advances
// all three fractional forms by one digit position (low to high), computing
// z's digit from x's, y's and the carry, which lives in the control state.
// Each word's form is a window P s F . I — insertion point for the b/B
// prefix, sign, fractional digits, point, integer digits — whose markers are
// consumed as the sweep passes them.  Crossing a word's point is a dedicated
// table; the offsets between the three crossings, together with one prefix
// letter inserted per step of the in-between phases, are what tie the
// b-exponents to the digit alignment.  A table applied outside its intended
// window state leaves the poison letter Z behind, which no table rewrites,
// so such derivations can never finish.

namespace bsk {

namespace {

// ---------------------------------------------------------------- classes

bool rsign_ok(RSign s, long long v) { return s == RSign::nonneg ? v >= 0 : v < 0; }

bool usign_ok(USign s, int sgn) {
  switch (s) {
    case USign::nonneg: return sgn >= 0;
    case USign::nonpos: return sgn <= 0;
    case USign::pos: return sgn > 0;
    case USign::neg: return sgn < 0;
  }
  return false;
}

bool zero_compatible(USign s) { return s == USign::nonneg || s == USign::nonpos; }
bool displays_plus(USign s) { return s == USign::nonneg || s == USign::pos; }

USign u_flip(USign s) {
  switch (s) {
    case USign::nonneg: return USign::nonpos;
    case USign::nonpos: return USign::nonneg;
    case USign::pos: return USign::neg;
    case USign::neg: return USign::pos;
  }
  return s;
}

const char* usign_str(USign s) {
  switch (s) {
    case USign::nonneg: return ">=0";
    case USign::nonpos: return "<=0";
    case USign::pos: return ">0";
    case USign::neg: return "<0";
  }
  return "?";
}

// ------------------------------------------------------------- arithmetic

// How z's digit magnitude relates to x's and y's: |u_x| and |u_y| add when
// the parts share a sign, otherwise the larger side subtracts the smaller.
enum class MagOp { add, sub_xy, sub_yx };

MagOp case_op(const SignCase& c) {
  bool same = (c.ux == USign::nonneg && c.uy == USign::nonneg) ||
              (c.ux == USign::nonpos && c.uy == USign::nonpos);
  if (same) return MagOp::add;
  // Mixed strict signs; the combined value's class is uz for multiplication
  // and the opposite of uz for inversion.
  USign sum = c.variant == FracVariant::multiplication ? c.uz : u_flip(c.uz);
  bool sum_nonneg = displays_plus(sum);
  if (c.ux == USign::pos) return sum_nonneg ? MagOp::sub_xy : MagOp::sub_yx;
  return sum_nonneg ? MagOp::sub_yx : MagOp::sub_xy;
}

// One digit position: (dz, carry out).  Subtraction borrows instead of
// carrying; the directions keep the result in 0..k-1.
std::pair<int, int> mag_step(MagOp op, int k, int dx, int dy, int c) {
  int t;
  switch (op) {
    case MagOp::add: t = dx + dy + c; return {t % k, t / k};
    case MagOp::sub_xy: t = dx - dy - c; break;
    default: t = dy - dx - c; break;
  }
  return {((t % k) + k) % k, t < 0 ? 1 : 0};
}

// ------------------------------------------------------------------ lanes

// Zero patterns: a frozen word is pinned to u = 0 (it never emits digits and
// shows sign +), which is how a '-'-classed word's zero value is reached.
// Only nonpos-classed words need that; a nonneg-classed word can show zero
// live.  When magnitudes add, u_z = 0 forces and is forced by
// u_x = u_y = 0, so those freezes travel together.
std::vector<std::array<bool, 3>> lane_list(const SignCase& c, MagOp op) {
  std::array<USign, 3> cls{c.ux, c.uy, c.uz};
  std::vector<int> np;
  for (int i = 0; i < 3; ++i)
    if (cls[i] == USign::nonpos) np.push_back(i);
  std::set<std::array<bool, 3>> seen;
  std::vector<std::array<bool, 3>> out;
  for (unsigned mask = 0; mask < (1u << np.size()); ++mask) {
    std::array<bool, 3> f{false, false, false};
    for (size_t i = 0; i < np.size(); ++i)
      if (mask >> i & 1) f[static_cast<size_t>(np[i])] = true;
    if (op == MagOp::add) {
      if (f[2]) f[0] = f[1] = true;
      if (f[0] && f[1]) f[2] = true;
      bool ok = true;
      for (int i = 0; i < 3; ++i)
        if (f[static_cast<size_t>(i)] && !zero_compatible(cls[static_cast<size_t>(i)])) ok = false;
      if (!ok) continue;
    }
    if (seen.insert(f).second) out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------- builder

enum class Mode { frac, integer };

// Window letters of one word: prefix insertion point (pre/in), fractional
// digit marker (fpre/fin), integer digit marker (ipre/iin), done.
struct Win {
  char pre, pin, fpre, fin, ipre, iin, done;
};

constexpr Win kWin[3] = {
    {'P', 'p', 'E', 'e', 'I', 'i', 'U'},
    {'Q', 'q', 'F', 'f', 'J', 'j', 'V'},
    {'R', 'r', 'G', 'g', 'K', 'k', 'W'},
};

// A digit-step action of x or y: contribute nothing, emit/continue with
// digit d, or emit the final (top, nonzero) integer digit d.
struct Act {
  bool skip = false;
  bool last = false;
  int d = 0;
};

struct Phase {
  std::array<Mode, 3> mode{Mode::frac, Mode::frac, Mode::frac};
  bool first = false;
  std::vector<std::pair<int, char>> fixed_ins;     // (word, letter) every step
  std::vector<std::pair<int, char>> partner_opts;  // multiplication P2: pick one
};

struct DigitRec {
  int phase, cin, cout, partner;  // partner: -1 none, else word index
};

struct CrossRec {
  int ev;
};

class FracBuilder {
 public:
  FracBuilder(int k, const SignCase& c) : k_(k), c_(c), op_(case_op(c)) {}

  Et0lSystem build() {
    sys_.k = k_;
    intern_letters();
    sys_.axiom = word("S");
    auto lanes = lane_list(c_, op_);
    std::vector<ControlExpr> exprs;
    for (size_t i = 0; i < lanes.size(); ++i)
      exprs.push_back(build_lane("l" + std::to_string(i), lanes[i]));
    sys_.control = ce_union(std::move(exprs));
    return sys_;
  }

 private:
  int k_;
  SignCase c_;
  MagOp op_;
  Et0lSystem sys_;
  std::map<char, Letter> let_;

  // Per-lane bookkeeping, reset by build_lane.
  std::array<bool, 3> frozen_{};
  std::vector<std::string> syms_;
  std::map<std::string, int> sym_idx_;
  std::vector<std::pair<std::string, DigitRec>> digits_;
  std::vector<std::pair<std::string, CrossRec>> crossings_;
  std::string sigma_id_, tail_id_, fin_id_;

  bool mult() const { return c_.variant == FracVariant::multiplication; }
  bool rx_nn() const { return c_.rx == RSign::nonneg; }
  bool ry_nn() const { return c_.ry == RSign::nonneg; }
  bool rsum_nn() const { return c_.rsum == RSign::nonneg; }

  void intern_letters() {
    auto add = [&](char ch, bool term) { let_[ch] = sys_.add_letter(std::string(1, ch), term); };
    for (int d = 0; d < k_; ++d) add(static_cast<char>('0' + d), true);
    add('+', true);
    add('-', true);
    add('.', true);
    add('#', true);
    add('b', true);
    add('B', true);
    add('S', false);
    for (const Win& w : kWin) {
      add(w.pre, false);
      add(w.pin, false);
      add(w.fpre, false);
      add(w.fin, false);
      add(w.ipre, false);
      add(w.iin, false);
      add(w.done, false);
    }
    add('Z', false);
  }

  Word word(const std::string& chars) {
    Word w;
    for (char ch : chars) w.push_back(static_cast<char>(let_.at(ch)));
    return w;
  }

  using Rules = std::vector<std::pair<char, std::string>>;

  void add_table(const std::string& id, const Rules& rules) {
    for (const auto& [ch, img] : rules) sys_.table(id).add(let_.at(ch), word(img));
    if (rules.empty()) sys_.table(id);  // materialize even when identity-only
    sym_idx_[id] = static_cast<int>(syms_.size());
    syms_.push_back(id);
  }

  // Digit-step rules of a live word in the given mode.
  static void act_rules(const Win& w, Mode m, const Act& a, Rules& out) {
    if (m == Mode::frac) {
      if (a.skip) {
        out.push_back({w.fin, "Z"});  // a gap inside the digit block: dead
        return;
      }
      char d = static_cast<char>('0' + a.d);
      if (a.d == 0)
        out.push_back({w.fpre, "Z"});  // lowest fractional digit must be nonzero
      else
        out.push_back({w.fpre, std::string{d, w.fin}});
      out.push_back({w.fin, std::string{d, w.fin}});
      return;
    }
    if (a.skip) {
      out.push_back({w.iin, "Z"});  // only legal once the word is done
      return;
    }
    char d = static_cast<char>('0' + a.d);
    out.push_back({w.iin, std::string{d, a.last ? w.done : w.iin}});
    out.push_back({w.done, "Z"});  // nothing may follow the top digit
  }

  // z's digit-step rules; z never skips, and its leading fractional zeros
  // and trailing integer zeros are suppressed by leaving the marker alone.
  static void z_rules(const Win& w, Mode m, int dz, bool last, Rules& out) {
    char d = static_cast<char>('0' + dz);
    if (m == Mode::frac) {
      if (dz != 0) out.push_back({w.fpre, std::string{d, w.fin}});
      out.push_back({w.fin, std::string{d, w.fin}});
      return;
    }
    if (last) {
      out.push_back({w.iin, std::string{d, w.done}});
      out.push_back({w.done, "Z"});
      return;
    }
    out.push_back({w.iin, std::string{d, w.iin}});
    if (dz != 0) out.push_back({w.done, "Z"});
  }

  static void insert_rules(const Win& w, char beta, Rules& out) {
    out.push_back({w.pre, std::string{beta, w.pin}});
    out.push_back({w.pin, std::string{beta, w.pin}});
  }

  std::vector<Act> actions(int wi, Mode m) const {
    std::vector<Act> out{{true, false, 0}};
    if (frozen_[static_cast<size_t>(wi)]) return out;
    for (int d = 0; d < k_; ++d) out.push_back({false, false, d});
    if (m == Mode::integer)
      for (int d = 1; d < k_; ++d) out.push_back({false, true, d});
    return out;
  }

  static std::string act_tag(char w, const Act& a) {
    if (a.skip) return std::string{w, 's'};
    std::string t{w};
    if (a.last) t += 'f';
    t += static_cast<char>('0' + a.d);
    return t;
  }

  char class_letter(int wi) const {
    if (wi == 0) return rx_nn() ? 'b' : 'B';
    if (wi == 1) return ry_nn() ? 'b' : 'B';
    return mult() ? '\0' : (rsum_nn() ? 'B' : 'b');  // z = (xy)^-1 flips r_x+r_y
  }

  USign word_class(int wi) const { return wi == 0 ? c_.ux : wi == 1 ? c_.uy : c_.uz; }

  // --------------------------------------------------------------- tables

  void make_sigma(const std::string& pfx) {
    auto sign = [&](int wi) {
      return frozen_[static_cast<size_t>(wi)] ? '+' : displays_plus(word_class(wi)) ? '+' : '-';
    };
    std::string skel;
    for (int wi = 0; wi < 3; ++wi) {
      if (wi) skel += '#';
      const Win& w = kWin[wi];
      skel += w.pre;
      skel += sign(wi);
      skel += w.fpre;
      skel += '.';
      skel += w.ipre;
    }
    sigma_id_ = pfx + "_sg";
    add_table(sigma_id_, {{'S', skel}});
  }

  void make_fin(const std::string& pfx) {
    Rules r;
    auto need_prefix = [&](int wi) {
      if (wi == 0) return !rx_nn();
      if (wi == 1) return !ry_nn();
      return !mult() && !rsum_nn();  // z's exponent is -(r_x+r_y)
    };
    for (int wi = 0; wi < 3; ++wi) {
      const Win& w = kWin[wi];
      r.push_back({w.pre, need_prefix(wi) ? "Z" : ""});
      r.push_back({w.pin, ""});
      r.push_back({w.done, ""});
      r.push_back({w.fpre, "Z"});
      r.push_back({w.fin, "Z"});
      r.push_back({w.ipre, "Z"});
      r.push_back({w.iin, "Z"});
    }
    fin_id_ = pfx + "_fin";
    add_table(fin_id_, r);
  }

  // Point-crossing variants of one word: keep going into integer digits,
  // end with no integer digits, or end as an all-zero (digitless) word.
  std::vector<char> cross_variants(int wi) const {
    if (frozen_[static_cast<size_t>(wi)]) return {'z'};
    std::vector<char> v{'n', 'e'};
    if (word_class(wi) == USign::nonneg) v.push_back('z');
    return v;
  }

  static void cross_rules(const Win& w, char v, Rules& out) {
    switch (v) {
      case 'n':
        out.push_back({w.fpre, ""});
        out.push_back({w.fin, ""});
        out.push_back({w.ipre, std::string{w.iin}});
        break;
      case 'e':
        out.push_back({w.fpre, "Z"});  // needs at least one fractional digit
        out.push_back({w.fin, ""});
        out.push_back({w.ipre, std::string{w.done}});
        break;
      default:
        out.push_back({w.fpre, ""});
        out.push_back({w.fin, "Z"});  // an all-zero word has no digits at all
        out.push_back({w.ipre, std::string{w.done}});
        break;
    }
  }

  void make_crossings(const std::string& pfx, int ev, const std::vector<int>& words) {
    std::vector<std::vector<char>> opts;
    for (int wi : words) opts.push_back(cross_variants(wi));
    std::vector<size_t> pick(words.size(), 0);
    for (;;) {
      Rules r;
      std::string tag;
      for (size_t i = 0; i < words.size(); ++i) {
        char v = opts[i][pick[i]];
        tag += v;
        cross_rules(kWin[words[i]], v, r);
      }
      std::string id = pfx + "_x" + std::to_string(ev + 1) + "_" + tag;
      add_table(id, r);
      crossings_.push_back({id, {ev}});
      size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < opts[i].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }

  void make_digit_tables(const std::string& pfx, int phase, const Phase& ph) {
    bool has_ins = !ph.fixed_ins.empty() || !ph.partner_opts.empty();
    for (int cin = 0; cin < 2; ++cin) {
      for (const Act& ax : actions(0, ph.mode[0])) {
        for (const Act& ay : actions(1, ph.mode[1])) {
          if (ax.skip && ay.skip) {
            if (ph.first) continue;  // nothing below either word's digits
            if (!has_ins) {
              // Top of the sweep: only an addition's final carry still emits.
              if (cin == 0) continue;
              if (op_ != MagOp::add) continue;
            }
          }
          auto [dz, cout] = mag_step(op_, k_, ax.skip ? 0 : ax.d, ay.skip ? 0 : ay.d, cin);
          if (frozen_[2] && dz != 0) continue;
          std::vector<int> zlast;
          if (frozen_[2])
            zlast = {-1};
          else if (ph.mode[2] == Mode::frac)
            zlast = {0};
          else {
            zlast = {0};
            if (dz >= 1) zlast.push_back(1);
          }
          for (int zl : zlast) {
            std::vector<int> partners;
            if (ph.partner_opts.empty())
              partners = {-1};
            else
              for (size_t i = 0; i < ph.partner_opts.size(); ++i)
                partners.push_back(static_cast<int>(i));
            for (int pi : partners) {
              Rules r;
              if (!frozen_[0]) act_rules(kWin[0], ph.mode[0], ax, r);
              if (!frozen_[1]) act_rules(kWin[1], ph.mode[1], ay, r);
              if (zl >= 0) z_rules(kWin[2], ph.mode[2], dz, zl == 1, r);
              for (auto [wi, beta] : ph.fixed_ins) insert_rules(kWin[wi], beta, r);
              int partner_word = -1;
              if (pi >= 0) {
                partner_word = ph.partner_opts[static_cast<size_t>(pi)].first;
                insert_rules(kWin[partner_word], ph.partner_opts[static_cast<size_t>(pi)].second,
                             r);
              }
              std::string id = pfx + "_p" + std::to_string(phase + 1) + "c" +
                               std::to_string(cin) + "_" + act_tag('x', ax) + "_" +
                               act_tag('y', ay);
              if (zl == 1) id += "_zf";
              if (pi >= 0) id += partner_word == 0 ? "_ix" : "_iz";
              add_table(id, r);
              digits_.push_back({id, {phase, cin, cout, partner_word}});
            }
          }
        }
      }
    }
  }

  // ---------------------------------------------------------- lane control

  // Multiplication: y and z cross together, offset from x's crossing by
  // |r_y| digit steps; then a tail of pure insertion steps scales x's (and
  // z's) exponent.  When r_x and r_y have different sign classes, z's prefix
  // may come either from the crossing phase or from the tail, never both —
  // the one-bit flag in the control forbids mixing the two letters.
  ControlExpr mult_control(bool flag_active) {
    Nfa n;
    n.symbols = syms_;
    int st = n.add_state();
    n.start = st;
    int F = flag_active ? 2 : 1;
    int p1[2], p2[2][2], p3[2][2];
    for (int c = 0; c < 2; ++c) p1[c] = n.add_state();
    for (int c = 0; c < 2; ++c)
      for (int f = 0; f < F; ++f) p2[c][f] = n.add_state();
    for (int c = 0; c < 2; ++c)
      for (int f = 0; f < F; ++f) p3[c][f] = n.add_state();
    int t = n.add_state();
    int acc = n.add_state();
    n.accept[static_cast<size_t>(acc)] = true;

    n.add_edge(st, sym_idx_.at(sigma_id_), p1[0]);
    for (const auto& [id, rec] : digits_) {
      int s = sym_idx_.at(id);
      if (rec.phase == 0) n.add_edge(p1[rec.cin], s, p1[rec.cout]);
      if (rec.phase == 1) {
        for (int f = 0; f < F; ++f) {
          int f2 = f;
          if (flag_active && rec.partner == 2) f2 = 1;  // z's letter now fixed
          n.add_edge(p2[rec.cin][f], s, p2[rec.cout][f2]);
        }
      }
      if (rec.phase == 2)
        for (int f = 0; f < F; ++f) n.add_edge(p3[rec.cin][f], s, p3[rec.cout][f]);
    }
    for (const auto& [id, rec] : crossings_) {
      int s = sym_idx_.at(id);
      for (int c = 0; c < 2; ++c) {
        if (rec.ev == 0) n.add_edge(p1[c], s, p2[c][0]);
        if (rec.ev == 1)
          for (int f = 0; f < F; ++f) n.add_edge(p2[c][f], s, p3[c][f]);
      }
    }
    int tl = sym_idx_.at(tail_id_);
    for (int f = 0; f < F; ++f)
      if (!flag_active || f == 0) n.add_edge(p3[0][f], tl, t);
    n.add_edge(t, tl, t);
    int fin = sym_idx_.at(fin_id_);
    for (int f = 0; f < F; ++f) n.add_edge(p3[0][f], fin, acc);
    n.add_edge(t, fin, acc);
    return nfa_to_regex(n);
  }

  // Inversion: three separate crossings, carry threaded straight through.
  ControlExpr inv_control() {
    Nfa n;
    n.symbols = syms_;
    int st = n.add_state();
    n.start = st;
    int p[4][2];
    for (auto& row : p)
      for (int c = 0; c < 2; ++c) row[c] = n.add_state();
    int acc = n.add_state();
    n.accept[static_cast<size_t>(acc)] = true;
    n.add_edge(st, sym_idx_.at(sigma_id_), p[0][0]);
    for (const auto& [id, rec] : digits_)
      n.add_edge(p[rec.phase][rec.cin], sym_idx_.at(id), p[rec.phase][rec.cout]);
    for (const auto& [id, rec] : crossings_)
      for (int c = 0; c < 2; ++c)
        n.add_edge(p[rec.ev][c], sym_idx_.at(id), p[rec.ev + 1][c]);
    n.add_edge(p[3][0], sym_idx_.at(fin_id_), acc);
    return nfa_to_regex(n);
  }

  // ----------------------------------------------------------------- lane

  ControlExpr build_lane(const std::string& pfx, const std::array<bool, 3>& frozen) {
    frozen_ = frozen;
    syms_.clear();
    sym_idx_.clear();
    digits_.clear();
    crossings_.clear();
    tail_id_.clear();

    make_sigma(pfx);

    if (mult()) {
      bool flag_active = rx_nn() != ry_nn();
      char ybeta = ry_nn() ? 'b' : 'B';
      char xbeta = rx_nn() ? 'b' : 'B';
      char zbeta2 = ry_nn() ? 'b' : 'B';  // z's letter when it rides the crossing phase
      std::vector<int> ev0 = ry_nn() ? std::vector<int>{1, 2} : std::vector<int>{0};
      std::vector<int> ev1 = ry_nn() ? std::vector<int>{0} : std::vector<int>{1, 2};

      Phase ph1;
      ph1.first = true;
      Phase ph2;
      if (ry_nn())
        ph2.mode = {Mode::frac, Mode::integer, Mode::integer};
      else
        ph2.mode = {Mode::integer, Mode::frac, Mode::frac};
      ph2.fixed_ins = {{1, ybeta}};
      if (flag_active) ph2.partner_opts.push_back({0, xbeta});
      ph2.partner_opts.push_back({2, zbeta2});
      Phase ph3;
      ph3.mode = {Mode::integer, Mode::integer, Mode::integer};

      make_digit_tables(pfx, 0, ph1);
      make_crossings(pfx, 0, ev0);
      make_digit_tables(pfx, 1, ph2);
      make_crossings(pfx, 1, ev1);
      make_digit_tables(pfx, 2, ph3);

      Rules tail;
      insert_rules(kWin[0], xbeta, tail);
      insert_rules(kWin[2], xbeta, tail);
      tail_id_ = pfx + "_tl";
      add_table(tail_id_, tail);
      make_fin(pfx);
      return mult_control(flag_active);
    }

    // Inversion: order the crossings by position — y's point sits at 0, x's
    // at r_y, z's at r_x + r_y — using only the case's sign classes.
    std::array<int, 3> order{0, 1, 2};
    auto before = [&](int a, int b) {
      if (a == b) return false;
      if (a == 1) return b == 0 ? ry_nn() : rsum_nn();   // y vs x, y vs z
      if (b == 1) return a == 0 ? !ry_nn() : !rsum_nn();
      return a == 0 ? rx_nn() : !rx_nn();                // x vs z
    };
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (before(order[static_cast<size_t>(j)], order[static_cast<size_t>(i)]))
          std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    std::array<int, 3> idx{};
    for (int i = 0; i < 3; ++i) idx[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

    // Each word collects one prefix letter per step between its two pinning
    // crossings: x between x's and z's, y between y's and x's, z between y's
    // and z's — the gap lengths are exactly |r_x|, |r_y| and |r_x + r_y|.
    auto interval = [&](int wi) -> std::pair<int, int> {
      int a, b;
      if (wi == 0)
        a = idx[0], b = idx[2];
      else if (wi == 1)
        a = idx[1], b = idx[0];
      else
        a = idx[1], b = idx[2];
      return {std::min(a, b), std::max(a, b)};
    };

    std::array<Phase, 4> ph;
    ph[0].first = true;
    for (int p = 0; p < 4; ++p)
      for (int wi = 0; wi < 3; ++wi)
        ph[static_cast<size_t>(p)].mode[static_cast<size_t>(wi)] =
            idx[static_cast<size_t>(wi)] < p ? Mode::integer : Mode::frac;
    for (int p = 1; p <= 2; ++p)
      for (int wi = 0; wi < 3; ++wi) {
        auto [lo, hi] = interval(wi);
        if (lo <= p - 1 && p <= hi)
          ph[static_cast<size_t>(p)].fixed_ins.push_back({wi, class_letter(wi)});
      }

    for (int p = 0; p < 4; ++p) {
      make_digit_tables(pfx, p, ph[static_cast<size_t>(p)]);
      if (p < 3) make_crossings(pfx, p, {order[static_cast<size_t>(p)]});
    }
    make_fin(pfx);
    return inv_control();
  }
};

}  // namespace

// --------------------------------------------------------------- case API

bool SignCase::operator==(const SignCase& o) const {
  return variant == o.variant && rx == o.rx && ry == o.ry && ux == o.ux && uy == o.uy &&
         uz == o.uz && rsum == o.rsum;
}

bool sign_case_admissible(const SignCase& c) {
  auto fam = [&](USign a, USign b, USign z) { return c.ux == a && c.uy == b && c.uz == z; };
  bool uok;
  if (c.variant == FracVariant::multiplication)
    uok = fam(USign::nonneg, USign::nonneg, USign::nonneg) ||
          fam(USign::nonpos, USign::nonpos, USign::nonpos) ||
          fam(USign::pos, USign::neg, USign::nonneg) || fam(USign::pos, USign::neg, USign::neg) ||
          fam(USign::neg, USign::pos, USign::nonneg) || fam(USign::neg, USign::pos, USign::neg);
  else
    uok = fam(USign::nonneg, USign::nonneg, USign::nonpos) ||
          fam(USign::nonpos, USign::nonpos, USign::nonneg) ||
          fam(USign::pos, USign::neg, USign::nonpos) || fam(USign::pos, USign::neg, USign::pos) ||
          fam(USign::neg, USign::pos, USign::nonneg) || fam(USign::neg, USign::pos, USign::neg);
  if (!uok) return false;
  if (c.variant == FracVariant::multiplication) return c.rsum == RSign::nonneg;
  if (c.rx == RSign::nonneg && c.ry == RSign::nonneg) return c.rsum == RSign::nonneg;
  if (c.rx == RSign::neg && c.ry == RSign::neg) return c.rsum == RSign::neg;
  return true;
}

bool sign_case_matches(const SignCase& c, const GroupElement& x, const GroupElement& y,
                       const GroupElement& z) {
  if (!rsign_ok(c.rx, x.r) || !rsign_ok(c.ry, y.r)) return false;
  if (c.variant == FracVariant::inversion && !rsign_ok(c.rsum, x.r + y.r)) return false;
  return usign_ok(c.ux, x.u.sign()) && usign_ok(c.uy, y.u.sign()) && usign_ok(c.uz, z.u.sign());
}

std::string sign_case_id(const SignCase& c) {
  std::string s = c.variant == FracVariant::multiplication ? "mult[" : "inv[";
  s += "rx";
  s += c.rx == RSign::nonneg ? ">=0" : "<0";
  s += " ry";
  s += c.ry == RSign::nonneg ? ">=0" : "<0";
  if (c.variant == FracVariant::inversion) {
    s += " r+";
    s += c.rsum == RSign::nonneg ? ">=0" : "<0";
  }
  s += " ux";
  s += usign_str(c.ux);
  s += " uy";
  s += usign_str(c.uy);
  s += " uz";
  s += usign_str(c.uz);
  s += "]";
  return s;
}

std::vector<SignCase> mult_frac_cases() {
  std::vector<SignCase> out;
  const RSign rs[2] = {RSign::nonneg, RSign::neg};
  const std::array<USign, 3> us[6] = {
      {USign::nonneg, USign::nonneg, USign::nonneg}, {USign::nonpos, USign::nonpos, USign::nonpos},
      {USign::pos, USign::neg, USign::nonneg},       {USign::pos, USign::neg, USign::neg},
      {USign::neg, USign::pos, USign::nonneg},       {USign::neg, USign::pos, USign::neg}};
  for (RSign rx : rs)
    for (RSign ry : rs)
      for (const auto& u : us)
        out.push_back({FracVariant::multiplication, rx, ry, u[0], u[1], u[2], RSign::nonneg});
  return out;
}

std::vector<SignCase> inv_frac_cases() {
  std::vector<SignCase> out;
  const std::array<RSign, 3> rr[6] = {
      {RSign::nonneg, RSign::nonneg, RSign::nonneg}, {RSign::nonneg, RSign::neg, RSign::nonneg},
      {RSign::nonneg, RSign::neg, RSign::neg},       {RSign::neg, RSign::nonneg, RSign::nonneg},
      {RSign::neg, RSign::nonneg, RSign::neg},       {RSign::neg, RSign::neg, RSign::neg}};
  const std::array<USign, 3> us[6] = {
      {USign::nonneg, USign::nonneg, USign::nonpos}, {USign::nonpos, USign::nonpos, USign::nonneg},
      {USign::pos, USign::neg, USign::nonpos},       {USign::pos, USign::neg, USign::pos},
      {USign::neg, USign::pos, USign::nonneg},       {USign::neg, USign::pos, USign::neg}};
  for (const auto& r : rr)
    for (const auto& u : us)
      out.push_back({FracVariant::inversion, r[0], r[1], u[0], u[1], u[2], r[2]});
  return out;
}

Et0lSystem mult_frac_system(int k, const SignCase& c) {
  if (k < 2 || k > 10)
    throw InputError("fractional systems need 2 <= k <= 10, got " + std::to_string(k));
  if (c.variant != FracVariant::multiplication)
    throw InputError("sign case is not a multiplication case");
  if (!sign_case_admissible(c)) throw InputError("inadmissible sign case " + sign_case_id(c));
  return FracBuilder(k, c).build();
}

Et0lSystem inv_frac_system(int k, const SignCase& c) {
  if (k < 2 || k > 10)
    throw InputError("fractional systems need 2 <= k <= 10, got " + std::to_string(k));
  if (c.variant != FracVariant::inversion)
    throw InputError("sign case is not an inversion case");
  if (!sign_case_admissible(c)) throw InputError("inadmissible sign case " + sign_case_id(c));
  return FracBuilder(k, c).build();
}

}  // namespace bsk
