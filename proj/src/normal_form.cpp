#include "bsk/normal_form.hpp"

#include "bsk/nfa.hpp"

#include <limits>

namespace bsk {

namespace {

void append_run(std::string& w, const BigInt& count, char letter) {
  if (count < 0) throw InputError("negative run length in word form");
  if (count > std::numeric_limits<long long>::max())
    throw InputError("integer part too large to spell out as a word");
  w.append(count.convert_to<unsigned long long>(), letter);
}

}  // namespace

std::string reassemble(int k, const Decomposition& d) {
  for (size_t i = 0; i < d.components.size(); ++i) {
    int c = d.components[i];
    if (c < 0 || c >= k) throw InputError("component digit out of range");
    if (i == 0 && c == 0) throw InputError("leading component digit must be nonzero");
  }
  if (d.s < 0) throw InputError("integer tail must be non-negative");
  std::string w;
  if (d.t >= 0)
    w.append(static_cast<size_t>(d.t), 'b');
  else
    w.append(static_cast<size_t>(-d.t), 'B');
  char alpha = d.alpha_sign >= 0 ? 'a' : 'A';
  for (int c : d.components) {
    w.append(static_cast<size_t>(c), alpha);
    w += 'B';
  }
  append_run(w, d.s, alpha);
  return w;
}

Decomposition decompose(int k, const std::string& word) {
  size_t i = 0;
  const size_t n = word.size();
  std::int64_t nb = 0;
  while (i < n && word[i] == 'b') {
    ++nb;
    ++i;
  }
  char alpha = 0;  // set by the first a/A seen
  std::vector<int> comps;
  long long tail = 0;
  while (i < n) {
    char c = word[i];
    if (c == 'a' || c == 'A') {
      if (alpha == 0) alpha = c;
      if (c != alpha) throw InputError("mixed a and A in one word", static_cast<long>(i));
      int run = 0;
      while (i < n && word[i] == alpha) {
        ++run;
        ++i;
      }
      if (i < n && word[i] == 'B') {
        if (run >= k) throw InputError("component digit exceeds k - 1", static_cast<long>(i));
        comps.push_back(run);
        ++i;
      } else if (i == n) {
        tail = run;
      } else {
        throw InputError("unexpected letter after alpha run", static_cast<long>(i));
      }
    } else if (c == 'B') {
      comps.push_back(0);
      ++i;
    } else {
      throw InputError("unexpected letter in normal form word", static_cast<long>(i));
    }
  }
  Decomposition d;
  d.alpha_sign = (alpha == 'A') ? -1 : 1;
  d.s = tail;
  if (nb > 0) {
    if (!comps.empty() && comps.front() == 0)
      throw InputError("empty component directly after the b block");
    d.t = nb;
    d.components = std::move(comps);
  } else {
    size_t zeros = 0;
    while (zeros < comps.size() && comps[zeros] == 0) ++zeros;
    d.t = -static_cast<std::int64_t>(zeros);
    d.components.assign(comps.begin() + static_cast<std::ptrdiff_t>(zeros), comps.end());
  }
  if (d.components.empty() && d.s == 0) d.alpha_sign = 1;
  return d;
}

std::string nf_of(const GroupElement& g) {
  ZkSplit sp = zk_split(g.u);
  Decomposition d;
  d.t = g.r + sp.m();
  d.components = sp.frac_digits;
  d.s = sp.int_part;
  d.alpha_sign = sp.sign;
  return reassemble(g.k, d);
}

GroupElement parse_nf(int k, const std::string& word) {
  Decomposition d = decompose(k, word);
  int m = static_cast<int>(d.components.size());
  BigInt num = 0;
  for (auto it = d.components.rbegin(); it != d.components.rend(); ++it) num = num * k + *it;
  BigInt kk = 1;
  for (int j = 0; j < m; ++j) kk *= k;
  num += d.s * kk;
  if (d.alpha_sign < 0) num = -num;
  return GroupElement(k, d.t - m, ZkRational(k, num, m));
}

bool is_nf(int k, const std::string& word) {
  try {
    decompose(k, word);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

FracForm frac_form_of(const GroupElement& g) {
  ZkSplit sp = zk_split(g.u);
  FracForm f;
  f.r = g.r;
  f.sign = sp.sign;
  f.frac_digits = sp.frac_digits;
  f.int_digits = base_k_digits(sp.int_part, g.k);
  return f;
}

std::string frac_form_to_string(const FracForm& f, int k) {
  if (k > 10) throw InputError("fractional string form is defined for k <= 10 only");
  std::string w;
  char beta = f.r >= 0 ? 'b' : 'B';
  for (std::int64_t i = 0; i < (f.r >= 0 ? f.r : -f.r); ++i) w += beta;
  w += f.sign >= 0 ? '+' : '-';
  for (int d : f.frac_digits) {
    if (d < 0 || d >= k) throw InputError("fractional digit out of range");
    w += static_cast<char>('0' + d);
  }
  w += '.';
  for (int d : f.int_digits) {
    if (d < 0 || d >= k) throw InputError("integer digit out of range");
    w += static_cast<char>('0' + d);
  }
  return w;
}

std::string frac_of(const GroupElement& g) { return frac_form_to_string(frac_form_of(g), g.k); }

FracForm parse_frac_form(int k, const std::string& word) {
  if (k > 10) throw InputError("fractional string form is defined for k <= 10 only");
  size_t i = 0;
  const size_t n = word.size();
  FracForm f;
  if (i < n && (word[i] == 'b' || word[i] == 'B')) {
    char beta = word[i];
    std::int64_t count = 0;
    while (i < n && word[i] == beta) {
      ++count;
      ++i;
    }
    f.r = beta == 'b' ? count : -count;
  }
  if (i >= n || (word[i] != '+' && word[i] != '-'))
    throw InputError("expected sign '+' or '-'", static_cast<long>(i));
  f.sign = word[i] == '+' ? 1 : -1;
  ++i;
  auto read_digits = [&](std::vector<int>& out) {
    while (i < n && word[i] >= '0' && word[i] <= '9') {
      int d = word[i] - '0';
      if (d >= k) throw InputError("digit exceeds k - 1", static_cast<long>(i));
      out.push_back(d);
      ++i;
    }
  };
  read_digits(f.frac_digits);
  if (i >= n || word[i] != '.') throw InputError("expected '.'", static_cast<long>(i));
  ++i;
  read_digits(f.int_digits);
  if (i != n) throw InputError("trailing characters in fractional form", static_cast<long>(i));
  if (!f.frac_digits.empty() && f.frac_digits.front() == 0)
    throw InputError("highest fractional digit must be nonzero");
  if (!f.int_digits.empty() && f.int_digits.back() == 0)
    throw InputError("highest integer digit must be nonzero");
  if (f.frac_digits.empty() && f.int_digits.empty() && f.sign < 0)
    throw InputError("zero takes the sign '+'");
  return f;
}

GroupElement parse_frac(int k, const std::string& word) {
  FracForm f = parse_frac_form(k, word);
  int m = static_cast<int>(f.frac_digits.size());
  BigInt num = 0;
  for (auto it = f.frac_digits.rbegin(); it != f.frac_digits.rend(); ++it) num = num * k + *it;
  BigInt ip = 0;
  for (auto it = f.int_digits.rbegin(); it != f.int_digits.rend(); ++it) ip = ip * k + *it;
  BigInt kk = 1;
  for (int j = 0; j < m; ++j) kk *= k;
  num += ip * kk;
  if (f.sign < 0) num = -num;
  return GroupElement(k, f.r, ZkRational(k, num, m));
}

bool is_frac(int k, const std::string& word) {
  try {
    parse_frac_form(k, word);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

Nfa nf_recognizer(int k) {
  Nfa n;
  n.symbols = {"a", "A", "b", "B"};
  const int A[2] = {0, 1};  // letters a, A
  const int b = 2, B = 3;
  int s0 = n.add_state();
  int b1 = n.add_state();
  n.start = s0;
  n.add_edge(s0, b, b1);
  n.add_edge(b1, b, b1);
  for (int alpha : A) {
    int comps = n.add_state();  // at a component boundary, zero components allowed
    int tail = n.add_state();
    n.accept[tail] = true;
    n.add_edge(s0, -1, comps);
    n.add_edge(comps, B, comps);
    n.add_edge(comps, -1, tail);
    n.add_edge(tail, alpha, tail);
    n.add_edge(b1, -1, tail);
    int prev = comps;  // general component: 1..k-1 alphas then B
    for (int d = 1; d <= k - 1; ++d) {
      int st = n.add_state();
      n.add_edge(prev, alpha, st);
      n.add_edge(st, B, comps);
      prev = st;
    }
    prev = b1;  // first component after the b block must be nonzero
    for (int d = 1; d <= k - 1; ++d) {
      int st = n.add_state();
      n.add_edge(prev, alpha, st);
      n.add_edge(st, B, comps);
      prev = st;
    }
  }
  return n;
}

}  // namespace bsk
