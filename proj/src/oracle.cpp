#include "bsk/oracle.hpp"

#include "bsk/enumerate.hpp"
#include "bsk/nfa.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

namespace bsk {

void sort_shortlex(std::vector<std::string>& words) {
  std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
}

std::vector<std::string> enum_dfa_words(const Dfa& d0, long max_len) {
  Dfa d = d0;
  d.compute_dead();
  std::vector<std::string> out;
  std::string cur;
  std::function<void(int, long)> go = [&](int q, long len) {
    if (d.accept[static_cast<size_t>(q)]) out.push_back(cur);
    if (len == max_len) return;
    for (size_t s = 0; s < d.symbols.size(); ++s) {
      int q2 = d.trans[static_cast<size_t>(q)][s];
      if (d.dead[static_cast<size_t>(q2)]) continue;
      cur += d.symbols[s];
      go(q2, len + 1);
      cur.resize(cur.size() - d.symbols[s].size());
    }
  };
  go(d.start, 0);
  sort_shortlex(out);
  return out;
}

std::vector<std::string> enum_nf_words(int k, long max_len) {
  return enum_dfa_words(determinize(nf_recognizer(k)), max_len);
}

std::vector<GroupElement> enum_nf_elements(int k, long max_len) {
  std::vector<GroupElement> out;
  for (const auto& w : enum_nf_words(k, max_len)) out.push_back(parse_nf(k, w));
  return out;
}

namespace {

// All digit vectors of the given length over 0..k-1 with the chosen end
// forced nonzero (vectors of length 0 are emitted once).
void digit_vectors(int k, int n, bool first_nonzero,
                   const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(static_cast<size_t>(n), 0);
  if (n == 0) {
    f(v);
    return;
  }
  size_t forced = first_nonzero ? 0 : static_cast<size_t>(n) - 1;
  v[forced] = 1;
  for (;;) {
    f(v);
    size_t i = 0;
    for (; i < v.size(); ++i) {
      int min = i == forced ? 1 : 0;
      if (++v[i] < k) break;
      v[i] = min;
    }
    if (i == v.size()) return;
  }
}

BigInt fold_digits(const std::vector<int>& digits, int k) {
  BigInt n = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) n = n * k + *it;
  return n;
}

}  // namespace

std::vector<GroupElement> enum_elements_by_digits(int k, long r_bound, long digit_bound) {
  std::vector<GroupElement> out;
  for (long m = 0; m <= digit_bound; ++m) {
    for (long q = 0; m + q <= digit_bound; ++q) {
      digit_vectors(k, static_cast<int>(m), true, [&](const std::vector<int>& frac) {
        digit_vectors(k, static_cast<int>(q), false, [&](const std::vector<int>& ints) {
          BigInt kk = 1;
          for (long j = 0; j < m; ++j) kk *= k;
          BigInt num = fold_digits(frac, k) + fold_digits(ints, k) * kk;
          for (int sign : {1, -1}) {
            if (num == 0 && sign < 0) continue;
            for (long r = -r_bound; r <= r_bound; ++r)
              out.emplace_back(k, r, ZkRational(k, sign * num, static_cast<int>(m)));
          }
        });
      });
    }
  }
  return out;
}

std::vector<std::string> oracle_nf_fixed_r(int k, long r, long max_len) {
  std::vector<std::string> out;
  for (const auto& w : enum_nf_words(k, max_len))
    if (parse_nf(k, w).r == r) out.push_back(w);
  return out;
}

std::vector<std::string> oracle_centralizer(const GroupElement& g, long max_len) {
  std::vector<std::string> out;
  for (const auto& w : enum_nf_words(g.k, max_len))
    if (GroupElement x = parse_nf(g.k, w); bs_mul(x, g) == bs_mul(g, x)) out.push_back(w);
  return out;
}

std::vector<std::string> oracle_conjugators(const GroupElement& g, const GroupElement& h,
                                            long max_len) {
  std::vector<std::string> out;
  for (const auto& w : enum_nf_words(g.k, max_len))
    if (GroupElement x = parse_nf(g.k, w); bs_mul(x, h) == bs_mul(g, x)) out.push_back(w);
  return out;
}

std::vector<std::string> oracle_left_mult_a(int k, long max_len) {
  GroupElement a(k, 0, ZkRational::one(k));
  std::vector<std::string> out;
  // u ranges over b^t a^s and b^t A^s with t, s >= 0.  Every triple is at
  // least 3 + |nf(u)| + t letters long (nf(au) starts with b^t), so the
  // loop bounds below cover everything that can fit in max_len.
  for (long t = 0; 3 + 2 * t <= max_len; ++t) {
    for (long s = 0; 3 + 2 * t + s <= max_len; ++s) {
      for (int sign : {1, -1}) {
        if (s == 0 && sign < 0) continue;  // b^t a^0 == b^t A^0
        GroupElement u(k, t, ZkRational(k, sign * s, 0));
        std::string wu = nf_of(u);
        std::string wv = nf_of(bs_mul(a, u));
        if (static_cast<long>(3 + wu.size() + wv.size()) <= max_len)
          out.push_back("a#" + wu + "#" + wv);
      }
    }
  }
  sort_shortlex(out);
  return out;
}

namespace {

std::vector<std::string> nf_triples(int k, long part_len, bool invert) {
  auto words = enum_nf_words(k, part_len);
  std::vector<GroupElement> els;
  els.reserve(words.size());
  for (const auto& w : words) els.push_back(parse_nf(k, w));
  std::vector<std::string> out;
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = 0; j < els.size(); ++j) {
      GroupElement z = bs_mul(els[i], els[j]);
      if (invert) z = bs_inv(z);
      out.push_back(words[i] + "#" + words[j] + "#" + nf_of(z));
    }
  sort_shortlex(out);
  return out;
}

}  // namespace

std::vector<std::string> oracle_mult_nf_triples(int k, long part_len) {
  return nf_triples(k, part_len, false);
}

std::vector<std::string> oracle_inv_nf_triples(int k, long part_len) {
  return nf_triples(k, part_len, true);
}

std::vector<std::pair<std::string, GroupElement>> enum_frac_words(int k, long max_len) {
  std::vector<std::pair<std::string, GroupElement>> out;
  // A word is [b^p or B^p] sign frac-block '.' int-block; blocks may be
  // empty, the zero value only displays '+'.
  for (long p = 0; p + 2 <= max_len; ++p) {
    for (int rs : {1, -1}) {
      if (p == 0 && rs < 0) continue;
      std::string prefix(static_cast<size_t>(p), rs > 0 ? 'b' : 'B');
      for (long m = 0; p + 2 + m <= max_len; ++m) {
        for (long q = 0; p + 2 + m + q <= max_len; ++q) {
          digit_vectors(k, static_cast<int>(m), true, [&](const std::vector<int>& frac) {
            digit_vectors(k, static_cast<int>(q), false, [&](const std::vector<int>& ints) {
              std::string digits;
              for (int d : frac) digits += static_cast<char>('0' + d);
              digits += '.';
              for (int d : ints) digits += static_cast<char>('0' + d);
              for (char sign : {'+', '-'}) {
                if (m == 0 && q == 0 && sign == '-') continue;
                std::string w = prefix + sign + digits;
                out.emplace_back(w, parse_frac(k, w));
              }
            });
          });
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size()
                                            : a.first < b.first;
  });
  return out;
}

namespace {

std::vector<std::string> frac_triples(int k, long max_triple_len, bool invert,
                                      const TripleFilter& keep) {
  auto words = enum_frac_words(k, max_triple_len - 6);  // partners need >= "+." each
  std::vector<std::string> out;
  for (const auto& [xs, x] : words) {
    for (const auto& [ys, y] : words) {
      if (static_cast<long>(xs.size() + ys.size()) + 4 > max_triple_len) break;
      GroupElement z = bs_mul(x, y);
      if (invert) z = bs_inv(z);
      std::string zs = frac_of(z);
      if (static_cast<long>(xs.size() + ys.size() + zs.size()) + 2 > max_triple_len) continue;
      if (keep && !keep(x, y, z)) continue;
      out.push_back(xs + "#" + ys + "#" + zs);
    }
  }
  sort_shortlex(out);
  return out;
}

}  // namespace

std::vector<std::string> oracle_mult_frac_triples(int k, long max_triple_len,
                                                  const TripleFilter& keep) {
  return frac_triples(k, max_triple_len, false, keep);
}

std::vector<std::string> oracle_inv_frac_triples(int k, long max_triple_len,
                                                 const TripleFilter& keep) {
  return frac_triples(k, max_triple_len, true, keep);
}

std::string default_cache_dir() {
  const char* env = std::getenv("BSK_CACHE_DIR");
  return env ? env : "";
}

namespace {

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_')
               ? c
               : '-';
  return out;
}

}  // namespace

std::vector<std::string> cached_words(const std::string& cache_dir, const std::string& id,
                                      const std::string& params,
                                      const std::function<std::vector<std::string>()>& compute) {
  if (cache_dir.empty()) return compute();
  std::string header = "# bsk-oracle 1 " + id + " " + params;
  std::filesystem::path file =
      std::filesystem::path(cache_dir) / (sanitize(id + "_" + params) + ".words");
  if (std::ifstream in(file); in) {
    std::string line;
    if (std::getline(in, line) && line.rfind(header + " n=", 0) == 0) {
      size_t count = std::stoul(line.substr(header.size() + 3));
      std::vector<std::string> words;
      words.reserve(count);
      bool ok = true;
      for (size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line) || line.empty() || line[0] != 'w' ||
            (line.size() > 1 && line[1] != ' ')) {
          ok = false;
          break;
        }
        words.push_back(line.size() > 1 ? line.substr(2) : "");
      }
      if (ok) return words;
    }
  }
  std::vector<std::string> words = compute();
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::ofstream out(file, std::ios::binary);
  if (out) {
    out << header << " n=" << words.size() << "\n";
    for (const auto& w : words) out << (w.empty() ? "w" : "w " + w) << "\n";
  }
  return words;
}

std::vector<std::string> conjecture_set(int k, long r_max, long n_max) {
  std::vector<std::string> out;
  for (long r = 0; r <= r_max; ++r) {
    for (long n = 0; n <= n_max; ++n) {
      BigInt e;
      if (r == 0) {
        e = n;  // (k^0 a)^n = a^n; the closed form degenerates to 0/0 here
      } else {
        BigInt kr = pow(BigInt(k), static_cast<unsigned>(r));
        BigInt krn = pow(BigInt(k), static_cast<unsigned>(r * n));
        e = (krn - 1) / (kr - 1);
      }
      if (e > 10'000'000)
        throw InputError("conjecture_set: bounds produce words too long to materialize");
      out.push_back(std::string(static_cast<size_t>(r), 'b') + "a#" +
                    std::string(static_cast<size_t>(r * n), 'b') +
                    std::string(e.convert_to<size_t>(), 'a'));
    }
  }
  sort_shortlex(out);
  return out;
}

DiffReport diff(const EnumerationResult& system_enum, const std::vector<std::string>& oracle_set,
                long max_word_len) {
  DiffReport rep;
  rep.max_word_len = max_word_len;
  rep.exhaustive = system_enum.exhaustive_up_to_len;
  std::set<std::string> produced;
  for (const auto& w : system_enum.words) {
    std::string flat;
    for (char ch : w)
      if (ch != ' ') flat.push_back(ch);
    produced.insert(std::move(flat));
  }
  std::set<std::string> expected(oracle_set.begin(), oracle_set.end());
  for (const auto& w : expected)
    if (!produced.count(w)) rep.missing.push_back(w);
  for (const auto& w : produced)
    if (!expected.count(w)) rep.extra.push_back(w);
  sort_shortlex(rep.missing);
  sort_shortlex(rep.extra);
  if (!rep.extra.empty() || (!rep.missing.empty() && rep.exhaustive))
    rep.verdict = DiffVerdict::failed;
  else if (!rep.missing.empty())
    rep.verdict = DiffVerdict::inconclusive;
  else
    rep.verdict = DiffVerdict::equal;
  return rep;
}

}  // namespace bsk
