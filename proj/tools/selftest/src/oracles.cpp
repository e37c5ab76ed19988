#include <cliffalg_selftest/oracles.hpp>

#include <utility>

namespace cliffalg::oracle {

std::map<Word, Rational> normalize_word(const Word& w, const Rational& c, const SpaceQ& V) {
  std::map<Word, Rational> done;
  std::vector<std::pair<Word, Rational>> todo{{w, c}};
  while (!todo.empty()) {
    auto [cur, coeff] = std::move(todo.back());
    todo.pop_back();
    if (coeff == 0) continue;
    std::size_t pos = 0;
    while (pos + 1 < cur.size() && cur[pos] < cur[pos + 1]) ++pos;
    if (pos + 1 >= cur.size()) {
      done[cur] += coeff;
      continue;
    }
    const int a = cur[pos], b = cur[pos + 1];
    Word shorter(cur.begin(), cur.begin() + pos);
    shorter.insert(shorter.end(), cur.begin() + pos + 2, cur.end());
    if (a == b) {
      todo.emplace_back(shorter, coeff * V.gram()[a - 1][a - 1]);
      continue;
    }
    // a > b: e_a e_b = b(a,b) - e_b e_a
    todo.emplace_back(shorter, coeff * 2 * V.gram()[a - 1][b - 1]);
    Word swapped = cur;
    std::swap(swapped[pos], swapped[pos + 1]);
    todo.emplace_back(swapped, -coeff);
  }
  return done;
}

namespace {

Word word_of(Blade b) {
  Word w;
  for (int i = 1; i <= 32 && b != 0; ++i)
    if (b & (Blade{1} << (i - 1))) {
      w.push_back(i);
      b &= ~(Blade{1} << (i - 1));
    }
  return w;
}

Blade blade_from(const Word& w) {
  Blade b = 0;
  for (int i : w) b |= Blade{1} << (i - 1);
  return b;
}

MultivectorQ collect(const std::map<Word, Rational>& terms) {
  MultivectorQ r;
  for (const auto& [w, c] : terms) r.add_term(blade_from(w), c);
  return r;
}

// Coordinates helper for the bracket oracle: adds s * abar_(a,b) with a != b.
void add_ordered(std::vector<Rational>& out, int m, int a, int b, const Rational& s) {
  if (s == 0) return;
  Rational v = s;
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  const int idx = (a - 1) * (2 * m - a) / 2 + (b - a - 1);
  out[idx] += v;
}

}  // namespace

MultivectorQ product(const MultivectorQ& x, const MultivectorQ& y, const SpaceQ& V) {
  std::map<Word, Rational> acc;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      Word w = word_of(a);
      const Word wb = word_of(b);
      w.insert(w.end(), wb.begin(), wb.end());
      for (const auto& [nw, c] : normalize_word(w, ca * cb, V)) acc[nw] += c;
    }
  return collect(acc);
}

MultivectorQ word(const Word& w, const SpaceQ& V) { return collect(normalize_word(w, Rational(1), V)); }

std::vector<Rational> closed_form_bracket(const SpaceQ& V, int i, int j, int k, int l) {
  const int m = V.dim();
  std::vector<Rational> out(m * (m - 1) / 2);
  auto b = [&](int x, int y) { return Rational(2 * V.gram()[x - 1][y - 1]); };
  auto q = [&](int x) { return V.gram()[x - 1][x - 1]; };
  if (i == k && j == l) return out;
  const bool disjoint = i != k && i != l && j != k && j != l;
  if (disjoint) {
    add_ordered(out, m, i, l, b(j, k));
    add_ordered(out, m, j, l, -b(i, k));
    add_ordered(out, m, i, k, -b(j, l));
    add_ordered(out, m, j, k, b(i, l));
    return out;
  }
  // One shared index: rewrite as sign * [abar_xy, abar_yz].
  int x, y, z;
  Rational sign = 1;
  if (j == k) {
    x = i, y = j, z = l;
  } else if (i == k) {
    x = j, y = i, z = l, sign = -1;
  } else if (j == l) {
    x = i, y = j, z = k, sign = -1;
  } else {
    x = j, y = i, z = k;
  }
  add_ordered(out, m, x, z, sign * 2 * q(y));
  add_ordered(out, m, y, z, -sign * b(x, y));
  add_ordered(out, m, x, y, -sign * b(y, z));
  return out;
}

std::vector<Rational> naive_four_index_bracket(const SpaceQ& V, int i, int j, int k, int l) {
  const int m = V.dim();
  std::vector<Rational> out(m * (m - 1) / 2);
  auto b = [&](int x, int y) { return Rational(2 * V.gram()[x - 1][y - 1]); };
  add_ordered(out, m, i, l, 2 * b(i, l));
  add_ordered(out, m, j, l, -2 * b(i, k));
  add_ordered(out, m, j, k, 2 * b(i, l));
  add_ordered(out, m, i, k, -2 * b(j, l));
  return out;
}

int trace_form_rank(const AlgebraTensor<Rational>& T) {
  const int d = T.dim;
  std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d));
  // Tr(L_a L_b) = sum_{j,k} c[a][k][j] c[b][j][k]
  for (const auto& [ia, va] : T.c)
    for (const auto& [ib, vb] : T.c)
      if (ia[1] == ib[2] && ia[2] == ib[1]) g[ia[0]][ib[0]] += va * vb;
  int rank = 0;
  for (int col = 0; col < d && rank < d; ++col) {
    int p = rank;
    while (p < d && g[p][col] == 0) ++p;
    if (p == d) continue;
    std::swap(g[p], g[rank]);
    for (int r = rank + 1; r < d; ++r) {
      if (g[r][col] == 0) continue;
      const Rational f = g[r][col] / g[rank][col];
      for (int c = col; c < d; ++c) g[r][c] -= f * g[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cliffalg::oracle
