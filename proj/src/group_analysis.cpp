#include "wpi/group_analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wpi {

IntegerMatrix IntegerMatrix::identity(std::size_t nn) {
  IntegerMatrix m(nn, nn);
  for (std::size_t i = 0; i < nn; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix mat_mul(const IntegerMatrix& x, const IntegerMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
  IntegerMatrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

IntegerMatrix mat_mod(const IntegerMatrix& x, const Int& m) {
  IntegerMatrix z = x;
  for (auto& e : z.a) {
    e %= m;
    if (e < 0) e += m;
  }
  return z;
}

static Int determinant(const IntegerMatrix& x) {
  const std::size_t n = x.rows;
  if (n == 0) return 1;
  if (n == 1) return x.at(0, 0);
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (x.at(0, j) == 0) continue;
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor.at(r - 1, cc++) = x.at(r, c);
    }
    Int term = x.at(0, j) * determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

static IntegerMatrix adjugate(const IntegerMatrix& x) {
  const std::size_t n = x.rows;
  IntegerMatrix adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntegerMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc++) = x.at(r, c);
        }
        ++rr;
      }
      Int cof = determinant(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;  // transpose of cofactors
    }
  return adj;
}

IntegerMatrix mat_inverse_unimodular(const IntegerMatrix& x) {
  if (x.rows != x.cols) throw std::invalid_argument("mat_inverse_unimodular: not square");
  Int det = determinant(x);
  if (det != 1 && det != -1)
    throw std::invalid_argument("mat_inverse_unimodular: determinant is not +-1");
  IntegerMatrix inv = adjugate(x);
  if (det == -1)
    for (auto& e : inv.a) e = -e;
  return inv;
}

static Int mod_inverse(Int a, const Int& m) {
  Int t = 0, newt = 1, r = m, newr = a % m;
  if (newr < 0) newr += m;
  while (newr != 0) {
    Int q = r / newr;
    Int tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  if (t < 0) t += m;
  return t;
}

IntegerMatrix mat_inverse_mod(const IntegerMatrix& x, const Int& m) {
  if (x.rows != x.cols) throw std::invalid_argument("mat_inverse_mod: not square");
  Int det = determinant(x) % m;
  if (det < 0) det += m;
  Int dinv = mod_inverse(det, m);
  IntegerMatrix inv = adjugate(x);
  for (auto& e : inv.a) {
    e = (e % m) * dinv % m;
    if (e < 0) e += m;
  }
  return inv;
}

SmithResult smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix A = m;
  const std::size_t R = A.rows, C = A.cols;
  std::size_t t = 0;
  auto abs_int = [](const Int& v) { return v < 0 ? Int(-v) : v; };
  while (t < R && t < C) {
    // pivot: minimal nonzero absolute value in the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (A.at(i, j) != 0 &&
            (!found || abs_int(A.at(i, j)) < abs_int(A.at(pi, pj)))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    for (std::size_t j = 0; j < C; ++j) std::swap(A.at(t, j), A.at(pi, j));
    for (std::size_t i = 0; i < R; ++i) std::swap(A.at(i, t), A.at(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (A.at(i, t) == 0) continue;
        Int q = A.at(i, t) / A.at(t, t);
        for (std::size_t j = 0; j < C; ++j) A.at(i, j) -= q * A.at(t, j);
        if (A.at(i, t) != 0) {
          // remainder smaller than pivot: swap rows and restart
          for (std::size_t j = 0; j < C; ++j) std::swap(A.at(i, j), A.at(t, j));
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (A.at(t, j) == 0) continue;
        Int q = A.at(t, j) / A.at(t, t);
        for (std::size_t i = 0; i < R; ++i) A.at(i, j) -= q * A.at(i, t);
        if (A.at(t, j) != 0) {
          for (std::size_t i = 0; i < R; ++i) std::swap(A.at(i, j), A.at(i, t));
          clean = false;
        }
      }
      if (clean) {
        // divisibility: pivot must divide every entry of the trailing block
        for (std::size_t i = t + 1; i < R && clean; ++i)
          for (std::size_t j = t + 1; j < C && clean; ++j)
            if (A.at(i, j) % A.at(t, t) != 0) {
              for (std::size_t jj = 0; jj < C; ++jj) A.at(t, jj) += A.at(i, jj);
              clean = false;
            }
      }
    }
    ++t;
  }
  SmithResult res;
  res.rank = t;
  for (std::size_t k = 0; k < t; ++k) {
    Int dk = A.at(k, k);
    res.diagonal.push_back(dk < 0 ? Int(-dk) : dk);
  }
  return res;
}

std::vector<Int> abelianization(const Presentation& p) {
  const std::size_t g = p.generators.size();
  IntegerMatrix m(p.relations.size(), g);
  for (std::size_t r = 0; r < p.relations.size(); ++r)
    for (const Letter& l : p.relations[r].relator()) m.at(r, l.gen) += l.sign;
  SmithResult s = smith_normal_form(m);
  std::vector<Int> inv;
  for (const Int& dk : s.diagonal)
    if (dk != 1) inv.push_back(dk);
  for (std::size_t k = s.rank; k < g; ++k) inv.push_back(0);
  return inv;
}

static IntegerMatrix evaluate_word(const Word& w, const std::vector<IntegerMatrix>& images,
                                   const std::vector<IntegerMatrix>& inverses,
                                   const std::optional<Int>& modulus, std::size_t dim) {
  IntegerMatrix acc = IntegerMatrix::identity(dim);
  for (const Letter& l : w) {
    acc = mat_mul(acc, l.sign > 0 ? images[l.gen] : inverses[l.gen]);
    if (modulus) acc = mat_mod(acc, *modulus);
  }
  return acc;
}

RepresentationReport check_representation(const Presentation& p,
                                          const std::vector<IntegerMatrix>& images,
                                          std::optional<Int> modulus) {
  if (images.size() != p.generators.size())
    throw std::invalid_argument("check_representation: one image per generator required");
  const std::size_t dim = images.empty() ? 0 : images[0].rows;
  for (const auto& m : images)
    if (m.rows != dim || m.cols != dim)
      throw std::invalid_argument("check_representation: images must be square of uniform size");

  std::vector<IntegerMatrix> inverses(images.size());
  std::vector<bool> have_inv(images.size(), false);
  auto inv_of = [&](int g) -> const IntegerMatrix& {
    if (!have_inv[g]) {
      inverses[g] = modulus ? mat_inverse_mod(images[g], *modulus)
                            : mat_inverse_unimodular(images[g]);
      have_inv[g] = true;
    }
    return inverses[g];
  };
  for (const auto& r : p.relations)
    for (const auto& w : {r.lhs, r.rhs})
      for (const Letter& l : w)
        if (l.sign < 0) inv_of(l.gen);

  RepresentationReport rep;
  rep.ok = true;
  for (const auto& r : p.relations) {
    IntegerMatrix lhs = evaluate_word(r.lhs, images, inverses, modulus, dim);
    IntegerMatrix rhs = evaluate_word(r.rhs, images, inverses, modulus, dim);
    bool ok = lhs == rhs;
    rep.relation_ok.push_back(ok);
    rep.ok = rep.ok && ok;
  }
  return rep;
}

std::string RepresentationReport::to_json() const {
  nlohmann::json j;
  j["ok"] = ok;
  j["relations"] = relation_ok;
  return j.dump(2);
}

std::size_t matrix_group_closure(const std::vector<IntegerMatrix>& generators,
                                 const Int& modulus, std::size_t cap) {
  if (modulus < 2) throw std::invalid_argument("matrix_group_closure: modulus must be >= 2");
  if (generators.empty()) return 1;
  const std::size_t dim = generators[0].rows;
  std::vector<IntegerMatrix> gens;
  for (const auto& g : generators) gens.push_back(mat_mod(g, modulus));

  std::map<std::vector<Int>, bool> seen;
  std::deque<IntegerMatrix> frontier;
  IntegerMatrix id = IntegerMatrix::identity(dim);
  seen[id.a] = true;
  frontier.push_back(id);
  while (!frontier.empty()) {
    IntegerMatrix cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      IntegerMatrix nxt = mat_mod(mat_mul(cur, g), modulus);
      if (seen.emplace(nxt.a, true).second) {
        if (seen.size() > cap) throw std::runtime_error("matrix_group_closure: cap exceeded");
        frontier.push_back(nxt);
      }
    }
  }
  return seen.size();
}

// ---------------------------------------------------------------------------
// Todd-Coxeter (HLT with coincidence handling, cf. Holt, Handbook of CGT)

namespace {

struct CosetTable {
  int ncols;
  std::vector<std::vector<int>> tab;  // tab[coset][col], -1 undefined
  std::vector<int> rep;               // union-find over cosets
  std::size_t defined = 0;
  std::size_t cap;

  explicit CosetTable(int ncols_, std::size_t cap_) : ncols(ncols_), cap(cap_) {
    new_coset();
  }
  int new_coset() {
    tab.emplace_back(ncols, -1);
    rep.push_back(static_cast<int>(tab.size()) - 1);
    ++defined;
    return static_cast<int>(tab.size()) - 1;
  }
  bool over_cap() const { return defined > cap; }
  int find(int c) {
    while (rep[c] != c) {
      rep[c] = rep[rep[c]];
      c = rep[c];
    }
    return c;
  }
  static int inv_col(int x) { return x ^ 1; }

  void merge(int k, int l, std::deque<int>& q) {
    k = find(k);
    l = find(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    rep[l] = k;
    q.push_back(l);
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int gamma = q.front();
      q.pop_front();
      for (int x = 0; x < ncols; ++x) {
        int delta = tab[gamma][x];
        if (delta == -1) continue;
        tab[delta][inv_col(x)] = -1;
        int mu = find(gamma), nu = find(delta);
        if (tab[mu][x] != -1)
          merge(nu, find(tab[mu][x]), q);
        else if (tab[nu][inv_col(x)] != -1)
          merge(mu, find(tab[nu][inv_col(x)]), q);
        else {
          tab[mu][x] = nu;
          tab[nu][inv_col(x)] = mu;
        }
      }
    }
  }

  // scan word (column sequence) at coset c, defining cosets as needed
  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    int f = c, b = c;
    while (true) {
      while (i <= j && tab[f][w[i]] != -1) f = tab[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab[b][inv_col(w[j])] != -1) b = tab[b][inv_col(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        tab[f][w[i]] = b;
        tab[b][inv_col(w[i])] = f;
        return;
      }
      int n = new_coset();
      if (over_cap()) return;
      tab[f][w[i]] = n;
      tab[n][inv_col(w[i])] = f;
      f = n;
      ++i;
    }
  }
};

std::vector<int> word_to_cols(const Word& w) {
  std::vector<int> cols;
  for (const Letter& l : w) cols.push_back(2 * l.gen + (l.sign > 0 ? 0 : 1));
  return cols;
}

}  // namespace

CosetResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                         std::size_t max_cosets) {
  const int ng = static_cast<int>(p.generators.size());
  CosetTable ct(2 * ng, max_cosets);
  std::vector<std::vector<int>> relators;
  for (const auto& r : p.relations) {
    auto cols = word_to_cols(r.canonical());
    if (!cols.empty()) relators.push_back(cols);
  }
  for (const auto& w : subgroup_words) {
    ct.scan_and_fill(0, word_to_cols(free_reduce(w)));
    if (ct.over_cap()) return {true, 0};
  }
  for (int c = 0; c < static_cast<int>(ct.tab.size()); ++c) {
    if (ct.find(c) != c) continue;
    for (const auto& rel : relators) {
      ct.scan_and_fill(c, rel);
      if (ct.over_cap()) return {true, 0};
      if (ct.find(c) != c) break;
    }
    if (ct.find(c) != c) continue;
    for (int x = 0; x < 2 * ng; ++x) {
      if (ct.tab[c][x] == -1) {
        int n = ct.new_coset();
        if (ct.over_cap()) return {true, 0};
        ct.tab[c][x] = n;
        ct.tab[n][CosetTable::inv_col(x)] = c;
      }
    }
  }
  std::size_t live = 0;
  for (int c = 0; c < static_cast<int>(ct.tab.size()); ++c)
    if (ct.find(c) == c) ++live;
  return {false, live};
}

}  // namespace wpi
