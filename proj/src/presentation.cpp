#include "wpi/presentation.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wpi {

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->sign});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word out = free_reduce(w);
  while (out.size() >= 2 && out.front().gen == out.back().gen &&
         out.front().sign == -out.back().sign) {
    out.erase(out.begin());
    out.pop_back();
  }
  return out;
}

Word word_pow(const Word& w, int e) {
  Word base = e >= 0 ? w : invert(w);
  int k = e >= 0 ? e : -e;
  Word out;
  for (int i = 0; i < k; ++i) out = concat(out, base);
  return out;
}

static bool rotation_equal(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool eq = true;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(a[(k + r) % a.size()] == b[k])) {
        eq = false;
        break;
      }
    if (eq) return true;
  }
  return false;
}

bool conjugate_relators(const Word& a, const Word& b, bool allow_inverse) {
  Word ca = cyclic_reduce(a), cb = cyclic_reduce(b);
  if (rotation_equal(ca, cb)) return true;
  return allow_inverse && rotation_equal(ca, cyclic_reduce(invert(cb)));
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Singularity: return "singularity";
    case Variant::Discriminant: return "discriminant";
    case Variant::Moduli: return "moduli";
    case Variant::Zariski: return "zariski";
    case Variant::Elliptic: return "elliptic";
    case Variant::Fixture: return "fixture";
  }
  throw std::logic_error("variant_name");
}

Variant variant_from_name(const std::string& s) {
  if (s == "singularity") return Variant::Singularity;
  if (s == "discriminant") return Variant::Discriminant;
  if (s == "moduli") return Variant::Moduli;
  if (s == "zariski") return Variant::Zariski;
  if (s == "elliptic") return Variant::Elliptic;
  if (s == "fixture") return Variant::Fixture;
  throw std::invalid_argument("unknown variant: " + s);
}

Word delta_word(int n, int d, int kappa) {
  if (kappa < 0 || kappa > n) throw std::invalid_argument("delta_word: kappa out of range");
  auto base = build_index_set(n, d);
  std::map<std::vector<int>, int> pos;
  for (std::size_t k = 0; k < base.size(); ++k) pos[base[k].entries] = static_cast<int>(k);
  auto listing = enumerate_indices(n, d, OrderTag{kappa});
  Word w;
  for (const auto& mi : listing) w.push_back({pos.at(mi.entries), 1});
  return w;
}

static Word gen_word(std::initializer_list<int> gens) {
  Word w;
  for (int g : gens) w.push_back({g, 1});
  return w;
}

Presentation build_presentation(int n, int d, Variant variant,
                                std::optional<int> pact_exponent, bool allow_odd_d) {
  if (n < 1) throw std::invalid_argument("build_presentation: n must be >= 1 (use build_elliptic for n = 0)");
  if (d < 1) throw std::invalid_argument("build_presentation: d must be >= 1");
  if (variant != Variant::Singularity && variant != Variant::Discriminant &&
      variant != Variant::Moduli)
    throw std::invalid_argument("build_presentation: variant must be singularity, discriminant or moduli");
  if (variant == Variant::Moduli && d % 2 != 0 && !allow_odd_d)
    throw std::invalid_argument("build_presentation: moduli variant requires even d (pass allow_odd_d to override)");

  const int pact = pact_exponent.value_or(3 * d);
  LatticeGraph g = build_graph(n, d);
  const int m = static_cast<int>(g.vertices.size());

  Presentation p;
  p.meta = {n, d, variant, variant == Variant::Moduli ? pact : 0};
  for (const auto& v : g.vertices) p.generators.push_back(v.label());

  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (auto [i, j] : g.edges) adj[i][j] = adj[j][i] = true;

  // i) commutation on non-edges
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!adj[i][j]) p.relations.push_back({gen_word({i, j}), gen_word({j, i})});
  // ii) braid on edges
  for (auto [i, j] : g.edges)
    p.relations.push_back({gen_word({i, j, i}), gen_word({j, i, j})});
  // iii) triangle relations
  for (auto [i, j, k] : triangles(g))
    p.relations.push_back({gen_word({i, j, k, i}), gen_word({j, k, i, j})});

  if (variant == Variant::Singularity) return p;

  // iv) t_i (t_i^-1 d0)^{3d-1} = (t_i^-1 d0)^{3d-1} t_i
  const Word d0 = delta_word(n, d, 0);
  for (int i = 0; i < m; ++i) {
    Word ti{{i, 1}};
    Word core = word_pow(concat(invert(ti), d0), 3 * d - 1);
    p.relations.push_back({concat(ti, core), concat(core, ti)});
  }
  if (variant == Variant::Discriminant) return p;

  // v) d0^6 d1^6 ... dn^6 = 1
  Word prod;
  for (int kappa = 0; kappa <= n; ++kappa)
    prod = concat(prod, word_pow(delta_word(n, d, kappa), 6));
  p.relations.push_back({prod, Word{}});
  // vi) d0^pact = 1
  p.relations.push_back({word_pow(d0, pact), Word{}});
  return p;
}

Presentation build_zariski(int l) {
  if (l < 2) throw std::invalid_argument("build_zariski: l must be >= 2");
  Presentation p;
  p.meta = {0, l, Variant::Zariski, 0};
  for (int i = 1; i < l; ++i) p.generators.push_back("s_" + std::to_string(i));
  for (int i = 0; i < l - 1; ++i)
    for (int j = i + 2; j < l - 1; ++j)
      p.relations.push_back({gen_word({i, j}), gen_word({j, i})});
  for (int i = 0; i + 1 < l - 1; ++i)
    p.relations.push_back({gen_word({i, i + 1, i}), gen_word({i + 1, i, i + 1})});
  Word w;
  for (int i = 0; i < l - 1; ++i) w.push_back({i, 1});
  for (int i = l - 2; i >= 0; --i) w.push_back({i, 1});
  p.relations.push_back({w, Word{}});
  return p;
}

Presentation build_elliptic() {
  Presentation p;
  p.meta = {0, 1, Variant::Elliptic, 0};
  p.generators = {"s_1", "s_2"};
  p.relations.push_back({gen_word({0, 1, 0}), gen_word({1, 0, 1})});
  p.relations.push_back({word_pow(gen_word({0, 1}), 6), Word{}});
  return p;
}

Presentation special_fixture(const std::string& case_id) {
  Presentation p;
  p.meta.variant = Variant::Fixture;
  if (case_id == "n1d1" || case_id == "n1d1_projective") {
    // generators t1=(1,1), t2=(1,2), t3=(2,1), t4=(2,2); ids 0..3
    p.meta.n = 1;
    p.meta.d = 1;
    p.generators = {"t_1", "t_2", "t_3", "t_4"};
    p.relations.push_back({gen_word({1, 2}), gen_word({2, 1})});
    const std::pair<int, int> braid_pairs[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    for (auto [i, j] : braid_pairs)
      p.relations.push_back({gen_word({i, j, i}), gen_word({j, i, j})});
    const std::array<int, 3> tri[] = {{0, 1, 3}, {0, 2, 3}};
    for (auto [i, j, k] : tri)
      p.relations.push_back({gen_word({i, j, k, i}), gen_word({j, k, i, j})});
    p.relations.push_back({gen_word({3, 2, 1, 3, 2, 1, 0}), gen_word({0, 3, 2, 1, 3, 2, 1})});
    p.relations.push_back({gen_word({2, 1, 0, 2, 1, 0, 3}), gen_word({3, 2, 1, 0, 2, 1, 0})});
    if (case_id == "n1d1_projective")
      p.relations.push_back({gen_word({3, 2, 1, 0, 1, 0, 3, 2, 2, 0, 3, 1}), Word{}});
    return p;
  }
  if (case_id == "n1d2") {
    p.meta.n = 1;
    p.meta.d = 2;
    // generators t_{i0,i1}, i0 in {1,2}, i1 in 1..5, listed as in the source
    auto gid = [](int i0, int i1) { return (i0 - 1) * 5 + (i1 - 1); };
    for (int i0 = 1; i0 <= 2; ++i0)
      for (int i1 = 1; i1 <= 5; ++i1)
        p.generators.push_back("t_" + std::to_string(i0) + "_" + std::to_string(i1));
    auto braid_pair = [](int a0, int a1, int b0, int b1) {
      return std::abs(a1 - b1) <= 1 && (a0 - b0) * (a1 - b1) >= 0;
    };
    for (int a0 = 1; a0 <= 2; ++a0)
      for (int a1 = 1; a1 <= 5; ++a1)
        for (int b0 = 1; b0 <= 2; ++b0)
          for (int b1 = 1; b1 <= 5; ++b1) {
            if (gid(a0, a1) >= gid(b0, b1)) continue;
            int i = gid(a0, a1), j = gid(b0, b1);
            if (braid_pair(a0, a1, b0, b1))
              p.relations.push_back({gen_word({i, j, i}), gen_word({j, i, j})});
            else
              p.relations.push_back({gen_word({i, j}), gen_word({j, i})});
          }
    for (int i1 = 1; i1 <= 4; ++i1) {
      int a = gid(1, i1), b = gid(2, i1 + 1), c = gid(1, i1 + 1), e = gid(2, i1);
      p.relations.push_back({gen_word({a, b, c, a}), gen_word({c, a, b, c})});
      p.relations.push_back({gen_word({a, b, e, a}), gen_word({e, a, b, e})});
    }
    // (t_i^-1 d0)^5 = (d0 t_i^-1)^5 for every generator; d0 is the prec_0
    // product: (2,5),(2,4),...,(2,1),(1,5),...,(1,1)
    Word d0;
    for (int i1 = 5; i1 >= 1; --i1) d0.push_back({gid(2, i1), 1});
    for (int i1 = 5; i1 >= 1; --i1) d0.push_back({gid(1, i1), 1});
    for (int i = 0; i < 10; ++i) {
      Word ti_inv{{i, -1}};
      p.relations.push_back({word_pow(concat(ti_inv, d0), 5), word_pow(concat(d0, ti_inv), 5)});
    }
    Word d1;
    for (int i1 = 1; i1 <= 5; ++i1) {
      d1.push_back({gid(2, i1), 1});
      d1.push_back({gid(1, i1), 1});
    }
    p.relations.push_back({word_pow(d0, 6), Word{}});
    p.relations.push_back({word_pow(d1, 6), Word{}});
    return p;
  }
  throw std::invalid_argument("special_fixture: unknown case id " + case_id);
}

static nlohmann::json word_to_json(const Word& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const Letter& l : w) j.push_back({l.gen, l.sign});
  return j;
}

static Word word_from_json(const nlohmann::json& j) {
  Word w;
  for (const auto& e : j) w.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return w;
}

static std::string word_text(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += " ";
    s += gens[w[k].gen];
    if (w[k].sign < 0) s += "^-1";
  }
  return s;
}

static std::string word_gap(const Word& w, const std::string& fname) {
  if (w.empty()) return "One(" + fname + ")";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += fname + "." + std::to_string(w[k].gen + 1);
    if (w[k].sign < 0) s += "^-1";
  }
  return s;
}

static std::string word_magma(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "Id(F)";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += gens[w[k].gen];
    if (w[k].sign < 0) s += "^-1";
  }
  return s;
}

std::string serialize(const Presentation& p, SerialFormat format) {
  switch (format) {
    case SerialFormat::Json: {
      nlohmann::json j;
      j["meta"] = {{"n", p.meta.n},
                   {"d", p.meta.d},
                   {"variant", variant_name(p.meta.variant)},
                   {"pact_exponent", p.meta.pact_exponent}};
      j["generators"] = p.generators;
      auto& rels = j["relations"] = nlohmann::json::array();
      for (const auto& r : p.relations)
        rels.push_back({{"lhs", word_to_json(r.lhs)}, {"rhs", word_to_json(r.rhs)}});
      return j.dump(2);
    }
    case SerialFormat::Gap: {
      std::ostringstream os;
      os << "F := FreeGroup(";
      for (std::size_t k = 0; k < p.generators.size(); ++k)
        os << (k ? ", " : " ") << "\"" << p.generators[k] << "\"";
      os << " );;\n";
      os << "rels := [\n";
      for (std::size_t k = 0; k < p.relations.size(); ++k) {
        os << "  " << word_gap(p.relations[k].relator(), "F");
        os << (k + 1 < p.relations.size() ? ",\n" : "\n");
      }
      os << "];;\n";
      os << "G := F / rels;;\n";
      return os.str();
    }
    case SerialFormat::Magma: {
      std::ostringstream os;
      os << "F<";
      for (std::size_t k = 0; k < p.generators.size(); ++k)
        os << (k ? ", " : "") << p.generators[k];
      os << "> := FreeGroup(" << p.generators.size() << ");\n";
      os << "G := quo< F |\n";
      for (std::size_t k = 0; k < p.relations.size(); ++k) {
        os << "  " << word_magma(p.relations[k].lhs, p.generators) << " = "
           << word_magma(p.relations[k].rhs, p.generators);
        os << (k + 1 < p.relations.size() ? ",\n" : "\n");
      }
      os << ">;\n";
      return os.str();
    }
    case SerialFormat::Text: {
      std::ostringstream os;
      os << "generators:";
      for (const auto& g : p.generators) os << " " << g;
      os << "\n";
      for (const auto& r : p.relations)
        os << word_text(r.lhs, p.generators) << " = " << word_text(r.rhs, p.generators) << "\n";
      return os.str();
    }
  }
  throw std::logic_error("serialize");
}

Presentation parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Presentation p;
  p.meta.n = j.at("meta").at("n").get<int>();
  p.meta.d = j.at("meta").at("d").get<int>();
  p.meta.variant = variant_from_name(j.at("meta").at("variant").get<std::string>());
  p.meta.pact_exponent = j.at("meta").at("pact_exponent").get<int>();
  p.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& r : j.at("relations"))
    p.relations.push_back({word_from_json(r.at("lhs")), word_from_json(r.at("rhs"))});
  for (const auto& r : p.relations)
    for (const auto& w : {r.lhs, r.rhs})
      for (const Letter& l : w)
        if (l.gen < 0 || l.gen >= static_cast<int>(p.generators.size()))
          throw std::invalid_argument("parse_json: letter refers to unknown generator");
  return p;
}

}  // namespace wpi
