#include "fano/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fano/constructions.hpp"

namespace fano {

namespace {

LatticePolytope summand_by_name(const std::string& name) {
  if (name == "P5") return polygon(PolygonKind::P5);
  if (name == "P6") return polygon(PolygonKind::P6);
  if (name == "DP4") return del_pezzo(4);
  throw PreconditionError("Recipe: unknown summand " + name);
}

// Offset of the k-th summand with the given name in the direct sum.
Index summand_offset(const std::vector<std::string>& summands,
                     const std::string& name, int which) {
  Index offset = 0;
  int seen = 0;
  for (const auto& s : summands) {
    if (s == name && ++seen == which) return offset;
    offset += s == "P5" ? 2 : s == "P6" ? 2 : 4;
  }
  throw PreconditionError("Recipe: no summand " + name + " #" +
                          std::to_string(which));
}

IVec embed(const IVec& v, Index offset, Index dim) {
  IVec out = IVec::Zero(dim);
  for (Index i = 0; i < v.size(); ++i) out(offset + i) = v(i);
  return out;
}

}  // namespace

std::string Recipe::label() const {
  std::ostringstream os;
  if (!apexes.empty()) {
    os << "bipyr(";
    for (size_t i = 0; i < apexes.size(); ++i) {
      if (i) os << ",";
      os << apexes[i];
    }
    os << ") over ";
  }
  if (summands.empty()) {
    os << "{0}";
  } else {
    // collapse repeats: P5+P6^2
    for (size_t i = 0; i < summands.size();) {
      size_t j = i;
      while (j < summands.size() && summands[j] == summands[i]) ++j;
      if (i) os << "+";
      os << summands[i];
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
  }
  return os.str();
}

LatticePolytope Recipe::build() const {
  std::optional<LatticePolytope> base;
  for (const auto& name : summands) {
    LatticePolytope s = summand_by_name(name);
    base = base ? direct_sum(*base, s) : s;
  }
  size_t layer = 0;
  if (!base) {
    // a bipyramid over the origin is the segment
    if (apexes.empty() || apexes[0] != "0")
      throw PreconditionError("Recipe: an empty sum needs a proper first layer");
    base = segment();
    layer = 1;
  }
  const Index base_dim = base->dim();
  for (; layer < apexes.size(); ++layer) {
    const std::string& name = apexes[layer];
    ApexSpec spec = ApexSpec::zero();
    if (name != "0") {
      IVec v;
      if (name == "x") {
        if (base->dim() == base_dim && !summands.empty())
          throw PreconditionError("Recipe: apex x needs a previous layer");
        v = unit_vector(base->dim(), base->dim() - 1);
      } else if (name[0] == 'v') {
        int which = name.back() == '\'' ? 2 : 1;
        int k = std::stoi(name.substr(1));
        v = embed(hexagon_vertex(k), summand_offset(summands, "P6", which),
                  base->dim());
      } else if (name[0] == 'w') {
        v = embed(pentagon_vertex(std::stoi(name.substr(1))),
                  summand_offset(summands, "P5", 1), base->dim());
      } else {
        throw PreconditionError("Recipe: unknown apex " + name);
      }
      spec = ApexSpec::at(v);
    }
    base = bipyramid(*base, spec);
  }
  return *base;
}

namespace {

CatalogEntry make_entry(Recipe recipe) {
  LatticePolytope p = recipe.build();
  CanonicalForm id = canonical_form(p);
  return CatalogEntry{std::move(p), std::move(recipe), std::move(id)};
}

std::vector<CatalogEntry> dedup_and_require(std::vector<Recipe> candidates,
                                            std::size_t expected,
                                            const std::string& what) {
  std::map<std::string, std::vector<CatalogEntry>> by_class;
  std::vector<std::string> order;
  for (Recipe& r : candidates) {
    CatalogEntry e = make_entry(std::move(r));
    auto [it, fresh] = by_class.try_emplace(e.class_id.key());
    if (fresh) order.push_back(e.class_id.key());
    it->second.push_back(std::move(e));
  }
  if (by_class.size() != expected) {
    std::ostringstream os;
    os << what << ": expected " << expected << " classes, got "
       << by_class.size() << ";";
    for (const auto& key : order) {
      os << " {";
      const auto& group = by_class[key];
      for (size_t i = 0; i < group.size(); ++i)
        os << (i ? ", " : "") << group[i].recipe.label();
      os << "}";
    }
    throw InconsistencyError(os.str());
  }
  std::vector<CatalogEntry> out;
  for (const auto& key : order) out.push_back(std::move(by_class[key].front()));
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.class_id < b.class_id;
  });
  return out;
}

std::vector<std::string> repeat(const std::string& name, Index count) {
  return std::vector<std::string>(static_cast<size_t>(count), name);
}

}  // namespace

std::vector<CatalogEntry> catalog_3d(Index d) {
  if (d < 2) throw PreconditionError("catalog_3d: dimension must be >= 2");
  if (d % 2 != 0) return {};
  return dedup_and_require({Recipe{repeat("P6", d / 2), {}}}, 1, "3d catalog");
}

std::vector<CatalogEntry> catalog_3d_minus_1(Index d) {
  if (d < 1) throw PreconditionError("catalog_3d_minus_1: dimension must be >= 1");
  if (d == 1) return dedup_and_require({Recipe{{}, {"0"}}}, 1, "3d-1 catalog");
  std::vector<Recipe> candidates;
  if (d % 2 == 0) {
    std::vector<std::string> summands = {"P5"};
    auto hexes = repeat("P6", d / 2 - 1);
    summands.insert(summands.end(), hexes.begin(), hexes.end());
    candidates.push_back(Recipe{summands, {}});
  } else {
    auto base = repeat("P6", (d - 1) / 2);
    candidates.push_back(Recipe{base, {"0"}});
    candidates.push_back(Recipe{base, {"v1"}});
  }
  const std::size_t expected = candidates.size();
  return dedup_and_require(std::move(candidates), expected, "3d-1 catalog");
}

std::vector<CatalogEntry> catalog_3d_minus_2(Index d) {
  if (d < 1) throw PreconditionError("catalog_3d_minus_2: dimension must be >= 1");
  if (d == 1) return {};  // no 1-polytope has a single vertex
  std::vector<Recipe> candidates;
  std::size_t expected = 0;
  if (d % 2 == 0) {
    const Index k = (d - 2) / 2;  // hexagons under the double bipyramid
    auto base = repeat("P6", k);
    candidates.push_back(Recipe{base, {"0", "0"}});
    candidates.push_back(Recipe{base, {"0", "x"}});
    if (k >= 1) {
      candidates.push_back(Recipe{base, {"0", "v1"}});
      candidates.push_back(Recipe{base, {"v1", "v1"}});
      candidates.push_back(Recipe{base, {"v1", "v2"}});
      candidates.push_back(Recipe{base, {"v1", "v3"}});
      candidates.push_back(Recipe{base, {"v1", "v4"}});
      candidates.push_back(Recipe{base, {"v1", "x"}});
    }
    if (k >= 2) candidates.push_back(Recipe{base, {"v1", "v1'"}});
    if (d >= 4) {
      std::vector<std::string> p5s = {"P5", "P5"};
      auto hexes = repeat("P6", d / 2 - 2);
      p5s.insert(p5s.end(), hexes.begin(), hexes.end());
      candidates.push_back(Recipe{p5s, {}});
      std::vector<std::string> dp = {"DP4"};
      dp.insert(dp.end(), hexes.begin(), hexes.end());
      candidates.push_back(Recipe{dp, {}});
    }
    expected = d == 2 ? 2 : d == 4 ? 10 : 11;
  } else {
    std::vector<std::string> base = {"P5"};
    auto hexes = repeat("P6", (d - 3) / 2);
    base.insert(base.end(), hexes.begin(), hexes.end());
    // all apex choices; the pentagon's reflection makes w4, w5 collapse onto
    // w3, w2, which the dedup verifies rather than assumes
    for (const char* w : {"0", "w1", "w2", "w3", "w4", "w5"})
      candidates.push_back(Recipe{base, {w}});
    if (d >= 5) candidates.push_back(Recipe{base, {"v1"}});
    // The bipyramids over P5 with apex offsets 0, w1, w2, w3 are pairwise
    // inequivalent, so dimension three has four classes; exhaustive
    // enumeration over {-1,0,1}^3 confirms the count.
    expected = d == 3 ? 4 : 5;
  }
  return dedup_and_require(std::move(candidates), expected, "3d-2 catalog");
}

namespace {

void add_line(VerifyReport& report, const std::string& check, bool passed,
              const std::string& detail = "") {
  report.lines.push_back(VerifyLine{check, passed, detail});
}

}  // namespace

VerifyReport verify_catalog(Index d, Index n) {
  std::vector<CatalogEntry> entries;
  if (n == 3 * d)
    entries = catalog_3d(d);
  else if (n == 3 * d - 1)
    entries = catalog_3d_minus_1(d);
  else if (n == 3 * d - 2)
    entries = catalog_3d_minus_2(d);
  else
    throw PreconditionError("verify_catalog: n must be one of 3d, 3d-1, 3d-2");

  VerifyReport report;
  report.dim = d;
  report.vertices = n;
  report.classes = entries.size();

  const bool full_checks = n == 3 * d - 2;
  std::vector<EtaVector> admissible;
  EtaVector forbidden;
  if (full_checks) {
    admissible = admissible_eta_vectors(d, n);
    forbidden = make_eta(d, {static_cast<long>(d), static_cast<long>(d),
                             static_cast<long>(d) - 3, 0, 1});
  }

  for (const auto& entry : entries) {
    const std::string tag = entry.recipe.label();
    const LatticePolytope& p = entry.polytope;
    add_line(report, "dimension " + tag, p.dim() == d);
    add_line(report, "vertex count " + tag, p.vertex_count() == n);
    add_line(report, "smooth-fano " + tag, is_smooth_fano(p));
    add_line(report, "simplicial " + tag, is_simplicial(p));
    add_line(report, "terminal " + tag, is_terminal(p));
    add_line(report, "reflexive " + tag, is_reflexive(p));
    Int ecc = eccentricity(p);
    add_line(report, "eccentricity in {0,1,2} " + tag, ecc >= 0 && ecc <= 2,
             "ecc = " + ecc.str());
    if (full_checks) {
      bool member = true, forbidden_absent = true;
      for (int f : special_facets(p)) {
        EtaVector eta = eta_vector(p, f);
        if (std::find(admissible.begin(), admissible.end(), eta) == admissible.end())
          member = false;
        if (eta == forbidden) forbidden_absent = false;
      }
      add_line(report, "eta vectors admissible " + tag, member);
      add_line(report, "eta column (d,d,d-3,0,1) absent " + tag, forbidden_absent);
      if (vertex_sum(p).isZero()) {
        bool shallow = true;
        for (int f = 0; f < static_cast<int>(p.facets().facets.size()); ++f)
          if (eta_vector(p, f).min_level() <= -3) shallow = false;
        add_line(report, "no vertex below level -2 when centered " + tag, shallow);
      }
    }
    add_line(report, "recipe rebuilds the polytope " + tag,
             entry.recipe.build().same_vertex_set(p) &&
                 canonical_form(entry.recipe.build()) == entry.class_id);
    LemmaReport lemmas = check_structure_lemmas(p);
    std::string witness;
    for (const auto& c : lemmas.checks)
      if (c.status == LemmaStatus::fail) witness += c.id + ": " + c.witness + "; ";
    add_line(report, "structure lemmas " + tag, lemmas.all_passed(), witness);
  }
  bool distinct = true;
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].class_id == entries[j].class_id) distinct = false;
  add_line(report, "classes pairwise inequivalent", distinct);
  return report;
}

OracleResult exhaustive_box_classification(Index d) {
  if (d < 2 || d > 3)
    throw PreconditionError("exhaustive_box_classification: supported for d in {2, 3}");
  const Index n = 3 * d - 2;
  // all nonzero points of {-1,0,1}^d
  std::vector<IVec> box;
  {
    IVec x = IVec::Constant(d, -1);
    while (true) {
      if (!x.isZero()) box.push_back(x);
      Index j = d;
      bool done = true;
      while (j-- > 0) {
        if (x(j) < 1) {
          ++x(j);
          for (Index k = j + 1; k < d; ++k) x(k) = -1;
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }
  const Index m = static_cast<Index>(box.size());
  OracleResult result;
  std::map<std::string, CanonicalForm> classes;
  std::vector<Index> comb(n);
  for (Index i = 0; i < n; ++i) comb[i] = i;
  auto advance = [&]() {
    for (Index i = n; i-- > 0;) {
      if (comb[i] < m - (n - i)) {
        ++comb[i];
        for (Index j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    ++result.candidates;
    IMat pts(n, d);
    for (Index i = 0; i < n; ++i) pts.row(i) = box[comb[i]].transpose();
    auto fs = try_enumerate_facets(pts);
    if (!fs) continue;
    // reflexive with the origin interior: every facet at right-hand side 1
    bool reflexive = true;
    for (const Facet& f : fs->facets)
      if (f.rhs != 1) reflexive = false;
    if (!reflexive) continue;
    if (!fs->simplicial) continue;
    // every chosen point must be a vertex: on a simplex facet that is
    // automatic for points at level 1, so incidence somewhere suffices
    std::vector<bool> incident(n, false);
    for (const Facet& f : fs->facets)
      for (Index vi : f.vertex_indices) incident[vi] = true;
    if (std::find(incident.begin(), incident.end(), false) != incident.end())
      continue;
    // terminal: no other lattice point of the box falls inside
    bool terminal = true;
    for (Index b = 0; b < m && terminal; ++b) {
      if (std::find(comb.begin(), comb.end(), b) != comb.end()) continue;
      bool inside = true;
      for (const Facet& f : fs->facets)
        if (level_of(f, box[b]) > 1) inside = false;
      if (inside) terminal = false;
    }
    if (!terminal) continue;
    ++result.str_hits;
    LatticePolytope p(d, pts);
    CanonicalForm id = canonical_form(p);
    classes.try_emplace(id.key(), std::move(id));
  } while (advance());
  for (auto& [key, form] : classes) result.classes.push_back(std::move(form));
  std::sort(result.classes.begin(), result.classes.end());
  return result;
}

}  // namespace fano
