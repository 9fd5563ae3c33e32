#include "awarekit/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "awarekit/error.hpp"

namespace awarekit {

// ---------------------------------------------------------------------------
// Sentence enumeration

namespace {

struct GenKey {
  std::size_t size;
  int obj_depth;
  int pred_depth;
  int modal_left;
  int quant_left;
  int pred_quant_left;
  auto operator<=>(const GenKey&) const = default;
};

class SentenceGen {
 public:
  SentenceGen(const Signature& sig, const LanguageSlice& slice, const EnumerationBudget& budget)
      : sig_(sig), slice_(slice), budget_(budget) {}

  const std::vector<Formula>& get(const GenKey& k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    std::vector<Formula> out = build(k);
    return memo_.emplace(k, std::move(out)).first->second;
  }

 private:
  std::vector<Formula> build(const GenKey& k) {
    std::vector<Formula> out;
    if (k.size == 0) return out;
    if (k.size == 1) {
      std::vector<PredHead> heads;
      for (const auto& p : sig_.predicates) {
        if (slice_.predicates.contains(p)) heads.push_back(PredHead::predicate(p));
      }
      for (const auto& c : sig_.concepts) {
        if (slice_.concepts.contains(c)) heads.push_back(PredHead::concept_symbol(c));
      }
      for (int j = 1; j <= k.pred_depth; ++j) heads.push_back(PredHead::variable("Y" + std::to_string(j)));
      std::vector<ObjTerm> args;
      for (const auto& d : sig_.objects) args.push_back(ObjTerm::standard_name(d));
      for (int j = 1; j <= k.obj_depth; ++j) args.push_back(ObjTerm::variable("x" + std::to_string(j)));
      for (const auto& h : heads) {
        for (const auto& a : args) out.push_back(Formula::atom(h, a));
      }
      return out;
    }
    GenKey sub = k;
    sub.size = k.size - 1;
    for (const auto& f : get(sub)) out.push_back(Formula::negation(f));

    for (std::size_t ls = 1; ls + 1 < k.size; ++ls) {
      std::size_t rs = k.size - 1 - ls;
      if (ls > rs) break;
      GenKey lk = k;
      lk.size = ls;
      GenKey rk = k;
      rk.size = rs;
      const auto& left = get(lk);
      const auto& right = get(rk);
      for (std::size_t a = 0; a < left.size(); ++a) {
        for (std::size_t b = ls == rs ? a : 0; b < right.size(); ++b) {
          out.push_back(Formula::conjunction(left[a], right[b]));
        }
      }
    }

    if (k.quant_left > 0) {
      GenKey bk = sub;
      bk.obj_depth = k.obj_depth + 1;
      bk.quant_left = k.quant_left - 1;
      std::string x = "x" + std::to_string(bk.obj_depth);
      for (const auto& f : get(bk)) {
        if (occurs_free_obj(f, x)) out.push_back(Formula::forall_obj(x, f));
      }
      if (k.pred_quant_left > 0) {
        GenKey pk = sub;
        pk.pred_depth = k.pred_depth + 1;
        pk.quant_left = k.quant_left - 1;
        pk.pred_quant_left = k.pred_quant_left - 1;
        std::string y = "Y" + std::to_string(pk.pred_depth);
        for (const auto& f : get(pk)) {
          if (occurs_free_pred(f, y)) out.push_back(Formula::forall_pred(y, f));
        }
      }
    }

    if (k.modal_left > 0) {
      GenKey mk = sub;
      mk.modal_left = k.modal_left - 1;
      const auto& bodies = get(mk);
      for (int i = 1; i <= budget_.agents; ++i) {
        for (const auto& f : bodies) out.push_back(Formula::aware(i, f));
        for (const auto& f : bodies) out.push_back(Formula::knows(i, f));
      }
    }
    return out;
  }

  const Signature& sig_;
  const LanguageSlice& slice_;
  const EnumerationBudget& budget_;
  std::map<GenKey, std::vector<Formula>> memo_;
};

}  // namespace

std::vector<Formula> enumerate_sentences(const Signature& sig, const LanguageSlice& slice,
                                         const EnumerationBudget& budget) {
  SentenceGen gen(sig, slice, budget);
  std::vector<Formula> out;
  for (std::size_t s = 1; s <= budget.max_size; ++s) {
    GenKey k{s, 0, 0, budget.max_modal_depth, budget.max_quantifier_nesting,
             budget.max_pred_quantifier_nesting};
    const auto& level = gen.get(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::optional<Formula> distinguish_among(Evaluator& ev, StateId w1, StateId w2,
                                         const std::vector<Formula>& sentences) {
  if (w1 == w2) return std::nullopt;
  for (const auto& f : sentences) {
    try {
      if (ev.sat(w1, f) != ev.sat(w2, f)) return f;
    } catch (const Error&) {
      // Over budget for the evaluator; not part of the search.
    }
  }
  return std::nullopt;
}

std::optional<Formula> distinguish(Evaluator& ev, StateId w1, StateId w2,
                                   const LanguageSlice& slice, const EnumerationBudget& budget) {
  if (w1 == w2) return std::nullopt;
  EnumerationBudget b = budget;
  b.agents = ev.model().sig.agents;
  return distinguish_among(ev, w1, w2, enumerate_sentences(ev.model().sig, slice, b));
}

// ---------------------------------------------------------------------------
// Exhaustive contract search

bool pareto_dominates(const Rational& v1, const Rational& v2, const Rational& u1, const Rational& u2) {
  return v1 >= u1 && v2 >= u2 && (v1 > u1 || v2 > u2);
}

SearchResult exhaustive_contract_search(const Model& m, StateId w_star, const CellPartition& part) {
  const Economy& e = m.require_economy();
  const std::size_t nc = part.cells.size();
  if (nc == 0 || nc > 6) throw Error("SearchCapExceeded", std::to_string(nc) + " cells (cap 6)");
  if (m.sig.objects.size() > 4) {
    throw Error("SearchCapExceeded", std::to_string(m.sig.objects.size()) + " objects (cap 4)");
  }
  SearchResult res;
  res.pairs = endowment_pairs(e.endow1, e.endow2);
  const std::size_t np = res.pairs.size();

  // Precompute, per agent and considered state, the cell and the outside option.
  struct Check {
    int agent;
    StateId v;
    std::size_t cell;
    Rational best;
  };
  std::vector<Check> checks;
  for (int i = 1; i <= 2; ++i) {
    for (StateId v : m.cell(i, w_star)) {
      Rational best = m.utility(i, v, e.endowment(i).front());
      for (const auto& d : e.endowment(i)) best = std::max(best, m.utility(i, v, d));
      checks.push_back({i, v, part.cell_of(v), best});
    }
  }
  const std::size_t star_cell = part.cell_of(w_star);

  std::vector<std::size_t> assign(nc, 0);
  while (true) {
    ++res.assignments;
    bool ok = true;
    for (const auto& c : checks) {
      const Pair& p = res.pairs[assign[c.cell]];
      if (m.utility(c.agent, c.v, c.agent == 1 ? p.first : p.second) < c.best) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++res.acceptable;
      const Pair& p = res.pairs[assign[star_cell]];
      SearchEntry entry{assign, m.utility(1, w_star, p.first), m.utility(2, w_star, p.second), true};
      for (const auto& q : res.pairs) {
        if (pareto_dominates(m.utility(1, w_star, q.first), m.utility(2, w_star, q.second), entry.u1,
                             entry.u2)) {
          entry.efficient_at_star = false;
          break;
        }
      }
      if (entry.efficient_at_star) {
        ++res.acceptable_and_efficient;
        if (!res.first_acceptable_and_efficient) res.first_acceptable_and_efficient = entry;
      }
      if (!res.best_welfare || entry.u1 + entry.u2 > res.best_welfare->u1 + res.best_welfare->u2) {
        res.best_welfare = entry;
      }
      bool dominated = false;
      for (const auto& f : res.frontier) {
        if ((f.u1 == entry.u1 && f.u2 == entry.u2) ||
            pareto_dominates(f.u1, f.u2, entry.u1, entry.u2)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        std::erase_if(res.frontier, [&](const SearchEntry& f) {
          return pareto_dominates(entry.u1, entry.u2, f.u1, f.u2);
        });
        res.frontier.push_back(entry);
      }
    }
    std::size_t pos = 0;
    while (pos < nc && ++assign[pos] == np) assign[pos++] = 0;
    if (pos == nc) break;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

std::string pred_name(std::size_t j) {
  static const char* names[] = {"P", "Q", "R", "S", "T", "U"};
  return j < 6 ? names[j] : "P" + std::to_string(j);
}

template <typename Rng>
bool coin(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

template <typename Rng>
std::set<std::string> random_subset(Rng& rng, const std::set<std::string>& from, double keep) {
  std::set<std::string> out;
  for (const auto& s : from) {
    if (coin(rng, keep)) out.insert(s);
  }
  return out;
}

}  // namespace

Model random_model(std::uint64_t seed, const ModelDims& dims) {
  std::mt19937_64 rng(seed);
  Model m;
  m.sig.agents = dims.agents;
  for (std::size_t k = 0; k < dims.objects; ++k) m.sig.objects.push_back("d" + std::to_string(k + 1));
  for (std::size_t k = 0; k < dims.predicates; ++k) m.sig.predicates.push_back(pred_name(k));
  for (std::size_t k = 0; k < dims.concepts; ++k) m.sig.concepts.push_back("C" + std::to_string(k + 1));
  const std::size_t n = std::max<std::size_t>(dims.states, 1);
  for (std::size_t w = 0; w < n; ++w) m.states.push_back("w" + std::to_string(w + 1));

  m.language.resize(n);
  m.extensions.resize(n);
  m.concept_defs.resize(n);
  for (StateId w = 0; w < n; ++w) {
    for (const auto& p : m.sig.predicates) {
      if (!coin(rng, dims.drop_language)) m.language[w].predicates.insert(p);
    }
    for (const auto& p : m.language[w].predicates) {
      std::set<std::string> ext;
      for (const auto& d : m.sig.objects) {
        if (coin(rng, 0.5)) ext.insert(d);
      }
      m.extensions[w][p] = ext;
    }
    std::vector<std::string> preds(m.language[w].predicates.begin(), m.language[w].predicates.end());
    for (const auto& c : m.sig.concepts) {
      if (preds.empty() || coin(rng, dims.drop_language)) continue;
      std::vector<std::string> support;
      while (support.empty()) {
        for (const auto& p : preds) {
          if (coin(rng, 0.5)) support.push_back(p);
        }
      }
      std::vector<bool> table(std::size_t{1} << support.size());
      for (std::size_t r = 0; r < table.size(); ++r) table[r] = coin(rng, 0.5);
      m.language[w].concepts.insert(c);
      m.concept_defs[w].emplace(c, BooleanConcept::from_table(support, table));
    }
  }

  const auto na = static_cast<std::size_t>(dims.agents);
  m.partitions.assign(na, {});
  for (std::size_t i = 0; i < na; ++i) {
    std::uniform_int_distribution<std::size_t> label(0, n - 1);
    std::map<std::size_t, std::vector<StateId>> by_label;
    for (StateId w = 0; w < n; ++w) by_label[label(rng)].push_back(w);
    for (auto& [l, cell] : by_label) m.partitions[i].push_back(cell);
    std::sort(m.partitions[i].begin(), m.partitions[i].end());
  }
  auto cell_containing = [&](std::size_t i, StateId w) -> const std::vector<StateId>& {
    for (const auto& c : m.partitions[i]) {
      if (std::find(c.begin(), c.end(), w) != c.end()) return c;
    }
    throw Error("Internal", "state outside every cell");
  };
  auto common_language = [&](const std::vector<StateId>& states) {
    LanguageSlice s = m.language[states.front()];
    for (StateId w : states) s = s.intersect(m.language[w]);
    return s;
  };
  auto draw = [&](const LanguageSlice& within) {
    LanguageSlice a;
    a.predicates = random_subset(rng, within.predicates, 0.7);
    a.concepts = random_subset(rng, within.concepts, 0.7);
    return a;
  };

  m.awareness.assign(na, std::vector<LanguageSlice>(n));
  for (std::size_t i = 0; i < na; ++i) {
    for (const auto& c : m.partitions[i]) {
      LanguageSlice a = draw(common_language(c));
      for (StateId w : c) m.awareness[i][w] = a;
    }
  }

  const StateId ws = std::min(dims.w_star, n - 1);
  if (na >= 2 && (dims.constant_awareness_on_w || dims.common_awareness_at_star)) {
    // Cells that receive the shared awareness set, per agent.
    std::vector<std::set<std::size_t>> chosen(na);
    std::vector<StateId> wset;
    for (std::size_t i = 0; i < 2; ++i) {
      for (StateId v : cell_containing(i, ws)) wset.push_back(v);
    }
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t c = 0; c < m.partitions[i].size(); ++c) {
        const auto& cell = m.partitions[i][c];
        bool meets_w = std::any_of(cell.begin(), cell.end(), [&](StateId v) {
          return std::find(wset.begin(), wset.end(), v) != wset.end();
        });
        bool contains_star = std::find(cell.begin(), cell.end(), ws) != cell.end();
        if (contains_star || (dims.constant_awareness_on_w && meets_w)) chosen[i].insert(c);
      }
    }
    std::vector<StateId> covered;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t c : chosen[i]) {
        for (StateId v : m.partitions[i][c]) covered.push_back(v);
      }
    }
    LanguageSlice shared = draw(common_language(covered));
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t c : chosen[i]) {
        for (StateId v : m.partitions[i][c]) m.awareness[i][v] = shared;
      }
    }
  }

  if (dims.with_economy && dims.agents == 2 && dims.objects >= 2) {
    Economy e;
    e.utilities.assign(2, std::vector<std::vector<Rational>>(n, std::vector<Rational>(dims.objects)));
    e.endow1 = {m.sig.objects[0]};
    e.endow2 = {m.sig.objects[1]};
    m.economy = std::move(e);
  }
  m.finalize(true);
  return m;
}

void random_utilities(Model& m, std::uint64_t seed, Assumption assumption) {
  if (m.sig.agents != 2 || m.sig.objects.size() < 2) {
    throw Error("BadEconomy", "random utilities need two agents and two objects");
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = m.num_states();
  Economy e;
  std::vector<std::string> objs = m.sig.objects;
  std::shuffle(objs.begin(), objs.end(), rng);
  std::uniform_int_distribution<std::size_t> cut(1, objs.size() - 1);
  std::size_t c = cut(rng);
  e.endow1.assign(objs.begin(), objs.begin() + static_cast<std::ptrdiff_t>(c));
  e.endow2.assign(objs.begin() + static_cast<std::ptrdiff_t>(c), objs.end());
  std::sort(e.endow1.begin(), e.endow1.end());
  std::sort(e.endow2.begin(), e.endow2.end());

  static const Rational values[] = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2),
                                    Rational(2), Rational(3)};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(values) - 1);
  e.utilities.assign(2, std::vector<std::vector<Rational>>(n, std::vector<Rational>(m.sig.objects.size())));
  for (int i = 1; i <= 2; ++i) {
    std::map<Profile, Rational> table;
    for (StateId w = 0; w < n; ++w) {
      for (std::size_t k = 0; k < m.sig.objects.size(); ++k) {
        const std::string& d = m.sig.objects[k];
        Profile key;
        switch (assumption) {
          case Assumption::kA1:
            key.props = prop_profile(m, w, d);
            break;
          case Assumption::kA1Strong:
            key.props = prop_profile(m, w, d);
            key.cons = con_profile(m, w, d);
            break;
          case Assumption::kA2:
            key = aware_profile(m, i, w, d);
            break;
          case Assumption::kA3:
            key.props = aware_profile(m, i, w, d).props;
            break;
        }
        auto it = table.find(key);
        if (it == table.end()) it = table.emplace(key, values[pick(rng)]).first;
        e.utilities[i - 1][w][k] = it->second;
      }
    }
  }
  m.economy = std::move(e);
  m.finalize(false);
}

}  // namespace awarekit
