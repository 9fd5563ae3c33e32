#include "awarekit/contracts.hpp"

#include <algorithm>
#include <map>

#include "awarekit/error.hpp"
#include "awarekit/parser.hpp"
#include "json.hpp"

namespace awarekit {

std::vector<Pair> endowment_pairs(const std::vector<std::string>& end1,
                                  const std::vector<std::string>& end2) {
  if (end1.empty() || end2.empty()) throw Error("BadEndowment", "endowments must be nonempty");
  std::vector<std::string> all;
  for (const auto& d : end1) {
    if (std::find(end2.begin(), end2.end(), d) != end2.end()) {
      throw Error("BadEndowment", "endowments overlap on " + d);
    }
    all.push_back(d);
  }
  all.insert(all.end(), end2.begin(), end2.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Pair> out;
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a != b) out.emplace_back(a, b);
    }
  }
  return out;
}

void check_contract_shape(const Model& m, const Contract& k) {
  if (k.clauses.empty()) throw Error("BadContract", "a contract needs at least one clause");
  if (k.clauses.size() != k.alloc.size()) throw Error("BadContract", "clauses and alloc differ in length");
  const Economy& e = m.require_economy();
  auto endowed = [&](const std::string& d) {
    return std::binary_search(e.endow1.begin(), e.endow1.end(), d) ||
           std::binary_search(e.endow2.begin(), e.endow2.end(), d);
  };
  for (std::size_t j = 0; j < k.clauses.size(); ++j) {
    if (!is_sentence(k.clauses[j])) {
      throw Error("BadContract", "clause " + std::to_string(j + 1) + " is not a sentence");
    }
    const auto& [a, b] = k.alloc[j];
    if (a == b) throw Error("BadContract", "allocation " + std::to_string(j + 1) + " repeats " + a);
    if (!endowed(a) || !endowed(b)) {
      throw Error("BadContract", "allocation " + std::to_string(j + 1) + " uses an unendowed object");
    }
  }
}

ContractValidation validate_contract(Evaluator& ev, const Contract& k) {
  check_contract_shape(ev.model(), k);
  ContractValidation r;
  Validity v1 = ev.valid_in_model(Formula::disjunction_of(k.clauses));
  r.vacuous = v1.vacuous;
  if (!v1.valid) {
    r.ok = false;
    r.failed_condition = 1;
    r.state = v1.counter_state;
    return r;
  }
  for (std::size_t a = 0; a < k.clauses.size(); ++a) {
    for (std::size_t b = a + 1; b < k.clauses.size(); ++b) {
      Validity v2 = ev.valid_in_model(
          Formula::negation(Formula::conjunction(k.clauses[a], k.clauses[b])));
      if (!v2.valid) {
        r.ok = false;
        r.failed_condition = 2;
        r.state = v2.counter_state;
        r.clause_a = a;
        r.clause_b = b;
        return r;
      }
    }
  }
  return r;
}

Pair outcome(Evaluator& ev, const Contract& k, StateId w) {
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < k.clauses.size(); ++j) {
    if (ev.sat(w, k.clauses[j])) {
      if (found) {
        throw Error("MultipleTrueClauses", "(" + ev.model().states[w] + ") clauses " +
                                               std::to_string(*found + 1) + " and " +
                                               std::to_string(j + 1));
      }
      found = j;
    }
  }
  if (!found) throw Error("NoTrueClause", "(" + ev.model().states[w] + ")");
  return k.alloc[*found];
}

bool is_articulable(const Model& m, const Contract& k, StateId w_star) {
  LanguageSlice common = m.aware(1, w_star).intersect(m.aware(2, w_star));
  for (const auto& c : k.clauses) {
    if (!in_language(c, common)) return false;
  }
  return true;
}

std::optional<Pair> is_efficient_at(Evaluator& ev, const Contract& k, StateId w) {
  const Model& m = ev.model();
  const Economy& e = m.require_economy();
  Pair cur = outcome(ev, k, w);
  const Rational u1 = m.utility(1, w, cur.first);
  const Rational u2 = m.utility(2, w, cur.second);
  for (const auto& p : endowment_pairs(e.endow1, e.endow2)) {
    const Rational v1 = m.utility(1, w, p.first);
    const Rational v2 = m.utility(2, w, p.second);
    if (v1 >= u1 && v2 >= u2 && (v1 > u1 || v2 > u2)) return p;
  }
  return std::nullopt;
}

std::optional<StateId> is_acceptable_at(Evaluator& ev, const Contract& k, StateId w, int agent,
                                        const AcceptOptions& options) {
  const Model& m = ev.model();
  const Economy& e = m.require_economy();
  std::optional<Pair> at_w;
  if (options.at_omega) at_w = outcome(ev, k, w);
  for (StateId v : m.cell(agent, w)) {
    Pair p = options.at_omega ? *at_w : outcome(ev, k, v);
    const std::string& mine = agent == 1 ? p.first : p.second;
    Rational best = m.utility(agent, v, e.endowment(agent).front());
    for (const auto& d : e.endowment(agent)) best = std::max(best, m.utility(agent, v, d));
    if (m.utility(agent, v, mine) < best) return v;
  }
  return std::nullopt;
}

std::size_t CellPartition::cell_of(StateId w) const {
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (std::binary_search(cells[c].begin(), cells[c].end(), w)) return c;
  }
  throw Error("OutsideScope", "state " + std::to_string(w) + " is in no cell");
}

CellPartition basis_partition_slice(Evaluator& ev, const LanguageSlice& slice,
                                    const std::vector<StateId>& scope, Mode mode) {
  const Model& m = ev.model();
  CellPartition out;
  for (const auto& p : m.sig.predicates) {
    if (!slice.predicates.contains(p)) continue;
    for (const auto& d : m.sig.objects) {
      out.basis.push_back(Formula::atom(PredHead::predicate(p), ObjTerm::standard_name(d)));
    }
  }
  if (mode == Mode::kFull) {
    for (const auto& c : m.sig.concepts) {
      if (!slice.concepts.contains(c)) continue;
      for (const auto& d : m.sig.objects) {
        out.basis.push_back(Formula::atom(PredHead::concept_symbol(c), ObjTerm::standard_name(d)));
      }
    }
  }
  std::vector<StateId> sorted = scope;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<std::vector<bool>, std::size_t> index;
  for (StateId w : sorted) {
    std::vector<bool> row;
    row.reserve(out.basis.size());
    for (const auto& b : out.basis) row.push_back(ev.sat(w, b));
    auto [it, inserted] = index.emplace(row, out.cells.size());
    if (inserted) {
      out.cells.push_back({});
      out.rows.push_back(row);
    }
    out.cells[it->second].push_back(w);
  }
  return out;
}

std::vector<StateId> union_of_cells(const Model& m, StateId w_star) {
  std::vector<StateId> w = m.cell(1, w_star);
  for (StateId v : m.cell(2, w_star)) w.push_back(v);
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

namespace {

void require_common_awareness(const Model& m, StateId w_star) {
  if (!(m.aware(1, w_star) == m.aware(2, w_star))) {
    throw Error("AwarenessMismatch", "(" + m.states[w_star] + ") agents 1 and 2 are aware of different symbols");
  }
}

LanguageSlice mode_slice(const Model& m, StateId w_star, Mode mode) {
  LanguageSlice s = m.aware(1, w_star);
  if (mode == Mode::kBc) s.concepts.clear();
  return s;
}

std::string describe(const Model& m, const AssumptionWitness& w) {
  return "agent " + std::to_string(w.agent) + ", " + m.states[w.w1] + ", " + w.d1 + ", " +
         m.states[w.w2] + ", " + w.d2 + ", " + to_string(w.u1) + " vs " + to_string(w.u2);
}

}  // namespace

CellPartition basis_partition(Evaluator& ev, StateId w_star, Mode mode) {
  const Model& m = ev.model();
  require_common_awareness(m, w_star);
  return basis_partition_slice(ev, mode_slice(m, w_star, mode), union_of_cells(m, w_star), mode);
}

SynthesisResult synthesize(Evaluator& ev, StateId w_star, Mode mode) {
  const Model& m = ev.model();
  const Economy& e = m.require_economy();
  require_common_awareness(m, w_star);
  Assumption needed = mode == Mode::kFull ? Assumption::kA2 : Assumption::kA3;
  if (auto wit = check_assumption(m, needed)) {
    throw Error("AssumptionViolated", std::string(assumption_name(needed)) + " (" + describe(m, *wit) + ")");
  }

  const LanguageSlice slice = mode_slice(m, w_star, mode);
  SynthesisResult res;
  std::vector<StateId> base = union_of_cells(m, w_star);
  res.scope = base;
  for (StateId v : base) {
    for (int i = 1; i <= 2; ++i) {
      for (StateId u : m.cell(i, v)) {
        if (slice.subset_of(m.language[u])) res.scope.push_back(u);
      }
    }
  }
  std::sort(res.scope.begin(), res.scope.end());
  res.scope.erase(std::unique(res.scope.begin(), res.scope.end()), res.scope.end());
  res.partition = basis_partition_slice(ev, slice, res.scope, mode);
  const auto& cells = res.partition.cells;

  auto pick = [&](int i, const std::vector<StateId>& cell) {
    const auto& ki = m.cell(i, w_star);
    for (StateId s : cell) {
      if (std::binary_search(ki.begin(), ki.end(), s)) return s;
    }
    for (StateId s : cell) {
      if (m.aware(i, s) == m.aware(i, w_star)) return s;
    }
    return cell.front();
  };

  for (const auto& cell : cells) {
    for (int i = 1; i <= 2; ++i) {
      const auto& ki = m.cell(i, w_star);
      std::optional<StateId> first;
      for (StateId s : cell) {
        if (!std::binary_search(ki.begin(), ki.end(), s)) continue;
        if (!first) {
          first = s;
          continue;
        }
        for (const auto& d : m.sig.objects) {
          if (m.utility(i, s, d) != m.utility(i, *first, d)) {
            throw Error("SameUViolated", "agent " + std::to_string(i) + " values " + d +
                                             " differently at " + m.states[*first] + " and " +
                                             m.states[s] + " within one cell");
          }
        }
      }
    }
  }

  const std::vector<Pair> pairs = endowment_pairs(e.endow1, e.endow2);
  for (const auto& cell : cells) {
    StateId r1 = pick(1, cell);
    StateId r2 = pick(2, cell);
    res.representative.emplace_back(r1, r2);
    Rational best1 = m.utility(1, r1, e.endow1.front());
    for (const auto& d : e.endow1) best1 = std::max(best1, m.utility(1, r1, d));
    Rational best2 = m.utility(2, r2, e.endow2.front());
    for (const auto& d : e.endow2) best2 = std::max(best2, m.utility(2, r2, d));
    std::optional<std::size_t> chosen;
    Rational chosen_welfare;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const Rational u1 = m.utility(1, r1, pairs[j].first);
      const Rational u2 = m.utility(2, r2, pairs[j].second);
      if (u1 < best1 || u2 < best2) continue;
      if (!chosen || u1 + u2 > chosen_welfare) {
        chosen = j;
        chosen_welfare = u1 + u2;
      }
    }
    // The best endowed pair is always feasible.
    res.cell_outcome.push_back(pairs[*chosen]);
  }

  const auto& basis = res.partition.basis;
  const auto& rows = res.partition.rows;
  std::vector<Formula> lambdas;
  if (cells.size() == 1) {
    if (!basis.empty()) {
      lambdas.push_back(Formula::disjunction(basis[0], Formula::negation(basis[0])));
    } else {
      Formula y = Formula::atom(PredHead::variable("Y"), ObjTerm::standard_name(m.sig.objects.front()));
      lambdas.push_back(Formula::forall_pred(
          "Y", Formula::negation(Formula::conjunction(y, Formula::negation(y)))));
    }
  } else {
    std::vector<Formula> psi;
    for (std::size_t a = 0; a < cells.size(); ++a) {
      std::vector<std::size_t> used;
      std::vector<Formula> lits;
      for (std::size_t b = 0; b < cells.size(); ++b) {
        if (b == a) continue;
        std::size_t j = 0;
        while (rows[a][j] == rows[b][j]) ++j;
        if (std::find(used.begin(), used.end(), j) != used.end()) continue;
        used.push_back(j);
        lits.push_back(rows[a][j] ? basis[j] : Formula::negation(basis[j]));
      }
      psi.push_back(Formula::conjunction_of(lits));
    }
    for (std::size_t a = 0; a < cells.size(); ++a) {
      std::vector<Formula> parts;
      for (std::size_t b = 0; b < cells.size(); ++b) {
        if (b != a) parts.push_back(Formula::negation(psi[b]));
      }
      parts.push_back(psi[a]);
      lambdas.push_back(Formula::conjunction_of(parts));
    }
  }
  std::vector<Formula> negated;
  for (const auto& l : lambdas) negated.push_back(Formula::negation(l));
  res.contract.clauses = lambdas;
  res.contract.alloc = res.cell_outcome;
  res.contract.clauses.push_back(Formula::conjunction_of(negated));
  res.contract.alloc.push_back(pairs.front());
  return res;
}

Theorem1bReport verify_theorem1b(Evaluator& ev, StateId w_star, const Contract& k) {
  const Model& m = ev.model();
  const std::vector<StateId> scope = union_of_cells(m, w_star);
  for (int i = 1; i <= 2; ++i) {
    for (StateId v : scope) {
      if (!(m.aware(i, v) == m.aware(i, w_star))) {
        throw Error("PreconditionFails", "A_" + std::to_string(i) + " differs between " +
                                             m.states[w_star] + " and " + m.states[v]);
      }
    }
  }
  Theorem1bReport r;
  for (StateId v : scope) {
    try {
      if (auto dom = is_efficient_at(ev, k, v)) {
        r.ok = false;
        r.state = v;
        r.check = "efficiency";
        r.detail = "dominated by (" + dom->first + ", " + dom->second + ")";
        return r;
      }
      for (int i = 1; i <= 2; ++i) {
        if (auto bad = is_acceptable_at(ev, k, v, i)) {
          r.ok = false;
          r.state = v;
          r.check = "acceptability(" + std::to_string(i) + ")";
          r.detail = "fails at " + m.states[*bad];
          return r;
        }
      }
    } catch (const Error& err) {
      r.ok = false;
      r.state = v;
      r.check = "outcome";
      r.detail = err.what();
      return r;
    }
  }
  return r;
}

Contract contract_from_json(std::string_view text, const Signature& sig) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("BadContractFile", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("clauses") || !j.contains("alloc") || j.size() != 2) {
    throw Error("BadContractFile", "expected exactly the keys clauses and alloc");
  }
  Contract k;
  for (const auto& c : j["clauses"]) {
    if (!c.is_string()) throw Error("BadContractFile", "clauses must be strings");
    k.clauses.push_back(parse(c.get<std::string>(), sig));
  }
  for (const auto& p : j["alloc"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw Error("BadContractFile", "alloc entries must be [object, object]");
    }
    k.alloc.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return k;
}

std::string contract_to_json(const Contract& k) {
  using nlohmann::json;
  json j;
  j["clauses"] = json::array();
  for (const auto& c : k.clauses) j["clauses"].push_back(render_pretty(c));
  j["alloc"] = json::array();
  for (const auto& [a, b] : k.alloc) j["alloc"].push_back(json::array({a, b}));
  return j.dump(2) + "\n";
}

}  // namespace awarekit
