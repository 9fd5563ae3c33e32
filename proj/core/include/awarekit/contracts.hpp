#ifndef AWAREKIT_CONTRACTS_HPP
#define AWAREKIT_CONTRACTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "awarekit/formula.hpp"
#include "awarekit/model.hpp"
#include "awarekit/semantics.hpp"
#include "awarekit/utility.hpp"

namespace awarekit {

// (object for agent 1, object for agent 2)
using Pair = std::pair<std::string, std::string>;

struct Contract {
  std::vector<Formula> clauses;
  std::vector<Pair> alloc;
};

// Ordered pairs of distinct objects over End1 u End2, lexicographic by name.
// Throws Error("BadEndowment") when the endowments overlap or one is empty.
std::vector<Pair> endowment_pairs(const std::vector<std::string>& end1,
                                  const std::vector<std::string>& end2);

// Throws Error("BadContract") on empty or misaligned clause lists, non-sentence
// clauses, equal components, or objects outside the endowments.
void check_contract_shape(const Model& m, const Contract& k);

struct ContractValidation {
  bool ok = true;
  // 1: the disjunction fails somewhere; 2: two clauses hold together.
  int failed_condition = 0;
  std::optional<StateId> state;
  std::size_t clause_a = 0;
  std::size_t clause_b = 0;
  // Condition 1 held only because no state's language contains the disjunction.
  bool vacuous = false;
};

ContractValidation validate_contract(Evaluator& ev, const Contract& k);

// Allocation of the unique true clause at w. Throws Error("NoTrueClause") or
// Error("MultipleTrueClauses").
Pair outcome(Evaluator& ev, const Contract& k, StateId w);

bool is_articulable(const Model& m, const Contract& k, StateId w_star);

// Least endowment pair that weakly improves both agents at w with one strict
// improvement, or nullopt when the contract is w-efficient.
std::optional<Pair> is_efficient_at(Evaluator& ev, const Contract& k, StateId w);

struct AcceptOptions {
  // Compare against the outcome at w rather than at each considered state.
  bool at_omega = false;
};

// Least state of agent i's cell at w where the contract is worse than the
// best endowed object, or nullopt when acceptable.
std::optional<StateId> is_acceptable_at(Evaluator& ev, const Contract& k, StateId w, int agent,
                                        const AcceptOptions& options = {});

enum class Mode { kFull, kBc };

struct CellPartition {
  std::vector<std::vector<StateId>> cells;  // each sorted, ordered by least state
  std::vector<Formula> basis;
  std::vector<std::vector<bool>> rows;  // basis truth per cell
  std::size_t cell_of(StateId w) const;
};

// Agreement classes of the scope on the atoms P(d) (and C(d) in full mode)
// over the symbols of slice; predicates before concepts, declared orders.
CellPartition basis_partition_slice(Evaluator& ev, const LanguageSlice& slice,
                                    const std::vector<StateId>& scope, Mode mode);

// As above with slice = A_1(w*) and scope = K_1(w*) u K_2(w*). Throws
// Error("AwarenessMismatch") when A_1(w*) != A_2(w*).
CellPartition basis_partition(Evaluator& ev, StateId w_star, Mode mode);

std::vector<StateId> union_of_cells(const Model& m, StateId w_star);

struct SynthesisResult {
  Contract contract;
  CellPartition partition;
  // States that received a cell: K_1(w*) u K_2(w*) plus the states those
  // agents consider possible from there whose language covers the slice.
  std::vector<StateId> scope;
  std::vector<Pair> cell_outcome;
  // Per cell, the state whose utilities stand for the cell, per agent.
  std::vector<std::pair<StateId, StateId>> representative;
};

// Throws AwarenessMismatch, AssumptionViolated (A2 in full mode, A3 in bc
// mode) and SameUViolated.
SynthesisResult synthesize(Evaluator& ev, StateId w_star, Mode mode);

struct Theorem1bReport {
  bool ok = true;
  std::optional<StateId> state;
  std::string check;  // "efficiency", "acceptability(1)", "acceptability(2)"
  std::string detail;
};

// Throws Error("PreconditionFails") when some A_i is not constant on W.
Theorem1bReport verify_theorem1b(Evaluator& ev, StateId w_star, const Contract& k);

// {"clauses": [...], "alloc": [[d1, d2], ...]}
Contract contract_from_json(std::string_view text, const Signature& sig);
std::string contract_to_json(const Contract& k);

}  // namespace awarekit

#endif  // AWAREKIT_CONTRACTS_HPP
